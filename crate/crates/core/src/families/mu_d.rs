//! Quivers mutation equivalent to a type D Dynkin quiver, recognized by the
//! four local shapes they can take.
//!
//! * Type I: two leaves `a`, `b` on a common vertex `c`; the rest is type A
//!   with `c` connecting.
//! * Type II: triangles `c -> d -> a -> c` and `c -> d -> b -> c` sharing
//!   the arrow `c -> d`, with `a`, `b` of degree 2; removing `a`, `b` and
//!   `c -> d` leaves two type A pieces in which `c` and `d` are connecting.
//! * Type III: a chordless oriented square `a -> d -> b -> c -> a` with `a`,
//!   `b` of degree 2; removing them leaves type A pieces around `c` and `d`.
//! * Type IV: a chordless oriented cycle (the central cycle) whose vertices
//!   have no other neighbours than spikes `c` with `b -> c -> a` over a
//!   cycle arrow `a -> b`; every component of the rest is type A and holds
//!   exactly one spike, which is connecting there.
//!
//! Shapes are tried in the order IV, III, II, I and the first match wins.
//! Quivers with fewer than four vertices are never classified.

use std::collections::BTreeSet;

use serde::Serialize;

use super::cycles::{enumerate_simple_cycles, DEFAULT_CYCLE_BUDGET};
use super::mu_a::{connecting_vertices, is_mu_a, mu_a_decompose};
use super::FamilyError;
use crate::qn::{QnCandidate, QnDecomposition};
use crate::quiver::{Arrow, Quiver, VertexId};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum MuDType {
    #[serde(rename = "I")]
    I,
    #[serde(rename = "II")]
    II,
    #[serde(rename = "III")]
    III,
    #[serde(rename = "IV")]
    IV,
}

/// A spike `spike` over the central arrow `from -> to`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Spike {
    pub from: VertexId,
    pub to: VertexId,
    pub spike: VertexId,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "type")]
pub enum MuDClassification {
    #[serde(rename = "I")]
    TypeI { a: VertexId, b: VertexId, c: VertexId, remainder: Vec<VertexId> },
    #[serde(rename = "II")]
    TypeII { a: VertexId, b: VertexId, c: VertexId, d: VertexId, q1: Vec<VertexId>, q2: Vec<VertexId> },
    #[serde(rename = "III")]
    TypeIII { a: VertexId, b: VertexId, c: VertexId, d: VertexId, q1: Vec<VertexId>, q2: Vec<VertexId> },
    #[serde(rename = "IV")]
    TypeIV { central: Vec<VertexId>, spikes: Vec<Spike>, remainders: Vec<Vec<VertexId>> },
}

impl MuDClassification {
    pub fn kind(&self) -> MuDType {
        match self {
            MuDClassification::TypeI { .. } => MuDType::I,
            MuDClassification::TypeII { .. } => MuDType::II,
            MuDClassification::TypeIII { .. } => MuDType::III,
            MuDClassification::TypeIV { .. } => MuDType::IV,
        }
    }
}

/// `q` without the vertices in `drop` and without the arrows in `cut`.
fn remove(q: &Quiver, drop: &[usize], cut: &[(usize, usize)]) -> Quiver {
    let keep: Vec<VertexId> =
        (0..q.len()).filter(|i| !drop.contains(i)).map(|i| q.vertices()[i].clone()).collect();
    let cut: BTreeSet<(&VertexId, &VertexId)> =
        cut.iter().map(|&(u, v)| (&q.vertices()[u], &q.vertices()[v])).collect();
    let arrows = q
        .arrows()
        .into_iter()
        .filter(|a| keep.contains(&a.from) && keep.contains(&a.to) && !cut.contains(&(&a.from, &a.to)));
    Quiver::new(keep.clone(), arrows.collect::<Vec<Arrow>>()).expect("subquiver of a valid quiver")
}

/// Type A and `v` connecting in it.
fn connecting_in(q: &Quiver, v: &VertexId) -> bool {
    connecting_vertices(q).is_ok_and(|cs| cs.contains(v))
}

fn part(q: &Quiver, v: &VertexId) -> Quiver {
    q.connected_component(v).expect("vertex of q")
}

pub fn classify_mu_d(q: &Quiver) -> Option<MuDClassification> {
    if q.len() < 4 || !q.is_connected() || q.arrows().iter().any(|a| a.mult > 1) {
        return None;
    }
    type_iv(q).or_else(|| type_iii(q)).or_else(|| type_ii(q)).or_else(|| type_i(q))
}

fn label(q: &Quiver, i: usize) -> VertexId {
    q.vertices()[i].clone()
}

fn chordless(q: &Quiver, cyc: &[usize]) -> bool {
    let m = cyc.len();
    (0..m).all(|s| (s + 2..m).all(|t| (s == 0 && t == m - 1) || q.b(cyc[s], cyc[t]) == 0))
}

fn type_iv(q: &Quiver) -> Option<MuDClassification> {
    let cycles = enumerate_simple_cycles(q, DEFAULT_CYCLE_BUDGET).ok()?;
    'cycles: for cyc in cycles.iter().filter(|c| c.oriented && chordless(q, &c.indices)) {
        let central = &cyc.indices;
        let k = central.len();
        let on = |v: usize| central.contains(&v);
        let mut spikes: Vec<(usize, usize, usize)> = Vec::new();
        for t in 0..k {
            let (a, b) = (central[t], central[(t + 1) % k]);
            let over: Vec<usize> =
                (0..q.len()).filter(|&w| !on(w) && q.b(b, w) > 0 && q.b(w, a) > 0).collect();
            match over[..] {
                [] => {}
                [w] => spikes.push((a, b, w)),
                _ => continue 'cycles,
            }
        }
        // Central vertices see only the cycle and their spikes; a spike sees
        // only the two ends of its arrow.
        let spike_set: BTreeSet<usize> = spikes.iter().map(|s| s.2).collect();
        if spike_set.len() != spikes.len() {
            continue;
        }
        for &u in central {
            if q.neighbors(u).any(|w| !on(w) && !spike_set.contains(&w)) {
                continue 'cycles;
            }
        }
        for &(a, b, w) in &spikes {
            if q.neighbors(w).filter(|&x| on(x)).any(|x| x != a && x != b) {
                continue 'cycles;
            }
        }
        let rest = remove(q, central, &[]);
        let comps = rest.components();
        for comp in &comps {
            let inside: Vec<&VertexId> =
                spikes.iter().map(|s| &q.vertices()[s.2]).filter(|v| comp.contains(v)).collect();
            let [spike] = inside[..] else { continue 'cycles };
            if !connecting_in(&part(&rest, spike), spike) {
                continue 'cycles;
            }
        }
        return Some(MuDClassification::TypeIV {
            central: central.iter().map(|&i| label(q, i)).collect(),
            spikes: spikes
                .iter()
                .map(|&(a, b, w)| Spike { from: label(q, a), to: label(q, b), spike: label(q, w) })
                .collect(),
            remainders: comps,
        });
    }
    None
}

/// The two pieces around `c` and `d`, if `rest` splits into exactly those
/// and both are type A with `c`, `d` connecting.
fn two_pieces(rest: &Quiver, c: &VertexId, d: &VertexId) -> Option<(Vec<VertexId>, Vec<VertexId>)> {
    let comps = rest.components();
    if comps.len() != 2 {
        return None;
    }
    let q1 = comps.iter().find(|p| p.contains(c))?.clone();
    let q2 = comps.iter().find(|p| p.contains(d))?.clone();
    if q1 == q2 || !connecting_in(&part(rest, c), c) || !connecting_in(&part(rest, d), d) {
        return None;
    }
    Some((q1, q2))
}

fn type_iii(q: &Quiver) -> Option<MuDClassification> {
    let cycles = enumerate_simple_cycles(q, DEFAULT_CYCLE_BUDGET).ok()?;
    for cyc in cycles.iter().filter(|c| c.oriented && c.len() == 4 && chordless(q, &c.indices)) {
        for t in 0..4 {
            let x = |s: usize| cyc.indices[(t + s) % 4];
            let (a, d, b, c) = (x(0), x(1), x(2), x(3));
            if q.degree(a) != 2 || q.degree(b) != 2 {
                continue;
            }
            let rest = remove(q, &[a, b], &[]);
            if let Some((q1, q2)) = two_pieces(&rest, &label(q, c), &label(q, d)) {
                return Some(MuDClassification::TypeIII {
                    a: label(q, a),
                    b: label(q, b),
                    c: label(q, c),
                    d: label(q, d),
                    q1,
                    q2,
                });
            }
        }
    }
    None
}

fn type_ii(q: &Quiver) -> Option<MuDClassification> {
    let n = q.len();
    for c in 0..n {
        for d in (0..n).filter(|&d| q.b(c, d) > 0) {
            let tips: Vec<usize> =
                (0..n).filter(|&x| q.degree(x) == 2 && q.b(d, x) > 0 && q.b(x, c) > 0).collect();
            for (s, &a) in tips.iter().enumerate() {
                for &b in &tips[s + 1..] {
                    let rest = remove(q, &[a, b], &[(c, d)]);
                    if let Some((q1, q2)) = two_pieces(&rest, &label(q, c), &label(q, d)) {
                        return Some(MuDClassification::TypeII {
                            a: label(q, a),
                            b: label(q, b),
                            c: label(q, c),
                            d: label(q, d),
                            q1,
                            q2,
                        });
                    }
                }
            }
        }
    }
    None
}

fn type_i(q: &Quiver) -> Option<MuDClassification> {
    for c in 0..q.len() {
        let leaves: Vec<usize> = q.neighbors(c).filter(|&x| q.degree(x) == 1).collect();
        for (s, &a) in leaves.iter().enumerate() {
            for &b in &leaves[s + 1..] {
                let rest = remove(q, &[a, b], &[]);
                if is_mu_a(&rest) && connecting_in(&rest, &label(q, c)) {
                    return Some(MuDClassification::TypeI {
                        a: label(q, a),
                        b: label(q, b),
                        c: label(q, c),
                        remainder: rest.vertices().to_vec(),
                    });
                }
            }
        }
    }
    None
}

/// Chains of the type A piece of `rest` containing `pin`, with `pin` alone.
fn piece_chains(rest: &Quiver, pin: &VertexId) -> Result<Vec<Vec<VertexId>>, FamilyError> {
    Ok(mu_a_decompose(&part(rest, pin), std::slice::from_ref(pin))?.chains().to_vec())
}

fn without_singleton(mut chains: Vec<Vec<VertexId>>, v: &VertexId) -> Vec<Vec<VertexId>> {
    chains.retain(|c| !(c.len() == 1 && &c[0] == v));
    chains
}

fn ids(q: &Quiver, vs: &[&VertexId]) -> Vec<usize> {
    vs.iter().map(|v| q.index_of(v).expect("classified vertex")).collect()
}

/// Classifies `q` and turns the matched shape into chains.
pub fn mu_d_decompose(q: &Quiver) -> Result<(MuDClassification, QnDecomposition), FamilyError> {
    let class = classify_mu_d(q).ok_or(FamilyError::NotMuD)?;
    let one = |v: &VertexId| vec![v.clone()];
    let chains = match &class {
        MuDClassification::TypeI { a, b, c, .. } => {
            let rest = remove(q, &ids(q, &[a, b]), &[]);
            let mut chains = piece_chains(&rest, c)?;
            chains.push(one(a));
            chains.push(one(b));
            chains
        }
        MuDClassification::TypeII { a, b, c, d, .. } | MuDClassification::TypeIII { a, b, c, d, .. } => {
            let idx = ids(q, &[a, b, c, d]);
            let cut = if class.kind() == MuDType::II { vec![(idx[2], idx[3])] } else { vec![] };
            let rest = remove(q, &idx[..2], &cut);
            let mut chains = without_singleton(piece_chains(&rest, c)?, c);
            chains.extend(without_singleton(piece_chains(&rest, d)?, d));
            if class.kind() == MuDType::II {
                chains.push(vec![d.clone(), c.clone()]);
                chains.push(one(a));
            } else {
                chains.push(vec![d.clone(), a.clone(), c.clone()]);
            }
            chains.push(one(b));
            chains
        }
        MuDClassification::TypeIV { central, spikes, .. } => {
            return type_iv_chains(q, central, spikes).map(|qn| (class.clone(), qn));
        }
    };
    let qn = QnCandidate::from_quiver(q, chains)?;
    Ok((class, qn))
}

/// One central vertex `s` alone (together with the spikes on its two
/// arrows), the rest of the central cycle as one chain; tries every `s`.
fn type_iv_chains(q: &Quiver, central: &[VertexId], spikes: &[Spike]) -> Result<QnDecomposition, FamilyError> {
    let rest = remove(q, &ids(q, &central.iter().collect::<Vec<_>>()), &[]);
    let mut pieces: Vec<(VertexId, Vec<Vec<VertexId>>)> = Vec::new();
    for s in spikes {
        pieces.push((s.spike.clone(), without_singleton(piece_chains(&rest, &s.spike)?, &s.spike)));
    }
    let k = central.len();
    let mut last_err = None;
    for t in 0..k {
        let s = &central[t];
        let x = &central[(t + 1) % k];
        let y = &central[(t + k - 1) % k];
        // s -> x -> ... -> y -> s; chain is y (sink) up to x.
        let chain: Vec<VertexId> = (1..k).rev().map(|u| central[(t + u) % k].clone()).collect();
        let spike_on = |from: &VertexId, to: &VertexId| {
            spikes.iter().find(|p| &p.from == from && &p.to == to).map(|p| p.spike.clone())
        };
        let below = spike_on(y, s);
        let above = spike_on(s, x);
        let mut single: Vec<VertexId> = Vec::new();
        single.extend(below.clone());
        single.push(s.clone());
        single.extend(above.clone());
        let mut chains = vec![single, chain];
        for (spike, piece) in &pieces {
            chains.extend(piece.iter().cloned());
            if Some(spike) != below.as_ref() && Some(spike) != above.as_ref() {
                chains.push(vec![spike.clone()]);
            }
        }
        match QnCandidate::from_quiver(q, chains) {
            Ok(qn) => return Ok(qn),
            Err(e) => last_err = Some(e),
        }
    }
    Err(last_err.expect("central cycle is non-empty").into())
}
