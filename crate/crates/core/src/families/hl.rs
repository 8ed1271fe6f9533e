//! Finite windows of the Hernandez–Leclerc quiver.
//!
//! Vertices are pairs `(i, r)` of a Dynkin node and an integer, labelled
//! `"(i,r)"`. There is an arrow `(i,r) -> (j,s)` exactly when `b_ij != 0`
//! and `s - d_j = r - d_i + b_ij`. For `i == j` this is the vertical arrow
//! `(i,r) -> (i,r+2d_i)`, so in every chain the largest `r` is the sink.

use std::collections::{BTreeMap, BTreeSet};

use super::cartan::CartanData;
use super::FamilyError;
use crate::qn::{QnCandidate, QnDecomposition};
use crate::quiver::{Arrow, Quiver, VertexId};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HlVertex {
    pub node: usize,
    pub r: i64,
}

impl HlVertex {
    pub fn new(node: usize, r: i64) -> Self {
        HlVertex { node, r }
    }

    pub fn label(&self) -> VertexId {
        VertexId::new(format!("({},{})", self.node, self.r))
    }

    /// Parses `"(i,r)"`, tolerating spaces.
    pub fn parse(label: &str) -> Option<HlVertex> {
        let inner = label.trim().strip_prefix('(')?.strip_suffix(')')?;
        let (i, r) = inner.split_once(',')?;
        Some(HlVertex { node: i.trim().parse().ok()?, r: r.trim().parse().ok()? })
    }
}

/// Every `(i, r)` with `lo <= r <= hi`.
pub fn hl_window(cartan: &CartanData, lo: i64, hi: i64) -> Vec<HlVertex> {
    (1..=cartan.rank).flat_map(|i| (lo..=hi).map(move |r| HlVertex::new(i, r))).collect()
}

fn has_arrow(cartan: &CartanData, u: HlVertex, v: HlVertex) -> bool {
    let b = cartan.b(u.node, v.node);
    b != 0 && v.r - cartan.d(v.node) == u.r - cartan.d(u.node) + b
}

/// The full subquiver of the infinite quiver on `window`.
pub fn hl_quiver(cartan: &CartanData, window: &[HlVertex]) -> Result<Quiver, FamilyError> {
    if window.is_empty() {
        return Err(FamilyError::EmptyWindow);
    }
    if let Some(v) = window.iter().find(|v| v.node == 0 || v.node > cartan.rank) {
        return Err(FamilyError::InconsistentLabels(format!("node {} outside 1..={}", v.node, cartan.rank)));
    }
    let mut arrows = Vec::new();
    for &u in window {
        for &v in window {
            if u != v && has_arrow(cartan, u, v) {
                arrows.push(Arrow::new(u.label(), v.label(), 1));
            }
        }
    }
    Ok(Quiver::new(window.iter().map(HlVertex::label), arrows)?)
}

/// The connected component of `seed` inside the window `lo..=hi`.
pub fn hl_component(cartan: &CartanData, lo: i64, hi: i64, seed: HlVertex) -> Result<Quiver, FamilyError> {
    let q = hl_quiver(cartan, &hl_window(cartan, lo, hi))?;
    Ok(q.connected_component(&seed.label())?)
}

fn parse_all(q: &Quiver) -> Result<BTreeMap<HlVertex, VertexId>, FamilyError> {
    q.vertices()
        .iter()
        .map(|v| {
            HlVertex::parse(v.as_str())
                .map(|h| (h, v.clone()))
                .ok_or_else(|| FamilyError::InconsistentLabels(format!("{v} is not of the form (i,r)")))
        })
        .collect()
}

/// Chains are the maximal runs `(i,a) <- (i,a-2d_i) <- ...` inside `q`,
/// ordered by node and then by decreasing top `r`; every other arrow is
/// oblique.
pub fn hl_decompose(q: &Quiver, cartan: &CartanData) -> Result<QnDecomposition, FamilyError> {
    let labels = parse_all(q)?;
    let window: Vec<HlVertex> = labels.keys().copied().collect();
    let expected = hl_quiver(cartan, &window)?;
    // Same vertex set, so compare arrow by arrow.
    if expected.arrows().len() != q.arrows().len()
        || expected.arrows().iter().any(|a| q.arrow_count(&a.from, &a.to) != a.mult)
    {
        return Err(FamilyError::InconsistentLabels("arrows differ from the labelled rule".into()));
    }
    let mut chains = Vec::new();
    for node in 1..=cartan.rank {
        let step = 2 * cartan.d(node);
        let rs: BTreeSet<i64> = window.iter().filter(|v| v.node == node).map(|v| v.r).collect();
        // Maximal runs r, r - step, r - 2 step, ... started from their tops.
        let mut runs: Vec<Vec<VertexId>> = Vec::new();
        for &top in rs.iter().rev() {
            if rs.contains(&(top + step)) {
                continue;
            }
            let mut run = Vec::new();
            let mut r = top;
            while rs.contains(&r) {
                run.push(labels[&HlVertex::new(node, r)].clone());
                r -= step;
            }
            runs.push(run);
        }
        chains.extend(runs);
    }
    Ok(QnCandidate::from_quiver(q, chains)?)
}

/// Like [`hl_decompose`] without Cartan data: labels must parse as `(i,r)`,
/// and the arrows between vertices with the same `i` are taken as vertical.
pub fn hl_decompose_by_labels(q: &Quiver) -> Option<QnDecomposition> {
    let labels = parse_all(q).ok()?;
    let by_label: BTreeMap<&VertexId, HlVertex> = labels.iter().map(|(h, v)| (v, *h)).collect();
    let mut up: BTreeMap<&VertexId, &VertexId> = BTreeMap::new();
    let mut has_below = BTreeMap::new();
    for a in q.arrows() {
        let (hu, hv) = (by_label[&a.from], by_label[&a.to]);
        if hu.node == hv.node {
            if hv.r <= hu.r || a.mult != 1 {
                return None;
            }
            // a.to is one step closer to the sink than a.from.
            let from = labels.get(&hu)?;
            let to = labels.get(&hv)?;
            if up.insert(to, from).is_some() || has_below.insert(from, ()).is_some() {
                return None;
            }
        }
    }
    let mut chains: Vec<(HlVertex, Vec<VertexId>)> = Vec::new();
    for (h, v) in &labels {
        if has_below.contains_key(v) {
            continue;
        }
        // v is a sink of its run: climb.
        let mut chain = vec![v.clone()];
        let mut cur = v;
        while let Some(&next) = up.get(cur) {
            chain.push(next.clone());
            cur = next;
        }
        chains.push((*h, chain));
    }
    chains.sort_by_key(|a| (a.0.node, std::cmp::Reverse(a.0.r)));
    QnCandidate::from_quiver(q, chains.into_iter().map(|(_, c)| c).collect()).ok()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::cartan::{cartan_data, DynkinType};

    fn b2() -> CartanData {
        cartan_data(DynkinType::B, 2).unwrap()
    }

    fn fig4() -> Quiver {
        hl_component(&b2(), -1, 10, HlVertex::new(1, 10)).unwrap()
    }

    fn has(q: &Quiver, from: (usize, i64), to: (usize, i64)) -> bool {
        q.arrow_count(&HlVertex::new(from.0, from.1).label(), &HlVertex::new(to.0, to.1).label()) == 1
    }

    #[test]
    fn label_round_trip() {
        let h = HlVertex::new(2, -1);
        assert_eq!(h.label().as_str(), "(2,-1)");
        assert_eq!(HlVertex::parse("(2,-1)"), Some(h));
        assert_eq!(HlVertex::parse("( 2 , -1 )"), Some(h));
        assert_eq!(HlVertex::parse("2,-1"), None);
    }

    #[test]
    fn b2_window_arrows() {
        let q = fig4();
        assert_eq!(q.len(), 12);
        assert!(has(&q, (1, 10), (2, 7)));
        assert!(has(&q, (2, 9), (1, 8)));
        assert!(has(&q, (1, 4), (1, 8)));
        assert!(has(&q, (2, 7), (2, 9)));
        assert!(!has(&q, (1, 8), (1, 4)));
    }

    #[test]
    fn b2_window_decomposes_into_three_chains() {
        let qn = hl_decompose(&fig4(), &b2()).unwrap();
        let l = |pairs: &[(usize, i64)]| -> Vec<VertexId> {
            pairs.iter().map(|&(i, r)| HlVertex::new(i, r).label()).collect()
        };
        assert_eq!(
            qn.chains(),
            &[
                l(&[(1, 10), (1, 6), (1, 2)]),
                l(&[(1, 8), (1, 4), (1, 0)]),
                l(&[(2, 9), (2, 7), (2, 5), (2, 3), (2, 1), (2, -1)]),
            ]
        );
        assert_eq!(hl_decompose_by_labels(&fig4()).unwrap(), qn);
    }

    #[test]
    fn single_vertex_and_a2() {
        let a2 = cartan_data(DynkinType::A, 2).unwrap();
        let one = hl_quiver(&a2, &[HlVertex::new(1, 0)]).unwrap();
        assert_eq!(hl_decompose(&one, &a2).unwrap().chain_lengths(), vec![1]);
        let q = hl_component(&a2, 0, 5, HlVertex::new(1, 5)).unwrap();
        let qn = hl_decompose(&q, &a2).unwrap();
        assert_eq!(qn.chains().len(), 2);
        assert!(hl_quiver(&a2, &[]).is_err());
    }

    #[test]
    fn rejects_mislabelled_quiver() {
        let q = Quiver::new(["(1,0)", "(1,2)"], [Arrow::new("(1,2)", "(1,0)", 1)]).unwrap();
        let a2 = cartan_data(DynkinType::A, 2).unwrap();
        assert!(matches!(hl_decompose(&q, &a2), Err(FamilyError::InconsistentLabels(_))));
        assert!(hl_decompose_by_labels(&q).is_none());
    }
}
