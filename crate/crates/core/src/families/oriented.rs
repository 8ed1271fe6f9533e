//! Quivers in which every arrow lies on an oriented cycle and every cycle
//! of the underlying graph is oriented. Trees of oriented cycles are the
//! special case where each vertex lies on at most two cycles.

use std::collections::{BTreeSet, VecDeque};

use super::cycles::{enumerate_simple_cycles, Cycle, DEFAULT_CYCLE_BUDGET};
use super::FamilyError;
use crate::qn::{QnCandidate, QnDecomposition};
use crate::quiver::{Quiver, VertexId};

/// Chains for a connected quiver whose cycles meet like a tree.
///
/// The root cycle `v_1 -> ... -> v_l -> v_1` is rotated so that `v_l` is
/// `root_single` (default: the vertex before the smallest one); `v_l` gets a
/// chain of its own and `v_1 .. v_{l-1}` form the other. Walking outward,
/// every new cycle `v -> w_1 -> ... -> w_m -> v` through an already placed
/// `v` contributes the chain `w_1 .. w_m`, and every arrow that lies on no
/// cycle contributes its new endpoint as a singleton.
///
/// Returns `None` when the structure is not a tree of that shape.
pub(crate) fn peel(q: &Quiver, cycles: &[Cycle], root_single: Option<usize>) -> Option<Vec<Vec<VertexId>>> {
    let n = q.len();
    if n == 0 {
        return None;
    }
    let mut cycle_edges = BTreeSet::new();
    for c in cycles {
        let m = c.len();
        for t in 0..m {
            let (u, v) = (c.indices[t], c.indices[(t + 1) % m]);
            cycle_edges.insert((u.min(v), u.max(v)));
        }
    }
    let label = |i: usize| q.vertices()[i].clone();
    let mut placed = vec![false; n];
    let mut used = vec![false; cycles.len()];
    let mut chains: Vec<Vec<VertexId>> = Vec::new();
    let mut queue = VecDeque::new();

    let root_cycle = match root_single {
        Some(s) => cycles.iter().position(|c| c.contains(s)),
        None => (!cycles.is_empty()).then_some(0),
    };
    match root_cycle {
        Some(ci) => {
            let c = &cycles[ci];
            let single = root_single.unwrap_or(*c.indices.last().unwrap());
            // single -> x -> ... -> y -> single; chain is y (sink) up to x.
            let rot = c.rotated_to(single);
            chains.push(vec![label(single)]);
            chains.push(rot[1..].iter().rev().map(|&i| label(i)).collect());
            used[ci] = true;
            for &i in &rot {
                placed[i] = true;
                queue.push_back(i);
            }
        }
        None => {
            let r = root_single.unwrap_or(0);
            chains.push(vec![label(r)]);
            placed[r] = true;
            queue.push_back(r);
        }
    }

    while let Some(v) = queue.pop_front() {
        for (ci, c) in cycles.iter().enumerate() {
            if used[ci] || !c.contains(v) {
                continue;
            }
            used[ci] = true;
            let rot = c.rotated_to(v);
            if rot[1..].iter().any(|&w| placed[w]) {
                return None;
            }
            chains.push(rot[1..].iter().rev().map(|&i| label(i)).collect());
            for &w in &rot[1..] {
                placed[w] = true;
                queue.push_back(w);
            }
        }
        for w in q.neighbors(v) {
            if cycle_edges.contains(&(v.min(w), v.max(w))) || placed[w] {
                continue;
            }
            chains.push(vec![label(w)]);
            placed[w] = true;
            queue.push_back(w);
        }
    }
    placed.iter().all(|&p| p).then_some(chains)
}

/// Decomposition of a connected irreducible quiver all of whose cycles are
/// oriented. `Ok(None)` when the quiver is outside that class.
pub fn all_cycles_oriented_decompose(q: &Quiver) -> Result<Option<QnDecomposition>, FamilyError> {
    if q.is_empty() || !q.is_connected() || q.arrows().iter().any(|a| a.mult > 1) {
        return Ok(None);
    }
    let cycles = enumerate_simple_cycles(q, DEFAULT_CYCLE_BUDGET)?;
    if cycles.iter().any(|c| !c.oriented) {
        return Ok(None);
    }
    let mut on_cycle = BTreeSet::new();
    for c in &cycles {
        for t in 0..c.len() {
            let (u, v) = (c.indices[t], c.indices[(t + 1) % c.len()]);
            on_cycle.insert((u.min(v), u.max(v)));
        }
    }
    let irreducible = (0..q.len()).all(|u| q.neighbors(u).all(|v| on_cycle.contains(&(u.min(v), u.max(v)))));
    if !irreducible {
        return Ok(None);
    }
    let Some(chains) = peel(q, &cycles, None) else {
        return Ok(None);
    };
    Ok(QnCandidate::from_quiver(q, chains).ok())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::quiver_from;
    use crate::fixtures;
    use crate::sequence::is_maximal_green_sequence;

    fn ids(xs: &[&str]) -> Vec<VertexId> {
        xs.iter().map(|&s| s.into()).collect()
    }

    #[test]
    fn single_triangle() {
        let q = quiver_from(&[("1", "2"), ("2", "3"), ("3", "1")]);
        let qn = all_cycles_oriented_decompose(&q).unwrap().unwrap();
        assert_eq!(qn.chains(), &[ids(&["3"]), ids(&["2", "1"])]);
        assert!(is_maximal_green_sequence(&q, qn.theorem_mgs().steps()));
    }

    #[test]
    fn fig7_has_six_chains() {
        let q = fixtures::fig7();
        let qn = all_cycles_oriented_decompose(&q).unwrap().unwrap();
        assert_eq!(qn.chains().len(), 6);
        assert_eq!(qn.expected_length(), 36);
        assert!(is_maximal_green_sequence(&q, qn.theorem_mgs().steps()));
    }

    #[test]
    fn cycles_sharing_one_vertex() {
        // Three triangles through vertex 0.
        let q = quiver_from(&[
            ("0", "a1"), ("a1", "a2"), ("a2", "0"),
            ("0", "b1"), ("b1", "b2"), ("b2", "0"),
            ("0", "c1"), ("c1", "c2"), ("c2", "0"),
        ]);
        let qn = all_cycles_oriented_decompose(&q).unwrap().unwrap();
        assert_eq!(qn.chains().len(), 4);
        assert!(is_maximal_green_sequence(&q, qn.theorem_mgs().steps()));
    }

    #[test]
    fn rejects_outside_the_class() {
        let square = quiver_from(&[("1", "2"), ("2", "3"), ("1", "4"), ("4", "3")]);
        assert!(all_cycles_oriented_decompose(&square).unwrap().is_none());
        let tail = quiver_from(&[("1", "2"), ("2", "3"), ("3", "1"), ("3", "4")]);
        assert!(all_cycles_oriented_decompose(&tail).unwrap().is_none());
    }
}
