//! Simple cycles of the underlying undirected graph.

use super::FamilyError;
use crate::quiver::{Quiver, VertexId};

/// Default cap on the number of cycles [`enumerate_simple_cycles`] will
/// report before giving up.
pub const DEFAULT_CYCLE_BUDGET: usize = 100_000;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Cycle {
    /// Vertex indices. For an oriented cycle they follow the arrows; the
    /// first entry is the smallest index.
    pub indices: Vec<usize>,
    pub oriented: bool,
}

impl Cycle {
    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    pub fn labels(&self, q: &Quiver) -> Vec<VertexId> {
        self.indices.iter().map(|&i| q.vertices()[i].clone()).collect()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.indices.contains(&v)
    }

    /// For an oriented cycle, the rotation that starts at `v`.
    pub fn rotated_to(&self, v: usize) -> Vec<usize> {
        let k = self.indices.iter().position(|&x| x == v).expect("vertex on cycle");
        self.indices[k..].iter().chain(&self.indices[..k]).copied().collect()
    }
}

/// All simple cycles of length at least 3 of the underlying graph, ignoring
/// multiplicities, each reported once. Parallel arrows are not cycles here;
/// callers that care check multiplicities themselves.
pub fn enumerate_simple_cycles(q: &Quiver, budget: usize) -> Result<Vec<Cycle>, FamilyError> {
    let n = q.len();
    let adj: Vec<Vec<usize>> = (0..n).map(|u| q.neighbors(u).collect()).collect();
    let mut out = Vec::new();
    let mut on_path = vec![false; n];
    for s in 0..n {
        // Cycles whose smallest vertex is s, walking only through larger ones.
        let mut path = vec![s];
        on_path[s] = true;
        let mut iters = vec![0usize];
        while let Some(&u) = path.last() {
            let it = iters.last_mut().unwrap();
            if *it == adj[u].len() {
                on_path[u] = false;
                path.pop();
                iters.pop();
                continue;
            }
            let w = adj[u][*it];
            *it += 1;
            if w == s && path.len() >= 3 && path[1] < u {
                out.push(orient(q, &path));
                if out.len() > budget {
                    return Err(FamilyError::CycleBudgetExceeded(budget));
                }
            } else if w > s && !on_path[w] {
                on_path[w] = true;
                path.push(w);
                iters.push(0);
            }
        }
    }
    out.sort();
    Ok(out)
}

fn orient(q: &Quiver, path: &[usize]) -> Cycle {
    let m = path.len();
    let signs: Vec<i64> = (0..m).map(|t| q.b(path[t], path[(t + 1) % m]).signum()).collect();
    if signs.iter().all(|&s| s > 0) {
        Cycle { indices: path.to_vec(), oriented: true }
    } else if signs.iter().all(|&s| s < 0) {
        let mut rev: Vec<usize> = path.iter().rev().copied().collect();
        rev.rotate_right(1);
        Cycle { indices: rev, oriented: true }
    } else {
        Cycle { indices: path.to_vec(), oriented: false }
    }
}
