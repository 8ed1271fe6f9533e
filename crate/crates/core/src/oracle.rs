//! Exhaustive search for green sequences on small quivers.
//!
//! The search runs on its own compact representation, independent of
//! [`crate::quiver`]: one row per mutable vertex, holding the entries
//! towards the `n` mutable and then the `n` frozen vertices of the framed
//! quiver. Only green vertices are ever mutated, so every explored path is
//! a green sequence by construction.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::quiver::{Quiver, VertexId};
use crate::sequence::MutationSequence;

/// Environment variable that overrides [`OracleConfig::node_cap`].
pub const NODE_CAP_ENV: &str = "GREENSEQ_NODE_CAP";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleConfig {
    /// Largest number of mutable vertices the oracle accepts.
    pub max_mutable: usize,
    /// Largest number of search nodes (mutations performed) before giving up.
    pub node_cap: u64,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig { max_mutable: 8, node_cap: 20_000_000 }
    }
}

impl OracleConfig {
    /// Defaults, with the node cap taken from `GREENSEQ_NODE_CAP` when set.
    pub fn from_env() -> Self {
        let mut cfg = OracleConfig::default();
        if let Some(cap) = std::env::var(NODE_CAP_ENV).ok().and_then(|s| s.trim().parse().ok()) {
            cfg.node_cap = cap;
        }
        cfg
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("{vertices} mutable vertices exceed the limit of {cap}")]
    TooManyVertices { vertices: usize, cap: usize },
    #[error("search stopped after {0} nodes")]
    BudgetExceeded(u64),
}

/// Framed quiver state: `rows[u * 2n + v]`.
#[derive(Clone, PartialEq, Eq, Hash)]
struct State {
    n: usize,
    rows: Vec<i64>,
}

impl State {
    fn framed(q: &Quiver) -> State {
        let n = q.len();
        let mut rows = vec![0; 2 * n * n];
        for u in 0..n {
            for v in 0..n {
                rows[u * 2 * n + v] = q.b(u, v);
            }
            rows[u * 2 * n + n + u] = 1;
        }
        State { n, rows }
    }

    #[inline]
    fn at(&self, u: usize, v: usize) -> i64 {
        self.rows[u * 2 * self.n + v]
    }

    fn is_green(&self, k: usize) -> bool {
        let row = &self.rows[k * 2 * self.n + self.n..(k + 1) * 2 * self.n];
        row.iter().all(|&x| x >= 0) && row.iter().any(|&x| x > 0)
    }

    fn all_red(&self) -> bool {
        (0..self.n).all(|k| {
            let row = &self.rows[k * 2 * self.n + self.n..(k + 1) * 2 * self.n];
            row.iter().all(|&x| x <= 0) && row.iter().any(|&x| x < 0)
        })
    }

    fn mutate(&self, k: usize) -> State {
        let w = 2 * self.n;
        let mut rows = self.rows.clone();
        for u in 0..self.n {
            let b_uk = self.at(u, k);
            for v in 0..w {
                rows[u * w + v] = if u == k || v == k {
                    -self.at(u, v)
                } else {
                    let b_kv = self.at(k, v);
                    self.at(u, v) + b_uk.signum() * (b_uk * b_kv).max(0)
                };
            }
        }
        State { n: self.n, rows }
    }
}

struct Search<'a> {
    labels: &'a [VertexId],
    cfg: OracleConfig,
    nodes: u64,
}

impl Search<'_> {
    fn new(q: &Quiver, cfg: OracleConfig) -> Result<Search<'_>, OracleError> {
        if q.len() > cfg.max_mutable {
            return Err(OracleError::TooManyVertices { vertices: q.len(), cap: cfg.max_mutable });
        }
        Ok(Search { labels: q.vertices(), cfg, nodes: 0 })
    }

    fn tick(&mut self) -> Result<(), OracleError> {
        self.nodes += 1;
        if self.nodes > self.cfg.node_cap {
            return Err(OracleError::BudgetExceeded(self.cfg.node_cap));
        }
        Ok(())
    }

    fn dfs<F>(&mut self, s: &State, path: &mut Vec<usize>, max_len: usize, f: &mut F) -> Result<(), OracleError>
    where
        F: FnMut(&[usize], bool),
    {
        let maximal = s.all_red();
        f(path, maximal);
        if maximal || path.len() == max_len {
            return Ok(());
        }
        for k in 0..s.n {
            if s.is_green(k) {
                self.tick()?;
                let next = s.mutate(k);
                path.push(k);
                self.dfs(&next, path, max_len, f)?;
                path.pop();
            }
        }
        Ok(())
    }
}

/// Calls `f(steps, is_maximal)` once for every green sequence of length at
/// most `max_len`, the empty one included.
pub fn for_each_green_sequence<F>(q: &Quiver, max_len: usize, cfg: OracleConfig, mut f: F) -> Result<(), OracleError>
where
    F: FnMut(&[VertexId], bool),
{
    let mut search = Search::new(q, cfg)?;
    let labels = search.labels;
    let mut buf: Vec<VertexId> = Vec::new();
    search.dfs(&State::framed(q), &mut Vec::new(), max_len, &mut |path, maximal| {
        buf.clear();
        buf.extend(path.iter().map(|&k| labels[k].clone()));
        f(&buf, maximal);
    })
}

/// Every green sequence of length at most `max_len`, with its maximality.
pub fn enumerate_green_sequences(
    q: &Quiver,
    max_len: usize,
    cfg: OracleConfig,
) -> Result<Vec<(MutationSequence, bool)>, OracleError> {
    let mut out = Vec::new();
    for_each_green_sequence(q, max_len, cfg, |steps, maximal| {
        out.push((MutationSequence::from_steps_unchecked(steps.to_vec()), maximal));
    })?;
    Ok(out)
}

/// All maximal green sequences of length at most `max_len`.
pub fn maximal_green_sequences(q: &Quiver, max_len: usize, cfg: OracleConfig) -> Result<Vec<MutationSequence>, OracleError> {
    let mut out = Vec::new();
    for_each_green_sequence(q, max_len, cfg, |steps, maximal| {
        if maximal {
            out.push(MutationSequence::from_steps_unchecked(steps.to_vec()));
        }
    })?;
    Ok(out)
}

/// Number of maximal green sequences of length at most `max_len`.
pub fn count_mgs(q: &Quiver, max_len: usize, cfg: OracleConfig) -> Result<u64, OracleError> {
    let mut search = Search::new(q, cfg)?;
    let mut count = 0u64;
    search.dfs(&State::framed(q), &mut Vec::new(), max_len, &mut |_, maximal| count += u64::from(maximal))?;
    Ok(count)
}

/// Length of a shortest maximal green sequence, by breadth-first search
/// over distinct framed states. `Ok(None)` when no state within `max_len`
/// mutations is all red.
pub fn min_mgs_length(q: &Quiver, max_len: usize, cfg: OracleConfig) -> Result<Option<usize>, OracleError> {
    let mut search = Search::new(q, cfg)?;
    let start = State::framed(q);
    if start.all_red() {
        return Ok(Some(0));
    }
    let mut seen: HashSet<Vec<i64>> = HashSet::new();
    seen.insert(start.rows.clone());
    let mut level = vec![start];
    for depth in 1..=max_len {
        let mut next_level = Vec::new();
        for s in &level {
            for k in 0..s.n {
                if !s.is_green(k) {
                    continue;
                }
                search.tick()?;
                let t = s.mutate(k);
                if t.all_red() {
                    return Ok(Some(depth));
                }
                if seen.insert(t.rows.clone()) {
                    next_level.push(t);
                }
            }
        }
        if next_level.is_empty() {
            return Ok(None);
        }
        level = next_level;
    }
    Ok(None)
}

/// Same answer as [`min_mgs_length`], by iterative deepening without any
/// memory of visited states.
pub fn min_mgs_length_iddfs(q: &Quiver, max_len: usize, cfg: OracleConfig) -> Result<Option<usize>, OracleError> {
    fn reach(search: &mut Search, s: &State, budget: usize) -> Result<bool, OracleError> {
        if s.all_red() {
            return Ok(true);
        }
        if budget == 0 {
            return Ok(false);
        }
        for k in 0..s.n {
            if s.is_green(k) {
                search.tick()?;
                if reach(search, &s.mutate(k), budget - 1)? {
                    return Ok(true);
                }
            }
        }
        Ok(false)
    }
    let mut search = Search::new(q, cfg)?;
    let start = State::framed(q);
    for depth in 0..=max_len {
        if reach(&mut search, &start, depth)? {
            return Ok(Some(depth));
        }
    }
    Ok(None)
}

/// Replays `steps` in the oracle's own representation.
pub fn is_mgs(q: &Quiver, steps: &[VertexId]) -> bool {
    let mut s = State::framed(q);
    for v in steps {
        match q.index_of(v) {
            Some(k) if s.is_green(k) => s = s.mutate(k),
            _ => return false,
        }
    }
    s.all_red()
}

/// Report layout shared with the command line tool.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleReport {
    pub min_length: Option<usize>,
    pub count: Option<u64>,
    pub budget_exhausted: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sequences: Option<Vec<Vec<VertexId>>>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::quiver_from;
    use crate::fixtures;

    fn ids(xs: &[&str]) -> Vec<VertexId> {
        xs.iter().map(|&s| s.into()).collect()
    }

    fn a2() -> Quiver {
        quiver_from(&[("2", "1")])
    }

    #[test]
    fn a2_has_two_mgs() {
        let cfg = OracleConfig::default();
        let mut found: Vec<Vec<VertexId>> =
            maximal_green_sequences(&a2(), 3, cfg).unwrap().into_iter().map(|s| s.into_steps()).collect();
        found.sort();
        assert_eq!(found, vec![ids(&["1", "2", "1"]), ids(&["2", "1"])]);
        assert_eq!(count_mgs(&a2(), 3, cfg).unwrap(), 2);
        assert_eq!(min_mgs_length(&a2(), 10, cfg).unwrap(), Some(2));
        assert_eq!(min_mgs_length_iddfs(&a2(), 10, cfg).unwrap(), Some(2));
    }

    #[test]
    fn single_vertex_and_zero_length() {
        let one = Quiver::new(["1"], Vec::new()).unwrap();
        let cfg = OracleConfig::default();
        let all = enumerate_green_sequences(&one, 5, cfg).unwrap();
        assert_eq!(all.iter().filter(|(_, m)| *m).count(), 1);
        let none = enumerate_green_sequences(&a2(), 0, cfg).unwrap();
        assert_eq!(none.len(), 1);
        assert!(none[0].0.is_empty() && !none[0].1);
    }

    #[test]
    fn triangle_and_fig8_minimum() {
        let cfg = OracleConfig::default();
        let tri = quiver_from(&[("1", "2"), ("2", "3"), ("3", "1")]);
        assert_eq!(min_mgs_length(&tri, 20, cfg).unwrap(), Some(4));
        assert_eq!(min_mgs_length(&fixtures::fig8(), 20, cfg).unwrap(), Some(10));
    }

    #[test]
    fn caps_are_enforced() {
        let big = quiver_from(&[("1", "2"), ("2", "3"), ("3", "4"), ("4", "5"), ("5", "6"), ("6", "7"), ("7", "8"), ("8", "9")]);
        assert_eq!(
            count_mgs(&big, 5, OracleConfig::default()),
            Err(OracleError::TooManyVertices { vertices: 9, cap: 8 })
        );
        let tiny = OracleConfig { node_cap: 3, ..OracleConfig::default() };
        assert_eq!(count_mgs(&fixtures::fig8(), 20, tiny), Err(OracleError::BudgetExceeded(3)));
    }

    #[test]
    fn oracle_replay_agrees() {
        assert!(is_mgs(&a2(), &ids(&["1", "2", "1"])));
        assert!(!is_mgs(&a2(), &ids(&["1"])));
        assert!(!is_mgs(&a2(), &ids(&["1", "1"])));
    }
}
