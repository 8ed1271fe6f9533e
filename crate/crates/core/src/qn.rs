//! Quivers built from vertical chains joined by oblique zigzags.
//!
//! A chain `v_1 <- v_2 <- ... <- v_k` is listed sink first. Between two
//! chains the oblique arrows must form a single path that alternates between
//! them with strictly increasing positions on both sides, and the graph whose
//! nodes are chains and whose edges are "joined by obliques" must be a tree.
//!
//! [`QnCandidate`] is the unchecked input; [`QnCandidate::build`] validates
//! it and returns a [`QnDecomposition`] with its partial order precomputed.

use std::cmp::Reverse;
use std::collections::{BTreeMap, BTreeSet, BinaryHeap};
use std::fmt;

use rand::seq::index::sample;
use rand::Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::quiver::{frame, Arrow, Quiver, QuiverError, VertexId};
use crate::sequence::MutationSequence;

/// Position of a vertex inside a decomposition. Both fields are zero-based:
/// `position == 0` is the sink end `v_1` of the chain.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ChainVertex {
    pub chain: usize,
    pub position: usize,
}

impl fmt::Display for ChainVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "v{}_{}", self.chain + 1, self.position + 1)
    }
}

/// One failed condition. [`QnViolation::clause`] names the condition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum QnViolation {
    EmptyChain { chain: usize },
    DuplicateVertex { vertex: VertexId },
    UnknownVertex { vertex: VertexId },
    DuplicateArrow { from: VertexId, to: VertexId },
    ObliqueWithinChain { from: VertexId, to: VertexId },
    NonAlternatingPath { chains: (usize, usize), vertex: VertexId },
    MultiplePathsBetweenChains { chains: (usize, usize), paths: usize },
    NonIncreasingPositions { chains: (usize, usize), vertex: VertexId },
    ChainGraphCycle { chains: (usize, usize) },
    Disconnected { components: usize },
}

impl QnViolation {
    pub fn clause(&self) -> &'static str {
        use QnViolation::*;
        match self {
            EmptyChain { .. } | DuplicateVertex { .. } | UnknownVertex { .. } | DuplicateArrow { .. } => "input",
            ObliqueWithinChain { .. } => "oblique-between-chains",
            NonAlternatingPath { .. } | MultiplePathsBetweenChains { .. } => "single-zigzag",
            NonIncreasingPositions { .. } => "increasing-positions",
            ChainGraphCycle { .. } => "chain-tree",
            Disconnected { .. } => "connected",
        }
    }
}

impl fmt::Display for QnViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use QnViolation::*;
        match self {
            EmptyChain { chain } => write!(f, "chain {chain} is empty"),
            DuplicateVertex { vertex } => write!(f, "vertex {vertex} appears twice"),
            UnknownVertex { vertex } => write!(f, "oblique endpoint {vertex} is in no chain"),
            DuplicateArrow { from, to } => write!(f, "oblique {from} -> {to} is repeated or reversed"),
            ObliqueWithinChain { from, to } => write!(f, "oblique {from} -> {to} stays inside one chain"),
            NonAlternatingPath { chains, vertex } => {
                write!(f, "obliques between chains {} and {} branch or close up at {vertex}", chains.0, chains.1)
            }
            MultiplePathsBetweenChains { chains, paths } => {
                write!(f, "chains {} and {} are joined by {paths} separate paths", chains.0, chains.1)
            }
            NonIncreasingPositions { chains, vertex } => write!(
                f,
                "zigzag between chains {} and {} goes back up its chain at {vertex}",
                chains.0, chains.1
            ),
            ChainGraphCycle { chains } => {
                write!(f, "joining chains {} and {} closes a cycle of chains", chains.0, chains.1)
            }
            Disconnected { components } => write!(f, "quiver has {components} connected components"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QnError {
    #[error("invalid chain decomposition: {}", .0.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("; "))]
    Invalid(Vec<QnViolation>),
    #[error("the order relation has a cycle through {0:?}")]
    OrderCycleDetected(Vec<VertexId>),
    #[error("expected exactly two chains, found {0}")]
    NotTwoChains(usize),
    #[error("vertex {0} is not in the decomposition")]
    UnknownVertex(VertexId),
    #[error("the decomposition does not describe the given quiver")]
    QuiverMismatch,
    #[error(transparent)]
    Quiver(#[from] QuiverError),
}

/// Unvalidated chain-and-oblique description.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct QnCandidate {
    /// Each chain listed from its sink `v_1` upward.
    pub chains: Vec<Vec<VertexId>>,
    pub oblique: Vec<(VertexId, VertexId)>,
}

/// The obliques between one pair of chains, in path order.
#[derive(Clone, Debug, PartialEq, Eq)]
struct Zigzag {
    path: Vec<ChainVertex>,
}

impl QnCandidate {
    pub fn new<C, V, O, A, B>(chains: C, oblique: O) -> QnCandidate
    where
        C: IntoIterator<Item = V>,
        V: IntoIterator,
        V::Item: Into<VertexId>,
        O: IntoIterator<Item = (A, B)>,
        A: Into<VertexId>,
        B: Into<VertexId>,
    {
        QnCandidate {
            chains: chains.into_iter().map(|c| c.into_iter().map(Into::into).collect()).collect(),
            oblique: oblique.into_iter().map(|(a, b)| (a.into(), b.into())).collect(),
        }
    }

    /// Chains read off `chains`, obliques = every other arrow of `q`. Fails
    /// unless the result describes `q` exactly.
    pub fn from_quiver(q: &Quiver, chains: Vec<Vec<VertexId>>) -> Result<QnDecomposition, QnError> {
        let mut vertical = BTreeSet::new();
        for c in &chains {
            for w in c.windows(2) {
                vertical.insert((w[1].clone(), w[0].clone()));
            }
        }
        let oblique = q
            .arrows()
            .into_iter()
            .map(|a| (a.from, a.to))
            .filter(|pair| !vertical.contains(pair))
            .collect();
        let qn = QnCandidate { chains, oblique }.build()?;
        if qn.quiver() != q {
            return Err(QnError::QuiverMismatch);
        }
        Ok(qn)
    }

    fn locate(&self) -> (BTreeMap<&VertexId, ChainVertex>, Vec<QnViolation>) {
        let mut map = BTreeMap::new();
        let mut out = Vec::new();
        for (ci, chain) in self.chains.iter().enumerate() {
            if chain.is_empty() {
                out.push(QnViolation::EmptyChain { chain: ci });
            }
            for (p, v) in chain.iter().enumerate() {
                if map.insert(v, ChainVertex { chain: ci, position: p }).is_some() {
                    out.push(QnViolation::DuplicateVertex { vertex: v.clone() });
                }
            }
        }
        (map, out)
    }

    /// Every violated condition, empty iff the candidate is valid.
    pub fn validate(&self) -> Vec<QnViolation> {
        self.analyse().err().unwrap_or_default()
    }

    fn analyse(&self) -> Result<Vec<Zigzag>, Vec<QnViolation>> {
        let (map, mut out) = self.locate();
        let mut seen = BTreeSet::new();
        let mut by_pair: BTreeMap<(usize, usize), Vec<(ChainVertex, ChainVertex)>> = BTreeMap::new();
        for (from, to) in &self.oblique {
            let (Some(&u), Some(&v)) = (map.get(from), map.get(to)) else {
                for x in [from, to] {
                    if !map.contains_key(x) {
                        out.push(QnViolation::UnknownVertex { vertex: x.clone() });
                    }
                }
                continue;
            };
            let key = if u < v { (u, v) } else { (v, u) };
            if !seen.insert(key) {
                out.push(QnViolation::DuplicateArrow { from: from.clone(), to: to.clone() });
                continue;
            }
            if u.chain == v.chain {
                out.push(QnViolation::ObliqueWithinChain { from: from.clone(), to: to.clone() });
                continue;
            }
            by_pair.entry((u.chain.min(v.chain), u.chain.max(v.chain))).or_default().push((u, v));
        }
        if !out.is_empty() {
            return Err(out);
        }

        let label = |c: ChainVertex| self.chains[c.chain][c.position].clone();
        let mut zigzags = Vec::new();
        for (&pair, arrows) in &by_pair {
            match trace_path(arrows) {
                Err(PathFault::Branch(c)) | Err(PathFault::Cycle(c)) => {
                    out.push(QnViolation::NonAlternatingPath { chains: pair, vertex: label(c) });
                }
                Err(PathFault::Several(paths)) => {
                    out.push(QnViolation::MultiplePathsBetweenChains { chains: pair, paths });
                }
                Ok(path) => {
                    let mut last: BTreeMap<usize, usize> = BTreeMap::new();
                    let bad = path.iter().find(|c| {
                        let prev = last.insert(c.chain, c.position);
                        prev.is_some_and(|p| p >= c.position)
                    });
                    match bad {
                        Some(&c) => out.push(QnViolation::NonIncreasingPositions { chains: pair, vertex: label(c) }),
                        None => zigzags.push(Zigzag { path }),
                    }
                }
            }
        }

        let mut uf = UnionFind::new(self.chains.len());
        for &pair in by_pair.keys() {
            if !uf.union(pair.0, pair.1) {
                out.push(QnViolation::ChainGraphCycle { chains: pair });
            }
        }
        let components = uf.count();
        if components > 1 {
            out.push(QnViolation::Disconnected { components });
        }
        if out.is_empty() {
            Ok(zigzags)
        } else {
            Err(out)
        }
    }

    /// Validates and precomputes the order.
    pub fn build(self) -> Result<QnDecomposition, QnError> {
        let zigzags = self.analyse().map_err(QnError::Invalid)?;
        QnDecomposition::assemble(self, zigzags)
    }
}

enum PathFault {
    Branch(ChainVertex),
    Cycle(ChainVertex),
    Several(usize),
}

/// Orders a set of arrows into one directed path.
fn trace_path(arrows: &[(ChainVertex, ChainVertex)]) -> Result<Vec<ChainVertex>, PathFault> {
    let mut next = BTreeMap::new();
    let mut has_pred = BTreeSet::new();
    for &(u, v) in arrows {
        if next.insert(u, v).is_some() {
            return Err(PathFault::Branch(u));
        }
        if !has_pred.insert(v) {
            return Err(PathFault::Branch(v));
        }
    }
    let starts: Vec<ChainVertex> = next.keys().filter(|u| !has_pred.contains(u)).copied().collect();
    if starts.is_empty() {
        return Err(PathFault::Cycle(arrows[0].0));
    }
    let mut path = vec![starts[0]];
    while let Some(&v) = next.get(path.last().unwrap()) {
        path.push(v);
    }
    if starts.len() > 1 {
        return Err(PathFault::Several(starts.len()));
    }
    if path.len() != arrows.len() + 1 {
        // The remaining arrows form cycles disjoint from the path.
        let on_path: BTreeSet<ChainVertex> = path.iter().copied().collect();
        let off = arrows.iter().find(|(u, _)| !on_path.contains(u)).unwrap().0;
        return Err(PathFault::Cycle(off));
    }
    Ok(path)
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.parent[r] != r {
            r = self.parent[r];
        }
        let mut x = x;
        while self.parent[x] != r {
            let up = self.parent[x];
            self.parent[x] = r;
            x = up;
        }
        r
    }

    /// False if `a` and `b` were already joined.
    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        self.parent[ra] = rb;
        ra != rb
    }

    fn count(&mut self) -> usize {
        (0..self.parent.len()).filter(|&x| self.find(x) == x).count()
    }
}

/// A validated decomposition together with its underlying quiver and the
/// transitive closure of its order relation.
#[derive(Clone, Debug)]
pub struct QnDecomposition {
    chains: Vec<Vec<VertexId>>,
    oblique: Vec<(VertexId, VertexId)>,
    quiver: Quiver,
    offsets: Vec<usize>,
    index: BTreeMap<VertexId, ChainVertex>,
    covers: Vec<(ChainVertex, ChainVertex)>,
    below: Vec<Vec<u64>>,
    descending: Vec<ChainVertex>,
}

impl PartialEq for QnDecomposition {
    fn eq(&self, other: &Self) -> bool {
        self.chains == other.chains && self.quiver == other.quiver
    }
}

impl Eq for QnDecomposition {}

impl QnDecomposition {
    fn assemble(cand: QnCandidate, zigzags: Vec<Zigzag>) -> Result<QnDecomposition, QnError> {
        let QnCandidate { chains, mut oblique } = cand;
        oblique.sort();
        let mut offsets = Vec::with_capacity(chains.len());
        let mut total = 0;
        for c in &chains {
            offsets.push(total);
            total += c.len();
        }
        let mut index = BTreeMap::new();
        for (ci, c) in chains.iter().enumerate() {
            for (p, v) in c.iter().enumerate() {
                index.insert(v.clone(), ChainVertex { chain: ci, position: p });
            }
        }

        let mut arrows: Vec<Arrow> = Vec::new();
        for c in &chains {
            for w in c.windows(2) {
                arrows.push(Arrow::new(w[1].clone(), w[0].clone(), 1));
            }
        }
        arrows.extend(oblique.iter().map(|(a, b)| Arrow::new(a.clone(), b.clone(), 1)));
        let vertices: Vec<VertexId> = chains.iter().flatten().cloned().collect();
        let quiver = Quiver::new(vertices, arrows)?;

        let lens: Vec<usize> = chains.iter().map(Vec::len).collect();
        let mut covers = Vec::new();
        for (ci, &k) in lens.iter().enumerate() {
            for p in 1..k {
                covers.push((ChainVertex { chain: ci, position: p - 1 }, ChainVertex { chain: ci, position: p }));
            }
        }
        for z in &zigzags {
            covers.extend(zigzag_covers(&z.path, &lens));
        }
        covers.sort();
        covers.dedup();

        let mut qn = QnDecomposition {
            chains,
            oblique,
            quiver,
            offsets,
            index,
            covers,
            below: Vec::new(),
            descending: Vec::new(),
        };
        qn.close_order()?;
        Ok(qn)
    }

    fn flat(&self, c: ChainVertex) -> usize {
        self.offsets[c.chain] + c.position
    }

    fn unflat(&self, i: usize) -> ChainVertex {
        let chain = self.offsets.partition_point(|&o| o <= i) - 1;
        ChainVertex { chain, position: i - self.offsets[chain] }
    }

    /// Topological sort with a (chain, position) min-heap, then the closure
    /// in reverse topological order.
    fn close_order(&mut self) -> Result<(), QnError> {
        let n = self.quiver.len();
        let mut succ = vec![Vec::new(); n];
        let mut indeg = vec![0usize; n];
        for &(u, v) in &self.covers {
            succ[self.flat(u)].push(self.flat(v));
            indeg[self.flat(v)] += 1;
        }
        let mut heap: BinaryHeap<Reverse<ChainVertex>> =
            (0..n).filter(|&i| indeg[i] == 0).map(|i| Reverse(self.unflat(i))).collect();
        let mut order = Vec::with_capacity(n);
        while let Some(Reverse(c)) = heap.pop() {
            order.push(c);
            for &w in &succ[self.flat(c)] {
                indeg[w] -= 1;
                if indeg[w] == 0 {
                    heap.push(Reverse(self.unflat(w)));
                }
            }
        }
        if order.len() < n {
            let stuck = (0..n).filter(|&i| indeg[i] > 0).map(|i| self.label(self.unflat(i)).clone()).collect();
            return Err(QnError::OrderCycleDetected(stuck));
        }
        let words = n.div_ceil(64);
        let mut below = vec![vec![0u64; words]; n];
        for &c in order.iter().rev() {
            let u = self.flat(c);
            let mut acc = vec![0u64; words];
            for &w in &succ[u] {
                acc[w / 64] |= 1 << (w % 64);
                for (a, b) in acc.iter_mut().zip(&below[w]) {
                    *a |= b;
                }
            }
            below[u] = acc;
        }
        self.below = below;
        self.descending = order;
        Ok(())
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn chains(&self) -> &[Vec<VertexId>] {
        &self.chains
    }

    pub fn oblique(&self) -> &[(VertexId, VertexId)] {
        &self.oblique
    }

    pub fn chain_lengths(&self) -> Vec<usize> {
        self.chains.iter().map(Vec::len).collect()
    }

    pub fn candidate(&self) -> QnCandidate {
        QnCandidate { chains: self.chains.clone(), oblique: self.oblique.clone() }
    }

    pub fn label(&self, c: ChainVertex) -> &VertexId {
        &self.chains[c.chain][c.position]
    }

    pub fn locate(&self, v: &VertexId) -> Option<ChainVertex> {
        self.index.get(v).copied()
    }

    /// Generating pairs `(u, v)` meaning `u > v`.
    pub fn cover_relations(&self) -> &[(ChainVertex, ChainVertex)] {
        &self.covers
    }

    pub fn is_greater_at(&self, u: ChainVertex, v: ChainVertex) -> bool {
        let (u, v) = (self.flat(u), self.flat(v));
        self.below[u][v / 64] >> (v % 64) & 1 == 1
    }

    /// `u > v` in the transitive closure.
    pub fn is_greater(&self, u: &VertexId, v: &VertexId) -> Result<bool, QnError> {
        let cu = self.locate(u).ok_or_else(|| QnError::UnknownVertex(u.clone()))?;
        let cv = self.locate(v).ok_or_else(|| QnError::UnknownVertex(v.clone()))?;
        Ok(self.is_greater_at(cu, cv))
    }

    /// A linear extension listed from the top: every entry is maximal among
    /// the entries after it. Ties go to the smaller chain index, then the
    /// smaller position.
    pub fn descending_order(&self) -> &[ChainVertex] {
        &self.descending
    }

    pub fn descending_labels(&self) -> Vec<VertexId> {
        self.descending.iter().map(|&c| self.label(c).clone()).collect()
    }

    /// Mutations `v_1, v_2, ..., v_{k-ℓ+1}` down the chain of `v = v_ℓ`.
    pub fn associated_sequence(&self, v: ChainVertex) -> MutationSequence {
        let chain = &self.chains[v.chain];
        MutationSequence::from_steps_unchecked(chain[..chain.len() - v.position].to_vec())
    }

    /// Associated sequences concatenated along the descending order.
    pub fn theorem_mgs(&self) -> MutationSequence {
        let mut steps = Vec::with_capacity(self.expected_length());
        for &c in &self.descending {
            steps.extend(self.associated_sequence(c).into_steps());
        }
        MutationSequence::from_steps_unchecked(steps)
    }

    /// `Σ k(k+1)/2` over the chain lengths.
    pub fn expected_length(&self) -> usize {
        self.chains.iter().map(|c| c.len() * (c.len() + 1) / 2).sum()
    }

    /// The sequence for two chains written directly from the zigzag: walk
    /// the path, mutating up each chain to the path vertex, then finish the
    /// chain the path does not end on, then the one it ends on.
    pub fn q2_mgs(&self) -> Result<MutationSequence, QnError> {
        if self.chains.len() != 2 {
            return Err(QnError::NotTwoChains(self.chains.len()));
        }
        let path = self.zigzag_path(0, 1);
        let mut next = [0usize; 2];
        let mut order = Vec::new();
        let mut climb = |chain: usize, upto: usize, order: &mut Vec<ChainVertex>| {
            while next[chain] <= upto {
                order.push(ChainVertex { chain, position: next[chain] });
                next[chain] += 1;
            }
        };
        for c in &path {
            climb(c.chain, c.position, &mut order);
        }
        let last = path.last().expect("two connected chains share a zigzag").chain;
        climb(1 - last, self.chains[1 - last].len() - 1, &mut order);
        climb(last, self.chains[last].len() - 1, &mut order);
        let mut steps = Vec::new();
        for c in order {
            steps.extend(self.associated_sequence(c).into_steps());
        }
        Ok(MutationSequence::from_steps_unchecked(steps))
    }

    fn zigzag_path(&self, a: usize, b: usize) -> Vec<ChainVertex> {
        let arrows: Vec<(ChainVertex, ChainVertex)> = self
            .oblique
            .iter()
            .map(|(u, v)| (self.index[u], self.index[v]))
            .filter(|(u, v)| (u.chain == a && v.chain == b) || (u.chain == b && v.chain == a))
            .collect();
        if arrows.is_empty() {
            return Vec::new();
        }
        trace_path(&arrows).unwrap_or_else(|_| unreachable!("validated zigzag"))
    }

    /// Replays [`Self::theorem_mgs`] from the framed quiver and checks, before
    /// each mutation at `v`: arrows from mutable vertices of its own chain
    /// point into `v`, arrows to mutable vertices of other chains leave `v`,
    /// and arrows to frozen vertices leave `v`. Returns the first failing
    /// step.
    pub fn check_local_shape(&self) -> Result<(), LocalShapeFailure> {
        let mut state = frame(&self.quiver);
        for (index, v) in self.theorem_mgs().steps().iter().enumerate() {
            let q = state.quiver();
            let k = q.index_of(v).expect("vertex is in the framing");
            let own = self.index[v].chain;
            for u in q.neighbors(k) {
                let b = q.b(k, u);
                let ok = if state.is_frozen_index(u) {
                    b > 0
                } else if self.index[&q.vertices()[u]].chain == own {
                    b < 0
                } else {
                    b > 0
                };
                if !ok {
                    return Err(LocalShapeFailure { index, vertex: v.clone(), neighbor: q.vertices()[u].clone() });
                }
            }
            state = state.mutate_index(k).expect("chain vertices are mutable");
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("step {index}: arrow between {vertex} and {neighbor} points the wrong way")]
pub struct LocalShapeFailure {
    pub index: usize,
    pub vertex: VertexId,
    pub neighbor: VertexId,
}

/// Cover pairs contributed by one zigzag. `path` starts on chain `i`; the
/// pattern depends on which chain the path ends on.
fn zigzag_covers(path: &[ChainVertex], lens: &[usize]) -> Vec<(ChainVertex, ChainVertex)> {
    let i = path[0].chain;
    let j = path[1].chain;
    // One-based positions, as in the usual notation.
    let mut a: Vec<usize> = vec![0];
    let mut b: Vec<usize> = vec![0];
    for c in path {
        if c.chain == i {
            a.push(c.position + 1);
        } else {
            b.push(c.position + 1);
        }
    }
    let n = a.len() - 1;
    let ends_in_j = path.last().unwrap().chain == j;
    // a_{n+1} is the top of chain i; the top of chain j is b_{n+1} when the
    // path ends on j and b_n otherwise.
    a.push(lens[i]);
    b.push(lens[j]);
    let vi = |p: usize| ChainVertex { chain: i, position: p - 1 };
    let vj = |p: usize| ChainVertex { chain: j, position: p - 1 };

    let mut lines: Vec<Vec<ChainVertex>> = Vec::new();
    let full = if ends_in_j { n } else { n - 1 };
    for l in 1..=full {
        let mut line = vec![vi(a[l])];
        line.extend((b[l - 1] + 1..=b[l]).map(vj));
        lines.push(line);
    }
    for l in 1..n {
        let mut line = vec![vj(b[l])];
        line.extend((a[l] + 1..=a[l + 1]).map(vi));
        lines.push(line);
    }
    let last = if ends_in_j {
        let mut line = vec![vj(b[n])];
        line.extend((a[n] + 1..=a[n + 1]).map(vi));
        line.extend((b[n] + 1..=b[n + 1]).map(vj));
        line
    } else {
        let mut line = vec![vi(a[n])];
        line.extend((b[n - 1] + 1..=b[n]).map(vj));
        line.extend((a[n] + 1..=a[n + 1]).map(vi));
        line
    };
    lines.push(last);
    lines.iter().flat_map(|line| line.windows(2).map(|w| (w[0], w[1]))).collect()
}

/// Parameters for [`random_qn`].
#[derive(Clone, Copy, Debug)]
pub struct RandomQnParams {
    pub max_chains: usize,
    pub max_vertices: usize,
}

impl Default for RandomQnParams {
    fn default() -> Self {
        RandomQnParams { max_chains: 4, max_vertices: 12 }
    }
}

/// A random valid decomposition: chain count in `1..=max_chains`, lengths
/// summing to at most `max_vertices`, a random tree of chains and a random
/// zigzag on every tree edge. Labels are `"c{chain}_{position}"`, one-based.
pub fn random_qn<R: Rng + ?Sized>(rng: &mut R, params: RandomQnParams) -> QnDecomposition {
    let max_chains = params.max_chains.max(1).min(params.max_vertices.max(1));
    let n_chains = rng.gen_range(1..=max_chains);
    let budget = params.max_vertices.max(n_chains);
    let total = rng.gen_range(n_chains..=budget);
    // Random composition of `total` into `n_chains` positive parts.
    let mut cuts: Vec<usize> = sample(rng, total - 1, n_chains - 1).into_iter().map(|x| x + 1).collect();
    cuts.sort_unstable();
    cuts.insert(0, 0);
    cuts.push(total);
    let lens: Vec<usize> = cuts.windows(2).map(|w| w[1] - w[0]).collect();
    let chains: Vec<Vec<VertexId>> = lens
        .iter()
        .enumerate()
        .map(|(c, &k)| (1..=k).map(|p| VertexId::new(format!("c{}_{p}", c + 1))).collect())
        .collect();

    let mut oblique = Vec::new();
    for c in 1..n_chains {
        let parent = rng.gen_range(0..c);
        let (x, y) = if rng.gen_bool(0.5) { (parent, c) } else { (c, parent) };
        // A path with L vertices puts ceil(L/2) on x and floor(L/2) on y.
        let max_len = (2 * lens[x]).min(2 * lens[y] + 1);
        let l = rng.gen_range(2..=max_len);
        let on_x = pick_sorted(rng, lens[x], l.div_ceil(2));
        let on_y = pick_sorted(rng, lens[y], l / 2);
        let mut path = Vec::with_capacity(l);
        for t in 0..l {
            path.push(if t % 2 == 0 { &chains[x][on_x[t / 2]] } else { &chains[y][on_y[t / 2]] });
        }
        for w in path.windows(2) {
            oblique.push((w[0].clone(), w[1].clone()));
        }
    }
    QnCandidate { chains, oblique }.build().expect("random construction is valid")
}

fn pick_sorted<R: Rng + ?Sized>(rng: &mut R, n: usize, k: usize) -> Vec<usize> {
    let mut v = sample(rng, n, k).into_vec();
    v.sort_unstable();
    v
}
