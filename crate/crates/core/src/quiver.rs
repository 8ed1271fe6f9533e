//! Quivers, ice quivers and Fomin–Zelevinsky mutation.
//!
//! A [`Quiver`] stores its arrows as a skew-symmetric integer matrix
//! `b[u][v] = #(u -> v) - #(v -> u)`. Because the matrix is skew-symmetric
//! there is no way to represent a loop or an oriented 2-cycle, which is
//! exactly the class of quivers mutation is defined on.
//!
//! Vertex labels are opaque strings. Every quiver keeps its vertices sorted
//! lexicographically, so iteration order (and therefore every derived
//! output) is deterministic.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Label of a quiver vertex.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexId(String);

impl VertexId {
    pub fn new(label: impl Into<String>) -> Self {
        VertexId(label.into())
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<&str> for VertexId {
    fn from(s: &str) -> Self {
        VertexId(s.to_owned())
    }
}

impl From<String> for VertexId {
    fn from(s: String) -> Self {
        VertexId(s)
    }
}

impl From<&VertexId> for VertexId {
    fn from(v: &VertexId) -> Self {
        v.clone()
    }
}

impl From<usize> for VertexId {
    fn from(n: usize) -> Self {
        VertexId(n.to_string())
    }
}

impl From<i32> for VertexId {
    fn from(n: i32) -> Self {
        VertexId(n.to_string())
    }
}

/// `mult` parallel arrows `from -> to`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Arrow {
    pub from: VertexId,
    pub to: VertexId,
    pub mult: u32,
}

impl Arrow {
    pub fn new(from: impl Into<VertexId>, to: impl Into<VertexId>, mult: u32) -> Self {
        Arrow { from: from.into(), to: to.into(), mult }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QuiverError {
    #[error("loop arrow at vertex {0}")]
    LoopArrow(VertexId),
    #[error("arrows in both directions between {0} and {1}")]
    TwoCycle(VertexId, VertexId),
    #[error("duplicate vertex {0}")]
    DuplicateVertex(VertexId),
    #[error("arrow endpoint {0} is not a vertex")]
    UnknownEndpoint(VertexId),
    #[error("arrow {0} -> {1} has multiplicity 0")]
    ZeroMultiplicity(VertexId, VertexId),
    #[error("unknown vertex {0}")]
    UnknownVertex(VertexId),
    #[error("frozen vertices {0} and {1} are joined by an arrow")]
    FrozenArrow(VertexId, VertexId),
    #[error("ice quiver has no mutable vertex")]
    NoMutableVertex,
    #[error("cannot mutate at frozen vertex {0}")]
    FrozenVertexMutation(VertexId),
    #[error("vertex {0} has arrows both to and from frozen vertices")]
    NotSignCoherent(VertexId),
    #[error("vertex {0} has no arrows to frozen vertices")]
    ZeroRow(VertexId),
    #[error("vertex {0} is frozen and has no color")]
    FrozenVertexColor(VertexId),
    #[error("step {index} mutates {vertex}, which is not green")]
    NotGreenAtStep { index: usize, vertex: VertexId },
    #[error("steps {index} and {} both mutate {vertex}", index + 1)]
    ConsecutiveRepeat { index: usize, vertex: VertexId },
    #[error("restricted sequence repeats {vertex} at steps {index} and {}", index + 1)]
    ConsecutiveRepeatAfterRestriction { index: usize, vertex: VertexId },
}

/// A finite quiver without loops or oriented 2-cycles.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Quiver {
    vertices: Arc<[VertexId]>,
    b: Vec<i64>,
}

impl fmt::Debug for Quiver {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Quiver")
            .field("vertices", &self.vertices)
            .field("arrows", &self.arrows())
            .finish()
    }
}

impl Quiver {
    /// Assembles a quiver from a vertex list and arrows. Repeated entries for
    /// the same ordered pair add up.
    pub fn new<V, A>(vertices: V, arrows: A) -> Result<Quiver, QuiverError>
    where
        V: IntoIterator,
        V::Item: Into<VertexId>,
        A: IntoIterator<Item = Arrow>,
    {
        let mut labels: Vec<VertexId> = vertices.into_iter().map(Into::into).collect();
        labels.sort();
        for w in labels.windows(2) {
            if w[0] == w[1] {
                return Err(QuiverError::DuplicateVertex(w[0].clone()));
            }
        }
        let n = labels.len();
        let mut b = vec![0i64; n * n];
        let mut fwd = vec![false; n * n];
        let find = |v: &VertexId| {
            labels
                .binary_search(v)
                .map_err(|_| QuiverError::UnknownEndpoint(v.clone()))
        };
        for arrow in arrows {
            let u = find(&arrow.from)?;
            let v = find(&arrow.to)?;
            if u == v {
                return Err(QuiverError::LoopArrow(arrow.from));
            }
            if arrow.mult == 0 {
                return Err(QuiverError::ZeroMultiplicity(arrow.from, arrow.to));
            }
            if fwd[v * n + u] {
                return Err(QuiverError::TwoCycle(arrow.from, arrow.to));
            }
            fwd[u * n + v] = true;
            b[u * n + v] += i64::from(arrow.mult);
            b[v * n + u] -= i64::from(arrow.mult);
        }
        Ok(Quiver { vertices: labels.into(), b })
    }

    /// Builds a quiver directly from a skew-symmetric matrix indexed by the
    /// (already sorted, distinct) labels.
    pub(crate) fn from_parts(vertices: Arc<[VertexId]>, b: Vec<i64>) -> Quiver {
        debug_assert_eq!(b.len(), vertices.len() * vertices.len());
        Quiver { vertices, b }
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub(crate) fn shared_vertices(&self) -> Arc<[VertexId]> {
        self.vertices.clone()
    }

    pub fn index_of(&self, v: &VertexId) -> Option<usize> {
        self.vertices.binary_search(v).ok()
    }

    pub fn contains(&self, v: &VertexId) -> bool {
        self.index_of(v).is_some()
    }

    /// Matrix entry by vertex index.
    #[inline]
    pub fn b(&self, u: usize, v: usize) -> i64 {
        self.b[u * self.len() + v]
    }

    pub(crate) fn matrix(&self) -> &[i64] {
        &self.b
    }

    /// Matrix entry by label; `None` if either label is unknown.
    pub fn entry(&self, u: &VertexId, v: &VertexId) -> Option<i64> {
        Some(self.b(self.index_of(u)?, self.index_of(v)?))
    }

    /// Number of arrows `u -> v` (zero if they point the other way).
    pub fn arrow_count(&self, u: &VertexId, v: &VertexId) -> u32 {
        self.entry(u, v).map_or(0, |x| x.max(0) as u32)
    }

    /// All arrows, sorted by `(from, to)`.
    pub fn arrows(&self) -> Vec<Arrow> {
        let n = self.len();
        let mut out = Vec::new();
        for u in 0..n {
            for v in 0..n {
                let m = self.b(u, v);
                if m > 0 {
                    out.push(Arrow {
                        from: self.vertices[u].clone(),
                        to: self.vertices[v].clone(),
                        mult: m as u32,
                    });
                }
            }
        }
        out
    }

    /// Indices of vertices joined to `u` by at least one arrow.
    pub fn neighbors(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.len()).filter(move |&v| self.b(u, v) != 0)
    }

    pub fn degree(&self, u: usize) -> usize {
        self.neighbors(u).count()
    }

    pub fn is_connected(&self) -> bool {
        if self.is_empty() {
            return true;
        }
        self.component_indices(0).len() == self.len()
    }

    fn component_indices(&self, seed: usize) -> Vec<usize> {
        let mut seen = vec![false; self.len()];
        let mut stack = vec![seed];
        seen[seed] = true;
        let mut out = Vec::new();
        while let Some(u) = stack.pop() {
            out.push(u);
            for v in self.neighbors(u) {
                if !seen[v] {
                    seen[v] = true;
                    stack.push(v);
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// Vertex sets of the connected components, each sorted, ordered by their
    /// smallest label.
    pub fn components(&self) -> Vec<Vec<VertexId>> {
        let mut seen = vec![false; self.len()];
        let mut out = Vec::new();
        for s in 0..self.len() {
            if seen[s] {
                continue;
            }
            let comp = self.component_indices(s);
            for &u in &comp {
                seen[u] = true;
            }
            out.push(comp.into_iter().map(|u| self.vertices[u].clone()).collect());
        }
        out
    }

    /// The connected component containing `seed`, as a full subquiver.
    pub fn connected_component(&self, seed: &VertexId) -> Result<Quiver, QuiverError> {
        let s = self
            .index_of(seed)
            .ok_or_else(|| QuiverError::UnknownVertex(seed.clone()))?;
        let keep: Vec<VertexId> = self
            .component_indices(s)
            .into_iter()
            .map(|u| self.vertices[u].clone())
            .collect();
        self.full_subquiver(&keep)
    }

    /// Induced subquiver on `keep`.
    pub fn full_subquiver<'a, I>(&self, keep: I) -> Result<Quiver, QuiverError>
    where
        I: IntoIterator<Item = &'a VertexId>,
    {
        let idx = self.indices_of(keep)?;
        let labels: Vec<VertexId> = idx.iter().map(|&i| self.vertices[i].clone()).collect();
        let m = idx.len();
        let mut b = vec![0; m * m];
        for (a, &u) in idx.iter().enumerate() {
            for (c, &v) in idx.iter().enumerate() {
                b[a * m + c] = self.b(u, v);
            }
        }
        Ok(Quiver::from_parts(labels.into(), b))
    }

    /// Sorted, deduplicated indices for a set of labels.
    fn indices_of<'a, I>(&self, keep: I) -> Result<Vec<usize>, QuiverError>
    where
        I: IntoIterator<Item = &'a VertexId>,
    {
        let mut idx = Vec::new();
        for v in keep {
            idx.push(
                self.index_of(v)
                    .ok_or_else(|| QuiverError::UnknownVertex(v.clone()))?,
            );
        }
        idx.sort_unstable();
        idx.dedup();
        Ok(idx)
    }

    /// Mutation of the quiver with every vertex mutable.
    pub fn mutate(&self, k: &VertexId) -> Result<Quiver, QuiverError> {
        let iq = IceQuiver::new(self.clone(), std::iter::empty::<VertexId>())?;
        Ok(iq.mutate(k)?.quiver)
    }
}

/// The three cases of the matrix mutation rule. `frozen_pair` forces zero
/// between two frozen vertices.
#[inline]
pub(crate) fn mutated_entry(b_uv: i64, b_uk: i64, b_kv: i64, touches_k: bool, frozen_pair: bool) -> i64 {
    if touches_k {
        -b_uv
    } else if frozen_pair {
        0
    } else {
        b_uv + b_uk.signum() * (b_uk * b_kv).max(0)
    }
}

/// Colors of a mutable vertex of an ice quiver reached from a framed quiver.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Color {
    Green,
    Red,
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Color::Green => "green",
            Color::Red => "red",
        })
    }
}

/// A quiver together with a set of frozen vertices that carry no arrows
/// among themselves.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IceQuiver {
    quiver: Quiver,
    frozen: Arc<[bool]>,
}

impl IceQuiver {
    pub fn new<I>(quiver: Quiver, frozen: I) -> Result<IceQuiver, QuiverError>
    where
        I: IntoIterator,
        I::Item: Into<VertexId>,
    {
        let n = quiver.len();
        let mut mask = vec![false; n];
        for f in frozen {
            let f = f.into();
            let i = quiver
                .index_of(&f)
                .ok_or_else(|| QuiverError::UnknownVertex(f.clone()))?;
            mask[i] = true;
        }
        for u in 0..n {
            for v in (u + 1)..n {
                if mask[u] && mask[v] && quiver.b(u, v) != 0 {
                    return Err(QuiverError::FrozenArrow(
                        quiver.vertices[u].clone(),
                        quiver.vertices[v].clone(),
                    ));
                }
            }
        }
        if mask.iter().all(|&f| f) {
            return Err(QuiverError::NoMutableVertex);
        }
        Ok(IceQuiver { quiver, frozen: mask.into() })
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn into_quiver(self) -> Quiver {
        self.quiver
    }

    pub fn is_frozen_index(&self, i: usize) -> bool {
        self.frozen[i]
    }

    pub fn is_frozen(&self, v: &VertexId) -> bool {
        self.quiver.index_of(v).is_some_and(|i| self.frozen[i])
    }

    pub fn frozen_vertices(&self) -> Vec<VertexId> {
        self.select(true)
    }

    pub fn mutable_vertices(&self) -> Vec<VertexId> {
        self.select(false)
    }

    fn select(&self, frozen: bool) -> Vec<VertexId> {
        self.quiver
            .vertices()
            .iter()
            .zip(self.frozen.iter())
            .filter(|(_, &f)| f == frozen)
            .map(|(v, _)| v.clone())
            .collect()
    }

    /// Mutation at vertex index `k`.
    pub fn mutate_index(&self, k: usize) -> Result<IceQuiver, QuiverError> {
        if self.frozen[k] {
            return Err(QuiverError::FrozenVertexMutation(self.quiver.vertices[k].clone()));
        }
        let n = self.quiver.len();
        let old = self.quiver.matrix();
        let mut b = vec![0i64; n * n];
        for u in 0..n {
            for v in 0..n {
                b[u * n + v] = mutated_entry(
                    old[u * n + v],
                    old[u * n + k],
                    old[k * n + v],
                    u == k || v == k,
                    self.frozen[u] && self.frozen[v],
                );
            }
        }
        Ok(IceQuiver {
            quiver: Quiver::from_parts(self.quiver.shared_vertices(), b),
            frozen: self.frozen.clone(),
        })
    }

    pub fn mutate(&self, k: &VertexId) -> Result<IceQuiver, QuiverError> {
        let i = self
            .quiver
            .index_of(k)
            .ok_or_else(|| QuiverError::UnknownVertex(k.clone()))?;
        self.mutate_index(i)
    }

    pub fn color_index(&self, v: usize) -> Result<Color, QuiverError> {
        let label = || self.quiver.vertices[v].clone();
        if self.frozen[v] {
            return Err(QuiverError::FrozenVertexColor(label()));
        }
        let (mut out, mut inc) = (false, false);
        for f in (0..self.quiver.len()).filter(|&f| self.frozen[f]) {
            let x = self.quiver.b(v, f);
            out |= x > 0;
            inc |= x < 0;
        }
        match (out, inc) {
            (true, false) => Ok(Color::Green),
            (false, true) => Ok(Color::Red),
            (true, true) => Err(QuiverError::NotSignCoherent(label())),
            (false, false) => Err(QuiverError::ZeroRow(label())),
        }
    }

    /// Green when every frozen arrow at `v` points away from it, red when
    /// every one points toward it.
    pub fn color(&self, v: &VertexId) -> Result<Color, QuiverError> {
        let i = self
            .quiver
            .index_of(v)
            .ok_or_else(|| QuiverError::UnknownVertex(v.clone()))?;
        self.color_index(i)
    }

    /// Colors of all mutable vertices, in vertex order.
    pub fn colors(&self) -> Result<Vec<(VertexId, Color)>, QuiverError> {
        (0..self.quiver.len())
            .filter(|&i| !self.frozen[i])
            .map(|i| Ok((self.quiver.vertices[i].clone(), self.color_index(i)?)))
            .collect()
    }

    pub fn all_red(&self) -> Result<bool, QuiverError> {
        Ok(self.colors()?.iter().all(|(_, c)| *c == Color::Red))
    }

    /// Induced ice quiver on `keep`; the frozen set is intersected.
    pub fn full_subquiver<'a, I>(&self, keep: I) -> Result<IceQuiver, QuiverError>
    where
        I: IntoIterator<Item = &'a VertexId>,
    {
        let idx = self.quiver.indices_of(keep)?;
        let labels: Vec<&VertexId> = idx.iter().map(|&i| &self.quiver.vertices[i]).collect();
        let quiver = self.quiver.full_subquiver(labels.iter().copied())?;
        let frozen: Vec<bool> = idx.iter().map(|&i| self.frozen[i]).collect();
        Ok(IceQuiver { quiver, frozen: frozen.into() })
    }
}

/// Label of the frozen copy of `v`, primed until it does not collide.
fn frozen_label(v: &VertexId, taken: &BTreeSet<VertexId>) -> VertexId {
    let mut s = format!("{}'", v.as_str());
    while taken.contains(s.as_str()) {
        s.push('\'');
    }
    VertexId(s)
}

impl std::borrow::Borrow<str> for VertexId {
    fn borrow(&self) -> &str {
        &self.0
    }
}

fn attach_copies(q: &Quiver, outward: bool) -> IceQuiver {
    let mut taken: BTreeSet<VertexId> = q.vertices().iter().cloned().collect();
    let mut arrows = q.arrows();
    let mut frozen = Vec::with_capacity(q.len());
    for v in q.vertices() {
        let f = frozen_label(v, &taken);
        taken.insert(f.clone());
        arrows.push(if outward {
            Arrow::new(v.clone(), f.clone(), 1)
        } else {
            Arrow::new(f.clone(), v.clone(), 1)
        });
        frozen.push(f);
    }
    let quiver = Quiver::new(taken, arrows).expect("framing preserves quiver invariants");
    IceQuiver::new(quiver, frozen).expect("frozen copies are pairwise unconnected")
}

/// Framed quiver: one frozen copy `v'` per vertex with an arrow `v -> v'`.
pub fn frame(q: &Quiver) -> IceQuiver {
    attach_copies(q, true)
}

/// Coframed quiver: arrows `v' -> v`.
pub fn coframe(q: &Quiver) -> IceQuiver {
    attach_copies(q, false)
}
