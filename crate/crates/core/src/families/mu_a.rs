//! Quivers mutation equivalent to a type A Dynkin quiver.
//!
//! Recognition uses the classical local description: connected, no
//! multiple arrows, every cycle of the underlying graph is an oriented
//! triangle, every vertex has at most four neighbours, a vertex with four
//! neighbours lies on two triangles that use all four of its arrows, and a
//! vertex with three neighbours lies on exactly one triangle, whose two
//! arrows it uses, with the third arrow on no triangle.

use std::collections::BTreeSet;

use super::cycles::{enumerate_simple_cycles, Cycle, DEFAULT_CYCLE_BUDGET};
use super::oriented::peel;
use super::FamilyError;
use crate::qn::{QnCandidate, QnDecomposition};
use crate::quiver::{Quiver, VertexId};

/// On success returns the triangles (each oriented, smallest index first).
pub fn mu_a_check(q: &Quiver) -> Result<Vec<Cycle>, FamilyError> {
    let fail = |why: String| Err(FamilyError::NotMuA(why));
    if q.is_empty() {
        return fail("empty quiver".into());
    }
    if !q.is_connected() {
        return fail("not connected".into());
    }
    if let Some(a) = q.arrows().into_iter().find(|a| a.mult > 1) {
        return fail(format!("{} arrows from {} to {}", a.mult, a.from, a.to));
    }
    let cycles = enumerate_simple_cycles(q, DEFAULT_CYCLE_BUDGET)?;
    if let Some(c) = cycles.iter().find(|c| c.len() != 3 || !c.oriented) {
        let names: Vec<String> = c.labels(q).iter().map(|v| v.to_string()).collect();
        return fail(format!("cycle {} is not an oriented triangle", names.join("-")));
    }
    for v in 0..q.len() {
        let deg = q.degree(v);
        let on: Vec<&Cycle> = cycles.iter().filter(|c| c.contains(v)).collect();
        let covered: BTreeSet<usize> = on.iter().flat_map(|c| c.indices.iter().copied()).filter(|&w| w != v).collect();
        let label = &q.vertices()[v];
        let ok = match deg {
            0..=2 => true,
            3 => on.len() == 1,
            4 => on.len() == 2 && covered.len() == 4,
            _ => false,
        };
        if !ok {
            return fail(format!("vertex {label} has {deg} neighbours on {} triangles", on.len()));
        }
    }
    Ok(cycles)
}

pub fn is_mu_a(q: &Quiver) -> bool {
    mu_a_check(q).is_ok()
}

fn connecting(q: &Quiver, cycles: &[Cycle], v: usize) -> bool {
    match q.degree(v) {
        0 | 1 => true,
        2 => cycles.iter().any(|c| c.contains(v)),
        _ => false,
    }
}

/// Vertices with at most two neighbours that lie on a triangle when they
/// have exactly two.
pub fn connecting_vertices(q: &Quiver) -> Result<Vec<VertexId>, FamilyError> {
    let cycles = mu_a_check(q)?;
    Ok((0..q.len()).filter(|&v| connecting(q, &cycles, v)).map(|v| q.vertices()[v].clone()).collect())
}

/// Peels triangles: the first triangle gives a chain of two plus a
/// singleton, every further triangle a chain of two, every other vertex a
/// singleton. Each pinned vertex ends up alone in its chain.
pub fn mu_a_decompose(q: &Quiver, pinned: &[VertexId]) -> Result<QnDecomposition, FamilyError> {
    let cycles = mu_a_check(q)?;
    let mut on_triangle = Vec::new();
    let mut root = None;
    for p in pinned {
        let v = q.index_of(p).ok_or_else(|| FamilyError::NotMuA(format!("unknown vertex {p}")))?;
        if !connecting(q, &cycles, v) {
            return Err(FamilyError::PinnedNotConnecting(p.clone()));
        }
        if cycles.iter().any(|c| c.contains(v)) {
            on_triangle.push(v);
        } else if root.is_none() {
            root = Some(v);
        }
    }
    on_triangle.sort_unstable();
    on_triangle.dedup();
    match on_triangle[..] {
        [] => {}
        [v] => root = Some(v),
        _ => return Err(FamilyError::PinningInfeasible),
    }
    let chains = peel(q, &cycles, root).ok_or_else(|| FamilyError::NotMuA("triangles do not form a tree".into()))?;
    Ok(QnCandidate::from_quiver(q, chains)?)
}
