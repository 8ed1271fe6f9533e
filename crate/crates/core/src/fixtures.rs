//! Small worked examples used by the tests, the guide and the command line
//! tool.
//!
//! | name     | what it is                                                        |
//! |----------|-------------------------------------------------------------------|
//! | `fig4`   | the 12-vertex connected window of the `B_2` Hernandez–Leclerc quiver |
//! | `fig6`   | three chains `a`, `b`, `c` illustrating the partial order          |
//! | `fig7`   | a tree of five oriented cycles on 17 vertices                     |
//! | `fig8`   | three oriented triangles glued in a path, type A                  |
//! | `fig10a` – `fig10d` | one type D quiver for each of the four shapes          |
//!
//! The sequences are stored in execution order.

use crate::families::hl::{hl_component, hl_decompose, HlVertex};
use crate::families::cartan::{cartan_data, DynkinType};
use crate::qn::{QnCandidate, QnDecomposition};
use crate::quiver::{Arrow, Quiver, VertexId};
use crate::sequence::MutationSequence;

/// Names accepted by [`by_name`].
pub const NAMES: &[&str] = &["fig4", "fig6", "fig7", "fig8", "fig10a", "fig10b", "fig10c", "fig10d"];

fn quiver(n: usize, arrows: &[(usize, usize)]) -> Quiver {
    Quiver::new(1..=n, arrows.iter().map(|&(a, b)| Arrow::new(a, b, 1))).expect("fixture is a valid quiver")
}

/// The connected window of `B_2` spanned by `(1,10)` inside `r ∈ [-1, 10]`.
pub fn fig4() -> Quiver {
    let b2 = cartan_data(DynkinType::B, 2).expect("B2");
    hl_component(&b2, -1, 10, HlVertex::new(1, 10)).expect("non-empty window")
}

/// Chains `(1,10),(1,6),(1,2)`; `(1,8),(1,4),(1,0)`; `(2,9)..(2,-1)`.
pub fn fig4_decomposition() -> QnDecomposition {
    let b2 = cartan_data(DynkinType::B, 2).expect("B2");
    hl_decompose(&fig4(), &b2).expect("window decomposes")
}

/// A 33-step maximal green sequence of [`fig4`], written as a composition.
pub fn fig4_sequence() -> MutationSequence {
    let comp: [(usize, i64); 33] = [
        (2, 9), (1, 8), (2, 7), (2, 9), (1, 10), (2, 5), (2, 7), (2, 9), (1, 4), (1, 8), (2, 3),
        (2, 5), (2, 7), (2, 9), (1, 6), (1, 10), (2, 1), (2, 3), (2, 5), (2, 7), (2, 9), (1, 0),
        (1, 4), (1, 8), (2, -1), (2, 1), (2, 3), (2, 5), (2, 7), (2, 9), (1, 2), (1, 6), (1, 10),
    ];
    MutationSequence::from_composition(comp.iter().map(|&(i, r)| HlVertex::new(i, r).label()))
        .expect("no immediate repeats")
}

pub fn fig6_decomposition() -> QnDecomposition {
    let chain = |p: &str, k: usize| (1..=k).map(|i| format!("{p}{i}")).collect::<Vec<_>>();
    QnCandidate::new(
        [chain("a", 6), chain("b", 6), chain("c", 5)],
        [
            ("b2", "a2"), ("a2", "b5"), ("b5", "a5"),
            ("c1", "b3"), ("b3", "c3"), ("c3", "b4"), ("b4", "c4"),
        ],
    )
    .build()
    .expect("fixture is valid")
}

pub fn fig6() -> Quiver {
    fig6_decomposition().quiver().clone()
}

pub fn fig7() -> Quiver {
    quiver(
        17,
        &[
            (1, 5), (5, 4), (4, 3), (3, 2), (2, 1),
            (2, 8), (8, 7), (7, 6), (6, 2),
            (5, 10), (10, 9), (9, 5),
            (3, 14), (14, 13), (13, 12), (12, 11), (11, 3),
            (13, 17), (17, 16), (16, 15), (15, 13),
        ],
    )
}

/// Chains `[1,2,3,4]`, `[5]`, `[9,10]`, `[6,7,8]`, `[11,..,14]`, `[15,16,17]`.
pub fn fig7_decomposition() -> QnDecomposition {
    let chains: Vec<Vec<VertexId>> = [&[1, 2, 3, 4][..], &[5], &[9, 10], &[6, 7, 8], &[11, 12, 13, 14], &[15, 16, 17]]
        .iter()
        .map(|c| c.iter().map(|&v: &usize| VertexId::from(v)).collect())
        .collect();
    QnCandidate::from_quiver(&fig7(), chains).expect("fixture is valid")
}

/// A 36-step maximal green sequence of [`fig7`].
pub fn fig7_sequence() -> MutationSequence {
    MutationSequence::new([
        15usize, 16, 17, 11, 12, 13, 14, 6, 7, 8, 1, 2, 3, 4, 9, 10, 5, 9, 1, 2, 3, 6, 7, 6, 1, 2, 11, 12, 13, 11,
        12, 15, 16, 15, 11, 1,
    ])
    .expect("no immediate repeats")
}

pub fn fig8() -> Quiver {
    quiver(7, &[(1, 2), (2, 3), (3, 1), (3, 4), (4, 5), (5, 3), (5, 6), (6, 7), (7, 5)])
}

/// An 11-step sequence for [`fig8`].
pub fn fig8_sequence_11() -> MutationSequence {
    MutationSequence::from_composition([3usize, 6, 5, 3, 2, 4, 7, 5, 3, 1, 2]).expect("no immediate repeats")
}

/// A 12-step sequence for [`fig8`].
pub fn fig8_sequence_12() -> MutationSequence {
    MutationSequence::from_composition([3usize, 6, 2, 1, 6, 5, 4, 3, 6, 5, 7, 6]).expect("no immediate repeats")
}

/// A 13-step sequence for [`fig8`].
pub fn fig8_sequence_13() -> MutationSequence {
    MutationSequence::from_composition([1usize, 3, 5, 7, 6, 1, 3, 5, 4, 1, 3, 2, 1]).expect("no immediate repeats")
}

/// Type I: leaves 1 and 3 on vertex 2.
pub fn fig10a() -> Quiver {
    quiver(5, &[(1, 2), (4, 2), (2, 3), (2, 5), (5, 4)])
}

/// Type II: triangles 7 -> 6 -> 5 -> 7 and 7 -> 6 -> 8 -> 7.
pub fn fig10b() -> Quiver {
    quiver(
        8,
        &[(1, 6), (6, 2), (2, 1), (6, 5), (6, 8), (5, 7), (8, 7), (7, 6), (3, 7), (7, 4), (4, 3)],
    )
}

/// Type III: the oriented square 3 -> 6 -> 5 -> 4 -> 3.
pub fn fig10c() -> Quiver {
    quiver(8, &[(4, 3), (1, 3), (7, 5), (3, 2), (3, 6), (5, 4), (5, 8), (2, 1), (8, 7), (6, 5)])
}

/// Type IV: central cycle 5 -> 4 -> 8 -> 7 -> 6 -> 5 with a spike at 3.
pub fn fig10d() -> Quiver {
    quiver(8, &[(4, 8), (1, 3), (5, 4), (5, 3), (3, 6), (3, 2), (2, 1), (6, 5), (8, 7), (7, 6)])
}

/// Looks a quiver fixture up by name.
pub fn by_name(name: &str) -> Option<Quiver> {
    Some(match name {
        "fig4" => fig4(),
        "fig6" => fig6(),
        "fig7" => fig7(),
        "fig8" => fig8(),
        "fig10a" => fig10a(),
        "fig10b" => fig10b(),
        "fig10c" => fig10c(),
        "fig10d" => fig10d(),
        _ => return None,
    })
}

/// The decomposition that comes with a fixture, if there is a canonical one.
pub fn decomposition_by_name(name: &str) -> Option<QnDecomposition> {
    Some(match name {
        "fig4" => fig4_decomposition(),
        "fig6" => fig6_decomposition(),
        "fig7" => fig7_decomposition(),
        _ => return None,
    })
}
