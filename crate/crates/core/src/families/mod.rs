//! Quiver families that come with an explicit chain decomposition.

mod auto;
pub mod cartan;
pub mod cycles;
pub mod hl;
pub mod mu_a;
pub mod mu_d;
pub mod oriented;

use thiserror::Error;

use crate::qn::{QnCandidate, QnDecomposition, QnError};
use crate::quiver::{Quiver, QuiverError, VertexId};

pub use auto::{auto_decompose, Family};
pub use cartan::{cartan_data, CartanData, DynkinType};
pub use cycles::{enumerate_simple_cycles, Cycle};
pub use hl::{hl_component, hl_decompose, hl_decompose_by_labels, hl_quiver, hl_window, HlVertex};
pub use mu_a::{connecting_vertices, is_mu_a, mu_a_check, mu_a_decompose};
pub use mu_d::{classify_mu_d, mu_d_decompose, MuDClassification, MuDType};
pub use oriented::all_cycles_oriented_decompose;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("unsupported Dynkin type {0}")]
    UnsupportedType(String),
    #[error("the window is empty")]
    EmptyWindow,
    #[error("vertex labels are inconsistent with the family: {0}")]
    InconsistentLabels(String),
    #[error("decomposition failed validation: {0}")]
    ValidationFailed(#[from] QnError),
    #[error("quiver is not mutation equivalent to type A: {0}")]
    NotMuA(String),
    #[error("quiver matches none of the type D shapes")]
    NotMuD,
    #[error("pinned vertex {0} is not a connecting vertex")]
    PinnedNotConnecting(VertexId),
    #[error("cannot put all pinned vertices in singleton chains")]
    PinningInfeasible,
    #[error("more than {0} simple cycles")]
    CycleBudgetExceeded(usize),
    #[error(transparent)]
    Quiver(#[from] QuiverError),
}

/// The linearly oriented path `1 <- 2 <- ... <- n` as a single chain.
pub fn linear_a(n: usize) -> (Quiver, QnDecomposition) {
    assert!(n >= 1, "linear_a needs at least one vertex");
    let chain: Vec<VertexId> = (1..=n).map(VertexId::from).collect();
    let qn = QnCandidate { chains: vec![chain], oblique: vec![] }
        .build()
        .expect("a single chain is always valid");
    (qn.quiver().clone(), qn)
}

/// Arrow list helper shared by the recognizers' tests.
#[cfg(test)]
pub(crate) fn quiver_from(pairs: &[(&str, &str)]) -> Quiver {
    let mut vs: Vec<&str> = pairs.iter().flat_map(|&(a, b)| [a, b]).collect();
    vs.sort_unstable();
    vs.dedup();
    Quiver::new(vs, pairs.iter().map(|&(a, b)| crate::quiver::Arrow::new(a, b, 1))).unwrap()
}
