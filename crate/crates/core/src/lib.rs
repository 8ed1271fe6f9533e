//! Maximal green sequences for quivers built from vertical chains.
//!
//! The crate is organised bottom-up:
//!
//! * [`quiver`]: quivers, ice quivers, framing and mutation;
//! * [`sequence`]: mutation sequences and the green / maximal green verdicts;
//! * [`qn`]: quivers made of vertical chains joined by oblique zigzags,
//!   their partial order and the explicit maximal green sequence;
//! * [`families`]: recognizers and generators that produce such chain
//!   decompositions for concrete quiver families;
//! * [`oracle`]: brute-force search used as ground truth;
//! * [`io`]: JSON and DOT formats;
//! * [`fixtures`]: small quivers used throughout the tests and the CLI.
//!
//! ```
//! use greenseq::families::linear_a;
//!
//! let (q, qn) = linear_a(3);
//! let mgs = qn.theorem_mgs();
//! assert_eq!(mgs.len(), 6);
//! assert!(greenseq::is_maximal_green_sequence(&q, mgs.steps()));
//! ```

pub mod families;
pub mod fixtures;
pub mod io;
pub mod oracle;
pub mod qn;
pub mod quiver;
pub mod sequence;

pub use qn::{QnCandidate, QnDecomposition, QnError};
pub use quiver::{coframe, frame, Arrow, Color, IceQuiver, Quiver, QuiverError, VertexId};
pub use sequence::{
    apply_sequence, is_green_sequence, is_maximal_green_sequence, verdict, MutationSequence, Policy, Trace,
    Verdict, Violation,
};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../README.md")]
    mod readme {}
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/mutation.md")]
    mod mutation {}
    #[doc = include_str!("../../../book/src/green-sequences.md")]
    mod green_sequences {}
    #[doc = include_str!("../../../book/src/chains.md")]
    mod chains {}
    #[doc = include_str!("../../../book/src/families.md")]
    mod families {}
    #[doc = include_str!("../../../book/src/oracle.md")]
    mod oracle {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
