use serde::Serialize;

use super::hl::hl_decompose_by_labels;
use super::mu_a::{is_mu_a, mu_a_decompose};
use super::mu_d::{mu_d_decompose, MuDType};
use super::oriented::all_cycles_oriented_decompose;
use crate::qn::QnDecomposition;
use crate::quiver::Quiver;

/// Which recognizer produced a decomposition.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    HernandezLeclerc,
    MuA,
    MuD(MuDType),
    AllCyclesOriented,
}

impl std::fmt::Display for Family {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Family::HernandezLeclerc => f.write_str("hernandez-leclerc"),
            Family::MuA => f.write_str("mu-a"),
            Family::MuD(t) => write!(f, "mu-d-{t:?}"),
            Family::AllCyclesOriented => f.write_str("all-cycles-oriented"),
        }
    }
}

/// Tries, in order: `(i,r)` labels, type A, type D, all cycles oriented.
pub fn auto_decompose(q: &Quiver) -> Option<(Family, QnDecomposition)> {
    if let Some(qn) = hl_decompose_by_labels(q) {
        return Some((Family::HernandezLeclerc, qn));
    }
    if is_mu_a(q) {
        if let Ok(qn) = mu_a_decompose(q, &[]) {
            return Some((Family::MuA, qn));
        }
    }
    if let Ok((class, qn)) = mu_d_decompose(q) {
        return Some((Family::MuD(class.kind()), qn));
    }
    if let Ok(Some(qn)) = all_cycles_oriented_decompose(q) {
        return Some((Family::AllCyclesOriented, qn));
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::quiver_from;
    use crate::fixtures;

    #[test]
    fn picks_the_first_applicable_family() {
        let (fam, qn) = auto_decompose(&fixtures::fig8()).unwrap();
        assert_eq!(fam, Family::MuA);
        assert_eq!(qn.chains().len(), 4);
        let (fam, qn) = auto_decompose(&fixtures::fig7()).unwrap();
        assert_eq!(fam, Family::AllCyclesOriented);
        assert_eq!(qn.chains().len(), 6);
        let (fam, _) = auto_decompose(&fixtures::fig4()).unwrap();
        assert_eq!(fam, Family::HernandezLeclerc);
        assert_eq!(auto_decompose(&fixtures::fig10c()).unwrap().0, Family::MuD(MuDType::III));
    }

    #[test]
    fn gives_up_on_non_oriented_cycles() {
        let q = quiver_from(&[("1", "2"), ("2", "3"), ("1", "4"), ("4", "3"), ("3", "5"), ("5", "6"), ("6", "7")]);
        assert!(auto_decompose(&q).is_none());
    }
}
