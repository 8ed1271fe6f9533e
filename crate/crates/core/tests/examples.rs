use greenseq::families::{auto_decompose, linear_a, mu_d_decompose, Family, MuDType};
use greenseq::fixtures::*;
use greenseq::oracle::{min_mgs_length, OracleConfig};
use greenseq::{verdict, MutationSequence, VertexId, Violation};

fn ids(xs: &[usize]) -> Vec<VertexId> {
    xs.iter().map(|&x| x.into()).collect()
}

#[test]
fn a2_sequence_is_one_two_one() {
    let (q, qn) = linear_a(2);
    assert_eq!(qn.theorem_mgs().steps(), ids(&[1, 2, 1]));
    assert!(verdict(&q, &ids(&[1, 2, 1])).is_maximal);
}

#[test]
fn b2_window() {
    let q = fig4();
    assert_eq!(q.len(), 12);
    let qn = fig4_decomposition();
    assert_eq!(qn.chain_lengths(), vec![3, 3, 6]);
    assert_eq!(qn.theorem_mgs().len(), 33);
    assert!(verdict(&q, qn.theorem_mgs().steps()).is_maximal);
    assert!(verdict(&q, fig4_sequence().steps()).is_maximal);
}

#[test]
fn tree_of_oriented_cycles() {
    let q = fig7();
    assert!(verdict(&q, fig7_sequence().steps()).is_maximal);
    let qn = fig7_decomposition();
    assert_eq!(qn.chain_lengths(), vec![4, 1, 2, 3, 4, 3]);
    // Another linear extension of the same order: a different sequence of the same length.
    let mgs = qn.theorem_mgs();
    assert_eq!(mgs.len(), 36);
    assert!(verdict(&q, mgs.steps()).is_maximal);
}

#[test]
fn type_a_fixture() {
    let q = fig8();
    for s in [fig8_sequence_11(), fig8_sequence_12(), fig8_sequence_13()] {
        assert!(verdict(&q, s.steps()).is_maximal, "{s:?}");
    }
    let (family, qn) = auto_decompose(&q).unwrap();
    assert_eq!(family, Family::MuA);
    assert_eq!(qn.theorem_mgs().len(), 10);
    assert_eq!(min_mgs_length(&q, 20, OracleConfig::default()).unwrap(), Some(10));
}

#[test]
fn twelve_step_sequence_read_left_to_right_is_not_green() {
    // The composition read in the wrong direction mutates 6 while it is red.
    let wrong = MutationSequence::new(ids(&[6, 7, 5, 3, 6, 4, 5, 6, 1, 2, 6, 3])).unwrap();
    let v = verdict(&fig8(), wrong.steps());
    assert_eq!(v.violation, Some(Violation::NotGreen { index: 7, vertex: "6".into() }));
}

#[test]
fn type_d_shapes() {
    let expected = [MuDType::I, MuDType::II, MuDType::III, MuDType::IV];
    for (q, want) in [fig10a(), fig10b(), fig10c(), fig10d()].into_iter().zip(expected) {
        let (class, qn) = mu_d_decompose(&q).unwrap();
        assert_eq!(class.kind(), want);
        assert!(verdict(&q, qn.theorem_mgs().steps()).is_maximal);
    }
}

#[test]
fn fixture_lookup() {
    for name in NAMES {
        assert!(by_name(name).is_some(), "{name}");
    }
    assert!(by_name("fig99").is_none());
    assert_eq!(decomposition_by_name("fig7").unwrap(), fig7_decomposition());
}
