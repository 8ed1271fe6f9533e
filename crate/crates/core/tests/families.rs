mod common;

use common::linear;
use greenseq::families::{
    all_cycles_oriented_decompose, auto_decompose, classify_mu_d, is_mu_a, mu_a_decompose, mu_d_decompose, Family,
};
use greenseq::{is_maximal_green_sequence, Arrow, Quiver};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// `D_n` with arms `1 - 2 - ... - (n-2)` and `n-1`, `n` on `n-2`, oriented at random.
fn dn<R: Rng>(rng: &mut R, n: usize) -> Quiver {
    let mut edges: Vec<(usize, usize)> = (1..n - 2).map(|i| (i, i + 1)).collect();
    edges.push((n - 2, n - 1));
    edges.push((n - 2, n));
    let arrows = edges.into_iter().map(|(a, b)| if rng.gen_bool(0.5) { Arrow::new(a, b, 1) } else { Arrow::new(b, a, 1) });
    Quiver::new(1..=n, arrows).unwrap()
}

fn walk<R: Rng>(rng: &mut R, mut q: Quiver, steps: usize) -> Quiver {
    for _ in 0..steps {
        let k = q.vertices()[rng.gen_range(0..q.len())].clone();
        q = q.mutate(&k).unwrap();
    }
    q
}

#[test]
fn type_a_mutation_class() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for _ in 0..300 {
        let n = rng.gen_range(1..=12);
        let steps = rng.gen_range(0..30);
        let q = walk(&mut rng, linear(n), steps);
        assert!(is_mu_a(&q), "{q:?}");
        let qn = mu_a_decompose(&q, &[]).unwrap();
        assert!(is_maximal_green_sequence(&q, qn.theorem_mgs().steps()), "{q:?}");
        assert!(matches!(auto_decompose(&q), Some((Family::MuA, _)) | Some((Family::HernandezLeclerc, _))));
    }
}

#[test]
fn type_d_mutation_class() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let mut kinds = std::collections::HashSet::new();
    for _ in 0..400 {
        let n = rng.gen_range(4..=10);
        let start = dn(&mut rng, n);
        let steps = rng.gen_range(0..30);
        let q = walk(&mut rng, start, steps);
        assert!(!is_mu_a(&q), "{q:?}");
        let class = classify_mu_d(&q).unwrap_or_else(|| panic!("unclassified {q:?}"));
        kinds.insert(class.kind());
        let (_, qn) = mu_d_decompose(&q).unwrap();
        assert!(is_maximal_green_sequence(&q, qn.theorem_mgs().steps()), "{q:?}");
    }
    assert_eq!(kinds.len(), 4, "{kinds:?}");
}

#[test]
fn outside_every_family() {
    // Acyclic square: a non-oriented cycle.
    let square = Quiver::new(1..=4usize, [Arrow::new(1usize, 2usize, 1), Arrow::new(2usize, 3usize, 1), Arrow::new(1usize, 4usize, 1), Arrow::new(4usize, 3usize, 1)]).unwrap();
    assert!(auto_decompose(&square).is_none());
    assert!(all_cycles_oriented_decompose(&square).unwrap().is_none());
    // Kronecker quiver: a double arrow.
    let kronecker = Quiver::new(1..=2usize, [Arrow::new(1usize, 2usize, 2)]).unwrap();
    assert!(auto_decompose(&kronecker).is_none());
}
