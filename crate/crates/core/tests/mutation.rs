mod common;

use common::{graph_rule_mutate, random_quiver};
use greenseq::families::is_mu_a;
use greenseq::{frame, Arrow, Quiver, VertexId};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn arb_quiver() -> impl Strategy<Value = Quiver> {
    (1usize..8, any::<u64>()).prop_map(|(n, seed)| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        random_quiver(&mut rng, n, 0.5, 3)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn mutation_is_an_involution(q in arb_quiver(), pick in any::<prop::sample::Index>()) {
        let k = pick.get(q.vertices()).clone();
        prop_assert_eq!(q.mutate(&k).unwrap().mutate(&k).unwrap(), q);
    }

    #[test]
    fn mutation_stays_skew_symmetric(q in arb_quiver(), pick in any::<prop::sample::Index>()) {
        let k = pick.get(q.vertices()).clone();
        let m = q.mutate(&k).unwrap();
        for u in 0..m.len() {
            prop_assert_eq!(m.b(u, u), 0);
            for v in 0..m.len() {
                prop_assert_eq!(m.b(u, v), -m.b(v, u));
            }
        }
    }

    #[test]
    fn is_mu_a_ignores_labels(q in arb_quiver(), shift in 0usize..100) {
        let rename = |v: &VertexId| VertexId::new(format!("v{}", v.as_str().parse::<usize>().unwrap() * 7 + shift));
        let arrows = q.arrows().into_iter().map(|a| Arrow::new(rename(&a.from), rename(&a.to), a.mult));
        let renamed = Quiver::new(q.vertices().iter().map(rename), arrows).unwrap();
        prop_assert_eq!(is_mu_a(&q), is_mu_a(&renamed));
    }
}

#[test]
fn graph_rule_matches_matrix_rule() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..1000 {
        let n = rng.gen_range(1..9);
        let q = random_quiver(&mut rng, n, 0.6, 3);
        let k = q.vertices()[rng.gen_range(0..n)].clone();
        assert_eq!(q.mutate(&k).unwrap(), graph_rule_mutate(&q, &k), "quiver {q:?} at {k}");
    }
}

#[test]
fn frozen_pairs_stay_unconnected() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..200 {
        let n = rng.gen_range(1..7);
        let q = random_quiver(&mut rng, n, 0.5, 2);
        let mut iq = frame(&q);
        for _ in 0..6 {
            let k = q.vertices()[rng.gen_range(0..n)].clone();
            iq = iq.mutate(&k).unwrap();
        }
        let frozen = iq.frozen_vertices();
        for a in &frozen {
            for b in &frozen {
                assert_eq!(iq.quiver().entry(a, b), Some(0));
            }
        }
    }
}
