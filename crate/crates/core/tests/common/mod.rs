#![allow(dead_code)]

use std::collections::BTreeMap;

use greenseq::{Arrow, Quiver, VertexId};
use rand::Rng;

/// Random quiver on `n` vertices labelled `0..n`; each unordered pair gets
/// no arrow or up to `max_mult` arrows in a random direction.
pub fn random_quiver<R: Rng>(rng: &mut R, n: usize, density: f64, max_mult: u32) -> Quiver {
    let mut arrows = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            if rng.gen_bool(density) {
                let m = rng.gen_range(1..=max_mult);
                let (a, b) = if rng.gen_bool(0.5) { (u, v) } else { (v, u) };
                arrows.push(Arrow::new(a, b, m));
            }
        }
    }
    Quiver::new(0..n, arrows).unwrap()
}

/// Mutation by the three-step graph rule on an explicit arrow multiset:
/// add `i -> j` for every path `i -> k -> j`, reverse the arrows at `k`,
/// then cancel opposite pairs.
pub fn graph_rule_mutate(q: &Quiver, k: &VertexId) -> Quiver {
    let mut count: BTreeMap<(VertexId, VertexId), i64> = BTreeMap::new();
    for a in q.arrows() {
        *count.entry((a.from, a.to)).or_default() += i64::from(a.mult);
    }
    let incoming: Vec<(VertexId, i64)> =
        count.iter().filter(|((_, t), _)| t == k).map(|((f, _), &m)| (f.clone(), m)).collect();
    let outgoing: Vec<(VertexId, i64)> =
        count.iter().filter(|((f, _), _)| f == k).map(|((_, t), &m)| (t.clone(), m)).collect();
    for (i, m1) in &incoming {
        for (j, m2) in &outgoing {
            *count.entry((i.clone(), j.clone())).or_default() += m1 * m2;
        }
    }
    let mut flipped: BTreeMap<(VertexId, VertexId), i64> = BTreeMap::new();
    for ((f, t), m) in count {
        let key = if &f == k || &t == k { (t, f) } else { (f, t) };
        *flipped.entry(key).or_default() += m;
    }
    let mut arrows = Vec::new();
    for ((f, t), &m) in &flipped {
        let back = flipped.get(&(t.clone(), f.clone())).copied().unwrap_or(0);
        if m > back {
            arrows.push(Arrow::new(f, t, (m - back) as u32));
        }
    }
    Quiver::new(q.vertices().iter(), arrows).unwrap()
}

/// Linear `A_n` oriented `n -> n-1 -> ... -> 1`.
pub fn linear(n: usize) -> Quiver {
    greenseq::families::linear_a(n).0
}
