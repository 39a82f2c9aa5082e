//! Poset corpora: all posets of a given size up to isomorphism, and seeded
//! random posets.

use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::iso::canonical_code;
use crate::order::{FinPoset, FinSubset};

/// One representative of every isomorphism class of `n`-point posets, in
/// canonical-code order.
pub fn posets_up_to_iso(n: usize) -> Vec<FinPoset> {
    // Every poset has a natural labelling, so it suffices to build posets
    // where each new point sits above a down-set of the earlier ones.
    let mut seen: BTreeMap<Vec<u128>, FinPoset> = BTreeMap::new();
    let mut stack: Vec<Vec<FinSubset>> = vec![Vec::new()];
    while let Some(below) = stack.pop() {
        let k = below.len();
        let p = FinPoset::from_leq(k, |x, y| x == y || below[y].contains(x)).expect("natural labelling");
        if k == n {
            seen.entry(canonical_code(&p)).or_insert(p);
            continue;
        }
        for d in p.down_sets(usize::MAX).expect("uncapped") {
            let mut next = below.clone();
            next.push(d);
            stack.push(next);
        }
    }
    seen.into_values().collect()
}

/// All posets with at most `n` points, up to isomorphism.
pub fn posets_up_to(n: usize) -> Vec<FinPoset> {
    (0..=n).flat_map(posets_up_to_iso).collect()
}

/// A random poset: a random DAG on `n` points (edge `i -> j` for `i < j`
/// with probability `edge_prob`), transitively closed, then relabelled by a
/// random permutation.
pub fn random_poset<R: Rng>(rng: &mut R, n: usize, edge_prob: f64) -> FinPoset {
    let mut lt = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(edge_prob) {
                lt.push((i, j));
            }
        }
    }
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let lt: Vec<(usize, usize)> = lt.into_iter().map(|(i, j)| (perm[i], perm[j])).collect();
    FinPoset::from_covers(n, &lt).expect("acyclic by construction")
}

/// The deterministic stream of random posets used by the search command:
/// sizes uniform in `1..=max_n`, edge probability uniform in `[0.1, 0.7]`.
pub fn random_corpus(seed: u64, count: usize, max_n: usize) -> Vec<FinPoset> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(1..=max_n.max(1));
            let p = rng.gen_range(0.1..=0.7);
            random_poset(&mut rng, n, p)
        })
        .collect()
}
