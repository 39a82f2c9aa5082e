//! Structural invariants over random finite spaces.

mod common;

use proptest::prelude::*;
use soberbench::classify::classify;
use soberbench::classify::ctx::FiniteCtx;
use soberbench::cli::{parse_space, to_space_file};
use soberbench::generate::random_corpus;
use soberbench::powerspace::smyth;
use soberbench::reflect::{homeomorphic, wd_family, wf_reflection_finite};
use soberbench::rudin::{is_rudin_set_finite, minimize_finite};
use soberbench::space::{self, Space};
use soberbench::{Caps, FinPoset, FinSubset};

/// A poset on up to `max` points from a random DAG with edges `i -> j`, `i < j`.
fn poset(max: usize) -> impl Strategy<Value = FinPoset> {
    (1..=max).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |edges| {
            let pairs: Vec<(usize, usize)> = (0..n)
                .flat_map(|j| (0..j).map(move |i| (i, j)))
                .zip(edges)
                .filter_map(|(e, keep)| keep.then_some(e))
                .collect();
            FinPoset::from_covers(n, &pairs).unwrap()
        })
    })
}

fn subset_of(p: &FinPoset, mask: u128) -> FinSubset {
    FinSubset::from_bits(mask & p.full().bits())
}

fn is_sub(a: &[FinSubset], b: &[FinSubset]) -> bool {
    a.iter().all(|x| b.contains(x))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn closure_is_idempotent_extensive_and_monotone(p in poset(8), a in any::<u128>(), b in any::<u128>()) {
        let (a, b) = (subset_of(&p, a), subset_of(&p, b));
        let cl = |s| p.down_closure(s);
        prop_assert_eq!(cl(cl(a)), cl(a));
        prop_assert!(a.is_subset(cl(a)));
        prop_assert!(cl(a & b).is_subset(cl(a)));
        prop_assert_eq!(cl(a).bits(), common::down_closure(&p, a.bits()));
    }

    #[test]
    fn inclusion_chain(p in poset(6)) {
        let caps = Caps::default();
        let ctx = FiniteCtx::new(p.clone(), caps);
        let sc = space::point_closures(&p);
        let dc = space::directed_closures(&p, &caps).unwrap();
        let rd: Vec<FinSubset> = ctx.closed().unwrap().iter().copied()
            .filter(|&a| is_rudin_set_finite(&p, a)).collect();
        let wd = wd_family(&ctx).unwrap();
        let irr = ctx.irr_c().unwrap();
        prop_assert!(is_sub(&sc, &dc));
        prop_assert!(is_sub(&dc, &rd));
        prop_assert!(is_sub(&rd, &wd));
        prop_assert!(is_sub(&wd, irr));
        // Finite spaces are sober, so the whole chain collapses.
        prop_assert_eq!(sc.len(), irr.len());
    }

    #[test]
    fn finite_spaces_have_every_flag_but_t1(p in poset(6)) {
        let v = classify(&Space::Finite(p.clone()), &Caps::default()).unwrap();
        let antichain = p.strict_pairs().is_empty();
        for (name, value) in v.flags() {
            prop_assert_eq!(value, name != "t1" || antichain, "{}", name);
        }
        // Large antichains push the family enumeration onto its bounded tier.
        if p.len() <= 3 {
            prop_assert!(!v.bounded);
        }
    }

    #[test]
    fn space_files_round_trip(p in poset(10)) {
        let x = Space::Finite(p);
        prop_assert_eq!(parse_space(&to_space_file(&x)).unwrap(), x);
    }

    #[test]
    fn smyth_order_is_reverse_inclusion(p in poset(5)) {
        let s = smyth(&p, &Caps::default()).unwrap();
        prop_assert!(s.order_matches);
        for i in 0..s.len() {
            for j in 0..s.len() {
                prop_assert_eq!(s.space.leq(i, j), s.carrier[j].is_subset(s.carrier[i]));
            }
        }
    }

    #[test]
    fn reflection_is_homeomorphic_with_embedding_unit(p in poset(7)) {
        let r = wf_reflection_finite(&p, &Caps::default()).unwrap();
        prop_assert!(r.eta_check.is_embedding());
        let iso = homeomorphic(&p, r.space());
        prop_assert!(iso.is_some());
        prop_assert!(common::is_order_iso(&p, r.space(), &iso.unwrap()));
    }

    #[test]
    fn minimizer_returns_a_valid_witness(p in poset(6), pick in any::<prop::sample::Index>(), c in any::<u128>()) {
        let caps = Caps::default();
        let ks = space::compact_saturated(&p, &caps).unwrap();
        let k = ks[pick.index(ks.len())];
        // C is the closure of a random set plus one point of K, so it meets K.
        let seed = subset_of(&p, c) | FinSubset::from_bits(k.bits() & k.bits().wrapping_neg());
        let c = p.down_closure(seed);
        let w = minimize_finite(&p, &[k], c, &caps).unwrap();
        prop_assert!(w.is_valid());
        prop_assert!(common::is_down(&p, w.set.bits()));
        prop_assert!(common::is_irreducible(&p, w.set.bits()));
        prop_assert!(w.set.is_subset(c) && w.set.meets(k));
    }

    #[test]
    fn corpus_is_deterministic(seed in any::<u64>()) {
        prop_assert_eq!(random_corpus(seed, 8, 6), random_corpus(seed, 8, 6));
    }
}
