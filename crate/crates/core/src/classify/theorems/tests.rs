use super::*;
use crate::generate::posets_up_to_iso;
use crate::space;

fn run(p: FinPoset, id: &str) -> TheoremReport {
    let c = Checker::new(p, Caps::default());
    verify_finite(&c, lookup(id).unwrap()).unwrap()
}

#[test]
fn lambda_wf_equational_is_exhaustive() {
    let r = run(FinPoset::lambda(), "wf.equational");
    assert_eq!(r.verdict, Verdict::Pass, "{r:?}");
    assert!(!r.bounded);
}

#[test]
fn chain_d_space_conditions() {
    let r = run(FinPoset::chain2(), "d-space.7cond");
    assert_eq!(r.verdict, Verdict::Pass, "{r:?}");
}

#[test]
fn cofinite_reports() {
    let reports = verify_theorems(&Space::Cofinite, &[], &Caps::default()).unwrap();
    let get = |id: &str| reports.iter().find(|r| r.theorem_id == id).unwrap();
    for id in ["cofinite.example", "sober.core-compact-wf", "inclusion-chain", "implications"] {
        assert_eq!(get(id).verdict, Verdict::Pass, "{id}: {:?}", get(id));
    }
    for id in ["wf.equational", "hofmann-mislove", "reflection.universal"] {
        assert_eq!(get(id).verdict, Verdict::NotApplicable, "{id}");
    }
    assert!(reports.iter().all(|r| r.verdict != Verdict::Fail));
}

#[test]
fn unknown_id_is_an_error() {
    let x = Space::Finite(FinPoset::chain2());
    assert!(verify_theorems(&x, &["no.such"], &Caps::default()).is_err());
}

#[test]
fn registry_sorted_and_unique() {
    let ids = theorem_ids();
    assert!(ids.windows(2).all(|w| w[0] < w[1]), "{ids:?}");
}

#[test]
fn irr_c_smyth_matches_power_space() {
    let caps = Caps::default();
    for n in 1..=4 {
        for p in posets_up_to_iso(n) {
            let ctx = FiniteCtx::new(p.clone(), caps);
            let ps = crate::powerspace::smyth(&p, &caps).unwrap();
            let mut want: Vec<Vec<_>> = space::irreducible_closed(&ps.space, &caps)
                .unwrap()
                .into_iter()
                .map(|a| a.iter().map(|i| ps.carrier[i]).collect())
                .collect();
            let mut got = characterizations::irr_c_smyth(&ctx).unwrap();
            want.sort();
            got.sort();
            assert_eq!(got, want);
        }
    }
}

#[test]
fn small_posets_have_no_failures() {
    for n in 1..=3 {
        for p in posets_up_to_iso(n) {
            let reports = verify_theorems(&Space::Finite(p.clone()), &[], &Caps::default()).unwrap();
            for r in reports {
                assert_ne!(r.verdict, Verdict::Fail, "{p:?}: {r:?}");
            }
        }
    }
}
