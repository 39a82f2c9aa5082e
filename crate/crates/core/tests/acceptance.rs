//! Acceptance criteria. Each criterion prints one PASS/FAIL line with its
//! running time and must finish inside its time bound. They run one after
//! another in a single test so the timings are not skewed by each other.

mod common;

use std::io::Write;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::Command;
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::Value;
use soberbench::classify::theorems::{verify_theorems, Verdict};
use soberbench::classify::{classify, classify_cofinite};
use soberbench::generate::{posets_up_to, posets_up_to_iso, random_corpus};
use soberbench::powerspace::{hoare_all_closed, open_filters_and_phi, smyth, union_map_check};
use soberbench::reflect::{cofinite_reflection, factorize, homeomorphic, wf_reflection_finite};
use soberbench::rudin::minimize_finite;
use soberbench::space::{self, Space};
use soberbench::{Caps, FinPoset, FinSubset};

const SEED: u64 = 20_240_611;

type Check = Result<(), String>;

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn ok<T, E: std::fmt::Debug>(r: Result<T, E>, what: &str) -> Result<T, String> {
    r.map_err(|e| format!("{what}: {e:?}"))
}

struct Line {
    passed: bool,
}

fn run(id: u32, name: &str, limit: Duration, f: impl FnOnce() -> Check) -> Line {
    let start = Instant::now();
    let result = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|e| {
        let msg = e
            .downcast_ref::<String>()
            .cloned()
            .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
            .unwrap_or_else(|| "panic".into());
        Err(format!("panicked: {msg}"))
    });
    let elapsed = start.elapsed();
    let result = result.and_then(|()| {
        if elapsed <= limit {
            Ok(())
        } else {
            Err(format!("took {elapsed:.2?}, limit {limit:.0?}"))
        }
    });
    let line = match &result {
        Ok(()) => format!("criterion {id} {name}: PASS ({elapsed:.2?})\n"),
        Err(why) => format!("criterion {id} {name}: FAIL ({elapsed:.2?}) {why}\n"),
    };
    // Straight to the process stdout so the line shows without --nocapture.
    let mut out = std::io::stdout();
    let _ = out.write_all(line.as_bytes());
    let _ = out.flush();
    Line { passed: result.is_ok() }
}

fn bits(v: &[FinSubset]) -> Vec<u128> {
    let mut b: Vec<u128> = v.iter().map(|s| s.bits()).collect();
    b.sort();
    b
}

fn nonempty_up_to(n: usize) -> Vec<FinPoset> {
    posets_up_to(n).into_iter().filter(|p| p.len() > 0).collect()
}

fn named_instances() -> Check {
    let caps = Caps::default();
    let lambda = FinPoset::lambda();
    let chain = FinPoset::chain2();
    ensure!(common::irreducible_closed(&lambda).len() == 3, "|Irr_c(lambda)| != 3");
    ensure!(common::compact_saturated(&lambda).len() == 4, "|K(lambda)| != 4");
    ensure!(common::compact_saturated(&chain).len() == 2, "|K(2-chain)| != 2");
    ensure!(common::open_filters(&chain).len() == 2, "|OFilt(2-chain)| != 2");
    for (name, p) in common::named() {
        let irr = ok(space::irreducible_closed(&p, &caps), name)?;
        ensure!(bits(&irr) == common::irreducible_closed(&p), "{name}: Irr_c differs");
        let k = ok(space::compact_saturated(&p, &caps), name)?;
        ensure!(bits(&k) == common::compact_saturated(&p), "{name}: K differs");
        let of = ok(open_filters_and_phi(&p, &caps), name)?;
        ensure!(
            of.filters.len() == common::open_filters(&p).len(),
            "{name}: open filter count differs"
        );
        let v = ok(classify(&Space::Finite(p.clone()), &caps), name)?;
        for (flag, value) in v.flags() {
            let expect = flag != "t1" || common::closed_sets(&p).len() == 1 << p.len();
            ensure!(value == expect, "{name}: {flag} = {value}");
        }
    }
    Ok(())
}

fn passes_everywhere(corpus: &[FinPoset], ids: &[&str], all_details_true: bool) -> Check {
    let caps = Caps::default();
    for p in corpus {
        let reports = ok(verify_theorems(&Space::Finite(p.clone()), ids, &caps), "verify")?;
        ensure!(reports.len() == ids.len(), "missing reports");
        for r in reports {
            ensure!(
                r.verdict == Verdict::Pass,
                "{} gave {:?} on {p:?}: {:?}",
                r.theorem_id,
                r.verdict,
                r.witness
            );
            if all_details_true {
                let detail = r.detail.as_object().ok_or("detail is not an object")?;
                ensure!(detail.len() >= 5, "{}: only {} conditions", r.theorem_id, detail.len());
                ensure!(
                    detail.values().all(|v| *v == Value::Bool(true)),
                    "{}: some condition false on {p:?}: {detail:?}",
                    r.theorem_id
                );
            }
        }
    }
    Ok(())
}

fn big_corpus() -> Vec<FinPoset> {
    let mut c = nonempty_up_to(5);
    c.extend(random_corpus(SEED, 1000, 7));
    c
}

fn cofinite_vector() -> Check {
    let v = classify_cofinite();
    let expect = [
        ("rudin_space", true),
        ("wd_space", true),
        ("locally_compact", true),
        ("t1", true),
        ("d_space", true),
        ("dc_space", false),
        ("well_filtered", false),
        ("sober", false),
    ];
    let flags = v.flags();
    for (name, want) in expect {
        let got = flags.iter().find(|(f, _)| *f == name).map(|&(_, b)| b);
        ensure!(got == Some(want), "{name}: {got:?}");
    }
    ensure!(
        v.witnesses.get("well_filtered").map(|w| &w["family"]) == Some(&Value::from("cofinite-tails")),
        "well-filtered witness is {:?}",
        v.witnesses.get("well_filtered")
    );
    let v2 = ok(classify(&Space::Cofinite, &Caps::default()), "classify")?;
    ensure!(v2 == v, "classify disagrees with the cofinite vector");
    Ok(())
}

fn reflections(corpus: &[FinPoset]) -> Check {
    let caps = Caps::default();
    let mut targets = Vec::new();
    for n in 1..=3 {
        targets.extend(posets_up_to_iso(n));
    }
    let mut factorizations = 0usize;
    for p in corpus {
        let r = ok(wf_reflection_finite(p, &caps), "reflection")?;
        let iso = homeomorphic(p, r.space()).ok_or_else(|| format!("X^w not homeomorphic to {p:?}"))?;
        ensure!(common::is_order_iso(p, r.space(), &iso), "bad isomorphism for {p:?}");
        ensure!(r.eta_check.is_embedding(), "eta is not an embedding on {p:?}");
        ensure!(
            (0..p.len()).all(|x| r.carrier()[r.eta[x]] == p.down(x)),
            "eta does not send x to its closure on {p:?}"
        );
        for y in &targets {
            for f in common::monotone_maps(p, y) {
                let fs = ok(factorize(&r, y, &f, &caps), "factorize")?;
                ensure!(fs.commutes, "f* eta != f for {f:?} on {p:?}");
                ensure!(fs.continuous, "f* not continuous for {f:?} on {p:?}");
                ensure!(fs.is_unique(), "{} solutions for {f:?} on {p:?}", fs.solutions);
                factorizations += 1;
            }
        }
    }
    ensure!(factorizations > 0, "no factorizations checked");
    let c = cofinite_reflection();
    ensure!(c.added_points == 1, "cofinite reflection adds {} points", c.added_points);
    ensure!(c.equals_sobrification, "cofinite reflection differs from sobrification");
    Ok(())
}

fn power_spaces() -> Check {
    let caps = Caps::default();
    for p in nonempty_up_to(4) {
        let h = ok(hoare_all_closed(&p, &caps), "hoare")?;
        let ctx = soberbench::classify::ctx::FiniteCtx::new(h.space.clone(), caps);
        ensure!(ok(ctx.sober(), "sober")?.holds, "P_H not sober on {p:?}");
        let s = ok(smyth(&p, &caps), "smyth")?;
        ensure!(s.order_matches, "Smyth order is not reverse inclusion on {p:?}");
        ensure!(bits(&s.carrier) == common::compact_saturated(&p), "Smyth carrier != K on {p:?}");
        let u = ok(union_map_check(&p, &caps), "union")?;
        ensure!(u.lands_in_k && u.continuous, "union map fails on {p:?}: {u:?}");
        let of = ok(open_filters_and_phi(&p, &caps), "open filters")?;
        let k = common::compact_saturated(&p).len();
        ensure!(of.filters.len() == k, "{} open filters, {k} compact sets on {p:?}", of.filters.len());
        ensure!(of.filters.len() == common::open_filters(&p).len(), "open filters differ on {p:?}");
        ensure!(of.phi_order_iso, "phi not an order isomorphism on {p:?}");
    }
    Ok(())
}

fn minimizer() -> Check {
    let caps = Caps::default();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 7);
    let corpus = random_corpus(SEED ^ 7, 400, 7);
    let mut done = 0;
    for p in &corpus {
        if done == 200 {
            break;
        }
        let ks = common::compact_saturated(p);
        if ks.is_empty() {
            continue;
        }
        let least = *ks.choose(&mut rng).unwrap();
        let mut fam: Vec<u128> = vec![least];
        fam.extend(ks.iter().copied().filter(|&k| k != least && least & !k == 0 && rng.gen_bool(0.5)));
        if !common::is_filtered(&fam) {
            return Err(format!("generated family is not filtered: {fam:?}"));
        }
        let mut c = 0u128;
        for &k in &fam {
            let pts: Vec<usize> = common::members(k).collect();
            c |= 1 << pts.choose(&mut rng).unwrap();
        }
        for x in 0..p.len() {
            if rng.gen_bool(0.2) {
                c |= 1 << x;
            }
        }
        let c = common::down_closure(p, c);
        let lib_fam: Vec<FinSubset> = fam.iter().map(|&k| FinSubset::from_bits(k)).collect();
        let w = ok(minimize_finite(p, &lib_fam, FinSubset::from_bits(c), &caps), "minimize")?;
        let a = w.set.bits();
        let meets = |s: u128| fam.iter().all(|&k| k & s != 0);
        ensure!(common::is_down(p, a), "result not closed on {p:?}");
        ensure!(common::is_irreducible(p, a), "result not irreducible on {p:?}");
        ensure!(a & !c == 0, "result not inside C on {p:?}");
        ensure!(meets(a), "result misses a member on {p:?}");
        let mut b = a;
        while b != 0 {
            b = (b - 1) & a;
            ensure!(!(common::is_down(p, b) && meets(b)), "a proper closed subset meets all on {p:?}");
        }
        let cands: Vec<u128> = common::irreducible_closed(p)
            .into_iter()
            .filter(|&s| s & !c == 0 && meets(s))
            .collect();
        let least = cands
            .iter()
            .copied()
            .filter(|&s| !cands.iter().any(|&t| t != s && t & !s == 0))
            .min();
        ensure!(least == Some(a), "tie-break picked {a:#b}, expected {least:?}");
        ensure!(w.is_valid(), "library rejects its own witness");
        done += 1;
    }
    ensure!(done == 200, "only {done} triples generated");
    Ok(())
}

fn cli_determinism() -> Check {
    let bin = env!("CARGO_BIN_EXE_soberbench");
    let run = |args: &[&str]| -> Result<Vec<u8>, String> {
        let out = Command::new(bin).args(args).output().map_err(|e| e.to_string())?;
        ensure!(out.status.code() == Some(0), "{args:?} exited with {:?}", out.status.code());
        ensure!(!out.stdout.is_empty(), "{args:?} printed nothing");
        Ok(out.stdout)
    };
    let search = ["--seed", "17", "--format", "records", "--suite", "all", "search", "--count", "40", "--max-n", "5"];
    let a = run(&search)?;
    let b = run(&search)?;
    ensure!(a == b, "search output differs between runs");
    let path = std::env::temp_dir().join(format!("soberbench-accept-{}.txt", std::process::id()));
    std::fs::write(&path, soberbench::cli::to_space_file(&Space::Finite(FinPoset::lambda())))
        .map_err(|e| e.to_string())?;
    let file = path.to_str().unwrap();
    let verify = ["--format", "records", "verify", file];
    let c = run(&verify)?;
    let d = run(&verify)?;
    let _ = std::fs::remove_file(&path);
    ensure!(c == d, "verify output differs between runs");
    Ok(())
}

#[test]
fn acceptance() {
    let corpus = big_corpus();
    let lines = [
        run(1, "named instances", Duration::from_secs(1), named_instances),
        run(2, "inclusion chain", Duration::from_secs(120), || {
            passes_everywhere(&corpus, &["inclusion-chain"], false)
        }),
        run(3, "equivalent characterizations", Duration::from_secs(300), || {
            passes_everywhere(
                &corpus,
                &["d-space.7cond", "wf.equational", "sober.7cond", "sober.equational", "sober.rip-equational"],
                true,
            )
        }),
        run(4, "cofinite space", Duration::from_secs(1), cofinite_vector),
        run(5, "well-filtered reflection", Duration::from_secs(300), || reflections(&corpus)),
        run(6, "power spaces", Duration::from_secs(120), power_spaces),
        run(7, "minimizer", Duration::from_secs(60), minimizer),
        run(8, "deterministic output", Duration::from_secs(120), cli_determinism),
    ];
    let failed = lines.iter().filter(|l| !l.passed).count();
    assert_eq!(failed, 0, "{failed} acceptance criteria failed");
}
