//! Relations between the space classes, preservation under subspaces,
//! products and retracts, and Rudin's lemma in its several forms.

use serde_json::{json, Value};

use super::characterizations::{describe, irr_c_smyth, search, target_maps};
use super::{all_hold, both, equivalent, flag, implication, Checker, Outcome};
use crate::classify::ctx::FiniteCtx;
use crate::classify::props::Fact;
use crate::classify::ClassificationVector;
use crate::enumerate::{is_irreducible_finite, is_smyth_irreducible, Family};
use crate::error::{Error, Result};
use crate::order::{FinPoset, FinSubset};
use crate::reflect;
use crate::rudin::{check_witness, is_rudin_set_with, m_and_m_finite};
use crate::space::{self, image, COFINITE_FAMILIES};

/// Property names checked for preservation, with their definitional check.
const PRESERVED: [(&str, fn(&FiniteCtx) -> Result<Fact>); 5] = [
    ("dc_space", FiniteCtx::dc_space),
    ("rudin_space", FiniteCtx::rudin_space),
    ("wd_space", FiniteCtx::wd_space),
    ("well_filtered", FiniteCtx::well_filtered),
    ("sober", FiniteCtx::sober),
];

fn fact_of(holds: bool, bounded: bool, witness: impl FnOnce() -> Value) -> Fact {
    if holds {
        Fact::ok(bounded)
    } else {
        Fact::fail(bounded, witness())
    }
}

/// `a ⇒ b` as a fact.
fn implies(a: &Fact, b: &Fact) -> Fact {
    let bounded = a.bounded || b.bounded;
    if a.holds && !b.holds {
        Fact {
            bounded,
            ..b.clone()
        }
    } else {
        Fact::ok(bounded)
    }
}

/// `RD(X)`: nonempty closed sets minimal among closed sets meeting every
/// member of some filtered family.
pub(super) fn rudin_sets(ctx: &FiniteCtx) -> Result<Vec<FinSubset>> {
    let ks = ctx.compact()?;
    Ok(ctx
        .closed()?
        .iter()
        .copied()
        .filter(|&a| is_rudin_set_with(&ctx.p, ks, a))
        .collect())
}

fn subset_of(ctx: &FiniteCtx, small: &[FinSubset], big: &[FinSubset], bounded: bool) -> Fact {
    search(bounded, small, |a| {
        (!big.contains(a)).then(|| json!({ "not included": ctx.show(*a) }))
    })
}

pub(super) fn alexandroff(c: &Checker) -> Result<Outcome> {
    let ctx = &c.ctx;
    let dcpo = fact_of(ctx.p.is_dcpo(), false, || json!("not a dcpo"));
    let dc = ctx.dc_space()?;
    let out = equivalent(vec![
        ("sober", ctx.sober()?),
        ("well-filtered", ctx.well_filtered()?),
        ("d-space", ctx.d_space()?),
        ("ACC", ctx.noetherian()?),
        ("dcpo with compact points", both(dcpo.clone(), ctx.algebraic_points()?)),
        ("dcpo with Scott = Alexandroff", both(dcpo, ctx.scott_is_alexandroff()?)),
    ]);
    Ok(match (out, dc.holds) {
        (Outcome::Pass { bounded, detail }, false) => Outcome::Fail {
            bounded,
            detail,
            witness: json!({ "not DC": dc.witness }),
        },
        (out, _) => out.bounded(dc.bounded),
    })
}

pub(super) fn closure_images(c: &Checker) -> Result<Outcome> {
    let ctx = &c.ctx;
    let irr = ctx.irreducible()?;
    let (dc, dc_b) = ctx.directed_closures()?;
    let rd = rudin_sets(ctx)?;
    let wd = reflect::wd_family(ctx)?;
    let mut fails: [Option<Value>; 4] = [None, None, None, None];
    for (y, maps) in target_maps(c, true)? {
        let cy = FiniteCtx::new(y.clone(), ctx.caps);
        let (dc_y, _) = cy.directed_closures()?;
        let ks_y = cy.compact()?;
        let wd_y = reflect::wd_family(&cy)?;
        for f in &maps {
            let w = |a: FinSubset| json!({"target": describe(&y), "map": f, "set": ctx.show(a)});
            let cl = |a: FinSubset| y.down_closure(image(f, a));
            if fails[0].is_none() {
                fails[0] = irr
                    .items
                    .iter()
                    .find(|&&a| !is_irreducible_finite(&y, image(f, a)))
                    .map(|&a| w(a));
            }
            if fails[1].is_none() {
                fails[1] = dc.iter().find(|&&a| !dc_y.contains(&cl(a))).map(|&a| w(a));
            }
            if fails[2].is_none() {
                fails[2] = rd
                    .iter()
                    .find(|&&a| !is_rudin_set_with(&y, ks_y, cl(a)))
                    .map(|&a| w(a));
            }
            if fails[3].is_none() {
                fails[3] = wd.iter().find(|&&a| !wd_y.contains(&cl(a))).map(|&a| w(a));
            }
        }
    }
    let [f0, f1, f2, f3] = fails;
    Ok(all_hold(vec![
        ("irreducible images", Fact::from_search(irr.tier.is_bounded(), f0)),
        ("directed closures", Fact::from_search(dc_b, f1)),
        ("Rudin sets", Fact::from_search(false, f2)),
        ("WD sets", Fact::from_search(false, f3)),
    ])
    .bounded(true))
}

pub(super) fn cofinite_example_finite(_: &Checker) -> Result<Outcome> {
    Ok(Outcome::NotApplicable(
        "the statement is about the cofinite space".into(),
    ))
}

pub(super) fn cofinite_example(v: &ClassificationVector) -> Outcome {
    let expect = |name: &str, want: bool| {
        let got = v.get(name).expect("known flag");
        fact_of(got == want, false, || json!({ name: got }))
    };
    let tails = v
        .witnesses
        .get("well_filtered")
        .map(|w| w["family"] == json!("cofinite-tails"))
        .unwrap_or(false);
    all_hold(vec![
        ("T1", expect("t1", true)),
        ("d-space", expect("d_space", true)),
        ("locally compact", expect("locally_compact", true)),
        ("Rudin", expect("rudin_space", true)),
        ("WD", expect("wd_space", true)),
        ("not DC", expect("dc_space", false)),
        ("not well-filtered", expect("well_filtered", false)),
        ("not sober", expect("sober", false)),
        (
            "cofinite tails witness",
            fact_of(tails, false, || json!("missing cofinite-tails witness")),
        ),
    ])
}

pub(super) fn implications(v: &ClassificationVector) -> Outcome {
    let bad = v.implication_violations();
    let fact = fact_of(bad.is_empty(), v.bounded, || json!({ "violated": bad }));
    all_hold(vec![("implications", fact)])
}

pub(super) fn inclusion_chain(c: &Checker) -> Result<Outcome> {
    let ctx = &c.ctx;
    let (dc, b) = ctx.directed_closures()?;
    let rd = rudin_sets(ctx)?;
    let wd = reflect::wd_family(ctx)?;
    let irr = ctx.irr_c()?;
    let s = c.sobrification()?;
    let wd_eta: Vec<FinSubset> = ctx
        .closed()?
        .iter()
        .copied()
        .filter(|&a| {
            let cl = s.space().down_closure(image(&s.eta, a));
            !a.is_empty() && s.space().greatest(cl).is_some_and(|g| s.space().down(g) == cl)
        })
        .collect();
    let mut out = all_hold(vec![
        ("D_c ⊆ RD", subset_of(ctx, &dc, &rd, b)),
        ("RD ⊆ WD", subset_of(ctx, &rd, &wd, false)),
        ("WD ⊆ Irr_c", subset_of(ctx, &wd, irr, false)),
        ("WD ⊆ WD by sobrification", subset_of(ctx, &wd, &wd_eta, false)),
        ("WD by sobrification ⊆ Irr_c", subset_of(ctx, &wd_eta, irr, false)),
    ]);
    if let Outcome::Pass { detail, .. } = &mut out {
        detail["sizes"] = json!({
            "D_c": dc.len(), "RD": rd.len(), "WD": wd.len(), "Irr_c": irr.len(),
        });
    }
    Ok(out)
}

/// Kinds of closed sets named by a symbolic family description.
fn kinds(desc: &str) -> Result<Vec<&'static str>> {
    match desc {
        "singletons" => Ok(vec!["singletons"]),
        "singletons and X" => Ok(vec!["singletons", "X"]),
        other => Err(Error::Unsupported(format!("unknown family description {other:?}"))),
    }
}

pub(super) fn inclusion_chain_cofinite(_: &ClassificationVector) -> Outcome {
    let f = COFINITE_FAMILIES;
    let chain = [
        ("D_c", f.directed_closures),
        ("RD", f.rudin),
        ("WD", f.well_filtered_determined),
        ("Irr_c", f.irreducible_closed),
    ];
    let mut facts = Vec::new();
    for w in chain.windows(2) {
        let ((a, da), (b, db)) = (w[0], w[1]);
        let fact = match (kinds(da), kinds(db)) {
            (Ok(ka), Ok(kb)) => fact_of(ka.iter().all(|k| kb.contains(k)), false, || {
                json!({ a: da, b: db })
            }),
            (Err(e), _) | (_, Err(e)) => Fact::fail(false, json!(e.to_string())),
        };
        facts.push((a, fact));
    }
    let names = ["D_c ⊆ RD", "RD ⊆ WD", "WD ⊆ Irr_c"];
    all_hold(names.into_iter().zip(facts.into_iter().map(|(_, f)| f)).collect())
}

/// The product `X × Y` with both projections.
fn product_with(p: &FinPoset, y: &FinPoset) -> Result<FinPoset> {
    p.product(y)
}

fn project(a: FinSubset, m: usize) -> (FinSubset, FinSubset) {
    a.iter()
        .fold((FinSubset::EMPTY, FinSubset::EMPTY), |(l, r), i| (l.with(i / m), r.with(i % m)))
}

fn times(a: FinSubset, b: FinSubset, m: usize) -> FinSubset {
    a.iter().flat_map(|i| b.iter().map(move |j| i * m + j)).collect()
}

pub(super) fn irreducible_product(c: &Checker) -> Result<Outcome> {
    let ctx = &c.ctx;
    let p = &ctx.p;
    let (sets, bounded): (Vec<FinSubset>, bool) = match ctx.nonempty_subsets() {
        Ok(s) => (s.to_vec(), false),
        Err(Error::CapExceeded { .. }) => {
            let mut s = ctx.irreducible()?.items.clone();
            s.extend(ctx.closed()?.iter().copied().filter(|a| !a.is_empty()));
            s.sort();
            s.dedup();
            (s, true)
        }
        Err(e) => return Err(e),
    };
    let mut facts = Vec::new();
    for (name, y) in [("× 2-chain", FinPoset::chain2()), ("× Λ", FinPoset::lambda())] {
        let m = y.len();
        let prod = product_with(p, &y)?;
        let ys: Vec<FinSubset> = y.full().subsets().skip(1).collect();
        let boxes = search(bounded, &sets, |&a| {
            ys.iter().find_map(|&b| {
                let lhs = is_irreducible_finite(&prod, times(a, b, m));
                let rhs = is_irreducible_finite(p, a) && is_irreducible_finite(&y, b);
                (lhs != rhs).then(|| json!({"factor": ctx.show(a), "other": y.show(b)}))
            })
        });
        let irr_c_prod = space::irreducible_closed(&prod, &ctx.caps)?;
        let irr_c_x = ctx.irr_c()?;
        let irr_c_y = space::irreducible_closed(&y, &ctx.caps)?;
        let closed = search(false, &irr_c_prod, |&a| {
            let (l, r) = project(a, m);
            let ok = times(l, r, m) == a && irr_c_x.contains(&l) && irr_c_y.contains(&r);
            (!ok).then(|| json!({ "irreducible closed": prod.show(a) }))
        });
        facts.push((name, both(boxes, closed)));
    }
    Ok(all_hold(facts))
}

fn held(ctx: &FiniteCtx) -> Result<Vec<(&'static str, Fact)>> {
    PRESERVED.iter().map(|&(n, f)| Ok((n, f(ctx)?))).collect()
}

/// Every property `X` has also holds on each of `spaces`.
fn preserved(c: &Checker, spaces: Vec<(String, FinPoset)>, bounded: bool) -> Result<Outcome> {
    let ours = held(&c.ctx)?;
    if !ours.iter().any(|(_, f)| f.holds) {
        return Ok(Outcome::NotApplicable("X has none of the properties".into()));
    }
    let mut facts: Vec<(&str, Fact)> = Vec::new();
    for &(name, ref fx) in &ours {
        if !fx.holds {
            continue;
        }
        let check = PRESERVED.iter().find(|(n, _)| *n == name).expect("listed").1;
        let mut fact = Fact::ok(fx.bounded || bounded);
        for (label, q) in &spaces {
            let f = check(&FiniteCtx::new(q.clone(), c.ctx.caps))?;
            fact.bounded |= f.bounded;
            if !f.holds {
                fact = Fact::fail(fact.bounded, json!({ "subspace": label, "witness": f.witness }));
                break;
            }
        }
        facts.push((name, fact));
    }
    Ok(all_hold(facts))
}

pub(super) fn closed_subspace(c: &Checker) -> Result<Outcome> {
    let p = c.p();
    let subs = c
        .ctx
        .closed()?
        .iter()
        .filter(|a| !a.is_empty())
        .map(|&a| Ok((p.show(a), p.induced(a)?.0)))
        .collect::<Result<Vec<_>>>()?;
    preserved(c, subs, false)
}

pub(super) fn product_preservation(c: &Checker) -> Result<Outcome> {
    let p = c.p();
    let mut facts = Vec::new();
    for (name, y) in [("× 2-chain", FinPoset::chain2()), ("× Λ", FinPoset::lambda())] {
        let prod = FiniteCtx::new(p.product(&y)?, c.ctx.caps);
        let other = FiniteCtx::new(y, c.ctx.caps);
        for (prop, f) in PRESERVED {
            let (fx, fy, fp) = (f(&c.ctx)?, f(&other)?, f(&prod)?);
            let bounded = fx.bounded || fy.bounded || fp.bounded;
            let fact = fact_of(fp.holds == (fx.holds && fy.holds), bounded, || {
                json!({"product": fp.holds, "factors": [fx.holds, fy.holds]})
            });
            facts.push((name, prop, fact));
        }
    }
    let named: Vec<(String, Fact)> = facts
        .into_iter()
        .map(|(n, p, f)| (format!("{p} {n}"), f))
        .collect();
    Ok(all_hold(named.iter().map(|(n, f)| (n.as_str(), f.clone())).collect()))
}

/// Subsets `R` admitting a monotone retraction `X → R`.
fn retracts(c: &Checker) -> Result<Vec<FinSubset>> {
    let p = c.p();
    let mut out = Vec::new();
    for &r in c.ctx.nonempty_subsets()? {
        let (q, emb) = p.induced(r)?;
        let mut fixed = vec![None; p.len()];
        for (i, &x) in emb.iter().enumerate() {
            fixed[x] = Some(i);
        }
        let exists = match space::monotone_maps_with(p, &q, &fixed, 1) {
            Ok(maps) => !maps.is_empty(),
            Err(Error::CapExceeded { .. }) => true,
            Err(e) => return Err(e),
        };
        if exists {
            out.push(r);
        }
    }
    Ok(out)
}

pub(super) fn retract_preservation(c: &Checker) -> Result<Outcome> {
    let p = c.p();
    let subs = retracts(c)?
        .into_iter()
        .map(|r| Ok((p.show(r), p.induced(r)?.0)))
        .collect::<Result<Vec<_>>>()?;
    preserved(c, subs, false)
}

/// Subfamilies of `K(X)` for the Rudin equivalence: all of them when there
/// are few compact sets, else singletons, pairs and the irreducible
/// families found by enumeration.
fn subfamilies(ctx: &FiniteCtx) -> Result<(Vec<Family>, bool)> {
    let ks = ctx.compact()?;
    if ks.len() <= ctx.caps.carrier {
        let all = FinSubset::full(ks.len())
            .subsets()
            .skip(1)
            .map(|m| m.iter().map(|i| ks[i]).collect())
            .collect();
        return Ok((all, false));
    }
    let mut out: Vec<Family> = Vec::new();
    for i in 0..ks.len() {
        out.push(vec![ks[i]]);
        for j in i + 1..ks.len() {
            out.push(vec![ks[i], ks[j]]);
        }
    }
    out.extend(ctx.smyth_irreducible()?.items.iter().cloned());
    out.sort();
    out.dedup();
    Ok((out, true))
}

pub(super) fn rudin_equiv(c: &Checker) -> Result<Outcome> {
    let ctx = &c.ctx;
    let closed = ctx.closed()?;
    let irr = ctx.irr_c()?;
    let (fams, bounded) = subfamilies(ctx)?;
    let fact = search(bounded, &fams, |f| {
        let (meeting, minimal) = m_and_m_finite(closed, f);
        let rudin_ok = meeting.iter().all(|&a| {
            minimal
                .iter()
                .any(|&m| m.is_subset(a) && irr.contains(&m))
        });
        (rudin_ok != is_smyth_irreducible(f)).then(|| {
            json!({"family": ctx.show_family(f), "irreducible": is_smyth_irreducible(f)})
        })
    });
    Ok(all_hold(vec![("irreducible iff Rudin condition", fact)]))
}

pub(super) fn rudin_local_compact(v: &ClassificationVector) -> Outcome {
    implication(
        vec![("locally compact", flag(v, "locally_compact"))],
        vec![("Rudin", flag(v, "rudin_space"))],
    )
}

pub(super) fn rudin_meet(c: &Checker) -> Result<Outcome> {
    let ctx = &c.ctx;
    let closed = ctx.closed()?;
    let irr = ctx.irr_c()?;
    let ks = ctx.compact()?;
    let fams = irr_c_smyth(ctx)?;
    let fact = search(false, &fams, |f| {
        let (_, minimal) = m_and_m_finite(closed, f);
        let ms: Vec<FinSubset> = minimal.into_iter().filter(|m| irr.contains(m)).collect();
        let meet: Family = ks
            .iter()
            .copied()
            .filter(|&k| ms.iter().all(|&m| k.meets(m)))
            .collect();
        (ms.is_empty() || &meet != f).then(|| {
            json!({"family": ctx.show_family(f), "minimal irreducible closed": ctx.show_family(&ms)})
        })
    });
    Ok(all_hold(vec![("⋂◇A over minimal sets", fact)]))
}

pub(super) fn topological_rudin(c: &Checker) -> Result<Outcome> {
    let ctx = &c.ctx;
    let p = &ctx.p;
    let fams = ctx.smyth_irreducible()?;
    let closed = ctx.closed()?;
    let irr = ctx.irr_c()?;
    let fact = search(fams.tier.is_bounded(), &fams.items, |f| {
        closed
            .iter()
            .filter(|&&cl| f.iter().all(|k| k.meets(cl)))
            .find_map(|&cl| {
                let cands: Vec<FinSubset> = irr
                    .iter()
                    .copied()
                    .filter(|&a| a.is_subset(cl) && f.iter().all(|k| k.meets(a)))
                    .collect();
                let found = cands
                    .iter()
                    .copied()
                    .filter(|&a| !cands.iter().any(|&b| b.is_proper_subset(a)))
                    .min();
                let valid = found.is_some_and(|a| check_witness(p, f, cl, a).is_valid());
                (!valid).then(|| json!({"family": ctx.show_family(f), "closed": ctx.show(cl)}))
            })
    });
    Ok(all_hold(vec![("minimal irreducible closed subset", fact)]))
}

pub(super) fn rudin_wf_chain(c: &Checker) -> Result<Outcome> {
    let ctx = &c.ctx;
    let p = &ctx.p;
    let ks = ctx.compact()?;
    let mut err = None;
    let cond = search(false, ctx.irr_c()?, |&a| {
        match p.maximal(a) {
            Ok(m) if m.is_empty() => return Some(json!({ "no maximal point": ctx.show(a) })),
            Ok(_) => {}
            Err(e) => {
                err = Some(e);
                return Some(Value::Null);
            }
        }
        ks.iter()
            .find(|&&k| !p.is_down_set(p.down_closure(a & k)))
            .map(|&k| json!({"irreducible closed": ctx.show(a), "compact": ctx.show(k)}))
    });
    if let Some(e) = err {
        return Err(e);
    }
    let sober = ctx.sober()?;
    let wf = ctx.well_filtered()?;
    let mut facts = vec![
        ("sober ⇒ condition", implies(&sober, &cond)),
        ("condition ⇒ well-filtered", implies(&cond, &wf)),
    ];
    let cc = ctx.core_compact()?;
    if cc.holds {
        let agree = sober.holds == cond.holds && cond.holds == wf.holds;
        facts.push((
            "equivalent when core compact",
            fact_of(agree, cc.bounded, || {
                json!({"sober": sober.holds, "condition": cond.holds, "well-filtered": wf.holds})
            }),
        ));
    }
    Ok(all_hold(facts))
}

pub(super) fn sober_core_compact_wf(v: &ClassificationVector) -> Outcome {
    let cc = flag(v, "core_compact");
    if !cc.holds {
        return Outcome::NotApplicable("hypothesis core compact does not hold".into());
    }
    let (wf, sober) = (v.well_filtered, v.sober);
    let form = if wf { "well-filtered ⇒ sober" } else { "not sober ⇒ not well-filtered" };
    let fact = fact_of(!wf || sober, v.bounded, || json!({"well_filtered": wf, "sober": sober}));
    all_hold(vec![(form, fact)])
}

pub(super) fn sober_equiv(v: &ClassificationVector) -> Outcome {
    let wf = || flag(v, "well_filtered");
    equivalent(vec![
        ("sober", flag(v, "sober")),
        ("DC d-space", both(flag(v, "dc_space"), flag(v, "d_space"))),
        ("well-filtered DC", both(wf(), flag(v, "dc_space"))),
        ("well-filtered Rudin", both(wf(), flag(v, "rudin_space"))),
        ("well-filtered WD", both(wf(), flag(v, "wd_space"))),
    ])
}

pub(super) fn wd_core_compact(v: &ClassificationVector) -> Outcome {
    implication(
        vec![("core compact", flag(v, "core_compact"))],
        vec![("WD", flag(v, "wd_space"))],
    )
}

pub(super) fn wf_add_top(c: &Checker) -> Result<Outcome> {
    let top = FiniteCtx::new(c.p().with_top()?, c.ctx.caps);
    Ok(implication(
        vec![("well-filtered", c.ctx.well_filtered()?)],
        vec![("with top well-filtered", top.well_filtered()?)],
    ))
}

pub(super) fn wf_lc_iff_core_compact(v: &ClassificationVector) -> Outcome {
    let (lc, cc) = (v.locally_compact, v.core_compact);
    implication(
        vec![("well-filtered", flag(v, "well_filtered"))],
        vec![(
            "locally compact iff core compact",
            fact_of(lc == cc, v.bounded, || json!({"locally_compact": lc, "core_compact": cc})),
        )],
    )
}

pub(super) fn dc_locally_hypercompact(v: &ClassificationVector) -> Outcome {
    implication(
        vec![("locally hypercompact", flag(v, "locally_hypercompact"))],
        vec![
            ("DC", flag(v, "dc_space")),
            ("Rudin", flag(v, "rudin_space")),
            ("WD", flag(v, "wd_space")),
        ],
    )
}
