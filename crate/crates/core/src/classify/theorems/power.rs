//! Power spaces, `η` and `ξ`, and the well-filtered reflection
//! `X^w = P_H(WD(X))`.

use serde_json::json;

use super::characterizations::{describe, irr_c_principal, point_closures_sorted, search, target_maps};
use super::spaces::rudin_sets;
use super::{all_hold, equivalent, flag, Checker, Outcome};
use crate::classify::ctx::FiniteCtx;
use crate::classify::props::Fact;
use crate::classify::ClassificationVector;
use crate::enumerate::is_irreducible_finite;
use crate::error::{Error, Result};
use crate::order::{FinPoset, FinSubset};
use crate::powerspace::{self, specialization_poset};
use crate::reflect::{self, Reflection};
use crate::space::image;

fn truth(holds: bool, bounded: bool, witness: impl FnOnce() -> serde_json::Value) -> Fact {
    if holds {
        Fact::ok(bounded)
    } else {
        Fact::fail(bounded, witness())
    }
}

/// Nonempty subsets of `X`, or the irreducible and closed ones when there
/// are too many; the flag marks the sample.
fn test_sets(ctx: &FiniteCtx) -> Result<(Vec<FinSubset>, bool)> {
    match ctx.nonempty_subsets() {
        Ok(s) => Ok((s.to_vec(), false)),
        Err(Error::CapExceeded { .. }) => {
            let mut s = ctx.irreducible()?.items.clone();
            s.extend(ctx.closed()?.iter().copied().filter(|a| !a.is_empty()));
            s.sort();
            s.dedup();
            Ok((s, true))
        }
        Err(e) => Err(e),
    }
}

fn reflected_ctx(r: &Reflection, c: &Checker) -> FiniteCtx {
    FiniteCtx::new(r.space().clone(), *c.caps())
}

/// `cl η(A)` in the reflection.
fn closure_of_eta(r: &Reflection, a: FinSubset) -> FinSubset {
    r.space().down_closure(image(&r.eta, a))
}

pub(super) fn hoare_sober(c: &Checker) -> Result<Outcome> {
    let ps = powerspace::hoare_all_closed(c.p(), c.caps())?;
    let order = truth(ps.order_matches, false, || json!("order is not inclusion"));
    let sober = FiniteCtx::new(ps.space, *c.caps()).sober()?;
    Ok(all_hold(vec![("order is inclusion", order), ("sober", sober)]))
}

pub(super) fn smyth_order(c: &Checker) -> Result<Outcome> {
    let ps = powerspace::smyth(c.p(), c.caps())?;
    let fact = truth(ps.order_matches, false, || {
        json!({"points": ps.len(), "order": describe(&ps.labelled_space())})
    });
    Ok(all_hold(vec![("reverse inclusion", fact)]))
}

pub(super) fn smyth_union(c: &Checker) -> Result<Outcome> {
    let u = powerspace::union_map_check(c.p(), c.caps())?;
    let mut out = all_hold(vec![
        ("lands in K(X)", truth(u.lands_in_k, false, || json!("union not compact saturated"))),
        ("continuous", truth(u.continuous, false, || json!("union map not continuous"))),
    ]);
    if let Outcome::Pass { detail, .. } = &mut out {
        detail["points"] = json!(u.points);
    }
    Ok(out)
}

pub(super) fn smyth_meet_closure(c: &Checker) -> Result<Outcome> {
    let u = powerspace::union_map_check(c.p(), c.caps())?;
    let fact = truth(u.meet_in_smyth, u.meet_in_smyth_bounded, || {
        json!("some family meets differently from its closure")
    });
    Ok(all_hold(vec![("⋂𝒜 = ⋂ cl(𝒜)", fact)]))
}

pub(super) fn xi_irreducible(c: &Checker) -> Result<Outcome> {
    let ctx = &c.ctx;
    let p = &ctx.p;
    let ps = powerspace::smyth(p, c.caps())?;
    let xi = powerspace::xi(&ps, c.caps())?;
    let su = specialization_poset(ctx.n(), ctx.open()?)?;
    let (sets, bounded) = test_sets(ctx)?;
    let irr = search(bounded, &sets, |&a| {
        let here = is_irreducible_finite(p, a);
        let in_smyth = is_irreducible_finite(&ps.space, image(&xi.map, a));
        let in_su = is_irreducible_finite(&su, a);
        (here != in_smyth || here != in_su).then(|| {
            json!({"set": ctx.show(a), "irreducible": here, "in P_S": in_smyth, "in S^u": in_su})
        })
    });
    let mut irr_c_su = irr_c_principal(ctx)?;
    irr_c_su.sort();
    let irr_c = truth(irr_c_su == ctx.irr_c()?, false, || {
        json!({"Irr_c": ctx.show_family(ctx.irr_c().unwrap_or(&[])), "in S^u": ctx.show_family(&irr_c_su)})
    });
    Ok(all_hold(vec![
        ("ξ embedding", truth(xi.is_embedding(), false, || json!(xi))),
        ("irreducible", irr),
        ("irreducible closed", irr_c),
    ]))
}

pub(super) fn eta_embedding(c: &Checker) -> Result<Outcome> {
    let w = c.wf_reflection()?;
    let s = c.sobrification()?;
    Ok(all_hold(vec![
        ("into X^w", truth(w.eta_check.is_embedding(), false, || json!(w.eta_check))),
        ("into X^s", truth(s.eta_check.is_embedding(), false, || json!(s.eta_check))),
    ]))
}

pub(super) fn closure_box(c: &Checker) -> Result<Outcome> {
    let ctx = &c.ctx;
    let p = &ctx.p;
    let w = c.wf_reflection()?;
    let (sets, bounded) = test_sets(ctx)?;
    let general = search(bounded, &sets, |&a| {
        let cl = p.down_closure(a);
        let (x, y, z) = (closure_of_eta(w, a), closure_of_eta(w, cl), w.reflected.boxed(cl));
        (x != y || y != z).then(|| json!({ "set": ctx.show(a) }))
    });
    let lower = search(false, ctx.closed()?.iter().filter(|a| !a.is_empty()), |&a| {
        (closure_of_eta(w, a) != w.reflected.boxed(a)).then(|| json!({ "lower set": ctx.show(a) }))
    });
    Ok(all_hold(vec![
        ("cl η(A) = cl η(cl A) = □cl A", general),
        ("cl η(A) = □A for lower A", lower),
    ]))
}

pub(super) fn irreducible_box(c: &Checker) -> Result<Outcome> {
    let ctx = &c.ctx;
    let p = &ctx.p;
    let w = c.wf_reflection()?;
    let r = w.space();
    let (sets, bounded) = test_sets(ctx)?;
    let fact = search(bounded, &sets, |&a| {
        let here = is_irreducible_finite(p, a);
        let boxed = is_irreducible_finite(r, w.reflected.boxed(p.down_closure(a)));
        let lower_ok = !p.is_down_set(a) || here == is_irreducible_finite(r, w.reflected.boxed(a));
        (here != boxed || !lower_ok).then(|| json!({ "set": ctx.show(a), "irreducible": here }))
    });
    Ok(all_hold(vec![("irreducible iff □ irreducible", fact)]))
}

pub(super) fn wd_box(c: &Checker) -> Result<Outcome> {
    let ctx = &c.ctx;
    let w = c.wf_reflection()?;
    let wd = reflect::wd_family(ctx)?;
    let wd_w = reflect::wd_family(&reflected_ctx(w, c))?;
    let fact = search(false, ctx.closed()?.iter().filter(|a| !a.is_empty()), |&a| {
        let here = wd.contains(&a);
        let there = wd_w.contains(&w.reflected.boxed(a));
        (here != there).then(|| json!({"closed": ctx.show(a), "WD": here, "□ WD": there}))
    });
    Ok(all_hold(vec![("WD iff □ WD", fact)]))
}

pub(super) fn reflection_well_filtered(c: &Checker) -> Result<Outcome> {
    let w = reflected_ctx(c.wf_reflection()?, c);
    let s = reflected_ctx(c.sobrification()?, c);
    Ok(all_hold(vec![
        ("X^w well-filtered", w.well_filtered()?),
        ("X^s sober", s.sober()?),
    ]))
}

pub(super) fn wfwdc(c: &Checker) -> Result<Outcome> {
    let ctx = &c.ctx;
    let sc = point_closures_sorted(&ctx.p);
    let rd = rudin_sets(ctx)?;
    let wd = reflect::wd_family(ctx)?;
    let w = c.wf_reflection()?;
    let iso = reflect::homeomorphic(&ctx.p, w.space()).is_some();
    Ok(equivalent(vec![
        ("well-filtered", ctx.well_filtered()?),
        ("RD = S_c", truth(rd == sc, false, || json!({ "RD": ctx.show_family(&rd) }))),
        ("WD = S_c", truth(wd == sc, false, || json!({ "WD": ctx.show_family(&wd) }))),
        ("X ≅ X^w", truth(iso, false, || json!({ "X^w points": w.carrier().len() }))),
    ]))
}

pub(super) fn sober_iff_wd(c: &Checker) -> Result<Outcome> {
    let w = c.wf_reflection()?;
    let s = c.sobrification()?;
    let iso = reflect::homeomorphic(w.space(), s.space()).is_some();
    Ok(equivalent(vec![
        ("X^w ≅ X^s", truth(iso, false, || json!("not homeomorphic"))),
        ("X^w sober", reflected_ctx(w, c).sober()?),
        ("WD", c.ctx.wd_space()?),
    ]))
}

pub(super) fn sober_iff_wd_cofinite(v: &ClassificationVector) -> Outcome {
    let r = reflect::cofinite_reflection();
    equivalent(vec![
        ("X^w is the sobrification", truth(r.equals_sobrification, false, || json!(r))),
        ("X^w sober", truth(r.sober, false, || json!(r))),
        ("WD", flag(v, "wd_space")),
    ])
}

fn is_compact(ctx: &FiniteCtx) -> Result<Fact> {
    let full = ctx.full();
    Ok(truth(
        ctx.n() == 0 || ctx.compact()?.contains(&full),
        false,
        || json!("X is not compact"),
    ))
}

pub(super) fn reflection_compact(c: &Checker) -> Result<Outcome> {
    Ok(equivalent(vec![
        ("X compact", is_compact(&c.ctx)?),
        ("X^w compact", is_compact(&reflected_ctx(c.wf_reflection()?, c))?),
    ]))
}

pub(super) fn reflection_compact_cofinite(_: &ClassificationVector) -> Outcome {
    let r = reflect::cofinite_reflection();
    equivalent(vec![
        // every open cover has a member missing finitely many points
        ("X compact", Fact::ok(false)),
        ("X^w compact", truth(r.compact, false, || json!(r))),
    ])
}

pub(super) fn opens(c: &Checker) -> Result<Outcome> {
    let ctx = &c.ctx;
    let w = c.wf_reflection()?;
    let wctx = reflected_ctx(w, c);
    let ours = ctx.open()?;
    let theirs = wctx.open()?;
    let mut images: Vec<FinSubset> = ours.iter().map(|&u| w.reflected.diamond(u)).collect();
    let lands = search(false, ours.iter().zip(&images), |(&u, d)| {
        (!theirs.contains(d)).then(|| json!({ "open": ctx.show(u) }))
    });
    let order = search(false, ours.iter().zip(&images), |(&u, &du)| {
        ours.iter()
            .zip(&images)
            .find(|&(&v, &dv)| u.is_subset(v) != du.is_subset(dv))
            .map(|(&v, _)| json!({"U": ctx.show(u), "V": ctx.show(v)}))
    });
    images.sort();
    images.dedup();
    let onto = truth(images.len() == theirs.len() && images.len() == ours.len(), false, || {
        json!({"opens": ours.len(), "images": images.len(), "opens of X^w": theirs.len()})
    });
    Ok(all_hold(vec![
        ("◇U open", lands),
        ("order embedding", order),
        ("bijective", onto),
    ]))
}

pub(super) fn local(c: &Checker) -> Result<Outcome> {
    let ctx = &c.ctx;
    let wctx = reflected_ctx(c.wf_reflection()?, c);
    let same = |a: Fact, b: Fact| {
        let bounded = a.bounded || b.bounded;
        truth(a.holds == b.holds, bounded, || json!({"X": a.holds, "X^w": b.holds}))
    };
    let cc = ctx.core_compact()?;
    let cc_w = wctx.core_compact()?;
    let lc_w = wctx.locally_compact()?;
    let lc_agree = truth(cc_w.holds == lc_w.holds, cc_w.bounded || lc_w.bounded, || {
        json!({"core compact": cc_w.holds, "locally compact": lc_w.holds})
    });
    Ok(all_hold(vec![
        ("locally hypercompact", same(ctx.locally_hypercompact()?, wctx.locally_hypercompact()?)),
        ("C-space", same(ctx.c_space()?, wctx.c_space()?)),
        ("core compact", same(cc, cc_w)),
        ("X^w locally compact iff core compact", lc_agree),
    ]))
}

pub(super) fn universal(c: &Checker) -> Result<Outcome> {
    let w = c.wf_reflection()?;
    let mut bounded = false;
    let mut bad = None;
    'outer: for (y, maps) in target_maps(c, true)? {
        for f in &maps {
            let fz = reflect::factorize(w, &y, f, c.caps())?;
            bounded |= fz.bounded;
            if !(fz.commutes && fz.continuous && fz.is_unique()) {
                bad = Some(json!({"target": describe(&y), "map": f, "factorization": fz}));
                break 'outer;
            }
        }
    }
    Ok(all_hold(vec![("unique factorization", Fact::from_search(bounded, bad))]).bounded(true))
}

pub(super) fn functor(c: &Checker) -> Result<Outcome> {
    let rx = c.wf_reflection()?;
    let n = c.p().len();
    let id: Vec<usize> = (0..n).collect();
    let fid = reflect::functor_action(rx, rx, &id, c.caps())?;
    let wid: Vec<usize> = (0..rx.carrier().len()).collect();
    let identity = truth(fid.map == wid, false, || json!({ "image of identity": fid.map }));
    let mut bad = None;
    'outer: for (y, maps) in target_maps(c, false)? {
        let ry = reflect::wf_reflection_finite(&y, c.caps())?;
        for f in &maps {
            let fa = reflect::functor_action(rx, &ry, f, c.caps())?;
            if !(fa.commutes && fa.continuous) {
                bad = Some(json!({"target": describe(&y), "map": f, "action": fa}));
                break 'outer;
            }
        }
    }
    Ok(all_hold(vec![
        ("identity", identity),
        ("commutes and continuous", Fact::from_search(false, bad)),
    ])
    .bounded(true))
}

pub(super) fn product(c: &Checker) -> Result<Outcome> {
    let mut facts = Vec::new();
    for (name, y) in [("× 2-chain", FinPoset::chain2()), ("× Λ", FinPoset::lambda())] {
        let r = reflect::product_reflection_check(&[c.p().clone(), y], c.caps())?;
        facts.push((name, truth(r.is_homeomorphism(), false, || json!(r))));
    }
    Ok(all_hold(facts))
}
