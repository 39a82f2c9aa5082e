//! Characterizations of d-spaces, well-filtered spaces and sober spaces by
//! intersection conditions, equations and maps into sober spaces.

use serde_json::{json, Value};

use super::{both, equivalent, implication, Checker, Outcome};
use crate::classify::ctx::FiniteCtx;
use crate::classify::props::Fact;
use crate::enumerate::{meet, Family};
use crate::error::{Error, Result};
use crate::order::{FinPoset, FinSubset};
use crate::powerspace::{self, specialization_poset};
use crate::space::{self, image};

/// First counterexample among `items`, as a fact.
pub(super) fn search<T>(
    bounded: bool,
    items: impl IntoIterator<Item = T>,
    bad: impl FnMut(T) -> Option<Value>,
) -> Fact {
    Fact::from_search(bounded, items.into_iter().find_map(bad))
}

/// `Irr_c(P_S(X))`. The closure of a point `K` in the Smyth order is
/// `{K' ∈ K(X) : K ⊆ K'}`, and on a finite space every irreducible closed
/// set is a point closure.
pub(super) fn irr_c_smyth(ctx: &FiniteCtx) -> Result<Vec<Family>> {
    let ks = ctx.compact()?;
    Ok(ks
        .iter()
        .map(|&k| ks.iter().copied().filter(|&j| k.is_subset(j)).collect())
        .collect())
}

/// Irreducible closed sets of `S^u(X) = {↑x}` with the subspace topology of
/// `P_S(X)`, as sets of points `x`. The subbasic opens `□U ∩ S^u(X)` are
/// `{↑x : x ∈ U}`.
pub(super) fn irr_c_principal(ctx: &FiniteCtx) -> Result<Vec<FinSubset>> {
    let su = specialization_poset(ctx.n(), ctx.open()?)?;
    space::irreducible_closed(&su, &ctx.caps)
}

/// `↑(A ∩ K)` for every `A` in `sets` and every `K ∈ K(X)`, so the right
/// side of a family equation is a fold over table entries.
pub(super) struct UpTable<'a> {
    ks: &'a [FinSubset],
    rows: Vec<Vec<FinSubset>>,
}

impl<'a> UpTable<'a> {
    pub(super) fn new(p: &FinPoset, sets: &[FinSubset], ks: &'a [FinSubset]) -> Self {
        let rows = sets
            .iter()
            .map(|&a| ks.iter().map(|&k| p.up_closure(a & k)).collect())
            .collect();
        UpTable { ks, rows }
    }

    fn column(&self, k: FinSubset) -> usize {
        self.ks.binary_search(&k).expect("member of K(X)")
    }

    /// The first `(family, A)` where `↑(A ∩ ⋂𝒦) ≠ ⋂↑(A ∩ K)`.
    pub(super) fn family_equation(
        &self,
        ctx: &FiniteCtx,
        sets: &[FinSubset],
        fams: &[Family],
    ) -> Option<Value> {
        let p = &ctx.p;
        for f in fams {
            let cols: Vec<usize> = f.iter().map(|&k| self.column(k)).collect();
            let m = meet(ctx.n(), f);
            for (i, &a) in sets.iter().enumerate() {
                let lhs = p.up_closure(a & m);
                let rhs = cols.iter().fold(p.full(), |acc, &j| acc & self.rows[i][j]);
                if lhs != rhs {
                    return Some(json!({
                        "family": ctx.show_family(f),
                        "closed": ctx.show(a),
                        "lhs": ctx.show(lhs),
                        "rhs": ctx.show(rhs),
                    }));
                }
            }
        }
        None
    }
}

/// The first `(S, A)` where `↑(A ∩ ⋂↑s) ≠ ⋂↑(A ∩ ↑s)`.
pub(super) fn principal_equation(
    ctx: &FiniteCtx,
    ss: &[FinSubset],
    sets: &[FinSubset],
) -> Option<Value> {
    ss.iter().find_map(|&s| {
        sets.iter().find_map(|&a| {
            let (lhs, rhs) = crate::classify::probe::principal_sides(&ctx.p, s, a);
            (lhs != rhs).then(|| {
                json!({
                    "set": ctx.show(s),
                    "closed": ctx.show(a),
                    "lhs": ctx.show(lhs),
                    "rhs": ctx.show(rhs),
                })
            })
        })
    })
}

pub(super) fn describe(y: &FinPoset) -> Value {
    let covers: Vec<[&str; 2]> = y
        .covers()
        .into_iter()
        .map(|(a, b)| [y.label(a), y.label(b)])
        .collect();
    json!({ "points": y.len(), "covers": covers })
}

/// Continuous maps into the targets, and into the sobrification through η
/// when `with_eta` is set. A target with more maps than `caps.maps` is
/// skipped; map-quantified reports are bounded in any case.
pub(super) fn target_maps(c: &Checker, with_eta: bool) -> Result<Vec<(FinPoset, Vec<Vec<usize>>)>> {
    let mut out = Vec::new();
    for y in c.targets() {
        match space::monotone_maps_with(c.p(), y, &[], c.caps().maps) {
            Ok(maps) => out.push((y.clone(), maps)),
            Err(Error::CapExceeded { .. }) => {}
            Err(e) => return Err(e),
        }
    }
    if with_eta {
        let s = c.sobrification()?;
        out.push((s.space().clone(), vec![s.eta.clone()]));
    }
    Ok(out)
}

/// The first map and family where `↑f(⋂𝒜) ≠ ⋂↑f(K)`.
fn map_family_equation(
    ctx: &FiniteCtx,
    targets: &[(FinPoset, Vec<Vec<usize>>)],
    fams: &[Family],
) -> Option<Value> {
    let n = ctx.n();
    let meets: Vec<FinSubset> = fams.iter().map(|f| meet(n, f)).collect();
    for (y, maps) in targets {
        for f in maps {
            for (fam, &m) in fams.iter().zip(&meets) {
                let lhs = y.up_closure(image(f, m));
                let rhs = fam
                    .iter()
                    .fold(y.full(), |acc, &k| acc & y.up_closure(image(f, k)));
                if lhs != rhs {
                    return Some(json!({
                        "target": describe(y),
                        "map": f,
                        "family": ctx.show_family(fam),
                    }));
                }
            }
        }
    }
    None
}

/// `⋂𝒜 ⊆ U` forces some member inside `U`, for every family and open.
fn families_trap_opens(ctx: &FiniteCtx, fams: &[Family], bounded: bool) -> Result<Fact> {
    let opens = ctx.open()?;
    let n = ctx.n();
    Ok(search(bounded, fams, |f| {
        let m = meet(n, f);
        opens
            .iter()
            .find(|&&u| m.is_subset(u) && !f.iter().any(|k| k.is_subset(u)))
            .map(|&u| json!({"family": ctx.show_family(f), "open": ctx.show(u)}))
    }))
}

/// The families `{↑s : s ∈ S}` for each `S`.
fn principal_families(ctx: &FiniteCtx, ss: &[FinSubset]) -> Vec<Family> {
    ss.iter()
        .map(|&s| {
            let mut f: Family = s.iter().map(|x| ctx.p.up(x)).collect();
            f.sort();
            f.dedup();
            f
        })
        .collect()
}

/// `C = ⋂𝒜 ∈ K(X)` and `⋂↑(↓c ∩ K) = ↑(↓c ∩ C) = ↑c` for `c ∈ min C`.
fn min_corollary(ctx: &FiniteCtx, fams: &[Family], bounded: bool) -> Result<Fact> {
    let p = &ctx.p;
    let n = ctx.n();
    let mut err = None;
    let fact = search(bounded, fams, |f| {
        let c = meet(n, f);
        if c.is_empty() || !p.is_up_set(c) {
            return Some(json!({"family": ctx.show_family(f), "meet not in K(X)": ctx.show(c)}));
        }
        let mins = match p.minimal(c) {
            Ok(m) => m,
            Err(e) => {
                err = Some(e);
                return Some(Value::Null);
            }
        };
        mins.iter().find_map(|x| {
            let dx = p.down(x);
            let lhs = f.iter().fold(p.full(), |acc, &k| acc & p.up_closure(dx & k));
            let mid = p.up_closure(dx & c);
            (lhs != mid || mid != p.up(x)).then(|| {
                json!({"family": ctx.show_family(f), "minimal point": p.label(x)})
            })
        })
    });
    match err {
        Some(e) => Err(e),
        None => Ok(fact),
    }
}

pub(super) fn point_closures_sorted(p: &FinPoset) -> Vec<FinSubset> {
    let mut v = space::point_closures(p);
    v.sort();
    v.dedup();
    v
}

pub(super) fn d_bounded_4cond(c: &Checker) -> Result<Outcome> {
    let ctx = &c.ctx;
    let p = &ctx.p;
    let dir = ctx.directed()?;
    let b = dir.tier.is_bounded();
    let nonempty_rhs = |sets: &[FinSubset]| {
        search(b, &dir.items, |&d| {
            sets.iter().filter(|a| d.is_subset(**a)).find_map(|&a| {
                let (_, rhs) = crate::classify::probe::principal_sides(p, d, a);
                rhs.is_empty()
                    .then(|| json!({"directed": ctx.show(d), "closed": ctx.show(a)}))
            })
        })
    };
    Ok(equivalent(vec![
        ("d-bounded", ctx.d_bounded()?),
        (
            "directed sets have upper bounds",
            search(b, &dir.items, |&d| {
                p.upper_bounds(d)
                    .is_empty()
                    .then(|| json!({"directed": ctx.show(d)}))
            }),
        ),
        ("closed", nonempty_rhs(ctx.closed()?)),
        ("irreducible closed", nonempty_rhs(ctx.irr_c()?)),
    ]))
}

pub(super) fn d_space_7cond(c: &Checker) -> Result<Outcome> {
    let ctx = &c.ctx;
    let p = &ctx.p;
    let dir = ctx.directed()?;
    let b = dir.tier.is_bounded();
    let opens = ctx.open()?;
    let (dc, dc_bounded) = ctx.directed_closures()?;
    let sc = point_closures_sorted(p);
    let dc_is_sc = if dc == sc {
        Fact::ok(dc_bounded)
    } else {
        let extra: Vec<String> = dc
            .iter()
            .chain(&sc)
            .filter(|a| !(dc.contains(a) && sc.contains(a)))
            .map(|&a| ctx.show(a))
            .collect();
        Fact::fail(dc_bounded, json!({ "symmetric difference": extra }))
    };
    let trap = |ss: &[FinSubset], b: bool| {
        search(b, ss, |&s| {
            let ub = p.upper_bounds(s);
            opens
                .iter()
                .find(|&&u| ub.is_subset(u) && !s.meets(u))
                .map(|&u| json!({"set": ctx.show(s), "open": ctx.show(u)}))
        })
    };
    let meets_ub = |sets: &[FinSubset]| {
        search(b, &dir.items, |&d| {
            let ub = p.upper_bounds(d);
            sets.iter()
                .find(|&&a| d.is_subset(a) && !a.meets(ub))
                .map(|&a| json!({"directed": ctx.show(d), "closed": ctx.show(a)}))
        })
    };
    Ok(equivalent(vec![
        ("d-space", ctx.d_space()?),
        ("directed closures are point closures", dc_is_sc),
        ("directed sets", trap(&dir.items, b)),
        ("filtered families of principal filters", trap(ctx.principal_filtered()?, false)),
        ("closed", meets_ub(ctx.closed()?)),
        ("irreducible closed", meets_ub(ctx.irr_c()?)),
        (
            "closure",
            search(b, &dir.items, |&d| {
                (!p.down_closure(d).meets(p.upper_bounds(d)))
                    .then(|| json!({"directed": ctx.show(d)}))
            }),
        ),
    ]))
}

pub(super) fn d_space_equational(c: &Checker) -> Result<Outcome> {
    let ctx = &c.ctx;
    let dir = ctx.directed()?;
    let b = dir.tier.is_bounded();
    let pf = ctx.principal_filtered()?;
    let bounded = ctx.d_bounded()?;
    let eq = |ss: &[FinSubset], sets: &[FinSubset], b: bool| {
        both(
            bounded.clone(),
            Fact::from_search(b, principal_equation(ctx, ss, sets)),
        )
    };
    Ok(equivalent(vec![
        ("d-space", ctx.d_space()?),
        ("directed, closed", eq(&dir.items, ctx.closed()?, b)),
        ("principal filtered, closed", eq(pf, ctx.closed()?, false)),
        ("directed, irreducible closed", eq(&dir.items, ctx.irr_c()?, b)),
        ("principal filtered, irreducible closed", eq(pf, ctx.irr_c()?, false)),
    ]))
}

pub(super) fn d_space_map(c: &Checker) -> Result<Outcome> {
    let ctx = &c.ctx;
    let p = &ctx.p;
    let dir = ctx.directed()?;
    let b = dir.tier.is_bounded();
    let targets = target_maps(c, true)?;
    let mut eq_w = None;
    let mut sup_w = None;
    'outer: for (y, maps) in &targets {
        for f in maps {
            for &d in &dir.items {
                if eq_w.is_none() {
                    let lhs = y.up_closure(image(f, p.upper_bounds(d)));
                    let mid = d
                        .iter()
                        .fold(y.full(), |acc, x| acc & y.up_closure(image(f, p.up(x))));
                    let rhs = d.iter().fold(y.full(), |acc, x| acc & y.up(f[x]));
                    if lhs != mid || mid != rhs {
                        eq_w = Some(json!({"target": describe(y), "map": f, "directed": ctx.show(d)}));
                    }
                }
                if sup_w.is_none() {
                    let ok = match p.sup(d) {
                        Some(s) => y.sup(image(f, d)) == Some(f[s]),
                        None => false,
                    };
                    if !ok {
                        sup_w = Some(json!({"target": describe(y), "map": f, "directed": ctx.show(d)}));
                    }
                }
                if eq_w.is_some() && sup_w.is_some() {
                    break 'outer;
                }
            }
        }
    }
    let sup_fact = if p.is_dcpo() {
        Fact::from_search(b, sup_w)
    } else {
        Fact::fail(b, json!("not a dcpo"))
    };
    Ok(equivalent(vec![
        ("d-space", ctx.d_space()?),
        ("image equations", Fact::from_search(b, eq_w)),
        ("dcpo and sups preserved", sup_fact),
    ])
    .bounded(true))
}

/// `K(X)` is directed complete in the Smyth order: every filtered family
/// has a greatest compact set below its intersection.
fn compact_dcpo(ctx: &FiniteCtx) -> Result<Fact> {
    let fams = ctx.filtered()?;
    let ks = ctx.compact()?;
    let n = ctx.n();
    Ok(search(fams.tier.is_bounded(), &fams.items, |f| {
        let m = meet(n, f);
        let below: Vec<FinSubset> = ks.iter().copied().filter(|k| k.is_subset(m)).collect();
        let sup = below.iter().find(|&&g| below.iter().all(|k| k.is_subset(g)));
        sup.is_none().then(|| json!({"filtered family without sup": ctx.show_family(f)}))
    }))
}

pub(super) fn wf_equational(c: &Checker) -> Result<Outcome> {
    let ctx = &c.ctx;
    let fams = ctx.filtered()?;
    let b = fams.tier.is_bounded();
    let ks = ctx.compact()?;
    let closed = ctx.closed()?;
    let irr = ctx.irr_c()?;
    let eq_c = Fact::from_search(
        b,
        UpTable::new(&ctx.p, closed, ks).family_equation(ctx, closed, &fams.items),
    );
    let eq_i = Fact::from_search(
        b,
        UpTable::new(&ctx.p, irr, ks).family_equation(ctx, irr, &fams.items),
    );
    let dcpo = compact_dcpo(ctx)?;
    let ftip = ctx.ftip()?;
    Ok(equivalent(vec![
        ("well-filtered", ctx.well_filtered()?),
        ("K(X) dcpo, closed", both(dcpo.clone(), eq_c.clone())),
        ("K(X) dcpo, irreducible closed", both(dcpo, eq_i.clone())),
        ("FTIP, closed", both(ftip.clone(), eq_c)),
        ("FTIP, irreducible closed", both(ftip, eq_i)),
    ]))
}

pub(super) fn wf_map(c: &Checker) -> Result<Outcome> {
    let ctx = &c.ctx;
    let fams = ctx.filtered()?;
    let targets = target_maps(c, true)?;
    Ok(equivalent(vec![
        ("well-filtered", ctx.well_filtered()?),
        (
            "image equations",
            Fact::from_search(
                fams.tier.is_bounded(),
                map_family_equation(ctx, &targets, &fams.items),
            ),
        ),
    ])
    .bounded(true))
}

pub(super) fn wf_min_corollary(c: &Checker) -> Result<Outcome> {
    let ctx = &c.ctx;
    let fams = ctx.filtered()?;
    Ok(implication(
        vec![("well-filtered", ctx.well_filtered()?)],
        vec![(
            "minimal points",
            min_corollary(ctx, &fams.items, fams.tier.is_bounded())?,
        )],
    ))
}

pub(super) fn sober_7cond(c: &Checker) -> Result<Outcome> {
    let ctx = &c.ctx;
    let p = &ctx.p;
    let irr = ctx.irreducible()?;
    let b = irr.tier.is_bounded();
    let irr_c = ctx.irr_c()?;
    let opens = ctx.open()?;
    let trap = |ss: &[FinSubset], b: bool| {
        search(b, ss, |&s| {
            let ub = p.upper_bounds(s);
            opens
                .iter()
                .find(|&&u| ub.is_subset(u) && !s.meets(u))
                .map(|&u| json!({"set": ctx.show(s), "open": ctx.show(u)}))
        })
    };
    let su = principal_families(ctx, &irr_c_principal(ctx)?);
    Ok(equivalent(vec![
        ("sober", ctx.sober()?),
        (
            "irreducible, closure meets upper bounds",
            search(b, &irr.items, |&a| {
                (!p.down_closure(a).meets(p.upper_bounds(a)))
                    .then(|| json!({"irreducible": ctx.show(a)}))
            }),
        ),
        (
            "irreducible closed meets upper bounds",
            search(false, irr_c, |&a| {
                (!a.meets(p.upper_bounds(a))).then(|| json!({"irreducible closed": ctx.show(a)}))
            }),
        ),
        ("irreducible", trap(&irr.items, b)),
        ("irreducible closed", trap(irr_c, false)),
        ("principal irreducible families", trap(ctx.principal_irreducible()?, false)),
        (
            "irreducible closed families of S^u",
            families_trap_opens(ctx, &su, false)?,
        ),
    ]))
}

pub(super) fn sober_equational(c: &Checker) -> Result<Outcome> {
    let ctx = &c.ctx;
    let irr = ctx.irreducible()?;
    let b = irr.tier.is_bounded();
    let pi = ctx.principal_irreducible()?;
    let rb = ctx.r_bounded()?;
    let eq = |ss: &[FinSubset], sets: &[FinSubset], b: bool| {
        both(rb.clone(), Fact::from_search(b, principal_equation(ctx, ss, sets)))
    };
    Ok(equivalent(vec![
        ("sober", ctx.sober()?),
        ("irreducible, closed", eq(&irr.items, ctx.closed()?, b)),
        ("irreducible, irreducible closed", eq(&irr.items, ctx.irr_c()?, b)),
        ("principal irreducible, closed", eq(pi, ctx.closed()?, false)),
        ("principal irreducible, irreducible closed", eq(pi, ctx.irr_c()?, false)),
    ]))
}

pub(super) fn sober_rip_equational(c: &Checker) -> Result<Outcome> {
    let ctx = &c.ctx;
    let fams = ctx.smyth_irreducible()?;
    let b = fams.tier.is_bounded();
    let irr_c_ps = irr_c_smyth(ctx)?;
    let ks = ctx.compact()?;
    let closed = ctx.closed()?;
    let irr = ctx.irr_c()?;
    let tc = UpTable::new(&ctx.p, closed, ks);
    let ti = UpTable::new(&ctx.p, irr, ks);
    let rip = ctx.rip()?;
    let eq = |t: &UpTable, sets: &[FinSubset], fs: &[Family], b: bool| {
        both(rip.clone(), Fact::from_search(b, t.family_equation(ctx, sets, fs)))
    };
    Ok(equivalent(vec![
        ("sober", ctx.sober()?),
        ("Irr(P_S), closed", eq(&tc, closed, &fams.items, b)),
        ("Irr(P_S), irreducible closed", eq(&ti, irr, &fams.items, b)),
        ("Irr_c(P_S), closed", eq(&tc, closed, &irr_c_ps, false)),
        ("Irr_c(P_S), irreducible closed", eq(&ti, irr, &irr_c_ps, false)),
    ]))
}

pub(super) fn sober_map(c: &Checker) -> Result<Outcome> {
    let ctx = &c.ctx;
    let fams = ctx.smyth_irreducible()?;
    let irr_c_ps = irr_c_smyth(ctx)?;
    let targets = target_maps(c, true)?;
    Ok(equivalent(vec![
        ("sober", ctx.sober()?),
        (
            "Irr(P_S)",
            Fact::from_search(
                fams.tier.is_bounded(),
                map_family_equation(ctx, &targets, &fams.items),
            ),
        ),
        (
            "Irr_c(P_S)",
            Fact::from_search(false, map_family_equation(ctx, &targets, &irr_c_ps)),
        ),
    ])
    .bounded(true))
}

pub(super) fn sober_min_corollary(c: &Checker) -> Result<Outcome> {
    let ctx = &c.ctx;
    let fams = ctx.smyth_irreducible()?;
    Ok(implication(
        vec![("sober", ctx.sober()?)],
        vec![(
            "minimal points",
            min_corollary(ctx, &fams.items, fams.tier.is_bounded())?,
        )],
    ))
}

pub(super) fn hofmann_mislove(c: &Checker) -> Result<Outcome> {
    let ctx = &c.ctx;
    let r = powerspace::open_filters_and_phi(c.p(), c.caps())?;
    let b = r.tier.is_bounded();
    let images: Vec<&Vec<FinSubset>> = r.phi.iter().map(|(_, f)| f).collect();
    let every_filter_is_phi = search(b, &r.filters, |f| {
        (!images.contains(&f)).then(|| json!({ "filter": ctx.show_family(f) }))
    });
    let recovers = if r.recovers_k {
        Fact::ok(b)
    } else {
        Fact::fail(b, json!("some filter is not Φ of its intersection"))
    };
    let out = equivalent(vec![
        ("sober", ctx.sober()?),
        ("every open filter is some Φ(K)", every_filter_is_phi),
        ("every open filter is Φ of its intersection", recovers),
    ]);
    Ok(match out {
        Outcome::Pass { bounded, detail } if !r.phi_order_iso => Outcome::Fail {
            bounded,
            detail,
            witness: json!("Φ is not an order embedding"),
        },
        Outcome::Pass { bounded, mut detail } => {
            detail["open filters"] = json!(r.filters.len());
            detail["compact saturated"] = json!(r.phi.len());
            Outcome::Pass { bounded, detail }
        }
        other => other,
    })
}

pub(super) fn smyth_sober(c: &Checker) -> Result<Outcome> {
    let ctx = &c.ctx;
    let fams = ctx.smyth_irreducible()?;
    let ps = powerspace::smyth(c.p(), c.caps())?;
    let ps_ctx = FiniteCtx::new(ps.space, *c.caps());
    Ok(equivalent(vec![
        ("sober", ctx.sober()?),
        (
            "Irr(P_S)",
            families_trap_opens(ctx, &fams.items, fams.tier.is_bounded())?,
        ),
        ("Irr_c(P_S)", families_trap_opens(ctx, &irr_c_smyth(ctx)?, false)?),
        ("P_S(X) sober", ps_ctx.sober()?),
    ]))
}

pub(super) fn smyth_wf(c: &Checker) -> Result<Outcome> {
    let ctx = &c.ctx;
    let ps = powerspace::smyth(c.p(), c.caps())?;
    let ps_ctx = FiniteCtx::new(ps.space, *c.caps());
    Ok(equivalent(vec![
        ("well-filtered", ctx.well_filtered()?),
        ("P_S(X) d-space", ps_ctx.d_space()?),
        ("P_S(X) well-filtered", ps_ctx.well_filtered()?),
    ]))
}

pub(super) fn smyth_wd(c: &Checker) -> Result<Outcome> {
    let ctx = &c.ctx;
    let ps = powerspace::smyth(c.p(), c.caps())?;
    let ps_ctx = FiniteCtx::new(ps.space, *c.caps());
    Ok(implication(
        vec![("P_S(X) WD", ps_ctx.wd_space()?)],
        vec![("X WD", ctx.wd_space()?)],
    ))
}
