//! Definitional checks of space properties on a finite space.

use serde::Serialize;
use serde_json::{json, Value};

use super::ctx::FiniteCtx;
use crate::enumerate::meet;
use crate::error::Result;
use crate::lattice::FinLattice;
use crate::order::FinSubset;
use crate::rudin;

/// Outcome of one check: whether it holds, whether any enumeration behind it
/// was a bounded sample, and a witness when it fails.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Fact {
    pub holds: bool,
    pub bounded: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
}

impl Fact {
    pub fn ok(bounded: bool) -> Self {
        Fact {
            holds: true,
            bounded,
            witness: None,
        }
    }

    pub fn fail(bounded: bool, witness: Value) -> Self {
        Fact {
            holds: false,
            bounded,
            witness: Some(witness),
        }
    }

    pub fn from_search(bounded: bool, counterexample: Option<Value>) -> Self {
        match counterexample {
            None => Fact::ok(bounded),
            Some(w) => Fact::fail(bounded, w),
        }
    }
}

impl FiniteCtx {
    pub fn show(&self, a: FinSubset) -> String {
        self.p.show(a)
    }

    pub fn show_family(&self, f: &[FinSubset]) -> Vec<String> {
        f.iter().map(|&k| self.show(k)).collect()
    }

    pub fn t1(&self) -> Fact {
        let w = self.p.strict_pairs().first().map(|&(x, y)| {
            json!({"below": self.p.label(x), "above": self.p.label(y)})
        });
        Fact::from_search(false, w)
    }

    /// dcpo, and every open set is Scott open.
    pub fn d_space(&self) -> Result<Fact> {
        let dir = self.directed()?;
        let b = dir.tier.is_bounded();
        if !self.p.is_dcpo() {
            return Ok(Fact::fail(b, json!("not a dcpo")));
        }
        let opens = self.open()?;
        for &d in &dir.items {
            let Some(s) = self.p.sup(d) else {
                return Ok(Fact::fail(b, json!({"directed without sup": self.show(d)})));
            };
            for &u in opens {
                if u.contains(s) && !d.meets(u) {
                    return Ok(Fact::fail(
                        b,
                        json!({"directed": self.show(d), "open": self.show(u)}),
                    ));
                }
            }
        }
        Ok(Fact::ok(b))
    }

    pub fn d_bounded(&self) -> Result<Fact> {
        let dir = self.directed()?;
        let w = dir
            .items
            .iter()
            .find(|&&d| self.p.upper_bounds(d).is_empty())
            .map(|&d| json!({"unbounded directed": self.show(d)}));
        Ok(Fact::from_search(dir.tier.is_bounded(), w))
    }

    /// For filtered `𝒦 ⊆ K(X)` and open `U`, `⋂𝒦 ⊆ U` forces some `K ⊆ U`.
    /// `⋂𝒦` is an up-set and hence open, so it is the only `U` to try.
    pub fn well_filtered(&self) -> Result<Fact> {
        self.cached_well_filtered(|| {
            let fam = self.filtered()?;
            let n = self.n();
            let bad = fam.items.iter().find_map(|f| {
                let i = meet(n, f);
                (!f.iter().any(|k| k.is_subset(i)))
                    .then(|| json!({"family": self.show_family(f), "open": self.show(i)}))
            });
            Ok(Fact::from_search(fam.tier.is_bounded(), bad))
        })
        .cloned()
    }

    /// Every irreducible closed set is the closure of exactly one point.
    pub fn sober(&self) -> Result<Fact> {
        for &a in self.irr_c()? {
            let generic: Vec<usize> = (0..self.n()).filter(|&x| self.p.down(x) == a).collect();
            if generic.len() != 1 {
                return Ok(Fact::fail(
                    false,
                    json!({"irreducible closed": self.show(a), "generic points": generic.len()}),
                ));
            }
        }
        Ok(Fact::ok(false))
    }

    /// `D_c(X)`, closures of the enumerated directed sets.
    pub fn directed_closures(&self) -> Result<(Vec<FinSubset>, bool)> {
        let dir = self.directed()?;
        let mut v: Vec<FinSubset> = dir.items.iter().map(|&d| self.p.down_closure(d)).collect();
        v.sort();
        v.dedup();
        Ok((v, dir.tier.is_bounded()))
    }

    pub fn dc_space(&self) -> Result<Fact> {
        let (dc, b) = self.directed_closures()?;
        let w = self
            .irr_c()?
            .iter()
            .find(|a| dc.binary_search(a).is_err())
            .map(|&a| json!({"not a directed closure": self.show(a)}));
        Ok(Fact::from_search(b, w))
    }

    pub fn rudin_space(&self) -> Result<Fact> {
        let compact = self.compact()?;
        let w = self
            .irr_c()?
            .iter()
            .find(|&&a| !rudin::is_rudin_set_with(&self.p, compact, a))
            .map(|&a| json!({"not a Rudin set": self.show(a)}));
        Ok(Fact::from_search(false, w))
    }

    /// `WD(X)` as computed by the status rules.
    pub fn wd_sets(&self) -> Result<(Vec<FinSubset>, bool)> {
        let mut out = Vec::new();
        let mut unknown = false;
        for &a in self.irr_c()? {
            let s = rudin::wd_status_ctx(self, a)?;
            if s.is_yes() {
                out.push(a);
            }
            unknown |= s.verdict == rudin::WdVerdict::Unknown;
        }
        Ok((out, unknown || self.well_filtered()?.bounded))
    }

    pub fn wd_space(&self) -> Result<Fact> {
        let (wd, b) = self.wd_sets()?;
        let w = self
            .irr_c()?
            .iter()
            .find(|a| !wd.contains(a))
            .map(|&a| json!({"not WD": self.show(a)}));
        Ok(Fact::from_search(b, w))
    }

    /// Every neighbourhood of `x` contains a compact neighbourhood of `x`.
    pub fn locally_compact(&self) -> Result<Fact> {
        let opens = self.open()?;
        let compact = self.compact()?;
        for x in 0..self.n() {
            for &u in opens.iter().filter(|u| u.contains(x)) {
                let found = compact
                    .iter()
                    .any(|&k| k.is_subset(u) && self.p.interior(k).contains(x));
                if !found {
                    return Ok(Fact::fail(
                        false,
                        json!({"point": self.p.label(x), "open": self.show(u)}),
                    ));
                }
            }
        }
        Ok(Fact::ok(false))
    }

    /// Every neighbourhood of `x` contains `↑F` with `F` finite and
    /// `x ∈ int ↑F`.
    pub fn locally_hypercompact(&self) -> Result<Fact> {
        let opens = self.open()?;
        for x in 0..self.n() {
            for &u in opens.iter().filter(|u| u.contains(x)) {
                let good = |f: FinSubset| {
                    let uf = self.p.up_closure(f);
                    uf.is_subset(u) && self.p.interior(uf).contains(x)
                };
                let found = u.iter().any(|y| good(FinSubset::singleton(y)))
                    || u.subsets().skip(1).any(good);
                if !found {
                    return Ok(Fact::fail(
                        false,
                        json!({"point": self.p.label(x), "open": self.show(u)}),
                    ));
                }
            }
        }
        Ok(Fact::ok(false))
    }

    /// Every neighbourhood `U` of `x` contains some `↑u` with
    /// `x ∈ int ↑u`.
    pub fn c_space(&self) -> Result<Fact> {
        let opens = self.open()?;
        for x in 0..self.n() {
            for &u in opens.iter().filter(|u| u.contains(x)) {
                let found = u.iter().any(|y| {
                    let up = self.p.up(y);
                    up.is_subset(u) && self.p.interior(up).contains(x)
                });
                if !found {
                    return Ok(Fact::fail(
                        false,
                        json!({"point": self.p.label(x), "open": self.show(u)}),
                    ));
                }
            }
        }
        Ok(Fact::ok(false))
    }

    /// The lattice of opens, when it fits the carrier limit.
    pub fn open_lattice(&self) -> Result<FinLattice> {
        FinLattice::of_sets(self.open()?)
    }

    /// `O(X)` is a continuous lattice.
    pub fn core_compact(&self) -> Result<Fact> {
        let l = self.open_lattice()?;
        Ok(if l.is_continuous() {
            Fact::ok(false)
        } else {
            Fact::fail(false, json!("lattice of opens is not continuous"))
        })
    }

    /// `O(X)` is distributive; on a finite lattice this is complete
    /// distributivity.
    pub fn opens_completely_distributive(&self) -> Result<Fact> {
        let l = self.open_lattice()?;
        Ok(if l.is_distributive() {
            Fact::ok(false)
        } else {
            Fact::fail(false, json!("lattice of opens is not distributive"))
        })
    }

    /// Finite intersection property for filtered families of `K(X)`.
    pub fn ftip(&self) -> Result<Fact> {
        let fam = self.filtered()?;
        let w = fam
            .items
            .iter()
            .find(|f| meet(self.n(), f).is_empty())
            .map(|f| json!({"family": self.show_family(f)}));
        Ok(Fact::from_search(fam.tier.is_bounded(), w))
    }

    /// Intersection property for irreducible subsets of `P_S(X)`.
    pub fn rip(&self) -> Result<Fact> {
        let fam = self.smyth_irreducible()?;
        let w = fam
            .items
            .iter()
            .find(|f| meet(self.n(), f).is_empty())
            .map(|f| json!({"family": self.show_family(f)}));
        Ok(Fact::from_search(fam.tier.is_bounded(), w))
    }

    pub fn irreducible_complete(&self) -> Result<Fact> {
        let irr = self.irreducible()?;
        let w = irr
            .items
            .iter()
            .find(|&&a| self.p.sup(a).is_none())
            .map(|&a| json!({"irreducible without sup": self.show(a)}));
        Ok(Fact::from_search(irr.tier.is_bounded(), w))
    }

    pub fn r_bounded(&self) -> Result<Fact> {
        let irr = self.irreducible()?;
        let w = irr
            .items
            .iter()
            .find(|&&a| self.p.upper_bounds(a).is_empty())
            .map(|&a| json!({"unbounded irreducible": self.show(a)}));
        Ok(Fact::from_search(irr.tier.is_bounded(), w))
    }

    /// Every nonempty subset has a maximal element.
    pub fn noetherian(&self) -> Result<Fact> {
        let w = self
            .nonempty_subsets()?
            .iter()
            .find(|&&a| self.p.maximal(a).map_or(true, |m| m.is_empty()))
            .map(|&a| json!({"no maximal element": self.show(a)}));
        Ok(Fact::from_search(false, w))
    }

    /// Every point is compact in the domain sense, `x ≪ x`.
    pub fn algebraic_points(&self) -> Result<Fact> {
        let dir = self.directed()?;
        for x in 0..self.n() {
            for &d in &dir.items {
                if let Some(s) = self.p.sup(d) {
                    if self.p.leq(x, s) && !d.iter().any(|y| self.p.leq(x, y)) {
                        return Ok(Fact::fail(
                            dir.tier.is_bounded(),
                            json!({"point": self.p.label(x), "directed": self.show(d)}),
                        ));
                    }
                }
            }
        }
        Ok(Fact::ok(dir.tier.is_bounded()))
    }

    /// Every up-set is Scott open.
    pub fn scott_is_alexandroff(&self) -> Result<Fact> {
        let dir = self.directed()?;
        for &u in self.open()? {
            for &d in &dir.items {
                if self.p.sup(d).map_or(false, |s| u.contains(s)) && !d.meets(u) {
                    return Ok(Fact::fail(
                        dir.tier.is_bounded(),
                        json!({"up-set": self.show(u), "directed": self.show(d)}),
                    ));
                }
            }
        }
        Ok(Fact::ok(dir.tier.is_bounded()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::Caps;
    use crate::order::FinPoset;

    fn ctx(p: FinPoset) -> FiniteCtx {
        FiniteCtx::new(p, Caps::default())
    }

    #[test]
    fn antichain_is_t1_chain_is_not() {
        assert!(ctx(FinPoset::antichain(3)).t1().holds);
        assert!(!ctx(FinPoset::chain(2)).t1().holds);
    }

    #[test]
    fn diamond_properties() {
        let c = ctx(FinPoset::diamond());
        for f in [
            c.d_space(),
            c.d_bounded(),
            c.well_filtered(),
            c.sober(),
            c.dc_space(),
            c.rudin_space(),
            c.wd_space(),
            c.locally_compact(),
            c.locally_hypercompact(),
            c.c_space(),
            c.core_compact(),
            c.ftip(),
            c.rip(),
            c.irreducible_complete(),
            c.r_bounded(),
            c.noetherian(),
            c.algebraic_points(),
            c.scott_is_alexandroff(),
            c.opens_completely_distributive(),
        ] {
            let f = f.unwrap();
            assert!(f.holds && !f.bounded, "{f:?}");
        }
    }

    #[test]
    fn antichain_directed_sets_are_points() {
        let c = ctx(FinPoset::antichain(2));
        assert!(c.d_bounded().unwrap().holds);
        assert!(c.r_bounded().unwrap().holds);
        assert_eq!(c.directed().unwrap().items.len(), 2);
        assert_eq!(c.irr_c().unwrap().len(), 2);
        assert!(c.principal_filtered().unwrap().len() == 2);
    }
}
