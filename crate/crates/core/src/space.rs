//! Spaces: finite T0 spaces (posets with the Alexandroff topology, opens are
//! up-sets) and the cofinite topology on a countably infinite carrier, which
//! is handled symbolically.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::config::Caps;
use crate::enumerate::{directed_subsets, is_irreducible_finite};
use crate::error::{Error, Result};
use crate::order::{FinPoset, FinSubset};
use crate::rudin;

/// A space handle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Space {
    Finite(FinPoset),
    /// The natural numbers with the cofinite topology.
    Cofinite,
}

/// A finite or cofinite subset of the cofinite space's carrier (the natural
/// numbers). `Cofinite(s)` is the complement of `s`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(tag = "kind", content = "support", rename_all = "lowercase")]
pub enum FinOrCofinSet {
    Finite(BTreeSet<u64>),
    Cofinite(BTreeSet<u64>),
}

impl FinOrCofinSet {
    pub fn empty() -> Self {
        FinOrCofinSet::Finite(BTreeSet::new())
    }

    pub fn whole() -> Self {
        FinOrCofinSet::Cofinite(BTreeSet::new())
    }

    pub fn finite<I: IntoIterator<Item = u64>>(items: I) -> Self {
        FinOrCofinSet::Finite(items.into_iter().collect())
    }

    /// The complement of a finite set.
    pub fn cofinite<I: IntoIterator<Item = u64>>(missing: I) -> Self {
        FinOrCofinSet::Cofinite(missing.into_iter().collect())
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, FinOrCofinSet::Finite(_))
    }

    pub fn is_empty(&self) -> bool {
        matches!(self, FinOrCofinSet::Finite(s) if s.is_empty())
    }

    pub fn is_whole(&self) -> bool {
        matches!(self, FinOrCofinSet::Cofinite(s) if s.is_empty())
    }

    /// Number of points for finite sets.
    pub fn finite_len(&self) -> Option<usize> {
        match self {
            FinOrCofinSet::Finite(s) => Some(s.len()),
            FinOrCofinSet::Cofinite(_) => None,
        }
    }

    pub fn contains(&self, x: u64) -> bool {
        match self {
            FinOrCofinSet::Finite(s) => s.contains(&x),
            FinOrCofinSet::Cofinite(s) => !s.contains(&x),
        }
    }

    pub fn complement(&self) -> Self {
        match self {
            FinOrCofinSet::Finite(s) => FinOrCofinSet::Cofinite(s.clone()),
            FinOrCofinSet::Cofinite(s) => FinOrCofinSet::Finite(s.clone()),
        }
    }

    pub fn union(&self, other: &Self) -> Self {
        use FinOrCofinSet::*;
        match (self, other) {
            (Finite(a), Finite(b)) => Finite(a | b),
            (Finite(a), Cofinite(b)) | (Cofinite(b), Finite(a)) => Cofinite(b - a),
            (Cofinite(a), Cofinite(b)) => Cofinite(a & b),
        }
    }

    pub fn intersection(&self, other: &Self) -> Self {
        self.complement().union(&other.complement()).complement()
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.intersection(&other.complement()).is_empty()
    }

    pub fn meets(&self, other: &Self) -> bool {
        !self.intersection(other).is_empty()
    }
}

/// A subset of some space.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(untagged)]
pub enum SpaceSubset {
    Finite(FinSubset),
    Cofinite(FinOrCofinSet),
}

impl SpaceSubset {
    pub fn as_finite(&self) -> Result<FinSubset> {
        match self {
            SpaceSubset::Finite(a) => Ok(*a),
            SpaceSubset::Cofinite(_) => Err(Error::InvalidArgument(
                "expected a subset of a finite space".into(),
            )),
        }
    }

    pub fn as_cofinite(&self) -> Result<&FinOrCofinSet> {
        match self {
            SpaceSubset::Cofinite(a) => Ok(a),
            SpaceSubset::Finite(_) => Err(Error::InvalidArgument(
                "expected a subset of the cofinite space".into(),
            )),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TopologyOps {
    pub closure: SpaceSubset,
    pub interior: SpaceSubset,
    pub saturation: SpaceSubset,
}

impl Space {
    pub fn poset(&self) -> Result<&FinPoset> {
        match self {
            Space::Finite(p) => Ok(p),
            Space::Cofinite => Err(Error::Unsupported(
                "the cofinite space has no finite poset".into(),
            )),
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, Space::Finite(_))
    }

    /// Checks that `a` is a subset of this space's carrier.
    pub fn check(&self, a: &SpaceSubset) -> Result<()> {
        match (self, a) {
            (Space::Finite(p), SpaceSubset::Finite(s)) => p.check_subset(*s),
            (Space::Cofinite, SpaceSubset::Cofinite(_)) => Ok(()),
            _ => Err(Error::InvalidArgument("subset of the wrong kind of space".into())),
        }
    }

    pub fn closure(&self, a: &SpaceSubset) -> Result<SpaceSubset> {
        self.check(a)?;
        Ok(match (self, a) {
            (Space::Finite(p), SpaceSubset::Finite(s)) => SpaceSubset::Finite(p.down_closure(*s)),
            (_, SpaceSubset::Cofinite(s)) if s.is_finite() => a.clone(),
            _ => SpaceSubset::Cofinite(FinOrCofinSet::whole()),
        })
    }

    pub fn interior(&self, a: &SpaceSubset) -> Result<SpaceSubset> {
        self.check(a)?;
        Ok(match (self, a) {
            (Space::Finite(p), SpaceSubset::Finite(s)) => SpaceSubset::Finite(p.interior(*s)),
            (_, SpaceSubset::Cofinite(s)) if !s.is_finite() => a.clone(),
            _ => SpaceSubset::Cofinite(FinOrCofinSet::empty()),
        })
    }

    /// Intersection of all opens containing `a`.
    pub fn saturation(&self, a: &SpaceSubset) -> Result<SpaceSubset> {
        self.check(a)?;
        Ok(match (self, a) {
            (Space::Finite(p), SpaceSubset::Finite(s)) => SpaceSubset::Finite(p.up_closure(*s)),
            // the specialization order of a T1 space is discrete
            _ => a.clone(),
        })
    }

    pub fn is_closed(&self, a: &SpaceSubset) -> Result<bool> {
        Ok(self.closure(a)? == *a)
    }

    pub fn is_open(&self, a: &SpaceSubset) -> Result<bool> {
        Ok(self.interior(a)? == *a)
    }

    /// Irreducibility. Finite spaces use the ideal criterion; in the cofinite
    /// space a set is irreducible exactly when it is a singleton or infinite.
    pub fn is_irreducible(&self, a: &SpaceSubset) -> Result<bool> {
        self.check(a)?;
        Ok(match (self, a) {
            (Space::Finite(p), SpaceSubset::Finite(s)) => is_irreducible_finite(p, *s),
            (_, SpaceSubset::Cofinite(s)) => s.finite_len().map_or(true, |k| k == 1),
            _ => unreachable!(),
        })
    }
}

pub fn topology_ops(x: &Space, a: &SpaceSubset) -> Result<TopologyOps> {
    Ok(TopologyOps {
        closure: x.closure(a)?,
        interior: x.interior(a)?,
        saturation: x.saturation(a)?,
    })
}

pub fn is_irreducible(x: &Space, a: &SpaceSubset) -> Result<bool> {
    x.is_irreducible(a)
}

/// Closed sets of a finite space (its down-sets), ascending.
pub fn closed_sets(p: &FinPoset, caps: &Caps) -> Result<Vec<FinSubset>> {
    p.down_sets(caps.lattice)
}

/// Open sets of a finite space (its up-sets), ascending.
pub fn open_sets(p: &FinPoset, caps: &Caps) -> Result<Vec<FinSubset>> {
    p.up_sets(caps.lattice)
}

/// `K(X)`: nonempty compact saturated sets. Every subset of a finite space is
/// compact, so these are the nonempty up-sets.
pub fn compact_saturated(p: &FinPoset, caps: &Caps) -> Result<Vec<FinSubset>> {
    Ok(open_sets(p, caps)?.into_iter().filter(|k| !k.is_empty()).collect())
}

/// Irreducible closed sets, ascending.
pub fn irreducible_closed(p: &FinPoset, caps: &Caps) -> Result<Vec<FinSubset>> {
    Ok(closed_sets(p, caps)?
        .into_iter()
        .filter(|&a| is_irreducible_finite(p, a))
        .collect())
}

/// `S_c(X)`: point closures `↓x`.
pub fn point_closures(p: &FinPoset) -> Vec<FinSubset> {
    let mut v: Vec<FinSubset> = (0..p.len()).map(|x| p.down(x)).collect();
    v.sort();
    v.dedup();
    v
}

/// `S^u(X)`: principal filters `↑x`.
pub fn principal_filters(p: &FinPoset) -> Vec<FinSubset> {
    let mut v: Vec<FinSubset> = (0..p.len()).map(|x| p.up(x)).collect();
    v.sort();
    v.dedup();
    v
}

/// `D_c(X)`: closures of directed sets.
pub fn directed_closures(p: &FinPoset, caps: &Caps) -> Result<Vec<FinSubset>> {
    let d = directed_subsets(p, caps);
    if d.tier.is_bounded() {
        return Err(Error::CapExceeded {
            what: "directed subsets",
            size: p.len(),
            cap: caps.carrier,
        });
    }
    let mut v: Vec<FinSubset> = d.items.into_iter().map(|a| p.down_closure(a)).collect();
    v.sort();
    v.dedup();
    Ok(v)
}

/// The named families of closed and saturated sets of a finite space.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FiniteFamilies {
    pub closed: Vec<FinSubset>,
    pub open: Vec<FinSubset>,
    pub irreducible_closed: Vec<FinSubset>,
    pub directed_closures: Vec<FinSubset>,
    pub point_closures: Vec<FinSubset>,
    pub rudin: Vec<FinSubset>,
    pub well_filtered_determined: Vec<FinSubset>,
    pub compact_saturated: Vec<FinSubset>,
    pub supercompact: Vec<FinSubset>,
}

/// Families of the cofinite space, described symbolically.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SymbolicFamilies {
    pub closed: &'static str,
    pub open: &'static str,
    pub irreducible_closed: &'static str,
    pub directed_closures: &'static str,
    pub point_closures: &'static str,
    pub rudin: &'static str,
    pub well_filtered_determined: &'static str,
    pub compact_saturated: &'static str,
    pub supercompact: &'static str,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Families {
    Finite(FiniteFamilies),
    Symbolic(SymbolicFamilies),
}

pub const COFINITE_FAMILIES: SymbolicFamilies = SymbolicFamilies {
    closed: "finite sets and X",
    open: "cofinite sets and the empty set",
    irreducible_closed: "singletons and X",
    directed_closures: "singletons",
    point_closures: "singletons",
    rudin: "singletons and X",
    well_filtered_determined: "singletons and X",
    compact_saturated: "all nonempty subsets",
    supercompact: "singletons",
};

pub fn enumerate_families(x: &Space, caps: &Caps) -> Result<Families> {
    let p = match x {
        Space::Cofinite => return Ok(Families::Symbolic(COFINITE_FAMILIES)),
        Space::Finite(p) => p,
    };
    let closed = closed_sets(p, caps)?;
    let open = open_sets(p, caps)?;
    let irr = irreducible_closed(p, caps)?;
    let compact: Vec<FinSubset> = open.iter().copied().filter(|k| !k.is_empty()).collect();
    let mut rd = Vec::new();
    let mut wd = Vec::new();
    for &a in &irr {
        if rudin::is_rudin_set_finite(p, a) {
            rd.push(a);
        }
        if rudin::wd_status(x, &SpaceSubset::Finite(a), caps)?.is_yes() {
            wd.push(a);
        }
    }
    let supercompact = compact
        .iter()
        .copied()
        .filter(|&k| is_supercompact_finite(&open, k))
        .collect();
    Ok(Families::Finite(FiniteFamilies {
        directed_closures: directed_closures(p, caps)?,
        point_closures: point_closures(p),
        closed,
        open,
        irreducible_closed: irr,
        rudin: rd,
        well_filtered_determined: wd,
        compact_saturated: compact,
        supercompact,
    }))
}

/// Materialized `K(X)`; unsupported for the cofinite space.
pub fn compact_family(x: &Space, caps: &Caps) -> Result<Vec<FinSubset>> {
    match x {
        Space::Finite(p) => compact_saturated(p, caps),
        Space::Cofinite => Err(Error::Unsupported(
            "K(X) of the cofinite space is uncountable and has no finite listing".into(),
        )),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MinOfCompact {
    pub min: SpaceSubset,
    /// Whether `K = ↑min(K)`.
    pub saturation_of_min_is_k: bool,
}

pub fn min_of_compact(x: &Space, k: &SpaceSubset) -> Result<MinOfCompact> {
    x.check(k)?;
    match (x, k) {
        (Space::Finite(p), SpaceSubset::Finite(s)) => {
            if s.is_empty() || !p.is_up_set(*s) {
                return Err(Error::InvalidArgument(
                    "expected a nonempty compact saturated set".into(),
                ));
            }
            let m = p.minimal(*s)?;
            Ok(MinOfCompact {
                min: SpaceSubset::Finite(m),
                saturation_of_min_is_k: p.up_closure(m) == *s,
            })
        }
        (_, SpaceSubset::Cofinite(s)) => {
            if s.is_empty() {
                return Err(Error::InvalidArgument(
                    "expected a nonempty compact saturated set".into(),
                ));
            }
            Ok(MinOfCompact {
                min: k.clone(),
                saturation_of_min_is_k: true,
            })
        }
        _ => unreachable!(),
    }
}

/// Supercompactness by definition, over pairs of opens: `K` is nonempty and
/// whenever `K ⊆ U ∪ V`, already `K ⊆ U` or `K ⊆ V`. Finite covers reduce
/// to pairs by induction, and a finite space has only finite covers.
pub fn is_supercompact_finite(opens: &[FinSubset], k: FinSubset) -> bool {
    !k.is_empty()
        && opens.iter().all(|&u| {
            k.is_subset(u)
                || opens
                    .iter()
                    .all(|&v| !k.is_subset(u | v) || k.is_subset(v))
        })
}

pub fn is_supercompact(x: &Space, k: &SpaceSubset, caps: &Caps) -> Result<bool> {
    x.check(k)?;
    match (x, k) {
        (Space::Finite(p), SpaceSubset::Finite(s)) => {
            Ok(is_supercompact_finite(&open_sets(p, caps)?, *s))
        }
        // a set with two points a, b is covered by X∖{a} and X∖{b}
        (_, SpaceSubset::Cofinite(s)) => Ok(s.finite_len() == Some(1)),
        _ => unreachable!(),
    }
}

/// Monotone maps `x -> y`, optionally with some values fixed in advance.
/// Fails once more than `cap` maps have been found.
pub fn monotone_maps_with(
    x: &FinPoset,
    y: &FinPoset,
    fixed: &[Option<usize>],
    cap: usize,
) -> Result<Vec<Vec<usize>>> {
    let order = x.linear_extension();
    let mut out = Vec::new();
    let mut f = vec![usize::MAX; x.len()];
    fn go(
        k: usize,
        order: &[usize],
        x: &FinPoset,
        y: &FinPoset,
        fixed: &[Option<usize>],
        f: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
        cap: usize,
    ) -> Result<()> {
        if k == order.len() {
            if out.len() == cap {
                return Err(Error::CapExceeded {
                    what: "continuous maps",
                    size: cap + 1,
                    cap,
                });
            }
            out.push(f.clone());
            return Ok(());
        }
        let a = order[k];
        // everything below `a` is already assigned
        let lower = x.down(a).without(a);
        let bound = lower.iter().fold(y.full(), |acc, b| acc & y.up(f[b]));
        let choices = match fixed.get(a).copied().flatten() {
            Some(v) => FinSubset::singleton(v) & bound,
            None => bound,
        };
        for v in choices.iter() {
            f[a] = v;
            go(k + 1, order, x, y, fixed, f, out, cap)?;
        }
        f[a] = usize::MAX;
        Ok(())
    }
    if y.is_empty() {
        return Ok(if x.is_empty() { vec![vec![]] } else { vec![] });
    }
    go(0, &order, x, y, fixed, &mut f, &mut out, cap)?;
    out.sort();
    Ok(out)
}

/// All continuous maps between finite spaces. On Alexandroff spaces these
/// are the monotone maps; the unit tests check that against the
/// preimage-of-opens definition.
pub fn continuous_maps(x: &Space, y: &Space, cap: usize) -> Result<Vec<Vec<usize>>> {
    monotone_maps_with(x.poset()?, y.poset()?, &[], cap)
}

pub fn is_monotone(x: &FinPoset, y: &FinPoset, f: &[usize]) -> bool {
    x.strict_pairs().into_iter().all(|(a, b)| y.leq(f[a], f[b]))
}

/// Continuity by preimages: the preimage of every open of `y` is open in `x`.
pub fn is_continuous(x: &FinPoset, y: &FinPoset, f: &[usize], caps: &Caps) -> Result<bool> {
    Ok(open_sets(y, caps)?
        .into_iter()
        .all(|v| x.is_up_set(preimage(x, f, v))))
}

pub fn image(f: &[usize], a: FinSubset) -> FinSubset {
    a.iter().map(|i| f[i]).collect()
}

pub fn preimage(x: &FinPoset, f: &[usize], b: FinSubset) -> FinSubset {
    (0..x.len()).filter(|&i| b.contains(f[i])).collect()
}

/// Finite product. The product topology of finitely many finite spaces is
/// the Alexandroff topology of the product order.
pub fn product(spaces: &[Space]) -> Result<Space> {
    let mut acc = FinPoset::chain(1).with_labels(["()"])?;
    for (i, s) in spaces.iter().enumerate() {
        let p = s.poset()?;
        acc = if i == 0 { p.clone() } else { acc.product(p)? };
    }
    Ok(Space::Finite(acc))
}

/// Subspace on a closed set; returns the subspace and its inclusion map.
pub fn subspace_closed(x: &Space, a: &SpaceSubset) -> Result<(Space, Vec<usize>)> {
    let p = x.poset()?;
    let s = a.as_finite()?;
    p.check_subset(s)?;
    if !p.is_down_set(s) {
        return Err(Error::InvalidArgument("subset is not closed".into()));
    }
    let (q, emb) = p.induced(s)?;
    Ok((Space::Finite(q), emb))
}

/// Adjoins a top point whose only open neighbourhood is the whole space.
pub fn add_top(x: &Space) -> Result<Space> {
    match x {
        Space::Finite(p) => Ok(Space::Finite(p.with_top()?)),
        Space::Cofinite => Err(Error::Unsupported(
            "adding a top to the cofinite space leaves both representable kinds".into(),
        )),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::posets_up_to_iso;
    use crate::iso::is_isomorphic;

    fn caps() -> Caps {
        Caps::default()
    }

    // Irreducibility straight from the definition: never covered by two
    // closed sets without lying in one of them.
    fn irreducible_oracle(closed: &[FinSubset], a: FinSubset) -> bool {
        !a.is_empty()
            && closed.iter().all(|&f1| {
                closed
                    .iter()
                    .all(|&f2| !a.is_subset(f1 | f2) || a.is_subset(f1) || a.is_subset(f2))
            })
    }

    #[test]
    fn ideal_criterion_matches_definition_up_to_five_points() {
        for n in 0..=5 {
            for p in posets_up_to_iso(n) {
                let closed = closed_sets(&p, &caps()).unwrap();
                for a in p.full().subsets() {
                    assert_eq!(
                        is_irreducible_finite(&p, a),
                        irreducible_oracle(&closed, a),
                        "{p:?} {a:?}"
                    );
                }
            }
        }
    }

    #[test]
    fn monotone_iff_continuous_up_to_four_points() {
        for n in 1..=4 {
            for p in posets_up_to_iso(n) {
                for q in posets_up_to_iso(3) {
                    let maps = monotone_maps_with(&p, &q, &[], usize::MAX).unwrap();
                    let mut count = 0;
                    // every function p -> q, checked both ways
                    let total = q.len().pow(n as u32);
                    for code in 0..total {
                        let f: Vec<usize> =
                            (0..n).map(|i| code / q.len().pow(i as u32) % q.len()).collect();
                        let cont = is_continuous(&p, &q, &f, &caps()).unwrap();
                        assert_eq!(cont, is_monotone(&p, &q, &f));
                        if cont {
                            count += 1;
                            assert!(maps.binary_search(&f).is_ok());
                        }
                    }
                    assert_eq!(count, maps.len());
                }
            }
        }
    }

    #[test]
    fn lambda_families() {
        let x = Space::Finite(FinPoset::lambda());
        let Families::Finite(f) = enumerate_families(&x, &caps()).unwrap() else {
            panic!()
        };
        let names = |v: &[FinSubset]| {
            let p = FinPoset::lambda();
            v.iter().map(|&a| p.show(a)).collect::<Vec<_>>()
        };
        assert_eq!(names(&f.irreducible_closed), ["{0}", "{0,a}", "{0,b}"]);
        assert_eq!(f.compact_saturated.len(), 4);
        assert_eq!(f.directed_closures, f.irreducible_closed);
        assert_eq!(f.point_closures, f.irreducible_closed);
        assert_eq!(f.rudin, f.irreducible_closed);
        assert_eq!(f.well_filtered_determined, f.irreducible_closed);
        assert_eq!(f.supercompact.len(), 3);
    }

    #[test]
    fn chain_families() {
        let x = Space::Finite(FinPoset::chain2());
        let Families::Finite(f) = enumerate_families(&x, &caps()).unwrap() else {
            panic!()
        };
        assert_eq!(f.irreducible_closed, vec![FinSubset::from_bits(1), FinSubset::from_bits(3)]);
        assert_eq!(f.compact_saturated.len(), 2);
    }

    #[test]
    fn supercompact_iff_principal() {
        for n in 1..=4 {
            for p in posets_up_to_iso(n) {
                let opens = open_sets(&p, &caps()).unwrap();
                let principal = principal_filters(&p);
                for &k in &opens {
                    assert_eq!(is_supercompact_finite(&opens, k), principal.contains(&k));
                }
            }
        }
    }

    #[test]
    fn monotone_map_counts() {
        let chain = FinPoset::chain(2);
        assert_eq!(monotone_maps_with(&FinPoset::lambda(), &chain, &[], 100).unwrap().len(), 5);
        assert_eq!(monotone_maps_with(&FinPoset::antichain(2), &chain, &[], 100).unwrap().len(), 4);
        assert!(monotone_maps_with(&FinPoset::antichain(4), &chain, &[], 10).is_err());
    }

    #[test]
    fn top_of_two_chain_is_three_chain() {
        let x = Space::Finite(FinPoset::chain2());
        let t = add_top(&x).unwrap();
        assert!(is_isomorphic(t.poset().unwrap(), &FinPoset::chain(3)));
        let closed = closed_sets(t.poset().unwrap(), &caps()).unwrap();
        assert_eq!(closed.len(), 4);
        assert!(add_top(&Space::Cofinite).is_err());
    }

    #[test]
    fn cofinite_ops() {
        let x = Space::Cofinite;
        let f = SpaceSubset::Cofinite(FinOrCofinSet::finite([1, 2]));
        let c = SpaceSubset::Cofinite(FinOrCofinSet::cofinite([1]));
        assert_eq!(x.closure(&f).unwrap(), f);
        assert_eq!(x.closure(&c).unwrap(), SpaceSubset::Cofinite(FinOrCofinSet::whole()));
        assert!(x.interior(&f).unwrap() == SpaceSubset::Cofinite(FinOrCofinSet::empty()));
        assert!(!x.is_irreducible(&f).unwrap());
        assert!(x.is_irreducible(&c).unwrap());
        assert!(x.is_irreducible(&SpaceSubset::Cofinite(FinOrCofinSet::finite([4]))).unwrap());
        assert!(compact_family(&x, &caps()).is_err());
        assert!(matches!(enumerate_families(&x, &caps()).unwrap(), Families::Symbolic(_)));
        assert!(is_supercompact(&x, &SpaceSubset::Cofinite(FinOrCofinSet::finite([3])), &caps()).unwrap());
        assert!(!is_supercompact(&x, &c, &caps()).unwrap());
    }

    #[test]
    fn fin_or_cofin_algebra() {
        let a = FinOrCofinSet::finite([1, 2]);
        let b = FinOrCofinSet::cofinite([2, 3]);
        assert_eq!(a.union(&b), FinOrCofinSet::cofinite([3]));
        assert_eq!(a.intersection(&b), FinOrCofinSet::finite([1]));
        assert!(FinOrCofinSet::finite([1]).is_subset(&b));
        assert!(!b.is_subset(&a));
        assert!(FinOrCofinSet::whole().complement().is_empty());
    }

    #[test]
    fn product_and_subspace() {
        let x = Space::Finite(FinPoset::lambda());
        let y = Space::Finite(FinPoset::chain2());
        let p = product(&[x.clone(), y]).unwrap();
        assert_eq!(p.poset().unwrap().len(), 6);
        let (s, emb) = subspace_closed(&x, &SpaceSubset::Finite(FinSubset::from_bits(0b011))).unwrap();
        assert_eq!(emb, vec![0, 1]);
        assert!(is_isomorphic(s.poset().unwrap(), &FinPoset::chain(2)));
        assert!(subspace_closed(&x, &SpaceSubset::Finite(FinSubset::from_bits(0b010))).is_err());
    }
}
