//! Smyth and Hoare power spaces of finite spaces, the union map, and open
//! filters of the lattice of opens.

use serde::Serialize;

use crate::config::Caps;
use crate::enumerate::{is_smyth_irreducible, Tier};
use crate::error::{invalid, Error, Result};
use crate::lattice::FinLattice;
use crate::order::{FinPoset, FinSubset};
use crate::space::{self, Space};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum PowerKind {
    Smyth,
    Hoare,
}

/// A power space. Points are subsets of the base carrier, listed in
/// ascending mask order; `space` is the specialization order of the
/// topology generated by the (sub)basic opens `□U` or `◇U`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowerSpace {
    pub kind: PowerKind,
    pub base: FinPoset,
    pub carrier: Vec<FinSubset>,
    pub space: FinPoset,
    /// Whether the specialization order is reverse inclusion (Smyth) or
    /// inclusion (Hoare).
    pub order_matches: bool,
}

/// The specialization order of the topology on `0..n` generated by
/// `subbase`: `i ≤ j` when every subbasic open containing `i` contains `j`.
/// Fails if the topology is not T0.
pub fn specialization_poset(n: usize, subbase: &[FinSubset]) -> Result<FinPoset> {
    FinPoset::from_leq(n, |i, j| subbase.iter().all(|&s| !s.contains(i) || s.contains(j)))
        .map_err(|e| Error::InvalidArgument(format!("generated topology is not T0: {e}")))
}

fn check_size(what: &'static str, size: usize, caps: &Caps) -> Result<()> {
    if size > caps.powerspace.min(crate::order::MAX_CARRIER) {
        return Err(Error::CapExceeded {
            what,
            size,
            cap: caps.powerspace.min(crate::order::MAX_CARRIER),
        });
    }
    Ok(())
}

impl PowerSpace {
    pub fn len(&self) -> usize {
        self.carrier.len()
    }

    pub fn is_empty(&self) -> bool {
        self.carrier.is_empty()
    }

    pub fn index_of(&self, a: FinSubset) -> Option<usize> {
        self.carrier.binary_search(&a).ok()
    }

    /// Labels points as `{..}` of base labels.
    pub fn labelled_space(&self) -> FinPoset {
        self.space
            .clone()
            .with_labels(self.carrier.iter().map(|&a| self.base.show(a)))
            .expect("one label per point")
    }

    pub fn as_space(&self) -> Space {
        Space::Finite(self.labelled_space())
    }

    /// `{A : A ∩ U ≠ ∅}` as a subset of the carrier.
    pub fn diamond(&self, u: FinSubset) -> FinSubset {
        (0..self.len()).filter(|&i| self.carrier[i].meets(u)).collect()
    }

    /// `{A : A ⊆ U}` as a subset of the carrier.
    pub fn boxed(&self, u: FinSubset) -> FinSubset {
        (0..self.len()).filter(|&i| self.carrier[i].is_subset(u)).collect()
    }
}

/// `P_S(X)`: `K(X)` with the upper Vietoris topology.
pub fn smyth(x: &FinPoset, caps: &Caps) -> Result<PowerSpace> {
    let carrier = space::compact_saturated(x, caps)?;
    check_size("Smyth power space", carrier.len(), caps)?;
    let opens = space::open_sets(x, caps)?;
    let mut ps = PowerSpace {
        kind: PowerKind::Smyth,
        base: x.clone(),
        space: FinPoset::empty(),
        carrier,
        order_matches: false,
    };
    let subbase: Vec<FinSubset> = opens.iter().map(|&u| ps.boxed(u)).collect();
    ps.space = specialization_poset(ps.len(), &subbase)?;
    let c = &ps.carrier;
    ps.order_matches = (0..ps.len())
        .all(|i| (0..ps.len()).all(|j| ps.space.leq(i, j) == c[j].is_subset(c[i])));
    Ok(ps)
}

/// `P_H(G)` for a family `G` of nonempty closed sets, with the lower Vietoris
/// topology.
pub fn hoare(x: &FinPoset, g: &[FinSubset], caps: &Caps) -> Result<PowerSpace> {
    for &a in g {
        x.check_subset(a)?;
        if a.is_empty() {
            return invalid("the empty set is not a point of a Hoare power space");
        }
        if !x.is_down_set(a) {
            return invalid(format!("{} is not closed", x.show(a)));
        }
    }
    let mut carrier = g.to_vec();
    carrier.sort();
    carrier.dedup();
    check_size("Hoare power space", carrier.len(), caps)?;
    let opens = space::open_sets(x, caps)?;
    let mut ps = PowerSpace {
        kind: PowerKind::Hoare,
        base: x.clone(),
        space: FinPoset::empty(),
        carrier,
        order_matches: false,
    };
    let subbase: Vec<FinSubset> = opens.iter().map(|&u| ps.diamond(u)).collect();
    ps.space = specialization_poset(ps.len(), &subbase)?;
    let c = &ps.carrier;
    ps.order_matches = (0..ps.len())
        .all(|i| (0..ps.len()).all(|j| ps.space.leq(i, j) == c[i].is_subset(c[j])));
    Ok(ps)
}

/// `P_H(C(X) ∖ {∅})`.
pub fn hoare_all_closed(x: &FinPoset, caps: &Caps) -> Result<PowerSpace> {
    let g: Vec<FinSubset> = space::closed_sets(x, caps)?
        .into_iter()
        .filter(|a| !a.is_empty())
        .collect();
    hoare(x, &g, caps)
}

/// Embedding checks for a point map into a power space.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EmbeddingCheck {
    pub map: Vec<usize>,
    pub injective: bool,
    pub continuous: bool,
    /// Images of opens are relatively open.
    pub open_onto_image: bool,
}

impl EmbeddingCheck {
    pub fn is_embedding(&self) -> bool {
        self.injective && self.continuous && self.open_onto_image
    }
}

fn embedding_check(
    ps: &PowerSpace,
    map: Vec<usize>,
    basic: impl Fn(FinSubset) -> FinSubset,
    caps: &Caps,
) -> Result<EmbeddingCheck> {
    let x = &ps.base;
    let opens = space::open_sets(x, caps)?;
    let image: FinSubset = map.iter().copied().collect();
    let injective = image.len() == x.len();
    let continuous = opens.iter().all(|&u| {
        let pre: FinSubset = (0..x.len()).filter(|&i| basic(u).contains(map[i])).collect();
        x.is_up_set(pre)
    });
    let open_onto_image = opens.iter().all(|&u| {
        let img: FinSubset = u.iter().map(|i| map[i]).collect();
        img == basic(u) & image
    });
    Ok(EmbeddingCheck {
        map,
        injective,
        continuous,
        open_onto_image,
    })
}

/// `η: x ↦ ↓x` into a Hoare power space that contains every point closure.
pub fn eta(ps: &PowerSpace, caps: &Caps) -> Result<EmbeddingCheck> {
    if ps.kind != PowerKind::Hoare {
        return invalid("η maps into a Hoare power space");
    }
    let map = (0..ps.base.len())
        .map(|x| {
            ps.index_of(ps.base.down(x))
                .ok_or_else(|| Error::InvalidArgument("carrier lacks a point closure".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    embedding_check(ps, map, |u| ps.diamond(u), caps)
}

/// `ξ: x ↦ ↑x` into the Smyth power space.
pub fn xi(ps: &PowerSpace, caps: &Caps) -> Result<EmbeddingCheck> {
    if ps.kind != PowerKind::Smyth {
        return invalid("ξ maps into a Smyth power space");
    }
    let map = (0..ps.base.len())
        .map(|x| ps.index_of(ps.base.up(x)).expect("principal filters are compact"))
        .collect();
    embedding_check(ps, map, |u| ps.boxed(u), caps)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct UnionMapCheck {
    /// `|K(P_S(X))|`.
    pub points: usize,
    /// `⋃𝒦 ∈ K(X)` for every `𝒦 ∈ K(P_S(X))`.
    pub lands_in_k: bool,
    /// The preimage of each `□U` is `□□U`, and is an up-set of the Smyth order.
    pub continuous: bool,
    /// `⋂𝒜 = ⋂ cl(𝒜)` for subfamilies `𝒜 ⊆ K(X)`.
    pub meet_in_smyth: bool,
    /// The subfamilies were a sample (singletons and pairs) rather than all.
    pub meet_in_smyth_bounded: bool,
}

/// The union map `P_S(P_S(X)) → P_S(X)`.
pub fn union_map_check(x: &FinPoset, caps: &Caps) -> Result<UnionMapCheck> {
    let ps = smyth(x, caps)?;
    let opens = space::open_sets(x, caps)?;
    let outer: Vec<FinSubset> = ps
        .space
        .up_sets(caps.lattice)?
        .into_iter()
        .filter(|k| !k.is_empty())
        .collect();
    let union = |f: FinSubset| f.iter().fold(FinSubset::EMPTY, |acc, i| acc | ps.carrier[i]);
    let lands_in_k = outer.iter().all(|&f| {
        let u = union(f);
        !u.is_empty() && x.is_up_set(u)
    });
    let continuous = opens.iter().all(|&u| {
        let bu = ps.boxed(u);
        let pre: Vec<bool> = outer.iter().map(|&f| union(f).is_subset(u)).collect();
        let is_box_box = outer.iter().zip(&pre).all(|(&f, &p)| p == f.is_subset(bu));
        // up-set in reverse inclusion: subfamilies of preimage members stay in
        let up_closed = outer.iter().zip(&pre).all(|(&f, &p)| {
            !p || outer
                .iter()
                .zip(&pre)
                .all(|(&g, &q)| !g.is_subset(f) || q)
        });
        is_box_box && up_closed
    });
    let (meet_in_smyth, meet_in_smyth_bounded) = meet_in_smyth_check(x, &ps, caps);
    Ok(UnionMapCheck {
        points: outer.len(),
        lands_in_k,
        continuous,
        meet_in_smyth,
        meet_in_smyth_bounded,
    })
}

fn meet_in_smyth_check(x: &FinPoset, ps: &PowerSpace, caps: &Caps) -> (bool, bool) {
    let k = ps.len();
    let meet = |f: FinSubset| f.iter().fold(x.full(), |acc, i| acc & ps.carrier[i]);
    // closure in the Smyth order is the down-set, i.e. all supersets
    let holds = |f: FinSubset| meet(f) == meet(ps.space.down_closure(f));
    if k < usize::BITS as usize && (1usize << k) <= caps.lattice {
        (FinSubset::full(k).subsets().all(holds), false)
    } else {
        let sample = (0..k).flat_map(|i| (i..k).map(move |j| FinSubset::singleton(i).with(j)));
        (sample.into_iter().all(holds), true)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OpenFilterReport {
    pub opens: Vec<FinSubset>,
    /// Scott-open proper filters, each as a sorted list of opens.
    pub filters: Vec<Vec<FinSubset>>,
    pub tier: Tier,
    /// `(K, Φ(K))` for every `K ∈ K(X)`.
    pub phi: Vec<(FinSubset, Vec<FinSubset>)>,
    pub phi_bijective: bool,
    pub phi_order_iso: bool,
    /// `F = Φ(⋂F)` for every filter.
    pub recovers_k: bool,
}

fn as_opens(opens: &[FinSubset], f: FinSubset) -> Vec<FinSubset> {
    f.iter().map(|i| opens[i]).collect()
}

/// Scott-open filters of `O(X)` excluding the improper one, and `Φ`.
pub fn open_filters_and_phi(x: &FinPoset, caps: &Caps) -> Result<OpenFilterReport> {
    const BRUTE: usize = 16;
    let opens = space::open_sets(x, caps)?;
    let l = FinLattice::of_sets(&opens)?;
    let empty_idx = opens.binary_search(&FinSubset::EMPTY).expect("∅ is open");
    let proper_open = |f: FinSubset| {
        l.is_filter(f) && !f.contains(empty_idx) && l.is_scott_open(f, BRUTE)
    };
    let (mut filters, tier): (Vec<FinSubset>, Tier) = if opens.len() <= BRUTE {
        (l.poset().full().subsets().filter(|&f| proper_open(f)).collect(), Tier::Exhaustive)
    } else {
        (
            (0..l.len())
                .map(|u| l.principal_filter(u))
                .filter(|&f| proper_open(f))
                .collect(),
            Tier::GreatestElement,
        )
    };
    filters.sort();
    let compact: Vec<FinSubset> = opens.iter().copied().filter(|k| !k.is_empty()).collect();
    let phi_of = |k: FinSubset| -> FinSubset {
        (0..opens.len()).filter(|&i| k.is_subset(opens[i])).collect()
    };
    let phis: Vec<FinSubset> = compact.iter().map(|&k| phi_of(k)).collect();
    let mut sorted = phis.clone();
    sorted.sort();
    sorted.dedup();
    let phi_bijective = sorted.len() == compact.len() && sorted == filters;
    let phi_order_iso = (0..compact.len()).all(|i| {
        (0..compact.len())
            .all(|j| compact[j].is_subset(compact[i]) == phis[i].is_subset(phis[j]))
    });
    let recovers_k = filters.iter().all(|&f| {
        let m = f.iter().fold(x.full(), |acc, i| acc & opens[i]);
        !m.is_empty() && x.is_up_set(m) && phi_of(m) == f
    });
    Ok(OpenFilterReport {
        filters: filters.iter().map(|&f| as_opens(&opens, f)).collect(),
        phi: compact
            .iter()
            .zip(&phis)
            .map(|(&k, &f)| (k, as_opens(&opens, f)))
            .collect(),
        opens,
        tier,
        phi_bijective,
        phi_order_iso,
        recovers_k,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IrrFilterReport {
    /// `F_𝒜 = {U : some K ∈ 𝒜 lies in U}`.
    pub filter: Vec<FinSubset>,
    pub is_open_filter: bool,
    /// `F_𝒜 = F_{cl 𝒜}`.
    pub matches_closure: bool,
}

/// The open filter generated by an irreducible family of `P_S(X)`.
pub fn irr_open_filter(x: &FinPoset, family: &[FinSubset], caps: &Caps) -> Result<IrrFilterReport> {
    for &k in family {
        x.check_subset(k)?;
        if k.is_empty() || !x.is_up_set(k) {
            return invalid(format!("{} is not in K(X)", x.show(k)));
        }
    }
    if !is_smyth_irreducible(family) {
        return invalid("family is not irreducible in the Smyth power space");
    }
    let opens = space::open_sets(x, caps)?;
    let l = FinLattice::of_sets(&opens)?;
    let gen = |fam: &[FinSubset]| -> FinSubset {
        (0..opens.len())
            .filter(|&i| fam.iter().any(|k| k.is_subset(opens[i])))
            .collect()
    };
    let f = gen(family);
    let closure: Vec<FinSubset> = space::compact_saturated(x, caps)?
        .into_iter()
        .filter(|&k| family.iter().any(|a| a.is_subset(k)))
        .collect();
    let empty_idx = opens.binary_search(&FinSubset::EMPTY).expect("∅ is open");
    Ok(IrrFilterReport {
        filter: as_opens(&opens, f),
        is_open_filter: l.is_filter(f) && !f.contains(empty_idx) && l.is_scott_open(f, 16),
        matches_closure: gen(&closure) == f,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn smyth_of_lambda() {
        let caps = Caps::default();
        let ps = smyth(&FinPoset::lambda(), &caps).unwrap();
        assert_eq!(ps.len(), 4);
        assert!(ps.order_matches);
        assert!(xi(&ps, &caps).unwrap().is_embedding());
    }

    #[test]
    fn hoare_over_irreducible_closed_of_lambda() {
        let caps = Caps::default();
        let x = FinPoset::lambda();
        let irr = space::irreducible_closed(&x, &caps).unwrap();
        let ph = hoare(&x, &irr, &caps).unwrap();
        assert_eq!(ph.len(), 3);
        assert!(ph.order_matches);
        assert!(eta(&ph, &caps).unwrap().is_embedding());
        assert!(hoare(&x, &[FinSubset::EMPTY], &caps).is_err());
        assert!(hoare(&x, &[FinSubset::from_bits(0b010)], &caps).is_err());
    }

    #[test]
    fn open_filter_counts() {
        let caps = Caps::default();
        let r = open_filters_and_phi(&FinPoset::chain2(), &caps).unwrap();
        assert_eq!(r.filters.len(), 2);
        // {X} and {{b}, X}
        assert_eq!(r.filters[0], vec![FinSubset::from_bits(0b11)]);
        assert_eq!(r.filters[1], vec![FinSubset::from_bits(0b10), FinSubset::from_bits(0b11)]);
        assert!(r.phi_bijective && r.phi_order_iso && r.recovers_k);
        let r = open_filters_and_phi(&FinPoset::lambda(), &caps).unwrap();
        assert_eq!(r.filters.len(), 4);
        assert!(r.phi_bijective && r.phi_order_iso);
    }

    #[test]
    fn irr_filter_of_chain() {
        let caps = Caps::default();
        let x = FinPoset::chain2();
        let all = space::compact_saturated(&x, &caps).unwrap();
        let r = irr_open_filter(&x, &all, &caps).unwrap();
        let phi_b = irr_open_filter(&x, &[FinSubset::from_bits(0b10)], &caps).unwrap();
        assert_eq!(r.filter, phi_b.filter);
        assert!(r.is_open_filter && r.matches_closure);
    }

    #[test]
    fn union_map_on_small_spaces() {
        let caps = Caps::default();
        for p in [FinPoset::lambda(), FinPoset::antichain(3), FinPoset::diamond()] {
            let r = union_map_check(&p, &caps).unwrap();
            assert!(r.lands_in_k && r.continuous, "{p:?}");
        }
    }

    #[test]
    fn embeddings_and_sobriety_up_to_five() {
        use crate::classify::ctx::FiniteCtx;
        use crate::generate::posets_up_to_iso;
        let caps = Caps::default();
        for n in 1..=5 {
            for p in posets_up_to_iso(n) {
                let ps = smyth(&p, &caps).unwrap();
                assert!(ps.order_matches);
                assert!(xi(&ps, &caps).unwrap().is_embedding(), "{p:?}");
                let ph = hoare_all_closed(&p, &caps).unwrap();
                assert!(ph.order_matches);
                assert!(eta(&ph, &caps).unwrap().is_embedding(), "{p:?}");
                let ctx = FiniteCtx::new(ph.space.clone(), caps);
                assert!(ctx.sober().unwrap().holds, "{p:?}");
            }
        }
    }

    #[test]
    fn irreducible_iff_xi_image_irreducible() {
        use crate::enumerate::is_irreducible_finite;
        use crate::generate::posets_up_to_iso;
        let caps = Caps::default();
        for n in 1..=4 {
            for p in posets_up_to_iso(n) {
                for a in p.full().subsets().skip(1) {
                    let image: Vec<FinSubset> = a.iter().map(|x| p.up(x)).collect();
                    assert_eq!(is_irreducible_finite(&p, a), is_smyth_irreducible(&image));
                }
                // the family test agrees with irreducibility in the Smyth poset
                let ps = smyth(&p, &caps).unwrap();
                for f in ps.space.full().subsets().skip(1) {
                    let fam: Vec<FinSubset> = f.iter().map(|i| ps.carrier[i]).collect();
                    assert_eq!(is_irreducible_finite(&ps.space, f), is_smyth_irreducible(&fam));
                }
            }
        }
    }

    #[test]
    fn caps_are_enforced() {
        let caps = Caps {
            powerspace: 3,
            ..Caps::default()
        };
        assert!(matches!(smyth(&FinPoset::lambda(), &caps), Err(Error::CapExceeded { .. })));
    }
}
