//! Enumeration of directed subsets, irreducible subsets and filtered families.
//!
//! Each enumeration runs in one of three tiers:
//!
//! * `Exhaustive`: every subset of the carrier is tested against the
//!   predicate. Used while the carrier is within `caps.carrier`.
//! * `GreatestElement`: candidates are the sets `{m} ∪ S` with `S` below `m`
//!   (or, for families of compact sets, `{K} ∪ S` with `S` a set of supersets
//!   of `K`). On a finite poset every directed set contains its greatest
//!   element, so this is still complete; the unit tests compare it with the
//!   exhaustive tier.
//! * `Bounded`: only `{m}`, `{m, x}` and `↓m` per point `m` (for families,
//!   `{K}`, `{K, K ∪ {x}}`, and `K` with all its one-point extensions). Used when the previous tier would exceed
//!   `caps.families`; checks built on it are reported as bounded.

use std::collections::HashSet;

use serde::Serialize;

use crate::config::Caps;
use crate::order::{FinPoset, FinSubset};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Tier {
    Exhaustive,
    GreatestElement,
    Bounded,
}

impl Tier {
    pub fn is_bounded(self) -> bool {
        self == Tier::Bounded
    }
}

#[derive(Debug, Clone)]
pub struct Enumerated<T> {
    pub items: Vec<T>,
    pub tier: Tier,
}

fn greatest_element_count(p: &FinPoset) -> u128 {
    (0..p.len())
        .map(|m| 1u128 << (p.down(m).len() - 1).min(100))
        .sum()
}

fn candidates(p: &FinPoset, caps: &Caps) -> Enumerated<FinSubset> {
    let n = p.len();
    if n <= caps.carrier {
        return Enumerated {
            items: p.full().subsets().skip(1).collect(),
            tier: Tier::Exhaustive,
        };
    }
    let mut items = Vec::new();
    let tier = if greatest_element_count(p) <= caps.families as u128 {
        for m in 0..n {
            let below = p.down(m).without(m);
            items.extend(below.subsets().map(|s| s.with(m)));
        }
        Tier::GreatestElement
    } else {
        for m in 0..n {
            let below = p.down(m).without(m);
            items.push(FinSubset::singleton(m));
            items.extend(below.iter().map(|x| FinSubset::singleton(m).with(x)));
            if below.len() > 1 {
                items.push(p.down(m));
            }
        }
        Tier::Bounded
    };
    items.sort();
    items.dedup();
    Enumerated { items, tier }
}

/// Directed subsets of `p`.
pub fn directed_subsets(p: &FinPoset, caps: &Caps) -> Enumerated<FinSubset> {
    let c = candidates(p, caps);
    Enumerated {
        items: c.items.into_iter().filter(|&d| p.is_directed(d)).collect(),
        tier: c.tier,
    }
}

/// Irreducible subsets of `p` in its Alexandroff topology: nonempty sets
/// whose closure is directed.
pub fn irreducible_subsets(p: &FinPoset, caps: &Caps) -> Enumerated<FinSubset> {
    let c = candidates(p, caps);
    Enumerated {
        items: c
            .items
            .into_iter()
            .filter(|&a| is_irreducible_finite(p, a))
            .collect(),
        tier: c.tier,
    }
}

/// Ideal criterion for irreducibility: the closure is a directed down-set.
pub fn is_irreducible_finite(p: &FinPoset, a: FinSubset) -> bool {
    !a.is_empty() && p.is_directed(p.down_closure(a))
}

/// A family of compact saturated sets, listed in ascending mask order.
pub type Family = Vec<FinSubset>;

/// Filtered in the inclusion sense: any two members contain a third member
/// in their intersection. Equivalently, directed in the Smyth order.
pub fn is_filtered_family(f: &[FinSubset]) -> bool {
    !f.is_empty()
        && f.iter()
            .all(|&a| f.iter().all(|&b| f.iter().any(|&c| c.is_subset(a & b))))
}

/// Irreducibility of a family as a subset of the Smyth power space. The Smyth
/// topology on a finite space is the Alexandroff topology of reverse
/// inclusion (checked in the power space module), where a set is irreducible
/// exactly when its closure is directed; that is the test below.
pub fn is_smyth_irreducible(f: &[FinSubset]) -> bool {
    is_filtered_family(f)
}

/// Families of members of `ks` satisfying `pred`, with candidate generation
/// following the tiers above (reverse inclusion plays the role of the order).
pub fn families_where(
    ks: &[FinSubset],
    caps: &Caps,
    pred: impl Fn(&[FinSubset]) -> bool,
) -> Enumerated<Family> {
    let n = ks.len();
    let mut items = Vec::new();
    let tier;
    if n <= caps.carrier {
        for mask in FinSubset::full(n).subsets().skip(1) {
            let f: Family = mask.iter().map(|i| ks[i]).collect();
            if pred(&f) {
                items.push(f);
            }
        }
        tier = Tier::Exhaustive;
    } else {
        let supers = |k: FinSubset| ks.iter().copied().filter(move |&j| k.is_proper_subset(j));
        let total: u128 = ks.iter().map(|&k| 1u128 << supers(k).count().min(100)).sum();
        if total <= caps.families as u128 {
            for &k in ks {
                let s: Vec<FinSubset> = supers(k).collect();
                for mask in FinSubset::full(s.len()).subsets() {
                    let mut f: Family = mask.iter().map(|j| s[j]).collect();
                    f.push(k);
                    f.sort();
                    if pred(&f) {
                        items.push(f);
                    }
                }
            }
            tier = Tier::GreatestElement;
        } else {
            let members: HashSet<FinSubset> = ks.iter().copied().collect();
            let universe = ks.iter().fold(FinSubset::EMPTY, |acc, &k| acc | k);
            for &k in ks {
                let ext: Vec<FinSubset> = FinSubset::from_bits(universe.bits() & !k.bits())
                    .iter()
                    .map(|x| k.with(x))
                    .filter(|j| members.contains(j))
                    .collect();
                let mut cands = vec![vec![k]];
                cands.extend(ext.iter().map(|&j| {
                    let mut f = vec![k, j];
                    f.sort();
                    f
                }));
                if ext.len() > 1 {
                    let mut f = ext.clone();
                    f.push(k);
                    f.sort();
                    cands.push(f);
                }
                items.extend(cands.into_iter().filter(|f| pred(f)));
            }
            tier = Tier::Bounded;
        }
    }
    items.sort();
    items.dedup();
    Enumerated { items, tier }
}

/// Filtered subfamilies of `ks`.
pub fn filtered_families(ks: &[FinSubset], caps: &Caps) -> Enumerated<Family> {
    families_where(ks, caps, is_filtered_family)
}

/// Subfamilies of `ks` that are irreducible in the Smyth power space.
pub fn smyth_irreducible_families(ks: &[FinSubset], caps: &Caps) -> Enumerated<Family> {
    families_where(ks, caps, is_smyth_irreducible)
}

/// Intersection of a family; the whole carrier for the empty family.
pub fn meet(n: usize, f: &[FinSubset]) -> FinSubset {
    f.iter().fold(FinSubset::full(n), |acc, &k| acc & k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::posets_up_to_iso;

    fn tight(carrier: usize) -> Caps {
        Caps {
            carrier,
            ..Caps::default()
        }
    }

    #[test]
    fn greatest_element_tier_matches_exhaustive() {
        for n in 1..=6 {
            for p in posets_up_to_iso(n) {
                let full = directed_subsets(&p, &tight(12));
                let gen = directed_subsets(&p, &tight(0));
                assert_eq!(full.tier, Tier::Exhaustive);
                assert_eq!(gen.tier, Tier::GreatestElement);
                assert_eq!(full.items, gen.items, "{p:?}");
                let full = irreducible_subsets(&p, &tight(12));
                let gen = irreducible_subsets(&p, &tight(0));
                assert_eq!(full.items, gen.items, "{p:?}");
            }
        }
    }

    #[test]
    fn family_tiers_agree() {
        for n in 1..=4 {
            for p in posets_up_to_iso(n) {
                let ks: Vec<FinSubset> = p
                    .up_sets(usize::MAX)
                    .unwrap()
                    .into_iter()
                    .filter(|k| !k.is_empty())
                    .collect();
                if ks.len() > 12 {
                    continue;
                }
                let full = filtered_families(&ks, &tight(16));
                let gen = filtered_families(&ks, &tight(0));
                assert_eq!(full.tier, Tier::Exhaustive);
                assert_eq!(gen.tier, Tier::GreatestElement);
                assert_eq!(full.items, gen.items);
            }
        }
    }

    #[test]
    fn bounded_tier_kicks_in() {
        let p = FinPoset::antichain(6);
        let caps = Caps {
            carrier: 0,
            families: 5,
            ..Caps::default()
        };
        let d = directed_subsets(&p, &caps);
        assert_eq!(d.tier, Tier::Bounded);
        assert_eq!(d.items.len(), 6);
    }

    #[test]
    fn ideal_criterion() {
        let p = FinPoset::lambda();
        assert!(is_irreducible_finite(&p, FinSubset::from_bits(0b011)));
        assert!(!is_irreducible_finite(&p, FinSubset::from_bits(0b110)));
        assert!(!is_irreducible_finite(&p, FinSubset::EMPTY));
    }
}
