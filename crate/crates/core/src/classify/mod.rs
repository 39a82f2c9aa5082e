//! Space-class predicates and the theorem-verification suite.

pub mod ctx;
pub mod probe;
pub mod props;
pub mod theorems;

use std::collections::BTreeMap;

use serde::Serialize;
use serde_json::{json, Value};

use crate::config::Caps;
use crate::error::Result;
use crate::rudin::FilteredFamily;
use crate::space::{FinOrCofinSet, Space};
use ctx::FiniteCtx;
use props::Fact;

/// Flag names in the order they are reported.
pub const FLAG_NAMES: [&str; 16] = [
    "t1",
    "d_space",
    "d_bounded",
    "well_filtered",
    "sober",
    "dc_space",
    "rudin_space",
    "wd_space",
    "locally_compact",
    "core_compact",
    "locally_hypercompact",
    "c_space",
    "ftip",
    "rip",
    "irreducible_complete",
    "r_bounded",
];

/// Implications between the flags that hold for every T0 space.
pub const IMPLICATIONS: [(&str, &str); 20] = [
    ("sober", "well_filtered"),
    ("well_filtered", "d_space"),
    ("d_space", "d_bounded"),
    ("sober", "dc_space"),
    ("dc_space", "rudin_space"),
    ("rudin_space", "wd_space"),
    ("c_space", "locally_hypercompact"),
    ("locally_hypercompact", "locally_compact"),
    ("locally_compact", "core_compact"),
    ("locally_hypercompact", "dc_space"),
    ("locally_compact", "rudin_space"),
    ("core_compact", "wd_space"),
    ("sober", "irreducible_complete"),
    ("irreducible_complete", "r_bounded"),
    ("r_bounded", "d_bounded"),
    ("sober", "rip"),
    ("rip", "ftip"),
    ("well_filtered", "ftip"),
    ("sober", "d_space"),
    ("sober", "wd_space"),
];

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ClassificationVector {
    pub t1: bool,
    pub d_space: bool,
    pub d_bounded: bool,
    pub well_filtered: bool,
    pub sober: bool,
    pub dc_space: bool,
    pub rudin_space: bool,
    pub wd_space: bool,
    pub locally_compact: bool,
    pub core_compact: bool,
    pub locally_hypercompact: bool,
    pub c_space: bool,
    pub ftip: bool,
    pub rip: bool,
    pub irreducible_complete: bool,
    pub r_bounded: bool,
    /// Some flag rests on a bounded enumeration.
    pub bounded: bool,
    /// Counterexamples for the flags that are false.
    pub witnesses: BTreeMap<&'static str, Value>,
}

impl ClassificationVector {
    pub fn flags(&self) -> [(&'static str, bool); 16] {
        [
            ("t1", self.t1),
            ("d_space", self.d_space),
            ("d_bounded", self.d_bounded),
            ("well_filtered", self.well_filtered),
            ("sober", self.sober),
            ("dc_space", self.dc_space),
            ("rudin_space", self.rudin_space),
            ("wd_space", self.wd_space),
            ("locally_compact", self.locally_compact),
            ("core_compact", self.core_compact),
            ("locally_hypercompact", self.locally_hypercompact),
            ("c_space", self.c_space),
            ("ftip", self.ftip),
            ("rip", self.rip),
            ("irreducible_complete", self.irreducible_complete),
            ("r_bounded", self.r_bounded),
        ]
    }

    pub fn get(&self, name: &str) -> Option<bool> {
        self.flags().iter().find(|(n, _)| *n == name).map(|&(_, v)| v)
    }

    /// Implications from [`IMPLICATIONS`] that this vector violates.
    pub fn implication_violations(&self) -> Vec<(&'static str, &'static str)> {
        IMPLICATIONS
            .iter()
            .copied()
            .filter(|&(a, b)| self.get(a) == Some(true) && self.get(b) == Some(false))
            .collect()
    }

    fn from_facts(facts: Vec<(&'static str, Fact)>) -> Self {
        let mut v = ClassificationVector {
            t1: false,
            d_space: false,
            d_bounded: false,
            well_filtered: false,
            sober: false,
            dc_space: false,
            rudin_space: false,
            wd_space: false,
            locally_compact: false,
            core_compact: false,
            locally_hypercompact: false,
            c_space: false,
            ftip: false,
            rip: false,
            irreducible_complete: false,
            r_bounded: false,
            bounded: false,
            witnesses: BTreeMap::new(),
        };
        for (name, f) in facts {
            v.bounded |= f.bounded;
            if let Some(w) = f.witness {
                v.witnesses.insert(name, w);
            }
            let slot = match name {
                "t1" => &mut v.t1,
                "d_space" => &mut v.d_space,
                "d_bounded" => &mut v.d_bounded,
                "well_filtered" => &mut v.well_filtered,
                "sober" => &mut v.sober,
                "dc_space" => &mut v.dc_space,
                "rudin_space" => &mut v.rudin_space,
                "wd_space" => &mut v.wd_space,
                "locally_compact" => &mut v.locally_compact,
                "core_compact" => &mut v.core_compact,
                "locally_hypercompact" => &mut v.locally_hypercompact,
                "c_space" => &mut v.c_space,
                "ftip" => &mut v.ftip,
                "rip" => &mut v.rip,
                "irreducible_complete" => &mut v.irreducible_complete,
                "r_bounded" => &mut v.r_bounded,
                other => unreachable!("unknown flag {other}"),
            };
            *slot = f.holds;
        }
        v
    }
}

/// Classification of a finite space by definitional checks.
pub fn classify_finite(ctx: &FiniteCtx) -> Result<ClassificationVector> {
    let facts = vec![
        ("t1", ctx.t1()),
        ("d_space", ctx.d_space()?),
        ("d_bounded", ctx.d_bounded()?),
        ("well_filtered", ctx.well_filtered()?),
        ("sober", ctx.sober()?),
        ("dc_space", ctx.dc_space()?),
        ("rudin_space", ctx.rudin_space()?),
        ("wd_space", ctx.wd_space()?),
        ("locally_compact", ctx.locally_compact()?),
        ("core_compact", ctx.core_compact()?),
        ("locally_hypercompact", ctx.locally_hypercompact()?),
        ("c_space", ctx.c_space()?),
        ("ftip", ctx.ftip()?),
        ("rip", ctx.rip()?),
        ("irreducible_complete", ctx.irreducible_complete()?),
        ("r_bounded", ctx.r_bounded()?),
    ];
    Ok(ClassificationVector::from_facts(facts))
}

/// The vector of the cofinite space, with a witness for every false flag.
pub fn classify_cofinite() -> ClassificationVector {
    let tails = serde_json::to_value(FilteredFamily::CofiniteTails).expect("serializable");
    let whole = serde_json::to_value(FinOrCofinSet::whole()).expect("serializable");
    let empty = serde_json::to_value(FinOrCofinSet::empty()).expect("serializable");
    let not_point = serde_json::to_value(FinOrCofinSet::cofinite([1])).expect("serializable");
    let ok = Fact::ok(false);
    let fail = |w: Value| Fact::fail(false, w);
    ClassificationVector::from_facts(vec![
        ("t1", ok.clone()),
        ("d_space", ok.clone()),
        ("d_bounded", ok.clone()),
        (
            "well_filtered",
            fail(json!({"family": tails, "intersection": empty, "open": empty})),
        ),
        (
            "sober",
            fail(json!({"irreducible closed": whole, "generic points": 0})),
        ),
        ("dc_space", fail(json!({"not a directed closure": whole}))),
        ("rudin_space", ok.clone()),
        ("wd_space", ok.clone()),
        ("locally_compact", ok.clone()),
        ("core_compact", ok.clone()),
        (
            "locally_hypercompact",
            fail(json!({"point": 0, "open": not_point})),
        ),
        ("c_space", fail(json!({"point": 0, "open": not_point}))),
        ("ftip", fail(json!({"family": tails, "intersection": empty}))),
        ("rip", fail(json!({"family": tails, "intersection": empty}))),
        (
            "irreducible_complete",
            fail(json!({"irreducible without sup": whole})),
        ),
        ("r_bounded", fail(json!({"unbounded irreducible": whole}))),
    ])
}

/// Classifies a space. The implication closure is asserted on the result.
pub fn classify(x: &Space, caps: &Caps) -> Result<ClassificationVector> {
    let v = match x {
        Space::Finite(p) => classify_finite(&FiniteCtx::new(p.clone(), *caps))?,
        Space::Cofinite => classify_cofinite(),
    };
    let bad = v.implication_violations();
    assert!(bad.is_empty(), "classification violates implications {bad:?}");
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::posets_up_to_iso;
    use crate::order::FinPoset;

    #[test]
    fn finite_spaces_have_every_flag_but_t1() {
        for n in 1..=4 {
            for p in posets_up_to_iso(n) {
                let t1 = p.strict_pairs().is_empty();
                let v = classify(&Space::Finite(p), &Caps::default()).unwrap();
                for (name, val) in v.flags() {
                    if name == "t1" {
                        assert_eq!(val, t1);
                    } else {
                        assert!(val, "{name}");
                    }
                }
                assert!(!v.bounded);
            }
        }
    }

    #[test]
    fn singleton_has_every_flag() {
        let v = classify(&Space::Finite(FinPoset::chain(1)), &Caps::default()).unwrap();
        assert!(v.flags().iter().all(|&(_, b)| b));
        assert!(v.witnesses.is_empty());
    }

    #[test]
    fn cofinite_vector() {
        let v = classify(&Space::Cofinite, &Caps::default()).unwrap();
        let trues = [
            "t1",
            "d_space",
            "d_bounded",
            "rudin_space",
            "wd_space",
            "locally_compact",
            "core_compact",
        ];
        for (name, val) in v.flags() {
            assert_eq!(val, trues.contains(&name), "{name}");
            assert_eq!(v.witnesses.contains_key(name), !val, "{name}");
        }
        assert_eq!(v.witnesses["well_filtered"]["family"], json!("cofinite-tails"));
    }

    #[test]
    fn violations_are_reported() {
        let mut v = classify_cofinite();
        v.sober = true;
        let bad = v.implication_violations();
        assert!(bad.contains(&("sober", "well_filtered")));
    }
}
