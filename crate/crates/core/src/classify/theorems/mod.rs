//! The theorem registry and the verification suite.
//!
//! Each theorem has a stable id. On a finite space its statement is checked
//! by enumeration; on the cofinite space only statements about the
//! classification vector apply, and the rest report not-applicable.
//!
//! Map-quantified statements ("for every continuous map into a sober
//! space") range over all posets with at most `caps.target_size` points, up
//! to isomorphism, plus the canonical map into the sobrification where the
//! argument needs it. Those reports are marked bounded.

mod characterizations;
mod power;
mod spaces;

use std::sync::OnceLock;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Map, Value};

use super::ctx::FiniteCtx;
use super::props::Fact;
use super::{classify_cofinite, classify_finite, ClassificationVector};
use crate::config::Caps;
use crate::error::{Error, Result};
use crate::generate::posets_up_to_iso;
use crate::order::FinPoset;
use crate::reflect::{self, Reflection};
use crate::space::Space;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Pass,
    Fail,
    NotApplicable,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TheoremReport {
    pub theorem_id: &'static str,
    pub verdict: Verdict,
    /// Some quantifier ranged over a bounded sample.
    pub bounded: bool,
    pub detail: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
}

/// Result of one check before it is stamped with its id.
#[derive(Debug, Clone)]
pub(crate) enum Outcome {
    Pass { bounded: bool, detail: Value },
    Fail { bounded: bool, detail: Value, witness: Value },
    NotApplicable(String),
}

impl Outcome {
    fn report(self, id: &'static str) -> TheoremReport {
        match self {
            Outcome::Pass { bounded, detail } => TheoremReport {
                theorem_id: id,
                verdict: Verdict::Pass,
                bounded,
                detail,
                witness: None,
            },
            Outcome::Fail {
                bounded,
                detail,
                witness,
            } => TheoremReport {
                theorem_id: id,
                verdict: Verdict::Fail,
                bounded,
                detail,
                witness: Some(witness),
            },
            Outcome::NotApplicable(reason) => TheoremReport {
                theorem_id: id,
                verdict: Verdict::NotApplicable,
                bounded: false,
                detail: json!({ "reason": reason }),
                witness: None,
            },
        }
    }

    pub(crate) fn bounded(mut self, b: bool) -> Self {
        match &mut self {
            Outcome::Pass { bounded, .. } | Outcome::Fail { bounded, .. } => *bounded |= b,
            Outcome::NotApplicable(_) => {}
        }
        self
    }
}

/// Every listed statement holds.
pub(crate) fn all_hold(conds: Vec<(&str, Fact)>) -> Outcome {
    let bounded = conds.iter().any(|(_, f)| f.bounded);
    let detail: Map<String, Value> = conds
        .iter()
        .map(|(n, f)| (n.to_string(), json!(f.holds)))
        .collect();
    let failing: Map<String, Value> = conds
        .iter()
        .filter(|(_, f)| !f.holds)
        .map(|(n, f)| (n.to_string(), f.witness.clone().unwrap_or(Value::Null)))
        .collect();
    if failing.is_empty() {
        Outcome::Pass {
            bounded,
            detail: Value::Object(detail),
        }
    } else {
        Outcome::Fail {
            bounded,
            detail: Value::Object(detail),
            witness: Value::Object(failing),
        }
    }
}

/// The listed conditions are all true or all false.
pub(crate) fn equivalent(conds: Vec<(&str, Fact)>) -> Outcome {
    let bounded = conds.iter().any(|(_, f)| f.bounded);
    let detail: Map<String, Value> = conds
        .iter()
        .map(|(n, f)| (n.to_string(), json!(f.holds)))
        .collect();
    if conds.iter().all(|(_, f)| f.holds == conds[0].1.holds) {
        return Outcome::Pass {
            bounded,
            detail: Value::Object(detail),
        };
    }
    let failing: Map<String, Value> = conds
        .iter()
        .filter(|(_, f)| !f.holds)
        .map(|(n, f)| (n.to_string(), f.witness.clone().unwrap_or(Value::Null)))
        .collect();
    Outcome::Fail {
        bounded,
        detail: Value::Object(detail),
        witness: json!({ "disagreement": Value::Object(failing) }),
    }
}

/// Hypotheses imply conclusions; not applicable when a hypothesis fails.
pub(crate) fn implication(hyps: Vec<(&str, Fact)>, concls: Vec<(&str, Fact)>) -> Outcome {
    if let Some((n, _)) = hyps.iter().find(|(_, f)| !f.holds) {
        return Outcome::NotApplicable(format!("hypothesis {n} does not hold"));
    }
    let b = hyps.iter().any(|(_, f)| f.bounded);
    all_hold(concls).bounded(b)
}

/// Conjunction of two facts; the witness is the first failing one.
pub(crate) fn both(a: Fact, b: Fact) -> Fact {
    let bounded = a.bounded || b.bounded;
    match (a.holds, b.holds) {
        (true, true) => Fact::ok(bounded),
        (false, _) => Fact {
            bounded,
            ..a
        },
        _ => Fact {
            bounded,
            ..b
        },
    }
}

/// A flag of the classification vector as a fact.
pub(crate) fn flag(v: &ClassificationVector, name: &str) -> Fact {
    let holds = v.get(name).expect("known flag");
    Fact {
        holds,
        bounded: v.bounded,
        witness: if holds {
            None
        } else {
            Some(v.witnesses.get(name).cloned().unwrap_or(Value::Null))
        },
    }
}

/// A finite space with lazily computed data shared by the checks.
pub struct Checker {
    pub ctx: FiniteCtx,
    vector: OnceLock<Result<ClassificationVector>>,
    wf_reflection: OnceLock<Result<Reflection>>,
    sobrification: OnceLock<Result<Reflection>>,
    targets: OnceLock<Vec<FinPoset>>,
}

impl Checker {
    pub fn new(p: FinPoset, caps: Caps) -> Self {
        Checker {
            ctx: FiniteCtx::new(p, caps),
            vector: OnceLock::new(),
            wf_reflection: OnceLock::new(),
            sobrification: OnceLock::new(),
            targets: OnceLock::new(),
        }
    }

    pub fn p(&self) -> &FinPoset {
        &self.ctx.p
    }

    pub fn caps(&self) -> &Caps {
        &self.ctx.caps
    }

    pub fn vector(&self) -> Result<&ClassificationVector> {
        self.vector
            .get_or_init(|| classify_finite(&self.ctx))
            .as_ref()
            .map_err(Clone::clone)
    }

    pub fn wf_reflection(&self) -> Result<&Reflection> {
        self.wf_reflection
            .get_or_init(|| reflect::wf_reflection_finite(self.p(), self.caps()))
            .as_ref()
            .map_err(Clone::clone)
    }

    pub fn sobrification(&self) -> Result<&Reflection> {
        self.sobrification
            .get_or_init(|| reflect::sobrification(self.p(), self.caps()))
            .as_ref()
            .map_err(Clone::clone)
    }

    /// Targets of map-quantified checks: every poset with at most
    /// `caps.target_size` points, up to isomorphism. All of them are sober.
    pub fn targets(&self) -> &[FinPoset] {
        self.targets.get_or_init(|| {
            (1..=self.caps().target_size)
                .flat_map(posets_up_to_iso)
                .collect()
        })
    }
}

type FiniteCheck = fn(&Checker) -> Result<Outcome>;
type VectorCheck = fn(&ClassificationVector) -> Outcome;

enum Check {
    /// Needs enumeration; not applicable to the cofinite space.
    Finite(FiniteCheck),
    /// Reads only the classification vector; applies to both kinds.
    Vector(VectorCheck),
    /// Separate procedures for the two kinds.
    Both(FiniteCheck, VectorCheck),
}

pub struct TheoremInfo {
    pub id: &'static str,
    pub statement: &'static str,
    check: Check,
}

macro_rules! theorem {
    ($id:literal, $statement:literal, $kind:ident($($f:expr),+)) => {
        TheoremInfo {
            id: $id,
            statement: $statement,
            check: Check::$kind($($f),+),
        }
    };
}

use characterizations as ch;
use power as pw;
use spaces as sp;

/// All theorems, sorted by id.
pub static REGISTRY: &[TheoremInfo] = &[
    theorem!("alexandroff", "A finite Alexandroff space is DC, and sober, well-filtered, d-space, ACC, dcpo with every point compact, and dcpo with Scott = Alexandroff are equivalent", Finite(sp::alexandroff)),
    theorem!("closure-images", "Continuous images of irreducible sets are irreducible; closures of images of D_c, Rudin and WD sets stay in D_c, RD and WD", Finite(sp::closure_images)),
    theorem!("cofinite.example", "The cofinite space is T1, a d-space, locally compact, Rudin and WD, but neither DC, well-filtered nor sober", Both(sp::cofinite_example_finite, sp::cofinite_example)),
    theorem!("d-bounded.4cond", "d-bounded; every directed set has an upper bound; ⋂↑(A∩↑d) ≠ ∅ for closed A ⊇ D; the same for irreducible closed A", Finite(ch::d_bounded_4cond)),
    theorem!("d-space.7cond", "d-space; D_c = S_c; ⋂↑d ⊆ U forces some d ∈ U; the same for filtered subfamilies of S^u; A ∩ ⋂↑d ≠ ∅ for closed or irreducible closed A ⊇ D; cl D ∩ ⋂↑d ≠ ∅", Finite(ch::d_space_7cond)),
    theorem!("d-space.equational", "d-space iff d-bounded and ↑(A∩⋂↑d) = ⋂↑(A∩↑d), for A closed or irreducible closed and D directed or a filtered subfamily of S^u", Finite(ch::d_space_equational)),
    theorem!("d-space.map", "d-space iff ↑f(⋂↑d) = ⋂↑f(↑d) = ⋂↑f(d) for continuous f into sober spaces, iff dcpo and f(⋁D) = ⋁f(D)", Finite(ch::d_space_map)),
    theorem!("dc.locally-hypercompact", "Locally hypercompact spaces are DC, Rudin and WD", Vector(sp::dc_locally_hypercompact)),
    theorem!("hoare.sober", "The Hoare power space of nonempty closed sets is sober", Finite(pw::hoare_sober)),
    theorem!("hofmann-mislove", "Sober iff every open filter of O(X) is Φ(K) iff every open filter F equals Φ(⋂F); Φ is an order embedding", Finite(ch::hofmann_mislove)),
    theorem!("implications", "Sober ⇒ WF ⇒ d-space ⇒ d-bounded, sober ⇒ DC ⇒ RD ⇒ WD, C-space ⇒ locally hypercompact ⇒ locally compact ⇒ core compact, and the related implications", Vector(sp::implications)),
    theorem!("inclusion-chain", "D_c(X) ⊆ RD(X) ⊆ WD(X) ⊆ Irr_c(X)", Both(sp::inclusion_chain, sp::inclusion_chain_cofinite)),
    theorem!("irreducible.product", "A product of sets is irreducible iff every factor is; irreducible closed sets of a product are products of their projections", Finite(sp::irreducible_product)),
    theorem!("preservation.closed-subspace", "Closed subspaces of DC, Rudin, WD, well-filtered and sober spaces keep the property", Finite(sp::closed_subspace)),
    theorem!("preservation.product", "Finite products of DC, Rudin, WD, well-filtered and sober spaces keep the property", Finite(sp::product_preservation)),
    theorem!("preservation.retract", "Retracts of DC, Rudin, WD, well-filtered and sober spaces keep the property", Finite(sp::retract_preservation)),
    theorem!("reflection.closure-box", "The closure of η(A) in P_H(WD(X)) is η(cl A)'s closure and equals □cl(A)", Finite(pw::closure_box)),
    theorem!("reflection.compact", "X is compact iff X^w is compact", Both(pw::reflection_compact, pw::reflection_compact_cofinite)),
    theorem!("reflection.eta-embedding", "η: X → P_H(WD(X)) and η: X → X^s are topological embeddings", Finite(pw::eta_embedding)),
    theorem!("reflection.functor", "f^w(A) = cl f(A) makes the square with η commute, is continuous, and preserves identities", Finite(pw::functor)),
    theorem!("reflection.irreducible-box", "A is irreducible iff □cl(A) is irreducible in P_H(WD(X)); for lower sets also iff □A is", Finite(pw::irreducible_box)),
    theorem!("reflection.local", "Local hypercompactness and the C-space property pass between X and X^w; X core compact iff X^w core compact iff X^w locally compact", Finite(pw::local)),
    theorem!("reflection.opens", "U ↦ ◇U is a lattice isomorphism O(X) → O(X^w)", Finite(pw::opens)),
    theorem!("reflection.product", "(X × Y)^w ≅ X^w × Y^w via γ(A) = (cl p₁(A), cl p₂(A))", Finite(pw::product)),
    theorem!("reflection.sober-iff-wd", "X^w is the sobrification iff X^w is sober iff X is WD", Both(pw::sober_iff_wd, pw::sober_iff_wd_cofinite)),
    theorem!("reflection.universal", "Every continuous map into a well-filtered space factors uniquely through η", Finite(pw::universal)),
    theorem!("reflection.wd-box", "A closed C is WD in X iff □C is WD in P_H(WD(X))", Finite(pw::wd_box)),
    theorem!("reflection.well-filtered", "P_H(WD(X)) is well-filtered and the sobrification is sober", Finite(pw::reflection_well_filtered)),
    theorem!("reflection.wfwdc", "Well-filtered iff RD(X) = S_c(X) iff WD(X) = S_c(X) iff X ≅ X^w", Finite(pw::wfwdc)),
    theorem!("rudin.equiv", "A family in P_S(X) is irreducible iff every closed set meeting all members contains a minimal irreducible closed set meeting all members", Finite(sp::rudin_equiv)),
    theorem!("rudin.local-compact", "Every locally compact space is a Rudin space", Vector(sp::rudin_local_compact)),
    theorem!("rudin.meet", "Every irreducible closed family of P_S(X) is ⋂◇A over minimal irreducible closed sets A", Finite(sp::rudin_meet)),
    theorem!("rudin.topological-lemma", "Every closed set meeting all members of an irreducible family of P_S(X) contains a minimal irreducible closed set that still meets them", Finite(sp::topological_rudin)),
    theorem!("rudin.wf-chain", "Sober ⇒ (max A ≠ ∅ and ↓(A∩K) closed for irreducible closed A and K ∈ K(X)) ⇒ well-filtered, all equivalent when core compact", Finite(sp::rudin_wf_chain)),
    theorem!("smyth.meet-closure", "⋂𝒜 = ⋂ cl(𝒜) for families 𝒜 ⊆ K(X), closure taken in P_S(X)", Finite(pw::smyth_meet_closure)),
    theorem!("smyth.order", "The specialization order of P_S(X) is reverse inclusion", Finite(pw::smyth_order)),
    theorem!("smyth.sober", "Sober iff ⋂𝒜 ⊆ U forces some K ⊆ U for irreducible (or irreducible closed) 𝒜 in P_S(X), iff P_S(X) is sober", Finite(ch::smyth_sober)),
    theorem!("smyth.union", "⋃𝒦 ∈ K(X) for 𝒦 ∈ K(P_S(X)), and ⋃: P_S(P_S(X)) → P_S(X) is continuous", Finite(pw::smyth_union)),
    theorem!("smyth.wd", "If P_S(X) is WD then X is WD", Finite(ch::smyth_wd)),
    theorem!("smyth.wf", "Well-filtered iff P_S(X) is a d-space iff P_S(X) is well-filtered", Finite(ch::smyth_wf)),
    theorem!("smyth.xi-irreducible", "ξ: x ↦ ↑x is an embedding; A is irreducible iff ξ(A) is irreducible in P_S(X) and in P_S(S^u(X)); A is irreducible closed iff ξ(A) is irreducible closed in P_S(S^u(X))", Finite(pw::xi_irreducible)),
    theorem!("sober.7cond", "Sober; cl A ∩ ⋂↑a ≠ ∅ for irreducible A; A ∩ ⋂↑a ≠ ∅ for irreducible closed A; ⋂↑a ⊆ U forces some a ∈ U, for A irreducible, irreducible closed, or the corresponding families in S^u", Finite(ch::sober_7cond)),
    theorem!("sober.core-compact-wf", "Every core compact well-filtered space is sober; equivalently a core compact non-sober space is not well-filtered", Vector(sp::sober_core_compact_wf)),
    theorem!("sober.equational", "Sober iff r-bounded and ↑(C∩⋂↑a) = ⋂↑(C∩↑a) for irreducible A (or the family {↑a}) and C closed or irreducible closed", Finite(ch::sober_equational)),
    theorem!("sober.equiv", "Sober iff DC d-space iff well-filtered DC iff well-filtered Rudin iff well-filtered WD", Vector(sp::sober_equiv)),
    theorem!("sober.map", "Sober iff ↑f(⋂𝒜) = ⋂↑f(K) for continuous f into sober spaces and 𝒜 irreducible (or irreducible closed) in P_S(X)", Finite(ch::sober_map)),
    theorem!("sober.min-corollary", "In a sober space, for 𝒜 irreducible in P_S(X), C = ⋂𝒜 ∈ K(X) and ⋂↑(↓c∩K) = ↑(↓c∩C) = ↑c for c ∈ min C", Finite(ch::sober_min_corollary)),
    theorem!("sober.rip-equational", "Sober iff RIP and ↑(C∩⋂𝒜) = ⋂↑(C∩K) for 𝒜 irreducible (or irreducible closed) in P_S(X) and C closed or irreducible closed", Finite(ch::sober_rip_equational)),
    theorem!("wd.core-compact", "Every core compact space is WD", Vector(sp::wd_core_compact)),
    theorem!("wf.add-top", "Adding a top point to a well-filtered space keeps it well-filtered", Finite(sp::wf_add_top)),
    theorem!("wf.equational", "Well-filtered iff K(X) is a dcpo (or FTIP) and ↑(A∩⋂𝒦) = ⋂↑(A∩K) for filtered 𝒦 and A closed or irreducible closed", Finite(ch::wf_equational)),
    theorem!("wf.lc-iff-core-compact", "A well-filtered space is locally compact iff core compact", Vector(sp::wf_lc_iff_core_compact)),
    theorem!("wf.map", "Well-filtered iff ↑f(⋂𝒦) = ⋂↑f(K) for continuous f into sober spaces and filtered 𝒦", Finite(ch::wf_map)),
    theorem!("wf.min-corollary", "In a well-filtered space, for filtered 𝒦, C = ⋂𝒦 ∈ K(X) and ⋂↑(↓c∩K) = ↑(↓c∩C) = ↑c for c ∈ min C", Finite(ch::wf_min_corollary)),
];

pub fn theorem_ids() -> Vec<&'static str> {
    REGISTRY.iter().map(|t| t.id).collect()
}

pub fn lookup(id: &str) -> Result<&'static TheoremInfo> {
    REGISTRY
        .iter()
        .find(|t| t.id == id)
        .ok_or_else(|| Error::InvalidArgument(format!("unknown theorem id {id:?}")))
}

fn contain(r: Result<Outcome>) -> Result<Outcome> {
    match r {
        Err(e @ (Error::CapExceeded { .. } | Error::Unsupported(_) | Error::CarrierTooLarge(_))) => {
            Ok(Outcome::NotApplicable(format!("needs an enumeration beyond the limits: {e}")))
        }
        other => other,
    }
}

/// Runs one theorem on a finite space.
pub fn verify_finite(c: &Checker, info: &TheoremInfo) -> Result<TheoremReport> {
    let out = match info.check {
        Check::Finite(f) | Check::Both(f, _) => contain(f(c))?,
        Check::Vector(f) => match c.vector() {
            Ok(v) => f(v),
            Err(e) => contain(Err(e))?,
        },
    };
    Ok(out.report(info.id))
}

pub fn verify_cofinite(v: &ClassificationVector, info: &TheoremInfo) -> TheoremReport {
    let out = match info.check {
        Check::Vector(f) | Check::Both(_, f) => f(v),
        Check::Finite(_) => {
            Outcome::NotApplicable("needs enumeration of a finite space".into())
        }
    };
    out.report(info.id)
}

/// Runs the selected theorems (all of them for an empty selection). Checks
/// run concurrently; reports come back sorted by id. Fails on an unknown id.
pub fn verify_theorems(x: &Space, ids: &[&str], caps: &Caps) -> Result<Vec<TheoremReport>> {
    let mut infos: Vec<&TheoremInfo> = if ids.is_empty() {
        REGISTRY.iter().collect()
    } else {
        ids.iter().map(|id| lookup(id)).collect::<Result<_>>()?
    };
    infos.sort_by_key(|t| t.id);
    infos.dedup_by_key(|t| t.id);
    let mut reports = match x {
        Space::Finite(p) => {
            let c = Checker::new(p.clone(), *caps);
            infos
                .par_iter()
                .map(|info| verify_finite(&c, info))
                .collect::<Result<Vec<_>>>()?
        }
        Space::Cofinite => {
            let v = classify_cofinite();
            infos.iter().map(|info| verify_cofinite(&v, info)).collect()
        }
    };
    reports.sort_by_key(|r| r.theorem_id);
    Ok(reports)
}

#[cfg(test)]
mod tests;
