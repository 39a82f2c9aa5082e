//! Evaluation of both sides of the intersection equations
//! `↑(A ∩ ⋂↑d) = ⋂↑(A ∩ ↑d)` and `↑(A ∩ ⋂𝒦) = ⋂↑(A ∩ K)`.

use serde::Serialize;

use crate::enumerate::{is_filtered_family, is_irreducible_finite};
use crate::error::{invalid, Result};
use crate::order::{FinPoset, FinSubset};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Equation {
    /// `D` directed, `A` closed.
    Directed,
    /// `𝒦` a filtered family of compact saturated sets, `A` closed.
    Filtered,
    /// `A` irreducible, `C` closed.
    Irreducible,
}

impl Equation {
    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "directed" => Ok(Equation::Directed),
            "filtered" => Ok(Equation::Filtered),
            "irreducible" => Ok(Equation::Irreducible),
            _ => invalid(format!("unknown equation {s:?}")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Binding {
    Directed(FinSubset),
    Family(Vec<FinSubset>),
    Irreducible(FinSubset),
    Closed(FinSubset),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Probe {
    pub lhs: FinSubset,
    pub rhs: FinSubset,
    pub equal: bool,
}

/// `(↑(A ∩ ⋂_{s∈S} ↑s), ⋂_{s∈S} ↑(A ∩ ↑s))`.
pub fn principal_sides(p: &FinPoset, s: FinSubset, a: FinSubset) -> (FinSubset, FinSubset) {
    let lhs = p.up_closure(a & p.upper_bounds(s));
    let rhs = s
        .iter()
        .fold(p.full(), |acc, d| acc & p.up_closure(a & p.up(d)));
    (lhs, rhs)
}

/// `(↑(A ∩ ⋂𝒦), ⋂_{K∈𝒦} ↑(A ∩ K))`.
pub fn family_sides(p: &FinPoset, ks: &[FinSubset], a: FinSubset) -> (FinSubset, FinSubset) {
    let meet = ks.iter().fold(p.full(), |acc, &k| acc & k);
    let lhs = p.up_closure(a & meet);
    let rhs = ks
        .iter()
        .fold(p.full(), |acc, &k| acc & p.up_closure(a & k));
    (lhs, rhs)
}

fn closed(p: &FinPoset, a: FinSubset) -> Result<FinSubset> {
    p.check_subset(a)?;
    if !p.is_down_set(a) {
        return invalid(format!("{} is not closed", p.show(a)));
    }
    Ok(a)
}

/// Evaluates both sides of `eq` under `bindings`, which must supply exactly
/// the two bindings the equation needs (in either order).
pub fn equational_probe(p: &FinPoset, eq: Equation, bindings: &[Binding]) -> Result<Probe> {
    let mismatch = || invalid(format!("binding kind mismatch for the {eq:?} equation"));
    if bindings.len() != 2 {
        return mismatch();
    }
    let closed_binding = bindings.iter().find_map(|b| match b {
        Binding::Closed(a) => Some(*a),
        _ => None,
    });
    let Some(a) = closed_binding else { return mismatch() };
    let a = closed(p, a)?;
    let Some(other) = bindings.iter().find(|b| !matches!(b, Binding::Closed(_))) else {
        return mismatch();
    };
    let (lhs, rhs) = match (eq, other) {
        (Equation::Directed, Binding::Directed(d)) => {
            p.check_subset(*d)?;
            if !p.is_directed(*d) {
                return invalid(format!("{} is not directed", p.show(*d)));
            }
            principal_sides(p, *d, a)
        }
        (Equation::Irreducible, Binding::Irreducible(s)) => {
            p.check_subset(*s)?;
            if !is_irreducible_finite(p, *s) {
                return invalid(format!("{} is not irreducible", p.show(*s)));
            }
            principal_sides(p, *s, a)
        }
        (Equation::Filtered, Binding::Family(ks)) => {
            for &k in ks {
                p.check_subset(k)?;
                if k.is_empty() || !p.is_up_set(k) {
                    return invalid(format!("{} is not compact saturated", p.show(k)));
                }
            }
            if !is_filtered_family(ks) {
                return invalid("family is not filtered");
            }
            family_sides(p, ks, a)
        }
        _ => return mismatch(),
    };
    Ok(Probe {
        lhs,
        rhs,
        equal: lhs == rhs,
    })
}
