//! Sobrification and the well-filtered reflection `X^w = P_H(WD(X))`,
//! their universal property, functor action and behaviour on products.

use serde::Serialize;

use crate::classify::ctx::FiniteCtx;
use crate::config::Caps;
use crate::error::{invalid, Error, Result};
use crate::iso::find_isomorphism;
use crate::order::{FinPoset, FinSubset};
use crate::powerspace::{self, EmbeddingCheck, PowerSpace};
use crate::space::{self, Space, COFINITE_FAMILIES};

/// A reflection of a finite space into a Hoare power space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Reflection {
    pub original: FinPoset,
    pub reflected: PowerSpace,
    /// `x ↦ index of ↓x` in the reflected carrier.
    pub eta: Vec<usize>,
    pub eta_check: EmbeddingCheck,
}

impl Reflection {
    fn over(x: &FinPoset, carrier: Vec<FinSubset>, caps: &Caps) -> Result<Self> {
        let reflected = powerspace::hoare(x, &carrier, caps)?;
        let eta_check = powerspace::eta(&reflected, caps)?;
        Ok(Reflection {
            original: x.clone(),
            eta: eta_check.map.clone(),
            reflected,
            eta_check,
        })
    }

    pub fn space(&self) -> &FinPoset {
        &self.reflected.space
    }

    pub fn carrier(&self) -> &[FinSubset] {
        &self.reflected.carrier
    }
}

/// The reflection of the cofinite space, described rather than built.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CofiniteReflection {
    pub carrier: &'static str,
    pub added_points: usize,
    /// The added point is the class of `X` and lies in every nonempty `◇U`.
    pub added_point_is_top: bool,
    pub sober: bool,
    pub compact: bool,
    pub equals_sobrification: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Reflected {
    Finite(Reflection),
    Cofinite(CofiniteReflection),
}

/// `X^s = P_H(Irr_c(X))`.
pub fn sobrification(x: &FinPoset, caps: &Caps) -> Result<Reflection> {
    Reflection::over(x, space::irreducible_closed(x, caps)?, caps)
}

/// `WD(X)`; fails if some irreducible closed set has no decided status.
pub fn wd_family(ctx: &FiniteCtx) -> Result<Vec<FinSubset>> {
    let mut out = Vec::new();
    for &a in ctx.irr_c()? {
        let s = crate::rudin::wd_status_ctx(ctx, a)?;
        if s.verdict == crate::rudin::WdVerdict::Unknown {
            return Err(Error::Unsupported(format!(
                "WD status of {} is undecided",
                ctx.show(a)
            )));
        }
        if s.is_yes() {
            out.push(a);
        }
    }
    Ok(out)
}

pub fn wf_reflection_finite(x: &FinPoset, caps: &Caps) -> Result<Reflection> {
    let ctx = FiniteCtx::new(x.clone(), *caps);
    Reflection::over(x, wd_family(&ctx)?, caps)
}

/// The cofinite reflection: `WD(X) = Irr_c(X)` consists of the singletons and
/// `X`, so the reflection adds the single point `X`.
pub fn cofinite_reflection() -> CofiniteReflection {
    let f = COFINITE_FAMILIES;
    CofiniteReflection {
        carrier: "singleton closures and X",
        added_points: 1,
        added_point_is_top: true,
        sober: true,
        compact: true,
        equals_sobrification: f.well_filtered_determined == f.irreducible_closed,
    }
}

pub fn wf_reflection(x: &Space, caps: &Caps) -> Result<Reflected> {
    match x {
        Space::Finite(p) => wf_reflection_finite(p, caps).map(Reflected::Finite),
        Space::Cofinite => Ok(Reflected::Cofinite(cofinite_reflection())),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Factorization {
    /// `f*` on the reflected carrier.
    pub map: Vec<usize>,
    pub continuous: bool,
    /// `f* ∘ η = f`.
    pub commutes: bool,
    /// Number of continuous maps `g` with `g ∘ η = f`.
    pub solutions: usize,
    /// The uniqueness sweep hit the map cap.
    pub bounded: bool,
}

impl Factorization {
    pub fn is_unique(&self) -> bool {
        self.solutions == 1 && !self.bounded
    }
}

/// The unique continuous `f*` with `f* ∘ η = f`, for a well-filtered target.
pub fn factorize(
    refl: &Reflection,
    y: &FinPoset,
    f: &[usize],
    caps: &Caps,
) -> Result<Factorization> {
    let x = &refl.original;
    if f.len() != x.len() || f.iter().any(|&v| v >= y.len()) {
        return invalid("map does not go from the original space into the target");
    }
    if !space::is_monotone(x, y, f) {
        return invalid("map is not continuous");
    }
    let wf = FiniteCtx::new(y.clone(), *caps).well_filtered()?;
    if !wf.holds {
        return invalid("target is not well-filtered");
    }
    let map = refl
        .carrier()
        .iter()
        .map(|&a| {
            let c = y.down_closure(space::image(f, a));
            y.greatest(c).filter(|&g| y.down(g) == c).ok_or_else(|| {
                Error::InvalidArgument(format!("{} is not a point closure", y.show(c)))
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let r = refl.space();
    let continuous = space::is_continuous(r, y, &map, caps)?;
    let commutes = (0..x.len()).all(|i| map[refl.eta[i]] == f[i]);
    let mut fixed = vec![None; r.len()];
    for i in 0..x.len() {
        fixed[refl.eta[i]] = Some(f[i]);
    }
    let (solutions, bounded) = match space::monotone_maps_with(r, y, &fixed, caps.maps) {
        Ok(gs) => (gs.len(), false),
        Err(Error::CapExceeded { .. }) => (caps.maps, true),
        Err(e) => return Err(e),
    };
    Ok(Factorization {
        map,
        continuous,
        commutes,
        solutions,
        bounded,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FunctorAction {
    /// `A ↦ cl f(A)` from the carrier of `X^w` to that of `Y^w`.
    pub map: Vec<usize>,
    /// `f^w ∘ η_X = η_Y ∘ f`.
    pub commutes: bool,
    pub continuous: bool,
}

pub fn functor_action(
    rx: &Reflection,
    ry: &Reflection,
    f: &[usize],
    caps: &Caps,
) -> Result<FunctorAction> {
    let (x, y) = (&rx.original, &ry.original);
    if f.len() != x.len() || f.iter().any(|&v| v >= y.len()) || !space::is_monotone(x, y, f) {
        return invalid("not a continuous map between the original spaces");
    }
    let map = rx
        .carrier()
        .iter()
        .map(|&a| {
            let c = y.down_closure(space::image(f, a));
            ry.reflected
                .index_of(c)
                .ok_or_else(|| Error::InvalidArgument(format!("{} is not in WD(Y)", y.show(c))))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(FunctorAction {
        commutes: (0..x.len()).all(|i| map[rx.eta[i]] == ry.eta[f[i]]),
        continuous: space::is_continuous(rx.space(), ry.space(), &map, caps)?,
        map,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ProductReflectionReport {
    pub points: usize,
    /// `γ(A) = (cl p₁(A), …, cl pₙ(A))` as indices into the product of the
    /// factor reflections.
    pub gamma: Vec<usize>,
    pub bijective: bool,
    pub continuous: bool,
    pub inverse_continuous: bool,
}

impl ProductReflectionReport {
    pub fn is_homeomorphism(&self) -> bool {
        self.bijective && self.continuous && self.inverse_continuous
    }
}

/// Decodes a product index into coordinates, last factor varying fastest.
fn coordinates(mut i: usize, sizes: &[usize]) -> Vec<usize> {
    let mut out = vec![0; sizes.len()];
    for (k, &s) in sizes.iter().enumerate().rev() {
        out[k] = i % s;
        i /= s;
    }
    out
}

fn encode(coords: &[usize], sizes: &[usize]) -> usize {
    coords.iter().zip(sizes).fold(0, |acc, (&c, &s)| acc * s + c)
}

pub fn product_reflection_check(xs: &[FinPoset], caps: &Caps) -> Result<ProductReflectionReport> {
    if xs.is_empty() {
        return invalid("empty product");
    }
    let mut prod = xs[0].clone();
    for x in &xs[1..] {
        prod = prod.product(x)?;
    }
    let sizes: Vec<usize> = xs.iter().map(FinPoset::len).collect();
    let lhs = wf_reflection_finite(&prod, caps)?;
    let factors = xs
        .iter()
        .map(|x| wf_reflection_finite(x, caps))
        .collect::<Result<Vec<_>>>()?;
    let mut rhs = factors[0].space().clone();
    for r in &factors[1..] {
        rhs = rhs.product(r.space())?;
    }
    let rsizes: Vec<usize> = factors.iter().map(|r| r.space().len()).collect();
    let gamma = lhs
        .carrier()
        .iter()
        .map(|&a| {
            let coords = (0..xs.len())
                .map(|k| {
                    let proj: FinSubset =
                        a.iter().map(|i| coordinates(i, &sizes)[k]).collect();
                    let c = xs[k].down_closure(proj);
                    factors[k]
                        .reflected
                        .index_of(c)
                        .ok_or_else(|| Error::InvalidArgument("projection not in WD".into()))
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(encode(&coords, &rsizes))
        })
        .collect::<Result<Vec<_>>>()?;
    let image: FinSubset = gamma.iter().copied().collect();
    let bijective = image.len() == gamma.len() && gamma.len() == rhs.len();
    let continuous = space::is_continuous(lhs.space(), &rhs, &gamma, caps)?;
    let inverse_continuous = bijective && {
        let mut inv = vec![0; gamma.len()];
        for (i, &g) in gamma.iter().enumerate() {
            inv[g] = i;
        }
        space::is_continuous(&rhs, lhs.space(), &inv, caps)?
    };
    Ok(ProductReflectionReport {
        points: lhs.carrier().len(),
        gamma,
        bijective,
        continuous,
        inverse_continuous,
    })
}

/// A homeomorphism of finite T0 spaces, found as an order isomorphism.
pub fn homeomorphic(x: &FinPoset, y: &FinPoset) -> Option<Vec<usize>> {
    find_isomorphism(x, y)
}
