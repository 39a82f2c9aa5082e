//! Cached enumerations over one finite space.

use std::sync::OnceLock;

use crate::config::Caps;
use crate::enumerate::{
    directed_subsets, filtered_families, irreducible_subsets, smyth_irreducible_families,
    Enumerated, Family, Tier,
};
use crate::error::{Error, Result};
use crate::order::{FinPoset, FinSubset};
use crate::space;

type Cached<T> = OnceLock<Result<T>>;

fn get<T>(cell: &Cached<T>, f: impl FnOnce() -> Result<T>) -> Result<&T> {
    cell.get_or_init(f).as_ref().map_err(Clone::clone)
}

/// A finite space together with lazily computed families of subsets.
pub struct FiniteCtx {
    pub p: FinPoset,
    pub caps: Caps,
    closed: Cached<Vec<FinSubset>>,
    open: Cached<Vec<FinSubset>>,
    compact: Cached<Vec<FinSubset>>,
    irr_c: Cached<Vec<FinSubset>>,
    subsets: Cached<Vec<FinSubset>>,
    directed: Cached<Enumerated<FinSubset>>,
    irreducible: Cached<Enumerated<FinSubset>>,
    filtered: Cached<Enumerated<Family>>,
    smyth_irr: Cached<Enumerated<Family>>,
    principal_irr: Cached<Vec<FinSubset>>,
    principal_filtered: Cached<Vec<FinSubset>>,
    well_filtered: Cached<super::props::Fact>,
}

impl FiniteCtx {
    pub fn new(p: FinPoset, caps: Caps) -> Self {
        FiniteCtx {
            p,
            caps,
            closed: OnceLock::new(),
            open: OnceLock::new(),
            compact: OnceLock::new(),
            irr_c: OnceLock::new(),
            subsets: OnceLock::new(),
            directed: OnceLock::new(),
            irreducible: OnceLock::new(),
            filtered: OnceLock::new(),
            smyth_irr: OnceLock::new(),
            principal_irr: OnceLock::new(),
            principal_filtered: OnceLock::new(),
            well_filtered: OnceLock::new(),
        }
    }

    pub fn n(&self) -> usize {
        self.p.len()
    }

    pub fn full(&self) -> FinSubset {
        self.p.full()
    }

    /// Closed sets, i.e. down-sets.
    pub fn closed(&self) -> Result<&[FinSubset]> {
        get(&self.closed, || space::closed_sets(&self.p, &self.caps)).map(Vec::as_slice)
    }

    /// Open sets, i.e. up-sets.
    pub fn open(&self) -> Result<&[FinSubset]> {
        get(&self.open, || space::open_sets(&self.p, &self.caps)).map(Vec::as_slice)
    }

    /// `K(X)`.
    pub fn compact(&self) -> Result<&[FinSubset]> {
        get(&self.compact, || {
            Ok(self.open()?.iter().copied().filter(|k| !k.is_empty()).collect())
        })
        .map(Vec::as_slice)
    }

    /// `Irr_c(X)`.
    pub fn irr_c(&self) -> Result<&[FinSubset]> {
        get(&self.irr_c, || space::irreducible_closed(&self.p, &self.caps)).map(Vec::as_slice)
    }

    /// Every nonempty subset; needs the carrier within `caps.carrier`.
    pub fn nonempty_subsets(&self) -> Result<&[FinSubset]> {
        get(&self.subsets, || {
            if self.n() > self.caps.carrier {
                return Err(Error::CapExceeded {
                    what: "subset enumeration",
                    size: self.n(),
                    cap: self.caps.carrier,
                });
            }
            Ok(self.full().subsets().skip(1).collect())
        })
        .map(Vec::as_slice)
    }

    pub fn directed(&self) -> Result<&Enumerated<FinSubset>> {
        get(&self.directed, || Ok(directed_subsets(&self.p, &self.caps)))
    }

    /// `Irr(X)`.
    pub fn irreducible(&self) -> Result<&Enumerated<FinSubset>> {
        get(&self.irreducible, || Ok(irreducible_subsets(&self.p, &self.caps)))
    }

    /// Filtered subfamilies of `K(X)`.
    pub fn filtered(&self) -> Result<&Enumerated<Family>> {
        get(&self.filtered, || Ok(filtered_families(self.compact()?, &self.caps)))
    }

    /// Subfamilies of `K(X)` irreducible in `P_S(X)`.
    pub fn smyth_irreducible(&self) -> Result<&Enumerated<Family>> {
        get(&self.smyth_irr, || {
            Ok(smyth_irreducible_families(self.compact()?, &self.caps))
        })
    }

    /// Sets `B` such that `{↑b : b ∈ B}` is irreducible in `P_S(X)`, by the
    /// basic-open criterion: any two basic opens `□U`, `□V` meeting the
    /// family meet it in `□(U ∩ V)`.
    pub fn principal_irreducible(&self) -> Result<&[FinSubset]> {
        get(&self.principal_irr, || {
            let opens = self.open()?;
            let mut out = Vec::new();
            for &b in self.nonempty_subsets()? {
                let hits = |u: FinSubset| b.iter().any(|x| self.p.up(x).is_subset(u));
                let hit: Vec<FinSubset> = opens.iter().copied().filter(|&u| hits(u)).collect();
                if hit.iter().all(|&u| hit.iter().all(|&v| hits(u & v))) {
                    out.push(b);
                }
            }
            Ok(out)
        })
        .map(Vec::as_slice)
    }

    /// Sets `B` such that `{↑b : b ∈ B}` is a filtered family.
    pub fn principal_filtered(&self) -> Result<&[FinSubset]> {
        get(&self.principal_filtered, || {
            Ok(self
                .nonempty_subsets()?
                .iter()
                .copied()
                .filter(|&b| {
                    b.iter().all(|x| {
                        b.iter().all(|y| {
                            b.iter()
                                .any(|z| self.p.up(z).is_subset(self.p.up(x) & self.p.up(y)))
                        })
                    })
                })
                .collect())
        })
        .map(Vec::as_slice)
    }

    pub(crate) fn cached_well_filtered(
        &self,
        f: impl FnOnce() -> Result<super::props::Fact>,
    ) -> Result<&super::props::Fact> {
        get(&self.well_filtered, f)
    }

    /// Whether any enumeration behind `tiers` was a bounded sample.
    pub fn any_bounded(tiers: &[Tier]) -> bool {
        tiers.iter().any(|t| t.is_bounded())
    }
}
