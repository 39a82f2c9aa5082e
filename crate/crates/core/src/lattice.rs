//! Finite lattices given by their order: joins, meets, way-below, filters.

use crate::error::{Error, Result};
use crate::order::{FinPoset, FinSubset};

/// A finite lattice with precomputed binary joins and meets.
#[derive(Debug, Clone)]
pub struct FinLattice {
    p: FinPoset,
    join: Vec<usize>,
    meet: Vec<usize>,
}

impl FinLattice {
    /// Fails unless every pair has a join and a meet.
    pub fn new(p: FinPoset) -> Result<Self> {
        let n = p.len();
        if n == 0 {
            return Err(Error::InvalidArgument("a lattice is nonempty".into()));
        }
        let mut join = vec![0; n * n];
        let mut meet = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                let pair = FinSubset::singleton(a).with(b);
                join[a * n + b] = p.sup(pair).ok_or_else(|| {
                    Error::InvalidArgument(format!("{a} and {b} have no join"))
                })?;
                meet[a * n + b] = p.inf(pair).ok_or_else(|| {
                    Error::InvalidArgument(format!("{a} and {b} have no meet"))
                })?;
            }
        }
        Ok(FinLattice { p, join, meet })
    }

    /// The lattice of a family of sets ordered by inclusion.
    pub fn of_sets(sets: &[FinSubset]) -> Result<Self> {
        Self::new(FinPoset::from_leq(sets.len(), |i, j| sets[i].is_subset(sets[j]))?)
    }

    pub fn poset(&self) -> &FinPoset {
        &self.p
    }

    pub fn len(&self) -> usize {
        self.p.len()
    }

    pub fn is_empty(&self) -> bool {
        self.p.is_empty()
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.p.leq(a, b)
    }

    pub fn join(&self, a: usize, b: usize) -> usize {
        self.join[a * self.len() + b]
    }

    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.meet[a * self.len() + b]
    }

    pub fn bottom(&self) -> usize {
        self.p.least(self.p.full()).expect("finite lattice has a bottom")
    }

    pub fn top(&self) -> usize {
        self.p.greatest(self.p.full()).expect("finite lattice has a top")
    }

    pub fn join_all(&self, a: FinSubset) -> usize {
        a.iter().fold(self.bottom(), |acc, x| self.join(acc, x))
    }

    /// Every directed subset with its join, by brute force over all subsets
    /// of the carrier. Only feasible for small lattices.
    pub fn directed_with_joins(&self) -> Vec<(FinSubset, usize)> {
        self.p
            .full()
            .subsets()
            .filter(|&d| self.p.is_directed(d))
            .map(|d| (d, self.join_all(d)))
            .collect()
    }

    /// `u ≪ v` straight from the definition, quantifying over `directed`.
    pub fn way_below_over(&self, u: usize, v: usize, directed: &[(FinSubset, usize)]) -> bool {
        directed
            .iter()
            .filter(|&&(_, j)| self.leq(v, j))
            .all(|&(d, _)| d.iter().any(|x| self.leq(u, x)))
    }

    /// `u ≪ v`. A directed subset of a finite lattice contains its join, so
    /// the relation is `u ≤ v`; the unit tests compare this with
    /// [`FinLattice::way_below_over`] on every directed subset.
    pub fn way_below(&self, u: usize, v: usize) -> bool {
        self.leq(u, v)
    }

    /// Every element is the join of the elements way below it.
    pub fn is_continuous(&self) -> bool {
        (0..self.len()).all(|v| {
            let below: FinSubset = (0..self.len()).filter(|&u| self.way_below(u, v)).collect();
            self.join_all(below) == v
        })
    }

    pub fn is_distributive(&self) -> bool {
        let n = self.len();
        (0..n).all(|a| {
            (0..n).all(|b| {
                (0..n).all(|c| {
                    self.meet(a, self.join(b, c)) == self.join(self.meet(a, b), self.meet(a, c))
                })
            })
        })
    }

    /// Nonempty, upward closed and closed under binary meets.
    pub fn is_filter(&self, f: FinSubset) -> bool {
        !f.is_empty()
            && self.p.is_up_set(f)
            && f.iter().all(|a| f.iter().all(|b| f.contains(self.meet(a, b))))
    }

    /// Scott-open: an upper set that every directed set with join inside
    /// already meets. Directed sets are enumerated by brute force when the
    /// lattice has at most `brute_limit` elements; otherwise the check uses
    /// principal candidates `{m}` and is exact because finite directed sets
    /// contain their join.
    pub fn is_scott_open(&self, f: FinSubset, brute_limit: usize) -> bool {
        if !self.p.is_up_set(f) {
            return false;
        }
        if self.len() <= brute_limit {
            self.p
                .full()
                .subsets()
                .filter(|&d| self.p.is_directed(d))
                .filter(|&d| f.contains(self.join_all(d)))
                .all(|d| d.meets(f))
        } else {
            true
        }
    }

    /// Principal filter `↑a`.
    pub fn principal_filter(&self, a: usize) -> FinSubset {
        self.p.up(a)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::posets_up_to_iso;

    fn lattices_up_to(n: usize) -> Vec<FinLattice> {
        (1..=n)
            .flat_map(posets_up_to_iso)
            .filter_map(|p| FinLattice::new(p).ok())
            .collect()
    }

    #[test]
    fn way_below_is_order_on_small_lattices() {
        let ls = lattices_up_to(6);
        assert!(ls.len() > 20);
        for l in &ls {
            let dirs = l.directed_with_joins();
            for u in 0..l.len() {
                for v in 0..l.len() {
                    assert_eq!(l.way_below_over(u, v, &dirs), l.leq(u, v));
                }
            }
        }
    }

    #[test]
    fn way_below_on_larger_open_lattices() {
        // lattices of opens with 8 to 20 elements
        let mut checked = 0;
        for n in 3..=5 {
            for p in posets_up_to_iso(n) {
                let opens = p.up_sets(usize::MAX).unwrap();
                if opens.len() < 8 || opens.len() > 20 {
                    continue;
                }
                let l = FinLattice::of_sets(&opens).unwrap();
                let dirs = l.directed_with_joins();
                for u in 0..l.len() {
                    for v in 0..l.len() {
                        assert_eq!(l.way_below_over(u, v, &dirs), l.leq(u, v));
                    }
                }
                checked += 1;
            }
        }
        assert!(checked >= 20);
    }

    #[test]
    fn diamond_is_distributive_pentagon_is_not() {
        assert!(FinLattice::new(FinPoset::diamond()).unwrap().is_distributive());
        // 0 < a < c < 1, 0 < b < 1
        let n5 = FinPoset::from_covers(5, &[(0, 1), (1, 2), (2, 4), (0, 3), (3, 4)]).unwrap();
        let l = FinLattice::new(n5).unwrap();
        assert!(!l.is_distributive());
        assert!(l.is_continuous());
        assert!(FinLattice::new(FinPoset::lambda()).is_err());
    }

    #[test]
    fn filters_of_three_chain() {
        let l = FinLattice::new(FinPoset::chain(3)).unwrap();
        let filters: Vec<FinSubset> = l.poset().full().subsets().filter(|&f| l.is_filter(f)).collect();
        assert_eq!(filters.len(), 3);
        assert!(filters.iter().all(|&f| l.is_scott_open(f, 16)));
    }
}
