//! Finite posets and bitset subsets of their carriers.
//!
//! Subsets are `u128` masks, so carriers hold at most 128 points. Element `i`
//! is bit `i`; the derived `Ord` on [`FinSubset`] is the order of the mask read
//! as an integer, which is the canonical order used everywhere a family of
//! subsets has to be listed deterministically.

use std::fmt;
use std::ops::{BitAnd, BitOr, Sub};

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Hard limit on the size of a carrier.
pub const MAX_CARRIER: usize = 128;

/// A subset of a finite carrier `{0, .., n-1}`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct FinSubset(u128);

impl FinSubset {
    pub const EMPTY: FinSubset = FinSubset(0);

    pub fn from_bits(bits: u128) -> Self {
        FinSubset(bits)
    }

    pub fn bits(self) -> u128 {
        self.0
    }

    /// The whole carrier of size `n`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_CARRIER);
        if n == MAX_CARRIER {
            FinSubset(u128::MAX)
        } else {
            FinSubset((1u128 << n) - 1)
        }
    }

    pub fn singleton(i: usize) -> Self {
        FinSubset(1u128 << i)
    }

    /// Builds a subset of a carrier of size `n`, rejecting out-of-range indices.
    pub fn from_indices<I: IntoIterator<Item = usize>>(n: usize, items: I) -> Result<Self> {
        let mut s = FinSubset::EMPTY;
        for i in items {
            if i >= n {
                return Err(Error::IndexOutOfRange { index: i, size: n });
            }
            s.insert(i);
        }
        Ok(s)
    }

    pub fn contains(self, i: usize) -> bool {
        i < MAX_CARRIER && self.0 >> i & 1 == 1
    }

    pub fn insert(&mut self, i: usize) {
        self.0 |= 1u128 << i;
    }

    pub fn remove(&mut self, i: usize) {
        self.0 &= !(1u128 << i);
    }

    pub fn with(self, i: usize) -> Self {
        FinSubset(self.0 | 1u128 << i)
    }

    pub fn without(self, i: usize) -> Self {
        FinSubset(self.0 & !(1u128 << i))
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_subset(self, other: FinSubset) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_proper_subset(self, other: FinSubset) -> bool {
        self != other && self.is_subset(other)
    }

    pub fn meets(self, other: FinSubset) -> bool {
        self.0 & other.0 != 0
    }

    /// Complement relative to a carrier of size `n`.
    pub fn complement(self, n: usize) -> Self {
        FinSubset(!self.0 & FinSubset::full(n).0)
    }

    /// Least element, if any.
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn iter(self) -> Elements {
        Elements(self.0)
    }

    /// All subsets of `self`, in increasing mask order.
    pub fn subsets(self) -> Subsets {
        Subsets {
            mask: self.0,
            next: Some(0),
        }
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl BitOr for FinSubset {
    type Output = FinSubset;
    fn bitor(self, rhs: FinSubset) -> FinSubset {
        FinSubset(self.0 | rhs.0)
    }
}

impl BitAnd for FinSubset {
    type Output = FinSubset;
    fn bitand(self, rhs: FinSubset) -> FinSubset {
        FinSubset(self.0 & rhs.0)
    }
}

impl Sub for FinSubset {
    type Output = FinSubset;
    fn sub(self, rhs: FinSubset) -> FinSubset {
        FinSubset(self.0 & !rhs.0)
    }
}

impl FromIterator<usize> for FinSubset {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = FinSubset::EMPTY;
        for i in iter {
            s.insert(i);
        }
        s
    }
}

impl fmt::Debug for FinSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl Serialize for FinSubset {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.iter())
    }
}

/// Iterator over the elements of a [`FinSubset`] in increasing order.
pub struct Elements(u128);

impl Iterator for Elements {
    type Item = usize;
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i)
    }
}

/// Iterator over the subsets of a mask, ascending.
pub struct Subsets {
    mask: u128,
    next: Option<u128>,
}

impl Iterator for Subsets {
    type Item = FinSubset;
    fn next(&mut self) -> Option<FinSubset> {
        let cur = self.next?;
        self.next = if cur == self.mask {
            None
        } else {
            Some((cur | !self.mask).wrapping_add(1) & self.mask)
        };
        Some(FinSubset(cur))
    }
}

/// A finite partially ordered set. The order is stored as up- and down-sets of
/// every point; construction checks the order axioms.
#[derive(Clone, PartialEq, Eq)]
pub struct FinPoset {
    up: Vec<FinSubset>,
    down: Vec<FinSubset>,
    labels: Vec<String>,
}

impl fmt::Debug for FinPoset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rel: Vec<(usize, usize)> = (0..self.len())
            .flat_map(|x| self.up[x].iter().filter(move |&y| y != x).map(move |y| (x, y)))
            .collect();
        f.debug_struct("FinPoset")
            .field("n", &self.len())
            .field("lt", &rel)
            .finish()
    }
}

fn default_labels(n: usize) -> Vec<String> {
    (0..n).map(|i| i.to_string()).collect()
}

impl FinPoset {
    /// Builds a poset from a full order relation, checking reflexivity,
    /// antisymmetry and transitivity.
    pub fn from_leq(n: usize, leq: impl Fn(usize, usize) -> bool) -> Result<Self> {
        if n > MAX_CARRIER {
            return Err(Error::CarrierTooLarge(n));
        }
        let mut up = vec![FinSubset::EMPTY; n];
        for (x, u) in up.iter_mut().enumerate() {
            for y in 0..n {
                if leq(x, y) {
                    u.insert(y);
                }
            }
        }
        for x in 0..n {
            if !up[x].contains(x) {
                return Err(Error::NotAnOrder(format!("{x} <= {x} fails")));
            }
            for y in up[x].iter() {
                if y != x && up[y].contains(x) {
                    return Err(Error::NotAnOrder(format!("{x} <= {y} <= {x} with {x} != {y}")));
                }
                if !up[y].is_subset(up[x]) {
                    let z = (up[y] - up[x]).first().unwrap();
                    return Err(Error::NotAnOrder(format!("{x} <= {y} <= {z} but not {x} <= {z}")));
                }
            }
        }
        Ok(Self::from_up_sets(up))
    }

    /// Builds a poset from strict relations `i < j`, closing transitively.
    pub fn from_covers(n: usize, lt: &[(usize, usize)]) -> Result<Self> {
        if n > MAX_CARRIER {
            return Err(Error::CarrierTooLarge(n));
        }
        let mut reach = vec![FinSubset::EMPTY; n];
        for &(i, j) in lt {
            for k in [i, j] {
                if k >= n {
                    return Err(Error::IndexOutOfRange { index: k, size: n });
                }
            }
            reach[i].insert(j);
        }
        for k in 0..n {
            for i in 0..n {
                if reach[i].contains(k) {
                    let rk = reach[k];
                    reach[i] = reach[i] | rk;
                }
            }
        }
        if let Some(i) = (0..n).find(|&i| reach[i].contains(i)) {
            return Err(Error::Cycle(i));
        }
        let up = reach.into_iter().enumerate().map(|(i, r)| r.with(i)).collect();
        Ok(Self::from_up_sets(up))
    }

    fn from_up_sets(up: Vec<FinSubset>) -> Self {
        let n = up.len();
        let mut down = vec![FinSubset::EMPTY; n];
        for (x, u) in up.iter().enumerate() {
            for y in u.iter() {
                down[y].insert(x);
            }
        }
        FinPoset {
            up,
            down,
            labels: default_labels(n),
        }
    }

    pub fn with_labels<S: Into<String>>(mut self, labels: impl IntoIterator<Item = S>) -> Result<Self> {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.len() != self.len() {
            return Err(Error::InvalidArgument(format!(
                "{} labels for {} points",
                labels.len(),
                self.len()
            )));
        }
        self.labels = labels;
        Ok(self)
    }

    pub fn empty() -> Self {
        Self::from_up_sets(Vec::new())
    }

    /// `0 < 1 < .. < n-1`.
    pub fn chain(n: usize) -> Self {
        Self::from_leq(n, |x, y| x <= y).expect("chain")
    }

    pub fn antichain(n: usize) -> Self {
        Self::from_leq(n, |x, y| x == y).expect("antichain")
    }

    /// The two-element chain `a < b`.
    pub fn chain2() -> Self {
        Self::chain(2).with_labels(["a", "b"]).unwrap()
    }

    /// Bottom `0` below two incomparable points: `0 < a`, `0 < b`.
    pub fn lambda() -> Self {
        Self::from_covers(3, &[(0, 1), (0, 2)])
            .unwrap()
            .with_labels(["0", "a", "b"])
            .unwrap()
    }

    /// Two incomparable points below a top: `a < 1`, `b < 1`.
    pub fn vee() -> Self {
        Self::from_covers(3, &[(0, 2), (1, 2)])
            .unwrap()
            .with_labels(["a", "b", "1"])
            .unwrap()
    }

    /// `0 < a < 1`, `0 < b < 1`.
    pub fn diamond() -> Self {
        Self::from_covers(4, &[(0, 1), (0, 2), (1, 3), (2, 3)])
            .unwrap()
            .with_labels(["0", "a", "b", "1"])
            .unwrap()
    }

    pub fn len(&self) -> usize {
        self.up.len()
    }

    pub fn is_empty(&self) -> bool {
        self.up.is_empty()
    }

    pub fn full(&self) -> FinSubset {
        FinSubset::full(self.len())
    }

    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.up[x].contains(y)
    }

    pub fn lt(&self, x: usize, y: usize) -> bool {
        x != y && self.leq(x, y)
    }

    /// `↑x`.
    pub fn up(&self, x: usize) -> FinSubset {
        self.up[x]
    }

    /// `↓x`.
    pub fn down(&self, x: usize) -> FinSubset {
        self.down[x]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, x: usize) -> &str {
        &self.labels[x]
    }

    /// Renders a subset with point labels, e.g. `{0,a}`.
    pub fn show(&self, a: FinSubset) -> String {
        let items: Vec<&str> = a.iter().map(|i| self.label(i)).collect();
        format!("{{{}}}", items.join(","))
    }

    pub fn check_subset(&self, a: FinSubset) -> Result<()> {
        match (a - self.full()).first() {
            Some(i) => Err(Error::IndexOutOfRange {
                index: i,
                size: self.len(),
            }),
            None => Ok(()),
        }
    }

    pub fn check_point(&self, x: usize) -> Result<()> {
        if x < self.len() {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange {
                index: x,
                size: self.len(),
            })
        }
    }

    /// All strict relations `x < y`.
    pub fn strict_pairs(&self) -> Vec<(usize, usize)> {
        (0..self.len())
            .flat_map(|x| self.up[x].iter().filter(move |&y| y != x).map(move |y| (x, y)))
            .collect()
    }

    /// Cover relations `x < y` with nothing strictly between.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        self.strict_pairs()
            .into_iter()
            .filter(|&(x, y)| (self.up[x] & self.down[y]).len() == 2)
            .collect()
    }

    // --- closures -------------------------------------------------------

    /// `↓A`, the closure of `A` in the Alexandroff topology.
    pub fn down_closure(&self, a: FinSubset) -> FinSubset {
        a.iter().fold(FinSubset::EMPTY, |acc, x| acc | self.down[x])
    }

    /// `↑A`, the saturation of `A`.
    pub fn up_closure(&self, a: FinSubset) -> FinSubset {
        a.iter().fold(FinSubset::EMPTY, |acc, x| acc | self.up[x])
    }

    /// Largest up-set inside `A`.
    pub fn interior(&self, a: FinSubset) -> FinSubset {
        (0..self.len()).filter(|&x| self.up[x].is_subset(a)).collect()
    }

    pub fn is_down_set(&self, a: FinSubset) -> bool {
        self.down_closure(a) == a
    }

    pub fn is_up_set(&self, a: FinSubset) -> bool {
        self.up_closure(a) == a
    }

    // --- bounds ---------------------------------------------------------

    /// `A^↑ = ⋂_{a∈A} ↑a`; the whole carrier when `A` is empty.
    pub fn upper_bounds(&self, a: FinSubset) -> FinSubset {
        a.iter().fold(self.full(), |acc, x| acc & self.up[x])
    }

    /// `A^↓ = ⋂_{a∈A} ↓a`; the whole carrier when `A` is empty.
    pub fn lower_bounds(&self, a: FinSubset) -> FinSubset {
        a.iter().fold(self.full(), |acc, x| acc & self.down[x])
    }

    /// `A^δ = (A^↑)^↓`; the whole carrier when `A^↑` is empty.
    pub fn cut(&self, a: FinSubset) -> FinSubset {
        self.lower_bounds(self.upper_bounds(a))
    }

    // --- predicates -----------------------------------------------------

    /// Nonempty and every pair has an upper bound inside `A`.
    pub fn is_directed(&self, a: FinSubset) -> bool {
        !a.is_empty()
            && a.iter()
                .all(|x| a.iter().all(|y| (self.up[x] & self.up[y]).meets(a)))
    }

    /// Nonempty and every pair has a lower bound inside `A`.
    pub fn is_filtered(&self, a: FinSubset) -> bool {
        !a.is_empty()
            && a.iter()
                .all(|x| a.iter().all(|y| (self.down[x] & self.down[y]).meets(a)))
    }

    pub fn is_chain(&self, a: FinSubset) -> bool {
        a.iter()
            .all(|x| (a - self.up[x] - self.down[x]).is_empty())
    }

    pub fn is_antichain(&self, a: FinSubset) -> bool {
        a.iter().all(|x| (a & (self.up[x] | self.down[x])) == FinSubset::singleton(x))
    }

    /// A directed down-set.
    pub fn is_ideal(&self, a: FinSubset) -> bool {
        self.is_down_set(a) && self.is_directed(a)
    }

    // --- extremes -------------------------------------------------------

    /// Maximal elements of a nonempty subset.
    pub fn maximal(&self, a: FinSubset) -> Result<FinSubset> {
        nonempty(a)?;
        Ok(a.iter().filter(|&x| (self.up[x] & a) == FinSubset::singleton(x)).collect())
    }

    /// Minimal elements of a nonempty subset.
    pub fn minimal(&self, a: FinSubset) -> Result<FinSubset> {
        nonempty(a)?;
        Ok(a.iter().filter(|&x| (self.down[x] & a) == FinSubset::singleton(x)).collect())
    }

    /// Greatest element of `A`, if any.
    pub fn greatest(&self, a: FinSubset) -> Option<usize> {
        a.iter().find(|&x| a.is_subset(self.down[x]))
    }

    /// Least element of `A`, if any.
    pub fn least(&self, a: FinSubset) -> Option<usize> {
        a.iter().find(|&x| a.is_subset(self.up[x]))
    }

    /// Least upper bound of `A`, if it exists.
    pub fn sup(&self, a: FinSubset) -> Option<usize> {
        self.least(self.upper_bounds(a))
    }

    /// Greatest lower bound of `A`, if it exists.
    pub fn inf(&self, a: FinSubset) -> Option<usize> {
        self.greatest(self.lower_bounds(a))
    }

    /// Every directed subset has a supremum. Subsets are enumerated
    /// exhaustively up to 16 points; above that each directed set is finite
    /// and so contains its own greatest element.
    pub fn is_dcpo(&self) -> bool {
        if self.len() <= 16 {
            self.full()
                .subsets()
                .filter(|&d| self.is_directed(d))
                .all(|d| self.sup(d).is_some())
        } else {
            true
        }
    }

    // --- constructions --------------------------------------------------

    /// Points sorted so that `x < y` implies `x` comes first.
    pub fn linear_extension(&self) -> Vec<usize> {
        let mut v: Vec<usize> = (0..self.len()).collect();
        v.sort_by_key(|&x| (self.down[x].len(), x));
        v
    }

    /// Induced order on `A`; returns the subposet and the embedding of its
    /// points into `self`.
    pub fn induced(&self, a: FinSubset) -> Result<(FinPoset, Vec<usize>)> {
        self.check_subset(a)?;
        let emb = a.to_vec();
        let p = FinPoset::from_leq(emb.len(), |i, j| self.leq(emb[i], emb[j]))?
            .with_labels(emb.iter().map(|&x| self.labels[x].clone()))?;
        Ok((p, emb))
    }

    /// Product order; the pair `(x, y)` is point `x * other.len() + y`.
    pub fn product(&self, other: &FinPoset) -> Result<FinPoset> {
        let m = other.len();
        let n = self.len() * m;
        if n > MAX_CARRIER {
            return Err(Error::CarrierTooLarge(n));
        }
        let labels: Vec<String> = (0..n)
            .map(|i| format!("({},{})", self.labels[i / m], other.labels[i % m]))
            .collect();
        FinPoset::from_leq(n, |i, j| self.leq(i / m, j / m) && other.leq(i % m, j % m))?
            .with_labels(labels)
    }

    /// Adjoins a new greatest point, labelled `top`.
    pub fn with_top(&self) -> Result<FinPoset> {
        let n = self.len();
        let mut labels = self.labels.clone();
        labels.push("top".into());
        FinPoset::from_leq(n + 1, |i, j| j == n || (i < n && self.leq(i, j)))?.with_labels(labels)
    }

    /// Order with every relation reversed.
    pub fn dual(&self) -> FinPoset {
        FinPoset {
            up: self.down.clone(),
            down: self.up.clone(),
            labels: self.labels.clone(),
        }
    }

    /// All down-sets, ascending. Enumerated along a linear extension, so
    /// the cost is linear in the number of down-sets.
    pub fn down_sets(&self, cap: usize) -> Result<Vec<FinSubset>> {
        let order = self.linear_extension();
        let mut out = Vec::new();
        let mut stack = vec![(0usize, FinSubset::EMPTY)];
        while let Some((k, s)) = stack.pop() {
            if k == order.len() {
                if out.len() == cap {
                    return Err(Error::CapExceeded {
                        what: "down-set enumeration",
                        size: cap + 1,
                        cap,
                    });
                }
                out.push(s);
                continue;
            }
            let x = order[k];
            stack.push((k + 1, s));
            if self.down[x].without(x).is_subset(s) {
                stack.push((k + 1, s.with(x)));
            }
        }
        out.sort();
        Ok(out)
    }

    /// All up-sets, ascending.
    pub fn up_sets(&self, cap: usize) -> Result<Vec<FinSubset>> {
        let full = self.full();
        let mut v: Vec<FinSubset> = self.down_sets(cap)?.into_iter().map(|d| full - d).collect();
        v.sort();
        Ok(v)
    }
}

fn nonempty(a: FinSubset) -> Result<()> {
    if a.is_empty() {
        Err(Error::InvalidArgument("subset must be nonempty".into()))
    } else {
        Ok(())
    }
}

/// `(↓A, ↑A)`.
pub fn closures(p: &FinPoset, a: FinSubset) -> Result<(FinSubset, FinSubset)> {
    p.check_subset(a)?;
    Ok((p.down_closure(a), p.up_closure(a)))
}

/// Upper bounds, lower bounds and the cut of `A`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Bounds {
    pub upper: FinSubset,
    pub lower: FinSubset,
    pub cut: FinSubset,
}

pub fn bounds_and_cut(p: &FinPoset, a: FinSubset) -> Result<Bounds> {
    p.check_subset(a)?;
    Ok(Bounds {
        upper: p.upper_bounds(a),
        lower: p.lower_bounds(a),
        cut: p.cut(a),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct OrderFlags {
    pub directed: bool,
    pub filtered: bool,
    pub chain: bool,
    pub antichain: bool,
    pub down_set: bool,
    pub up_set: bool,
}

pub fn order_predicates(p: &FinPoset, a: FinSubset) -> Result<OrderFlags> {
    p.check_subset(a)?;
    Ok(OrderFlags {
        directed: p.is_directed(a),
        filtered: p.is_filtered(a),
        chain: p.is_chain(a),
        antichain: p.is_antichain(a),
        down_set: p.is_down_set(a),
        up_set: p.is_up_set(a),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Extremes {
    pub maximal: FinSubset,
    pub minimal: FinSubset,
    pub sup: Option<usize>,
    pub inf: Option<usize>,
}

pub fn extremes(p: &FinPoset, a: FinSubset) -> Result<Extremes> {
    p.check_subset(a)?;
    Ok(Extremes {
        maximal: p.maximal(a)?,
        minimal: p.minimal(a)?,
        sup: p.sup(a),
        inf: p.inf(a),
    })
}
