//! Naive reference enumerations. Everything here works from `leq` alone on
//! raw `u128` masks, walking every subset, so it shares no code with the
//! library's enumerations.
#![allow(dead_code)]

use soberbench::FinPoset;

pub fn subsets(n: usize) -> impl Iterator<Item = u128> {
    0..(1u128 << n)
}

pub fn members(m: u128) -> impl Iterator<Item = usize> {
    (0..128).filter(move |&i| m >> i & 1 == 1)
}

pub fn is_down(p: &FinPoset, a: u128) -> bool {
    let n = p.len();
    members(a).all(|x| (0..n).all(|y| !p.leq(y, x) || a >> y & 1 == 1))
}

pub fn is_up(p: &FinPoset, a: u128) -> bool {
    let n = p.len();
    members(a).all(|x| (0..n).all(|y| !p.leq(x, y) || a >> y & 1 == 1))
}

pub fn closed_sets(p: &FinPoset) -> Vec<u128> {
    subsets(p.len()).filter(|&a| is_down(p, a)).collect()
}

pub fn open_sets(p: &FinPoset) -> Vec<u128> {
    subsets(p.len()).filter(|&a| is_up(p, a)).collect()
}

/// Intersection of all opens containing `a`.
pub fn saturation(p: &FinPoset, a: u128) -> u128 {
    let full = (1u128 << p.len()) - 1;
    open_sets(p).into_iter().filter(|&u| a & !u == 0).fold(full, |x, u| x & u)
}

/// Nonempty saturated sets; every subset of a finite space is compact.
pub fn compact_saturated(p: &FinPoset) -> Vec<u128> {
    subsets(p.len())
        .filter(|&a| a != 0 && saturation(p, a) == a)
        .collect()
}

/// Nonempty and not covered by two closed sets unless one of them covers it.
pub fn is_irreducible(p: &FinPoset, a: u128) -> bool {
    if a == 0 {
        return false;
    }
    let cs = closed_sets(p);
    cs.iter().all(|&b| {
        cs.iter()
            .all(|&c| a & !(b | c) != 0 || a & !b == 0 || a & !c == 0)
    })
}

pub fn irreducible_closed(p: &FinPoset) -> Vec<u128> {
    closed_sets(p)
        .into_iter()
        .filter(|&a| is_irreducible(p, a))
        .collect()
}

pub fn is_directed(p: &FinPoset, a: u128) -> bool {
    a != 0
        && members(a).all(|x| {
            members(a).all(|y| members(a).any(|z| p.leq(x, z) && p.leq(y, z)))
        })
}

pub fn down_closure(p: &FinPoset, a: u128) -> u128 {
    (0..p.len())
        .filter(|&y| members(a).any(|x| p.leq(y, x)))
        .fold(0, |m, y| m | 1 << y)
}

/// Closures of directed sets.
pub fn directed_closures(p: &FinPoset) -> Vec<u128> {
    let mut v: Vec<u128> = subsets(p.len())
        .filter(|&a| is_directed(p, a))
        .map(|a| down_closure(p, a))
        .collect();
    v.sort();
    v.dedup();
    v
}

/// Families of masks, each family a mask over `ks`.
fn families(ks: &[u128]) -> impl Iterator<Item = Vec<u128>> + '_ {
    (1u128..(1 << ks.len())).map(move |f| members(f).map(|i| ks[i]).collect())
}

pub fn is_filtered(f: &[u128]) -> bool {
    !f.is_empty() && f.iter().all(|&a| f.iter().all(|&b| f.iter().any(|&c| c & !(a & b) == 0)))
}

/// Closed sets meeting every member, and the minimal ones among them.
pub fn minimal_meeting(p: &FinPoset, f: &[u128]) -> Vec<u128> {
    let meeting: Vec<u128> = closed_sets(p)
        .into_iter()
        .filter(|&a| f.iter().all(|&k| k & a != 0))
        .collect();
    meeting
        .iter()
        .copied()
        .filter(|&a| !meeting.iter().any(|&b| b != a && b & !a == 0))
        .collect()
}

/// Closed sets minimal among those meeting every member of some filtered
/// family of compact saturated sets.
pub fn rudin_sets(p: &FinPoset) -> Vec<u128> {
    let ks = compact_saturated(p);
    let mut out: Vec<u128> = families(&ks)
        .filter(|f| is_filtered(f))
        .flat_map(|f| minimal_meeting(p, &f))
        .collect();
    out.sort();
    out.dedup();
    out
}

/// Proper filters of the open-set lattice; on a finite lattice every upper
/// set is Scott open.
pub fn open_filters(p: &FinPoset) -> Vec<Vec<u128>> {
    let os = open_sets(p);
    families(&os)
        .filter(|f| {
            !f.contains(&0)
                && f.iter().all(|&u| os.iter().all(|&v| u & !v != 0 || f.contains(&v)))
                && f.iter().all(|&u| f.iter().all(|&v| f.contains(&(u & v))))
        })
        .collect()
}

/// A bijection `f` with `x ≤ y` iff `f(x) ≤ f(y)`.
pub fn is_order_iso(p: &FinPoset, q: &FinPoset, f: &[usize]) -> bool {
    let n = p.len();
    if q.len() != n || f.len() != n {
        return false;
    }
    let mut seen = vec![false; n];
    for &y in f {
        if y >= n || std::mem::replace(&mut seen[y], true) {
            return false;
        }
    }
    (0..n).all(|x| (0..n).all(|y| p.leq(x, y) == q.leq(f[x], f[y])))
}

/// Monotone maps, which are exactly the continuous ones.
pub fn monotone_maps(p: &FinPoset, q: &FinPoset) -> Vec<Vec<usize>> {
    let (n, m) = (p.len(), q.len());
    let mut out = Vec::new();
    let total = m.pow(n as u32);
    for code in 0..total {
        let f: Vec<usize> = (0..n).map(|i| code / m.pow(i as u32) % m).collect();
        if (0..n).all(|x| (0..n).all(|y| !p.leq(x, y) || q.leq(f[x], f[y]))) {
            out.push(f);
        }
    }
    out
}

pub fn named() -> Vec<(&'static str, FinPoset)> {
    vec![
        ("2-chain", FinPoset::chain2()),
        ("lambda", FinPoset::lambda()),
        ("vee", FinPoset::vee()),
        ("antichain(2)", FinPoset::antichain(2)),
        ("diamond", FinPoset::diamond()),
    ]
}
