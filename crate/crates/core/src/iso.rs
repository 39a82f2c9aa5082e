//! Isomorphism search and canonical forms for finite posets.

use std::collections::BTreeMap;

use crate::order::{FinPoset, FinSubset};

fn signature(p: &FinPoset, x: usize) -> (usize, usize) {
    (p.down(x).len(), p.up(x).len())
}

/// Finds an order isomorphism `p -> q`, if one exists.
pub fn find_isomorphism(p: &FinPoset, q: &FinPoset) -> Option<Vec<usize>> {
    if p.len() != q.len() || p.strict_pairs().len() != q.strict_pairs().len() {
        return None;
    }
    let mut sp: Vec<_> = (0..p.len()).map(|x| signature(p, x)).collect();
    let mut sq: Vec<_> = (0..q.len()).map(|x| signature(q, x)).collect();
    let (order_p, order_q) = (sp.clone(), sq.clone());
    sp.sort();
    sq.sort();
    if sp != sq {
        return None;
    }
    let mut map = vec![usize::MAX; p.len()];
    let mut used = FinSubset::EMPTY;
    let order = p.linear_extension();
    fn go(
        k: usize,
        order: &[usize],
        p: &FinPoset,
        q: &FinPoset,
        sp: &[(usize, usize)],
        sq: &[(usize, usize)],
        map: &mut Vec<usize>,
        used: &mut FinSubset,
    ) -> bool {
        if k == order.len() {
            return true;
        }
        let x = order[k];
        for y in 0..q.len() {
            if used.contains(y) || sp[x] != sq[y] {
                continue;
            }
            let ok = order[..k].iter().all(|&z| {
                p.leq(z, x) == q.leq(map[z], y) && p.leq(x, z) == q.leq(y, map[z])
            });
            if ok {
                map[x] = y;
                used.insert(y);
                if go(k + 1, order, p, q, sp, sq, map, used) {
                    return true;
                }
                used.remove(y);
                map[x] = usize::MAX;
            }
        }
        false
    }
    go(0, &order, p, q, &order_p, &order_q, &mut map, &mut used).then_some(map)
}

pub fn is_isomorphic(p: &FinPoset, q: &FinPoset) -> bool {
    find_isomorphism(p, q).is_some()
}

/// A canonical code: the lexicographically least strict-order matrix over all
/// relabellings that list points by increasing `(|↓x|, |↑x|)`. Two posets are
/// isomorphic exactly when their codes agree.
pub fn canonical_code(p: &FinPoset) -> Vec<u128> {
    let n = p.len();
    let mut classes: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
    for x in 0..n {
        classes.entry(signature(p, x)).or_default().push(x);
    }
    let classes: Vec<Vec<usize>> = classes.into_values().collect();
    let mut best: Option<Vec<u128>> = None;
    let mut perm = Vec::with_capacity(n);
    fn rows(p: &FinPoset, perm: &[usize]) -> Vec<u128> {
        // row i: bit j set when perm[i] < perm[j]
        perm.iter()
            .map(|&x| {
                perm.iter()
                    .enumerate()
                    .filter(|&(_, &y)| p.lt(x, y))
                    .fold(0u128, |acc, (j, _)| acc | 1 << j)
            })
            .collect()
    }
    fn go(
        ci: usize,
        classes: &[Vec<usize>],
        remaining: &mut Vec<Vec<usize>>,
        perm: &mut Vec<usize>,
        p: &FinPoset,
        best: &mut Option<Vec<u128>>,
    ) {
        if ci == classes.len() {
            let r = rows(p, perm);
            if best.as_ref().map_or(true, |b| r < *b) {
                *best = Some(r);
            }
            return;
        }
        if remaining[ci].is_empty() {
            go(ci + 1, classes, remaining, perm, p, best);
            return;
        }
        for i in 0..remaining[ci].len() {
            let x = remaining[ci].remove(i);
            perm.push(x);
            go(ci, classes, remaining, perm, p, best);
            perm.pop();
            remaining[ci].insert(i, x);
        }
    }
    let mut remaining = classes.clone();
    go(0, &classes, &mut remaining, &mut perm, p, &mut best);
    let mut code = best.unwrap_or_default();
    code.insert(0, n as u128);
    code
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lambda_is_not_vee() {
        assert!(!is_isomorphic(&FinPoset::lambda(), &FinPoset::vee()));
        assert!(is_isomorphic(&FinPoset::lambda(), &FinPoset::vee().dual()));
        assert_ne!(canonical_code(&FinPoset::lambda()), canonical_code(&FinPoset::vee()));
    }

    #[test]
    fn relabelled_copies_share_a_code() {
        let d = FinPoset::diamond();
        let perm = [2, 0, 3, 1];
        let q = FinPoset::from_leq(4, |i, j| d.leq(perm[i], perm[j])).unwrap();
        assert_eq!(canonical_code(&d), canonical_code(&q));
        let f = find_isomorphism(&d, &q).unwrap();
        for x in 0..4 {
            for y in 0..4 {
                assert_eq!(d.leq(x, y), q.leq(f[x], f[y]));
            }
        }
    }
}
