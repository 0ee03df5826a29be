//! Helpers shared by unit tests.

use std::collections::BTreeMap;

use crate::graph::BicliqueCover;

/// How often each unordered pair is covered.
pub fn pair_counts(c: &BicliqueCover) -> BTreeMap<(usize, usize), usize> {
    let mut m = BTreeMap::new();
    for b in c.bicliques() {
        for &u in b.left() {
            for &v in b.right() {
                *m.entry((u.min(v), u.max(v))).or_insert(0) += 1;
            }
        }
    }
    m
}

/// Covered pairs, ignoring multiplicity.
pub fn covered(c: &BicliqueCover) -> Vec<(usize, usize)> {
    pair_counts(c).into_keys().collect()
}

/// All pairs `u < v` accepted by `pred`.
pub fn brute(n: usize, mut pred: impl FnMut(usize, usize) -> bool) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if pred(u, v) {
                out.push((u, v));
            }
        }
    }
    out
}
