//! Biclique partitions of dominance (comparability) bigraphs and graphs.
//!
//! A point `a` is dominated by `b` (`a ≺ b`) when `a[i] < b[i]` for every
//! coordinate. Both constructions split on the last coordinate at a median
//! value, hand the cross pairs to a problem with one coordinate fewer and
//! recurse on each side. Coordinates are rank-compressed first, so only their
//! relative order matters.

use crate::error::{Error, Result};
use crate::graph::{complete_on, oracle_edges, Biclique, BicliqueCover, CoverMode, Graph};
use crate::rational::{dense_ranks, Rational};

/// Points with exact coordinates in a fixed dimension.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointSet {
    dim: usize,
    points: Vec<Vec<Rational>>,
}

impl PointSet {
    pub fn new(dim: usize, points: Vec<Vec<Rational>>) -> Result<Self> {
        if let Some(p) = points.iter().find(|p| p.len() != dim) {
            return Err(Error::DimensionMismatch { expected: dim, found: p.len() });
        }
        Ok(PointSet { dim, points })
    }

    pub fn from_ints(dim: usize, points: &[Vec<i64>]) -> Result<Self> {
        let pts = points.iter().map(|p| p.iter().map(|&v| Rational::from_integer(v)).collect()).collect();
        PointSet::new(dim, pts)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[Vec<Rational>] {
        &self.points
    }
}

/// Two point sets of equal dimension. `ℓ r` is an edge iff `φ(ℓ) ≺ φ(r)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BigraphInstance {
    left: PointSet,
    right: PointSet,
}

impl BigraphInstance {
    pub fn new(left: PointSet, right: PointSet) -> Result<Self> {
        if left.dim() != right.dim() {
            return Err(Error::DimensionMismatch { expected: left.dim(), found: right.dim() });
        }
        Ok(BigraphInstance { left, right })
    }

    pub fn left(&self) -> &PointSet {
        &self.left
    }

    pub fn right(&self) -> &PointSet {
        &self.right
    }

    pub fn dim(&self) -> usize {
        self.left.dim()
    }

    /// Total vertex count `|L| + |R|`.
    pub fn n(&self) -> usize {
        self.left.len() + self.right.len()
    }
}

/// Strict componentwise dominance.
pub fn dominates<T: Ord>(a: &[T], b: &[T]) -> bool {
    a.iter().zip(b).all(|(x, y)| x < y)
}

/// Partition of the bigraph `{(ℓ, r) : φ(ℓ) ≺ φ(r)}`. Left vertices keep
/// their indices, right vertices are offset by `|L|`.
pub fn partition_bigraph(inst: &BigraphInstance) -> BicliqueCover {
    let (nl, nr, dim) = (inst.left.len(), inst.right.len(), inst.dim());
    let (left, right) = ranked_pair(
        dim,
        nl,
        |i, c| &inst.left.points[i][c],
        nr,
        |i, c| &inst.right.points[i][c],
    );
    let mut raw = Vec::new();
    bigraph_raw(&left, nl, &right, nr, &mut raw);
    let bicliques = raw
        .into_iter()
        .map(|(l, r)| Biclique::from_sorted(l, r.into_iter().map(|j| j + nl).collect()))
        .collect();
    BicliqueCover::new(bicliques, CoverMode::Partition)
}

/// Partition of the comparability graph `{uv : φ(u) ≺ φ(v) or φ(v) ≺ φ(u)}`.
pub fn partition_graph(pts: &PointSet) -> BicliqueCover {
    let rows = ranked_single(pts);
    let mut raw = Vec::new();
    let all: Vec<usize> = (0..pts.len()).collect();
    graph_rec(&rows, all, pts.dim(), &mut raw);
    let bicliques = raw.into_iter().map(|(l, r)| orient(l, r)).collect();
    BicliqueCover::new(bicliques, CoverMode::Partition)
}

/// `|{(ℓ, r) : φ(ℓ) ≺ φ(r)}|` by exhaustive comparison.
pub fn dominance_edge_count(inst: &BigraphInstance) -> usize {
    inst.left
        .points
        .iter()
        .map(|l| inst.right.points.iter().filter(|r| dominates(l, r)).count())
        .sum()
}

/// Brute-force bigraph on `|L| + |R|` vertices (right side offset by `|L|`).
pub fn bigraph_oracle(inst: &BigraphInstance) -> Graph {
    let nl = inst.left.len();
    oracle_edges(inst.n(), |u, v| u < nl && v >= nl && dominates(&inst.left.points[u], &inst.right.points[v - nl]))
}

/// Brute-force comparability graph.
pub fn comparability_oracle(pts: &PointSet) -> Graph {
    let p = &pts.points;
    oracle_edges(pts.len(), |u, v| dominates(&p[u], &p[v]) || dominates(&p[v], &p[u]))
}

// ---------------------------------------------------------------------------
// Engine shared with the other constructions.

/// Row-major points with a fixed dimension.
#[derive(Debug, Clone)]
pub(crate) struct Rows<T> {
    dim: usize,
    data: Vec<T>,
}

impl<T: Copy> Rows<T> {
    pub(crate) fn new(dim: usize, data: Vec<T>) -> Self {
        debug_assert!(dim == 0 || data.len().is_multiple_of(dim));
        Rows { dim, data }
    }

    #[inline]
    fn at(&self, i: usize, c: usize) -> T {
        self.data[i * self.dim + c]
    }
}

/// Biclique given by local indices into the left and right row sets. Both
/// lists are ascending.
pub(crate) type RawBiclique = (Vec<usize>, Vec<usize>);

/// Rank-compresses the coordinates of two point families jointly, column by
/// column, so strict comparisons between the families are preserved.
pub(crate) fn ranked_pair<'a, K: Ord + 'a>(
    dim: usize,
    nl: usize,
    left: impl Fn(usize, usize) -> K,
    nr: usize,
    right: impl Fn(usize, usize) -> K,
) -> (Rows<u32>, Rows<u32>) {
    let mut ldata = vec![0u32; nl * dim];
    let mut rdata = vec![0u32; nr * dim];
    for c in 0..dim {
        let keys: Vec<K> = (0..nl).map(|i| left(i, c)).chain((0..nr).map(|i| right(i, c))).collect();
        let ranks = dense_ranks(&keys);
        for i in 0..nl {
            ldata[i * dim + c] = ranks[i];
        }
        for i in 0..nr {
            rdata[i * dim + c] = ranks[nl + i];
        }
    }
    (Rows::new(dim, ldata), Rows::new(dim, rdata))
}

fn ranked_single(pts: &PointSet) -> Rows<u32> {
    let (n, dim) = (pts.len(), pts.dim());
    let mut data = vec![0u32; n * dim];
    for c in 0..dim {
        let col: Vec<&Rational> = pts.points.iter().map(|p| &p[c]).collect();
        for (i, r) in dense_ranks(&col).into_iter().enumerate() {
            data[i * dim + c] = r;
        }
    }
    Rows::new(dim, data)
}

/// Biclique partition of `{(i, j) : left[i] ≺ right[j]}` for `i < nl`,
/// `j < nr`, appended to `out` in recursion preorder.
pub(crate) fn bigraph_raw<T: Ord + Copy>(
    left: &Rows<T>,
    nl: usize,
    right: &Rows<T>,
    nr: usize,
    out: &mut Vec<RawBiclique>,
) {
    debug_assert_eq!(left.dim, right.dim);
    bigraph_rec(left, right, (0..nl).collect(), (0..nr).collect(), left.dim, out);
}

fn bigraph_rec<T: Ord + Copy>(
    left: &Rows<T>,
    right: &Rows<T>,
    l: Vec<usize>,
    r: Vec<usize>,
    dims: usize,
    out: &mut Vec<RawBiclique>,
) {
    if l.is_empty() || r.is_empty() {
        return;
    }
    if dims == 0 {
        out.push((l, r));
        return;
    }
    let c = dims - 1;
    let (lmin, lmax) = min_max(l.iter().map(|&i| left.at(i, c)));
    let (rmin, rmax) = min_max(r.iter().map(|&i| right.at(i, c)));
    if lmin >= rmax {
        // No left value lies strictly below any right value; this includes
        // the case where every value on this coordinate is equal.
        return;
    }
    if lmax < rmin {
        // Every pair already satisfies this coordinate.
        bigraph_rec(left, right, l, r, c, out);
        return;
    }
    let mut values: Vec<T> = l.iter().map(|&i| left.at(i, c)).chain(r.iter().map(|&i| right.at(i, c))).collect();
    let p = split_value(&mut values);

    let (l_low, l_high): (Vec<usize>, Vec<usize>) = l.into_iter().partition(|&i| left.at(i, c) <= p);
    let (r_low, r_high): (Vec<usize>, Vec<usize>) = r.into_iter().partition(|&i| right.at(i, c) <= p);
    bigraph_rec(left, right, l_low.clone(), r_high.clone(), c, out);
    bigraph_rec(left, right, l_low, r_low, dims, out);
    bigraph_rec(left, right, l_high, r_high, dims, out);
}

fn graph_rec<T: Ord + Copy>(rows: &Rows<T>, v: Vec<usize>, dims: usize, out: &mut Vec<RawBiclique>) {
    if v.len() < 2 {
        return;
    }
    if dims == 0 {
        let mut tmp = Vec::new();
        complete_on(&v, &mut tmp);
        out.extend(tmp.into_iter().map(|b| (b.left().to_vec(), b.right().to_vec())));
        return;
    }
    let c = dims - 1;
    let (lo, hi) = min_max(v.iter().map(|&i| rows.at(i, c)));
    if lo == hi {
        // No strict comparison is possible on this coordinate.
        return;
    }
    let mut values: Vec<T> = v.iter().map(|&i| rows.at(i, c)).collect();
    let p = split_value(&mut values);
    let (low, high): (Vec<usize>, Vec<usize>) = v.into_iter().partition(|&i| rows.at(i, c) <= p);
    bigraph_rec(rows, rows, low.clone(), high.clone(), c, out);
    graph_rec(rows, low, dims, out);
    graph_rec(rows, high, dims, out);
}

fn min_max<T: Ord + Copy>(mut it: impl Iterator<Item = T>) -> (T, T) {
    let first = it.next().expect("non-empty side");
    it.fold((first, first), |(a, b), x| (a.min(x), b.max(x)))
}

/// Split value for `values`, which must contain at least two distinct
/// entries. Starts from the lower median and, when ties make that split
/// lopsided, considers the next smaller distinct value instead. The result
/// always leaves both `<= p` and `> p` non-empty.
fn split_value<T: Ord + Copy>(values: &mut [T]) -> T {
    let n = values.len();
    let mid = (n - 1) / 2;
    let (_, &mut median, _) = values.select_nth_unstable(mid);
    let low_count = |p: T| values.iter().filter(|&&x| x <= p).count();
    let below = values.iter().copied().filter(|&x| x < median).max();
    let at_median = low_count(median);
    let imbalance = |low: usize| low.max(n - low);
    match below {
        Some(b) => {
            let at_below = low_count(b);
            if at_median == n || imbalance(at_below) < imbalance(at_median) {
                b
            } else {
                median
            }
        }
        None => {
            debug_assert!(at_median < n, "split requires two distinct values");
            median
        }
    }
}

/// Graph-mode bicliques have `low` and `high` sides that may interleave in
/// vertex order; sides are re-sorted for the canonical biclique form.
fn orient(mut l: Vec<usize>, mut r: Vec<usize>) -> Biclique {
    l.sort_unstable();
    r.sort_unstable();
    Biclique::from_sorted(l, r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeMap;
    use proptest::prelude::*;
    use crate::testutil::{brute, pair_counts};
    use crate::graph::validate_cover;

    fn ps(dim: usize, pts: &[Vec<i64>]) -> PointSet {
        PointSet::from_ints(dim, pts).unwrap()
    }

    #[test]
    fn zero_dimensional_bigraph_is_one_biclique() {
        let inst = BigraphInstance::new(ps(0, &[vec![], vec![]]), ps(0, &[vec![], vec![], vec![]])).unwrap();
        let c = partition_bigraph(&inst);
        assert_eq!(c.len(), 1);
        assert_eq!(c.size(), 5);
        assert_eq!(c.bicliques()[0].left(), &[0, 1]);
        assert_eq!(c.bicliques()[0].right(), &[2, 3, 4]);
        assert_eq!(dominance_edge_count(&inst), 6);
    }

    #[test]
    fn two_dimensional_bigraph_example() {
        let inst =
            BigraphInstance::new(ps(2, &[vec![1, 1], vec![2, 4]]), ps(2, &[vec![3, 2], vec![4, 5]])).unwrap();
        let c = partition_bigraph(&inst);
        assert_eq!(c.covered_edges(), vec![(0, 2), (0, 3), (1, 3)]);
        let report = validate_cover(&bigraph_oracle(&inst), &c).unwrap();
        assert!(report.valid);
        assert_eq!(dominance_edge_count(&inst), 3);
    }

    #[test]
    fn no_dominated_pair_gives_empty_cover() {
        let inst = BigraphInstance::new(ps(2, &[vec![5, 5]]), ps(2, &[vec![1, 1]])).unwrap();
        assert!(partition_bigraph(&inst).is_empty());
        assert_eq!(dominance_edge_count(&inst), 0);
    }

    #[test]
    fn dimension_mismatch_is_rejected() {
        let err = BigraphInstance::new(ps(2, &[vec![1, 1]]), ps(3, &[vec![1, 1, 1]])).unwrap_err();
        assert_eq!(err, Error::DimensionMismatch { expected: 2, found: 3 });
        assert!(PointSet::new(2, vec![vec![Rational::from_integer(1)]]).is_err());
    }

    #[test]
    fn chain_and_antichain() {
        let chain = ps(2, &[vec![0, 0], vec![1, 1], vec![2, 2]]);
        let c = partition_graph(&chain);
        assert!(validate_cover(&Graph::complete(3), &c).unwrap().valid);
        let anti = ps(2, &[vec![0, 1], vec![1, 0]]);
        assert!(partition_graph(&anti).is_empty());
    }

    #[test]
    fn zero_dimensional_graph_is_complete() {
        let pts = ps(0, &[vec![], vec![], vec![], vec![]]);
        let c = partition_graph(&pts);
        assert!(validate_cover(&Graph::complete(4), &c).unwrap().valid);
    }

    #[test]
    fn heavy_ties_terminate_and_stay_exact() {
        let inst = BigraphInstance::new(
            ps(1, &[vec![1], vec![2], vec![2], vec![2]]),
            ps(1, &[vec![2], vec![2], vec![3], vec![1]]),
        )
        .unwrap();
        let c = partition_bigraph(&inst);
        let report = validate_cover(&bigraph_oracle(&inst), &c).unwrap();
        assert!(report.valid, "{report:?}");
    }

    #[test]
    fn split_value_always_separates() {
        let mut v = [1, 2, 2, 2];
        let p = split_value(&mut v);
        assert!(v.iter().any(|&x| x <= p) && v.iter().any(|&x| x > p));
        let mut v = [4, 4, 4, 9];
        let p = split_value(&mut v);
        assert_eq!(p, 4);
    }

    fn rows(d: usize, max: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
        prop::collection::vec(prop::collection::vec(0i64..6, d), 0..max)
    }

    fn below(a: &[i64], b: &[i64]) -> bool {
        a.iter().zip(b).all(|(x, y)| x < y)
    }

    proptest! {
        #[test]
        fn bigraph_partition_is_exact(
            (d, l, r) in (0usize..5).prop_flat_map(|d| (Just(d), rows(d, 24), rows(d, 24)))
        ) {
            let inst = BigraphInstance::new(ps(d, &l), ps(d, &r)).unwrap();
            let c = partition_bigraph(&inst);
            let mut expect = BTreeMap::new();
            for (i, a) in l.iter().enumerate() {
                for (j, b) in r.iter().enumerate() {
                    if below(a, b) {
                        expect.insert((i, l.len() + j), 1);
                    }
                }
            }
            prop_assert_eq!(pair_counts(&c), expect);
            prop_assert_eq!(dominance_edge_count(&inst), c.bicliques().iter().map(|b| b.edge_count()).sum::<usize>());
        }

        #[test]
        fn graph_partition_is_exact((d, p) in (1usize..5).prop_flat_map(|d| (Just(d), rows(d, 40)))) {
            let c = partition_graph(&ps(d, &p));
            let expect: BTreeMap<_, _> =
                brute(p.len(), |u, v| below(&p[u], &p[v]) || below(&p[v], &p[u])).into_iter().map(|e| (e, 1)).collect();
            prop_assert_eq!(pair_counts(&c), expect);
        }

        #[test]
        fn translation_leaves_cover_unchanged(
            (d, p, shift) in (1usize..4).prop_flat_map(|d| (Just(d), rows(d, 30), prop::collection::vec(-50i64..50, d)))
        ) {
            let moved: Vec<Vec<i64>> = p.iter().map(|q| q.iter().zip(&shift).map(|(a, b)| a + b).collect()).collect();
            prop_assert_eq!(partition_graph(&ps(d, &p)), partition_graph(&ps(d, &moved)));
        }
    }
}
