//! Augmented segment trees and the interval and box covers built on them.
//!
//! Endpoints are made distinct by ordering them as `(value, side, index)`
//! with left endpoints before right endpoints of equal value. Closed
//! intervals intersect exactly when their key ranges do, and every interval
//! spans a non-empty run of elementary intervals even when it is a single
//! point or duplicates another interval.
//!
//! With `m` keys `p_1 < ... < p_m` (and `p_0 = -∞`, `p_{m+1} = +∞`), leaf `j`
//! is the closed elementary interval `[p_j, p_{j+1}]` for `0 ≤ j ≤ m`. A node
//! over leaves `[a, b)` has slab `[p_a, p_b]`. An interval is in the long list
//! `L_v` when `s(v)` lies inside it but `s(parent(v))` does not, and in the
//! short list `S_v` when one of its endpoints lies in `s(v)`.

use crate::error::{Error, Result};
use crate::graph::{oracle_edges, Biclique, BicliqueCover, CoverMode, Graph};
use crate::rational::Rational;

/// Closed interval `[lo, hi]` belonging to vertex `owner`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Interval<T> {
    pub lo: T,
    pub hi: T,
    pub owner: usize,
}

/// `0` for a left endpoint, `1` for a right endpoint.
pub type Side = u8;

/// Endpoint key: value, side, index of the interval in the input.
pub type Key<T> = (T, Side, usize);

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Node {
    /// Leaf range `[a, b)`; the slab is `[p_a, p_b]`.
    pub leaves: (usize, usize),
    pub children: Option<(usize, usize)>,
    /// Owners in `L_v`, ascending by input index.
    pub long: Vec<usize>,
    /// Owners in `S_v`, ascending by input index.
    pub short: Vec<usize>,
}

/// Nodes are stored in preorder; the root is node 0.
#[derive(Debug, Clone)]
pub struct AugSegTree<T> {
    keys: Vec<Key<T>>,
    /// Key positions `(ka, kb)` in `1..=m` of each input interval.
    positions: Vec<(usize, usize)>,
    nodes: Vec<Node>,
}

impl<T: Ord + Clone> AugSegTree<T> {
    pub fn build(intervals: &[Interval<T>]) -> Result<Self> {
        if let Some(i) = intervals.iter().position(|iv| iv.lo > iv.hi) {
            return Err(Error::Input(format!("interval {i} has lo > hi")));
        }
        let mut keys: Vec<Key<T>> = Vec::with_capacity(2 * intervals.len());
        for (i, iv) in intervals.iter().enumerate() {
            keys.push((iv.lo.clone(), 0, i));
            keys.push((iv.hi.clone(), 1, i));
        }
        keys.sort();
        let mut positions = vec![(0, 0); intervals.len()];
        for (k, key) in keys.iter().enumerate() {
            if key.1 == 0 {
                positions[key.2].0 = k + 1;
            } else {
                positions[key.2].1 = k + 1;
            }
        }
        let mut nodes = Vec::new();
        grow(&mut nodes, 0, keys.len() + 1);
        let mut tree = AugSegTree { keys, positions, nodes };
        for (i, iv) in intervals.iter().enumerate() {
            let (ka, kb) = tree.positions[i];
            tree.insert_long(0, ka, kb, iv.owner);
            tree.insert_short(0, ka, kb, iv.owner);
        }
        Ok(tree)
    }

    fn insert_long(&mut self, v: usize, ka: usize, kb: usize, owner: usize) {
        let (a, b) = self.nodes[v].leaves;
        // The interval covers leaves [ka, kb).
        if b <= ka || kb <= a {
            return;
        }
        if ka <= a && b <= kb {
            self.nodes[v].long.push(owner);
            return;
        }
        if let Some((l, r)) = self.nodes[v].children {
            self.insert_long(l, ka, kb, owner);
            self.insert_long(r, ka, kb, owner);
        }
    }

    fn insert_short(&mut self, v: usize, ka: usize, kb: usize, owner: usize) {
        let (a, b) = self.nodes[v].leaves;
        let inside = |k: usize| a <= k && k <= b;
        if !inside(ka) && !inside(kb) {
            return;
        }
        self.nodes[v].short.push(owner);
        if let Some((l, r)) = self.nodes[v].children {
            self.insert_short(l, ka, kb, owner);
            self.insert_short(r, ka, kb, owner);
        }
    }

    pub fn nodes(&self) -> &[Node] {
        &self.nodes
    }

    /// Sorted endpoint keys `p_1, ..., p_m` (stored at index `k - 1`).
    pub fn keys(&self) -> &[Key<T>] {
        &self.keys
    }

    /// Positions `(ka, kb)` in `1..=m` of the endpoints of input interval `i`.
    pub fn positions(&self, i: usize) -> (usize, usize) {
        self.positions[i]
    }

    /// Value of boundary `p_k`, or `None` for `p_0 = -∞` and `p_{m+1} = +∞`.
    pub fn boundary(&self, k: usize) -> Option<&T> {
        if k == 0 || k > self.keys.len() {
            None
        } else {
            Some(&self.keys[k - 1].0)
        }
    }

    /// Number of lists (long or short) that contain each owner.
    pub fn list_multiplicity(&self, owners: usize) -> Vec<usize> {
        let mut count = vec![0; owners];
        for node in &self.nodes {
            for &o in node.long.iter().chain(&node.short) {
                count[o] += 1;
            }
        }
        count
    }
}

fn grow(nodes: &mut Vec<Node>, a: usize, b: usize) -> usize {
    let v = nodes.len();
    nodes.push(Node { leaves: (a, b), children: None, long: Vec::new(), short: Vec::new() });
    if b - a > 1 {
        let mid = a + (b - a) / 2;
        let l = grow(nodes, a, mid);
        let r = grow(nodes, mid, b);
        nodes[v].children = Some((l, r));
    }
    v
}

/// Sorted `a \ b` for sorted inputs.
pub(crate) fn sorted_difference(a: &[usize], b: &[usize]) -> Vec<usize> {
    let mut out = Vec::with_capacity(a.len());
    let mut j = 0;
    for &x in a {
        while j < b.len() && b[j] < x {
            j += 1;
        }
        if j == b.len() || b[j] != x {
            out.push(x);
        }
    }
    out
}

fn sorted(v: &[usize]) -> Vec<usize> {
    let mut v = v.to_vec();
    v.sort_unstable();
    v
}

/// Per node in preorder: `(S_v \ L_v, L_v)` as sorted owner lists.
fn node_sides<T: Ord + Clone>(tree: &AugSegTree<T>) -> impl Iterator<Item = (Vec<usize>, Vec<usize>)> + '_ {
    tree.nodes.iter().filter(|v| !v.long.is_empty() && !v.short.is_empty()).map(|v| {
        let long = sorted(&v.long);
        (sorted_difference(&sorted(&v.short), &long), long)
    })
}

fn interval_bicliques<T: Ord + Clone>(items: &[Interval<T>]) -> Result<Vec<Biclique>> {
    let tree = AugSegTree::build(items)?;
    Ok(node_sides(&tree)
        .filter(|(s, _)| !s.is_empty())
        .map(|(s, l)| Biclique::from_sorted(s, l))
        .collect())
}

fn as_intervals(intervals: &[(Rational, Rational)]) -> Vec<Interval<Rational>> {
    intervals.iter().enumerate().map(|(i, &(lo, hi))| Interval { lo, hi, owner: i }).collect()
}

/// Cover of the intersection graph of closed intervals: one biclique
/// `(S_v \ L_v, L_v)` per tree node where both sides are non-empty.
pub fn cover_intervals(intervals: &[(Rational, Rational)]) -> Result<BicliqueCover> {
    Ok(BicliqueCover::new(interval_bicliques(&as_intervals(intervals))?, CoverMode::Cover))
}

/// Builds the augmented segment tree of `intervals` with owners `0..n`.
pub fn build_augtree(intervals: &[(Rational, Rational)]) -> Result<AugSegTree<Rational>> {
    AugSegTree::build(&as_intervals(intervals))
}

/// Brute-force closed-interval intersection graph.
pub fn interval_oracle(intervals: &[(Rational, Rational)]) -> Graph {
    oracle_edges(intervals.len(), |u, v| {
        let (a, b) = (intervals[u], intervals[v]);
        a.0 <= b.1 && b.0 <= a.1
    })
}

/// Closed box: one `(lo, hi)` per axis.
pub type BoxD = Vec<(Rational, Rational)>;

/// Brute-force closed-box intersection graph.
pub fn box_oracle(boxes: &[BoxD]) -> Graph {
    oracle_edges(boxes.len(), |u, v| {
        boxes[u].iter().zip(&boxes[v]).all(|(a, b)| a.0 <= b.1 && b.0 <= a.1)
    })
}

/// Cover of the intersection graph of closed boxes in dimension `d`.
pub fn cover_boxes(boxes: &[BoxD], d: usize) -> Result<BicliqueCover> {
    if d == 0 {
        return Err(Error::Input("box dimension must be at least 1".into()));
    }
    if let Some(b) = boxes.iter().find(|b| b.len() != d) {
        return Err(Error::DimensionMismatch { expected: d, found: b.len() });
    }
    if let Some(i) = boxes.iter().position(|b| b.iter().any(|(lo, hi)| lo > hi)) {
        return Err(Error::Input(format!("box {i} has lo > hi")));
    }
    if d == 1 {
        let iv: Vec<(Rational, Rational)> = boxes.iter().map(|b| b[0]).collect();
        return cover_intervals(&iv);
    }
    let ids: Vec<usize> = (0..boxes.len()).collect();
    let out = boxes_rec(boxes, &ids, d)?;
    Ok(BicliqueCover::new(out, CoverMode::Cover))
}

/// Bicliques covering the intersection graph of `boxes[ids]` restricted to
/// the first `d` axes.
fn boxes_rec(boxes: &[BoxD], ids: &[usize], d: usize) -> Result<Vec<Biclique>> {
    let axis = d - 1;
    let items: Vec<Interval<Rational>> =
        ids.iter().map(|&i| Interval { lo: boxes[i][axis].0, hi: boxes[i][axis].1, owner: i }).collect();
    if d == 1 {
        return interval_bicliques(&items);
    }
    let tree = AugSegTree::build(&items)?;
    let mut out = Vec::new();
    for (short, long) in node_sides(&tree) {
        if short.is_empty() {
            continue;
        }
        let mut x: Vec<usize> = short.iter().chain(&long).copied().collect();
        x.sort_unstable();
        for bc in boxes_rec(boxes, &x, d - 1)? {
            let pick = |side: &[usize], from: &[usize]| -> Vec<usize> {
                side.iter().copied().filter(|i| from.binary_search(i).is_ok()).collect()
            };
            for (a, b) in [(pick(bc.left(), &short), pick(bc.right(), &long)), (pick(bc.left(), &long), pick(bc.right(), &short))] {
                if !a.is_empty() && !b.is_empty() {
                    out.push(Biclique::from_sorted(a, b));
                }
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use crate::testutil::{brute, covered};
    use crate::graph::validate_cover;
    use crate::rational::int;

    fn iv(v: &[(i64, i64)]) -> Vec<(Rational, Rational)> {
        v.iter().map(|&(a, b)| (int(a), int(b))).collect()
    }

    #[test]
    fn empty_tree_is_one_leaf() {
        let t = build_augtree(&[]).unwrap();
        assert_eq!(t.nodes().len(), 1);
        assert_eq!(t.nodes()[0].leaves, (0, 1));
        assert!(t.nodes()[0].long.is_empty() && t.nodes()[0].short.is_empty());
    }

    #[test]
    fn single_interval_lists() {
        let t = build_augtree(&iv(&[(1, 2)])).unwrap();
        // Leaves (-inf,1], [1,2], [2,inf); root [0,3) splits into [0,1) and [1,3).
        let n = t.nodes();
        assert_eq!(n.len(), 5);
        let long: Vec<_> = n.iter().filter(|v| !v.long.is_empty()).map(|v| v.leaves).collect();
        assert_eq!(long, vec![(1, 2)]);
        // Every slab holds 1 or 2.
        assert!(n.iter().all(|v| v.short == vec![0]));
    }

    #[test]
    fn rejects_reversed_interval() {
        assert!(build_augtree(&iv(&[(3, 1)])).is_err());
    }

    #[test]
    fn interval_examples() {
        assert!(cover_intervals(&iv(&[(0, 1), (2, 3), (4, 5)])).unwrap().is_empty());
        let i = iv(&[(1, 5), (2, 3), (4, 6)]);
        let c = cover_intervals(&i).unwrap();
        assert_eq!(c.covered_edges(), vec![(0, 1), (0, 2)]);
        assert!(validate_cover(&interval_oracle(&i), &c).unwrap().valid);
    }

    #[test]
    fn star_inside_long_interval() {
        let mut i = iv(&[(0, 10)]);
        i.extend(iv(&(0..10).map(|k| (k, k + 1)).collect::<Vec<_>>()));
        // Unit intervals touch their neighbors, so this is more than a star.
        let g = interval_oracle(&i);
        let c = cover_intervals(&i).unwrap();
        assert!(validate_cover(&g, &c).unwrap().valid);
        let mult = c.vertex_multiplicity(i.len());
        assert!(mult[0] <= 6 * (4 + 1));
    }

    #[test]
    fn duplicates_and_points() {
        let i = iv(&[(2, 2), (2, 2), (1, 3), (1, 3), (3, 3)]);
        let g = interval_oracle(&i);
        assert_eq!(g.m(), 8);
        assert!(validate_cover(&g, &cover_intervals(&i).unwrap()).unwrap().valid);
    }

    #[test]
    fn boxes_example() {
        let b = vec![
            vec![(int(0), int(2)), (int(0), int(2))],
            vec![(int(1), int(3)), (int(1), int(3))],
            vec![(int(5), int(6)), (int(5), int(6))],
        ];
        let c = cover_boxes(&b, 2).unwrap();
        assert_eq!(c.covered_edges(), vec![(0, 1)]);
        assert!(cover_boxes(&b, 3).is_err());
    }

    #[test]
    fn boxes_d1_delegates() {
        let i = iv(&[(1, 5), (2, 3), (4, 6), (0, 0)]);
        let b: Vec<BoxD> = i.iter().map(|&x| vec![x]).collect();
        assert_eq!(cover_boxes(&b, 1).unwrap(), cover_intervals(&i).unwrap());
    }

    #[test]
    fn difference() {
        assert_eq!(sorted_difference(&[1, 2, 4, 7], &[2, 3, 7]), vec![1, 4]);
    }

    fn interval() -> impl Strategy<Value = (i64, i64)> {
        (0i64..12, 0i64..5).prop_map(|(a, l)| (a, a + l))
    }

    fn raw_intervals(max: usize) -> impl Strategy<Value = Vec<(i64, i64)>> {
        prop::collection::vec(interval(), 0..max)
    }

    fn parents(tree: &AugSegTree<Rational>) -> Vec<Option<usize>> {
        let mut p = vec![None; tree.nodes().len()];
        for (v, node) in tree.nodes().iter().enumerate() {
            if let Some((l, r)) = node.children {
                p[l] = Some(v);
                p[r] = Some(v);
            }
        }
        p
    }

    proptest! {
        #[test]
        fn lists_match_definitions(raw in raw_intervals(40)) {
            let tree = build_augtree(&iv(&raw)).unwrap();
            let par = parents(&tree);
            // Slab of node v is [p_a, p_b]; an interval with key positions
            // (ka, kb) is the key range [p_ka, p_kb].
            let inside = |v: usize, i: usize| {
                let (a, b) = tree.nodes()[v].leaves;
                let (ka, kb) = tree.positions(i);
                ka <= a && b <= kb
            };
            for (v, node) in tree.nodes().iter().enumerate() {
                let (a, b) = node.leaves;
                for i in 0..raw.len() {
                    let long = inside(v, i) && !par[v].is_some_and(|p| inside(p, i));
                    let (ka, kb) = tree.positions(i);
                    let short = (a..=b).contains(&ka) || (a..=b).contains(&kb);
                    prop_assert_eq!(node.long.contains(&i), long);
                    prop_assert_eq!(node.short.contains(&i), short);
                }
            }
            // Keys order values, and the boundaries carry the endpoint values.
            for i in 0..raw.len() {
                let (ka, kb) = tree.positions(i);
                prop_assert_eq!(tree.boundary(ka), Some(&int(raw[i].0)));
                prop_assert_eq!(tree.boundary(kb), Some(&int(raw[i].1)));
            }
        }

        #[test]
        fn interval_cover_matches_overlap(raw in raw_intervals(60)) {
            let c = cover_intervals(&iv(&raw)).unwrap();
            let expect = brute(raw.len(), |u, v| raw[u].0.max(raw[v].0) <= raw[u].1.min(raw[v].1));
            prop_assert_eq!(covered(&c), expect);
            let n = raw.len().max(2);
            let bound = 6 * (n.next_power_of_two().trailing_zeros() as usize + 1);
            prop_assert!(c.vertex_multiplicity(raw.len()).into_iter().all(|k| k <= bound));
        }

        #[test]
        fn box_cover_matches_overlap(
            (d, raw) in (1usize..4).prop_flat_map(|d| (Just(d), prop::collection::vec(prop::collection::vec(interval(), d), 0..40)))
        ) {
            let boxes: Vec<BoxD> = raw.iter().map(|b| iv(b)).collect();
            let c = cover_boxes(&boxes, d).unwrap();
            let expect = brute(raw.len(), |u, v| {
                (0..d).all(|k| raw[u][k].0.max(raw[v][k].0) <= raw[u][k].1.min(raw[v][k].1))
            });
            prop_assert_eq!(covered(&c), expect);
        }

        #[test]
        fn one_dimensional_boxes_equal_intervals(raw in raw_intervals(50)) {
            let boxes: Vec<BoxD> = raw.iter().map(|&p| iv(&[p])).collect();
            prop_assert_eq!(cover_boxes(&boxes, 1).unwrap(), cover_intervals(&iv(&raw)).unwrap());
        }
    }
}
