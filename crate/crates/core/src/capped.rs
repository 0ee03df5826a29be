//! Capped (terrain-like) ordered graphs.
//!
//! An ordered graph on `0..n` is capped when there is no `i < j < k < l`
//! with `ik` and `jl` edges but `il` missing. Across any cut `L = [lo, mid)`,
//! `R = [mid, hi)` the cut edges form a two-dimensional comparability bigraph,
//! so the cover recurses on both halves and partitions each cut with the
//! dominance engine.

use crate::dominance::{bigraph_raw, BigraphInstance, PointSet, Rows};
use crate::error::{Error, Result};
use crate::graph::{Biclique, BicliqueCover, Checking, CoverMode, Graph};
use crate::rational::int;

/// Finds the lexicographically least quadruple `i < j < k < l` with `ik` and
/// `jl` edges and `il` missing, in `O(n m)` time.
pub fn capped_violation(g: &Graph) -> Option<(usize, usize, usize, usize)> {
    let adj = g.adjacency();
    let n = g.n();
    let mut mark = vec![false; n];
    for i in 0..n {
        if adj[i].is_empty() {
            continue;
        }
        for &w in &adj[i] {
            mark[w] = true;
        }
        let mut found = None;
        for j in i + 1..n {
            // Smallest k in N(i) above j; a larger k only shrinks the choice of l.
            let pos = adj[i].partition_point(|&w| w <= j);
            let Some(&k) = adj[i].get(pos) else { break };
            let start = adj[j].partition_point(|&w| w <= k);
            if let Some(&l) = adj[j][start..].iter().find(|&&l| !mark[l]) {
                found = Some((i, j, k, l));
                break;
            }
        }
        for &w in &adj[i] {
            mark[w] = false;
        }
        if found.is_some() {
            return found;
        }
    }
    None
}

/// `Ok` when the graph is capped in vertex index order.
pub fn check_capped(g: &Graph) -> Result<()> {
    match capped_violation(g) {
        None => Ok(()),
        Some((i, j, k, l)) => Err(Error::NotCapped { i, j, k, l }),
    }
}

/// Least capped supergraph of `g`. A violation `(i, j, k, l)` only involves
/// the forward lists of `i` and `j > i`, so vertices are finalized from right
/// to left. For fixed `i`, `l` is forced iff some `k` in the forward list of
/// `i` lies strictly between `l` and its smallest backward neighbour above
/// `i`; scanning `l` upward resolves chains in one pass. `O(n^2 + m)`.
pub fn capped_closure(g: &Graph) -> Graph {
    let n = g.n();
    let adj = g.adjacency();
    let mut low = vec![usize::MAX; n];
    let mut mark = vec![false; n];
    let mut edges = Vec::with_capacity(g.m());
    let mut fwd = Vec::new();
    for i in (0..n).rev() {
        let orig = &adj[i][adj[i].partition_point(|&w| w <= i)..];
        for &w in orig {
            mark[w] = true;
        }
        fwd.clear();
        let mut best: Option<usize> = None;
        for l in i + 1..n {
            let forced = low[l] != usize::MAX && best.is_some_and(|k| low[l] < k);
            if mark[l] || forced {
                fwd.push(l);
                best = Some(l);
            }
        }
        for &w in orig {
            mark[w] = false;
        }
        for &l in &fwd {
            low[l] = i;
            edges.push((i, l));
        }
    }
    Graph::new(n, edges, true).expect("closure keeps edges in range")
}

/// Two-dimensional embedding of the bigraph between `[0, cut)` and `[cut, n)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CappedEmbedding {
    pub instance: BigraphInstance,
    /// Graph vertex of each left point.
    pub left: Vec<usize>,
    /// Graph vertex of each right point.
    pub right: Vec<usize>,
    /// Vertices with no neighbor across the cut.
    pub isolated: Vec<usize>,
}

/// Maps `l ↦ (2l, 2 min N(l) - 1)` and `r ↦ (2 max N(r) + 1, 2r)`, where the
/// neighborhoods are taken across the cut. `l ≺ r` exactly for the cut edges
/// when the cut bigraph is capped.
pub fn embed_capped_bigraph(g: &Graph, cut: usize) -> Result<CappedEmbedding> {
    let n = g.n();
    if cut > n {
        return Err(Error::Input(format!("cut {cut} out of range for {n} vertices")));
    }
    let adj = g.adjacency();
    let (mut lp, mut rp) = (Vec::new(), Vec::new());
    let (mut left, mut right, mut isolated) = (Vec::new(), Vec::new(), Vec::new());
    for (u, list) in adj.iter().enumerate() {
        if u < cut {
            match list.iter().find(|&&w| w >= cut) {
                Some(&lo) => {
                    lp.push(vec![int(2 * u as i64), int(2 * lo as i64 - 1)]);
                    left.push(u);
                }
                None => isolated.push(u),
            }
        } else {
            match list.iter().rev().find(|&&w| w < cut) {
                Some(&hi) => {
                    rp.push(vec![int(2 * hi as i64 + 1), int(2 * u as i64)]);
                    right.push(u);
                }
                None => isolated.push(u),
            }
        }
    }
    let instance = BigraphInstance::new(PointSet::new(2, lp)?, PointSet::new(2, rp)?)?;
    Ok(CappedEmbedding { instance, left, right, isolated })
}

/// Cover of a capped graph: cut bicliques first, then the two halves.
pub fn cover_capped(g: &Graph, checking: Checking) -> Result<BicliqueCover> {
    if checking == Checking::Strict {
        check_capped(g)?;
    }
    let adj = g.adjacency();
    let mut out = Vec::new();
    capped_rec(&adj, 0, g.n(), &mut out);
    Ok(BicliqueCover::new(out, CoverMode::Cover))
}

fn capped_rec(adj: &[Vec<usize>], lo: usize, hi: usize, out: &mut Vec<Biclique>) {
    if hi - lo < 2 {
        return;
    }
    let mid = lo + (hi - lo) / 2;
    let (mut lids, mut ldata) = (Vec::new(), Vec::new());
    for (u, list) in adj.iter().enumerate().take(mid).skip(lo) {
        let a = list.partition_point(|&w| w < mid);
        if let Some(&first) = list.get(a).filter(|&&w| w < hi) {
            lids.push(u);
            ldata.extend([2 * u as i64, 2 * first as i64 - 1]);
        }
    }
    let (mut rids, mut rdata) = (Vec::new(), Vec::new());
    for (u, list) in adj.iter().enumerate().take(hi).skip(mid) {
        let b = list.partition_point(|&w| w < mid);
        if b > 0 && list[b - 1] >= lo {
            rids.push(u);
            rdata.extend([2 * list[b - 1] as i64 + 1, 2 * u as i64]);
        }
    }
    let mut raw = Vec::new();
    bigraph_raw(&Rows::new(2, ldata), lids.len(), &Rows::new(2, rdata), rids.len(), &mut raw);
    for (l, r) in raw {
        let l = l.into_iter().map(|i| lids[i]).collect();
        let r = r.into_iter().map(|i| rids[i]).collect();
        out.push(Biclique::from_sorted(l, r));
    }
    capped_rec(adj, lo, mid, out);
    capped_rec(adj, mid, hi, out);
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dominance::bigraph_oracle;
    use crate::graph::validate_cover;
    use proptest::prelude::*;

    fn graph(n: usize, e: &[(usize, usize)]) -> Graph {
        Graph::new(n, e.iter().copied(), true).unwrap()
    }

    #[test]
    fn cycle_is_capped() {
        assert!(check_capped(&graph(4, &[(0, 1), (1, 2), (2, 3), (0, 3)])).is_ok());
        assert!(check_capped(&Graph::empty(5)).is_ok());
    }

    #[test]
    fn crossing_pair_violates() {
        let err = check_capped(&graph(4, &[(0, 2), (1, 3)])).unwrap_err();
        assert_eq!(err, Error::NotCapped { i: 0, j: 1, k: 2, l: 3 });
    }

    #[test]
    fn violation_is_lexicographically_least() {
        // (0,1,3,4) and (0,2,3,5) and (1,2,4,5)... the least must be reported.
        let g = graph(6, &[(0, 3), (1, 4), (2, 5), (1, 5)]);
        let brute = brute_violation(&g);
        assert_eq!(capped_violation(&g), brute);
    }

    fn brute_violation(g: &Graph) -> Option<(usize, usize, usize, usize)> {
        let n = g.n();
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    for l in k + 1..n {
                        if g.has_edge(i, k) && g.has_edge(j, l) && !g.has_edge(i, l) {
                            return Some((i, j, k, l));
                        }
                    }
                }
            }
        }
        None
    }

    #[test]
    fn embedding_example() {
        let g = graph(4, &[(0, 2), (0, 3), (1, 3)]);
        let e = embed_capped_bigraph(&g, 2).unwrap();
        let pts = |ps: &PointSet| -> Vec<Vec<i64>> {
            ps.points().iter().map(|p| p.iter().map(|v| v.to_integer()).collect()).collect()
        };
        assert_eq!(pts(e.instance.left()), vec![vec![0, 3], vec![2, 5]]);
        assert_eq!(pts(e.instance.right()), vec![vec![1, 4], vec![3, 6]]);
        let dom = bigraph_oracle(&e.instance);
        assert_eq!(dom.edges(), &[(0, 2), (0, 3), (1, 3)]);
    }

    #[test]
    fn embedding_without_cut_edges() {
        let g = graph(4, &[(0, 1), (2, 3)]);
        let e = embed_capped_bigraph(&g, 2).unwrap();
        assert_eq!(e.instance.n(), 0);
        assert_eq!(e.isolated, vec![0, 1, 2, 3]);
        assert!(embed_capped_bigraph(&g, 5).is_err());
    }

    #[test]
    fn covers_path_and_small_graph() {
        let path = graph(8, &(0..7).map(|i| (i, i + 1)).collect::<Vec<_>>());
        let c = cover_capped(&path, Checking::Strict).unwrap();
        assert!(validate_cover(&path, &c).unwrap().valid);
        let g = graph(4, &[(0, 2), (0, 3), (1, 3)]);
        let c = cover_capped(&g, Checking::Strict).unwrap();
        assert!(validate_cover(&g, &c).unwrap().valid);
    }

    #[test]
    fn strict_mode_rejects() {
        assert!(cover_capped(&graph(4, &[(0, 2), (1, 3)]), Checking::Strict).is_err());
    }

    #[test]
    fn closure_reaches_capped_fixpoint() {
        let g = graph(6, &[(0, 2), (1, 3), (2, 4), (3, 5), (1, 4)]);
        let c = capped_closure(&g);
        assert!(check_capped(&c).is_ok());
        for &(u, v) in g.edges() {
            assert!(c.has_edge(u, v));
        }
        assert_eq!(brute_violation(&c), None);
    }

    /// Adds the least violation's missing edge until none is left.
    fn naive_closure(g: &Graph) -> Graph {
        let mut g = g.clone();
        while let Some((i, _, _, l)) = brute_violation(&g) {
            let mut e = g.edges().to_vec();
            e.push((i, l));
            g = Graph::new(g.n(), e, true).unwrap();
        }
        g
    }

    fn small_graph() -> impl Strategy<Value = Graph> {
        (0usize..9).prop_flat_map(|n| {
            let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
            proptest::sample::subsequence(pairs.clone(), 0..=pairs.len())
                .prop_map(move |e| Graph::new(n, e, true).unwrap())
        })
    }

    proptest! {
        #[test]
        fn closure_is_least_fixpoint(g in small_graph()) {
            prop_assert_eq!(capped_closure(&g), naive_closure(&g));
        }

        #[test]
        fn violation_matches_brute_force(g in small_graph()) {
            prop_assert_eq!(capped_violation(&g), brute_violation(&g));
        }

        #[test]
        fn cover_of_closure_is_exact(g in small_graph()) {
            let c = capped_closure(&g);
            let cover = cover_capped(&c, Checking::Strict).unwrap();
            let r = validate_cover(&c, &cover).unwrap();
            prop_assert!(r.valid);
        }
    }
}
