//! Covers of dnf-semilinear graphs.
//!
//! An instance embeds each vertex as a point `φ(u)` and lists, for each of
//! `ell` terms and `t` conjuncts, a pair of affine functionals `g_ij`, `h_ij`.
//! `uv` is an edge when, for `(u, v)` or `(v, u)`, some term has
//! `g_ij(φ(u)) + h_ij(φ(v)) < 0` for every conjunct. Each term is a
//! `t`-dimensional dominance relation `g_i(φ(u)) ≺ -h_i(φ(v))`, covered
//! across a recursive halving of the vertex set.

use crate::dominance::{bigraph_raw, Rows};
use crate::error::{Error, Result};
use crate::graph::{oracle_edges, Biclique, BicliqueCover, CoverMode, Graph};
use crate::rational::{dense_ranks, eval_affine, Rational, Wide};

/// Affine functional `c[0] + c[1] x_1 + ... + c[d] x_d`.
pub type Affine = Vec<Rational>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SemilinearInstance {
    d: usize,
    ell: usize,
    t: usize,
    points: Vec<Vec<Rational>>,
    /// Row-major `[ell][t]`.
    g: Vec<Affine>,
    h: Vec<Affine>,
}

impl SemilinearInstance {
    pub fn new(
        d: usize,
        ell: usize,
        t: usize,
        g: Vec<Affine>,
        h: Vec<Affine>,
        points: Vec<Vec<Rational>>,
    ) -> Result<Self> {
        let terms = ell * t;
        if g.len() != terms || h.len() != terms {
            return Err(Error::Input(format!(
                "expected {terms} g and h functionals, found {} and {}",
                g.len(),
                h.len()
            )));
        }
        if let Some(f) = g.iter().chain(&h).find(|f| f.len() != d + 1) {
            return Err(Error::DimensionMismatch { expected: d + 1, found: f.len() });
        }
        if let Some(p) = points.iter().find(|p| p.len() != d) {
            return Err(Error::DimensionMismatch { expected: d, found: p.len() });
        }
        Ok(SemilinearInstance { d, ell, t, points, g, h })
    }

    /// Intervals `[lo, hi]` as points `(lo, hi)` with the single term
    /// `lo_u - hi_v < 0 ∧ lo_v - hi_u < 0` (strict overlap).
    pub fn interval_encoding(intervals: &[(Rational, Rational)]) -> Self {
        let r = Rational::from_integer;
        let g = vec![vec![r(0), r(1), r(0)], vec![r(0), r(0), r(-1)]];
        let h = vec![vec![r(0), r(0), r(-1)], vec![r(0), r(1), r(0)]];
        let points = intervals.iter().map(|(lo, hi)| vec![*lo, *hi]).collect();
        SemilinearInstance { d: 2, ell: 1, t: 2, points, g, h }
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn ell(&self) -> usize {
        self.ell
    }

    pub fn t(&self) -> usize {
        self.t
    }

    pub fn n(&self) -> usize {
        self.points.len()
    }

    pub fn points(&self) -> &[Vec<Rational>] {
        &self.points
    }

    pub fn g(&self, i: usize, j: usize) -> &Affine {
        &self.g[i * self.t + j]
    }

    pub fn h(&self, i: usize, j: usize) -> &Affine {
        &self.h[i * self.t + j]
    }

    /// The DNF for the ordered pair `(u, v)`.
    fn holds(&self, u: usize, v: usize) -> Result<bool> {
        for i in 0..self.ell {
            let mut all = true;
            for j in 0..self.t {
                let f = eval_affine(self.g(i, j), &self.points[u])? + eval_affine(self.h(i, j), &self.points[v])?;
                if f >= Wide::from_integer(0) {
                    all = false;
                    break;
                }
            }
            if all {
                return Ok(true);
            }
        }
        Ok(false)
    }
}

/// Exact `O(n^2 ell t d)` evaluation of the symmetric edge relation.
pub fn semilinear_oracle(inst: &SemilinearInstance) -> Result<Graph> {
    let mut failure = None;
    let g = oracle_edges(inst.n(), |u, v| {
        let res = inst.holds(u, v).and_then(|a| Ok(a || inst.holds(v, u)?));
        res.unwrap_or_else(|e| {
            failure.get_or_insert(e);
            false
        })
    });
    match failure {
        Some(e) => Err(e),
        None => Ok(g),
    }
}

/// Cover of the semilinear graph. Bicliques are ordered by term, then
/// orientation, then recursion preorder. Terms and orientations may overlap,
/// so this is a cover rather than a partition.
pub fn cover_semilinear(inst: &SemilinearInstance) -> Result<BicliqueCover> {
    let n = inst.n();
    let t = inst.t;
    let mut out = Vec::new();
    for i in 0..inst.ell {
        // Column j compares g_ij(φ(u)) against -h_ij(φ(v)); rank both jointly.
        let mut gr = vec![0u32; n * t];
        let mut hr = vec![0u32; n * t];
        for j in 0..t {
            let mut keys: Vec<Wide> = Vec::with_capacity(2 * n);
            for p in &inst.points {
                keys.push(eval_affine(inst.g(i, j), p)?);
            }
            for p in &inst.points {
                keys.push(-eval_affine(inst.h(i, j), p)?);
            }
            let ranks = dense_ranks(&keys);
            for u in 0..n {
                gr[u * t + j] = ranks[u];
                hr[u * t + j] = ranks[n + u];
            }
        }
        for flip in [false, true] {
            halving(&gr, &hr, t, 0, n, flip, &mut out);
        }
    }
    Ok(BicliqueCover::new(out, CoverMode::Cover))
}

/// Covers the cut between `[lo, mid)` and `[mid, hi)` in one orientation,
/// then recurses on both halves.
fn halving(gr: &[u32], hr: &[u32], t: usize, lo: usize, hi: usize, flip: bool, out: &mut Vec<Biclique>) {
    if hi - lo < 2 {
        return;
    }
    let mid = lo + (hi - lo) / 2;
    // g-side vertices come from `a`, (-h)-side from `b`.
    let (a, b) = if flip { (mid..hi, lo..mid) } else { (lo..mid, mid..hi) };
    let take = |src: &[u32], range: std::ops::Range<usize>| -> Vec<u32> { src[range.start * t..range.end * t].to_vec() };
    let left = Rows::new(t, take(gr, a.clone()));
    let right = Rows::new(t, take(hr, b.clone()));
    let mut raw = Vec::new();
    bigraph_raw(&left, a.len(), &right, b.len(), &mut raw);
    for (l, r) in raw {
        let l: Vec<usize> = l.into_iter().map(|x| x + a.start).collect();
        let r: Vec<usize> = r.into_iter().map(|x| x + b.start).collect();
        out.push(Biclique::from_sorted(l, r));
    }
    halving(gr, hr, t, lo, mid, flip, out);
    halving(gr, hr, t, mid, hi, flip, out);
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use crate::testutil::{brute, covered};
    use crate::graph::validate_cover;
    use crate::rational::int;

    fn intervals(v: &[(i64, i64)]) -> Vec<(Rational, Rational)> {
        v.iter().map(|&(a, b)| (int(a), int(b))).collect()
    }

    #[test]
    fn interval_encoding_example() {
        let inst = SemilinearInstance::interval_encoding(&intervals(&[(1, 5), (2, 3), (4, 6)]));
        let g = semilinear_oracle(&inst).unwrap();
        assert_eq!(g.edges(), &[(0, 1), (0, 2)]);
        let c = cover_semilinear(&inst).unwrap();
        assert!(validate_cover(&g, &c).unwrap().valid);
        assert_eq!(c.covered_edges(), vec![(0, 1), (0, 2)]);
    }

    #[test]
    fn positive_constant_is_never_an_edge() {
        let inst = SemilinearInstance::new(
            1,
            1,
            1,
            vec![vec![int(1), int(0)]],
            vec![vec![int(0), int(0)]],
            vec![vec![int(0)], vec![int(1)], vec![int(2)]],
        )
        .unwrap();
        assert_eq!(semilinear_oracle(&inst).unwrap().m(), 0);
        assert!(cover_semilinear(&inst).unwrap().is_empty());
    }

    #[test]
    fn one_dimensional_order() {
        // f = x - y
        let inst = SemilinearInstance::new(
            1,
            1,
            1,
            vec![vec![int(0), int(1)]],
            vec![vec![int(0), int(-1)]],
            vec![vec![int(0)], vec![int(1)], vec![int(2)]],
        )
        .unwrap();
        let g = semilinear_oracle(&inst).unwrap();
        assert_eq!(g.edges(), &[(0, 1), (0, 2), (1, 2)]);
        assert!(validate_cover(&g, &cover_semilinear(&inst).unwrap()).unwrap().valid);
    }

    #[test]
    fn reflexive_terms_never_make_loops() {
        // g = -1, h = 0: every ordered pair, including (u, u), satisfies it.
        let inst = SemilinearInstance::new(
            0,
            1,
            1,
            vec![vec![int(-1)]],
            vec![vec![int(0)]],
            vec![vec![], vec![], vec![], vec![]],
        )
        .unwrap();
        let g = semilinear_oracle(&inst).unwrap();
        assert_eq!(g.m(), 6);
        let c = cover_semilinear(&inst).unwrap();
        assert!(validate_cover(&g, &c).unwrap().valid);
    }

    #[test]
    fn shape_errors() {
        assert!(SemilinearInstance::new(1, 1, 1, vec![], vec![], vec![]).is_err());
        assert!(SemilinearInstance::new(1, 1, 1, vec![vec![int(0)]], vec![vec![int(0), int(0)]], vec![]).is_err());
    }

    fn affine(f: &[Rational], x: &[Rational]) -> Rational {
        f[0] + f[1..].iter().zip(x).map(|(a, b)| a * b).sum::<Rational>()
    }

    fn holds(inst: &SemilinearInstance, u: usize, v: usize) -> bool {
        let p = inst.points();
        (0..inst.ell()).any(|i| {
            (0..inst.t()).all(|j| affine(inst.g(i, j), &p[u]) + affine(inst.h(i, j), &p[v]) < int(0))
        })
    }

    fn instance() -> impl Strategy<Value = SemilinearInstance> {
        (1usize..4, 1usize..4, 1usize..4, 0usize..20).prop_flat_map(|(d, ell, t, n)| {
            let f = prop::collection::vec(prop::collection::vec(-2i64..3, d + 1), ell * t);
            (f.clone(), f, prop::collection::vec(prop::collection::vec(-4i64..5, d), n)).prop_map(move |(g, h, p)| {
                let conv = |v: Vec<Vec<i64>>| -> Vec<Vec<Rational>> {
                    v.into_iter().map(|r| r.into_iter().map(int).collect()).collect()
                };
                SemilinearInstance::new(d, ell, t, conv(g), conv(h), conv(p)).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn cover_matches_direct_evaluation(inst in instance()) {
            let c = cover_semilinear(&inst).unwrap();
            let expect = brute(inst.n(), |u, v| holds(&inst, u, v) || holds(&inst, v, u));
            prop_assert_eq!(covered(&c), expect.clone());
            prop_assert_eq!(semilinear_oracle(&inst).unwrap().edges().to_vec(), expect);
        }
    }
}
