//! Seeded instance generators.
//!
//! All randomness comes from SplitMix64 seeded with the user seed as its
//! initial state. A value uniform in `0..k` is `(next_u64 * k) >> 64` in
//! 128-bit arithmetic; a probability `p` draws `(next_u64 >> 11) * 2^-53 < p`.
//! Generators consume draws in the order documented per function, so the same
//! parameters and seed give the same instance in any language.

use rand_core::{Rng as _, SeedableRng};
use rand_xoshiro::SplitMix64;

use crate::capped::capped_closure;
use crate::compressed::HalfplaneConfig;
use crate::dominance::{BigraphInstance, PointSet};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::lshapes::{LShape, XShape};
use crate::rational::{int, Rational};
use crate::segments::{integer_conflict, Color, Segment};
use crate::segtree::BoxD;
use crate::semilinear::SemilinearInstance;

/// Deterministic generator used by every instance source.
#[derive(Debug, Clone)]
pub struct Rng(SplitMix64);

impl Rng {
    pub fn new(seed: u64) -> Self {
        Rng(SplitMix64::seed_from_u64(seed))
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0.next_u64()
    }

    /// Uniform in `0..k`; `k` must be positive.
    pub fn below(&mut self, k: u64) -> u64 {
        ((u128::from(self.next_u64()) * u128::from(k)) >> 64) as u64
    }

    /// Uniform in `lo..=hi`.
    pub fn range(&mut self, lo: i64, hi: i64) -> i64 {
        let span = (hi - lo) as u64 + 1;
        lo + self.below(span) as i64
    }

    pub fn chance(&mut self, p: f64) -> bool {
        ((self.next_u64() >> 11) as f64) * (1.0 / (1u64 << 53) as f64) < p
    }
}

/// Sidecar manifest line `gen <name> <params> <seed>`; `-` when unseeded.
pub fn manifest_line(name: &str, params: &[(&str, String)], seed: Option<u64>) -> String {
    let mut s = format!("gen {name}");
    for (k, v) in params {
        s.push_str(&format!(" {k}={v}"));
    }
    match seed {
        Some(seed) => s.push_str(&format!(" {seed}")),
        None => s.push_str(" -"),
    }
    s
}

fn check_terrain(pts: &[(i64, i64)]) -> Result<()> {
    if let Some(w) = pts.windows(2).find(|w| w[0].0 >= w[1].0) {
        return Err(Error::Input(format!("terrain x coordinates must increase strictly ({} then {})", w[0].0, w[1].0)));
    }
    Ok(())
}

/// `(b - a) × (c - a)`.
fn cross(a: (i64, i64), b: (i64, i64), c: (i64, i64)) -> i128 {
    i128::from(b.0 - a.0) * i128::from(c.1 - a.1) - i128::from(b.1 - a.1) * i128::from(c.0 - a.0)
}

/// Visibility graph of an x-monotone chain. For each vertex a sweep to the
/// right keeps the steepest slope seen so far; a later vertex is visible iff
/// it lies strictly above that ray. `O(n^2)`, exact.
pub fn terrain_visibility(pts: &[(i64, i64)]) -> Result<Graph> {
    check_terrain(pts)?;
    let mut edges = Vec::new();
    for i in 0..pts.len() {
        let mut best: Option<usize> = None;
        for k in i + 1..pts.len() {
            let visible = match best {
                None => true,
                Some(j) => cross(pts[i], pts[j], pts[k]) > 0,
            };
            if visible {
                edges.push((i, k));
            }
            if best.is_none_or(|j| cross(pts[i], pts[j], pts[k]) >= 0) {
                best = Some(k);
            }
        }
    }
    Ok(Graph::new(pts.len(), edges, false)?.with_ordered(true))
}

/// Same graph by testing every intermediate vertex of every pair. `O(n^3)`.
pub fn terrain_visibility_bruteforce(pts: &[(i64, i64)]) -> Result<Graph> {
    check_terrain(pts)?;
    let mut edges = Vec::new();
    for i in 0..pts.len() {
        for k in i + 1..pts.len() {
            // The open segment passes strictly above p_j iff p_j is strictly right of i -> k.
            if (i + 1..k).all(|j| cross(pts[i], pts[k], pts[j]) < 0) {
                edges.push((i, k));
            }
        }
    }
    Ok(Graph::new(pts.len(), edges, false)?.with_ordered(true))
}

/// Random terrain: x steps uniform in `1..=4`, heights uniform in
/// `0..=8n`. Draws per vertex: step, then height.
pub fn gen_terrain(n: usize, seed: u64) -> Result<(Vec<(i64, i64)>, Graph)> {
    let mut rng = Rng::new(seed);
    let hmax = 8 * n as i64;
    let mut x = 0;
    let pts: Vec<(i64, i64)> = (0..n)
        .map(|_| {
            x += rng.range(1, 4);
            (x, rng.range(0, hmax))
        })
        .collect();
    let g = terrain_visibility(&pts)?;
    Ok((pts, g))
}

/// `G(n, p)` over pairs `(u, v)`, `u < v`, in lexicographic order.
pub fn gen_random_graph(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = Rng::new(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.chance(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, edges, false).expect("generated pairs are in range")
}

/// `G(n, p)` closed under the capped property.
pub fn gen_capped_closure(n: usize, p: f64, seed: u64) -> Graph {
    capped_closure(&gen_random_graph(n, p, seed))
}

/// Random bipartite graph across `cut` (pairs `u < cut <= v`, lexicographic),
/// closed under the capped property. The closure only adds pairs `(i, l)`
/// with `i < j < k < l` for cross edges `ik`, `jl`, so it stays bipartite.
pub fn gen_capped_bigraph(n: usize, cut: usize, p: f64, seed: u64) -> Graph {
    let mut rng = Rng::new(seed);
    let mut edges = Vec::new();
    for u in 0..cut.min(n) {
        for v in cut..n {
            if rng.chance(p) {
                edges.push((u, v));
            }
        }
    }
    capped_closure(&Graph::new(n, edges, true).expect("generated pairs are in range"))
}

/// Intervals with left end uniform in `0..4n` and length uniform in
/// `0..=16`.
pub fn gen_intervals(n: usize, seed: u64) -> Vec<(Rational, Rational)> {
    gen_intervals_with(n, 16, seed)
}

/// Intervals with left end uniform in `0..4n` and length uniform in
/// `0..=max_len`. Draws per interval: left end, then length.
pub fn gen_intervals_with(n: usize, max_len: i64, seed: u64) -> Vec<(Rational, Rational)> {
    let mut rng = Rng::new(seed);
    let span = 4 * n.max(1) as i64;
    (0..n)
        .map(|_| {
            let lo = rng.range(0, span - 1);
            let len = rng.range(0, max_len);
            (int(lo), int(lo + len))
        })
        .collect()
}

/// Boxes in `d` dimensions. Per axis the left end is uniform in
/// `0..8⌈n^(1/d)⌉` and the length in `0..=8`.
pub fn gen_boxes(n: usize, d: usize, seed: u64) -> Vec<BoxD> {
    let mut rng = Rng::new(seed);
    let side = 8 * ((n.max(1) as f64).powf(1.0 / d.max(1) as f64).ceil() as i64).max(1);
    (0..n)
        .map(|_| {
            (0..d)
                .map(|_| {
                    let lo = rng.range(0, side - 1);
                    let len = rng.range(0, 8);
                    (int(lo), int(lo + len))
                })
                .collect()
        })
        .collect()
}

/// Red segments first, then blue. Each candidate has its first endpoint
/// uniform in the square `0..S`, `S = 16⌈√n⌉ + 32`, and an offset uniform in
/// `-16..=16` per axis; it is redrawn while it is degenerate, touches a
/// segment of its own color or overlaps one of the other color collinearly.
pub fn gen_segments(n_red: usize, n_blue: usize, seed: u64) -> Vec<Segment> {
    let mut rng = Rng::new(seed);
    let n = n_red + n_blue;
    let side = 16 * ((n as f64).sqrt().ceil() as i64) + 32;
    let mut raw: Vec<([i64; 4], Color)> = Vec::with_capacity(n);
    for idx in 0..n {
        let color = if idx < n_red { Color::Red } else { Color::Blue };
        loop {
            let x1 = rng.range(0, side - 1);
            let y1 = rng.range(0, side - 1);
            let x2 = x1 + rng.range(-16, 16);
            let y2 = y1 + rng.range(-16, 16);
            let s = [x1, y1, x2, y2];
            if (x1, y1) == (x2, y2) {
                continue;
            }
            if raw.iter().all(|(t, c)| !integer_conflict(s, *t, *c == color)) {
                raw.push((s, color));
                break;
            }
        }
    }
    raw.into_iter().map(|(s, c)| Segment::new(int(s[0]), int(s[1]), int(s[2]), int(s[3]), c)).collect()
}

/// Diagonal L-shapes with corners `(x, -x)` for strictly increasing `x`
/// (steps uniform in `1..=3`) and arm lengths uniform in `0..=16`.
/// Draws per shape: step, horizontal length, vertical length.
pub fn gen_lshapes_diag(n: usize, seed: u64) -> Vec<LShape> {
    let mut rng = Rng::new(seed);
    let mut x = 0;
    (0..n)
        .map(|_| {
            x += rng.range(1, 3);
            let h = rng.range(0, 16);
            let v = rng.range(0, 16);
            LShape::new(int(x), int(-x), int(h), int(v))
        })
        .collect()
}

/// x-grounded shapes with strictly increasing grounding (steps uniform in
/// `1..=3`), height uniform in `1..=32` and width in `0..=16`.
pub fn gen_lshapes_x(n: usize, seed: u64) -> Vec<XShape> {
    let mut rng = Rng::new(seed);
    let mut x = 0;
    (0..n)
        .map(|_| {
            x += rng.range(1, 3);
            let h = rng.range(1, 32);
            let w = rng.range(0, 16);
            XShape::new(int(x), int(h), int(w))
        })
        .collect()
}

/// Integer points uniform in `0..n` per coordinate (ties are likely).
pub fn gen_points(n: usize, d: usize, seed: u64) -> PointSet {
    let mut rng = Rng::new(seed);
    let rows: Vec<Vec<i64>> = (0..n).map(|_| (0..d).map(|_| rng.range(0, n.max(1) as i64 - 1)).collect()).collect();
    PointSet::from_ints(d, &rows).expect("rows have length d")
}

/// Left and right point sets drawn in that order, as in [`gen_points`] with
/// values in `0..nl + nr`.
pub fn gen_bipoints(nl: usize, nr: usize, d: usize, seed: u64) -> BigraphInstance {
    let mut rng = Rng::new(seed);
    let top = (nl + nr).max(1) as i64 - 1;
    let mut side = |k: usize| {
        let rows: Vec<Vec<i64>> = (0..k).map(|_| (0..d).map(|_| rng.range(0, top)).collect()).collect();
        PointSet::from_ints(d, &rows).expect("rows have length d")
    };
    let left = side(nl);
    let right = side(nr);
    BigraphInstance::new(left, right).expect("same dimension")
}

/// Random strict-DNF instance: coefficients of every `g` then every `h`
/// uniform in `-3..=3`, then points uniform in `0..n` per coordinate.
pub fn gen_semilinear(n: usize, d: usize, ell: usize, t: usize, seed: u64) -> Result<SemilinearInstance> {
    let mut rng = Rng::new(seed);
    let affine = |rng: &mut Rng| -> Vec<Rational> { (0..=d).map(|_| int(rng.range(-3, 3))).collect() };
    let g: Vec<Vec<Rational>> = (0..ell * t).map(|_| affine(&mut rng)).collect();
    let h: Vec<Vec<Rational>> = (0..ell * t).map(|_| affine(&mut rng)).collect();
    let pts: Vec<Vec<Rational>> =
        (0..n).map(|_| (0..d).map(|_| int(rng.range(0, n.max(1) as i64 - 1))).collect()).collect();
    SemilinearInstance::new(d, ell, t, g, h, pts)
}

/// Strict-overlap interval graph written as a semilinear instance.
pub fn gen_semilinear_demo(n: usize, seed: u64) -> SemilinearInstance {
    SemilinearInstance::interval_encoding(&gen_intervals(n, seed))
}

/// Grid configuration with many point-line incidences.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Erdos {
    pub k: usize,
    /// Points `(i, j)`, `1 ≤ i ≤ k`, `1 ≤ j ≤ 2k²`, and lines `y = m x + b`,
    /// `1 ≤ m ≤ k`, `1 ≤ b ≤ k²`, as lower-halfplane boundaries.
    pub config: HalfplaneConfig,
    /// Points `0..2k³`, lines after them.
    pub incidence: Graph,
}

/// Point index of `(i, j)`.
fn erdos_point(k: usize, i: usize, j: usize) -> usize {
    (i - 1) * 2 * k * k + (j - 1)
}

/// Every line meets exactly the `k` points `(x, m x + b)`, `1 ≤ x ≤ k`, since
/// `m x + b ≤ 2k²`.
pub fn gen_erdos(k: usize) -> Erdos {
    let rows = 2 * k * k;
    let mut points = Vec::with_capacity(k * rows);
    for i in 1..=k {
        for j in 1..=rows {
            points.push((int(i as i64), int(j as i64)));
        }
    }
    let mut lines = Vec::with_capacity(k * k * k);
    let np = points.len();
    let mut edges = Vec::new();
    for m in 1..=k {
        for b in 1..=k * k {
            let l = lines.len();
            lines.push((int(m as i64), int(b as i64)));
            for x in 1..=k {
                edges.push((erdos_point(k, x, m * x + b), np + l));
            }
        }
    }
    let incidence = Graph::new(np + lines.len(), edges, false).expect("incidences are in range");
    Erdos { k, config: HalfplaneConfig { points, lines }, incidence }
}

/// Realizability of [`gen_unit_disk_incidence`] output.
pub const UNIT_DISK_NOTE: &str = "point-halfplane containment graph; realizable as a unit disk graph by replacing each \
     slightly raised boundary line with a huge circle and rescaling (not materialized)";

/// Bipartite point-halfplane containment graph of the grid configuration.
pub fn gen_unit_disk_incidence(k: usize) -> (Graph, &'static str) {
    if k == 0 {
        return (Graph::empty(0), UNIT_DISK_NOTE);
    }
    let e = gen_erdos(k);
    let g = e.config.containment_graph().expect("small grid coordinates");
    (g, UNIT_DISK_NOTE)
}
