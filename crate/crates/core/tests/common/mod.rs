//! Brute-force oracles written independently of the library code paths.

#![allow(dead_code)]

use std::cmp::Ordering;
use std::collections::{HashMap, HashSet, VecDeque};

use bicover::compressed::UNREACHABLE;
use bicover::lshapes::{LShape, XShape};
use bicover::segments::{Color, Segment};
use bicover::semilinear::SemilinearInstance;
use bicover::{BicliqueCover, Graph, Rational};

pub fn graph(n: usize, mut pred: impl FnMut(usize, usize) -> bool) -> Graph {
    let mut e = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if pred(u, v) {
                e.push((u, v));
            }
        }
    }
    Graph::new(n, e, false).unwrap()
}

pub fn strictly_below(a: &[Rational], b: &[Rational]) -> bool {
    a.iter().zip(b).all(|(x, y)| x < y)
}

pub fn overlap(a: &(Rational, Rational), b: &(Rational, Rational)) -> bool {
    a.0.max(b.0) <= a.1.min(b.1)
}

fn affine(f: &[Rational], x: &[Rational]) -> Rational {
    f[0] + f[1..].iter().zip(x).map(|(a, b)| a * b).sum::<Rational>()
}

pub fn semilinear_holds(inst: &SemilinearInstance, u: usize, v: usize) -> bool {
    let p = inst.points();
    let zero = Rational::from_integer(0);
    (0..inst.ell()).any(|i| (0..inst.t()).all(|j| affine(inst.g(i, j), &p[u]) + affine(inst.h(i, j), &p[v]) < zero))
}

type Arm = (Rational, Rational, Rational, Rational);

fn arms_meet(a: &[Arm; 2], b: &[Arm; 2]) -> bool {
    a.iter().any(|s| b.iter().any(|t| s.0.max(t.0) <= s.1.min(t.1) && s.2.max(t.2) <= s.3.min(t.3)))
}

pub fn lshapes_meet(a: &LShape, b: &LShape) -> bool {
    let arms = |s: &LShape| -> [Arm; 2] {
        [(s.cx, s.cx + s.hlen, s.cy, s.cy), (s.cx, s.cx, s.cy, s.cy + s.vlen)]
    };
    arms_meet(&arms(a), &arms(b))
}

pub fn xshapes_meet(a: &XShape, b: &XShape) -> bool {
    let zero = Rational::from_integer(0);
    let arms = |s: &XShape| -> [Arm; 2] { [(s.x, s.x, zero, s.h), (s.x, s.x + s.w, s.h, s.h)] };
    arms_meet(&arms(a), &arms(b))
}

type P = (Rational, Rational);

fn orient(a: P, b: P, c: P) -> Ordering {
    ((b.0 - a.0) * (c.1 - a.1) - (b.1 - a.1) * (c.0 - a.0)).cmp(&Rational::from_integer(0))
}

fn in_box(a: P, b: P, c: P) -> bool {
    a.0.min(b.0) <= c.0 && c.0 <= a.0.max(b.0) && a.1.min(b.1) <= c.1 && c.1 <= a.1.max(b.1)
}

/// Closed segments share a point.
pub fn segments_touch(s: &Segment, t: &Segment) -> bool {
    let (a, b, c, d) = ((s.x1, s.y1), (s.x2, s.y2), (t.x1, t.y1), (t.x2, t.y2));
    let (o1, o2, o3, o4) = (orient(a, b, c), orient(a, b, d), orient(c, d, a), orient(c, d, b));
    let eq = Ordering::Equal;
    if o1 != eq && o2 != eq && o3 != eq && o4 != eq {
        return o1 != o2 && o3 != o4;
    }
    (o1 == eq && in_box(a, b, c)) || (o2 == eq && in_box(a, b, d)) || (o3 == eq && in_box(c, d, a)) || (o4 == eq && in_box(c, d, b))
}

pub fn bichromatic(s: &[Segment]) -> Graph {
    graph(s.len(), |u, v| s[u].color != s[v].color && segments_touch(&s[u], &s[v]))
}

pub fn is_red(s: &Segment) -> bool {
    s.color == Color::Red
}

/// Queue BFS on adjacency lists.
pub fn bfs(g: &Graph, root: usize) -> Vec<u32> {
    let adj = g.adjacency();
    let mut d = vec![UNREACHABLE; g.n()];
    let mut q = VecDeque::from([root]);
    d[root] = 0;
    while let Some(u) = q.pop_front() {
        for &w in &adj[u] {
            if d[w] == UNREACHABLE {
                d[w] = d[u] + 1;
                q.push_back(w);
            }
        }
    }
    d
}

/// `⌈log2 n⌉` for `n ≥ 1`.
pub fn ceil_log2(n: usize) -> usize {
    n.max(1).next_power_of_two().trailing_zeros() as usize
}

/// Whether two vertices share two common neighbours, by counting pairs of
/// neighbours per vertex.
pub fn has_k22(g: &Graph) -> bool {
    let adj = g.adjacency();
    let mut seen = HashSet::new();
    for list in &adj {
        for (i, &a) in list.iter().enumerate() {
            for &b in &list[i + 1..] {
                if !seen.insert((a, b)) {
                    return true;
                }
            }
        }
    }
    false
}

/// Test-local terrain visibility: `k` sees `i` when every vertex strictly
/// between them lies strictly below the chord.
pub fn terrain(pts: &[(i64, i64)]) -> Graph {
    graph(pts.len(), |i, k| {
        let ((xi, yi), (xk, yk)) = (pts[i], pts[k]);
        pts[i + 1..k].iter().all(|&(xj, yj)| {
            i128::from(yj - yi) * i128::from(xk - xi) < i128::from(yk - yi) * i128::from(xj - xi)
        })
    })
}

#[derive(Debug, Default, Clone, Copy, PartialEq, Eq)]
pub struct Defects {
    pub uncovered: usize,
    pub non_edges: usize,
    pub repeated: usize,
}

impl Defects {
    pub fn total(&self) -> usize {
        self.uncovered + self.non_edges + self.repeated
    }
}

/// Compares the pairs a cover generates with the edges of `g`. Repeats are
/// only counted when `partition` is set.
pub fn defects(g: &Graph, c: &BicliqueCover, partition: bool) -> Defects {
    let mut count: HashMap<(usize, usize), usize> = HashMap::new();
    for b in c.bicliques() {
        for &u in b.left() {
            for &v in b.right() {
                *count.entry((u.min(v), u.max(v))).or_default() += 1;
            }
        }
    }
    let edges: HashSet<(usize, usize)> = g.edges().iter().map(|&(u, v)| (u.min(v), u.max(v))).collect();
    let mut d = Defects {
        uncovered: edges.iter().filter(|e| !count.contains_key(e)).count(),
        ..Defects::default()
    };
    for (e, &k) in &count {
        if !edges.contains(e) {
            d.non_edges += 1;
        }
        if partition && k > 1 {
            d.repeated += 1;
        }
    }
    d
}

/// Closed-interval overlap edge count by a sorted sweep.
pub fn interval_edge_count(iv: &[(Rational, Rational)]) -> usize {
    let mut v = iv.to_vec();
    v.sort();
    let mut total = 0;
    for (i, a) in v.iter().enumerate() {
        total += v[i + 1..].partition_point(|b| b.0 <= a.1);
    }
    total
}
