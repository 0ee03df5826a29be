//! Bichromatic intersection graphs of segments.
//!
//! Red segments are pairwise disjoint, and so are blue segments. The x
//! projections go into an augmented segment tree. At a node `v`, the long
//! segments of one color cross the slab without meeting each other, so they
//! are totally ordered from bottom to top. A segment `s` of the other color,
//! clipped to the slab as the part from `p` (at `x = a`) to `q` (at `x = c`),
//! meets the `i`-th long segment exactly when
//!
//! * `low(p) ≤ i < high(q)`, or
//! * `low(q) ≤ i < high(p)`,
//!
//! where `low(z)` counts long segments strictly below `z` and `high(z)` those
//! below or through `z`. Each condition is a two-dimensional dominance
//! relation between query points and long points. Reds are tested as queries
//! against long blues, whether they are short or long themselves, and blues
//! that are short only are tested against long reds.
//!
//! Coordinates are scaled to integers (x and y separately, by the least
//! common multiple of their denominators) and all predicates are evaluated
//! exactly in 128-bit arithmetic.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_integer::Integer;

use crate::dominance::{bigraph_raw, Rows};
use crate::error::{Error, Result};
use crate::graph::{Biclique, BicliqueCover, Checking, CoverMode, Graph};
use crate::rational::Rational;
use crate::segtree::{sorted_difference, AugSegTree, Interval};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Color {
    Red,
    Blue,
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Color::Red => "red",
            Color::Blue => "blue",
        })
    }
}

impl FromStr for Color {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "red" | "r" => Ok(Color::Red),
            "blue" | "b" => Ok(Color::Blue),
            _ => Err(format!("unknown color `{s}` (expected red or blue)")),
        }
    }
}

/// Closed segment between `(x1, y1)` and `(x2, y2)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Segment {
    pub x1: Rational,
    pub y1: Rational,
    pub x2: Rational,
    pub y2: Rational,
    pub color: Color,
}

impl Segment {
    pub fn new(x1: Rational, y1: Rational, x2: Rational, y2: Rational, color: Color) -> Self {
        Segment { x1, y1, x2, y2, color }
    }
}

/// Largest magnitude allowed for a scaled coordinate.
const COORD_LIMIT: i128 = 1 << 31;

/// Integer segment with `(x1, y1) ≤ (x2, y2)` lexicographically.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Seg {
    x1: i64,
    y1: i64,
    x2: i64,
    y2: i64,
}

impl Seg {
    fn vertical(&self) -> bool {
        self.x1 == self.x2
    }

    /// `y` at `x` for a non-vertical segment.
    fn y_at(&self, x: i64) -> Frac {
        let dx = i128::from(self.x2 - self.x1);
        let num = i128::from(self.y1) * dx + i128::from(self.y2 - self.y1) * i128::from(x - self.x1);
        Frac { num, den: dx }
    }

    /// Lowest and highest point at `x` (inside the x range).
    fn extent(&self, x: i64) -> (Frac, Frac) {
        if self.vertical() {
            (Frac::int(self.y1), Frac::int(self.y2))
        } else {
            let y = self.y_at(x);
            (y, y)
        }
    }
}

/// Fraction with positive denominator, compared exactly.
#[derive(Debug, Clone, Copy)]
struct Frac {
    num: i128,
    den: i128,
}

impl Frac {
    fn int(v: i64) -> Self {
        Frac { num: i128::from(v), den: 1 }
    }
}

impl PartialEq for Frac {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for Frac {}

impl PartialOrd for Frac {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Frac {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.num * other.den).cmp(&(other.num * self.den))
    }
}

fn lcm_of(values: impl Iterator<Item = i64>) -> Result<i128> {
    let mut l: i128 = 1;
    for d in values {
        let d = i128::from(d);
        l = (l / l.gcd(&d)).checked_mul(d).filter(|v| *v <= COORD_LIMIT).ok_or_else(|| {
            Error::Overflow("segment coordinates need more than 31 bits after scaling".into())
        })?;
    }
    Ok(l)
}

/// Scales x and y coordinates to integers of at most 31 bits.
fn scale(segs: &[Segment]) -> Result<Vec<Seg>> {
    let lx = lcm_of(segs.iter().flat_map(|s| [*s.x1.denom(), *s.x2.denom()]))?;
    let ly = lcm_of(segs.iter().flat_map(|s| [*s.y1.denom(), *s.y2.denom()]))?;
    let conv = |r: &Rational, l: i128| -> Result<i64> {
        let v = i128::from(*r.numer()) * (l / i128::from(*r.denom()));
        if v.abs() > COORD_LIMIT {
            return Err(Error::Overflow("segment coordinates need more than 31 bits after scaling".into()));
        }
        Ok(v as i64)
    };
    segs.iter()
        .map(|s| {
            let a = (conv(&s.x1, lx)?, conv(&s.y1, ly)?);
            let b = (conv(&s.x2, lx)?, conv(&s.y2, ly)?);
            let (p, q) = if a <= b { (a, b) } else { (b, a) };
            Ok(Seg { x1: p.0, y1: p.1, x2: q.0, y2: q.1 })
        })
        .collect()
}

fn orient(a: (i64, i64), b: (i64, i64), c: (i64, i64)) -> i32 {
    let v = i128::from(b.0 - a.0) * i128::from(c.1 - a.1) - i128::from(b.1 - a.1) * i128::from(c.0 - a.0);
    v.signum() as i32
}

/// Closed segment intersection, including collinear and degenerate cases.
fn intersects(s: &Seg, t: &Seg) -> bool {
    let (p1, q1, p2, q2) = ((s.x1, s.y1), (s.x2, s.y2), (t.x1, t.y1), (t.x2, t.y2));
    let (o1, o2) = (orient(p1, q1, p2), orient(p1, q1, q2));
    let (o3, o4) = (orient(p2, q2, p1), orient(p2, q2, q1));
    if o1 == 0 && o2 == 0 && o3 == 0 && o4 == 0 {
        let overlap = |a0: i64, a1: i64, b0: i64, b1: i64| a0.min(a1) <= b0.max(b1) && b0.min(b1) <= a0.max(a1);
        return overlap(s.x1, s.x2, t.x1, t.x2) && overlap(s.y1, s.y2, t.y1, t.y2);
    }
    o1 * o2 <= 0 && o3 * o4 <= 0
}

/// Collinear segments sharing more than one point.
fn collinear_overlap(s: &Seg, t: &Seg) -> bool {
    let (p1, q1, p2, q2) = ((s.x1, s.y1), (s.x2, s.y2), (t.x1, t.y1), (t.x2, t.y2));
    if p1 == q1 || p2 == q2 {
        return false;
    }
    if orient(p1, q1, p2) != 0 || orient(p1, q1, q2) != 0 {
        return false;
    }
    // Endpoints are sorted lexicographically, so compare along that order.
    p1.max(p2) < q1.min(q2)
}

/// Whether two integer segments `[x1, y1, x2, y2]` may not coexist in one
/// instance: same color and touching, or different colors and overlapping
/// collinearly.
pub(crate) fn integer_conflict(a: [i64; 4], b: [i64; 4], same_color: bool) -> bool {
    let norm = |s: [i64; 4]| {
        let (p, q) = ((s[0], s[1]), (s[2], s[3]));
        let (p, q) = if p <= q { (p, q) } else { (q, p) };
        Seg { x1: p.0, y1: p.1, x2: q.0, y2: q.1 }
    };
    let (s, t) = (norm(a), norm(b));
    if same_color {
        intersects(&s, &t)
    } else {
        collinear_overlap(&s, &t)
    }
}

/// Checks that same-colored segments are disjoint and that no red and blue
/// segment overlap collinearly. `O(n^2)`.
pub fn validate_segments(segs: &[Segment]) -> Result<()> {
    let s = scale(segs)?;
    for i in 0..s.len() {
        for j in i + 1..s.len() {
            if segs[i].color == segs[j].color {
                if intersects(&s[i], &s[j]) {
                    return Err(Error::SameColorIntersection(i, j));
                }
            } else if collinear_overlap(&s[i], &s[j]) {
                let (red, blue) = if segs[i].color == Color::Red { (i, j) } else { (j, i) };
                return Err(Error::CollinearOverlap { red, blue });
            }
        }
    }
    Ok(())
}

/// Brute-force red-blue intersection graph.
pub fn segment_oracle(segs: &[Segment]) -> Result<Graph> {
    let s = scale(segs)?;
    let mut edges = Vec::new();
    for i in 0..s.len() {
        for j in i + 1..s.len() {
            if segs[i].color != segs[j].color && intersects(&s[i], &s[j]) {
                edges.push((i, j));
            }
        }
    }
    Graph::new(s.len(), edges, false)
}

/// Cover of the bipartite red-blue intersection graph. Biclique left sides
/// hold red segments, right sides blue ones.
pub fn cover_bichromatic_segments(segs: &[Segment], checking: Checking) -> Result<BicliqueCover> {
    if checking == Checking::Strict {
        validate_segments(segs)?;
    }
    let s = scale(segs)?;
    let items: Vec<Interval<i64>> = s.iter().enumerate().map(|(i, g)| Interval { lo: g.x1, hi: g.x2, owner: i }).collect();
    let tree = AugSegTree::build(&items)?;
    let colored = |list: &[usize], c: Color| -> Vec<usize> {
        let mut v: Vec<usize> = list.iter().copied().filter(|&i| segs[i].color == c).collect();
        v.sort_unstable();
        v
    };
    let mut out = Vec::new();
    for node in tree.nodes() {
        if node.long.is_empty() {
            continue;
        }
        let (a, b) = node.leaves;
        let (Some(&x_lo), Some(&x_hi)) = (tree.boundary(a), tree.boundary(b)) else { continue };
        let long_red = colored(&node.long, Color::Red);
        let long_blue = colored(&node.long, Color::Blue);
        let short_red = colored(&node.short, Color::Red);
        let short_blue = colored(&node.short, Color::Blue);
        if !long_blue.is_empty() {
            let mut queries = sorted_difference(&short_red, &long_red);
            queries.extend(&long_red);
            queries.sort_unstable();
            slab_pairs(&s, &queries, &long_blue, x_lo, x_hi, false, &mut out);
        }
        if !long_red.is_empty() {
            let queries = sorted_difference(&short_blue, &long_blue);
            slab_pairs(&s, &queries, &long_red, x_lo, x_hi, true, &mut out);
        }
    }
    Ok(BicliqueCover::new(out, CoverMode::Cover))
}

/// Emits bicliques for the pairs (query, long) that meet inside the slab
/// `[x_lo, x_hi]`. With `queries_right`, queries go on the right side.
fn slab_pairs(
    s: &[Seg],
    queries: &[usize],
    longs: &[usize],
    x_lo: i64,
    x_hi: i64,
    queries_right: bool,
    out: &mut Vec<Biclique>,
) {
    if queries.is_empty() {
        return;
    }
    let mut longs = longs.to_vec();
    longs.sort_by(|&i, &j| s[i].extent(x_lo).cmp(&s[j].extent(x_lo)).then(s[i].extent(x_hi).cmp(&s[j].extent(x_hi))));
    let below = |x: i64, y: Frac| longs.partition_point(|&i| s[i].extent(x).1 < y);
    let below_or_through = |x: i64, y: Frac| longs.partition_point(|&i| s[i].extent(x).0 <= y);

    let mut qa = Vec::new();
    let mut qb = Vec::new();
    let (mut ida, mut idb) = (Vec::new(), Vec::new());
    for &id in queries {
        let g = &s[id];
        let (a, c) = (g.x1.max(x_lo), g.x2.min(x_hi));
        let (p, q) = if g.vertical() {
            ((a, Frac::int(g.y1)), (c, Frac::int(g.y2)))
        } else {
            ((a, g.y_at(a)), (c, g.y_at(c)))
        };
        let (lp, hp) = (below(p.0, p.1) as i64, below_or_through(p.0, p.1) as i64);
        let (lq, hq) = (below(q.0, q.1) as i64, below_or_through(q.0, q.1) as i64);
        qa.extend([2 * lp - 1, -2 * hq]);
        ida.push(id);
        if a < c {
            qb.extend([2 * lq - 1, -2 * hp]);
            idb.push(id);
        }
    }
    let ldata: Vec<i64> = (0..longs.len() as i64).flat_map(|i| [2 * i, -2 * i]).collect();
    let lrows = Rows::new(2, ldata);
    for (data, ids) in [(qa, ida), (qb, idb)] {
        let mut raw = Vec::new();
        bigraph_raw(&Rows::new(2, data), ids.len(), &lrows, longs.len(), &mut raw);
        for (ql, ll) in raw {
            let q: Vec<usize> = ql.into_iter().map(|i| ids[i]).collect();
            let l: Vec<usize> = ll.into_iter().map(|i| longs[i]).collect();
            let bc = if queries_right { Biclique::from_unsorted(l, q) } else { Biclique::from_unsorted(q, l) };
            out.extend(bc);
        }
    }
}
