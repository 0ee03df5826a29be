//! Grounded L-shapes.
//!
//! A diagonal [`LShape`] has its corner on a common line of negative slope,
//! a vertical segment going up from the corner and a horizontal segment going
//! right. An [`XShape`] rises from the x-axis at `x` to height `h`, then runs
//! right for `w` (a Γ shape). In both families a shape can only meet a shape
//! to its right through its horizontal segment and the other's vertical one,
//! which is a two-dimensional dominance condition. Both covers split the
//! shapes by grounding order and recurse.

use num_traits::{CheckedDiv, CheckedSub};

use crate::dominance::{bigraph_raw, ranked_pair};
use crate::error::{Error, Result};
use crate::graph::{oracle_edges, Biclique, BicliqueCover, CoverMode, Graph};
use crate::rational::{widen, Rational, Wide};

/// Corner `(cx, cy)`, vertical segment up to `cy + vlen`, horizontal segment
/// right to `cx + hlen`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct LShape {
    pub cx: Rational,
    pub cy: Rational,
    pub hlen: Rational,
    pub vlen: Rational,
}

/// Vertical segment from `(x, 0)` to `(x, h)`, horizontal from `(x, h)` to
/// `(x + w, h)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct XShape {
    pub x: Rational,
    pub h: Rational,
    pub w: Rational,
}

/// Closed axis-parallel box `[x0, x1] × [y0, y1]`.
type Seg = (Rational, Rational, Rational, Rational);

fn boxes_meet(a: &Seg, b: &Seg) -> bool {
    a.0 <= b.1 && b.0 <= a.1 && a.2 <= b.3 && b.2 <= a.3
}

fn shapes_meet(a: &[Seg; 2], b: &[Seg; 2]) -> bool {
    a.iter().any(|s| b.iter().any(|t| boxes_meet(s, t)))
}

impl LShape {
    pub fn new(cx: Rational, cy: Rational, hlen: Rational, vlen: Rational) -> Self {
        LShape { cx, cy, hlen, vlen }
    }

    fn segments(&self) -> [Seg; 2] {
        [
            (self.cx, self.cx + self.hlen, self.cy, self.cy),
            (self.cx, self.cx, self.cy, self.cy + self.vlen),
        ]
    }
}

impl XShape {
    pub fn new(x: Rational, h: Rational, w: Rational) -> Self {
        XShape { x, h, w }
    }

    fn segments(&self) -> [Seg; 2] {
        let zero = Rational::from_integer(0);
        [(self.x, self.x, zero, self.h), (self.x, self.x + self.w, self.h, self.h)]
    }
}

/// Exact pairwise segment-intersection graph of diagonal L-shapes.
pub fn lshape_oracle(shapes: &[LShape]) -> Graph {
    let segs: Vec<_> = shapes.iter().map(LShape::segments).collect();
    oracle_edges(shapes.len(), |u, v| shapes_meet(&segs[u], &segs[v]))
}

/// Exact pairwise segment-intersection graph of x-grounded shapes.
pub fn xshape_oracle(shapes: &[XShape]) -> Graph {
    let segs: Vec<_> = shapes.iter().map(XShape::segments).collect();
    oracle_edges(shapes.len(), |u, v| shapes_meet(&segs[u], &segs[v]))
}

/// Checks lengths, distinct corners, and that the corners lie on one line
/// of negative slope.
pub fn validate_diagonal(shapes: &[LShape]) -> Result<()> {
    let zero = Rational::from_integer(0);
    if shapes.iter().any(|s| s.hlen < zero || s.vlen < zero) {
        return Err(Error::Input("L-shape lengths must be non-negative".into()));
    }
    let mut order: Vec<usize> = (0..shapes.len()).collect();
    order.sort_by(|&a, &b| (shapes[a].cx, shapes[a].cy).cmp(&(shapes[b].cx, shapes[b].cy)));
    for w in order.windows(2) {
        let (a, b) = (&shapes[w[0]], &shapes[w[1]]);
        if a.cx == b.cx {
            return Err(Error::Input(format!(
                "corners of shapes {} and {} are not on a line of negative slope",
                w[0], w[1]
            )));
        }
    }
    if shapes.len() < 2 {
        return Ok(());
    }
    let overflow = || Error::Overflow("corner slope".into());
    let slope = |a: &LShape, b: &LShape| -> Result<Wide> {
        let dy = widen(&b.cy).checked_sub(&widen(&a.cy)).ok_or_else(overflow)?;
        let dx = widen(&b.cx).checked_sub(&widen(&a.cx)).ok_or_else(overflow)?;
        dy.checked_div(&dx).ok_or_else(overflow)
    };
    let first = &shapes[order[0]];
    let s0 = slope(first, &shapes[order[1]])?;
    if s0 >= Wide::from_integer(0) {
        return Err(Error::Input("corners lie on a line of non-negative slope".into()));
    }
    for &i in &order[2..] {
        if slope(first, &shapes[i])? != s0 {
            return Err(Error::Input(format!("corner of shape {i} is not collinear with the others")));
        }
    }
    Ok(())
}

/// Checks lengths and distinct grounding values.
pub fn validate_x_grounded(shapes: &[XShape]) -> Result<()> {
    let zero = Rational::from_integer(0);
    if shapes.iter().any(|s| s.h < zero || s.w < zero) {
        return Err(Error::Input("L-shape lengths must be non-negative".into()));
    }
    let mut xs: Vec<(Rational, usize)> = shapes.iter().enumerate().map(|(i, s)| (s.x, i)).collect();
    xs.sort();
    if let Some(w) = xs.windows(2).find(|w| w[0].0 == w[1].0) {
        return Err(Error::Input(format!("shapes {} and {} share grounding value {}", w[0].1, w[1].1, w[0].0)));
    }
    Ok(())
}

/// Dominance coordinate. Keys of the left-hand shape carry tag 1, so a strict
/// comparison of tagged keys is `≤` on the values.
type Key = (Rational, u8);

/// Cover of a diagonal grounded L-shape intersection graph.
pub fn cover_grounded_l(shapes: &[LShape]) -> Result<BicliqueCover> {
    validate_diagonal(shapes)?;
    let mut order: Vec<usize> = (0..shapes.len()).collect();
    order.sort_by_key(|&i| shapes[i].cx);
    let mut out = Vec::new();
    // For a left of b the shapes meet iff b.cx ≤ a.cx + a.hlen and a.cy ≤ b.cy + b.vlen.
    let later = |b: &LShape, c: usize| -> Key {
        if c == 0 {
            (b.cx, 0)
        } else {
            (-(b.cy + b.vlen), 0)
        }
    };
    let earlier = |a: &LShape, c: usize| -> Key {
        if c == 0 {
            (a.cx + a.hlen, 1)
        } else {
            (-a.cy, 1)
        }
    };
    halving(shapes, &order, &|_, _| true, &later, &earlier, &mut out);
    Ok(BicliqueCover::new(out, CoverMode::Cover))
}

/// Cover of an x-grounded L-shape intersection graph.
pub fn cover_x_grounded_l(shapes: &[XShape]) -> Result<BicliqueCover> {
    validate_x_grounded(shapes)?;
    let mut order: Vec<usize> = (0..shapes.len()).collect();
    order.sort_by_key(|&i| shapes[i].x);
    let mut out = Vec::new();
    // For a left of b the shapes meet iff b.x ≤ a.x + a.w and a.h ≤ b.h.
    let later = |b: &XShape, c: usize| -> Key {
        if c == 0 {
            (b.x, 0)
        } else {
            (-b.h, 0)
        }
    };
    let earlier = |a: &XShape, c: usize| -> Key {
        if c == 0 {
            (a.x + a.w, 1)
        } else {
            (-a.h, 1)
        }
    };
    // Only shapes whose horizontal reaches the vertical split line can meet
    // anything to its right. A horizontal on the right never reaches back
    // across, so the mirrored case is empty for Γ shapes.
    let crosses = |a: &XShape, split: &Rational| a.x + a.w >= *split;
    halving(shapes, &order, &crosses, &later, &earlier, &mut out);
    Ok(BicliqueCover::new(out, CoverMode::Cover))
}

trait Grounded {
    fn ground(&self) -> Rational;
}

impl Grounded for LShape {
    fn ground(&self) -> Rational {
        self.cx
    }
}

impl Grounded for XShape {
    fn ground(&self) -> Rational {
        self.x
    }
}

/// Splits `order` (sorted by grounding) in half, covers the pairs between
/// the halves, then recurses. `reaches(a, split)` filters the left half.
fn halving<S: Grounded>(
    shapes: &[S],
    order: &[usize],
    reaches: &dyn Fn(&S, &Rational) -> bool,
    later: &dyn Fn(&S, usize) -> Key,
    earlier: &dyn Fn(&S, usize) -> Key,
    out: &mut Vec<Biclique>,
) {
    if order.len() < 2 {
        return;
    }
    let mid = order.len() / 2;
    let (lo, hi) = order.split_at(mid);
    let split = (shapes[lo[mid - 1]].ground() + shapes[hi[0]].ground()) / Rational::from_integer(2);
    let a: Vec<usize> = lo.iter().copied().filter(|&i| reaches(&shapes[i], &split)).collect();
    let b = hi;
    let (p, q) = ranked_pair(2, b.len(), |i, c| later(&shapes[b[i]], c), a.len(), |i, c| earlier(&shapes[a[i]], c));
    let mut raw = Vec::new();
    bigraph_raw(&p, b.len(), &q, a.len(), &mut raw);
    for (bl, al) in raw {
        let bl = bl.into_iter().map(|i| b[i]).collect();
        let al = al.into_iter().map(|i| a[i]).collect();
        if let Some(bc) = Biclique::from_unsorted(al, bl) {
            out.push(bc);
        }
    }
    halving(shapes, lo, reaches, later, earlier, out);
    halving(shapes, hi, reaches, later, earlier, out);
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use crate::testutil::{brute, covered};
    use crate::graph::validate_cover;
    use crate::rational::int;

    fn diag(v: &[(i64, i64, i64, i64)]) -> Vec<LShape> {
        v.iter().map(|&(x, y, h, w)| LShape::new(int(x), int(y), int(h), int(w))).collect()
    }

    fn xs(v: &[(i64, i64, i64)]) -> Vec<XShape> {
        v.iter().map(|&(x, h, w)| XShape::new(int(x), int(h), int(w))).collect()
    }

    #[test]
    fn diagonal_triangle() {
        let s = diag(&[(0, 0, 3, 2), (1, -1, 3, 2), (2, -2, 1, 5)]);
        let g = lshape_oracle(&s);
        assert_eq!(g.edges(), &[(0, 1), (0, 2), (1, 2)]);
        let c = cover_grounded_l(&s).unwrap();
        assert!(validate_cover(&g, &c).unwrap().valid);
    }

    #[test]
    fn degenerate_points_never_meet() {
        let s = diag(&[(0, 0, 0, 0), (1, -1, 0, 0), (2, -2, 0, 0)]);
        assert_eq!(lshape_oracle(&s).m(), 0);
        assert!(cover_grounded_l(&s).unwrap().is_empty());
    }

    #[test]
    fn diagonal_errors() {
        assert!(cover_grounded_l(&diag(&[(0, 0, 1, 1), (1, 1, 1, 1)])).is_err());
        assert!(cover_grounded_l(&diag(&[(0, 0, 1, 1), (1, -1, 1, 1), (2, -3, 1, 1)])).is_err());
        assert!(cover_grounded_l(&diag(&[(0, 0, 1, 1), (0, 0, 2, 2)])).is_err());
        assert!(cover_grounded_l(&diag(&[(0, 0, -1, 1)])).is_err());
        assert!(cover_grounded_l(&diag(&[(0, 5, 1, 1)])).is_ok());
    }

    #[test]
    fn x_grounded_examples() {
        let s = xs(&[(0, 3, 5), (2, 1, 1), (4, 2, 3)]);
        assert_eq!(xshape_oracle(&s).m(), 0);
        assert!(cover_x_grounded_l(&s).unwrap().is_empty());

        let s = xs(&[(0, 1, 5), (3, 4, 1)]);
        let g = xshape_oracle(&s);
        assert_eq!(g.edges(), &[(0, 1)]);
        assert!(validate_cover(&g, &cover_x_grounded_l(&s).unwrap()).unwrap().valid);

        assert!(cover_x_grounded_l(&xs(&[(1, 1, 1)])).unwrap().is_empty());
        assert!(cover_x_grounded_l(&xs(&[(1, 1, 1), (1, 2, 2)])).is_err());
    }

    #[test]
    fn touching_counts() {
        // Horizontal of 0 ends exactly on the vertical of 1, at its top.
        let s = xs(&[(0, 2, 3), (3, 2, 1)]);
        let g = xshape_oracle(&s);
        assert_eq!(g.m(), 1);
        assert!(validate_cover(&g, &cover_x_grounded_l(&s).unwrap()).unwrap().valid);
    }

    /// Axis-parallel closed segment as `(x0, x1, y0, y1)`.
    fn meet(a: (i64, i64, i64, i64), b: (i64, i64, i64, i64)) -> bool {
        a.0.max(b.0) <= a.1.min(b.1) && a.2.max(b.2) <= a.3.min(b.3)
    }

    fn arms_meet(a: [(i64, i64, i64, i64); 2], b: [(i64, i64, i64, i64); 2]) -> bool {
        a.iter().any(|s| b.iter().any(|t| meet(*s, *t)))
    }

    proptest! {
        #[test]
        fn diagonal_cover_matches_geometry(
            shapes in prop::collection::vec((1i64..4, 0i64..7, 0i64..7), 0..30).prop_flat_map(|raw| {
                let mut x = 0;
                let v: Vec<(i64, i64, i64, i64)> = raw.iter().map(|&(s, h, v)| { x += s; (x, -x, h, v) }).collect();
                Just(v).prop_shuffle()
            })
        ) {
            let arms = |&(cx, cy, h, v): &(i64, i64, i64, i64)| [(cx, cx + h, cy, cy), (cx, cx, cy, cy + v)];
            let expect = brute(shapes.len(), |u, v| arms_meet(arms(&shapes[u]), arms(&shapes[v])));
            let c = cover_grounded_l(&diag(&shapes)).unwrap();
            prop_assert_eq!(covered(&c), expect);
        }

        #[test]
        fn x_grounded_cover_matches_geometry(
            shapes in prop::collection::vec((1i64..4, 0i64..7, 0i64..7), 0..30).prop_flat_map(|raw| {
                let mut x = 0;
                let v: Vec<(i64, i64, i64)> = raw.iter().map(|&(s, h, w)| { x += s; (x, h, w) }).collect();
                Just(v).prop_shuffle()
            })
        ) {
            let arms = |&(x, h, w): &(i64, i64, i64)| [(x, x, 0, h), (x, x + w, h, h)];
            let expect = brute(shapes.len(), |u, v| arms_meet(arms(&shapes[u]), arms(&shapes[v])));
            let c = cover_x_grounded_l(&xs(&shapes)).unwrap();
            prop_assert_eq!(covered(&c), expect);
        }
    }
}
