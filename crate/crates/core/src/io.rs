//! Plain ASCII file formats.
//!
//! Every file starts with a header line naming the format. Blank lines and
//! lines starting with `#` are ignored. Coordinates are integers or
//! fractions `num/den`; decimal notation is rejected.

use std::fmt::{Display, Write as _};

use crate::capped::cover_capped;
use crate::compressed::{cover_halfplanes_by_slope, HalfplaneConfig};
use crate::dominance::{bigraph_oracle, comparability_oracle, partition_bigraph, partition_graph, BigraphInstance, PointSet};
use crate::error::{Error, Result};
use crate::gen::terrain_visibility;
use crate::graph::{trivial_cover, Biclique, BicliqueCover, Checking, CoverMode, Graph};
use crate::lshapes::{cover_grounded_l, cover_x_grounded_l, lshape_oracle, xshape_oracle, LShape, XShape};
use crate::rational::{parse_rational, Rational};
use crate::segments::{cover_bichromatic_segments, segment_oracle, Color, Segment};
use crate::segtree::{box_oracle, cover_boxes, cover_intervals, interval_oracle, BoxD};
use crate::semilinear::{cover_semilinear, semilinear_oracle, SemilinearInstance};

/// Any instance the crate reads or writes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Instance {
    Graph(Graph),
    Points(PointSet),
    Bipoints(BigraphInstance),
    Semilinear(SemilinearInstance),
    Diagonal(Vec<LShape>),
    XAxis(Vec<XShape>),
    Intervals(Vec<(Rational, Rational)>),
    Boxes { d: usize, boxes: Vec<BoxD> },
    Segments(Vec<Segment>),
    /// Strictly x-increasing vertices of a terrain.
    Terrain(Vec<(i64, i64)>),
    Halfplanes(HalfplaneConfig),
}

impl Instance {
    /// Header keyword of the format.
    pub fn kind(&self) -> &'static str {
        match self {
            Instance::Graph(_) => "graph",
            Instance::Points(_) => "points",
            Instance::Bipoints(_) => "bipoints",
            Instance::Semilinear(_) => "semilinear",
            Instance::Diagonal(_) | Instance::XAxis(_) => "lshapes",
            Instance::Intervals(_) => "intervals",
            Instance::Boxes { .. } => "boxes",
            Instance::Segments(_) => "segments",
            Instance::Terrain(_) => "terrain",
            Instance::Halfplanes(_) => "halfplanes",
        }
    }

    /// Number of vertices of the associated graph.
    pub fn n(&self) -> usize {
        match self {
            Instance::Graph(g) => g.n(),
            Instance::Points(p) => p.len(),
            Instance::Bipoints(b) => b.n(),
            Instance::Semilinear(s) => s.n(),
            Instance::Diagonal(v) => v.len(),
            Instance::XAxis(v) => v.len(),
            Instance::Intervals(v) => v.len(),
            Instance::Boxes { boxes, .. } => boxes.len(),
            Instance::Segments(v) => v.len(),
            Instance::Terrain(v) => v.len(),
            Instance::Halfplanes(c) => c.n(),
        }
    }

    /// The graph of the instance, computed by brute force.
    pub fn oracle(&self) -> Result<Graph> {
        match self {
            Instance::Graph(g) => Ok(g.clone()),
            Instance::Points(p) => Ok(comparability_oracle(p)),
            Instance::Bipoints(b) => Ok(bigraph_oracle(b)),
            Instance::Semilinear(s) => semilinear_oracle(s),
            Instance::Diagonal(v) => Ok(lshape_oracle(v)),
            Instance::XAxis(v) => Ok(xshape_oracle(v)),
            Instance::Intervals(v) => Ok(interval_oracle(v)),
            Instance::Boxes { boxes, .. } => Ok(box_oracle(boxes)),
            Instance::Segments(v) => segment_oracle(v),
            Instance::Terrain(v) => terrain_visibility(v),
            Instance::Halfplanes(c) => c.containment_graph(),
        }
    }

    /// Cover by the construction for the instance kind. Ordered graphs are
    /// taken as capped, unordered ones get the trivial cover.
    pub fn default_cover(&self, checking: Checking) -> Result<BicliqueCover> {
        Ok(match self {
            Instance::Graph(g) if g.is_ordered() => cover_capped(g, checking)?,
            Instance::Graph(g) => trivial_cover(g),
            Instance::Points(p) => partition_graph(p),
            Instance::Bipoints(b) => partition_bigraph(b),
            Instance::Semilinear(s) => cover_semilinear(s)?,
            Instance::Diagonal(v) => cover_grounded_l(v)?,
            Instance::XAxis(v) => cover_x_grounded_l(v)?,
            Instance::Intervals(v) => cover_intervals(v)?,
            Instance::Boxes { d, boxes } => cover_boxes(boxes, *d)?,
            Instance::Segments(v) => cover_bichromatic_segments(v, checking)?,
            Instance::Terrain(v) => cover_capped(&terrain_visibility(v)?, checking)?,
            Instance::Halfplanes(c) => cover_halfplanes_by_slope(c)?,
        })
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        match self {
            Instance::Graph(g) => return graph_to_string(g),
            Instance::Points(p) => {
                let _ = writeln!(s, "points {} {}", p.dim(), p.len());
                for row in p.points() {
                    line(&mut s, row);
                }
            }
            Instance::Bipoints(b) => {
                let _ = writeln!(s, "bipoints {} {} {}", b.dim(), b.left().len(), b.right().len());
                for row in b.left().points().iter().chain(b.right().points()) {
                    line(&mut s, row);
                }
            }
            Instance::Semilinear(inst) => {
                let (ell, t) = (inst.ell(), inst.t());
                let _ = writeln!(s, "semilinear {} {} {} {}", inst.d(), ell, t, inst.n());
                for i in 0..ell {
                    for j in 0..t {
                        line(&mut s, inst.g(i, j));
                    }
                }
                for i in 0..ell {
                    for j in 0..t {
                        line(&mut s, inst.h(i, j));
                    }
                }
                for row in inst.points() {
                    line(&mut s, row);
                }
            }
            Instance::Diagonal(v) => {
                let _ = writeln!(s, "lshapes diag {}", v.len());
                for l in v {
                    line(&mut s, &[l.cx, l.cy, l.hlen, l.vlen]);
                }
            }
            Instance::XAxis(v) => {
                let _ = writeln!(s, "lshapes xaxis {}", v.len());
                for l in v {
                    line(&mut s, &[l.x, l.h, l.w]);
                }
            }
            Instance::Intervals(v) => {
                let _ = writeln!(s, "intervals {}", v.len());
                for (lo, hi) in v {
                    line(&mut s, &[lo, hi]);
                }
            }
            Instance::Boxes { d, boxes } => {
                let _ = writeln!(s, "boxes {} {}", d, boxes.len());
                for b in boxes {
                    let flat: Vec<Rational> = b.iter().flat_map(|&(lo, hi)| [lo, hi]).collect();
                    line(&mut s, &flat);
                }
            }
            Instance::Segments(v) => {
                let _ = writeln!(s, "segments {}", v.len());
                for g in v {
                    let _ = writeln!(s, "{} {} {} {} {}", g.x1, g.y1, g.x2, g.y2, g.color);
                }
            }
            Instance::Terrain(v) => {
                let _ = writeln!(s, "terrain {}", v.len());
                for (x, y) in v {
                    let _ = writeln!(s, "{x} {y}");
                }
            }
            Instance::Halfplanes(c) => return halfplanes_to_string(c),
        }
        s
    }
}

fn line<T: Display>(s: &mut String, row: &[T]) {
    let mut first = true;
    for v in row {
        if !first {
            s.push(' ');
        }
        first = false;
        let _ = write!(s, "{v}");
    }
    s.push('\n');
}

pub fn graph_to_string(g: &Graph) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "graph {} {} {}", g.n(), g.m(), u8::from(g.is_ordered()));
    for (u, v) in g.edges() {
        let _ = writeln!(s, "{u} {v}");
    }
    s
}

pub fn cover_to_string(c: &BicliqueCover) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "cover {} {}", c.len(), c.mode());
    for b in c.bicliques() {
        let _ = writeln!(s, "{} {}", b.left().len(), b.right().len());
        line(&mut s, b.left());
        line(&mut s, b.right());
    }
    s
}

pub fn halfplanes_to_string(c: &HalfplaneConfig) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "halfplanes {} {}", c.points.len(), c.lines.len());
    for (x, y) in &c.points {
        line(&mut s, &[x, y]);
    }
    for (m, b) in &c.lines {
        line(&mut s, &[m, b]);
    }
    s
}

/// Non-empty, non-comment lines with their 1-based numbers.
struct Lines<'a> {
    iter: std::iter::Peekable<Box<dyn Iterator<Item = (usize, &'a str)> + 'a>>,
    last: usize,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Self {
        let it: Box<dyn Iterator<Item = (usize, &'a str)> + 'a> = Box::new(
            text.lines()
                .enumerate()
                .map(|(i, l)| (i + 1, l.trim()))
                .filter(|(_, l)| !l.is_empty() && !l.starts_with('#')),
        );
        Lines { iter: it.peekable(), last: 0 }
    }

    fn next(&mut self, what: &str) -> Result<(usize, Vec<&'a str>)> {
        match self.iter.next() {
            Some((n, l)) => {
                self.last = n;
                Ok((n, l.split_whitespace().collect()))
            }
            None => Err(Error::Parse { line: self.last + 1, msg: format!("unexpected end of input, expected {what}") }),
        }
    }

    fn finish(&mut self) -> Result<()> {
        match self.iter.next() {
            Some((n, _)) => Err(Error::Parse { line: n, msg: "trailing content".into() }),
            None => Ok(()),
        }
    }
}

fn perr(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

fn count(line: usize, tok: &str) -> Result<usize> {
    tok.parse::<usize>().map_err(|_| perr(line, format!("`{tok}` is not a non-negative integer")))
}

fn rationals(line: usize, toks: &[&str], expect: usize) -> Result<Vec<Rational>> {
    if toks.len() != expect {
        return Err(perr(line, format!("expected {expect} values, found {}", toks.len())));
    }
    toks.iter().map(|t| parse_rational(t).map_err(|m| perr(line, m))).collect()
}

fn header<'a>(lines: &mut Lines<'a>, kind: &str, args: usize) -> Result<(usize, Vec<&'a str>)> {
    let (n, toks) = lines.next("a header")?;
    if toks.first() != Some(&kind) {
        return Err(perr(n, format!("expected a `{kind}` header")));
    }
    if toks.len() != args + 1 {
        return Err(perr(n, format!("`{kind}` header takes {args} fields")));
    }
    Ok((n, toks[1..].to_vec()))
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut lines = Lines::new(text);
    let (hl, h) = header(&mut lines, "graph", 3)?;
    let (n, m) = (count(hl, h[0])?, count(hl, h[1])?);
    let ordered = match h[2] {
        "0" => false,
        "1" => true,
        t => return Err(perr(hl, format!("ordered flag must be 0 or 1, found `{t}`"))),
    };
    let mut edges = Vec::with_capacity(m);
    for _ in 0..m {
        let (ln, t) = lines.next("an edge")?;
        if t.len() != 2 {
            return Err(perr(ln, "expected `u v`"));
        }
        let (u, v) = (count(ln, t[0])?, count(ln, t[1])?);
        if u >= v {
            return Err(perr(ln, "edges must be written with u < v"));
        }
        if u.max(v) >= n {
            return Err(perr(ln, format!("vertex {} out of range", u.max(v))));
        }
        edges.push((u, v));
    }
    lines.finish()?;
    let g = Graph::new(n, edges, ordered)?;
    if g.m() != m {
        return Err(perr(hl, "duplicate edges"));
    }
    Ok(g)
}

pub fn parse_cover(text: &str) -> Result<BicliqueCover> {
    let mut lines = Lines::new(text);
    let (hl, h) = header(&mut lines, "cover", 2)?;
    let k = count(hl, h[0])?;
    let mode: CoverMode = h[1].parse().map_err(|m: String| perr(hl, m))?;
    let mut out = Vec::with_capacity(k);
    for _ in 0..k {
        let (ln, t) = lines.next("biclique side sizes")?;
        if t.len() != 2 {
            return Err(perr(ln, "expected `|L| |R|`"));
        }
        let (nl, nr) = (count(ln, t[0])?, count(ln, t[1])?);
        let mut side = |len: usize| -> Result<Vec<usize>> {
            let (ln, t) = lines.next("a biclique side")?;
            if t.len() != len {
                return Err(perr(ln, format!("expected {len} vertices, found {}", t.len())));
            }
            t.iter().map(|x| count(ln, x)).collect()
        };
        let (l, r) = (side(nl)?, side(nr)?);
        out.push(Biclique::new(l, r).map_err(|e| perr(ln, e.to_string()))?);
    }
    lines.finish()?;
    Ok(BicliqueCover::new(out, mode))
}

const RELATION_TOKENS: [&str; 6] = ["<", "<=", "=", "==", ">=", ">"];

/// Parses any instance format, dispatching on the header keyword.
pub fn parse_instance(text: &str) -> Result<Instance> {
    let first = Lines::new(text).next("a header")?;
    let (hl, kind) = (first.0, first.1[0]);
    let mut lines = Lines::new(text);
    let inst = match kind {
        "graph" => return parse_graph(text).map(Instance::Graph),
        "points" => {
            let (_, h) = header(&mut lines, "points", 2)?;
            let (d, n) = (count(hl, h[0])?, count(hl, h[1])?);
            let pts = rows(&mut lines, n, d)?;
            Instance::Points(PointSet::new(d, pts)?)
        }
        "bipoints" => {
            let (_, h) = header(&mut lines, "bipoints", 3)?;
            let (d, nl, nr) = (count(hl, h[0])?, count(hl, h[1])?, count(hl, h[2])?);
            let l = rows(&mut lines, nl, d)?;
            let r = rows(&mut lines, nr, d)?;
            Instance::Bipoints(BigraphInstance::new(PointSet::new(d, l)?, PointSet::new(d, r)?)?)
        }
        "semilinear" => {
            let (_, h) = header(&mut lines, "semilinear", 4)?;
            let d = count(hl, h[0])?;
            let (ell, t, n) = (count(hl, h[1])?, count(hl, h[2])?, count(hl, h[3])?);
            let mut coeff = |k: usize| -> Result<Vec<Vec<Rational>>> {
                (0..k)
                    .map(|_| {
                        let (ln, toks) = lines.next("affine coefficients")?;
                        if let Some(r) = toks.iter().find(|t| RELATION_TOKENS.contains(t)) {
                            return Err(perr(
                                ln,
                                format!(
                                    "relation `{r}` found: only strict-inequality DNF is supported; \
                                     rewrite ≤ and = atoms as strict DNF first"
                                ),
                            ));
                        }
                        rationals(ln, &toks, d + 1)
                    })
                    .collect()
            };
            let g = coeff(ell * t)?;
            let hh = coeff(ell * t)?;
            let pts = rows(&mut lines, n, d)?;
            Instance::Semilinear(SemilinearInstance::new(d, ell, t, g, hh, pts)?)
        }
        "lshapes" => {
            let (_, h) = header(&mut lines, "lshapes", 2)?;
            let n = count(hl, h[1])?;
            match h[0] {
                "diag" => Instance::Diagonal(
                    rows(&mut lines, n, 4)?.into_iter().map(|r| LShape::new(r[0], r[1], r[2], r[3])).collect(),
                ),
                "xaxis" => {
                    Instance::XAxis(rows(&mut lines, n, 3)?.into_iter().map(|r| XShape::new(r[0], r[1], r[2])).collect())
                }
                m => return Err(perr(hl, format!("unknown L-shape mode `{m}` (expected diag or xaxis)"))),
            }
        }
        "intervals" => {
            let (_, h) = header(&mut lines, "intervals", 1)?;
            let n = count(hl, h[0])?;
            Instance::Intervals(rows(&mut lines, n, 2)?.into_iter().map(|r| (r[0], r[1])).collect())
        }
        "boxes" => {
            let (_, h) = header(&mut lines, "boxes", 2)?;
            let (d, n) = (count(hl, h[0])?, count(hl, h[1])?);
            let boxes = rows(&mut lines, n, 2 * d)?
                .into_iter()
                .map(|r| r.chunks(2).map(|c| (c[0], c[1])).collect())
                .collect();
            Instance::Boxes { d, boxes }
        }
        "segments" => {
            let (_, h) = header(&mut lines, "segments", 1)?;
            let n = count(hl, h[0])?;
            let mut segs = Vec::with_capacity(n);
            for _ in 0..n {
                let (ln, t) = lines.next("a segment")?;
                if t.len() != 5 {
                    return Err(perr(ln, "expected `x1 y1 x2 y2 color`"));
                }
                let c = rationals(ln, &t[..4], 4)?;
                let color: Color = t[4].parse().map_err(|m: String| perr(ln, m))?;
                segs.push(Segment::new(c[0], c[1], c[2], c[3], color));
            }
            Instance::Segments(segs)
        }
        "terrain" => {
            let (_, h) = header(&mut lines, "terrain", 1)?;
            let n = count(hl, h[0])?;
            let mut pts = Vec::with_capacity(n);
            for _ in 0..n {
                let (ln, t) = lines.next("a terrain vertex")?;
                if t.len() != 2 {
                    return Err(perr(ln, "expected `x y`"));
                }
                let p: Vec<i64> = t
                    .iter()
                    .map(|x| x.parse::<i64>().map_err(|_| perr(ln, format!("`{x}` is not an integer"))))
                    .collect::<Result<_>>()?;
                pts.push((p[0], p[1]));
            }
            Instance::Terrain(pts)
        }
        "halfplanes" => {
            let (_, h) = header(&mut lines, "halfplanes", 2)?;
            let (np, nl) = (count(hl, h[0])?, count(hl, h[1])?);
            let points = rows(&mut lines, np, 2)?.into_iter().map(|r| (r[0], r[1])).collect();
            let lines_ = rows(&mut lines, nl, 2)?.into_iter().map(|r| (r[0], r[1])).collect();
            Instance::Halfplanes(HalfplaneConfig { points, lines: lines_ })
        }
        "cover" => return Err(perr(hl, "this is a cover file, not an instance")),
        other => return Err(perr(hl, format!("unknown format `{other}`"))),
    };
    lines.finish()?;
    Ok(inst)
}

fn rows(lines: &mut Lines<'_>, n: usize, width: usize) -> Result<Vec<Vec<Rational>>> {
    (0..n)
        .map(|_| {
            let (ln, t) = lines.next("a coordinate row")?;
            rationals(ln, &t, width)
        })
        .collect()
}
