//! Size measurements against the `n (log2 n + 1)^e` bounds.

use std::fmt::{self, Write as _};
use std::str::FromStr;
use std::time::Instant;

use crate::capped::cover_capped;
use crate::compressed::{charging_certificate, cover_halfplanes_by_slope};
use crate::dominance::{partition_bigraph, partition_graph};
use crate::error::{Error, Result};
use crate::gen;
use crate::graph::{cover_complete, BicliqueCover, Checking};
use crate::lshapes::{cover_grounded_l, cover_x_grounded_l};
use crate::segments::cover_bichromatic_segments;
use crate::segtree::{cover_boxes, cover_intervals};
use crate::semilinear::cover_semilinear;

/// Instance family measured by the harness.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BenchClass {
    Intervals,
    Complete,
    /// Comparability graph of random points in `d` dimensions.
    Points(usize),
    /// Comparability bigraph, `n/2` points per side.
    Bipoints(usize),
    Boxes(usize),
    /// Interval graph in semilinear form (`t = 2`).
    Semilinear,
    Terrain,
    Capped,
    LshapesDiag,
    LshapesXaxis,
    Segments,
    /// `n` is the grid parameter `k`; the graph has `3k^3` vertices.
    Erdos,
}

impl BenchClass {
    /// Exponent `e` of the size bound.
    pub fn exponent(self) -> u32 {
        match self {
            BenchClass::Intervals | BenchClass::Complete | BenchClass::Erdos => 1,
            BenchClass::Points(d) | BenchClass::Bipoints(d) | BenchClass::Boxes(d) => d as u32,
            BenchClass::Semilinear => 3,
            BenchClass::Terrain
            | BenchClass::Capped
            | BenchClass::LshapesDiag
            | BenchClass::LshapesXaxis
            | BenchClass::Segments => 3,
        }
    }
}

impl fmt::Display for BenchClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BenchClass::Intervals => f.write_str("intervals"),
            BenchClass::Complete => f.write_str("complete"),
            BenchClass::Points(d) => write!(f, "points{d}"),
            BenchClass::Bipoints(d) => write!(f, "bipoints{d}"),
            BenchClass::Boxes(d) => write!(f, "boxes{d}"),
            BenchClass::Semilinear => f.write_str("semilinear"),
            BenchClass::Terrain => f.write_str("terrain"),
            BenchClass::Capped => f.write_str("capped"),
            BenchClass::LshapesDiag => f.write_str("lshapes-diag"),
            BenchClass::LshapesXaxis => f.write_str("lshapes-xaxis"),
            BenchClass::Segments => f.write_str("segments"),
            BenchClass::Erdos => f.write_str("erdos"),
        }
    }
}

impl FromStr for BenchClass {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let dim = |rest: &str| -> std::result::Result<usize, String> {
            match rest.parse::<usize>() {
                Ok(d) if (1..=6).contains(&d) => Ok(d),
                _ => Err(format!("bad dimension in `{s}` (expected 1..=6)")),
            }
        };
        Ok(match s {
            "intervals" => BenchClass::Intervals,
            "complete" => BenchClass::Complete,
            "semilinear" => BenchClass::Semilinear,
            "terrain" => BenchClass::Terrain,
            "capped" => BenchClass::Capped,
            "lshapes-diag" => BenchClass::LshapesDiag,
            "lshapes-xaxis" => BenchClass::LshapesXaxis,
            "segments" => BenchClass::Segments,
            "erdos" => BenchClass::Erdos,
            _ => {
                if let Some(r) = s.strip_prefix("bipoints") {
                    BenchClass::Bipoints(dim(r)?)
                } else if let Some(r) = s.strip_prefix("points") {
                    BenchClass::Points(dim(r)?)
                } else if let Some(r) = s.strip_prefix("boxes") {
                    BenchClass::Boxes(dim(r)?)
                } else {
                    return Err(format!("unknown bench class `{s}`"));
                }
            }
        })
    }
}

/// `n (log2 n + 1)^e`.
pub fn size_bound(n: usize, e: u32) -> f64 {
    if n == 0 {
        return 0.0;
    }
    let n = n as f64;
    n * (n.log2() + 1.0).powi(e as i32)
}

/// One measured cell.
#[derive(Debug, Clone, PartialEq)]
pub struct BenchRow {
    pub class: BenchClass,
    pub n: usize,
    pub seed: u64,
    pub size: usize,
    pub bicliques: usize,
    pub max_mult: usize,
    pub millis: f64,
    pub size_over_bound: f64,
    /// Charging lower bound, erdos only.
    pub cert_bound: Option<usize>,
}

type Job = Box<dyn FnOnce() -> Result<BicliqueCover>>;

/// Builds the instance for `(class, n, seed)` and returns its vertex count
/// and the constructed cover; the second closure result is timed.
fn build(class: BenchClass, n: usize, seed: u64) -> Result<(usize, Job)> {
    Ok(match class {
        BenchClass::Intervals => {
            let v = gen::gen_intervals(n, seed);
            (n, Box::new(move || cover_intervals(&v)))
        }
        BenchClass::Complete => (n, Box::new(move || Ok(cover_complete(n)))),
        BenchClass::Points(d) => {
            let p = gen::gen_points(n, d, seed);
            (n, Box::new(move || Ok(partition_graph(&p))))
        }
        BenchClass::Bipoints(d) => {
            let b = gen::gen_bipoints(n / 2, n - n / 2, d, seed);
            (n, Box::new(move || Ok(partition_bigraph(&b))))
        }
        BenchClass::Boxes(d) => {
            let b = gen::gen_boxes(n, d, seed);
            (n, Box::new(move || cover_boxes(&b, d)))
        }
        BenchClass::Semilinear => {
            let s = gen::gen_semilinear_demo(n, seed);
            (n, Box::new(move || cover_semilinear(&s)))
        }
        BenchClass::Terrain => {
            let (_, g) = gen::gen_terrain(n, seed)?;
            (n, Box::new(move || cover_capped(&g, Checking::Fast)))
        }
        BenchClass::Capped => {
            let g = gen::gen_capped_closure(n, 4.0 / n.max(1) as f64, seed);
            (n, Box::new(move || cover_capped(&g, Checking::Fast)))
        }
        BenchClass::LshapesDiag => {
            let v = gen::gen_lshapes_diag(n, seed);
            (n, Box::new(move || cover_grounded_l(&v)))
        }
        BenchClass::LshapesXaxis => {
            let v = gen::gen_lshapes_x(n, seed);
            (n, Box::new(move || cover_x_grounded_l(&v)))
        }
        BenchClass::Segments => {
            let v = gen::gen_segments(n / 2, n - n / 2, seed);
            (n, Box::new(move || cover_bichromatic_segments(&v, Checking::Fast)))
        }
        BenchClass::Erdos => {
            let e = gen::gen_erdos(n);
            (e.config.n(), Box::new(move || cover_halfplanes_by_slope(&e.config)))
        }
    })
}

/// Measures one cell. Without timing, `millis` is reported as 0 so output
/// is reproducible byte for byte.
pub fn run_cell(class: BenchClass, n: usize, seed: u64, timing: bool) -> Result<BenchRow> {
    let (vertices, job) = build(class, n, seed)?;
    let start = Instant::now();
    let cover = job()?;
    let millis = if timing { start.elapsed().as_secs_f64() * 1e3 } else { 0.0 };
    let cert_bound = match class {
        BenchClass::Erdos => Some(charging_certificate(&gen::gen_erdos(n).config, None)?.bound),
        _ => None,
    };
    let mult = cover.vertex_multiplicity(vertices);
    let bound = size_bound(vertices, class.exponent());
    Ok(BenchRow {
        class,
        n: vertices,
        seed,
        size: cover.size(),
        bicliques: cover.len(),
        max_mult: mult.into_iter().max().unwrap_or(0),
        millis,
        size_over_bound: if bound > 0.0 { cover.size() as f64 / bound } else { 0.0 },
        cert_bound,
    })
}

/// Every `n` with seeds `seed..seed + reps`, rows sorted by `(n, seed)`.
pub fn run(class: BenchClass, ns: &[usize], reps: usize, seed: u64, timing: bool) -> Result<Vec<BenchRow>> {
    if reps == 0 {
        return Err(Error::Input("reps must be positive".into()));
    }
    let mut rows = Vec::with_capacity(ns.len() * reps);
    for &n in ns {
        for r in 0..reps as u64 {
            rows.push(run_cell(class, n, seed.wrapping_add(r), timing)?);
        }
    }
    rows.sort_by_key(|r| (r.n, r.seed));
    Ok(rows)
}

pub fn to_csv(rows: &[BenchRow]) -> String {
    let cert = rows.iter().any(|r| r.cert_bound.is_some());
    let mut s = String::from("class,n,seed,size,bicliques,max_mult,millis,size_over_bound");
    if cert {
        s.push_str(",cert_bound");
    }
    s.push('\n');
    for r in rows {
        let _ = write!(
            s,
            "{},{},{},{},{},{},{:.3},{:.6}",
            r.class, r.n, r.seed, r.size, r.bicliques, r.max_mult, r.millis, r.size_over_bound
        );
        if cert {
            let _ = write!(s, ",{}", r.cert_bound.map(|b| b.to_string()).unwrap_or_default());
        }
        s.push('\n');
    }
    s
}

/// Line plot of the mean `size_over_bound` per `n` (log-scaled x axis).
pub fn to_svg(rows: &[BenchRow]) -> String {
    let (w, h, pad) = (640.0, 400.0, 50.0);
    let mut means: Vec<(usize, f64)> = Vec::new();
    for r in rows {
        match means.last_mut() {
            Some((n, _)) if *n == r.n => {}
            _ => means.push((r.n, 0.0)),
        }
    }
    for m in means.iter_mut() {
        let cell: Vec<f64> = rows.iter().filter(|r| r.n == m.0).map(|r| r.size_over_bound).collect();
        m.1 = cell.iter().sum::<f64>() / cell.len() as f64;
    }
    let lx = |n: usize| (n.max(1) as f64).log2();
    let (x0, x1) = match (means.first(), means.last()) {
        (Some(a), Some(b)) if lx(b.0) > lx(a.0) => (lx(a.0), lx(b.0)),
        (Some(a), _) => (lx(a.0) - 1.0, lx(a.0) + 1.0),
        _ => (0.0, 1.0),
    };
    let ymax = means.iter().map(|m| m.1).fold(0.0f64, f64::max).max(1e-9) * 1.1;
    let px = |n: usize| pad + (lx(n) - x0) / (x1 - x0) * (w - 2.0 * pad);
    let py = |y: f64| h - pad - y / ymax * (h - 2.0 * pad);
    let mut s = String::new();
    let _ = writeln!(s, r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}">"#);
    let _ = writeln!(s, r#"<rect width="100%" height="100%" fill="white"/>"#);
    let _ = writeln!(
        s,
        r#"<line x1="{pad}" y1="{b}" x2="{r}" y2="{b}" stroke="black"/><line x1="{pad}" y1="{pad}" x2="{pad}" y2="{b}" stroke="black"/>"#,
        b = h - pad,
        r = w - pad
    );
    let class = rows.first().map(|r| r.class.to_string()).unwrap_or_default();
    let _ = writeln!(s, r#"<text x="{pad}" y="30" font-family="sans-serif" font-size="14">{class}: size / n(log2 n + 1)^e</text>"#);
    let pts: Vec<String> = means.iter().map(|&(n, y)| format!("{:.1},{:.1}", px(n), py(y))).collect();
    let _ = writeln!(s, r#"<polyline fill="none" stroke="steelblue" stroke-width="2" points="{}"/>"#, pts.join(" "));
    for &(n, y) in &means {
        let _ = writeln!(
            s,
            r#"<circle cx="{:.1}" cy="{:.1}" r="3" fill="steelblue"/><text x="{:.1}" y="{}" font-family="sans-serif" font-size="11" text-anchor="middle">{n}</text>"#,
            px(n),
            py(y),
            px(n),
            h - pad + 16.0
        );
    }
    let _ = writeln!(
        s,
        r#"<text x="5" y="{pad}" font-family="sans-serif" font-size="11">{ymax:.3}</text><text x="5" y="{}" font-family="sans-serif" font-size="11">0</text>"#,
        h - pad
    );
    s.push_str("</svg>\n");
    s
}
