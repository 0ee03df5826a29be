//! Command-line front end.
//!
//! Exit codes: 0 success or valid, 1 verification failure, 2 usage or
//! format error.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

use bicover::bench::{self, BenchClass};
use bicover::capped::cover_capped;
use bicover::compressed::{
    apsp_via_cover, bfs_via_cover, charging_certificate, cover_halfplanes_by_slope, cover_halfplanes_by_star,
    spanner_3hop, verify_spanner, zarankiewicz_certificate, UNREACHABLE,
};
use bicover::dominance::{partition_bigraph, partition_graph};
use bicover::gen::{self, manifest_line};
use bicover::io::{cover_to_string, graph_to_string, parse_cover, parse_instance, Instance};
use bicover::lshapes::{cover_grounded_l, cover_x_grounded_l};
use bicover::segments::cover_bichromatic_segments;
use bicover::segtree::{cover_boxes, cover_intervals};
use bicover::semilinear::cover_semilinear;
use bicover::{trivial_cover, validate_cover, BicliqueCover, Checking, CoverMode, Error, Graph};

#[derive(Parser)]
#[command(name = "bicover", version, about = "Biclique covers of geometric graphs")]
struct Cli {
    /// Seed for generators and the benchmark.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Validate preconditions (default).
    #[arg(long, global = true, conflicts_with = "fast")]
    strict: bool,
    /// Skip precondition validation; results on invalid input are unspecified.
    #[arg(long, global = true)]
    fast: bool,
    /// Layout of stats lines.
    #[arg(long, global = true, value_enum, default_value_t = Format::Plain)]
    format: Format,
    /// Report 0 milliseconds so output is reproducible.
    #[arg(long, global = true)]
    no_timing: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    /// Space-separated values.
    Plain,
    /// `key=value` pairs.
    Kv,
}

#[derive(Subcommand)]
enum Cmd {
    /// Generate an instance file and its `.manifest` sidecar.
    Gen(GenArgs),
    /// Build a cover of an instance.
    Cover(CoverArgs),
    /// Validate a cover against a graph or a geometric instance.
    Verify(VerifyArgs),
    /// BFS distances from a root, computed on the cover.
    Bfs(BfsArgs),
    /// All-pairs distances computed on the cover.
    Apsp(ApspArgs),
    /// Extract the 3-hop spanner of a cover.
    Spanner(SpannerArgs),
    /// Emit a lower-bound certificate.
    Cert(CertArgs),
    /// Measure cover sizes against their bounds.
    Bench(BenchArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum GenClass {
    Terrain,
    Capped,
    Intervals,
    Boxes,
    Segments,
    Lshapes,
    Erdos,
    SemilinearDemo,
    Semilinear,
    Points,
    Bipoints,
    Graph,
    UnitDisk,
}

#[derive(Clone, Copy, ValueEnum)]
enum LMode {
    Diag,
    Xaxis,
}

#[derive(Args)]
struct GenArgs {
    #[arg(value_enum)]
    class: GenClass,
    #[arg(long, default_value_t = 100)]
    n: usize,
    /// Grid parameter for erdos and unit-disk.
    #[arg(long, default_value_t = 2)]
    k: usize,
    /// Dimension for boxes, points, bipoints and semilinear.
    #[arg(long, default_value_t = 2)]
    d: usize,
    /// Edge probability for capped and graph.
    #[arg(long, default_value_t = 0.1)]
    p: f64,
    /// Red segments (default n/2).
    #[arg(long)]
    red: Option<usize>,
    /// Blue segments (default n - red).
    #[arg(long)]
    blue: Option<usize>,
    /// Longest interval length.
    #[arg(long, default_value_t = 16)]
    max_len: i64,
    #[arg(long, default_value_t = 1)]
    ell: usize,
    #[arg(long, default_value_t = 2)]
    t: usize,
    #[arg(long, value_enum, default_value_t = LMode::Diag)]
    mode: LMode,
    /// Output file (stdout if absent; the manifest then goes to stderr).
    #[arg(short, long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Algorithm {
    Auto,
    Intervals,
    Boxes,
    Segments,
    Capped,
    Lshapes,
    Dominance,
    Semilinear,
    HalfplanesSlope,
    HalfplanesStar,
    Trivial,
}

#[derive(Args)]
struct CoverArgs {
    instance: PathBuf,
    #[arg(short, long, value_enum, default_value_t = Algorithm::Auto)]
    algorithm: Algorithm,
    /// Cover output (stdout if absent; stats then go to stderr).
    #[arg(short, long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Graph file, or any instance file together with `--oracle`.
    input: PathBuf,
    cover: PathBuf,
    /// Override the mode stored in the cover file.
    #[arg(long)]
    mode: Option<CoverMode>,
    /// Rebuild the edge set by brute force from the instance.
    #[arg(long)]
    oracle: bool,
}

#[derive(Args)]
struct BfsArgs {
    cover: PathBuf,
    #[arg(long)]
    root: usize,
    /// Vertex count (default: largest id in the cover plus one).
    #[arg(long)]
    n: Option<usize>,
}

#[derive(Args)]
struct ApspArgs {
    cover: PathBuf,
    #[arg(long)]
    n: Option<usize>,
}

#[derive(Args)]
struct SpannerArgs {
    cover: PathBuf,
    #[arg(long)]
    n: Option<usize>,
    /// Check the spanner against this graph or instance.
    #[arg(long)]
    verify: Option<PathBuf>,
    /// Hop bound for `--verify`.
    #[arg(long, default_value_t = 3)]
    t: usize,
    #[arg(short, long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum CertKind {
    Zarankiewicz,
    Charging,
}

#[derive(Args)]
struct CertArgs {
    #[arg(value_enum)]
    kind: CertKind,
    /// Graph or instance (halfplanes for charging; its incidence graph is
    /// used for zarankiewicz).
    input: PathBuf,
    #[arg(long, default_value_t = 2)]
    t: usize,
    /// Skip the `K_{t,t}` scan and take freeness as given.
    #[arg(long)]
    assume_free: bool,
    /// Cover to audit (charging).
    #[arg(long)]
    cover: Option<PathBuf>,
    #[arg(short, long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct BenchArgs {
    /// intervals, complete, points<d>, bipoints<d>, boxes<d>, semilinear,
    /// terrain, capped, lshapes-diag, lshapes-xaxis, segments, erdos.
    class: String,
    /// Comma-separated sizes (grid parameter k for erdos).
    #[arg(long, value_delimiter = ',', default_value = "256")]
    n: Vec<usize>,
    #[arg(long, default_value_t = 1)]
    reps: usize,
    /// CSV output (stdout if absent).
    #[arg(long)]
    csv: Option<PathBuf>,
    /// Optional SVG plot of size/bound against n.
    #[arg(long)]
    svg: Option<PathBuf>,
}

/// Failure with its exit code.
struct Fail(u8, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::ContainsKtt { .. } | Error::Soundness { .. } => 1,
            _ => 2,
        };
        Fail(code, e.to_string())
    }
}

type Out = std::result::Result<(), Fail>;

fn usage(msg: impl Into<String>) -> Fail {
    Fail(2, msg.into())
}

fn read(path: &Path) -> std::result::Result<String, Fail> {
    fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Out {
    fs::write(path, text).map_err(|e| usage(format!("{}: {e}", path.display())))
}

/// Writes to `out` or stdout.
fn emit(out: Option<&Path>, text: &str) -> Out {
    match out {
        Some(p) => write(p, text),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

/// Prints a side line to stdout when the main output went to a file, to
/// stderr otherwise.
fn side_line(to_file: bool, line: &str) {
    if to_file {
        println!("{line}");
    } else {
        eprintln!("{line}");
    }
}

struct Ctx {
    seed: u64,
    checking: Checking,
    format: Format,
    timing: bool,
}

impl Ctx {
    fn stats(&self, fields: &[(&str, String)]) -> String {
        match self.format {
            Format::Plain => fields.iter().map(|(_, v)| v.as_str()).collect::<Vec<_>>().join(" "),
            Format::Kv => fields.iter().map(|(k, v)| format!("{k}={v}")).collect::<Vec<_>>().join(" "),
        }
    }

    fn millis(&self, start: Instant) -> String {
        if self.timing {
            format!("{:.3}", start.elapsed().as_secs_f64() * 1e3)
        } else {
            "0".into()
        }
    }
}

fn cmd_gen(ctx: &Ctx, a: &GenArgs) -> Out {
    let seed = ctx.seed;
    let n = a.n;
    let nparam = || vec![("n", n.to_string())];
    let (name, params, seeded, inst): (&str, Vec<(&str, String)>, bool, Instance) = match a.class {
        GenClass::Terrain => ("terrain", nparam(), true, Instance::Terrain(gen::gen_terrain(n, seed)?.0)),
        GenClass::Capped => {
            if !(0.0..=1.0).contains(&a.p) {
                return Err(usage("--p must lie in [0, 1]"));
            }
            let g = gen::gen_capped_closure(n, a.p, seed);
            ("capped", vec![("n", n.to_string()), ("p", a.p.to_string())], true, Instance::Graph(g))
        }
        GenClass::Graph => {
            if !(0.0..=1.0).contains(&a.p) {
                return Err(usage("--p must lie in [0, 1]"));
            }
            let g = gen::gen_random_graph(n, a.p, seed);
            ("graph", vec![("n", n.to_string()), ("p", a.p.to_string())], true, Instance::Graph(g))
        }
        GenClass::Intervals => {
            if a.max_len < 0 {
                return Err(usage("--max-len must be non-negative"));
            }
            let v = gen::gen_intervals_with(n, a.max_len, seed);
            ("intervals", vec![("n", n.to_string()), ("max_len", a.max_len.to_string())], true, Instance::Intervals(v))
        }
        GenClass::Boxes => {
            if a.d == 0 {
                return Err(usage("--d must be at least 1"));
            }
            let boxes = gen::gen_boxes(n, a.d, seed);
            ("boxes", vec![("n", n.to_string()), ("d", a.d.to_string())], true, Instance::Boxes { d: a.d, boxes })
        }
        GenClass::Segments => {
            let red = a.red.unwrap_or(n / 2);
            let blue = a.blue.unwrap_or(n.saturating_sub(red));
            let v = gen::gen_segments(red, blue, seed);
            ("segments", vec![("red", red.to_string()), ("blue", blue.to_string())], true, Instance::Segments(v))
        }
        GenClass::Lshapes => match a.mode {
            LMode::Diag => ("lshapes", vec![("n", n.to_string()), ("mode", "diag".into())], true, {
                Instance::Diagonal(gen::gen_lshapes_diag(n, seed))
            }),
            LMode::Xaxis => ("lshapes", vec![("n", n.to_string()), ("mode", "xaxis".into())], true, {
                Instance::XAxis(gen::gen_lshapes_x(n, seed))
            }),
        },
        GenClass::Erdos => {
            if a.k == 0 {
                return Err(usage("--k must be at least 1"));
            }
            ("erdos", vec![("k", a.k.to_string())], false, Instance::Halfplanes(gen::gen_erdos(a.k).config))
        }
        GenClass::UnitDisk => {
            let (g, _) = gen::gen_unit_disk_incidence(a.k);
            ("unit-disk", vec![("k", a.k.to_string())], false, Instance::Graph(g))
        }
        GenClass::SemilinearDemo => {
            ("semilinear-demo", nparam(), true, Instance::Semilinear(gen::gen_semilinear_demo(n, seed)))
        }
        GenClass::Semilinear => {
            let s = gen::gen_semilinear(n, a.d, a.ell, a.t, seed)?;
            let params =
                vec![("n", n.to_string()), ("d", a.d.to_string()), ("ell", a.ell.to_string()), ("t", a.t.to_string())];
            ("semilinear", params, true, Instance::Semilinear(s))
        }
        GenClass::Points => {
            if a.d == 0 {
                return Err(usage("--d must be at least 1"));
            }
            let p = gen::gen_points(n, a.d, seed);
            ("points", vec![("n", n.to_string()), ("d", a.d.to_string())], true, Instance::Points(p))
        }
        GenClass::Bipoints => {
            if a.d == 0 {
                return Err(usage("--d must be at least 1"));
            }
            let b = gen::gen_bipoints(n / 2, n - n / 2, a.d, seed);
            ("bipoints", vec![("n", n.to_string()), ("d", a.d.to_string())], true, Instance::Bipoints(b))
        }
    };
    let manifest = manifest_line(name, &params, seeded.then_some(seed));
    emit(a.out.as_deref(), &inst.to_text())?;
    match &a.out {
        Some(p) => {
            let mut m = p.clone().into_os_string();
            m.push(".manifest");
            write(Path::new(&m), &format!("{manifest}\n"))
        }
        None => {
            eprintln!("{manifest}");
            Ok(())
        }
    }
}

fn mismatch(algo: Algorithm, inst: &Instance) -> Fail {
    let name = algo.to_possible_value().map(|v| v.get_name().to_owned()).unwrap_or_default();
    usage(format!("algorithm `{name}` does not apply to a `{}` instance", inst.kind()))
}

fn build_cover(ctx: &Ctx, algo: Algorithm, inst: &Instance) -> std::result::Result<BicliqueCover, Fail> {
    use Algorithm as A;
    let chk = ctx.checking;
    if algo == A::Auto {
        return Ok(inst.default_cover(chk)?);
    }
    Ok(match (algo, inst) {
        (A::Intervals, Instance::Intervals(v)) => cover_intervals(v)?,
        (A::Boxes, Instance::Boxes { d, boxes }) => cover_boxes(boxes, *d)?,
        (A::Boxes, Instance::Intervals(v)) => {
            let boxes: Vec<_> = v.iter().map(|&iv| vec![iv]).collect();
            cover_boxes(&boxes, 1)?
        }
        (A::Segments, Instance::Segments(v)) => cover_bichromatic_segments(v, chk)?,
        (A::Capped, Instance::Graph(g)) => {
            if !g.is_ordered() {
                return Err(usage("capped covers need an ordered graph (header flag 1)"));
            }
            cover_capped(g, chk)?
        }
        (A::Capped, Instance::Terrain(_)) => cover_capped(&inst.oracle()?, chk)?,
        (A::Lshapes, Instance::Diagonal(v)) => cover_grounded_l(v)?,
        (A::Lshapes, Instance::XAxis(v)) => cover_x_grounded_l(v)?,
        (A::Dominance, Instance::Points(p)) => partition_graph(p),
        (A::Dominance, Instance::Bipoints(b)) => partition_bigraph(b),
        (A::Semilinear, Instance::Semilinear(s)) => cover_semilinear(s)?,
        (A::HalfplanesSlope, Instance::Halfplanes(c)) => cover_halfplanes_by_slope(c)?,
        (A::HalfplanesStar, Instance::Halfplanes(c)) => cover_halfplanes_by_star(c)?,
        (A::Trivial, _) => trivial_cover(&inst.oracle()?),
        (algo, inst) => return Err(mismatch(algo, inst)),
    })
}

fn cmd_cover(ctx: &Ctx, a: &CoverArgs) -> Out {
    let inst = parse_instance(&read(&a.instance)?)?;
    let start = Instant::now();
    let cover = build_cover(ctx, a.algorithm, &inst)?;
    let millis = ctx.millis(start);
    let n = inst.n();
    let m = cover.covered_edges().len();
    let mult = cover.vertex_multiplicity(n).into_iter().max().unwrap_or(0);
    emit(a.out.as_deref(), &cover_to_string(&cover))?;
    let line = ctx.stats(&[
        ("n", n.to_string()),
        ("m", m.to_string()),
        ("size", cover.size().to_string()),
        ("bicliques", cover.len().to_string()),
        ("max_multiplicity", mult.to_string()),
        ("millis", millis),
    ]);
    side_line(a.out.is_some(), &line);
    Ok(())
}

/// The graph of a file: a graph file as is, any other instance through its
/// brute-force oracle when allowed.
fn load_graph(path: &Path, oracle: bool) -> std::result::Result<Graph, Fail> {
    match parse_instance(&read(path)?)? {
        Instance::Graph(g) => Ok(g),
        inst if oracle => Ok(inst.oracle()?),
        inst => Err(usage(format!("{} is a `{}` instance; pass --oracle to rebuild its graph", path.display(), inst.kind()))),
    }
}

fn cmd_verify(a: &VerifyArgs) -> Out {
    let g = load_graph(&a.input, a.oracle)?;
    let mut cover = parse_cover(&read(&a.cover)?)?;
    if let Some(m) = a.mode {
        cover = cover.with_mode(m);
    }
    let r = validate_cover(&g, &cover)?;
    for (u, v) in &r.uncovered_edges {
        println!("uncovered {u} {v}");
    }
    for (b, u, v) in &r.non_edges_in_bicliques {
        println!("non-edge {u} {v} in biclique {b}");
    }
    for (u, v, k) in &r.multiplicity_violations {
        println!("multiplicity {u} {v} {k}");
    }
    let verdict = if r.valid { "valid" } else { "invalid" };
    println!(
        "{verdict} mode={} size={} max_multiplicity={} uncovered={} non_edges={} multiplicity_violations={}",
        cover.mode(),
        r.measured_size,
        r.max_vertex_multiplicity,
        r.uncovered_edges.len(),
        r.non_edges_in_bicliques.len(),
        r.multiplicity_violations.len()
    );
    if r.valid {
        Ok(())
    } else {
        Err(Fail(1, "cover is invalid".into()))
    }
}

fn cover_n(cover: &BicliqueCover, n: Option<usize>) -> std::result::Result<usize, Fail> {
    let need = cover.max_vertex_id().map_or(0, |v| v + 1);
    match n {
        Some(n) if n < need => Err(usage(format!("--n {n} is smaller than the largest vertex id plus one ({need})"))),
        Some(n) => Ok(n),
        None => Ok(need),
    }
}

fn dist_line(d: &[u32]) -> String {
    d.iter().map(|&x| if x == UNREACHABLE { "inf".to_owned() } else { x.to_string() }).collect::<Vec<_>>().join(" ")
}

fn cmd_bfs(a: &BfsArgs) -> Out {
    let cover = parse_cover(&read(&a.cover)?)?;
    let n = cover_n(&cover, a.n)?;
    println!("{}", dist_line(&bfs_via_cover(n, &cover, a.root)?));
    Ok(())
}

fn cmd_apsp(a: &ApspArgs) -> Out {
    let cover = parse_cover(&read(&a.cover)?)?;
    let n = cover_n(&cover, a.n)?;
    let mut s = String::new();
    for row in apsp_via_cover(n, &cover)? {
        s.push_str(&dist_line(&row));
        s.push('\n');
    }
    print!("{s}");
    Ok(())
}

fn cmd_spanner(a: &SpannerArgs) -> Out {
    let cover = parse_cover(&read(&a.cover)?)?;
    let n = cover_n(&cover, a.n)?;
    let h = spanner_3hop(&cover);
    let hg = Graph::new(n, h.iter().copied(), false)?;
    emit(a.out.as_deref(), &graph_to_string(&hg))?;
    side_line(a.out.is_some(), &format!("spanner_edges={} cover_size={}", hg.m(), cover.size()));
    if let Some(path) = &a.verify {
        let g = load_graph(path, true)?;
        let ok = verify_spanner(&g, hg.edges(), a.t)?;
        side_line(a.out.is_some(), &format!("verified t={} {ok}", a.t));
        if !ok {
            return Err(Fail(1, format!("some edge has no path of length at most {} in the spanner", a.t)));
        }
    }
    Ok(())
}

fn cmd_cert(a: &CertArgs) -> Out {
    let inst = parse_instance(&read(&a.input)?)?;
    let cert = match a.kind {
        CertKind::Zarankiewicz => {
            let g = match &inst {
                Instance::Graph(g) => g.clone(),
                Instance::Halfplanes(c) => c.incidence_graph()?,
                other => other.oracle()?,
            };
            zarankiewicz_certificate(&g, a.t, a.assume_free)?
        }
        CertKind::Charging => {
            let Instance::Halfplanes(cfg) = &inst else {
                return Err(usage(format!("charging certificates need a halfplanes file, found `{}`", inst.kind())));
            };
            let cover = match &a.cover {
                Some(p) => Some(parse_cover(&read(p)?)?),
                None => None,
            };
            charging_certificate(cfg, cover.as_ref())?
        }
    };
    emit(a.out.as_deref(), &cert.to_text())?;
    if cert.violations.is_empty() {
        Ok(())
    } else {
        Err(Fail(1, format!("{} biclique(s) violate the charging inequality", cert.violations.len())))
    }
}

fn cmd_bench(ctx: &Ctx, a: &BenchArgs) -> Out {
    let class: BenchClass = a.class.parse().map_err(usage)?;
    let rows = bench::run(class, &a.n, a.reps, ctx.seed, ctx.timing)?;
    emit(a.csv.as_deref(), &bench::to_csv(&rows))?;
    if let Some(p) = &a.svg {
        write(p, &bench::to_svg(&rows))?;
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let ctx = Ctx {
        seed: cli.seed,
        checking: if cli.fast { Checking::Fast } else { Checking::Strict },
        format: cli.format,
        timing: !cli.no_timing,
    };
    let r = match &cli.cmd {
        Cmd::Gen(a) => cmd_gen(&ctx, a),
        Cmd::Cover(a) => cmd_cover(&ctx, a),
        Cmd::Verify(a) => cmd_verify(a),
        Cmd::Bfs(a) => cmd_bfs(a),
        Cmd::Apsp(a) => cmd_apsp(a),
        Cmd::Spanner(a) => cmd_spanner(a),
        Cmd::Cert(a) => cmd_cert(a),
        Cmd::Bench(a) => cmd_bench(&ctx, a),
    };
    match r {
        Ok(()) => ExitCode::SUCCESS,
        Err(Fail(code, msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(code)
        }
    }
}
