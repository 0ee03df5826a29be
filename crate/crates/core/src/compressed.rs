//! Algorithms that use a biclique cover as a compressed graph, and lower
//! bounds on cover size.
//!
//! The hub graph replaces every biclique by a hub joined to its vertices.
//! Each hub has two states, entered from the left or from the right side, so
//! a walk through a hub always crosses the biclique; hub distances are twice
//! the graph distances.

use std::collections::HashMap;
use std::fmt::Write as _;

use sha2::{Digest, Sha256};

use crate::dominance::{bigraph_raw, ranked_pair};
use crate::error::{Error, Result};
use crate::graph::{Biclique, BicliqueCover, CoverMode, Graph};
use crate::io;
use crate::rational::{eval_affine, widen, Rational, Wide};

/// Distance of a vertex that cannot be reached.
pub const UNREACHABLE: u32 = u32::MAX;

#[derive(Debug, Clone)]
pub struct HubGraph {
    n: usize,
    /// Memberships of vertex `u`: `member[off[u]..off[u + 1]]`, each
    /// `2 * biclique + side` with side 0 for left.
    off: Vec<usize>,
    member: Vec<usize>,
    sides: Vec<[Vec<usize>; 2]>,
}

impl HubGraph {
    pub fn new(n: usize, cover: &BicliqueCover) -> Result<Self> {
        if let Some(v) = cover.max_vertex_id().filter(|&v| v >= n) {
            return Err(Error::VertexOutOfRange { vertex: v, n });
        }
        let mut off = vec![0usize; n + 1];
        for b in cover.bicliques() {
            for u in b.vertices() {
                off[u + 1] += 1;
            }
        }
        for u in 0..n {
            off[u + 1] += off[u];
        }
        let mut fill = off.clone();
        let mut member = vec![0usize; off[n]];
        let mut sides = Vec::with_capacity(cover.len());
        for (h, b) in cover.bicliques().iter().enumerate() {
            for (side, list) in [b.left(), b.right()].into_iter().enumerate() {
                for &u in list {
                    member[fill[u]] = 2 * h + side;
                    fill[u] += 1;
                }
            }
            sides.push([b.left().to_vec(), b.right().to_vec()]);
        }
        Ok(HubGraph { n, off, member, sides })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of hub edges, equal to the cover size.
    pub fn edge_count(&self) -> usize {
        self.member.len()
    }

    /// Graph distances from `root`, in `O(n + s)` time.
    pub fn bfs(&self, root: usize) -> Result<Vec<u32>> {
        if root >= self.n {
            return Err(Error::VertexOutOfRange { vertex: root, n: self.n });
        }
        let n = self.n;
        // States: original vertices, then two per hub.
        let mut dist = vec![UNREACHABLE; n + 2 * self.sides.len()];
        let mut queue = std::collections::VecDeque::new();
        dist[root] = 0;
        queue.push_back(root);
        while let Some(x) = queue.pop_front() {
            let d = dist[x] + 1;
            if x < n {
                for &state in &self.member[self.off[x]..self.off[x + 1]] {
                    if dist[n + state] == UNREACHABLE {
                        dist[n + state] = d;
                        queue.push_back(n + state);
                    }
                }
            } else {
                let state = x - n;
                for &w in &self.sides[state / 2][1 - state % 2] {
                    if dist[w] == UNREACHABLE {
                        dist[w] = d;
                        queue.push_back(w);
                    }
                }
            }
        }
        dist.truncate(n);
        for d in &mut dist {
            if *d != UNREACHABLE {
                *d /= 2;
            }
        }
        Ok(dist)
    }
}

/// BFS distances of the graph covered by `cover`, computed on its hub graph.
pub fn bfs_via_cover(n: usize, cover: &BicliqueCover, root: usize) -> Result<Vec<u32>> {
    HubGraph::new(n, cover)?.bfs(root)
}

/// All-pairs distances: one hub-graph BFS per vertex.
pub fn apsp_via_cover(n: usize, cover: &BicliqueCover) -> Result<Vec<Vec<u32>>> {
    let hub = HubGraph::new(n, cover)?;
    (0..n).map(|u| hub.bfs(u)).collect()
}

/// Textbook BFS on adjacency lists.
pub fn bfs_adjacency(g: &Graph, root: usize) -> Result<Vec<u32>> {
    if root >= g.n() {
        return Err(Error::VertexOutOfRange { vertex: root, n: g.n() });
    }
    let adj = g.adjacency();
    let mut dist = vec![UNREACHABLE; g.n()];
    let mut queue = std::collections::VecDeque::from([root]);
    dist[root] = 0;
    while let Some(u) = queue.pop_front() {
        for &w in &adj[u] {
            if dist[w] == UNREACHABLE {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    Ok(dist)
}

/// Replaces each biclique by two stars centered at the minimum of each side.
/// Returns sorted, deduplicated edges `(u, v)` with `u < v`.
pub fn spanner_3hop(cover: &BicliqueCover) -> Vec<(usize, usize)> {
    let mut edges = Vec::with_capacity(cover.size());
    let mut push = |a: usize, b: usize| edges.push((a.min(b), a.max(b)));
    for b in cover.bicliques() {
        let (cl, cr) = (b.left()[0], b.right()[0]);
        for &u in b.left() {
            push(cr, u);
        }
        for &w in b.right() {
            push(cl, w);
        }
    }
    edges.sort_unstable();
    edges.dedup();
    edges
}

/// Largest vertex count for which balls are kept as bitsets.
const BITSET_LIMIT: usize = 8192;

/// True iff every edge of `g` has endpoints at distance at most `t` in `h`.
/// Errors when `h` has an edge that is not in `g`.
pub fn verify_spanner(g: &Graph, h: &[(usize, usize)], t: usize) -> Result<bool> {
    for &(u, v) in h {
        if u.max(v) >= g.n() || u == v || !g.has_edge(u, v) {
            return Err(Error::NotASubgraph(u, v));
        }
    }
    if g.m() == 0 {
        return Ok(true);
    }
    if t == 0 {
        return Ok(false);
    }
    let hg = Graph::new(g.n(), h.iter().copied(), false)?;
    let adj = hg.adjacency();
    if g.n() <= BITSET_LIMIT {
        let balls = Balls::new(&adj, t.div_ceil(2), t / 2);
        Ok(g.edges().iter().all(|&(u, v)| balls.meet(u, v)))
    } else {
        Ok(g.edges().iter().all(|&(u, v)| within(&adj, u, v, t)))
    }
}

struct Balls {
    words: usize,
    outer: Vec<u64>,
    inner: Vec<u64>,
}

impl Balls {
    /// Balls of radius `r1` and `r2 ≤ r1` around every vertex.
    fn new(adj: &[Vec<usize>], r1: usize, r2: usize) -> Self {
        let n = adj.len();
        let words = n.div_ceil(64);
        let mut cur = vec![0u64; n * words];
        for u in 0..n {
            cur[u * words + u / 64] |= 1 << (u % 64);
        }
        let mut inner = if r2 == 0 { cur.clone() } else { Vec::new() };
        for r in 1..=r1 {
            let mut next = cur.clone();
            for (u, list) in adj.iter().enumerate() {
                for &w in list {
                    let (dst, src) = (u * words, w * words);
                    for k in 0..words {
                        next[dst + k] |= cur[src + k];
                    }
                }
            }
            cur = next;
            if r == r2 {
                inner = cur.clone();
            }
        }
        Balls { words, outer: cur, inner }
    }

    fn meet(&self, u: usize, v: usize) -> bool {
        let a = &self.outer[u * self.words..(u + 1) * self.words];
        let b = &self.inner[v * self.words..(v + 1) * self.words];
        a.iter().zip(b).any(|(x, y)| x & y != 0)
    }
}

/// Depth-bounded BFS from `u` looking for `v`.
fn within(adj: &[Vec<usize>], u: usize, v: usize, t: usize) -> bool {
    let mut seen = std::collections::HashSet::from([u]);
    let mut frontier = vec![u];
    for _ in 0..t {
        let mut next = Vec::new();
        for &x in &frontier {
            for &w in &adj[x] {
                if w == v {
                    return true;
                }
                if seen.insert(w) {
                    next.push(w);
                }
            }
        }
        frontier = next;
    }
    false
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CertificateKind {
    Zarankiewicz,
    Charging,
}

/// Charging audit of one biclique: point count, halfplane count, and the
/// number of incident (point on boundary line) pairs it contains.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AuditRow {
    pub biclique: usize,
    pub points: usize,
    pub halfplanes: usize,
    pub iota: usize,
}

/// A lower bound on the size of every biclique cover of a graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub kind: CertificateKind,
    /// SHA-256 of the input in its text format.
    pub digest: String,
    pub bound: usize,
    pub edges: usize,
    /// `t` for Zarankiewicz certificates, the incidence count for charging.
    pub param: usize,
    pub audit: Vec<AuditRow>,
    /// Audit rows with `points + halfplanes < iota`.
    pub violations: Vec<usize>,
}

impl Certificate {
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let kind = match self.kind {
            CertificateKind::Zarankiewicz => "zarankiewicz",
            CertificateKind::Charging => "charging",
        };
        let _ = writeln!(s, "kind {kind}");
        let _ = writeln!(s, "digest {}", self.digest);
        let _ = writeln!(s, "bound {}", self.bound);
        let _ = writeln!(s, "edges {}", self.edges);
        match self.kind {
            CertificateKind::Zarankiewicz => {
                let _ = writeln!(s, "t {}", self.param);
            }
            CertificateKind::Charging => {
                let _ = writeln!(s, "iota {}", self.param);
            }
        }
        for r in &self.audit {
            let _ = writeln!(s, "biclique {} {} {} {}", r.biclique, r.points, r.halfplanes, r.iota);
        }
        for v in &self.violations {
            let _ = writeln!(s, "violation {v}");
        }
        s
    }
}

fn sha256_hex(text: &str) -> String {
    Sha256::digest(text.as_bytes()).iter().fold(String::with_capacity(64), |mut s, b| {
        let _ = write!(s, "{b:02x}");
        s
    })
}

/// Limits of the exhaustive `K_{t,t}` scan.
const SCAN_MAX_T: usize = 3;
const SCAN_MAX_N: usize = 2000;
const SCAN_BUDGET: u128 = 20_000_000;

/// Searches for a `K_{t,t}` subgraph by grouping the `t`-subsets of every
/// neighborhood. Returns `(left, right)` on success.
pub fn find_ktt(g: &Graph, t: usize) -> Result<Option<(Vec<usize>, Vec<usize>)>> {
    if t == 0 {
        return Err(Error::Input("t must be at least 1".into()));
    }
    if t > SCAN_MAX_T || g.n() > SCAN_MAX_N {
        return Err(Error::ScanTooExpensive(format!("t = {t}, n = {} (limits t ≤ 3, n ≤ 2000)", g.n())));
    }
    let adj = g.adjacency();
    let binom = |d: usize| -> u128 { (0..t).fold(1u128, |acc, i| acc * (d - i.min(d)) as u128 / (i as u128 + 1)) };
    let work: u128 = adj.iter().map(|a| binom(a.len())).sum();
    if work > SCAN_BUDGET {
        return Err(Error::ScanTooExpensive(format!("{work} neighborhood subsets")));
    }
    let mut seen: HashMap<Vec<usize>, Vec<usize>> = HashMap::new();
    let mut subset = Vec::with_capacity(t);
    for (v, list) in adj.iter().enumerate() {
        if let Some(hit) = subsets(list, t, 0, &mut subset, &mut |s| {
            let owners = seen.entry(s.to_vec()).or_default();
            owners.push(v);
            (owners.len() == t).then(|| (s.to_vec(), owners.clone()))
        }) {
            return Ok(Some(hit));
        }
    }
    Ok(None)
}

fn subsets<R>(
    list: &[usize],
    t: usize,
    start: usize,
    cur: &mut Vec<usize>,
    f: &mut dyn FnMut(&[usize]) -> Option<R>,
) -> Option<R> {
    if cur.len() == t {
        return f(cur);
    }
    for i in start..list.len() {
        if list.len() - i < t - cur.len() {
            break;
        }
        cur.push(list[i]);
        let r = subsets(list, t, i + 1, cur, f);
        cur.pop();
        if r.is_some() {
            return r;
        }
    }
    None
}

/// `⌈|E| / t⌉` for a `K_{t,t}`-free graph. The graph is scanned unless
/// `assume_free` is set, in which case freeness is the caller's claim.
pub fn zarankiewicz_certificate(g: &Graph, t: usize, assume_free: bool) -> Result<Certificate> {
    if t == 0 {
        return Err(Error::Input("t must be at least 1".into()));
    }
    if !assume_free {
        if let Some((left, right)) = find_ktt(g, t)? {
            return Err(Error::ContainsKtt { t, left, right });
        }
    }
    Ok(Certificate {
        kind: CertificateKind::Zarankiewicz,
        digest: sha256_hex(&io::graph_to_string(g)),
        bound: g.m().div_ceil(t),
        edges: g.m(),
        param: t,
        audit: Vec::new(),
        violations: Vec::new(),
    })
}

/// Points and closed lower halfplanes `y ≤ m x + b`. In the associated graph,
/// points are vertices `0..np` and halfplanes `np..np + nl`; a point is
/// adjacent to every halfplane containing it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HalfplaneConfig {
    pub points: Vec<(Rational, Rational)>,
    /// `(m, b)` per boundary line `y = m x + b`.
    pub lines: Vec<(Rational, Rational)>,
}

impl HalfplaneConfig {
    fn line_at(&self, line: usize, x: &Rational) -> Result<Wide> {
        let (m, b) = self.lines[line];
        eval_affine(&[b, m], std::slice::from_ref(x))
    }

    /// `p_y` compared with the boundary at `p_x`.
    fn side(&self, p: usize, line: usize) -> Result<std::cmp::Ordering> {
        let (x, y) = &self.points[p];
        Ok(widen(y).cmp(&self.line_at(line, x)?))
    }

    pub fn contains(&self, p: usize, line: usize) -> Result<bool> {
        Ok(self.side(p, line)?.is_le())
    }

    pub fn incident(&self, p: usize, line: usize) -> Result<bool> {
        Ok(self.side(p, line)?.is_eq())
    }

    pub fn n(&self) -> usize {
        self.points.len() + self.lines.len()
    }

    /// Bipartite containment graph.
    pub fn containment_graph(&self) -> Result<Graph> {
        let np = self.points.len();
        let mut edges = Vec::new();
        for p in 0..np {
            for l in 0..self.lines.len() {
                if self.contains(p, l)? {
                    edges.push((p, np + l));
                }
            }
        }
        Graph::new(self.n(), edges, false)
    }

    /// Bipartite graph of points lying on boundary lines.
    pub fn incidence_graph(&self) -> Result<Graph> {
        let np = self.points.len();
        let mut edges = Vec::new();
        for p in 0..np {
            for l in 0..self.lines.len() {
                if self.incident(p, l)? {
                    edges.push((p, np + l));
                }
            }
        }
        Graph::new(self.n(), edges, false)
    }

    /// Number of (point, line) pairs with the point on the line.
    pub fn incidences(&self) -> Result<usize> {
        Ok(self.incidence_graph()?.m())
    }
}

/// Lower bound equal to the number of incidences. With a cover, every
/// biclique is audited: each cross pair must be a point inside a halfplane,
/// and the per-biclique counts are recorded.
pub fn charging_certificate(cfg: &HalfplaneConfig, cover: Option<&BicliqueCover>) -> Result<Certificate> {
    let np = cfg.points.len();
    let iota = cfg.incidences()?;
    let mut audit = Vec::new();
    let mut violations = Vec::new();
    if let Some(cover) = cover {
        if let Some(v) = cover.max_vertex_id().filter(|&v| v >= cfg.n()) {
            return Err(Error::VertexOutOfRange { vertex: v, n: cfg.n() });
        }
        for (i, b) in cover.bicliques().iter().enumerate() {
            let mut inc = 0;
            for (u, v) in b.pairs() {
                let (p, h) = if u < np { (u, v) } else { (v, u) };
                if p >= np || h < np || !cfg.contains(p, h - np)? {
                    return Err(Error::Soundness { biclique: i, u, v });
                }
                if cfg.incident(p, h - np)? {
                    inc += 1;
                }
            }
            let points = b.vertices().filter(|&u| u < np).count();
            let row = AuditRow { biclique: i, points, halfplanes: b.size() - points, iota: inc };
            if row.points + row.halfplanes < row.iota {
                violations.push(i);
            }
            audit.push(row);
        }
    }
    Ok(Certificate {
        kind: CertificateKind::Charging,
        digest: sha256_hex(&io::halfplanes_to_string(cfg)),
        bound: iota,
        edges: cfg.containment_graph()?.m(),
        param: iota,
        audit,
        violations,
    })
}

/// Cover of the containment graph: for each slope `m`, a point is below the
/// line `(m, b)` iff `p_y - m p_x ≤ b`, a one-dimensional dominance relation.
pub fn cover_halfplanes_by_slope(cfg: &HalfplaneConfig) -> Result<BicliqueCover> {
    let np = cfg.points.len();
    let mut groups: Vec<(Rational, Vec<usize>)> = Vec::new();
    let mut order: Vec<usize> = (0..cfg.lines.len()).collect();
    order.sort_by_key(|&l| (cfg.lines[l].0, l));
    for l in order {
        match groups.last_mut() {
            Some((m, ls)) if *m == cfg.lines[l].0 => ls.push(l),
            _ => groups.push((cfg.lines[l].0, vec![l])),
        }
    }
    let mut out = Vec::new();
    for (m, lines) in groups {
        let mut keys = Vec::with_capacity(np);
        for (x, y) in &cfg.points {
            // p_y - m p_x, as the boundary of slope m and offset 0 subtracted.
            let off = eval_affine(&[Rational::from_integer(0), m], std::slice::from_ref(x))?;
            keys.push(widen(y) - off);
        }
        let (left, right) = ranked_pair(
            1,
            np,
            |i, _| (keys[i], 0u8),
            lines.len(),
            |j, _| (widen(&cfg.lines[lines[j]].1), 1u8),
        );
        let mut raw = Vec::new();
        bigraph_raw(&left, np, &right, lines.len(), &mut raw);
        for (p, l) in raw {
            out.push(Biclique::from_sorted(p, l.into_iter().map(|j| np + lines[j]).collect()));
        }
    }
    Ok(BicliqueCover::new(out, CoverMode::Partition))
}

/// One star per halfplane: the halfplane with all points it contains.
pub fn cover_halfplanes_by_star(cfg: &HalfplaneConfig) -> Result<BicliqueCover> {
    let np = cfg.points.len();
    let mut out = Vec::new();
    for l in 0..cfg.lines.len() {
        let mut pts = Vec::new();
        for p in 0..np {
            if cfg.contains(p, l)? {
                pts.push(p);
            }
        }
        if !pts.is_empty() {
            out.push(Biclique::from_sorted(pts, vec![np + l]));
        }
    }
    Ok(BicliqueCover::new(out, CoverMode::Partition))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use crate::graph::{cover_complete, trivial_cover, validate_cover};
    use crate::rational::int;

    fn bc(l: &[usize], r: &[usize]) -> Biclique {
        Biclique::new(l.to_vec(), r.to_vec()).unwrap()
    }

    #[test]
    fn star_distances() {
        let c = BicliqueCover::new(vec![bc(&[0], &[1, 2, 3])], CoverMode::Partition);
        assert_eq!(bfs_via_cover(4, &c, 1).unwrap(), vec![1, 0, 2, 2]);
        assert!(bfs_via_cover(4, &c, 4).is_err());
    }

    #[test]
    fn complete_graph_distances() {
        assert_eq!(bfs_via_cover(4, &cover_complete(4), 0).unwrap(), vec![0, 1, 1, 1]);
    }

    #[test]
    fn same_side_vertices_are_not_adjacent() {
        // Path 0-2-1 realized by one biclique ({0,1},{2}); 0 and 1 are at distance 2.
        let c = BicliqueCover::new(vec![bc(&[0, 1], &[2])], CoverMode::Partition);
        assert_eq!(bfs_via_cover(4, &c, 0).unwrap(), vec![0, 2, 1, UNREACHABLE]);
    }

    #[test]
    fn apsp_path() {
        let g = Graph::new(5, (0..4).map(|i| (i, i + 1)), false).unwrap();
        let d = apsp_via_cover(5, &trivial_cover(&g)).unwrap();
        for (i, row) in d.iter().enumerate() {
            for (j, &x) in row.iter().enumerate() {
                assert_eq!(x as usize, i.abs_diff(j));
            }
        }
        assert_eq!(apsp_via_cover(1, &BicliqueCover::empty(CoverMode::Cover)).unwrap(), vec![vec![0]]);
    }

    #[test]
    fn spanner_example() {
        let c = BicliqueCover::new(vec![bc(&[0, 1], &[2, 3])], CoverMode::Partition);
        let h = spanner_3hop(&c);
        assert_eq!(h, vec![(0, 2), (0, 3), (1, 2)]);
        let g = Graph::new(4, [(0, 2), (0, 3), (1, 2), (1, 3)], false).unwrap();
        assert!(validate_cover(&g, &c).unwrap().valid);
        assert!(verify_spanner(&g, &h, 3).unwrap());
        assert!(!verify_spanner(&g, &h, 2).unwrap());
    }

    #[test]
    fn spanner_of_trivial_cover_is_graph() {
        let g = Graph::new(5, [(0, 1), (1, 2), (2, 4), (0, 3)], false).unwrap();
        assert_eq!(spanner_3hop(&trivial_cover(&g)), g.edges().to_vec());
    }

    #[test]
    fn verify_cycles() {
        let c4 = Graph::new(4, [(0, 1), (1, 2), (2, 3), (0, 3)], false).unwrap();
        assert!(verify_spanner(&c4, c4.edges(), 1).unwrap());
        assert!(verify_spanner(&c4, &c4.edges()[1..], 3).unwrap());
        let c6 = Graph::new(6, (0..6).map(|i| (i, (i + 1) % 6)), false).unwrap();
        let h: Vec<_> = c6.edges().iter().copied().filter(|&e| e != (0, 5)).collect();
        assert!(!verify_spanner(&c6, &h, 3).unwrap());
        assert!(verify_spanner(&c6, &h, 5).unwrap());
        assert_eq!(verify_spanner(&c6, &[(0, 2)], 3).unwrap_err(), Error::NotASubgraph(0, 2));
    }

    #[test]
    fn zarankiewicz_bounds() {
        let g = Graph::new(32, (0..16).map(|i| (2 * i, 2 * i + 1)), false).unwrap();
        assert_eq!(zarankiewicz_certificate(&g, 2, false).unwrap().bound, 8);
        assert_eq!(zarankiewicz_certificate(&Graph::empty(3), 2, false).unwrap().bound, 0);
        let c4 = Graph::new(4, [(0, 1), (1, 2), (2, 3), (0, 3)], false).unwrap();
        match zarankiewicz_certificate(&c4, 2, false) {
            Err(Error::ContainsKtt { left, right, .. }) => {
                for &u in &left {
                    for &v in &right {
                        assert!(c4.has_edge(u, v));
                    }
                }
            }
            other => panic!("expected a witness, got {other:?}"),
        }
        assert!(zarankiewicz_certificate(&c4, 2, true).is_ok());
        assert!(matches!(find_ktt(&Graph::empty(2001), 2), Err(Error::ScanTooExpensive(_))));
    }

    #[test]
    fn k33_found() {
        let g = Graph::new(6, (0..3).flat_map(|u| (3..6).map(move |v| (u, v))), false).unwrap();
        assert!(find_ktt(&g, 3).unwrap().is_some());
        assert!(find_ktt(&Graph::complete(6), 3).unwrap().is_some());
        assert!(find_ktt(&Graph::complete(5), 3).unwrap().is_none());
    }

    fn config(points: &[(i64, i64)], lines: &[(i64, i64)]) -> HalfplaneConfig {
        HalfplaneConfig {
            points: points.iter().map(|&(x, y)| (int(x), int(y))).collect(),
            lines: lines.iter().map(|&(m, b)| (int(m), int(b))).collect(),
        }
    }

    #[test]
    fn charging_without_incidences() {
        let cfg = config(&[(0, 0), (1, 5)], &[(1, 1)]);
        let cert = charging_certificate(&cfg, None).unwrap();
        assert_eq!(cert.bound, 0);
        assert_eq!(cert.edges, 1);
    }

    #[test]
    fn charging_audit_row() {
        // One point on three lines.
        let cfg = config(&[(1, 3)], &[(1, 2), (2, 1), (0, 3)]);
        let c = BicliqueCover::new(vec![bc(&[0], &[1, 2, 3])], CoverMode::Cover);
        let cert = charging_certificate(&cfg, Some(&c)).unwrap();
        assert_eq!(cert.bound, 3);
        assert_eq!(cert.audit, vec![AuditRow { biclique: 0, points: 1, halfplanes: 3, iota: 3 }]);
        assert!(cert.violations.is_empty());
        let text = cert.to_text();
        assert!(text.starts_with("kind charging\ndigest "));
        assert!(text.contains("\nbiclique 0 1 3 3\n"));
    }

    #[test]
    fn charging_rejects_unsound() {
        let cfg = config(&[(0, 10)], &[(0, 1)]);
        let c = BicliqueCover::new(vec![bc(&[0], &[1])], CoverMode::Cover);
        assert_eq!(charging_certificate(&cfg, Some(&c)).unwrap_err(), Error::Soundness { biclique: 0, u: 0, v: 1 });
    }

    #[test]
    fn halfplane_covers_are_exact() {
        let cfg = config(&[(0, 0), (1, 2), (2, 1), (3, 7), (1, 1)], &[(1, 1), (1, 0), (-1, 3), (0, 1)]);
        let g = cfg.containment_graph().unwrap();
        for c in [cover_halfplanes_by_slope(&cfg).unwrap(), cover_halfplanes_by_star(&cfg).unwrap()] {
            let r = validate_cover(&g, &c).unwrap();
            assert!(r.valid, "{r:?}");
        }
    }

    fn small_graph(max_n: usize) -> impl Strategy<Value = Graph> {
        (1usize..max_n).prop_flat_map(|n| {
            let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
            let len = pairs.len();
            prop::sample::subsequence(pairs, 0..=len).prop_map(move |e| Graph::new(n, e, false).unwrap())
        })
    }

    /// Textbook queue BFS on adjacency lists.
    fn plain_bfs(g: &Graph, root: usize) -> Vec<u32> {
        let adj = g.adjacency();
        let mut d = vec![UNREACHABLE; g.n()];
        let mut q = std::collections::VecDeque::from([root]);
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

    fn intervals(max: usize) -> impl Strategy<Value = Vec<(Rational, Rational)>> {
        prop::collection::vec((0i64..30, 0i64..8).prop_map(|(a, l)| (int(a), int(a + l))), 1..max)
    }

    proptest! {
        #[test]
        fn hub_bfs_equals_plain_bfs(g in small_graph(24), root in 0usize..24) {
            let root = root % g.n();
            let c = trivial_cover(&g);
            prop_assert_eq!(bfs_via_cover(g.n(), &c, root).unwrap(), plain_bfs(&g, root));
            let k = cover_complete(g.n());
            prop_assert_eq!(bfs_via_cover(g.n(), &k, root).unwrap(), plain_bfs(&Graph::complete(g.n()), root));
        }

        #[test]
        fn interval_cover_distances_and_spanner(v in intervals(50)) {
            let g = crate::segtree::interval_oracle(&v);
            let c = crate::segtree::cover_intervals(&v).unwrap();
            let d = apsp_via_cover(g.n(), &c).unwrap();
            for u in 0..g.n() {
                prop_assert_eq!(&d[u], &plain_bfs(&g, u));
                prop_assert_eq!(d[u][u], 0);
                for w in 0..g.n() {
                    prop_assert_eq!(d[u][w], d[w][u]);
                    for x in 0..g.n() {
                        if d[u][x] != UNREACHABLE && d[x][w] != UNREACHABLE {
                            prop_assert!(d[u][w] <= d[u][x] + d[x][w]);
                        }
                    }
                }
            }
            let h = spanner_3hop(&c);
            prop_assert!(h.len() <= c.size());
            prop_assert!(verify_spanner(&g, &h, 3).unwrap());
        }

        #[test]
        fn zarankiewicz_bound_below_constructed_covers(v in intervals(40)) {
            // Keep a K_{2,2}-free interval subfamily greedily.
            let mut kept: Vec<(Rational, Rational)> = Vec::new();
            for iv in v {
                kept.push(iv);
                let g = crate::segtree::interval_oracle(&kept);
                if find_ktt(&g, 2).unwrap().is_some() {
                    kept.pop();
                }
            }
            let g = crate::segtree::interval_oracle(&kept);
            let cert = zarankiewicz_certificate(&g, 2, false).unwrap();
            for c in [crate::segtree::cover_intervals(&kept).unwrap(), trivial_cover(&g)] {
                prop_assert!(cert.bound <= c.size());
                prop_assert!(g.m() <= 2 * c.size());
            }
        }
    }
}
