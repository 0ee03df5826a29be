//! Graphs, bicliques and cover validation.
//!
//! Vertices are dense indices `0..n`. Every construction in the crate emits a
//! [`BicliqueCover`] that can be checked against a [`Graph`] with
//! [`validate_cover`].

use std::fmt;

use crate::error::{Error, Result};

/// Undirected simple graph on `0..n`. Edges are stored as sorted `(u, v)`
/// pairs with `u < v`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    ordered: bool,
}

impl Graph {
    /// Builds a graph, normalizing edge orientation and dropping duplicates.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>, ordered: bool) -> Result<Self> {
        let mut list = Vec::new();
        for (u, v) in edges {
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            list.push((u.min(v), u.max(v)));
        }
        list.sort_unstable();
        list.dedup();
        Ok(Graph { n, edges: list, ordered })
    }

    pub fn empty(n: usize) -> Self {
        Graph { n, edges: Vec::new(), ordered: false }
    }

    pub fn complete(n: usize) -> Self {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        Graph { n, edges, ordered: false }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn is_ordered(&self) -> bool {
        self.ordered
    }

    pub fn with_ordered(mut self, ordered: bool) -> Self {
        self.ordered = ordered;
        self
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        let key = (u.min(v), u.max(v));
        self.edges.binary_search(&key).is_ok()
    }

    /// Sorted adjacency lists.
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        adj
    }

    /// Compressed sparse rows: `(offsets, targets)` with each row sorted.
    pub(crate) fn csr(&self) -> (Vec<usize>, Vec<usize>) {
        let mut deg = vec![0usize; self.n + 1];
        for &(u, v) in &self.edges {
            deg[u + 1] += 1;
            deg[v + 1] += 1;
        }
        for i in 0..self.n {
            deg[i + 1] += deg[i];
        }
        let mut fill = deg.clone();
        let mut targets = vec![0usize; 2 * self.edges.len()];
        for &(u, v) in &self.edges {
            targets[fill[u]] = v;
            fill[u] += 1;
            targets[fill[v]] = u;
            fill[v] += 1;
        }
        for i in 0..self.n {
            targets[deg[i]..deg[i + 1]].sort_unstable();
        }
        (deg, targets)
    }
}

/// A complete bipartite subgraph given by two disjoint, sorted, non-empty
/// vertex lists.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Biclique {
    left: Vec<usize>,
    right: Vec<usize>,
}

impl Biclique {
    pub fn new(mut left: Vec<usize>, mut right: Vec<usize>) -> Result<Self> {
        left.sort_unstable();
        left.dedup();
        right.sort_unstable();
        right.dedup();
        if left.is_empty() || right.is_empty() {
            return Err(Error::MalformedBiclique("empty side".into()));
        }
        let (mut i, mut j) = (0, 0);
        while i < left.len() && j < right.len() {
            match left[i].cmp(&right[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    return Err(Error::MalformedBiclique(format!("vertex {} on both sides", left[i])));
                }
            }
        }
        Ok(Biclique { left, right })
    }

    /// Constructor for internal callers whose sides are already sorted,
    /// non-empty and disjoint.
    pub(crate) fn from_sorted(left: Vec<usize>, right: Vec<usize>) -> Self {
        debug_assert!(!left.is_empty() && !right.is_empty());
        debug_assert!(left.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(right.windows(2).all(|w| w[0] < w[1]));
        Biclique { left, right }
    }

    pub fn left(&self) -> &[usize] {
        &self.left
    }

    pub fn right(&self) -> &[usize] {
        &self.right
    }

    pub fn size(&self) -> usize {
        self.left.len() + self.right.len()
    }

    pub fn edge_count(&self) -> usize {
        self.left.len() * self.right.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = usize> + '_ {
        self.left.iter().chain(self.right.iter()).copied()
    }

    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.left.iter().flat_map(move |&u| self.right.iter().map(move |&v| (u, v)))
    }

    /// Sorts, dedups and drops emptiness: `None` when either side ends up empty.
    pub(crate) fn from_unsorted(mut left: Vec<usize>, mut right: Vec<usize>) -> Option<Self> {
        left.sort_unstable();
        left.dedup();
        right.sort_unstable();
        right.dedup();
        if left.is_empty() || right.is_empty() {
            None
        } else {
            Some(Biclique::from_sorted(left, right))
        }
    }
}

/// Whether constructions verify their preconditions. `Fast` trusts the
/// caller; a violated precondition then yields an unspecified (but memory
/// safe) cover.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Checking {
    #[default]
    Strict,
    Fast,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CoverMode {
    Cover,
    Partition,
}

impl fmt::Display for CoverMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CoverMode::Cover => "cover",
            CoverMode::Partition => "partition",
        })
    }
}

impl std::str::FromStr for CoverMode {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "cover" => Ok(CoverMode::Cover),
            "partition" => Ok(CoverMode::Partition),
            other => Err(format!("unknown cover mode `{other}`")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BicliqueCover {
    bicliques: Vec<Biclique>,
    mode: CoverMode,
}

impl BicliqueCover {
    pub fn new(bicliques: Vec<Biclique>, mode: CoverMode) -> Self {
        BicliqueCover { bicliques, mode }
    }

    pub fn empty(mode: CoverMode) -> Self {
        BicliqueCover { bicliques: Vec::new(), mode }
    }

    pub fn bicliques(&self) -> &[Biclique] {
        &self.bicliques
    }

    pub fn into_bicliques(self) -> Vec<Biclique> {
        self.bicliques
    }

    pub fn mode(&self) -> CoverMode {
        self.mode
    }

    pub fn with_mode(mut self, mode: CoverMode) -> Self {
        self.mode = mode;
        self
    }

    pub fn len(&self) -> usize {
        self.bicliques.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bicliques.is_empty()
    }

    /// Sum of `|left| + |right|` over all bicliques.
    pub fn size(&self) -> usize {
        self.bicliques.iter().map(Biclique::size).sum()
    }

    pub fn max_vertex_id(&self) -> Option<usize> {
        self.bicliques.iter().flat_map(Biclique::vertices).max()
    }

    /// For each vertex `0..n`, the number of bicliques containing it.
    pub fn vertex_multiplicity(&self, n: usize) -> Vec<usize> {
        let mut count = vec![0usize; n];
        for b in &self.bicliques {
            for v in b.vertices() {
                if v < n {
                    count[v] += 1;
                }
            }
        }
        count
    }

    /// Distinct covered pairs, normalized and sorted.
    pub fn covered_edges(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> =
            self.bicliques.iter().flat_map(|b| b.pairs().map(|(u, v)| (u.min(v), u.max(v)))).collect();
        out.sort_unstable();
        out.dedup();
        out
    }
}

/// Outcome of [`validate_cover`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationReport {
    pub valid: bool,
    pub uncovered_edges: Vec<(usize, usize)>,
    /// `(biclique index, u, v)` for every pair placed in a biclique that is
    /// not an edge. `u` comes from the left side.
    pub non_edges_in_bicliques: Vec<(usize, usize, usize)>,
    /// `(u, v, multiplicity)` for edges covered more than once (partition mode).
    pub multiplicity_violations: Vec<(usize, usize, usize)>,
    pub measured_size: usize,
    pub max_vertex_multiplicity: usize,
}

/// Checks `cover` against `g`, enumerating every pair of every biclique.
pub fn validate_cover(g: &Graph, cover: &BicliqueCover) -> Result<ValidationReport> {
    let n = g.n();
    for b in cover.bicliques() {
        if b.left.is_empty() || b.right.is_empty() {
            return Err(Error::MalformedBiclique("empty side".into()));
        }
        for v in b.vertices() {
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
        }
    }

    let (offsets, targets) = g.csr();
    let edge_id = |u: usize, v: usize| -> Option<usize> {
        let (a, b) = (u.min(v), u.max(v));
        let row = &targets[offsets[a]..offsets[a + 1]];
        // Each edge (a, b) is identified by a's slot for b.
        row.binary_search(&b).ok().map(|i| offsets[a] + i)
    };

    let mut hits = vec![0usize; targets.len()];
    let mut non_edges = Vec::new();
    for (idx, b) in cover.bicliques().iter().enumerate() {
        for (u, v) in b.pairs() {
            match edge_id(u, v) {
                Some(e) => hits[e] += 1,
                None => non_edges.push((idx, u, v)),
            }
        }
    }

    let mut uncovered = Vec::new();
    let mut multiplicity = Vec::new();
    for &(u, v) in g.edges() {
        let e = edge_id(u, v).expect("edge present in its own CSR");
        match hits[e] {
            0 => uncovered.push((u, v)),
            1 => {}
            k if cover.mode() == CoverMode::Partition => multiplicity.push((u, v, k)),
            _ => {}
        }
    }

    let max_mult = cover.vertex_multiplicity(n).into_iter().max().unwrap_or(0);
    Ok(ValidationReport {
        valid: uncovered.is_empty() && non_edges.is_empty() && multiplicity.is_empty(),
        uncovered_edges: uncovered,
        non_edges_in_bicliques: non_edges,
        multiplicity_violations: multiplicity,
        measured_size: cover.size(),
        max_vertex_multiplicity: max_mult,
    })
}

/// Biclique partition of `K_n`: split the vertex range in half, emit the
/// biclique between the halves, recurse. Bicliques are listed in recursion
/// preorder. The recursion has `n - 1` internal nodes, so at most `n - 1`
/// bicliques are produced.
pub fn cover_complete(n: usize) -> BicliqueCover {
    let vertices: Vec<usize> = (0..n).collect();
    let mut out = Vec::with_capacity(n.saturating_sub(1));
    complete_on(&vertices, &mut out);
    BicliqueCover::new(out, CoverMode::Partition)
}

/// Appends a partition of the complete graph on `vertices` (sorted) to `out`.
pub(crate) fn complete_on(vertices: &[usize], out: &mut Vec<Biclique>) {
    if vertices.len() < 2 {
        return;
    }
    let mid = vertices.len() / 2;
    let (lo, hi) = vertices.split_at(mid);
    out.push(Biclique::from_sorted(lo.to_vec(), hi.to_vec()));
    complete_on(lo, out);
    complete_on(hi, out);
}

/// Brute-force graph from a symmetric predicate: `O(n^2)` evaluations.
pub fn oracle_edges(n: usize, mut pred: impl FnMut(usize, usize) -> bool) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if pred(u, v) {
                edges.push((u, v));
            }
        }
    }
    Graph { n, edges, ordered: false }
}

/// One biclique per edge.
pub fn trivial_cover(g: &Graph) -> BicliqueCover {
    let bicliques = g.edges().iter().map(|&(u, v)| Biclique::from_sorted(vec![u], vec![v])).collect();
    BicliqueCover::new(bicliques, CoverMode::Partition)
}
