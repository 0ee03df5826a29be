use thiserror::Error;

/// Errors produced by cover constructions, validators, parsers and certificates.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("malformed biclique: {0}")]
    MalformedBiclique(String),

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("invalid input: {0}")]
    Input(String),

    #[error("graph is not capped: {i}<{j}<{k}<{l} with {i}{k} and {j}{l} edges but {i}{l} missing")]
    NotCapped { i: usize, j: usize, k: usize, l: usize },

    #[error("segments {0} and {1} have the same color and intersect")]
    SameColorIntersection(usize, usize),

    #[error("red segment {red} and blue segment {blue} overlap collinearly (unsupported degeneracy)")]
    CollinearOverlap { red: usize, blue: usize },

    #[error("graph contains K_{{{t},{t}}}: left {left:?}, right {right:?}")]
    ContainsKtt { t: usize, left: Vec<usize>, right: Vec<usize> },

    #[error("K_{{t,t}} scan too expensive ({0}); assert freeness explicitly")]
    ScanTooExpensive(String),

    #[error("biclique {biclique} pairs {u} and {v}, which are not a point inside a halfplane")]
    Soundness { biclique: usize, u: usize, v: usize },

    #[error("edge {0}-{1} of the candidate spanner is not an edge of the graph")]
    NotASubgraph(usize, usize),

    #[error("arithmetic overflow: {0}")]
    Overflow(String),

    #[error("{0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
