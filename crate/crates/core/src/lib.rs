//! Small biclique covers for geometric graph classes.
//!
//! Constructions for dominance (comparability) graphs, dnf-semilinear graphs,
//! capped (terrain-like) graphs, grounded L-shapes, intervals, boxes and
//! bichromatic segments, together with exact validators, brute-force oracles,
//! compressed-graph algorithms driven by a cover, and lower-bound
//! certificates.

pub mod bench;
pub mod capped;
pub mod compressed;
pub mod dominance;
pub mod error;
pub mod gen;
pub mod graph;
pub mod io;
pub mod lshapes;
pub mod rational;
pub mod segments;
pub mod segtree;
pub mod semilinear;

#[cfg(test)]
mod testutil;

pub use error::{Error, Result};
pub use graph::{
    cover_complete, oracle_edges, trivial_cover, validate_cover, Biclique, BicliqueCover, Checking, CoverMode, Graph,
    ValidationReport,
};
pub use rational::Rational;
