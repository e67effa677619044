//! Exact-arithmetic chamber geometry for affine Coxeter systems.
//!
//! A multigraph determines a Coxeter system and a pair of integer matrix
//! representations (one on roots, one on covectors). For affine systems the
//! covector side carries a complete simplicial fan with two chamber families
//! separated by the level-zero hyperplane. This crate classifies input
//! graphs, enumerates group elements with their matrices, locates covectors
//! in the fan, certifies structural properties of chamber collections, and
//! cross-checks chamber data against an independent truncated path-algebra
//! construction.
//!
//! All arithmetic is exact (`num` big integers and rationals); no floating
//! point enters any decision.

pub mod coxeter;
pub mod exec;
pub mod fan;
pub mod fm;
pub mod geometry;
pub mod graph;
pub mod linalg;
pub mod oracle;

pub mod certify;

use thiserror::Error as ThisError;

#[derive(Debug, ThisError)]
pub enum Error {
    #[error("graph must have at least 2 vertices, got {0}")]
    TooFewVertices(usize),
    #[error("edge endpoint {vertex} out of range 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("loop edge at vertex {0} is not allowed")]
    LoopEdge(usize),
    #[error("graph must be connected")]
    Disconnected,
    #[error("malformed input: {0}")]
    Parse(String),
    #[error("graph is Dynkin: the group is finite and carries no affine fan")]
    DynkinGraph,
    #[error("operation requires an affine graph")]
    NotAffine,
    #[error("generator index {index} out of range for rank {rank}")]
    GeneratorOutOfRange { index: usize, rank: usize },
    #[error("expected a vector of length {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("covector is zero and lies in every closed cone")]
    ZeroCovector,
    #[error("covector lies on the critical hyperplane of level zero and belongs to no chamber")]
    CriticalHyperplane,
    #[error("word is not reduced")]
    NotReduced,
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("{cap} exceeded limit {limit}")]
    ResourceCap { cap: &'static str, limit: usize },
}

pub use coxeter::{Ball, CoxeterSystem, Element, HasseEdge};
pub use exec::{backend, configure_threads};
pub use fan::{
    chamber_locate, coverage_sample, fan_slice_export, g_matrix, ChamberResult, CoverageReport,
    Family, GMatrix, SliceCell,
};
pub use graph::{GraphClass, InputGraph};
