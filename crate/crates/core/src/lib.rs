//! Distance spectra of small tricyclic graphs.
//!
//! The crate bundles everything needed to state and exhaustively verify a
//! structural characterization of connected tricyclic graphs whose second
//! largest distance eigenvalue lies below -1/2:
//!
//! * [`graph`] — immutable bit-row graphs, graph6 I/O, BFS distance matrices;
//! * [`spectra`] — a cyclic Jacobi eigensolver, equitable partitions, exact
//!   rational quotient matrices and characteristic polynomials;
//! * [`structure`] — chordality, block decompositions, base extraction and
//!   the block-graph tests;
//! * [`families`] — deterministic generators for every named graph family;
//! * [`subgraph`] — canonical labeling and distance-preserving induced
//!   subgraph search;
//! * [`classify`] — the structural decision procedure with a spectral
//!   cross-check;
//! * [`enumerate`] — exhaustive small-graph enumeration and the verification
//!   harnesses.
//!
//! Data-parallel paths use rayon when the default `parallel` feature is
//! enabled; disabling it falls back to sequential loops with identical
//! results.

pub mod classify;
pub mod enumerate;
pub mod families;
pub mod graph;
mod parallel;
pub mod rational;
pub mod spectra;
pub mod structure;
pub mod subgraph;

/// Crate-wide error type.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("graph6 parse error at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },
    #[error("graph is disconnected: no path between vertices {u} and {v}")]
    Disconnected { u: usize, v: usize },
    #[error("expected a tricyclic graph (m = n + 2), found cyclomatic number {found}")]
    NotTricyclic { found: usize },
    #[error("not a block graph: block {block:?} is not a clique")]
    NotBlockGraph { block: Vec<usize> },
    #[error("matrix not symmetric: a[{i}][{j}] and a[{j}][{i}] differ by {delta}")]
    NotSymmetric { i: usize, j: usize, delta: f64 },
    #[error("Jacobi sweep limit reached ({sweeps}) before convergence")]
    NoConvergence { sweeps: usize },
    #[error("invalid partition: {reason}")]
    BadPartition { reason: String },
    #[error("rational arithmetic overflow")]
    Overflow,
    #[error("division by zero in rational arithmetic")]
    DivisionByZero,
    #[error("invalid family parameters: {reason}")]
    BadFamilyParams { reason: String },
    #[error("no base template matches this graph")]
    UnclassifiableBase,
    #[error("graph is not its own base: vertex {vertex} has degree below 2")]
    NotABase { vertex: usize },
    #[error("enumeration guard tripped: {reason} (enable allow_large to override)")]
    ResourceGuard { reason: String },
    #[error("operation needs at least {min} vertices, graph has {n}")]
    TooSmall { min: usize, n: usize },
    #[error("vertex subset is empty")]
    EmptySubset,
}

pub type Result<T> = std::result::Result<T, Error>;
