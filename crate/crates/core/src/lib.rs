//! Exact analysis of maximum induced forests (the acyclic number) in
//! structured graph families.
//!
//! The crate is organised around a small bitset graph kernel and builds up to
//! a certification pipeline:
//!
//! - [`vset`] / [`graph`] — packed vertex sets, immutable simple graphs, and
//!   the subset predicates everything else consumes (independence, forest
//!   checking, the `eta` edge statistic).
//! - [`algebra`] — arithmetic in GF(p^d), subspace enumeration in reduced
//!   row-echelon form, and Gaussian binomials.
//! - [`families`] — generators for Kneser, q-Kneser, Paley, tensor-power,
//!   orthogonal-array and generalized-quadrangle graphs, each carrying exact
//!   metadata (valency, known eigenvalues, an extremal coclique witness).
//! - [`bounds`] — the ratio bound, the spectral and edge-count forest bounds,
//!   quotient interlacing checks, and strongly-regular closed forms.
//! - [`search`] — exact branch-and-bound solvers for maximum cocliques and
//!   maximum induced forests, canonical-forest classification, and
//!   search-free certification for large graphs.
//! - [`constructions`] — explicit extremal forests and the two-vertex
//!   addition scan over complement Paley graphs.
//! - [`verification`] — the reference-value suite driven by both the CLI and
//!   the acceptance tests.

pub mod algebra;
pub mod bounds;
pub mod constructions;
pub mod families;
pub mod graph;
pub mod io;
pub mod search;
pub mod verification;
pub mod vset;

pub use graph::{Eta, ForestCheck, Graph, GraphError};
pub use vset::VertexSet;

/// Version tag carried by every serialized report and certificate.
pub const SCHEMA: &str = "acyclic-workbench/1";
