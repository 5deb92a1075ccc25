//! A workbench for the question: how many triangles can an n-vertex graph
//! have if it avoids a fixed forbidden subgraph, especially a suspension
//! (a graph joined to one extra apex vertex)?
//!
//! The crate provides:
//!
//! - bitset graphs with triangle/codegree/path counting ([`graph`], [`bitset`]),
//!   graph6 serialization ([`graph6`]);
//! - a catalog of named and parametric forbidden patterns with fast
//!   containment detectors and a suspension shortcut ([`pattern`]);
//! - the two extremal lower-bound constructions, a doubled bipartite graph
//!   with internal matchings and a bipartite graph with clique blocks on one
//!   side, with closed-form triangle counts ([`constructions`]);
//! - structural analysis: triangle blocks, book recognition, light/heavy edge
//!   classification, BFS levels, shared-edge hypergraph counts, edge-disjoint
//!   triangle packing, chorded cycle search ([`structure`]);
//! - edge-deletion cleaning pipelines and certifiers that replay induction
//!   proofs of t <= e/2 and t <= e on concrete graphs ([`cleaning`]);
//! - an exhaustive isomorph-free oracle for exact small-n extremal values,
//!   a local-search lower-bound engine, and closed-form bound verification
//!   ([`search`]);
//! - a CLI with machine-readable reports and reproducibility manifests
//!   ([`cli`], [`records`], [`manifest`]).

pub mod bitset;
pub mod cleaning;
pub mod cli;
pub mod constructions;
pub mod error;
pub mod graph;
pub mod graph6;
pub mod manifest;
pub mod pattern;
pub mod records;
pub mod search;
pub mod structure;

pub use error::{Error, Result};
pub use graph::{BigGraph, Graph, Graph64, Triangle};
