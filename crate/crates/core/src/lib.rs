//! Exact certified domination numbers with certificates.
//!
//! A dominating set `D` is *certified* when every member has either no
//! neighbour or at least two neighbours outside `D`. This crate computes the
//! minimum size γ_cer(G) of such a set, recognizes the graph classes with a
//! known value, and checks the standard bounds relating γ_cer to γ over
//! exhaustively enumerated small graphs.

mod bitset;
mod error;

pub mod analysis;
pub mod domination;
pub mod graph;
pub mod harness;
pub mod solver;
pub mod structure;

pub use bitset::{VertexSet, MAX_VERTICES};
pub use error::{Error, Result};
pub use graph::Graph;
