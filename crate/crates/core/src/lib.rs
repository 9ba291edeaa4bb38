//! Exact connectivity invariants, forbidden induced subgraphs and bounded
//! exhaustive verification of when edge-connectivity equals minimum degree.
//!
//! Graphs are simple and undirected, stored as bit-row adjacency matrices.
//! Small connected graphs can be generated exhaustively up to isomorphism
//! and scanned against forbidden-pattern classes.

pub mod atlas;
mod bitset;
pub mod canon;
pub mod conditions;
pub mod enumerate;
mod error;
mod flow;
pub mod graph;
pub mod graph6;
pub mod invariants;
pub mod iso;
pub mod matching;
pub mod selftest;
pub mod verdict;

pub use bitset::VertexSet;
pub use canon::{are_isomorphic, canonical_form, CanonicalForm};
pub use error::{Error, Result};
pub use graph::{Graph, GraphBuilder};
pub use graph6::{from_graph6, to_graph6};
pub use iso::{Pattern, PatternSet};
