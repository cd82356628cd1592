//! Ramsey–Turán toolkit: graphs, exact solvers, edge colourings,
//! extremal constructions and regularity-style structure routines.

pub mod bitset;
pub mod error;
pub mod graph;
pub mod solvers;
pub mod colorings;
pub mod constructions;
pub mod structure;
pub mod rt;

pub use bitset::VertexSet;
pub use error::{Error, Result};
pub use graph::{Graph, GraphBuilder, Partition};
