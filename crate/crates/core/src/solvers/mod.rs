//! Exact and bounded combinatorial solvers used as verification oracles.

mod clique;
mod cut;
mod packing;
mod shearer;

pub use clique::*;
pub use cut::*;
pub use packing::*;
pub use shearer::*;
