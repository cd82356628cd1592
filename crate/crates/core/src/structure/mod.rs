//! Proof subroutines: dependent random choice, the triangle-free process,
//! min-degree extraction, partition refinement, reduced colourings and the
//! (K₃,K₃) extractor.

mod drc;
mod extract;
mod k3k3;
mod reduced;
mod tfp;

pub use drc::*;
pub use extract::*;
pub use k3k3::*;
pub use reduced::*;
pub use tfp::*;
