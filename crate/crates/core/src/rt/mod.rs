//! Exact small-order Ramsey–Turán numbers, closed-form densities and
//! construction-versus-formula reports.

mod canon;
mod exact;
mod formulas;
mod report;

pub use exact::*;
pub use formulas::*;
pub use report::*;
