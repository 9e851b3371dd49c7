//! Exact rational scalars and dense linear algebra over the rationals.

mod mat;
mod rat;
mod subspace;

pub use mat::Mat;
pub use rat::{format_rat, parse_rat, rat, Rat};
pub use subspace::Subspace;
