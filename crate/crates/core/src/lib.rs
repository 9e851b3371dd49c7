//! Exact decision procedures for finite-dimensional evolution algebras over
//! the rationals: degeneracy, semiprimeness, primeness and prime ideals,
//! absorption radical, von Neumann regularity, centroid and decomposition,
//! each tied to the directed graph of the algebra's natural basis.

pub mod algebra;
pub mod analysis;
pub mod cli;
pub mod error;
pub mod exactla;
pub mod graph;
pub mod poly;

pub use algebra::{BasicIdeal, Element, EvolutionAlgebra};
pub use error::{Error, Result};
pub use exactla::{Mat, Rat, Subspace};
pub use graph::{DiGraph, VertexSet};
