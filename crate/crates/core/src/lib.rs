//! Exact computations with quadratic Lie algebras over the Gaussian
//! rationals Q(i), and classification of the solvable ones of dimension at
//! most 6 up to i-isomorphism.
//!
//! Every scalar is an exact [`Scalar`]; there is no floating point anywhere.

pub mod algebra;
pub mod catalog;
pub mod classify;
pub mod cli;
pub mod constructions;
pub mod derivations;
pub mod error;
pub mod format;
pub mod fuzz;
pub mod matrix;
pub mod poly;
pub mod scalar;
pub mod subspace;
pub mod witt;

pub use algebra::{check_i_isomorphism, LinearMap, QuadraticLieAlgebra, StructureConstants, ValidationReport};
pub use catalog::CatalogName;
pub use classify::{classify, same_class, ClassLabel, Family};
pub use error::{Error, Result};
pub use matrix::{Matrix, Vector};
pub use poly::Polynomial;
pub use scalar::Scalar;
pub use subspace::Subspace;
