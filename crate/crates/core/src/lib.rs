//! Exact computations with finite-dimensional associative algebras over
//! prime fields and the rationals.

pub mod algebra;
pub mod basic;
pub mod constructions;
pub mod cover;
pub mod error;
pub mod field;
pub mod graded;
pub mod io;
pub mod matrix;
pub mod poly;
pub mod quiver;
pub mod radical;
pub mod subspace;
pub mod tensor;
pub mod verify;
pub mod wedderburn;

pub use algebra::{Algebra, Element, ValidationReport};
pub use error::{Error, Result};
pub use field::{Field, Scalar};
pub use graded::{associated_graded, GradedAlgebra};
pub use matrix::Matrix;
pub use poly::Poly;
pub use quiver::{analyze, Analysis, AnalysisOptions, Quiver};
pub use subspace::{Subquotient, Subspace};
pub use wedderburn::{decompose, WedderburnData, WedderburnOptions};
