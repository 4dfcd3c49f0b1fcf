//! Exact linear algebra over the Gaussian rationals ℚ(i).

mod closure;
mod matrix;
mod rational;
mod scalar;
mod subspace;

pub use closure::{bracket_closure, center_of, center_of_basis, MatrixAlgebra};
pub use matrix::{Matrix, SparseVec};
pub use rational::{ParseRationalError, Rational};
pub use scalar::Scalar;
pub use subspace::Subspace;
