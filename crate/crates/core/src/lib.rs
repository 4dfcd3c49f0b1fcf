//! Symplectic triple systems, their enveloping ℤ₂-graded Lie algebras, and the
//! curvature and holonomy of invariant connections on the associated
//! 3-Sasakian homogeneous spaces, computed in exact Gaussian-rational
//! arithmetic.

pub mod composition;
pub mod connections;
pub mod enveloping;
pub mod error;
pub mod holonomy;
pub mod jordan;
pub mod linalg;
pub mod sts;

pub use error::{Error, Result};
pub use linalg::{Matrix, Rational, Scalar, SparseVec, Subspace};
