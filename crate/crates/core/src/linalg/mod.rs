//! Exact linear algebra over `Q` and `Q(i)`.

pub mod cmatrix;
pub mod form;
pub mod matrix;
pub mod poly;
pub mod scalar;
pub mod subspace;

pub use cmatrix::ComplexMatrix;
pub use form::{Signature, SymmetricForm};
pub use matrix::Matrix;
pub use scalar::{int, rat, GaussianRational, Rational};
pub use subspace::RealSubspace;
