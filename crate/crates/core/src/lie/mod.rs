//! Complex reductive Lie algebras and their real subalgebras.

pub mod algebra;
pub mod subalg;

pub use algebra::{Element, LieAlgebra, SimpleIdeal, SimpleType};
