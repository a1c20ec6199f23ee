//! Exact construction and verification of Manin triples in complex reductive Lie algebras.
//!
//! Every complex vector space is handled through its realification: a complex
//! basis `e_1, …, e_n` becomes the real basis `e_1, i·e_1, …, e_n, i·e_n`, and
//! real subalgebras are plain subspaces of `Q^{2n}`.

pub mod error;
pub mod involution;
pub mod lie;
pub mod linalg;
pub mod manin;
pub mod roots;
pub mod scenario;
pub mod tower;

pub use error::{Error, Result};
