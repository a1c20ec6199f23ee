//! Root data, standard parabolics, weight decompositions and Borel enumeration.

pub mod borel;
pub mod cartan;
pub mod parabolic;
pub mod weights;

pub use cartan::{CartanData, Root};
pub use parabolic::{Parabolic, Side, SimpleSet};
