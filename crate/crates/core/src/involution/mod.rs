//! af-involutions: real-form conjugations, flips, block analysis and fixed sets.

pub mod af;
pub mod blocks;
pub mod component;
pub mod map;

pub use af::{is_af_involution, AfInvolution, AfReport, Block};
pub use blocks::{BlockSpec, Linearity, RealFormKind, Tau};
pub use component::{components, span_components, Component};
pub use map::RealLinearMap;
