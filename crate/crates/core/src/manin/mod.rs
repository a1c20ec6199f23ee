//! Manin forms, Lagrangian subalgebras, Manin triples, descent, links and lifts.

pub mod form;
pub mod lagrangian;
pub mod link;
pub mod triple;

pub use form::ManinForm;
pub use lagrangian::{build_lagrangian, decompose_lagrangian, LagrangianDatum};
pub use link::{check_link_conditions, extract_link, is_fundamental_csa, lift, LinkDatum, LinkReport};
pub use triple::{descend, is_standard_under, verify_manin_triple, Certificate, Descent, ManinTriple};
