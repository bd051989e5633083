//! The graded Hecke algebra of type A, Jucys-Murphy elements, and
//! generalized Speh modules.

pub mod group_algebra;
pub mod module;

pub use group_algebra::{jm_element, sign_projector_graded, GroupAlgebraElem};
pub use module::{graded_relation_certificate, speh_module, GradedModule, SpehDatum};
