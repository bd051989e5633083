//! The finite Hecke algebra `H_{S_n}` and its modules.

pub mod element;
pub mod irreps;
pub mod module;

pub use element::{poincare_sum, sign_projector, FinHeckeElem, FiniteHecke};
pub use irreps::{decompose, hecke_irrep, sign_multiplicity};
pub use module::FinHeckeModule;
