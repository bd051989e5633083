//! The affine Hecke algebra of `GL_n` in Bernstein presentation and its
//! finite-dimensional modules.

pub mod construct;
pub mod element;
pub mod gelfand_graev;
pub mod induce;
pub mod levi;
pub mod module;
pub mod rank1;

pub use construct::{principal_series, steinberg_module, trivial_type_module};
pub use element::{aff_mul, AffHeckeElem, AffineHecke, TLeftForm};
pub use induce::{induce, induce_levi};
pub use levi::{levi_embed, Generator, LeviEmbedding, TwoBlockEmbedding};
pub use module::{central_character_decomp, AffineModule, CentralCharacter};
pub use gelfand_graev::{antispherical_apply, window_monomials, windowed_audit, CyclicType, InducedFromFinite, PolynomialModule};
pub use rank1::{
    eigen_monomial_search, expected_rank1_structures, f_m_lambda, satisfies_functional_equation,
    satisfies_functional_equation_bivariate, solve_rank1_structures, tilde_transform, two_variable_form, Rank1Structure,
};
