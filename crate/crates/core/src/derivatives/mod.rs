//! Bernstein-Zelevinsky derivatives of affine and graded modules, and the
//! checks built on them.

pub mod affine;
pub mod graded;
pub mod leibniz;
pub mod report;

pub use affine::{bz, bz_multi, whittaker_dim};
pub use graded::{decompose_symmetric, gbz, gbz_multi, speh_derivative};
pub use leibniz::{check_block_separation, index_tuples, is_q_power, leibniz_verify, mackey_verify};
pub use report::{DerivativeReport, Summand, Verdict};
