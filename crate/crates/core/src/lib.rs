//! Exact computations in Iwahori-Hecke algebras of type A: finite, affine
//! (Bernstein presentation) and graded, with Bernstein-Zelevinsky
//! derivatives of their finite-dimensional modules.
//!
//! All arithmetic is exact. Scalars live in `ℚ(q)` with `q` formal
//! ([`RatFunc`]); specializing `q` means passing a constant `RatFunc`.
//!
//! The crate is `no_std` and needs only `alloc`.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod certificate;
pub mod derivatives;
pub mod error;
pub mod exactalg;
pub mod field;
pub mod heckeaff;
pub mod heckefin;
pub mod heckegrad;
pub mod linalg;
pub mod symgroup;

pub use error::{Error, Result};
pub use exactalg::{LaurentPoly, RatFunc};
pub use field::{Field, Rational};
