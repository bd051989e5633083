//! Exact scalars, univariate polynomials, and Laurent polynomials.

pub mod laurent;
pub mod parse;
pub mod ratfunc;
pub mod upoly;

pub use laurent::{laurent_mul, Exponent, LaurentPoly};
pub use parse::{parse_laurent, parse_ratfunc};
pub use ratfunc::{QPoly, RatFunc};
pub use upoly::Poly;
