use alloc::string::String;

/// Errors raised by the algebra routines.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("variable count mismatch: {left} vs {right}")]
    VariableCountMismatch { left: usize, right: usize },
    #[error("rank mismatch: expected {expected}, found {found}")]
    RankMismatch { expected: usize, found: usize },
    #[error("index {index} out of range (bound {bound})")]
    IndexOutOfRange { index: i64, bound: usize },
    #[error("operation undefined on the zero polynomial")]
    ZeroPolynomial,
    #[error("zero entry where a unit is required: {0}")]
    ZeroEntry(String),
    #[error("denominator vanishes at the specialized parameter")]
    VanishingDenominator,
    #[error("Poincare normalizer vanishes at the specialized parameter")]
    VanishingNormalizer,
    #[error("invalid composition: {0}")]
    InvalidComposition(String),
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("not invertible: {0}")]
    NotInvertible(String),
    #[error("unsupported module: {0}")]
    Unsupported(String),
    #[error("blocks not distinguishable: {0}")]
    IndistinguishableBlocks(String),
    #[error("internal consistency failure: {0}")]
    Inconsistent(String),
    #[error("input must be univariate")]
    MultivariateInput,
    #[error("no eigen-monomial within search bound {0}")]
    NoEigenMonomial(i32),
    #[error("invalid generator: {0}")]
    InvalidGenerator(String),
}

pub type Result<T, E = Error> = core::result::Result<T, E>;
