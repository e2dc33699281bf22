use thiserror::Error;

/// Failures while reading expressions, rationals, or JSON documents.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("exponent at position {pos} is too large")]
    ExponentOverflow { pos: usize },
    #[error("zero denominator at position {pos}")]
    ZeroDenominator { pos: usize },
    #[error("malformed rational {0:?}")]
    BadRational(String),
    #[error("malformed JSON: {0}")]
    Json(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("shift index must be nonzero")]
    ZeroShift,
    #[error("{0} of the zero element is undefined")]
    ZeroInput(&'static str),
    #[error("expected a homogeneous element, found mass {0}")]
    NotHomogeneous(usize),
    #[error("expected a nonzero degree")]
    ZeroDegree,
    #[error("coefficient is not monic")]
    NotMonic,
    #[error("constants are central; centralizer is the whole algebra")]
    ConstantCentralizer,
    #[error("determinant ad - bc is {0}, not 1")]
    Determinant(String),
    #[error("commutator is {0}, not 1")]
    Commutator(String),
    #[error("out of scope: {0}")]
    OutOfScope(String),
    #[error("bounds too large: {0}")]
    BoundsTooLarge(String),
    #[error("internal verification failed: {0}")]
    Verification(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
