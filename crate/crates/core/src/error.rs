use thiserror::Error;

use crate::multipoly::VarId;

/// Errors raised by polynomial construction, enumeration and the verification suites.
#[derive(Debug, Error)]
pub enum Error {
    #[error("variable index must be at least 1, got {0}")]
    ZeroIndex(i64),
    #[error("index shift by {delta} sends {var} below 1")]
    IndexUnderflow { var: VarId, delta: i64 },
    #[error("no value assigned to variable {0}")]
    MissingAssignment(VarId),
    #[error("polynomial is not multiaffine in {0}")]
    NotMultiaffine(String),
    #[error("the zero polynomial has no root structure")]
    ZeroPolynomial,
    #[error("division is not exact")]
    InexactDivision,
    #[error("polynomial still depends on {0} after reduction to one variable")]
    NotUnivariate(VarId),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("invalid rank or parameter: {0}")]
    InvalidParameter(String),
    #[error("support pattern is not realisable: {0}")]
    InvalidSupport(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
