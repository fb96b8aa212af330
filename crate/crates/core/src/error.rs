use thiserror::Error;

use crate::rational::Rational;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    /// Malformed input text: JSON syntax, unknown keys, bad rational literals.
    #[error("parse error: {0}")]
    Parse(String),

    #[error("unknown generator `{0}` referenced in differential")]
    UnknownGenerator(String),

    /// The complex failed validation or its homology in the ambient grading is not rank one.
    #[error("non-admissible complex: {0}")]
    NonAdmissible(String),

    #[error("parameter t = {0} lies outside [0, 2]")]
    ParameterOutOfRange(Rational),

    #[error("grading slice has {size} lattice points, brute force is limited to {limit}")]
    SliceTooLarge { size: usize, limit: usize },

    #[error("tau is defined for complexes with ambient_d = 0, got {0}")]
    AmbientNotZero(i64),

    #[error("invalid piecewise-linear function: {0}")]
    InvalidPL(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("missing data: {0}")]
    MissingData(String),

    /// Two independent computations disagreed; always a bug in this crate.
    #[error("internal consistency failure: {0}")]
    Inconsistent(String),
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}
