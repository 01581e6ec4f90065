use thiserror::Error;

use crate::poly::Field;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("incompatible coefficient fields: {0:?} and {1:?}")]
    IncompatibleField(Field, Field),

    #[error("operands live in different polynomial rings")]
    IncompatibleRing,

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("element is not in the submodule")]
    NotInModule,

    #[error("not a system of parameters: R/(x) has Hilbert series {series}")]
    NotASop { series: String },

    #[error("precondition violated: {0}")]
    PreconditionFailed(String),

    #[error("lift failed at level {level}: {detail}")]
    LiftFailed { level: usize, detail: String },

    #[error("closed-form top map disagrees with the restricted map at column {column}")]
    TopMapMismatch { column: usize },

    #[error("Hilbert series difference is not a polynomial")]
    NonPolynomialDifference,

    #[error("no fixpoint after {0} iterations")]
    IterationLimit(usize),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("validation error: {0}")]
    Validation(String),

    #[error("internal consistency failure: {0}")]
    Internal(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    pub(crate) fn dims(msg: impl Into<String>) -> Self {
        Error::DimensionMismatch(msg.into())
    }
}
