use thiserror::Error;

use crate::bipoly::{BiDeg, PolyError};
use crate::exactnum::LinalgError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("bidegree mismatch: {0}")]
    DegreeMismatch(String),
    #[error("the three forms have a common zero on P1 x P1")]
    DegenerateInput,
    #[error("instance is generic: no syzygy of bidegree (2,3) exists")]
    GenericInstance,
    #[error("formula is undefined for a degenerate instance")]
    DegenerateClass,
    #[error("internal error: inexact division in {0}")]
    InternalNonExactDivision(&'static str),
    #[error("internal invariant violated: {0}")]
    InternalInvariantViolation(String),
    #[error("input polynomial is zero")]
    ZeroInput,
    #[error("the pair does not form a complete intersection")]
    NotCompleteIntersection,
    #[error("normal form factorization failed: {0}")]
    FactorizationFailure(String),
    #[error("chain map lift has no solution at homological degree {index}, column {column}")]
    LiftInconsistent { index: usize, column: usize },
    #[error("verification failed: {check} at {at}")]
    VerificationFailure { check: String, at: BiDeg },
    #[error("no admissible instance after {0} draws")]
    GenerationExhausted(usize),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
