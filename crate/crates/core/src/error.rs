use thiserror::Error;

use crate::setcore::{Subset, MAX_ELEMENTS};

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ground set of {0} elements exceeds the limit of {MAX_ELEMENTS}")]
    TooManyElements(usize),

    #[error("element {element} is outside the ground set 1..={size}")]
    ElementOutOfRange { element: usize, size: usize },

    #[error("order must list each of 1..={0} exactly once")]
    InvalidOrder(usize),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("matroid axiom violated: {0}")]
    Axiom(String),

    #[error("matroids live on different ground sets or orders")]
    GroundMismatch,

    #[error("not a matroid perspective: circuit {circuit} is not a union of circuits of the quotient")]
    NotPerspective { circuit: Subset },

    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },

    #[error("{0}")]
    Semantic(String),

    #[error("polynomial coefficient overflow")]
    Overflow,

    #[error("internal consistency failure: {0}")]
    Inconsistent(String),
}

impl Error {
    /// Process exit code used by the command-line front end.
    ///
    /// `0` is success, `1` covers unreadable or ill-formed input (including
    /// matroid axiom violations), `2` an invalid perspective, `3` a failed
    /// property check. Anything else is reported as `1`.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::NotPerspective { .. } | Error::GroundMismatch => 2,
            Error::Inconsistent(_) => 3,
            _ => 1,
        }
    }
}
