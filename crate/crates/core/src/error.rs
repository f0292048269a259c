use std::fmt;

use thiserror::Error;

/// Which defining law a structure-constant or Cayley-table scan tripped over.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Law {
    WellDefined,
    Commutativity,
    Associativity,
    Identity,
}

impl fmt::Display for Law {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Law::WellDefined => "well-definedness",
            Law::Commutativity => "commutativity",
            Law::Associativity => "associativity",
            Law::Identity => "identity",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{law} fails at basis indices ({i}, {j}, {k})")]
    AxiomViolation {
        law: Law,
        i: usize,
        j: usize,
        k: usize,
    },
    #[error("order {order} exceeds the configured cap {cap}")]
    OrderCap { order: u128, cap: usize },
    #[error("invalid descriptor: {0}")]
    InvalidDescriptor(String),
    #[error("ideals belong to different rings")]
    RingMismatch,
    #[error("element does not belong to this monoid algebra: {0}")]
    Mismatch(String),
    #[error("cross-validation mismatch: {0}")]
    CrossValidationMismatch(String),
    #[error("no exponent found up to cap {cap}")]
    CapExceeded { cap: usize },
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("unknown check name: {0}")]
    UnknownCheck(String),
    #[error("parse error at offset {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
