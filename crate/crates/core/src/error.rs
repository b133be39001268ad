use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid r-partition: {0}")]
    InvalidRPartition(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("shape mismatch: {0}")]
    Mismatch(String),

    #[error("division by zero")]
    DivisionByZero,

    #[error("evaluation of a negative power at zero")]
    EvalAtZero,

    #[error("rational function {0} is not a Laurent polynomial")]
    NotLaurent(String),

    #[error("cyclotomic value {0} is not rational")]
    NotRational(String),

    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("size bound exceeded: {0}")]
    BoundExceeded(String),

    #[error("vanishing pivot at position {index} ({label})")]
    VanishingPivot { index: usize, label: String },

    #[error("internal consistency failure: {0}")]
    Inconsistent(String),
}

pub type Result<T> = std::result::Result<T, Error>;
