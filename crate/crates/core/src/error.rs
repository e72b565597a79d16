use std::fmt;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for {n} vertices")]
    OutOfRange { vertex: usize, n: usize },
    #[error("invalid edge {edge:?}: {reason}")]
    InvalidEdge { edge: Vec<usize>, reason: String },
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("density shape not supported (sets partially overlap)")]
    UnsupportedShape,
    #[error("density has an empty denominator")]
    EmptyDenominator,
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("cap exceeded: {0}")]
    CapExceeded(String),
    #[error("budget exhausted after {0} evaluations")]
    BudgetExhausted(u64),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("search failed: {0}")]
    SearchFailed(String),
    #[error("verification failed: {0}")]
    Verification(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub fn invalid(msg: impl fmt::Display) -> Self {
        Error::Invalid(msg.to_string())
    }

    pub fn precondition(msg: impl fmt::Display) -> Self {
        Error::Precondition(msg.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
