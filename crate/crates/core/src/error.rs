use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("invalid diagram: {0}")]
    InvalidDiagram(String),
    #[error("{0} is out of range")]
    OutOfRange(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("mismatched root-of-unity order: {0} vs {1}")]
    OrderMismatch(u32, u32),
    #[error("variable sets differ")]
    VariableMismatch,
    #[error("move {kind} does not match at the given site: {reason}")]
    PatternMismatch { kind: String, reason: String },
    #[error("{0} is a forbidden move")]
    ForbiddenMove(String),
    #[error("unknown example `{0}`")]
    UnknownExample(String),
    #[error("invalid character: {0}")]
    InvalidCharacter(String),
    #[error("internal inconsistency: {0}")]
    Inconsistency(String),
}
