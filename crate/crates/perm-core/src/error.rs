use std::fmt;

/// Errors raised by group construction and queries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Bad caller input (degree mismatch, point out of range, not a subgroup, ...).
    Input(String),
    /// A configured budget (index, enumeration, node count) was exceeded.
    Resource(String),
    /// An operation was called in a state that does not support it.
    State(String),
    /// A file could not be parsed; line numbers are 1-based.
    Parse { line: usize, msg: String },
    /// Violated internal invariant.
    Internal(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Input(m) => write!(f, "input error: {m}"),
            Error::Resource(m) => write!(f, "resource error: {m}"),
            Error::State(m) => write!(f, "state error: {m}"),
            Error::Parse { line, msg } => write!(f, "parse error at line {line}: {msg}"),
            Error::Internal(m) => write!(f, "internal error: {m}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
