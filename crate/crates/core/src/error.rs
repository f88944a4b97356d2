use std::fmt;

use thiserror::Error;

/// A single broken invariant, reported as data by `validate`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub field: String,
    pub message: String,
}

impl Violation {
    pub fn new(field: impl Into<String>, message: impl Into<String>) -> Self {
        Violation {
            field: field.into(),
            message: message.into(),
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.field, self.message)
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid instance: {}", join(.0))]
    Invalid(Vec<Violation>),

    /// The input is well-formed but outside the operation's domain
    /// (wrong variant, non-uniform sequence, ...).
    #[error("precondition failed: {0}")]
    Precondition(String),

    /// An exhaustive oracle was asked to enumerate more than its guard allows.
    #[error("size guard exceeded: {0}")]
    TooLarge(String),

    #[error("OMv engine exhausted after {0} rounds")]
    RoundsExhausted(usize),

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("unknown name: {0}")]
    Unknown(String),
}

fn join(v: &[Violation]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join("; ")
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn precondition<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Precondition(msg.into()))
}
