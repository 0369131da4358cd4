//! File formats, renderers and the command-line front end for
//! `linkoid-quiver`.

pub mod cli;
pub mod formats;
pub mod render;

use std::fmt;

/// Parse failure tied to a 1-based line number of the input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

impl ParseError {
    pub fn new(line: usize, message: impl Into<String>) -> Self {
        ParseError { line, message: message.into() }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}: {}", self.line, self.message)
    }
}

impl std::error::Error for ParseError {}

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("{0}")]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Core(#[from] linkoid_quiver::Error),
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("{0}")]
    Usage(String),
}

impl Error {
    /// Process exit code: 3 for capacity errors, 2 for everything else.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Core(linkoid_quiver::Error::Capacity { .. }) => 3,
            _ => 2,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
