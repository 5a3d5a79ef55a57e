use std::path::PathBuf;

use thiserror::Error;

/// Errors produced by every module in this crate.
///
/// Undefined scores (empty strata, zero denominators) are deliberately typed
/// rather than surfaced as NaN: real datasets hit empty strata routinely and
/// callers need to tell "no data" apart from "score of zero".
#[derive(Debug, Error)]
pub enum Error {
    #[error("malformed simplex: vertex {vertex} appears more than once in {vertices:?}")]
    DuplicateVertex { vertex: u32, vertices: Vec<u32> },

    #[error("malformed simplex: empty vertex set")]
    EmptySimplex,

    #[error("node {0} has no class label")]
    MissingLabel(u32),

    #[error("unknown class index {class} (labeling has {classes} classes)")]
    UnknownClass { class: u32, classes: usize },

    #[error("undefined score: {0}")]
    UndefinedScore(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("{}:{line}: {message}", path.display())]
    Parse {
        path: PathBuf,
        line: usize,
        message: String,
    },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn parse(path: impl Into<PathBuf>, line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            path: path.into(),
            line,
            message: message.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
