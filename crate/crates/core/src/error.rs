use thiserror::Error;

use crate::graph::Pair;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("pair {0} is both forced and forbidden")]
    Overlap(Pair),

    #[error("out of range: {0}")]
    Range(String),

    #[error("size limit exceeded: {0}")]
    Size(String),

    #[error("search budget of {0} nodes exhausted")]
    Budget(u64),

    #[error("signature mismatch: {0}")]
    Signature(String),

    #[error("graph is not bipartite")]
    NotBipartite,

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("invalid argument: {0}")]
    Invalid(String),
}

impl Error {
    pub(crate) fn range(msg: impl Into<String>) -> Self {
        Error::Range(msg.into())
    }

    pub(crate) fn size(msg: impl Into<String>) -> Self {
        Error::Size(msg.into())
    }

    pub(crate) fn signature(msg: impl Into<String>) -> Self {
        Error::Signature(msg.into())
    }

    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            msg: msg.into(),
        }
    }

    /// Process exit code used by the command-line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parse { .. } => 2,
            Error::Size(_) => 3,
            Error::Budget(_) => 4,
            _ => 1,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
