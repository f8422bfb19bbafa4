use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("size limit exceeded: {what} (limit {limit})")]
    Size { what: String, limit: u64 },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("value is not rational (nonzero irrational coordinates)")]
    NotRational,

    #[error("invalid embedding: {0}")]
    Embedding(String),

    #[error("internal error: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse { line, msg: msg.into() }
    }

    pub(crate) fn size(what: impl Into<String>, limit: u64) -> Self {
        Error::Size { what: what.into(), limit }
    }
}
