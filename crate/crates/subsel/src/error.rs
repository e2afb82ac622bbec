use thiserror::Error;

/// Errors reported by construction, queries and index (de)serialization.
#[derive(Debug, Error)]
pub enum Error {
    #[error("text must be non-empty")]
    EmptyText,

    #[error("text length {0} exceeds the maximum of 2^31 - 1")]
    TextTooLong(usize),

    #[error("position range [{i}, {j}] is invalid for text length {n}")]
    BadRange { i: usize, j: usize, n: usize },

    #[error("rank {k} is out of bounds for a substring of length {len}")]
    BadRank { k: usize, len: usize },

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    #[error("corrupt index: {0}")]
    Corrupt(String),
}

pub type Result<T> = std::result::Result<T, Error>;
