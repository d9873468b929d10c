//! Error type shared across the crate.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum SynqaError {
    #[error("configuration error: {0}")]
    Config(String),

    #[error("capacity error: {0}")]
    Capacity(String),

    #[error("vocabulary error: token `{0}` is not in the closed vocabulary")]
    Vocab(String),

    #[error("input length {got} exceeds maximum {max}")]
    InputLength { got: usize, max: usize },

    #[error("input error: {0}")]
    Input(String),

    #[error("pairing error: {0}")]
    Pairing(String),

    #[error("partition error: {0}")]
    Partition(String),

    #[error("quota error: {0}")]
    Quota(String),

    #[error("alignment error: {0}")]
    Alignment(String),

    #[error("aggregation error: {0}")]
    Aggregation(String),

    #[error("training diverged: {0}")]
    Divergence(String),

    #[error("checkpoint error: {0}")]
    Checkpoint(String),

    #[error("data format error: {0}")]
    Format(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, SynqaError>;
