//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// Invalid configuration (layer sizes, schedules, geometry parameters, ...).
    #[error("invalid configuration: {0}")]
    Config(String),

    /// A caller passed data whose shape does not match the receiver.
    #[error("dimension mismatch: {0}")]
    Dimension(String),

    /// A non-finite value appeared where the computation requires finite ones.
    #[error("numerical failure: {0}")]
    Numeric(String),

    /// A model or dataset file does not follow its documented grammar.
    #[error("format error: {0}")]
    Format(String),

    /// A data file row failed to parse; `row` is 1-based.
    #[error("parse error at row {row}: {msg}")]
    Parse { row: usize, msg: String },

    /// Rejection sampling made no progress.
    #[error("generation failed: {0}")]
    Generation(String),

    /// A statistic is undefined for the given input (empty, constant, ...).
    #[error("undefined statistic: {0}")]
    UndefinedStat(String),

    /// An operation that needs data received none.
    #[error("empty input: {0}")]
    Empty(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
