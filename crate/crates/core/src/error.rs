use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    Parameter(String),

    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },

    #[error("invalid input: {0}")]
    Input(String),

    #[error("structure error: {0}")]
    Structure(String),

    #[error("graph is disconnected; the eccentricity matrix needs a connected graph")]
    Disconnected,

    #[error("contract violated: {0}")]
    Contract(String),

    #[error("numeric failure: {0}")]
    Numeric(String),

    #[error("partition is not equitable: block pair ({row_block}, {col_block}), row {row}")]
    Partition {
        row_block: usize,
        col_block: usize,
        row: usize,
    },

    #[error("hypothesis not satisfied: {0}")]
    Hypothesis(String),
}

impl Error {
    pub(crate) fn parse(offset: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            offset,
            message: message.into(),
        }
    }
}
