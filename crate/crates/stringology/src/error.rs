use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("input byte 0x00 at offset {offset} collides with the reserved sentinel")]
    ReservedByte { offset: usize },

    #[error("text must contain at least one symbol")]
    EmptyText,

    #[error("position {index} outside valid range [0, {max}]")]
    IndexOutOfRange { index: usize, max: usize },

    #[error("{stage}: input length {len} exceeds the cap of {cap} (raise it with {flag})")]
    SizeCapExceeded {
        stage: &'static str,
        len: usize,
        cap: usize,
        flag: &'static str,
    },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("invalid occurrence: {0}")]
    InvalidOccurrence(String),

    #[error("classification indices out of range: {0}")]
    Classification(String),

    #[error("incompatible periodic extensions: {0}")]
    IncompatibleExtensions(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}
