use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("input is empty")]
    Empty,

    #[error("sample {index} is not finite")]
    NonFinite { index: usize },

    #[error("size must be positive")]
    ZeroSize,

    #[error("unsupported size {0}: radix-2 transforms need a power-of-two length")]
    UnsupportedSize(usize),

    #[error("size mismatch: plan is for {expected} points, input has {actual}")]
    SizeMismatch { expected: usize, actual: usize },

    #[error("frequency index {k} out of range for N = {n}")]
    IndexOutOfRange { k: usize, n: usize },

    #[error("decomposition needs an even N, got {0}")]
    OddSize(usize),

    #[error("expected {expected} labels, got {actual}")]
    LabelCount { expected: usize, actual: usize },

    #[error("invalid benchmark configuration: {0}")]
    InvalidBenchmark(String),

    #[error("insufficient data: {0}")]
    InsufficientData(String),

    #[error("invalid render style: {0}")]
    InvalidStyle(&'static str),
}
