use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("input string is empty")]
    EmptyInput,
    #[error("window start={start} len={len} lies outside a text of length {text_len}")]
    OutOfRange {
        start: usize,
        len: usize,
        text_len: usize,
    },
    #[error("cannot slide symbol {symbol} out of a window that contains none")]
    Underflow { symbol: u32 },
    #[error("window length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
}
