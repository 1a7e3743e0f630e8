use thiserror::Error;

/// Errors reported by every fallible operation in the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("construction failed: {0}")]
    Construction(String),
    #[error("out of range: {0}")]
    Range(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("embedding failed: {0}")]
    Embed(String),
    #[error("enumeration of 2^{log2_size} words exceeds the budget of {budget}")]
    Budget { log2_size: usize, budget: u64 },
    #[error("undefined: {0}")]
    Undefined(String),
    #[error("decoder configuration rejected: {0}")]
    Config(String),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("domain error: {0}")]
    Domain(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn check_len(expected: usize, got: usize) -> Result<()> {
    if expected == got {
        Ok(())
    } else {
        Err(Error::LengthMismatch { expected, got })
    }
}

/// Fails with [`Error::Budget`] when `2^log2_size` exceeds `budget`.
pub(crate) fn check_budget(log2_size: usize, budget: u64) -> Result<()> {
    if log2_size >= 64 || (1u64 << log2_size) > budget {
        Err(Error::Budget { log2_size, budget })
    } else {
        Ok(())
    }
}
