use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A constructor invariant was violated. The message names the invariant.
    #[error("{0}")]
    InvalidFunction(String),

    /// An argument lies outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    #[error("functions do not share one partition")]
    PartitionMismatch,

    #[error("invalid grid: {0}")]
    InvalidGrid(String),

    #[error("tensor grid has {size} points, budget is {budget}; use coarser axes")]
    GridTooLarge { size: u128, budget: u64 },

    #[error("bracket search overflowed: {0}")]
    Overflow(String),
}

impl Error {
    /// True for errors caused by malformed input rather than out-of-domain values.
    pub fn is_input_error(&self) -> bool {
        matches!(
            self,
            Error::InvalidFunction(_) | Error::PartitionMismatch | Error::InvalidGrid(_) | Error::GridTooLarge { .. }
        )
    }
}
