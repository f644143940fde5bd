use thiserror::Error;

/// Failure modes shared by every module in this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An input lies outside the mathematical domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// An iterative method exhausted its budget before reaching tolerance.
    #[error("convergence failure: {0}")]
    Convergence(String),

    /// A numerical procedure produced an unusable result (non-finite value,
    /// quadrature that cannot meet its tolerance, and similar).
    #[error("numerical error: {0}")]
    Numerical(String),
}

pub type Result<T> = std::result::Result<T, Error>;
