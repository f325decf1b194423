use thiserror::Error;

/// Errors raised by the evaluators.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument lies outside the function's domain or the series' convergence region.
    #[error("domain error: {0}")]
    Domain(String),
    /// Evaluation at (or inside the guard band of) a pole.
    #[error("pole of {function} at s = {at}")]
    Pole { function: &'static str, at: f64 },
    /// A summation hit its term cap before reaching the requested tolerance.
    #[error("no convergence after {terms} terms: {reason} (best value {best:e}, error estimate {error_estimate:e})")]
    Convergence {
        reason: String,
        best: f64,
        error_estimate: f64,
        terms: u64,
    },
    /// A precomputed table is too small for the request.
    #[error("capacity exceeded: index {requested} requested, table holds {capacity}")]
    Capacity { requested: usize, capacity: usize },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}
