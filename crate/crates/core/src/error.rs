//! Error type shared by every operation in the crate.

/// Errors reported by the library.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// The caller handed us something malformed: wrong shapes, negative
    /// entries where nonnegativity is required, non-finite data, bad
    /// parameter combinations.
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// A numerical routine failed to produce a usable answer
    /// (decomposition non-convergence, overflow in a matrix power, ...).
    #[error("numerical failure: {0}")]
    NumericalFailure(String),

    /// A residual check failed, meaning the full-rank-core hypothesis
    /// does not hold numerically for the given inputs.
    #[error("rank hypothesis violated in {context}: residual {residual:.3e} exceeds {threshold:.3e}")]
    RankHypothesisViolated {
        residual: f64,
        threshold: f64,
        context: &'static str,
    },

    /// The principal-core search ran out of candidates within its budget.
    #[error("core search exhausted: {0}")]
    SearchExhausted(String),

    /// The operation does not support matrices of this order.
    #[error("unsupported size: order {order} exceeds cap {cap}")]
    UnsupportedSize { order: usize, cap: usize },

    /// A randomized instance generator gave up after repeated resampling.
    #[error("instance generation failed after {attempts} attempts")]
    GenerationFailed { attempts: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
