use thiserror::Error;

/// Errors raised by the solvers, the recognizers and the fitting routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid interval [{lo}, {hi}]: endpoints must be finite with lo < hi")]
    InvalidInterval { lo: f64, hi: f64 },

    #[error("invalid tolerance: {0}")]
    InvalidTolerance(String),

    #[error("section ratio must satisfy 0 < c < 1, got {0}")]
    InvalidRatio(f64),

    #[error("objective returned a non-finite value at x = {x}")]
    NonFinite { x: f64 },

    #[error("non-finite abscissa {x} requested")]
    NonFiniteAbscissa { x: f64 },

    #[error("evaluation budget of {limit} exhausted")]
    BudgetExhausted { limit: usize },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("collinear points: the interpolating parabola has no vertex")]
    NoVertex,

    #[error("singular linear system (zero pivot in column {column})")]
    Singular { column: usize },

    #[error("rank-deficient fit: need at least {needed} distinct abscissas, got {found}")]
    RankDeficient { needed: usize, found: usize },

    #[error("unknown benchmark function id {0} (expected 1..=20)")]
    UnknownFunction(usize),

    #[error("malformed fixture line {line}: {reason}")]
    Fixture { line: usize, reason: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
