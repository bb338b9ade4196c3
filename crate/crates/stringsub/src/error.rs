use thiserror::Error;

/// Errors shared by the solver and checker entry points.
#[derive(Debug, Error)]
pub enum Error {
    /// Enumerating the requested string space would exceed the evaluation budget.
    #[error("instance too large: {required} strings to evaluate exceeds budget {budget}")]
    BudgetExceeded { required: u128, budget: u64 },

    /// Curvature-adjusted factors are only defined for curvature in (0, 1].
    #[error("curvature out of range: {0} is not in (0, 1]")]
    CurvatureOutOfRange(f64),

    /// Instance data violates a structural invariant.
    #[error("invalid instance: {0}")]
    InvalidInstance(String),

    /// A parameter range is empty or out of bounds.
    #[error("invalid range: {0}")]
    InvalidRange(String),

    /// The requested horizon exceeds what the oracle supports.
    #[error("horizon {requested} exceeds oracle horizon {available}")]
    HorizonExceeded { requested: usize, available: usize },

    /// Condition checkers stated for the single-subtask reduction.
    #[error("condition requires a single subtask (n = 1), instance has n = {0}")]
    RequiresSingleSubtask(usize),

    /// Operations indexed by the optimal strategy need a full-length optimum.
    #[error("optimal strategy has length {len}, expected the full horizon {horizon}")]
    OptimalShorterThanHorizon { len: usize, horizon: usize },

    /// Stage index outside 1..=K-1.
    #[error("stage {stage} out of range 1..={max}")]
    StageOutOfRange { stage: usize, max: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
