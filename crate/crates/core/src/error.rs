use thiserror::Error;

use crate::numdata::Violation;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid profile: {0}")]
    InvalidProfile(String),

    #[error("invalid matrix model: {0}")]
    InvalidMatrix(String),

    #[error("invalid norm class: {0}")]
    InvalidSpec(String),

    #[error("matrix is not symmetric at ({row}, {col})")]
    AsymmetricInput { row: usize, col: usize },

    #[error("profile entry L^{k}M^{power} = {value} is not an integer")]
    NonIntegralProfile {
        k: usize,
        power: usize,
        value: String,
    },

    #[error("Hodge index inequality fails: (L.M)^2 = {lm_squared} < L^2 M^2 = {product}")]
    HodgeViolation { lm_squared: String, product: String },

    #[error("validation failed: {0}")]
    Validation(Violation),

    #[error("chi polynomial is constant")]
    DegenerateInput,

    #[error("-M is nef, so the slope is infinite and no lower bound applies")]
    NegationIsNef,

    #[error("slope is infinite; no rationality certificate exists")]
    InfiniteSlope,

    #[error("instances disagree on L^n: {first} vs {other} (instance {index})")]
    InconsistentContext {
        first: String,
        other: String,
        index: usize,
    },

    #[error("could not parse exact number {0:?}")]
    Parse(String),
    #[error("invalid instance JSON: {0}")]
    Json(String),
}

impl Error {
    /// Errors caused by a violated mathematical precondition rather than
    /// malformed input.
    pub fn is_precondition(&self) -> bool {
        matches!(self, Error::NegationIsNef | Error::InfiniteSlope)
    }
}
