use thiserror::Error;

/// Errors produced by configuration construction, hypothesis checks, and I/O.
///
/// Structural errors (bad dimensions, bad parameters, unreadable input) mean
/// the request itself was malformed. Hypothesis violations mean the input was
/// well-formed but does not satisfy the preconditions of the identity being
/// evaluated; callers that treat identity failures as data can downgrade them.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },

    #[error("configuration must contain at least one point")]
    Empty,

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("size guard exceeded: {0}")]
    SizeGuard(String),

    #[error("hypothesis violation [{hypothesis}]: {detail}")]
    HypothesisViolation { hypothesis: String, detail: String },

    #[error(
        "configuration is already antipodally symmetric; the symmetrization bounds \
         do not apply — use the symmetric-sum check instead"
    )]
    AlreadySymmetric,

    #[error("{points} points cannot span R^{dimension}; tightness needs at least {dimension}")]
    CannotSpan { points: usize, dimension: usize },

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// Pre-condition failures of an identity, as opposed to malformed input.
    pub fn is_hypothesis_violation(&self) -> bool {
        matches!(
            self,
            Error::HypothesisViolation { .. } | Error::AlreadySymmetric | Error::CannotSpan { .. }
        )
    }

    pub(crate) fn hypothesis(hypothesis: &str, detail: impl Into<String>) -> Self {
        Error::HypothesisViolation {
            hypothesis: hypothesis.to_string(),
            detail: detail.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
