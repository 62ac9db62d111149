use thiserror::Error;

/// Errors raised by the library.
///
/// Numerical outcomes that are not failures of the call itself (an
/// inconclusive certificate, an unstable resolution sweep) are returned as
/// values, not errors.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("theta = {theta} is outside (0, pi/4]; map it with a reflection or the swap symmetry first")]
    ThetaOutOfRange { theta: f64 },

    #[error("theta = {theta} is a critical value (table entry {closest} at indices ({i}, {j}))")]
    CriticalTheta { theta: f64, closest: f64, i: usize, j: usize },

    #[error("point ({x}, {y}) is not a critical zero (relative residual {residual:e})")]
    NotCritical { x: f64, y: f64, residual: f64 },

    #[error("degenerate Hessian at ({x}, {y}): entries {h11:e}, {h22:e}")]
    DegenerateHessian { x: f64, y: f64, h11: f64, h22: f64 },

    #[error("non-finite sample at ({x}, {y})")]
    NonFinite { x: f64, y: f64 },

    #[error("no sign change on [{lo}, {hi}]")]
    NoBracket { lo: f64, hi: f64 },

    #[error("threshold not met: {0}")]
    BelowThreshold(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidArgument(msg.into())
}
