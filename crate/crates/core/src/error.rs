use thiserror::Error;

/// Errors raised by the simulation and closed-form routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum QceError {
    #[error("probability {0} lies outside [0, 1]")]
    InvalidProbability(f64),

    #[error("invalid parameter `{name}`: {reason}")]
    InvalidParameter { name: &'static str, reason: String },

    #[error("window leakage: boundary amplitude mass {mass:.3e} exceeds {limit:.1e}")]
    WindowLeakage { mass: f64, limit: f64 },

    #[error("outside the perturbative regime: {0}")]
    OutOfRegime(String),
}

impl QceError {
    pub(crate) fn param(name: &'static str, reason: impl Into<String>) -> Self {
        QceError::InvalidParameter {
            name,
            reason: reason.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, QceError>;
