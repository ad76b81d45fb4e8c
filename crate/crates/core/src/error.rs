use thiserror::Error;

use crate::scenario::ScenarioId;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid parameter `{name}` = {value}: {reason}")]
    InvalidParameter {
        name: &'static str,
        value: f64,
        reason: &'static str,
    },

    #[error("missing parameter `{name}` required by scenario {scenario}")]
    MissingParameter {
        name: &'static str,
        scenario: ScenarioId,
    },

    #[error("invalid geometry: {0}")]
    InvalidGeometry(String),

    /// An `acos`/`asin`/`sqrt` argument left its domain by more than the clamp tolerance.
    #[error("numeric domain violation in {context}: argument {value} is outside the valid domain")]
    NumericDomain { context: &'static str, value: f64 },

    #[error("beam is tangent-limited; the difference-of-angles form does not apply")]
    UnsupportedBranch,

    #[error("parameter `{parameter}` is inapplicable to scenario {scenario}")]
    Inapplicable {
        parameter: &'static str,
        scenario: ScenarioId,
    },

    #[error("unknown rng algorithm `{0}`")]
    UnknownRng(String),
}

pub(crate) fn require_positive(name: &'static str, value: f64) -> Result<f64> {
    if value.is_finite() && value > 0.0 {
        Ok(value)
    } else {
        Err(Error::InvalidParameter {
            name,
            value,
            reason: "must be finite and strictly positive",
        })
    }
}

pub(crate) fn require_nonnegative(name: &'static str, value: f64) -> Result<f64> {
    if value.is_finite() && value >= 0.0 {
        Ok(value)
    } else {
        Err(Error::InvalidParameter {
            name,
            value,
            reason: "must be finite and non-negative",
        })
    }
}
