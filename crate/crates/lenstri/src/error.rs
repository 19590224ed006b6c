//! Error type shared by all numerical operations.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, Error)]
pub enum Error {
    /// Input outside the operation's domain of validity.
    #[error("domain error: {0}")]
    Domain(String),

    /// A decay-rate argument was not strictly positive.
    #[error("invalid decay rate {0} (must be > 0)")]
    InvalidDecay(f64),

    /// The error estimate failed to reach the requested tolerance.
    #[error("did not converge in {context}: estimate {estimate:e} > target {target:e}")]
    NonConvergent {
        context: String,
        estimate: f64,
        target: f64,
    },

    /// Evaluation point is within the guard distance of a pole or zero lattice.
    #[error("pole/zero proximity: {0}")]
    Pole(String),

    /// An integration contour passes too close to an integrand pole.
    #[error("pole pinches the contour: {0}")]
    PolePinch(String),

    /// A balancing condition is violated beyond 1e-12.
    #[error("balancing condition violated: {0}")]
    Unbalanced(String),
}

impl Error {
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub fn pole(msg: impl Into<String>) -> Self {
        Error::Pole(msg.into())
    }

    pub fn nonconvergent(context: impl Into<String>, estimate: f64, target: f64) -> Self {
        Error::NonConvergent {
            context: context.into(),
            estimate,
            target,
        }
    }

    /// Machine-readable code used by the CLI and JSON reports.
    pub fn code(&self) -> &'static str {
        match self {
            Error::Domain(_) => "DOMAIN",
            Error::InvalidDecay(_) => "INVALID_DECAY",
            Error::NonConvergent { .. } => "NONCONVERGENT",
            Error::Pole(_) => "POLE",
            Error::PolePinch(_) => "POLE_PINCH",
            Error::Unbalanced(_) => "UNBALANCED",
        }
    }
}
