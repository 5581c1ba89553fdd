//! Crate-wide error type.

use thiserror::Error;

/// Errors produced by synthesis, kinematics, simulation and evaluation.
#[derive(Debug, Error)]
pub enum Error {
    /// A numeric parameter violates its domain (e.g. non-positive spread).
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// An argument violates a call precondition (e.g. too few points).
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// Stroke timing that forces a non-positive lognormal spread.
    #[error("degenerate stroke parameters: {0}")]
    DegenerateParameter(String),

    /// The iterative solver did not reach tolerance.
    #[error("no convergence after {iterations} iterations (residual {residual:.3e})")]
    NoConvergence { iterations: usize, residual: f64 },

    /// Target pose lies outside the arm's reach envelope.
    #[error("unreachable target: distance {distance:.4} m exceeds reach {reach:.4} m")]
    UnreachableTarget { distance: f64, reach: f64 },

    /// A joint value left its configured limits.
    #[error("joint {joint} value {value:.4} rad outside limits [{min:.4}, {max:.4}]")]
    JointLimit {
        joint: usize,
        value: f64,
        min: f64,
        max: f64,
    },

    /// The simulated execution hit a fault at a specific control step.
    #[error("simulation fault at step {step}: {reason}")]
    SimulationFault { step: usize, reason: String },

    /// A per-sample operation failed; carries the failing sample index.
    #[error("failure at sample {index}: {source}")]
    AtSample {
        index: usize,
        #[source]
        source: Box<Error>,
    },

    /// SNR is undefined because the reference signal has zero power.
    #[error("undefined SNR: reference signal power is zero")]
    UndefinedSnr,

    #[error("I/O error: {0}")]
    Io(#[from] std::io::Error),

    /// Malformed manifest or CSV content.
    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// Wraps an error with the index of the sample that produced it.
    pub fn at_sample(self, index: usize) -> Self {
        Error::AtSample {
            index,
            source: Box::new(self),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
