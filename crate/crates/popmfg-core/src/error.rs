//! Error type shared across the crate.

use alloc::string::String;
use core::fmt;

/// Errors produced by constructors, evaluators, integrators, and the solver.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// Malformed arguments: dimension mismatches, bad parameter ranges,
    /// mismatched grids, or violated structural invariants.
    InvalidInput(String),
    /// An evaluation left the mathematical domain of the operation
    /// (logarithm of a non-positive mass, projection dynamics off the
    /// simplex interior, a degenerate renormalization).
    Domain(String),
    /// A trajectory was queried outside its time horizon.
    OutOfRange { t: f64, t0: f64, t_end: f64 },
    /// The fixed-point iteration produced a non-finite node value.
    NumericalFailure { iteration: usize, message: String },
    /// Long-run integration hit its time cap before meeting the residual
    /// target.
    NoConvergence { t_cap: f64, residual: f64 },
    /// A Monte Carlo step size violates the first-order transition bound
    /// `dt * max_i sum_j rate(i, j) <= 1`.
    StepSize { dt: f64, dt_max: f64 },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidInput(msg) => write!(f, "invalid input: {msg}"),
            Error::Domain(msg) => write!(f, "domain error: {msg}"),
            Error::OutOfRange { t, t0, t_end } => {
                write!(f, "time {t} outside trajectory horizon [{t0}, {t_end}]")
            }
            Error::NumericalFailure { iteration, message } => {
                write!(f, "numerical failure at iteration {iteration}: {message}")
            }
            Error::NoConvergence { t_cap, residual } => write!(
                f,
                "no convergence within time cap {t_cap} (residual {residual:e})"
            ),
            Error::StepSize { dt, dt_max } => write!(
                f,
                "step size {dt} exceeds the first-order transition bound {dt_max}; use a finer grid"
            ),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
