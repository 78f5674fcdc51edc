//! Error type shared by every numerical routine in the crate.
//!
//! Numerical failures are not panics here: a quadrature that cannot reach its
//! tolerance, a gamma evaluated at a pole, or a series route that has lost too
//! many digits to cancellation all surface as `Error` values so callers can
//! fall back to another route or report the failure in a verification table.

use thiserror::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// An argument fell outside the documented domain of a routine.
    #[error("domain error in {routine}: {message}")]
    Domain {
        routine: &'static str,
        message: String,
    },

    /// The integrand produced a NaN; the abscissa is reported for diagnosis.
    #[error("integrand returned NaN at abscissa {at:e}")]
    IntegrandNan { at: f64 },

    /// An endpoint-singularity hint was not integrable (exponent must be > -1).
    #[error("singularity hint exponent {exponent} is not integrable (must be > -1)")]
    BadHint { exponent: f64 },

    /// Refinement stopped at the level cap without meeting the tolerance.
    #[error(
        "quadrature did not converge: value {value:e}, \
         error estimate {abs_error_estimate:e} above tolerance {tolerance:e}"
    )]
    NoConvergence {
        value: f64,
        abs_error_estimate: f64,
        tolerance: f64,
    },

    /// Gamma (or a reciprocal-gamma coefficient) was requested at a pole.
    #[error("gamma pole at argument {argument}")]
    GammaPole { argument: f64 },

    /// An order recurrence would divide by a vanishing order term.
    #[error("recurrence pole: order factor v + j vanishes at j = {offset}")]
    RecurrencePole { offset: i32 },

    /// The series route cancelled too heavily to certify the result.
    #[error("cancellation loss: estimated relative error {estimated_rel_error:.2e} exceeds {limit:.2e}")]
    Cancellation {
        estimated_rel_error: f64,
        limit: f64,
    },

    /// Writing a report to disk failed.
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Shorthand used by argument checks at the top of public routines.
    pub(crate) fn domain(routine: &'static str, message: impl Into<String>) -> Self {
        Error::Domain {
            routine,
            message: message.into(),
        }
    }
}
