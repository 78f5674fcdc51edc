//! Products of parabolic cylinder functions, computed three independent ways.
//!
//! The crate evaluates D_v(x)·D_w(y) products through closed integral
//! representations over (0, 1), checks them against series/recurrence oracles,
//! inverts the Laplace-transform pairs they appear in (first-passage densities
//! and distributions of an Ornstein–Uhlenbeck process), and follows the
//! Γ-weighted products down to their elementary β → 0 limits:
//!
//! * [`special`] — oracle-grade D_v(z), log-gamma, erfc, K_{1/4}.
//! * [`quadrature`] — tanh-sinh integration on (0, 1) and (0, ∞), with a
//!   log-space variant for integrands that overflow.
//! * [`reps`] — the integral representations of cylinder-function products
//!   and their neighbours (erfc products, Bessel K_{1/4} forms).
//! * [`laplace`] — transform pairs: closed transform vs numerically
//!   forward-integrated time function, plus the process-level specializations.
//! * [`limits`] — β → 0 limits via log-space evaluation and polynomial
//!   extrapolation in β.
//! * [`report`] — pass/fail suites over all of the above with text, CSV and
//!   JSON output.
//! * [`cli`] — command-line front end (`eval`, `verify-reps`,
//!   `verify-laplace`, `verify-limits`, `report-all`).

// Domain guards are written `!(x > 0.0)` on purpose: unlike `x <= 0.0`, the
// negated form also rejects NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod cli;
pub mod error;
pub mod laplace;
pub mod limits;
pub mod quadrature;
pub mod report;
pub mod reps;
pub mod special;

pub use error::{Error, Result};
pub use quadrature::{IntegralEstimate, SingularityHint};
pub use reps::{EvalPoint, ProductValue, RepId};
pub use special::SpecialValue;
