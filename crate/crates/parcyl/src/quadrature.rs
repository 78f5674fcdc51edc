//! Double-exponential (tanh-sinh) quadrature.
//!
//! Three integral shapes recur throughout this crate and all are driven by the
//! same node ladder:
//!
//! * finite integrals on (0,1) whose kernels have algebraic endpoint
//!   singularities such as u^{-1/2} or (1-u)^{-1-v/2},
//! * semi-infinite integrals with eventual exponential decay,
//! * semi-infinite integrals whose integrands only fit in log space.
//!
//! The substitution is u = σ(2w), w = (π/2)·sinh t, which maps t ∈ (-∞, ∞)
//! onto u ∈ (0, 1) with weight du/dt = π·cosh t·u·(1-u). Truncating at
//! |t| = 6.1 keeps π·sinh t ≈ 699 below the exp overflow threshold (≈ 709.8),
//! so u and 1-u stay strictly positive in f64 and integrable endpoint
//! singularities are sampled right down to u ≈ 4e-304. The trapezoid step starts at h = 1 and halves
//! per refinement level; every previous node is reused, so level L costs only
//! the new odd-index nodes.
//!
//! Integrands on (0,1) receive both u and 1-u. Kernels with right-endpoint
//! singularities need 1-u to full precision, and forming it as `1.0 - u`
//! would round to zero long before the edge.

use crate::error::{Error, Result};
use std::f64::consts::{FRAC_PI_2, LN_2, PI};

/// Convergence target used when callers do not supply one: the
/// absolute-or-relative scale is `tol · max(1, |value|)`.
pub const DEFAULT_TOL: f64 = 1e-10;

/// Hard cap on trapezoid halvings (h = 2^-12 at the last level).
pub const MAX_LEVELS: u32 = 12;

/// Truncation rule for semi-infinite integrands: integrate out to where the
/// integrand has dropped this many nats below its peak.
pub const TRUNCATION_NATS: f64 = 45.0;

/// Node ladder endpoint in t; π·sinh(6.1) ≈ 699 nats keeps every weight
/// representable.
const T_MAX: f64 = 6.1;

/// Result of a quadrature run.
///
/// `converged` means the level-to-level difference plus endpoint tail bounds
/// fell below `tol · max(1, |value|)`; when it is false the value is still the
/// best available estimate and `abs_error_estimate` says how bad it might be.
#[derive(Clone, Copy, Debug)]
pub struct IntegralEstimate {
    pub value: f64,
    pub abs_error_estimate: f64,
    pub evaluations: usize,
    pub converged: bool,
}

/// Leading endpoint behaviour of an integrand on (0,1): f ~ u^left near 0 and
/// f ~ (1-u)^right near 1. Exponents must be > -1 (integrable). Endpoints
/// where the integrand decays exponentially are declared with the slowest
/// algebraic factor present (or 0); the bound only becomes loose, never wrong,
/// because the tail estimate uses the actually sampled integrand value.
#[derive(Clone, Copy, Debug)]
pub struct SingularityHint {
    pub left_exponent: f64,
    pub right_exponent: f64,
}

impl SingularityHint {
    pub fn new(left_exponent: f64, right_exponent: f64) -> Self {
        SingularityHint {
            left_exponent,
            right_exponent,
        }
    }

    /// A smooth integrand: no endpoint singularity on either side.
    pub fn none() -> Self {
        SingularityHint::new(0.0, 0.0)
    }

    fn validate(&self) -> Result<()> {
        for e in [self.left_exponent, self.right_exponent] {
            if !(e > -1.0) {
                return Err(Error::BadHint { exponent: e });
            }
        }
        Ok(())
    }
}

/// One tanh-sinh abscissa: u, its exact complement, and the trapezoid weight.
#[derive(Clone, Copy)]
struct Node {
    u: f64,
    one_minus_u: f64,
    weight: f64,
}

fn node_at(t: f64) -> Node {
    let w = FRAC_PI_2 * t.sinh();
    let u = 1.0 / (1.0 + (-2.0 * w).exp());
    let one_minus_u = 1.0 / (1.0 + (2.0 * w).exp());
    Node {
        u,
        one_minus_u,
        weight: PI * t.cosh() * u * one_minus_u,
    }
}

/// Integrate f over (0,1) with tanh-sinh refinement.
///
/// The integrand is called as `f(u, one_minus_u)`; both arguments are exact to
/// full precision at their respective edges. The hint describes the endpoint
/// power laws and feeds the unsampled-tail bound folded into
/// `abs_error_estimate`.
pub fn integrate_unit(
    f: impl Fn(f64, f64) -> f64,
    hint: SingularityHint,
    tol: f64,
) -> Result<IntegralEstimate> {
    hint.validate()?;
    let eval = |n: &Node| -> Result<f64> {
        let y = f(n.u, n.one_minus_u);
        if y.is_nan() {
            return Err(Error::IntegrandNan { at: n.u });
        }
        Ok(y)
    };

    let mut evaluations = 0usize;
    // Level 0: h = 1, nodes at integer t. The extreme nodes double as tail
    // probes: u(t = -6) ≈ 1e-276, so |f| there measures how the integrand
    // actually behaves at the unsampled edge.
    let mut sum = 0.0;
    let mut f_left_edge = 0.0;
    let mut u_left_edge = 0.0;
    let mut f_right_edge = 0.0;
    let mut omu_right_edge = 0.0;
    let k_max = T_MAX as i32; // 6
    for k in -k_max..=k_max {
        let n = node_at(k as f64);
        let y = eval(&n)?;
        evaluations += 1;
        sum += y * n.weight;
        if k == -k_max {
            f_left_edge = y;
            u_left_edge = n.u;
        }
        if k == k_max {
            f_right_edge = y;
            omu_right_edge = n.one_minus_u;
        }
    }

    let mut value = sum; // h = 1
    let mut diff = f64::INFINITY;
    let mut converged = false;
    let tail = |f_l: f64, u_l: f64, f_r: f64, omu_r: f64| -> f64 {
        // ∫0^{u_edge} |C u^e| du for f ~ C u^e, with C read off at the edge,
        // and the mirror bound on the right.
        f_l.abs() * u_l / (1.0 + hint.left_exponent)
            + f_r.abs() * omu_r / (1.0 + hint.right_exponent)
    };
    let mut tail_bound = tail(f_left_edge, u_left_edge, f_right_edge, omu_right_edge);

    for level in 1..=MAX_LEVELS {
        let h = 0.5f64.powi(level as i32);
        let mut new_sum = 0.0;
        let mut j = 1i64;
        loop {
            let t = j as f64 * h;
            if t > T_MAX {
                break;
            }
            for signed in [t, -t] {
                let n = node_at(signed);
                let y = eval(&n)?;
                evaluations += 1;
                new_sum += y * n.weight;
                if signed < 0.0 && n.u < u_left_edge {
                    f_left_edge = y;
                    u_left_edge = n.u;
                }
                if signed > 0.0 && n.one_minus_u < omu_right_edge {
                    f_right_edge = y;
                    omu_right_edge = n.one_minus_u;
                }
            }
            j += 2; // only odd multiples are new at this level
        }
        let refined = value / 2.0 + h * new_sum;
        diff = (refined - value).abs();
        value = refined;
        tail_bound = tail(f_left_edge, u_left_edge, f_right_edge, omu_right_edge);
        // Two levels minimum: the level-0 trapezoid is too coarse for its
        // difference to mean anything.
        if level >= 2 && diff + tail_bound <= tol * value.abs().max(1.0) {
            converged = true;
            break;
        }
    }

    Ok(IntegralEstimate {
        value,
        abs_error_estimate: diff + tail_bound,
        evaluations,
        converged,
    })
}

/// Outcome of the scale scan for a semi-infinite integrand.
struct Truncation {
    big_t: f64,
    tail_estimate: f64,
    scan_evaluations: usize,
    /// False when no truncation point was found below the scan ceiling.
    resolved: bool,
    /// True when the integrand was zero at every probe.
    all_zero: bool,
}

/// Find T with |f| ≤ peak·e^-45 settled for three consecutive probes.
fn truncate_decaying(f: &impl Fn(f64) -> f64) -> Result<Truncation> {
    let mut scan_evaluations = 0usize;
    let mut probe = |t: f64| -> Result<f64> {
        let y = f(t);
        scan_evaluations += 1;
        if y.is_nan() {
            return Err(Error::IntegrandNan { at: t });
        }
        Ok(y.abs())
    };

    // Geometric sweep over 15 decades locates the scale of the integrand.
    let mut peak = 0.0f64;
    let mut t_peak = 1.0f64;
    for k in -24..=36 {
        let t = 10f64.powf(k as f64 / 4.0);
        let a = probe(t)?;
        if a > peak {
            peak = a;
            t_peak = t;
        }
    }
    if peak == 0.0 {
        return Ok(Truncation {
            big_t: 1.0,
            tail_estimate: 0.0,
            scan_evaluations,
            resolved: true,
            all_zero: true,
        });
    }

    let threshold = peak * (-TRUNCATION_NATS).exp();
    let growth = 1.25f64;
    let mut big_t = t_peak;
    let mut below = 0u32;
    let mut previous = peak;
    let mut last = peak;
    let mut resolved = false;
    while big_t < 1e12 {
        big_t *= growth;
        let a = probe(big_t)?;
        previous = last;
        last = a;
        if a <= threshold {
            below += 1;
            if below == 3 {
                resolved = true;
                break;
            }
        } else {
            below = 0;
        }
    }

    // Local decay rate at T bounds the discarded mass by |f(T)|/λ.
    let tail_estimate = if last == 0.0 {
        0.0
    } else {
        let dt = big_t - big_t / growth;
        let lambda = if previous > last {
            (previous / last).ln() / dt
        } else {
            0.0
        };
        if lambda > 0.0 {
            last / lambda
        } else {
            last * big_t
        }
    };

    Ok(Truncation {
        big_t,
        tail_estimate,
        scan_evaluations,
        resolved,
        all_zero: false,
    })
}

/// Integrate f over (0, ∞) assuming eventual monotone decay.
///
/// Suitable for damped kernels (Laplace integrands, squared-exponential
/// tails); oscillatory integrands are out of scope. The origin is treated as
/// regular; use [`integrate_semi_infinite_with`] when the integrand has an
/// algebraic singularity at t = 0.
pub fn integrate_semi_infinite(f: impl Fn(f64) -> f64, tol: f64) -> Result<IntegralEstimate> {
    integrate_semi_infinite_with(f, 0.0, tol)
}

/// Semi-infinite integration with a declared power law f ~ C·t^left near 0.
pub fn integrate_semi_infinite_with(
    f: impl Fn(f64) -> f64,
    left_exponent: f64,
    tol: f64,
) -> Result<IntegralEstimate> {
    let truncation = truncate_decaying(&f)?;
    if truncation.all_zero {
        return Ok(IntegralEstimate {
            value: 0.0,
            abs_error_estimate: 0.0,
            evaluations: truncation.scan_evaluations,
            converged: true,
        });
    }
    let big_t = truncation.big_t;
    // ∫0^∞ f dt = T·∫0^1 f(T·u) du; the left power law survives the scaling
    // and the right endpoint is regular by construction (f has decayed there).
    // The mapped value is 1/T of the final one, so the inner tolerance must
    // shrink by the same factor or the T-scaled error estimate would blow the
    // requested budget. Floored near f64 roundoff for attainability.
    let inner_tol = (tol / big_t.max(1.0)).max(2e-15);
    let mapped = integrate_unit(
        |u, _omu| f(big_t * u),
        SingularityHint::new(left_exponent, 0.0),
        inner_tol,
    )?;
    let value = big_t * mapped.value;
    let abs_error_estimate =
        big_t * mapped.abs_error_estimate + truncation.tail_estimate;
    let converged = mapped.converged
        && truncation.resolved
        && abs_error_estimate <= tol * value.abs().max(1.0);
    Ok(IntegralEstimate {
        value,
        abs_error_estimate,
        evaluations: mapped.evaluations + truncation.scan_evaluations,
        converged,
    })
}

/// log(a·e^x + e^y)-style accumulation: returns log(e^a + e^b).
fn log_add_exp(a: f64, b: f64) -> f64 {
    if a == f64::NEG_INFINITY {
        return b;
    }
    if b == f64::NEG_INFINITY {
        return a;
    }
    let (hi, lo) = if a >= b { (a, b) } else { (b, a) };
    hi + (lo - hi).exp().ln_1p()
}

/// ln(1 + e^x) without overflow on either side.
fn softplus(x: f64) -> f64 {
    if x > 35.0 {
        x
    } else if x < -700.0 {
        0.0
    } else {
        x.exp().ln_1p()
    }
}

/// Integrate exp(log_f) over (0, ∞) entirely in log space; returns the log of
/// the integral.
///
/// For integrands whose peak magnitude overflows or underflows f64, e.g.
/// gamma-type kernels t^(a-1)·e^(-φ(t)) with a in the hundreds. `log_f` must
/// return the exact log of a positive integrand (−∞ where it vanishes); an
/// identically −∞ integrand yields −∞.
pub fn log_integrate_semi_infinite(log_f: impl Fn(f64) -> f64, tol: f64) -> Result<f64> {
    log_integrate_semi_infinite_with(log_f, 0.0, tol)
}

/// Log-space semi-infinite integration with a declared left power law.
pub fn log_integrate_semi_infinite_with(
    log_f: impl Fn(f64) -> f64,
    left_exponent: f64,
    tol: f64,
) -> Result<f64> {
    if !(left_exponent > -1.0) {
        return Err(Error::BadHint {
            exponent: left_exponent,
        });
    }
    let check = |t: f64, l: f64| -> Result<f64> {
        if l.is_nan() || l == f64::INFINITY {
            return Err(Error::IntegrandNan { at: t });
        }
        Ok(l)
    };

    // Scale scan, as in the linear engine but on log values.
    let mut log_peak = f64::NEG_INFINITY;
    let mut t_peak = 1.0f64;
    for k in -24..=36 {
        let t = 10f64.powf(k as f64 / 4.0);
        let l = check(t, log_f(t))?;
        if l > log_peak {
            log_peak = l;
            t_peak = t;
        }
    }
    if log_peak == f64::NEG_INFINITY {
        return Ok(f64::NEG_INFINITY);
    }
    let threshold = log_peak - TRUNCATION_NATS;
    let mut big_t = t_peak;
    let mut below = 0u32;
    while big_t < 1e12 {
        big_t *= 1.25;
        let l = check(big_t, log_f(big_t))?;
        if l <= threshold {
            below += 1;
            if below == 3 {
                break;
            }
        } else {
            below = 0;
        }
    }

    // Tanh-sinh ladder on the mapped (0,1) integral, accumulated with
    // log-sum-exp. Contribution of a node: log f(T·u) + log T + log weight.
    let log_big_t = big_t.ln();
    let log_node = |t: f64| -> Result<f64> {
        let w = FRAC_PI_2 * t.sinh();
        let log_u = -softplus(-2.0 * w);
        let log_omu = -softplus(2.0 * w);
        let u = (-2.0f64 * w).exp();
        let u = 1.0 / (1.0 + u);
        let log_weight = PI.ln() + t.cosh().ln() + log_u + log_omu;
        let l = check(big_t * u, log_f(big_t * u))?;
        Ok(l + log_big_t + log_weight)
    };

    let k_max = T_MAX as i32;
    let mut level_sum = f64::NEG_INFINITY;
    for k in -k_max..=k_max {
        level_sum = log_add_exp(level_sum, log_node(k as f64)?);
    }
    let mut log_value = level_sum; // + ln h with h = 1

    for level in 1..=MAX_LEVELS {
        let h = 0.5f64.powi(level as i32);
        let mut batch = f64::NEG_INFINITY;
        let mut j = 1i64;
        loop {
            let t = j as f64 * h;
            if t > T_MAX {
                break;
            }
            batch = log_add_exp(batch, log_node(t)?);
            batch = log_add_exp(batch, log_node(-t)?);
            j += 2;
        }
        let refined = log_add_exp(log_value - LN_2, batch + h.ln());
        let diff = (refined - log_value).abs();
        log_value = refined;
        // A log-space difference is a relative difference of the integral.
        if level >= 2 && diff <= tol {
            return Ok(log_value);
        }
    }

    Err(Error::NoConvergence {
        value: log_value,
        abs_error_estimate: f64::NAN,
        tolerance: tol,
    })
}
