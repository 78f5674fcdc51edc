//! Integral representations for products of parabolic cylinder functions.
//!
//! Every routine here evaluates a closed integral formula for a product
//! D_v(x)·D_{v+k}(y) (offsets k ∈ {+1, 0, -1, -2}), a single D_v, a product
//! of erfc values, or a K_{1/4} combination — and each is tested elsewhere
//! against the independent quadrature oracle in [`crate::special`]. The
//! formulas are identities, so any disagreement beyond quadrature tolerance
//! is a bug, not an approximation error.
//!
//! Shared kernel structure: with r = √(1-u),
//!
//!   P(u) = y + x·r,  Q(u) = x + y·r,  E(u) = exp(-P²/(2u)),
//!
//! on u ∈ (0,1), the representations combine powers of u and 1-u with E and
//! erfc(P/√(2u)). All formulas require x + y ≥ 0; several acquire an extra
//! jump term exactly at x + y = 0 (`correction_applied`). P and Q are formed
//! as (x+y) + x·(r-1) with r-1 = -u/(1+r), so the x+y = 0 case cancels
//! exactly instead of catastrophically.

use crate::error::{Error, Result};
use crate::quadrature::{self, IntegralEstimate, SingularityHint};
use crate::special;
use std::f64::consts::{LN_2, PI, SQRT_2};

/// Points with |x+y| below this (relative) threshold are treated as lying
/// exactly on the x+y = 0 boundary, where the jump corrections apply.
pub const ZERO_SUM_TOL: f64 = 1e-12;

/// Default quadrature tolerance for representation evaluation.
pub const REP_TOL: f64 = 1e-10;

/// One evaluation point (v, x, y) with its boundary classification baked in.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EvalPoint {
    pub v: f64,
    pub x: f64,
    pub y: f64,
    pub sum_is_zero: bool,
}

/// Boundary classifier shared by every representation carrying an x+y = 0
/// jump or domain condition.
pub(crate) fn zero_sum(x: f64, y: f64) -> bool {
    (x + y).abs() <= ZERO_SUM_TOL * x.abs().max(y.abs()).max(1.0)
}

impl EvalPoint {
    /// Classify (v, x, y); `sum_is_zero` is set when |x+y| is negligible
    /// relative to the argument magnitudes.
    pub fn new(v: f64, x: f64, y: f64) -> Self {
        EvalPoint {
            v,
            x,
            y,
            sum_is_zero: zero_sum(x, y),
        }
    }

    fn sum(&self) -> f64 {
        self.x + self.y
    }
}

/// A representation value together with its quadrature diagnostics.
#[derive(Clone, Copy, Debug)]
pub struct ProductValue {
    pub value: f64,
    pub estimate: IntegralEstimate,
    /// True when the x+y = 0 jump term was added (only ever set by the
    /// representations that carry one).
    pub correction_applied: bool,
}

/// Identifier for each representation, usable from the command line.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RepId {
    DvDv,
    TimeForm,
    DvDvm1Erfc,
    DvDvm1Exp,
    DvDvm2Mixed,
    DvDvm2X,
    DvDvm2Y,
    DvDvm2Compact,
    DvDvp1,
    Malyshev,
    Glasser,
    SinglePcf,
    ErfcProd,
    K14,
    K14D32,
}

impl RepId {
    pub const ALL: [RepId; 15] = [
        RepId::DvDv,
        RepId::TimeForm,
        RepId::DvDvm1Erfc,
        RepId::DvDvm1Exp,
        RepId::DvDvm2Mixed,
        RepId::DvDvm2X,
        RepId::DvDvm2Y,
        RepId::DvDvm2Compact,
        RepId::DvDvp1,
        RepId::Malyshev,
        RepId::Glasser,
        RepId::SinglePcf,
        RepId::ErfcProd,
        RepId::K14,
        RepId::K14D32,
    ];

    /// Stable text token used in CLI arguments and report rows.
    pub fn token(self) -> &'static str {
        match self {
            RepId::DvDv => "T2_1",
            RepId::DvDvm1Erfc => "T2_2",
            RepId::DvDvm1Exp => "T2_3",
            RepId::DvDvm2Mixed => "T2_4",
            RepId::DvDvm2X => "T2_5",
            RepId::DvDvm2Y => "T2_6",
            RepId::DvDvm2Compact => "T2_7",
            RepId::DvDvp1 => "T2_8",
            RepId::TimeForm => "TIME_FORM",
            RepId::Malyshev => "MALYSHEV",
            RepId::Glasser => "GLASSER",
            RepId::SinglePcf => "SINGLE_PCF",
            RepId::ErfcProd => "ERFC_PROD",
            RepId::K14 => "K14",
            RepId::K14D32 => "K14_D32",
        }
    }

    /// Order offset of the second factor relative to the first, where the
    /// representation is a two-factor D product.
    pub fn order_offset(self) -> Option<i32> {
        match self {
            RepId::DvDv | RepId::TimeForm | RepId::Malyshev | RepId::Glasser => Some(0),
            RepId::DvDvm1Erfc | RepId::DvDvm1Exp => Some(-1),
            RepId::DvDvm2Mixed | RepId::DvDvm2X | RepId::DvDvm2Y | RepId::DvDvm2Compact => {
                Some(-2)
            }
            RepId::DvDvp1 => Some(1),
            RepId::SinglePcf | RepId::ErfcProd | RepId::K14 | RepId::K14D32 => None,
        }
    }
}

impl std::fmt::Display for RepId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.token())
    }
}

impl std::str::FromStr for RepId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let up = s.to_ascii_uppercase();
        RepId::ALL
            .iter()
            .copied()
            .find(|id| id.token() == up)
            .ok_or_else(|| Error::domain("RepId", format!("unknown representation '{s}'")))
    }
}

/// Shared validation for the Table-style product representations.
fn require_product_domain(routine: &'static str, p: EvalPoint) -> Result<()> {
    if !(p.v < 0.0) || !p.v.is_finite() {
        return Err(Error::domain(routine, format!("requires v < 0, got {}", p.v)));
    }
    if !p.x.is_finite() || !p.y.is_finite() {
        return Err(Error::domain(routine, "non-finite argument"));
    }
    if p.sum() < 0.0 && !p.sum_is_zero {
        return Err(Error::domain(
            routine,
            format!("requires x + y ≥ 0, got x = {}, y = {}", p.x, p.y),
        ));
    }
    Ok(())
}

/// Kernel building blocks at one abscissa.
struct KernelPoint {
    r: f64, // √(1-u)
    p: f64, // y + x·r
    q: f64, // x + y·r
    e: f64, // exp(-p²/(2u))
    g: f64, // p/√(2u)
}

fn kernel_point(p: EvalPoint, u: f64, omu: f64) -> KernelPoint {
    let r = omu.sqrt();
    let r_minus_1 = -u / (1.0 + r);
    let sum = if p.sum_is_zero { 0.0 } else { p.sum() };
    let pp = sum + p.x * r_minus_1;
    let q = sum + p.y * r_minus_1;
    let g = pp / (2.0 * u).sqrt();
    KernelPoint {
        r,
        p: pp,
        q,
        e: (-g * g).exp(),
        g,
    }
}

/// exp((y²-x²)/4 - ln Γ(-v)), the prefactor shared by the Table entries.
fn table_prefactor(p: EvalPoint) -> Result<f64> {
    Ok((0.25 * (p.y * p.y - p.x * p.x) - special::log_gamma(-p.v)?).exp())
}

/// (1-u)^w computed from the exact complement.
fn omu_pow(omu: f64, w: f64) -> f64 {
    omu.powf(w)
}

/// D_v(x)·D_v(y), same order both factors.
///
/// Kernel: (1-u)^{-1-v/2}·u^{-1/2}·E.
pub fn dv_dv(p: EvalPoint) -> Result<ProductValue> {
    require_product_domain("dv_dv", p)?;
    let w = -1.0 - 0.5 * p.v;
    let estimate = quadrature::integrate_unit(
        |u, omu| {
            let k = kernel_point(p, u, omu);
            omu_pow(omu, w) * k.e / u.sqrt()
        },
        SingularityHint::new(-0.5, w),
        REP_TOL,
    )?;
    Ok(ProductValue {
        value: 0.5 * table_prefactor(p)? * estimate.value,
        estimate,
        correction_applied: false,
    })
}

/// D_v(x)·D_v(y) in the time-parameter form: the same product written as a
/// semi-infinite integral carrying a free rate β > 0. The substitution
/// u = 1 - e^{-2βt} maps it onto [`dv_dv`], so the value must not depend on β.
pub fn dv_dv_time_form(p: EvalPoint, beta: f64) -> Result<ProductValue> {
    require_product_domain("dv_dv_time_form", p)?;
    if !(beta > 0.0) {
        return Err(Error::domain(
            "dv_dv_time_form",
            format!("requires beta > 0, got {beta}"),
        ));
    }
    let sum = if p.sum_is_zero { 0.0 } else { p.sum() };
    let estimate = quadrature::integrate_semi_infinite_with(
        |t| {
            let em1 = (-beta * t).exp_m1(); // e^{-βt} - 1, exact near 0
            let den = -(-2.0 * beta * t).exp_m1(); // 1 - e^{-2βt}
            let pt = sum + p.x * em1;
            beta * (beta * p.v * t).exp() / den.sqrt() * (-pt * pt / (2.0 * den)).exp()
        },
        -0.5,
        REP_TOL,
    )?;
    Ok(ProductValue {
        value: table_prefactor(p)? * estimate.value,
        estimate,
        correction_applied: false,
    })
}

/// D_v(x)·D_{v-1}(y), erfc kernel: (1-u)^{-1-v/2}·erfc(P/√(2u)).
pub fn dv_dvm1_erfc(p: EvalPoint) -> Result<ProductValue> {
    require_product_domain("dv_dvm1_erfc", p)?;
    let w = -1.0 - 0.5 * p.v;
    let estimate = quadrature::integrate_unit(
        |u, omu| {
            let k = kernel_point(p, u, omu);
            omu_pow(omu, w) * special::erfc(k.g)
        },
        SingularityHint::new(0.0, w),
        REP_TOL,
    )?;
    Ok(ProductValue {
        value: PI.sqrt() / (2.0 * SQRT_2) * table_prefactor(p)? * estimate.value,
        estimate,
        correction_applied: false,
    })
}

/// D_v(x)·D_{v-1}(y), exponential kernel:
/// Q·(1-u)^{-(1+v)/2}·u^{-3/2}·E, with a jump term at x + y = 0.
pub fn dv_dvm1_exp(p: EvalPoint) -> Result<ProductValue> {
    require_product_domain("dv_dvm1_exp", p)?;
    let w = -0.5 * (1.0 + p.v);
    let estimate = quadrature::integrate_unit(
        |u, omu| {
            let k = kernel_point(p, u, omu);
            // Q/u first: near u = 0 it is exactly -y/(1+r) on the boundary,
            // and E = 0 kills it off-boundary before u^{3/2} can underflow.
            (k.q / u) * omu_pow(omu, w) * k.e / u.sqrt()
        },
        SingularityHint::new(-0.5, w),
        REP_TOL,
    )?;
    let pref = table_prefactor(p)?;
    let mut value = -pref / (2.0 * p.v) * estimate.value;
    if p.sum_is_zero {
        value -= PI.sqrt() / (p.v * SQRT_2) * (-special::log_gamma(-p.v)?).exp();
    }
    Ok(ProductValue {
        value,
        estimate,
        correction_applied: p.sum_is_zero,
    })
}

/// D_v(x)·D_{v-2}(y), mixed kernel:
/// (1-u)^{-1-v/2}·[√u·E - √(π/2)·P·erfc(P/√(2u))].
pub fn dv_dvm2_mixed(p: EvalPoint) -> Result<ProductValue> {
    require_product_domain("dv_dvm2_mixed", p)?;
    let w = -1.0 - 0.5 * p.v;
    let half_pi_sqrt = (0.5 * PI).sqrt();
    let estimate = quadrature::integrate_unit(
        |u, omu| {
            let k = kernel_point(p, u, omu);
            omu_pow(omu, w) * (u.sqrt() * k.e - half_pi_sqrt * k.p * special::erfc(k.g))
        },
        SingularityHint::new(0.0, w),
        REP_TOL,
    )?;
    Ok(ProductValue {
        value: 0.5 * table_prefactor(p)? * estimate.value,
        estimate,
        correction_applied: false,
    })
}

/// D_v(x)·D_{v-2}(y), x-weighted kernel:
/// (1-u)^{-1-v/2}·[(1-u)·u^{-1/2}·E + x·√(π(1-u)/2)·erfc(P/√(2u))].
pub fn dv_dvm2_x(p: EvalPoint) -> Result<ProductValue> {
    require_product_domain("dv_dvm2_x", p)?;
    let w = -1.0 - 0.5 * p.v;
    let estimate = quadrature::integrate_unit(
        |u, omu| {
            let k = kernel_point(p, u, omu);
            omu_pow(omu, w)
                * (omu / u.sqrt() * k.e
                    + p.x * (0.5 * PI * omu).sqrt() * special::erfc(k.g))
        },
        SingularityHint::new(-0.5, w + 0.5),
        REP_TOL,
    )?;
    Ok(ProductValue {
        value: -table_prefactor(p)? / (2.0 * p.v) * estimate.value,
        estimate,
        correction_applied: false,
    })
}

/// D_v(x)·D_{v-2}(y), y-weighted kernel:
/// (1-u)^{-1-v/2}·[u^{-1/2}·E - y·√(π/2)·erfc(P/√(2u))].
pub fn dv_dvm2_y(p: EvalPoint) -> Result<ProductValue> {
    require_product_domain("dv_dvm2_y", p)?;
    let w = -1.0 - 0.5 * p.v;
    let half_pi_sqrt = (0.5 * PI).sqrt();
    let estimate = quadrature::integrate_unit(
        |u, omu| {
            let k = kernel_point(p, u, omu);
            omu_pow(omu, w) * (k.e / u.sqrt() - p.y * half_pi_sqrt * special::erfc(k.g))
        },
        SingularityHint::new(-0.5, w),
        REP_TOL,
    )?;
    Ok(ProductValue {
        value: table_prefactor(p)? / (2.0 * (1.0 - p.v)) * estimate.value,
        estimate,
        correction_applied: false,
    })
}

/// D_v(x)·D_{v-2}(y), single compact kernel:
/// (y·r·Q + v·u)·(1-u)^{-1-v/2}·u^{-3/2}·E, with a jump term at x + y = 0.
pub fn dv_dvm2_compact(p: EvalPoint) -> Result<ProductValue> {
    require_product_domain("dv_dvm2_compact", p)?;
    let w = -1.0 - 0.5 * p.v;
    let estimate = quadrature::integrate_unit(
        |u, omu| {
            let k = kernel_point(p, u, omu);
            // (y·r·Q + v·u)/u^{3/2} = (y·r·(Q/u) + v)/√u, immune to the
            // u^{3/2} underflow at the deepest left-edge nodes.
            (p.y * k.r * (k.q / u) + p.v) * omu_pow(omu, w) * k.e / u.sqrt()
        },
        SingularityHint::new(-0.5, w),
        REP_TOL,
    )?;
    let pref = table_prefactor(p)?;
    let mut value = pref / (2.0 * p.v * (1.0 - p.v)) * estimate.value;
    if p.sum_is_zero {
        value -=
            p.y * PI.sqrt() / (p.v * (p.v - 1.0) * SQRT_2) * (-special::log_gamma(-p.v)?).exp();
    }
    Ok(ProductValue {
        value,
        estimate,
        correction_applied: p.sum_is_zero,
    })
}

/// D_v(x)·D_{v+1}(y):
/// (y·u + r·Q)·(1-u)^{-1-v/2}·u^{-3/2}·E, with a jump term at x + y = 0.
pub fn dv_dvp1(p: EvalPoint) -> Result<ProductValue> {
    require_product_domain("dv_dvp1", p)?;
    let w = -1.0 - 0.5 * p.v;
    let estimate = quadrature::integrate_unit(
        |u, omu| {
            let k = kernel_point(p, u, omu);
            // (y·u + r·Q)/u^{3/2} = (y + r·(Q/u))/√u, as in the other
            // u^{-3/2} kernels.
            (p.y + k.r * (k.q / u)) * omu_pow(omu, w) * k.e / u.sqrt()
        },
        SingularityHint::new(-0.5, w),
        REP_TOL,
    )?;
    let pref = table_prefactor(p)?;
    let mut value = 0.5 * pref * estimate.value;
    if p.sum_is_zero {
        value += PI.sqrt() / SQRT_2 * (-special::log_gamma(-p.v)?).exp();
    }
    Ok(ProductValue {
        value,
        estimate,
        correction_applied: p.sum_is_zero,
    })
}

/// Product of order-shifted factors D_v(x)·D_{v+k}(y) for any |k| ≤ 6,
/// built from the k = 0 and k = -1 representations with the three-term order
/// recurrence D_{m+1}(z) = z·D_m(z) - m·D_{m-1}(z) applied to the second
/// factor: M(k+1) = y·M(k) - (v+k)·M(k-1).
pub fn product_by_offset(p: EvalPoint, k: i32) -> Result<f64> {
    require_product_domain("product_by_offset", p)?;
    if k.abs() > 6 {
        return Err(Error::domain(
            "product_by_offset",
            format!("offset {k} outside supported range [-6, 6]"),
        ));
    }
    let m_minus_1 = dv_dvm1_erfc(p)?.value;
    let m_zero = dv_dv(p)?.value;
    if k >= 0 {
        let mut prev = m_minus_1;
        let mut cur = m_zero;
        for j in 0..k {
            let next = p.y * cur - (p.v + j as f64) * prev;
            prev = cur;
            cur = next;
        }
        Ok(cur)
    } else {
        // Descend: M(j-1) = (y·M(j) - M(j+1)) / (v + j), from the base
        // pair downwards.
        let mut upper = m_zero; // M(j+1)
        let mut lower = m_minus_1; // M(j)
        let mut j = -1i32;
        while j > k {
            let divisor = p.v + j as f64;
            if divisor == 0.0 {
                return Err(Error::RecurrencePole { offset: j });
            }
            let below = (p.y * lower - upper) / divisor;
            upper = lower;
            lower = below;
            j -= 1;
        }
        Ok(lower)
    }
}

/// Same-order product at mirrored arguments, D_v(x)·D_v(-x), valid for every
/// real x (no x+y ≥ 0 restriction):
///
/// 2^{-1/2}/Γ(-v) · ∫₀^∞ exp((v+1/2)t - (x²/2)·tanh(t/2)) / √(sinh t) dt.
pub fn malyshev_same_arg(v: f64, x: f64) -> Result<f64> {
    if !(v < 0.0) {
        return Err(Error::domain(
            "malyshev_same_arg",
            format!("requires v < 0, got {v}"),
        ));
    }
    let half_x2 = 0.5 * x * x;
    let estimate = quadrature::integrate_semi_infinite_with(
        |t| {
            // ln sinh t = t + ln(1 - e^{-2t}) - ln 2, stable at both ends.
            let ln_sinh = t + (-(-2.0 * t).exp_m1()).ln() - LN_2;
            ((v + 0.5) * t - half_x2 * (0.5 * t).tanh() - 0.5 * ln_sinh).exp()
        },
        -0.5,
        REP_TOL,
    )?;
    Ok((-special::log_gamma(-v)?).exp() / SQRT_2 * estimate.value)
}

/// Opposite-sign product D_{-v'}(x)·D_{-v'}(-y) as a semi-infinite integral,
/// for positive order parameter v' and x ≥ y:
///
/// e^{-(x²+y²)/4}/(2Γ(v')) · ∫₀^∞ t^{v'/2-1}(t+1)^{-(v'+1)/2}
///                                 e^{-(x²+y²)t/2 + xy√(t(t+1))} dt.
///
/// For x > y the integrand decays exponentially at rate (x-y)²/2; exactly at
/// x = y the tail is only algebraic and the convergence check rejects the
/// evaluation rather than return an uncertified value.
pub fn glasser_form(v_pos: f64, x: f64, y: f64) -> Result<f64> {
    if !(v_pos > 0.0) {
        return Err(Error::domain(
            "glasser_form",
            format!("requires positive order parameter, got {v_pos}"),
        ));
    }
    if x - y < -(ZERO_SUM_TOL * x.abs().max(y.abs()).max(1.0)) {
        return Err(Error::domain(
            "glasser_form",
            format!("requires x ≥ y, got x = {x}, y = {y}"),
        ));
    }
    let s2 = 0.5 * (x * x + y * y);
    let xy = x * y;
    let power = 0.5 * v_pos - 1.0;
    let estimate = quadrature::integrate_semi_infinite_with(
        |t| (power * t.ln() - 0.5 * (v_pos + 1.0) * (t + 1.0).ln() - s2 * t
            + xy * (t * (t + 1.0)).sqrt())
        .exp(),
        power,
        REP_TOL,
    )?;
    if !estimate.converged {
        return Err(Error::NoConvergence {
            value: estimate.value,
            abs_error_estimate: estimate.abs_error_estimate,
            tolerance: REP_TOL,
        });
    }
    Ok(0.5 * (-s2 / 2.0 - special::log_gamma(v_pos)?).exp() * estimate.value)
}

/// Single-factor representation:
///
/// D_v(x) = -v√π·2^{v/2-1}·e^{-x²/4}/Γ((1-v)/2)
///          · ∫₀¹ (1-u)^{-1-v/2}·erfc(x·√((1-u)/(2u))) du,  v < 0, x ≥ 0.
pub fn single_pcf(v: f64, x: f64) -> Result<f64> {
    if !(v < 0.0) || !(x >= 0.0) {
        return Err(Error::domain(
            "single_pcf",
            format!("requires v < 0 and x ≥ 0, got v = {v}, x = {x}"),
        ));
    }
    let w = -1.0 - 0.5 * v;
    let estimate = quadrature::integrate_unit(
        |u, omu| omu_pow(omu, w) * special::erfc(x * (omu / (2.0 * u)).sqrt()),
        SingularityHint::new(0.0, w),
        REP_TOL,
    )?;
    let pref = -v * PI.sqrt() * (0.5 * v - 1.0).exp2() * (-0.25 * x * x).exp()
        * special::recip_gamma(0.5 * (1.0 - v));
    Ok(pref * estimate.value)
}

/// erfc(x)·erfc(y) as a single finite integral, for x + y ≥ 0:
///
/// e^{-x²}/π · ∫₀¹ (u(1-u))^{-1/2}·exp(-(y+x√(1-u))²/u) du.
pub fn erfc_product(x: f64, y: f64) -> Result<f64> {
    let on_boundary = zero_sum(x, y);
    if x + y < 0.0 && !on_boundary {
        return Err(Error::domain(
            "erfc_product",
            format!("requires x + y ≥ 0, got x = {x}, y = {y}"),
        ));
    }
    let sum = if on_boundary { 0.0 } else { x + y };
    let estimate = quadrature::integrate_unit(
        |u, omu| {
            let r = omu.sqrt();
            let pp = sum + x * (-u / (1.0 + r));
            (-pp * pp / u).exp() / (u * omu).sqrt()
        },
        SingularityHint::new(-0.5, -0.5),
        REP_TOL,
    )?;
    Ok((-x * x).exp() / PI * estimate.value)
}

/// K_{1/4}(x) as a finite integral, x > 0:
///
/// √π/((2x)^{1/4}·Γ(1/4)) · ∫₀¹ (1-u)^{-3/4}·u^{-1/2}·e^{-x(2-u)/u} du.
pub fn k14_rep(x: f64) -> Result<f64> {
    if !(x > 0.0) {
        return Err(Error::domain("k14_rep", format!("requires x > 0, got {x}")));
    }
    let estimate = quadrature::integrate_unit(
        |u, omu| omu_pow(omu, -0.75) / u.sqrt() * (-x * (2.0 - u) / u).exp(),
        SingularityHint::new(-0.5, -0.75),
        REP_TOL,
    )?;
    let pref = PI.sqrt() / ((2.0 * x).powf(0.25)) * special::recip_gamma(0.25);
    Ok(pref * estimate.value)
}

/// K_{1/4}(x)·D_{-3/2}(y) as a finite integral, for x > 0 and 2√x + y ≥ 0:
///
/// √π·e^{(y²-4x)/4}/(2^{3/2}·x^{1/4})
/// · ∫₀¹ (1-u)^{-3/4}·erfc((y+2√(x(1-u)))/√(2u)) du.
pub fn k14_times_d32(x: f64, y: f64) -> Result<f64> {
    if !(x > 0.0) {
        return Err(Error::domain(
            "k14_times_d32",
            format!("requires x > 0, got {x}"),
        ));
    }
    let a = 2.0 * x.sqrt();
    let on_boundary = zero_sum(a, y);
    if a + y < 0.0 && !on_boundary {
        return Err(Error::domain(
            "k14_times_d32",
            format!("requires 2√x + y ≥ 0, got x = {x}, y = {y}"),
        ));
    }
    let sum = if on_boundary { 0.0 } else { a + y };
    let estimate = quadrature::integrate_unit(
        |u, omu| {
            let r = omu.sqrt();
            let pp = sum + a * (-u / (1.0 + r));
            omu_pow(omu, -0.75) * special::erfc(pp / (2.0 * u).sqrt())
        },
        SingularityHint::new(0.0, -0.75),
        REP_TOL,
    )?;
    let pref = PI.sqrt() * (0.25 * (y * y - 4.0 * x)).exp() / (2.0 * SQRT_2 * x.powf(0.25));
    Ok(pref * estimate.value)
}

/// Uniform entry point used by the CLI and report runners.
///
/// Argument meaning varies by representation: the Table entries use
/// (v, x, y); `TIME_FORM` additionally uses `beta`; `MALYSHEV` and
/// `SINGLE_PCF` use (v, x); `GLASSER` interprets `v` as the positive order
/// parameter; `ERFC_PROD` uses (x, y); `K14` uses x; `K14_D32` uses (x, y).
pub fn evaluate(id: RepId, v: f64, x: f64, y: f64, beta: f64) -> Result<f64> {
    let p = EvalPoint::new(v, x, y);
    match id {
        RepId::DvDv => Ok(dv_dv(p)?.value),
        RepId::TimeForm => Ok(dv_dv_time_form(p, beta)?.value),
        RepId::DvDvm1Erfc => Ok(dv_dvm1_erfc(p)?.value),
        RepId::DvDvm1Exp => Ok(dv_dvm1_exp(p)?.value),
        RepId::DvDvm2Mixed => Ok(dv_dvm2_mixed(p)?.value),
        RepId::DvDvm2X => Ok(dv_dvm2_x(p)?.value),
        RepId::DvDvm2Y => Ok(dv_dvm2_y(p)?.value),
        RepId::DvDvm2Compact => Ok(dv_dvm2_compact(p)?.value),
        RepId::DvDvp1 => Ok(dv_dvp1(p)?.value),
        RepId::Malyshev => malyshev_same_arg(v, x),
        RepId::Glasser => glasser_form(v, x, y),
        RepId::SinglePcf => single_pcf(v, x),
        RepId::ErfcProd => erfc_product(x, y),
        RepId::K14 => k14_rep(x),
        RepId::K14D32 => k14_times_d32(x, y),
    }
}

/// Oracle value of the product a representation claims to equal, computed
/// from the independent quadrature route (with the order recurrence for the
/// one representation whose second order can reach v+1 ≥ 0).
pub fn oracle_product(id: RepId, v: f64, x: f64, y: f64) -> Result<f64> {
    match id {
        RepId::DvDv | RepId::TimeForm => {
            Ok(special::pcf_oracle(v, x)?.value * special::pcf_oracle(v, y)?.value)
        }
        RepId::DvDvm1Erfc | RepId::DvDvm1Exp => {
            Ok(special::pcf_oracle(v, x)?.value * special::pcf_oracle(v - 1.0, y)?.value)
        }
        RepId::DvDvm2Mixed | RepId::DvDvm2X | RepId::DvDvm2Y | RepId::DvDvm2Compact => {
            Ok(special::pcf_oracle(v, x)?.value * special::pcf_oracle(v - 2.0, y)?.value)
        }
        RepId::DvDvp1 => {
            Ok(special::pcf_oracle(v, x)?.value * special::pcf_any_order(v + 1.0, y)?.value)
        }
        RepId::Malyshev => {
            Ok(special::pcf_oracle(v, x)?.value * special::pcf_oracle(v, -x)?.value)
        }
        RepId::Glasser => {
            Ok(special::pcf_oracle(-v, x)?.value * special::pcf_oracle(-v, -y)?.value)
        }
        RepId::SinglePcf => Ok(special::pcf_oracle(v, x)?.value),
        RepId::ErfcProd => Ok(special::erfc(x) * special::erfc(y)),
        RepId::K14 => special::bessel_k_quarter(x),
        RepId::K14D32 => {
            Ok(special::bessel_k_quarter(x)? * special::pcf_oracle(-1.5, y)?.value)
        }
    }
}
