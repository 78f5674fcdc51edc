//! Small-rate limits: Γ-weighted cylinder-function products that converge to
//! elementary closed forms as the rate β → 0.
//!
//! Each case couples a log-space LHS evaluator at finite β — products like
//! Γ(s/β)·D_{-s/β}(x√β - α/√β)·D_{-s/β}(y√β + α/√β)/√β, where the Γ factor
//! alone overflows long before β reaches the interesting range — with an
//! elementary RHS that is the exact β → 0 limit. Entries 4–7 change character
//! with the sign of α: finite at α = 0, collapsing to 0 for α < 0 and
//! diverging for α > 0, which is tested by magnitude ratios rather than
//! extrapolation.
//!
//! Convergence in β is first order, so values on a decreasing β grid are
//! polynomial-extrapolated to β = 0 (Neville at the origin over the whole
//! grid); on the default grid {0.4, 0.2, 0.1, 0.05} this lands within ~1e-4
//! of every finite closed form.

use crate::error::{Error, Result};
use crate::special;
use std::f64::consts::{LN_2, PI};

/// Default decreasing β grid for convergence runs.
pub const BETA_GRID: [f64; 4] = [0.4, 0.2, 0.1, 0.05];

/// Pass bar for extrapolated-vs-closed-form residuals.
pub const LIMIT_TOL: f64 = 1e-3;

/// Magnitude factor for the zero/infinity branch checks of entries 4–7.
pub const BRANCH_FACTOR: f64 = 1e3;

/// Closed-form limit classification.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum RhsKind {
    Finite(f64),
    Zero,
    Infinite,
}

impl RhsKind {
    pub fn finite(self) -> Option<f64> {
        match self {
            RhsKind::Finite(v) => Some(v),
            _ => None,
        }
    }
}

/// Which limit is being evaluated: the eight numbered entries or one of the
/// cylinder-function ratio specializations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LimitId {
    Entry(u8),
    RatioGeneral,
    RatioGolden,
    RatioS4,
}

impl std::fmt::Display for LimitId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            LimitId::Entry(n) => write!(f, "{n}"),
            LimitId::RatioGeneral => f.write_str("ratio-general"),
            LimitId::RatioGolden => f.write_str("ratio-golden"),
            LimitId::RatioS4 => f.write_str("ratio-s4"),
        }
    }
}

impl std::str::FromStr for LimitId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let low = s.to_ascii_lowercase();
        match low.as_str() {
            "ratio-general" => Ok(LimitId::RatioGeneral),
            "ratio-golden" => Ok(LimitId::RatioGolden),
            "ratio-s4" => Ok(LimitId::RatioS4),
            _ => match low.parse::<u8>() {
                Ok(n) if (1..=8).contains(&n) => Ok(LimitId::Entry(n)),
                _ => Err(Error::domain(
                    "LimitId",
                    format!("unknown limit case '{s}' (expected 1–8, ratio-general, ratio-golden, ratio-s4)"),
                )),
            },
        }
    }
}

/// One limit case: identifier plus the parameter block (s, α, x, y).
/// Entries 4–8 and the ratios ignore y; entry 8 also ignores α and x.
#[derive(Clone, Copy, Debug)]
pub struct LimitCase {
    pub id: LimitId,
    pub s: f64,
    pub alpha: f64,
    pub x: f64,
    pub y: f64,
}

impl LimitCase {
    pub fn entry(entry: u8, s: f64, alpha: f64, x: f64, y: f64) -> Result<Self> {
        if !(1..=8).contains(&entry) {
            return Err(Error::domain(
                "LimitCase",
                format!("entry must be 1–8, got {entry}"),
            ));
        }
        LimitCase::checked(LimitId::Entry(entry), s, alpha, x, y)
    }

    pub fn ratio_general(s: f64, alpha: f64, x: f64) -> Result<Self> {
        LimitCase::checked(LimitId::RatioGeneral, s, alpha, x, 0.0)
    }

    /// The specialization whose limit is the golden-ratio conjugate
    /// (√5 − 1)/2: s = 1, α = 1, x = 0.
    pub fn ratio_golden() -> Self {
        LimitCase {
            id: LimitId::RatioGolden,
            s: 1.0,
            alpha: 1.0,
            x: 0.0,
            y: 0.0,
        }
    }

    /// The specialization with limit exactly 2: s = 4, α = 0, x = 1.
    pub fn ratio_s4() -> Self {
        LimitCase {
            id: LimitId::RatioS4,
            s: 4.0,
            alpha: 0.0,
            x: 1.0,
            y: 0.0,
        }
    }

    fn checked(id: LimitId, s: f64, alpha: f64, x: f64, y: f64) -> Result<Self> {
        if !(s > 0.0) || !alpha.is_finite() || !x.is_finite() || !y.is_finite() {
            return Err(Error::domain(
                "LimitCase",
                format!("requires s > 0 and finite parameters, got s = {s}"),
            ));
        }
        Ok(LimitCase { id, s, alpha, x, y })
    }

    /// Shifted first argument x√β − α/√β.
    fn zx(&self, beta: f64) -> f64 {
        self.x * beta.sqrt() - self.alpha / beta.sqrt()
    }

    /// Shifted second argument y√β + α/√β.
    fn zy(&self, beta: f64) -> f64 {
        self.y * beta.sqrt() + self.alpha / beta.sqrt()
    }
}

fn check_beta(beta: f64) -> Result<()> {
    if !(beta > 0.0) {
        return Err(Error::domain(
            "limit_lhs",
            format!("requires beta > 0, got {beta}"),
        ));
    }
    Ok(())
}

/// Natural log of the LHS at finite β. Everything — Γ factors, the 2^{s/(2β)}
/// weights, the D values — is summed in log space and never exponentiated
/// here, so the α > 0 divergent branches stay representable far beyond where
/// the linear value overflows.
pub fn limit_lhs_log(case: &LimitCase, beta: f64) -> Result<f64> {
    check_beta(beta)?;
    let s = case.s;
    let q = s / beta;
    let zx = case.zx(beta);
    let zy = case.zy(beta);
    let lnb = beta.ln();
    let log_d = |order: f64, z: f64| -> Result<f64> {
        Ok(special::pcf_oracle(order, z)?.log_value)
    };
    match case.id {
        LimitId::Entry(1) => {
            Ok(special::log_gamma(q)? - 0.5 * lnb + log_d(-q, zx)? + log_d(-q, zy)?)
        }
        LimitId::Entry(2) => {
            Ok(special::log_gamma(q)? - lnb + log_d(-q, zy)? + log_d(-1.0 - q, zx)?)
        }
        LimitId::Entry(3) => Ok((s + beta).ln() + special::log_gamma(q)? - 1.5 * lnb
            + log_d(-q, zy)?
            + log_d(-2.0 - q, zx)?),
        LimitId::Entry(4) => Ok(0.5 * q * LN_2 + special::log_gamma(0.5 * q)? - 0.5 * lnb
            + log_d(-q, zx)?),
        LimitId::Entry(5) => Ok(0.5 * q * LN_2
            + special::log_gamma(0.5 * (s + beta) / beta)?
            + log_d(-q, zx)?),
        LimitId::Entry(6) => {
            Ok(0.5 * q * LN_2 + special::log_gamma(0.5 * q)? - lnb + log_d(-1.0 - q, zx)?)
        }
        LimitId::Entry(7) => Ok(0.5 * q * LN_2
            + (s + beta).ln()
            + special::log_gamma(0.5 * q)?
            - 1.5 * lnb
            + log_d(-2.0 - q, zx)?),
        LimitId::Entry(_) => Ok(special::log_gamma(0.5 * q)? - 0.5 * lnb
            - special::log_gamma(0.5 * (s + beta) / beta)?),
        // √β·D_{-s/β}(zx)/D_{-1-s/β}(zx)
        _ => Ok(0.5 * lnb + log_d(-q, zx)? - log_d(-1.0 - q, zx)?),
    }
}

/// Linear-space LHS at finite β (may overflow to +∞ for α > 0 branches at
/// very small β; the log variant never does).
pub fn limit_lhs(case: &LimitCase, beta: f64) -> Result<f64> {
    Ok(limit_lhs_log(case, beta)?.exp())
}

/// Exact β → 0 limit. Entries 4–7 branch on the sign of α; everything else
/// is finite on its whole parameter domain.
pub fn limit_rhs(case: &LimitCase) -> RhsKind {
    let s = case.s;
    let alpha = case.alpha;
    let rho = (alpha * alpha + 4.0 * s).sqrt();
    let two_pi_sqrt = (2.0 * PI).sqrt();
    match case.id {
        LimitId::Entry(1) => {
            RhsKind::Finite(two_pi_sqrt / rho * (-0.5 * rho * (case.x + case.y)).exp())
        }
        LimitId::Entry(2) => RhsKind::Finite(
            2.0 * two_pi_sqrt / (rho * (rho - alpha)) * (-0.5 * rho * (case.x + case.y)).exp(),
        ),
        LimitId::Entry(3) => RhsKind::Finite(
            two_pi_sqrt * (alpha + rho) / (rho * (rho - alpha))
                * (-0.5 * rho * (case.x + case.y)).exp(),
        ),
        LimitId::Entry(n @ 4..=7) => {
            if alpha < 0.0 {
                RhsKind::Zero
            } else if alpha > 0.0 {
                RhsKind::Infinite
            } else {
                let decay = (-s.sqrt() * case.x).exp();
                RhsKind::Finite(match n {
                    4 | 7 => (2.0 * PI / s).sqrt() * decay,
                    5 => PI.sqrt() * decay,
                    _ => two_pi_sqrt / s * decay,
                })
            }
        }
        LimitId::Entry(_) => RhsKind::Finite((2.0 / s).sqrt()),
        // (√(α²+4s) − α)/2 for the ratio specializations.
        _ => RhsKind::Finite(0.5 * (rho - alpha)),
    }
}

/// A β → 0 convergence run: LHS values along the grid, the extrapolated
/// limit, and the residual against the closed form.
#[derive(Clone, Debug)]
pub struct ConvergenceRecord {
    pub case: LimitCase,
    pub beta_grid: Vec<f64>,
    pub lhs_values: Vec<f64>,
    pub extrapolated: f64,
    pub rhs: RhsKind,
    pub residual: f64,
    /// Set when the raw sequence does not contract like a first-order-in-β
    /// family; the extrapolated value is still returned.
    pub low_confidence: bool,
}

/// Polynomial extrapolation to β = 0 (Neville over all grid points).
///
/// Returns the extrapolated value and a low-confidence flag raised when
/// successive differences of the raw values fail to shrink or alternate in
/// sign. Differences at the rounding level of the values count as converged
/// rather than unstable: some cases are constant in β up to float noise,
/// and their noise-sign pattern carries no information.
pub fn extrapolate(betas: &[f64], values: &[f64]) -> Result<(f64, bool)> {
    let n = betas.len();
    if n < 3 || values.len() != n {
        return Err(Error::domain(
            "extrapolate",
            format!("needs ≥ 3 grid points, got {n} betas and {} values", values.len()),
        ));
    }
    for pair in betas.windows(2) {
        if !(pair[0] > pair[1]) || !(pair[1] > 0.0) {
            return Err(Error::domain(
                "extrapolate",
                "beta grid must be strictly decreasing and positive",
            ));
        }
    }

    let mut low_confidence = false;
    let scale = values.iter().fold(0.0_f64, |m, v| m.max(v.abs()));
    let noise = 1e-13 * scale.max(f64::MIN_POSITIVE);
    let diffs: Vec<f64> = values.windows(2).map(|w| w[1] - w[0]).collect();
    for pair in diffs.windows(2) {
        let (d0, d1) = (pair[0], pair[1]);
        if d1.abs() <= noise {
            continue; // converged down to rounding level
        }
        if d0.abs() <= noise || d0.signum() != d1.signum() || d1.abs() > 0.85 * d0.abs() {
            low_confidence = true;
        }
    }

    // Neville at the origin, in place: after stage j, t[i] interpolates the
    // points i..=i+j evaluated at β = 0.
    let mut t = values.to_vec();
    for j in 1..n {
        for i in 0..n - j {
            t[i] = (betas[i] * t[i + 1] - betas[i + j] * t[i]) / (betas[i] - betas[i + j]);
        }
    }
    Ok((t[0], low_confidence))
}

/// Evaluate a finite-limit case along a β grid and extrapolate.
///
/// Cases whose RHS is 0 or ∞ (entries 4–7 with α ≠ 0) have no finite target
/// to extrapolate to; use [`branch_ratio`] for those.
pub fn run_case(case: &LimitCase, beta_grid: &[f64]) -> Result<ConvergenceRecord> {
    let rhs = limit_rhs(case);
    let target = rhs.finite().ok_or_else(|| {
        Error::domain(
            "run_case",
            "RHS is not finite for this case; use branch_ratio instead",
        )
    })?;
    let mut lhs_values = Vec::with_capacity(beta_grid.len());
    for &beta in beta_grid {
        lhs_values.push(limit_lhs(case, beta)?);
    }
    let (extrapolated, low_confidence) = extrapolate(beta_grid, &lhs_values)?;
    let residual = (extrapolated - target).abs() / target.abs().max(1.0);
    Ok(ConvergenceRecord {
        case: *case,
        beta_grid: beta_grid.to_vec(),
        lhs_values,
        extrapolated,
        rhs,
        residual,
        low_confidence,
    })
}

/// Magnitude ratio LHS(β) / RHS(α = 0) for the zero/infinity branches of
/// entries 4–7; computed in log space so the α > 0 explosion cannot
/// overflow prematurely.
pub fn branch_ratio(case: &LimitCase, beta: f64) -> Result<f64> {
    match case.id {
        LimitId::Entry(n @ 4..=7) if case.alpha != 0.0 => {
            let reference = LimitCase::entry(n, case.s, 0.0, case.x, case.y)?;
            let log_rhs0 = limit_rhs(&reference)
                .finite()
                .expect("alpha = 0 RHS is finite")
                .ln();
            Ok((limit_lhs_log(case, beta)? - log_rhs0).exp())
        }
        _ => Err(Error::domain(
            "branch_ratio",
            "only entries 4–7 with alpha ≠ 0 have zero/infinity branches",
        )),
    }
}

/// √β·D_{-s/β}(x√β − α/√β)/D_{-1-s/β}(x√β − α/√β) at finite β; its β → 0
/// limit is (√(α² + 4s) − α)/2.
pub fn ratio_general(s: f64, alpha: f64, x: f64, beta: f64) -> Result<f64> {
    let case = LimitCase::ratio_general(s, alpha, x)?;
    limit_lhs(&case, beta)
}

/// Γ(s/(2β))/(√β·Γ((s+β)/(2β))): the pure gamma-ratio limit, value √(2/s)
/// as β → 0.
pub fn gamma_ratio_limit_check(s: f64, beta: f64) -> Result<f64> {
    check_beta(beta)?;
    if !(s > 0.0) {
        return Err(Error::domain(
            "gamma_ratio_limit_check",
            format!("requires s > 0, got {s}"),
        ));
    }
    Ok((special::log_gamma(0.5 * s / beta)? - 0.5 * beta.ln()
        - special::log_gamma(0.5 * (s + beta) / beta)?)
    .exp())
}
