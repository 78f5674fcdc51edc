//! Randomized property tests: structural identities that must hold at every
//! admissible parameter choice, not just on curated grids. Each family keeps
//! its case count small enough that the quadrature-backed ones stay fast.

use proptest::prelude::*;

use parcyl::quadrature::{
    integrate_semi_infinite_with, integrate_unit, log_integrate_semi_infinite_with,
    SingularityHint,
};
use parcyl::reps::{dv_dv, evaluate, RepId};
use parcyl::special::{erfc, log_gamma, pcf_oracle};
use parcyl::EvalPoint;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    /// Three-term order recurrence D_{v+1}(z) = z·D_v(z) - v·D_{v-1}(z), all
    /// three values from the recurrence-free integral oracle. v stays below
    /// -1.1 so that v+1 is comfortably inside the oracle's own domain rather
    /// than its near-zero detour (which would make the check circular).
    #[test]
    fn recurrence_closes_for_random_orders(v in -5.0..-1.1f64, z in -4.0..4.0f64) {
        let up = pcf_oracle(v + 1.0, z).unwrap().value;
        let mid = pcf_oracle(v, z).unwrap().value;
        let down = pcf_oracle(v - 1.0, z).unwrap().value;
        let defect = (up - (z * mid - v * down)).abs();
        prop_assert!(
            defect <= 1e-9 * mid.abs().max(1.0),
            "defect {defect:.3e} at v = {v}, z = {z}"
        );
    }

    /// The base product representation is symmetric in (x, y) even though its
    /// prefactor e^{(y²-x²)/4} and kernel are not.
    #[test]
    fn base_product_is_symmetric_in_arguments(
        v in -3.0..-0.2f64,
        x in -1.5..2.5f64,
        y in -1.5..2.5f64,
    ) {
        prop_assume!(x + y > 0.05);
        let xy = dv_dv(EvalPoint::new(v, x, y)).unwrap().value;
        let yx = dv_dv(EvalPoint::new(v, y, x)).unwrap().value;
        let diff = (xy - yx).abs();
        prop_assert!(
            diff <= 1e-9 * xy.abs().max(1e-300),
            "asymmetry {diff:.3e} vs value {xy:.6e} at v = {v}, x = {x}, y = {y}"
        );
    }

    /// The jump-corrected representations continue the interior onto the
    /// x + y = 0 boundary: approaching along y = -x + δ, the gap to the
    /// boundary value shrinks linearly in δ (down to quadrature noise).
    #[test]
    fn corrected_boundary_continues_interior(
        which in 0usize..3,
        v in -3.0..-0.3f64,
        x in 0.3..2.0f64,
    ) {
        let id = [RepId::DvDvm1Exp, RepId::DvDvm2Compact, RepId::DvDvp1][which];
        let at_boundary = evaluate(id, v, x, -x, 1.0).unwrap();
        let gap = |delta: f64| (evaluate(id, v, x, -x + delta, 1.0).unwrap() - at_boundary).abs();
        let coarse = gap(1e-6);
        let fine = gap(1e-7);
        let noise = 1e-8 * at_boundary.abs().max(1.0);
        prop_assert!(
            coarse <= 1e-4 * at_boundary.abs().max(1.0),
            "{} gap {coarse:.3e} at δ = 1e-6 (v = {v}, x = {x})",
            id.token()
        );
        prop_assert!(
            fine <= 0.25 * coarse + noise,
            "{} gap not shrinking: {coarse:.3e} → {fine:.3e} (v = {v}, x = {x})",
            id.token()
        );
    }

    /// Integration is linear: the engine applied to a·f + b·g agrees with the
    /// same combination of the separately integrated pieces.
    #[test]
    fn unit_integration_is_linear(
        a in -3.0..3.0f64,
        b in -3.0..3.0f64,
        p in 0.5..4.0f64,
        q in -2.0..2.0f64,
    ) {
        let hint = SingularityHint::new(0.0, 0.0);
        let f = |u: f64| (p * u).sin();
        let g = |u: f64| (q * u).exp();
        let combined = integrate_unit(|u, _| a * f(u) + b * g(u), hint, 1e-12).unwrap();
        let part_f = integrate_unit(|u, _| f(u), hint, 1e-12).unwrap();
        let part_g = integrate_unit(|u, _| g(u), hint, 1e-12).unwrap();
        let diff = (combined.value - (a * part_f.value + b * part_g.value)).abs();
        let budget = combined.abs_error_estimate
            + a.abs() * part_f.abs_error_estimate
            + b.abs() * part_g.abs_error_estimate
            + 1e-12;
        prop_assert!(diff <= budget, "linearity defect {diff:.3e} > budget {budget:.3e}");
    }

    /// The log-space engine agrees with the linear engine whenever the linear
    /// route does not overflow: a displaced Gaussian bump, both ways.
    #[test]
    fn log_engine_matches_linear_engine(peak in 0.0..5.0f64, width in 0.5..2.0f64) {
        let linear = integrate_semi_infinite_with(
            |t| (-((t - peak) / width).powi(2) / 2.0).exp(),
            0.0,
            1e-12,
        )
        .unwrap();
        let logged = log_integrate_semi_infinite_with(
            |t| -((t - peak) / width).powi(2) / 2.0,
            0.0,
            1e-12,
        )
        .unwrap();
        let rel = (logged.exp() - linear.value).abs() / linear.value;
        prop_assert!(rel <= 1e-10, "routes disagree by {rel:.3e} at peak {peak}, width {width}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    /// erfc(x) + erfc(-x) = 2 across the whole useful range.
    #[test]
    fn erfc_reflection_sums_to_two(x in -6.0..6.0f64) {
        let total = erfc(x) + erfc(-x);
        prop_assert!((total - 2.0).abs() <= 1e-13, "erfc({x}) + erfc({}) = {total}", -x);
    }

    /// Γ(a+1) = a·Γ(a) in log space.
    #[test]
    fn gamma_recurrence_holds(a in 0.1..50.0f64) {
        let defect = log_gamma(a + 1.0).unwrap() - a.ln() - log_gamma(a).unwrap();
        prop_assert!(
            defect.abs() <= 1e-13 * log_gamma(a + 1.0).unwrap().abs().max(1.0),
            "recurrence defect {defect:.3e} at a = {a}"
        );
    }

    /// Legendre duplication Γ(2a) = Γ(a)·Γ(a+1/2)·2^{2a-1}/√π in log space.
    #[test]
    fn gamma_duplication_holds(a in 0.1..50.0f64) {
        let defect = log_gamma(2.0 * a).unwrap()
            - log_gamma(a).unwrap()
            - log_gamma(a + 0.5).unwrap()
            - (2.0 * a - 1.0) * 2.0_f64.ln()
            + 0.5 * std::f64::consts::PI.ln();
        prop_assert!(
            defect.abs() <= 1e-13 * log_gamma(2.0 * a).unwrap().abs().max(1.0),
            "duplication defect {defect:.3e} at a = {a}"
        );
    }

    /// The oracle stays strictly positive everywhere it is defined.
    #[test]
    fn oracle_is_positive(v in -6.0..-0.11f64, z in -5.0..5.0f64) {
        let got = pcf_oracle(v, z).unwrap();
        prop_assert!(got.value > 0.0, "D_{{{v}}}({z}) = {} not positive", got.value);
    }
}
