//! Transform-pair verification: every closed transform against a numerical
//! forward transform of its time side, plus the process-level transforms
//! against elementary Gaussian oracles.
//!
//! Frozen constants are 22-digit values computed outside this crate: the six
//! pair sides at (β=1, c=0, x=1, y=1/2), and the process transforms at their
//! pinned parameter points.

// Anchor literals keep their full generated precision on purpose.
#![allow(clippy::excessive_precision)]

use parcyl::laplace::{
    bm_density_time, bm_density_transform, bm_distribution_time, bm_distribution_transform,
    forward_laplace, ou_density_time, ou_density_transform, ou_distribution_time,
    ou_distribution_transform, pair_time, pair_transform, verify_pair, OrnsteinUhlenbeck,
    PairParams, DEFAULT_S_GRID, PAIR_TOL,
};
use std::f64::consts::PI;

fn assert_rel(actual: f64, expected: f64, tol: f64, what: &str) {
    let scale = expected.abs().max(1e-300);
    assert!(
        (actual - expected).abs() <= tol * scale,
        "{what}: got {actual:.15e}, want {expected:.15e} (rel {:.2e})",
        (actual - expected).abs() / scale
    );
}

fn reference_params() -> PairParams {
    PairParams::new(1.0, 0.0, 1.0, 0.5).unwrap()
}

const TIME_AT_ONE: [(u8, f64); 6] = [
    (1, 0.5767500300396393294951),
    (2, 0.3643364839755829279976),
    (3, 0.2905193055904527869915),
    (4, 0.1824952572564028006079),
    (5, 0.2120865307954450648884),
    (6, 0.3945817880518478654963),
];

const TRANSFORM_AT_ONE: [(u8, f64); 6] = [
    (1, 0.4203967628424155725557),
    (2, 0.2695070193929677529482),
    (3, 0.2695070193929677529482),
    (4, 0.1428216265729658480408),
    (5, 0.1428216265729658480408),
    (6, 0.2856432531459316960816),
];

#[test]
fn time_sides_match_frozen_values() {
    let params = reference_params();
    for &(entry, expected) in &TIME_AT_ONE {
        let got = pair_time(entry, 1.0, &params).unwrap();
        assert_rel(got, expected, 1e-13, &format!("pair {entry} time side at t = 1"));
    }
}

#[test]
fn transform_sides_match_frozen_values() {
    let params = reference_params();
    for &(entry, expected) in &TRANSFORM_AT_ONE {
        let got = pair_transform(entry, 1.0, &params).unwrap();
        assert_rel(got, expected, 1e-10, &format!("pair {entry} transform at s = 1"));
    }
}

#[test]
fn transform_prefactors_are_mutually_consistent() {
    // Off the boundary: F₃ = (s+c)·F₂, F₅ = θ·F₄, F₆ = ((s+β+c)/β)·F₄.
    let params = PairParams::new(0.8, 0.3, 1.2, 0.4).unwrap();
    for &s in &[0.5, 1.0, 3.0] {
        let theta = (s + 0.3) / 0.8;
        let f2 = pair_transform(2, s, &params).unwrap();
        let f3 = pair_transform(3, s, &params).unwrap();
        let f4 = pair_transform(4, s, &params).unwrap();
        let f5 = pair_transform(5, s, &params).unwrap();
        let f6 = pair_transform(6, s, &params).unwrap();
        assert_rel(f3, (s + 0.3) * f2, 1e-12, "entry 3 vs entry 2");
        assert_rel(f5, theta * f4, 1e-12, "entry 5 vs entry 4");
        assert_rel(f6, (s + 0.8 + 0.3) / 0.8 * f4, 1e-12, "entry 6 vs entry 4");
    }
}

#[test]
fn every_pair_round_trips_through_the_forward_transform() {
    let params = reference_params();
    for entry in 1..=6u8 {
        let check = verify_pair(entry, &params, &DEFAULT_S_GRID).unwrap();
        assert!(check.pass, "pair {entry} failed: {:?}", check.rows);
        assert_eq!(check.rows.len(), DEFAULT_S_GRID.len());
        for row in &check.rows {
            assert!(
                row.residual <= PAIR_TOL,
                "pair {entry} at s = {}: residual {:.2e}",
                row.s,
                row.residual
            );
        }
    }
}

#[test]
fn every_pair_holds_on_the_zero_sum_boundary() {
    // x + y = 0 is where the time kernels lose their Gaussian damping at
    // t → 0 and entry 3 needs its stand-alone transform-side constant.
    let params = PairParams::new(0.8, 0.3, 1.2, -1.2).unwrap();
    for entry in 1..=6u8 {
        let check = verify_pair(entry, &params, &DEFAULT_S_GRID).unwrap();
        assert!(check.pass, "pair {entry} on boundary failed: {:?}", check.rows);
    }
}

#[test]
fn entry_three_boundary_constant_sits_on_the_transform_side() {
    let beta = 0.8;
    let on = PairParams::new(beta, 0.3, 1.2, -1.2).unwrap();
    let off = PairParams::new(beta, 0.3, 1.2, 0.4).unwrap();
    for &s in &[0.7, 2.0] {
        // On the boundary: F₃ = (s+c)·F₂ − β√(π/2).
        let f2 = pair_transform(2, s, &on).unwrap();
        let f3 = pair_transform(3, s, &on).unwrap();
        assert_rel(
            f3,
            (s + 0.3) * f2 - beta * (0.5 * PI).sqrt(),
            1e-12,
            "boundary constant",
        );
        // Off the boundary there is no extra constant.
        let f2 = pair_transform(2, s, &off).unwrap();
        let f3 = pair_transform(3, s, &off).unwrap();
        assert_rel(f3, (s + 0.3) * f2, 1e-12, "no constant off boundary");
    }
}

#[test]
fn pair_arguments_are_validated() {
    assert!(PairParams::new(0.0, 0.0, 1.0, 0.0).is_err());
    assert!(PairParams::new(1.0, -0.1, 1.0, 0.0).is_err());
    assert!(PairParams::new(1.0, 0.0, 0.3, -0.5).is_err());
    assert!(PairParams::new(1.0, 0.0, 1.0, -1.0).is_ok()); // boundary itself

    let params = reference_params();
    assert!(pair_time(0, 1.0, &params).is_err());
    assert!(pair_time(7, 1.0, &params).is_err());
    assert!(pair_time(1, 0.0, &params).is_err());
    assert!(pair_transform(1, 0.0, &params).is_err());
}

#[test]
fn forward_laplace_reproduces_elementary_transforms() {
    // ∫ e^{-st}·e^{-2t} dt = 1/(s+2)
    let r = forward_laplace(|t| (-2.0 * t).exp(), 1.0, 1e-10).unwrap();
    assert_rel(r.value, 1.0 / 3.0, 1e-9, "transform of e^{-2t}");
    // ∫ e^{-st}·t dt = 1/s²
    let r = forward_laplace(|t| t, 3.0, 1e-10).unwrap();
    assert_rel(r.value, 1.0 / 9.0, 1e-9, "transform of t");
    assert!(forward_laplace(|t| t, 0.0, 1e-10).is_err());
}

#[test]
fn ou_density_transform_matches_frozen_value() {
    let ou = OrnsteinUhlenbeck::new(0.5, 1.0, std::f64::consts::SQRT_2).unwrap();
    let got = ou_density_transform(1.0, 1.0, 0.0, &ou).unwrap();
    assert_rel(got, 0.2703913324211595594919, 1e-10, "OU density transform");
}

#[test]
fn ou_density_transform_is_the_transform_of_the_gaussian_density() {
    // The time-domain transition law is elementary-Gaussian; its numerical
    // Laplace transform must match the cylinder-function closed form.
    let ou = OrnsteinUhlenbeck::new(0.5, 1.0, std::f64::consts::SQRT_2).unwrap();
    assert_rel(
        ou_density_time(1.0, 1.0, 0.0, &ou),
        0.3273497915132940309768,
        1e-13,
        "OU density at t = 1",
    );
    for &(w, s) in &[(1.0, 1.0), (1.0, 2.0), (-0.7, 1.5)] {
        let forward = forward_laplace(|t| ou_density_time(w, t, 0.0, &ou), s, 1e-9).unwrap();
        let closed = ou_density_transform(w, s, 0.0, &ou).unwrap();
        assert_rel(forward.value, closed, 1e-7, &format!("OU density at w = {w}, s = {s}"));
    }
}

#[test]
fn ou_density_transform_branches_join_continuously() {
    let ou = OrnsteinUhlenbeck::new(0.3, 0.7, 1.1).unwrap();
    let w0 = 0.4;
    let above = ou_density_transform(w0 + 1e-9, 1.0, w0, &ou).unwrap();
    let below = ou_density_transform(w0 - 1e-9, 1.0, w0, &ou).unwrap();
    assert_rel(above, below, 1e-6, "branch continuity at w = w0");

    // With α = 0 the process is symmetric about w0 = 0.
    let sym = OrnsteinUhlenbeck::new(0.0, 1.0, 1.3).unwrap();
    let right = ou_density_transform(0.9, 1.2, 0.0, &sym).unwrap();
    let left = ou_density_transform(-0.9, 1.2, 0.0, &sym).unwrap();
    assert_rel(right, left, 1e-12, "symmetric OU");
}

#[test]
fn ou_distribution_transform_matches_frozen_and_forward() {
    // Symmetric start-at-threshold case: P(W_t ≤ w0 | w0) = 1/2 for all t
    // when α = 0, so the transform at s = 1 is exactly 1/2.
    let sym = OrnsteinUhlenbeck::new(0.0, 1.0, std::f64::consts::SQRT_2).unwrap();
    let got = ou_distribution_transform(0.0, 1.0, 0.0, &sym).unwrap();
    assert_rel(got, 0.5, 1e-10, "symmetric OU distribution transform");

    let ou = OrnsteinUhlenbeck::new(0.3, 0.7, 1.1).unwrap();
    for &s in &[0.8, 1.5] {
        let forward =
            forward_laplace(|t| ou_distribution_time(0.8, t, 0.2, &ou), s, 1e-9).unwrap();
        let closed = ou_distribution_transform(0.8, s, 0.2, &ou).unwrap();
        assert_rel(forward.value, closed, 1e-7, &format!("OU distribution at s = {s}"));
    }

    assert!(ou_distribution_transform(0.0, 1.0, 0.5, &ou).is_err()); // w1 < w0
    assert!(ou_distribution_transform(1.0, 0.0, 0.5, &ou).is_err()); // s = 0
}

#[test]
fn bm_density_transform_matches_frozen_and_forward() {
    let (alpha, sigma, w0) = (1.0, 1.0, 0.0);
    let got = bm_density_transform(0.5, 2.0, w0, alpha, sigma).unwrap();
    assert_rel(got, 0.2410495066105812583861, 1e-12, "BM density transform");

    for &(w, s) in &[(0.5, 2.0), (-0.5, 2.0), (1.5, 0.7)] {
        let forward =
            forward_laplace(|t| bm_density_time(w, t, w0, alpha, sigma), s, 1e-9).unwrap();
        let closed = bm_density_transform(w, s, w0, alpha, sigma).unwrap();
        assert_rel(forward.value, closed, 1e-7, &format!("BM density at w = {w}, s = {s}"));
    }
}

#[test]
fn bm_distribution_transform_matches_frozen_and_forward() {
    let (alpha, sigma, w0) = (1.0, 1.0, 0.0);
    let got = bm_distribution_transform(0.5, 2.0, w0, alpha, sigma).unwrap();
    assert_rel(got, 0.304986852666343530163, 1e-12, "BM distribution transform");

    let forward =
        forward_laplace(|t| bm_distribution_time(0.5, t, w0, alpha, sigma), 2.0, 1e-9).unwrap();
    assert_rel(forward.value, got, 1e-7, "BM distribution forward");

    assert!(bm_distribution_transform(-0.5, 2.0, 0.0, alpha, sigma).is_err());
    assert!(bm_density_transform(0.5, 2.0, 0.0, alpha, 0.0).is_err());
}
