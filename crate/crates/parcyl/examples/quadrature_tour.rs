//! A tour of the double-exponential quadrature engine: endpoint
//! singularities on the unit interval, semi-infinite integrals with
//! automatic truncation, and the log-space variant that integrates
//! functions whose values overflow f64.
//!
//! Run with:
//!
//! ```not_rust
//! cargo run --example quadrature_tour
//! ```

use parcyl::quadrature::{
    integrate_semi_infinite, integrate_unit, log_integrate_semi_infinite, SingularityHint,
};
use std::f64::consts::PI;

fn main() -> Result<(), parcyl::Error> {
    // Integrable endpoint singularities are the engine's home turf: the
    // variable change clusters nodes double-exponentially at both ends.
    // ∫₀¹ du/√(u(1-u)) = π despite blowing up at u = 0 and u = 1.
    let arcsine = integrate_unit(
        |u, omu| 1.0 / (u * omu).sqrt(),
        SingularityHint::new(-0.5, -0.5),
        1e-12,
    )?;
    println!("∫₀¹ du/√(u(1-u))  = {:.15}  (π = {:.15})", arcsine.value, PI);
    println!(
        "  evaluations = {}, |error est| = {:.1e}",
        arcsine.evaluations, arcsine.abs_error_estimate
    );

    // The second argument is 1-u computed without cancellation, which
    // matters for kernels that need the distance to the right endpoint.
    let right_singular = integrate_unit(
        |_u, omu| 1.0 / omu.sqrt(),
        SingularityHint::new(0.0, -0.5),
        1e-12,
    )?;
    println!("∫₀¹ du/√(1-u)     = {:.15}  (exact 2)", right_singular.value);

    // Semi-infinite integrals locate the integrand's mass, truncate where
    // the tail stops mattering, and map back to the unit interval.
    // ∫₀^∞ t³e^{-t} dt = Γ(4) = 6.
    let gamma4 = integrate_semi_infinite(|t| t.powi(3) * (-t).exp(), 1e-12)?;
    println!("∫₀^∞ t³e^(-t) dt  = {:.15}  (exact 6)", gamma4.value);

    // A displaced Gaussian: all the mass sits near t = 20, far from the
    // origin; the truncation scan finds it anyway.
    let displaced = integrate_semi_infinite(|t| (-0.5 * (t - 20.0).powi(2)).exp(), 1e-10)?;
    println!(
        "∫₀^∞ e^(-(t-20)²/2) = {:.15}  (√(2π) = {:.15})",
        displaced.value,
        (2.0 * PI).sqrt()
    );

    // The log-space variant sums log-integrand nodes with log-sum-exp, so
    // integrands whose peak value is e^{hundreds} never overflow. Here
    // ∫₀^∞ t⁹⁹ e^{-t} dt = 99! , whose log is lgΓ(100) ≈ 359.13.
    let log_value = log_integrate_semi_infinite(|t| 99.0 * t.ln() - t, 1e-12)?;
    println!("log ∫₀^∞ t⁹⁹e^(-t) dt = {log_value:.12}");
    println!("  (the plain value would be ≈ e^{:.1}, far beyond f64)", log_value);

    Ok(())
}
