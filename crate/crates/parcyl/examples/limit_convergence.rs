//! Watching Γ-weighted cylinder-function products converge to elementary
//! closed forms as the rate β → 0: raw values along a β grid, polynomial
//! extrapolation to β = 0, and the zero/infinity branches that depend on
//! the sign of the drift α.
//!
//! Run with:
//!
//! ```not_rust
//! cargo run --example limit_convergence
//! ```

use parcyl::limits::{
    branch_ratio, limit_lhs, limit_rhs, run_case, LimitCase, RhsKind, BETA_GRID, BRANCH_FACTOR,
};

fn main() -> Result<(), parcyl::Error> {
    // A finite case: every factor of the LHS diverges as β → 0 (the Γ
    // factor alone is astronomical), yet the product tends to a plain
    // exponential in the parameters.
    let case = LimitCase::entry(1, 1.0, 1.0, 0.7, 0.3)?;
    println!("case: two-factor entry 1, s = 1, α = 1, x = 0.7, y = 0.3");
    for &beta in BETA_GRID.iter() {
        println!("  β = {beta:<5} LHS = {:.12}", limit_lhs(&case, beta)?);
    }
    let record = run_case(&case, &BETA_GRID)?;
    println!("  extrapolated to β = 0: {:.12}", record.extrapolated);
    if let RhsKind::Finite(rhs) = record.rhs {
        println!("  closed-form limit:     {rhs:.12}");
    }
    println!("  residual = {:.2e}, low confidence = {}", record.residual, record.low_confidence);

    // Single-factor entries change character with the sign of α: finite
    // only at α = 0. The divergence/collapse is measured as a magnitude
    // ratio against the α = 0 closed form.
    println!("\nsingle-factor entry 4 at s = 1, x = 0.5, β = 0.05:");
    let finite = LimitCase::entry(4, 1.0, 0.0, 0.5, 0.0)?;
    let finite_record = run_case(&finite, &BETA_GRID)?;
    println!(
        "  α =  0: extrapolates to {:.10} (residual {:.1e})",
        finite_record.extrapolated, finite_record.residual
    );
    for &alpha in &[1.0, -1.0] {
        let divergent = LimitCase::entry(4, 1.0, alpha, 0.5, 0.0)?;
        let ratio = branch_ratio(&divergent, 0.05)?;
        let verdict = if alpha > 0.0 {
            format!("{:.3e} ≥ {BRANCH_FACTOR:.0e} (diverging)", ratio)
        } else {
            format!("{:.3e} ≤ {:.0e} (collapsing to zero)", ratio, 1.0 / BRANCH_FACTOR)
        };
        println!("  α = {alpha:>2}: LHS / (α = 0 limit) = {verdict}");
        assert!(matches!(
            limit_rhs(&divergent),
            RhsKind::Zero | RhsKind::Infinite
        ));
    }

    Ok(())
}
