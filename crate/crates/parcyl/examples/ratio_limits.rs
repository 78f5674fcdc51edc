//! The ratio of two neighboring-order cylinder functions, scaled by √β,
//! tends to ( √(α² + 4s) − α )/2 as β → 0. Two parameter choices land on
//! memorable constants: the golden-ratio conjugate (√5 − 1)/2, and exactly
//! 2.
//!
//! Run with:
//!
//! ```not_rust
//! cargo run --example ratio_limits
//! ```

use parcyl::limits::{limit_lhs, limit_rhs, run_case, LimitCase, RhsKind, BETA_GRID};

fn main() -> Result<(), parcyl::Error> {
    let golden = LimitCase::ratio_golden();
    println!("s = 1, α = 1, x = 0: the limit is (√5 − 1)/2");
    for &beta in BETA_GRID.iter() {
        println!("  β = {beta:<5} ratio = {:.12}", limit_lhs(&golden, beta)?);
    }
    let record = run_case(&golden, &BETA_GRID)?;
    println!("  extrapolated: {:.12}", record.extrapolated);
    println!("  (√5 − 1)/2  = {:.12}", (5.0_f64.sqrt() - 1.0) / 2.0);
    println!("  residual = {:.2e}", record.residual);

    let two = LimitCase::ratio_s4();
    println!("\ns = 4, α = 0, x = 1: the limit is exactly 2");
    let record = run_case(&two, &BETA_GRID)?;
    println!("  extrapolated: {:.12}  residual = {:.2e}", record.extrapolated, record.residual);

    // The general closed form covers any admissible (s, α, x).
    let general = LimitCase::ratio_general(2.0, -0.5, 0.3)?;
    let record = run_case(&general, &BETA_GRID)?;
    let RhsKind::Finite(rhs) = limit_rhs(&general) else {
        unreachable!("ratio limits are always finite");
    };
    println!("\ns = 2, α = -0.5, x = 0.3:");
    println!("  extrapolated          = {:.12}", record.extrapolated);
    println!("  (√(α²+4s) − α)/2      = {rhs:.12}");

    Ok(())
}
