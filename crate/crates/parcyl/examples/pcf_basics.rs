//! Evaluating the parabolic cylinder function D_v(z) along its independent
//! routes: the classical integral, the power-series route, closed forms at
//! z = 0, the order recurrence, and the log-space form that survives
//! arguments whose plain value would overflow.
//!
//! Run with:
//!
//! ```not_rust
//! cargo run --example pcf_basics
//! ```

use parcyl::special::{pcf_any_order, pcf_at_zero, pcf_kummer, pcf_oracle};

fn main() -> Result<(), parcyl::Error> {
    // Two fully independent routes to the same value. The integral route
    // covers every v < 0; the series route trades range for speed and is
    // honest about its cancellation limit.
    println!("two routes to D_v(z):");
    for &(v, z) in &[(-0.5, 1.0), (-1.7, -2.0), (-3.0, 0.3)] {
        let integral = pcf_oracle(v, z)?.value;
        let series = pcf_kummer(v, z)?;
        println!(
            "  D_{v}({z})  integral = {integral:.12}  series = {series:.12}  diff = {:.1e}",
            (integral - series).abs()
        );
    }

    // At z = 0 the function collapses to a Γ quotient.
    println!("\nclosed forms at z = 0:");
    for &v in &[-0.5, -1.0, -2.0] {
        println!(
            "  D_{v}(0) = {:.12}  (oracle {:.12})",
            pcf_at_zero(v)?,
            pcf_oracle(v, 0.0)?.value
        );
    }
    // D_{-1}(0) = √(π/2) exactly.
    println!(
        "  D_-1(0) − √(π/2) = {:.1e}",
        (pcf_at_zero(-1.0)? - (std::f64::consts::PI / 2.0).sqrt()).abs()
    );

    // The three-term order recurrence links neighboring orders; positive
    // orders are reached by lifting from the negative base strip.
    let (v, z) = (-1.5, 0.7);
    let up = pcf_any_order(v + 1.0, z)?.value;
    let mid = pcf_oracle(v, z)?.value;
    let down = pcf_oracle(v - 1.0, z)?.value;
    println!("\norder recurrence D_{{v+1}} = z·D_v − v·D_{{v-1}} at (v, z) = ({v}, {z}):");
    println!("  lhs = {up:.14}");
    println!("  rhs = {:.14}", z * mid - v * down);

    // Far in the left tail the value overflows f64, but the log form stays
    // finite and usable.
    let big = pcf_oracle(-0.5, -60.0)?;
    println!("\nD_-0.5(-60): value = {} (overflowed)", big.value);
    println!("             log   = {:.6} (exact to quadrature tolerance)", big.log_value);

    Ok(())
}
