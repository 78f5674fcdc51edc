//! Products of two parabolic cylinder functions as single finite integrals:
//! the table of representations, the jump correction on the x + y = 0
//! boundary, the recurrence engine for other order offsets, and the
//! special-case forms (mirror product, erfc product, Bessel K_{1/4}).
//!
//! Run with:
//!
//! ```not_rust
//! cargo run --example product_representations
//! ```

use parcyl::reps::{
    dv_dv, dv_dvm1_exp, erfc_product, evaluate, k14_rep, malyshev_same_arg, oracle_product,
    product_by_offset, EvalPoint, RepId,
};
use parcyl::special;

fn main() -> Result<(), parcyl::Error> {
    // Every table representation collapses a product of two D functions
    // into one integral over (0,1); the oracle computes the same product
    // from two independent single-function evaluations.
    let (v, x, y) = (-0.8, 1.3, 0.4);
    println!("all table representations at v = {v}, x = {x}, y = {y}:");
    for id in RepId::ALL {
        let Some(offset) = id.order_offset() else { continue };
        if !matches!(id.token(), t if t.starts_with("T2_")) {
            continue;
        }
        let rep = evaluate(id, v, x, y, 1.0)?;
        let oracle = oracle_product(id, v, x, y)?;
        println!(
            "  {:5} = D_v(x)·D_(v{offset:+})(y) = {rep:.12}   oracle diff {:.1e}",
            id.token(),
            (rep - oracle).abs()
        );
    }

    // A classical special value: D_{-1}(0)² = π/2.
    println!("\nD_-1(0)² = {:.12}  (π/2 = {:.12})", dv_dv(EvalPoint::new(-1.0, 0.0, 0.0))?.value, std::f64::consts::FRAC_PI_2);

    // On the boundary x + y = 0 some kernels pick up a discrete jump; the
    // representation subtracts it exactly once and says so.
    let inside = dv_dvm1_exp(EvalPoint::new(-0.7, 1.0, -1.0 + 1e-7))?;
    let on_boundary = dv_dvm1_exp(EvalPoint::new(-0.7, 1.0, -1.0))?;
    println!("\nboundary jump of the exponential-kernel form at v = -0.7, x = 1:");
    println!("  just inside   (y = -1+1e-7): {:.12}  corrected: {}", inside.value, inside.correction_applied);
    println!("  on boundary   (y = -1):      {:.12}  corrected: {}", on_boundary.value, on_boundary.correction_applied);

    // The recurrence engine reaches any offset in [-6, 6] from the two base
    // kernels, here D_v(x)·D_{v-3}(y) and D_v(x)·D_{v+2}(y).
    let p = EvalPoint::new(-0.5, 1.0, 0.5);
    for k in [-3i32, 2] {
        let product = product_by_offset(p, k)?;
        let direct = special::pcf_oracle(-0.5, 1.0)?.value
            * special::pcf_any_order(-0.5 + k as f64, 0.5)?.value;
        println!(
            "\noffset {k:+}: D_-0.5(1)·D_{}(0.5) = {product:.12}  (direct {direct:.12})",
            -0.5 + k as f64
        );
    }

    // Same-argument mirror product, valid for every real x.
    let mirror = malyshev_same_arg(-0.5, 1.7)?;
    println!("\nmirror product D_-0.5(1.7)·D_-0.5(-1.7) = {mirror:.12}");

    // Two elementary-function corollaries of the same machinery.
    println!(
        "\nerfc(1)·erfc(0.5)  rep = {:.12}  direct = {:.12}",
        erfc_product(1.0, 0.5)?,
        special::erfc(1.0) * special::erfc(0.5)
    );
    println!(
        "K_¼(1)             rep = {:.12}  oracle = {:.12}",
        k14_rep(1.0)?,
        special::bessel_k_quarter(1.0)?
    );

    Ok(())
}
