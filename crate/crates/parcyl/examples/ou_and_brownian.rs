//! Transition-law transforms of a mean-reverting diffusion and of drifted
//! Brownian motion. The mean-reverting density/distribution transforms are
//! cylinder-function closed forms; their time-domain sides are elementary
//! Gaussians, so each transform is verified by numerical forward transform.
//!
//! Run with:
//!
//! ```not_rust
//! cargo run --example ou_and_brownian
//! ```

use parcyl::laplace::{
    bm_density_time, bm_density_transform, forward_laplace, ou_density_time, ou_density_transform,
    ou_distribution_time, ou_distribution_transform, OrnsteinUhlenbeck,
};

fn main() -> Result<(), parcyl::Error> {
    // dW = (α − βW)dt + σ dB, started at w0 = 0.
    let ou = OrnsteinUhlenbeck::new(0.5, 1.0, 1.2)?;
    let w0 = 0.0;

    println!("mean-reverting transition density, transform vs forward transform:");
    for &(w, s) in &[(1.0, 1.0), (1.0, 2.0), (-0.7, 1.5)] {
        let closed = ou_density_transform(w, s, w0, &ou)?;
        let forward = forward_laplace(|t| ou_density_time(w, t, w0, &ou), s, 1e-9)?;
        println!(
            "  w = {w:>4}, s = {s}:  closed = {closed:.12}  forward = {:.12}  diff = {:.1e}",
            forward.value,
            (closed - forward.value).abs()
        );
    }

    // The closed form switches branch at w = w0; the join is continuous.
    let above = ou_density_transform(w0 + 1e-9, 1.0, w0, &ou)?;
    let below = ou_density_transform(w0 - 1e-9, 1.0, w0, &ou)?;
    println!("\nbranch join at the start state: |above − below| = {:.1e}", (above - below).abs());

    println!("\nmean-reverting transition distribution P(W_t ≤ w1):");
    for &s in &[1.0, 2.0] {
        let closed = ou_distribution_transform(0.8, s, 0.2, &ou)?;
        let forward = forward_laplace(|t| ou_distribution_time(0.8, t, 0.2, &ou), s, 1e-9)?;
        println!(
            "  s = {s}:  closed = {closed:.12}  forward = {:.12}  diff = {:.1e}",
            forward.value,
            (closed - forward.value).abs()
        );
    }

    // Brownian motion with drift is the zero-rate sibling: same structure,
    // elementary transform, no cylinder functions required.
    let (drift, vol) = (1.0, 1.0);
    println!("\ndrifted Brownian density transform (α = {drift}, σ = {vol}):");
    for &(w, s) in &[(0.5, 2.0), (-0.5, 2.0)] {
        let closed = bm_density_transform(w, s, 0.0, drift, vol)?;
        let forward = forward_laplace(|t| bm_density_time(w, t, 0.0, drift, vol), s, 1e-9)?;
        println!(
            "  w = {w:>4}:  closed = {closed:.12}  forward = {:.12}  diff = {:.1e}",
            forward.value,
            (closed - forward.value).abs()
        );
    }

    Ok(())
}
