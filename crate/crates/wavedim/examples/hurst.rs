//! Hurst rescaled-range analysis of white noise: H near 1/2, and the
//! per-scale <R/sigma> values track the sqrt(pi/2 n) law. An alternating
//! series is maximally anti-persistent with H = 0.
//!
//! Run with: cargo run --release --example hurst

use wavedim::estimators::rescaled_range_by_scale;
use wavedim::{gaussian_white, hurst_exponent, HurstConfig, RngSeed};

fn main() -> wavedim::Result<()> {
    let n = 1 << 14;
    let cfg = HurstConfig::default();
    let noise = gaussian_white(n, 0.0, 1.0, RngSeed(3));

    let (h, fit) = hurst_exponent(&noise, &cfg)?;
    println!("white noise, n = {n}: H = {:.4} (fit r^2 = {:.6})", h.value, fit.r_squared);

    println!("\nper-scale <R/sigma> against sqrt(pi/2 n):");
    for (seg, rs) in rescaled_range_by_scale(&noise, &cfg)? {
        let law = (std::f64::consts::PI / 2.0 * seg as f64).sqrt();
        println!("  segment {:>6}: <R/s> = {:>8.3}   sqrt(pi n/2) = {:>8.3}", seg, rs, law);
    }

    let alternating: Vec<f64> = (0..n).map(|i| if i % 2 == 0 { 1.0 } else { -1.0 }).collect();
    let (h, _) = hurst_exponent(&alternating, &cfg)?;
    println!("\nalternating +/-1 series: H = {}", h.value);
    Ok(())
}
