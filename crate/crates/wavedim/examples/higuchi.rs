//! Higuchi's stride-length fit: near 2 for white noise, near 1.5 for a
//! Brownian walk, and exactly 1 for a ramp. Also shows the k-schedule and
//! fit quality.
//!
//! Run with: cargo run --release --example higuchi

use wavedim::{
    brownian_walk, default_higuchi_k, gaussian_white, higuchi_dimension, HiguchiConfig, RngSeed,
};

fn main() -> wavedim::Result<()> {
    let n = 1 << 15;
    let cfg = HiguchiConfig::new(default_higuchi_k(n));
    println!("n = {n}, k schedule = {:?}", cfg.k_values);

    let white = gaussian_white(n, 0.0, 1.0, RngSeed(4));
    let walk = brownian_walk(&gaussian_white(n + 1, 0.0, 1.0, RngSeed(4)));
    let ramp: Vec<f64> = (0..n).map(|i| 0.25 * i as f64).collect();

    for (name, series) in [("white noise", &white), ("brownian walk", &walk), ("ramp", &ramp)] {
        let (d, fit) = higuchi_dimension(series, &cfg)?;
        println!(
            "{:<14} D_H = {:.4}   (fit r^2 = {:.6})",
            name, d.value, fit.r_squared
        );
    }
    Ok(())
}
