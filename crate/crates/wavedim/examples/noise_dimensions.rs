//! Sevcik dimension separates white noise (space-filling, D near 5/3)
//! from a Brownian walk (smoother, D near 4/3) at the same sample count.
//!
//! Run with: cargo run --release --example noise_dimensions

use wavedim::{
    brownian_walk, gaussian_white, sevcik_dimension_form, RngSeed, SevcikForm, Waveform,
};

fn main() -> wavedim::Result<()> {
    let n = 10_000;
    let trials = 30;
    let mut white = Vec::with_capacity(trials);
    let mut brown = Vec::with_capacity(trials);
    for t in 0..trials as u64 {
        let noise = gaussian_white(n, 0.0, 1.0, RngSeed(1000 + t));
        let walk = brownian_walk(&noise);
        let dw = sevcik_dimension_form(&Waveform::from_series(noise)?, SevcikForm::BallCount)?;
        let db = sevcik_dimension_form(&Waveform::from_series(walk)?, SevcikForm::BallCount)?;
        white.push(dw.value);
        brown.push(db.value);
    }
    let mean = |v: &[f64]| v.iter().sum::<f64>() / v.len() as f64;
    println!("n = {n}, {trials} seeds");
    println!("white noise   mean D_S = {:.4}", mean(&white));
    println!("brownian walk mean D_S = {:.4}", mean(&brown));

    println!("\nwhite-noise trend with sample count (seed 7):");
    for exp in 3..=6u32 {
        let n = 10usize.pow(exp);
        let noise = gaussian_white(n, 0.0, 1.0, RngSeed(7));
        let d = sevcik_dimension_form(&Waveform::from_series(noise)?, SevcikForm::BallCount)?;
        println!("  n = 10^{exp}: D_S = {:.4}", d.value);
    }
    Ok(())
}
