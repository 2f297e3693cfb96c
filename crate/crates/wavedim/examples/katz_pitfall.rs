//! The Katz estimator depends on the plot extent, not just the wiggliness:
//! the same noise gets a smaller "dimension" as the record grows, and a
//! perfectly straight line is the only shape with a stable answer (exactly 1).
//!
//! Run with: cargo run --release --example katz_pitfall

use wavedim::{katz_dimension, uniform_digits, RngSeed, Waveform};

fn main() -> wavedim::Result<()> {
    let digits: Vec<f64> = uniform_digits(100_000, RngSeed(11))
        .into_iter()
        .map(f64::from)
        .collect();

    println!("same digit noise, growing record:");
    for &n in &[100usize, 1_000, 10_000, 100_000] {
        let w = Waveform::from_series(digits[..n].to_vec())?;
        let d = katz_dimension(&w)?;
        println!(
            "  n = {:>6}: D_K = {:.4}{}",
            n,
            d.value,
            if d.approximate { " (approx d)" } else { "" }
        );
    }

    println!("\nstraight lines of any length or slope:");
    for &(n, slope) in &[(100usize, 0.5), (10_000, 3.0), (100_000, -2.0)] {
        let ys: Vec<f64> = (0..n).map(|i| slope * i as f64).collect();
        let d = katz_dimension(&Waveform::from_series(ys)?)?;
        println!("  n = {n:>6}, slope {slope:>4}: D_K = {}", d.value);
    }
    Ok(())
}
