//! Are a digit stream's fluctuations distinguishable from shuffled noise?
//! Compares the Sevcik dimension of a pseudorandom digit sequence against
//! a shuffle of itself using the Vysochanskij-Petunin tail bound.
//!
//! Run with: cargo run --release --example digit_comparison

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha12Rng;
use wavedim::{sevcik_dimension, uniform_digits, vp_compare, RngSeed, Waveform};

fn main() -> wavedim::Result<()> {
    let n = 1_000_000;
    let digits: Vec<f64> = uniform_digits(n, RngSeed(77)).into_iter().map(f64::from).collect();

    let mut shuffled = digits.clone();
    shuffled.shuffle(&mut ChaCha12Rng::seed_from_u64(78));

    let d_orig = sevcik_dimension(&Waveform::from_series(digits)?)?;
    let d_shuf = sevcik_dimension(&Waveform::from_series(shuffled)?)?;

    println!("original digit stream: D_S = {:.8}", d_orig.value);
    println!("shuffled digit stream: D_S = {:.8}", d_shuf.value);

    let cmp = vp_compare(&d_orig, &d_shuf, 0.05)?;
    println!(
        "lambda = {:.4}, p bound = {:.4} -> {}",
        cmp.lambda,
        cmp.p_bound,
        if cmp.significant {
            "distinguishable at alpha = 0.05"
        } else {
            "not distinguishable at alpha = 0.05"
        }
    );
    Ok(())
}
