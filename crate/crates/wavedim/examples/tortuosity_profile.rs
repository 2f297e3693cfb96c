//! Sliding-window tortuosity Q = D_S - 1. A signal that switches from a
//! slow sine to white noise halfway through shows a clear step in its Q
//! profile, localizing the regime change.
//!
//! Run with: cargo run --release --example tortuosity_profile

use wavedim::{gaussian_white, q_compare, sine_wave, sliding_q, RngSeed};

fn main() -> wavedim::Result<()> {
    let half = 4_000;
    let mut series = sine_wave(half, 500.0).ys().to_vec();
    series.extend(gaussian_white(half, 0.0, 1.0, RngSeed(21)));

    let window = 500;
    let profile = sliding_q(&series, window)?;
    println!("window = {window}, {} centers", profile.centers.len());

    // Summarize Q over coarse blocks of centers.
    let block = profile.centers.len() / 8;
    for b in 0..8 {
        let qs: Vec<f64> = profile.q[b * block..(b + 1) * block]
            .iter()
            .filter_map(|q| *q)
            .collect();
        let mean = qs.iter().sum::<f64>() / qs.len() as f64;
        println!(
            "centers {:>5}..{:>5}: mean Q = {:.4}",
            profile.centers[b * block],
            profile.centers[(b + 1) * block - 1],
            mean
        );
    }

    // Two independent noise records have Q profiles that agree on average
    // but not point by point.
    let a = sliding_q(&gaussian_white(half, 0.0, 1.0, RngSeed(1)), window)?;
    let b = sliding_q(&gaussian_white(half, 0.0, 1.0, RngSeed(2)), window)?;
    let cmp = q_compare(&a, &b)?;
    println!(
        "\nindependent noise profiles: identity r^2 = {:.4} over {} shared centers",
        cmp.identity_r_squared,
        cmp.pairs.len()
    );
    let same = q_compare(&a, &a)?;
    println!("profile against itself:     identity r^2 = {:.4}", same.identity_r_squared);
    Ok(())
}
