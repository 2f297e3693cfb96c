//! Hann-windowed power spectra: a sine concentrates in one bin, white
//! noise has a flat log-log slope near 0, and a Brownian walk falls off
//! near 1/f^2 (slope -2).
//!
//! Run with: cargo run --release --example spectrum

use wavedim::{
    brownian_walk, gaussian_white, power_spectrum, sine_wave, spectral_slope, RngSeed,
};

fn main() -> wavedim::Result<()> {
    let n = 1 << 14;

    let sine = sine_wave(n, (n / 32) as f64);
    let s = power_spectrum(sine.ys())?;
    let peak = (1..s.power.len())
        .max_by(|&a, &b| s.power[a].total_cmp(&s.power[b]))
        .unwrap();
    println!(
        "sine, period {}: peak at bin {} (freq {:.6} cycles/sample, amplitude {:.3})",
        n / 32,
        peak,
        s.freqs[peak],
        s.amplitude(peak)
    );

    let white = gaussian_white(n, 0.0, 1.0, RngSeed(5));
    let walk = brownian_walk(&gaussian_white(n + 1, 0.0, 1.0, RngSeed(5)));
    for (name, series) in [("white noise", &white), ("brownian walk", &walk)] {
        let s = power_spectrum(series)?;
        let slope = spectral_slope(&s)?;
        println!(
            "{:<14} log-log slope = {:>7.3}   (r^2 = {:.4}, floored bins = {})",
            name, slope.fit.slope, slope.fit.r_squared, slope.floored
        );
    }
    Ok(())
}
