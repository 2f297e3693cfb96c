//! Exit-gate suite: one test per release criterion, each printing a
//! single pass/fail line (run with `--nocapture` to see them all).

use std::process::Command;

use wavedim::analysis::{power_spectrum, spectral_slope};
use wavedim::estimators::{
    default_higuchi_k, higuchi_dimension, hurst_exponent, katz_dimension, rescaled_range_by_scale,
    sevcik_dimension, sevcik_dimension_form, sevcik_on_koch, vp_compare, HiguchiConfig,
    HurstConfig, SevcikForm,
};
use wavedim::generators::{
    brownian_walk, gaussian_white, koch_curve, lorenz_trajectory, mandelbrot_escape,
    mandelbrot_grid, sine_wave, uniform_digits, LorenzParams, MandelbrotWindow, RngSeed,
};
use wavedim::waveform::{KahanSum, Waveform};

fn verdict(criterion: &str, pass: bool) {
    println!(
        "criterion {criterion}: {}",
        if pass { "PASS" } else { "FAIL" }
    );
    assert!(pass, "criterion {criterion} failed");
}

const KOCH_LIMIT: f64 = 1.26185950714;

#[test]
fn criterion_1_koch_convergence() {
    let mut prev_err = f64::INFINITY;
    let mut monotone = true;
    let mut d8 = f64::NAN;
    for stage in 0..=8 {
        d8 = sevcik_on_koch(stage).unwrap().value;
        let err = (d8 - KOCH_LIMIT).abs();
        monotone &= err < prev_err;
        prev_err = err;
    }
    let closed_ok = (d8 - KOCH_LIMIT).abs() < 0.02;
    let point_set = sevcik_dimension(&koch_curve(8).unwrap()).unwrap().value;
    let agreement = (point_set - d8).abs() < 0.01;
    verdict("1 koch-convergence", monotone && closed_ok && agreement);
}

#[test]
fn criterion_2_white_brownian_bands() {
    let trials = 30u64;
    let mut white = 0.0;
    let mut brown = 0.0;
    for seed in 0..trials {
        let g = gaussian_white(10_000, 0.0, 1.0, RngSeed(1000 + seed));
        let w = Waveform::from_series(g.clone()).unwrap();
        white += sevcik_dimension_form(&w, SevcikForm::BallCount).unwrap().value;
        let b = Waveform::from_series(brownian_walk(&g)).unwrap();
        brown += sevcik_dimension_form(&b, SevcikForm::BallCount).unwrap().value;
    }
    white /= trials as f64;
    brown /= trials as f64;
    let bands = (1.63..=1.69).contains(&white) && (1.29..=1.36).contains(&brown);

    let mut prev = f64::NEG_INFINITY;
    let mut increasing = true;
    for n in [1_000usize, 10_000, 100_000, 1_000_000] {
        let g = gaussian_white(n, 0.0, 1.0, RngSeed(7));
        let w = Waveform::from_series(g).unwrap();
        let d = sevcik_dimension_form(&w, SevcikForm::BallCount).unwrap().value;
        increasing &= d > prev;
        prev = d;
    }
    verdict("2 white-brownian-bands", bands && increasing);
}

#[test]
fn criterion_3_katz_refutation() {
    let digits: Vec<f64> = uniform_digits(100_000, RngSeed(3))
        .iter()
        .map(|&d| d as f64)
        .collect();
    let mut prev = f64::INFINITY;
    let mut decreasing = true;
    for n in [100usize, 1_000, 10_000, 100_000] {
        let w = Waveform::from_series(digits[..n].to_vec()).unwrap();
        let dk = katz_dimension(&w).unwrap().value;
        decreasing &= dk < prev;
        prev = dk;
    }

    let mut line_exact = true;
    for n in [100usize, 1_000, 10_000, 100_000] {
        let ys: Vec<f64> = (0..n).map(|i| 0.5 * i as f64).collect();
        let w = Waveform::from_series(ys).unwrap();
        line_exact &= katz_dimension(&w).unwrap().value == 1.0;
    }

    // d/L along growing prefixes, N >= 50.
    let mut length = KahanSum::default();
    let mut d2_max = 0f64;
    let mut ratios = Vec::new();
    for i in 1..10_000usize {
        length.add(1f64.hypot(digits[i] - digits[i - 1]));
        let d2 = (i as f64) * (i as f64) + (digits[i] - digits[0]) * (digits[i] - digits[0]);
        d2_max = d2_max.max(d2);
        if i + 1 >= 50 {
            ratios.push(d2_max.sqrt() / length.value());
        }
    }
    // Relative fluctuation = coefficient of variation of the path.
    let mean = ratios.iter().sum::<f64>() / ratios.len() as f64;
    let var = ratios.iter().map(|r| (r - mean) * (r - mean)).sum::<f64>() / ratios.len() as f64;
    let stabilized = var.sqrt() / mean < 0.05;
    verdict("3 katz-refutation", decreasing && line_exact && stabilized);
}

#[test]
fn criterion_4_higuchi_bands() {
    let ramp: Vec<f64> = (0..4096).map(|i| i as f64).collect();
    let cfg = HiguchiConfig::new(default_higuchi_k(4096));
    let (est, fit) = higuchi_dimension(&ramp, &cfg).unwrap();
    let exact = (est.value - 1.0).abs() < 1e-9 && (fit.r_squared - 1.0).abs() < 1e-9;

    let n = 1 << 17;
    let g = gaussian_white(n + 1000, 0.0, 1.0, RngSeed(4));
    let cfg = HiguchiConfig::new(default_higuchi_k(n));
    let (white, _) = higuchi_dimension(&g[..n], &cfg).unwrap();
    let walk = brownian_walk(&g);
    let (brown, _) = higuchi_dimension(&walk[1000..1000 + n], &cfg).unwrap();
    let bands = (1.9..=2.05).contains(&white.value) && (1.4..=1.6).contains(&brown.value);
    verdict("4 higuchi-bands", exact && bands);
}

#[test]
fn criterion_5_hurst() {
    let cfg = HurstConfig::default();
    let trials = 100u64;
    let mut h_sum = 0.0;
    let mut per_scale: Vec<(usize, f64, usize)> = Vec::new();
    for t in 0..trials {
        let g = gaussian_white(4096, 0.0, 1.0, RngSeed(t.wrapping_mul(0x9e3779b9)));
        let (est, _) = hurst_exponent(&g, &cfg).unwrap();
        h_sum += est.value;
        for (scale, rs) in rescaled_range_by_scale(&g, &cfg).unwrap() {
            match per_scale.iter_mut().find(|(s, _, _)| *s == scale) {
                Some((_, sum, n)) => {
                    *sum += rs;
                    *n += 1;
                }
                None => per_scale.push((scale, rs, 1)),
            }
        }
    }
    let h_ok = (0.42..=0.58).contains(&(h_sum / trials as f64));
    let scales_ok = per_scale.iter().all(|(scale, sum, n)| {
        let c = (sum / *n as f64) / (*scale as f64).sqrt();
        (1.0..=1.5).contains(&c)
    });
    let alternating: Vec<f64> = (0..4096).map(|i| if i % 2 == 0 { 1.0 } else { -1.0 }).collect();
    let (alt, _) = hurst_exponent(&alternating, &cfg).unwrap();
    verdict("5 hurst", h_ok && scales_ok && alt.value == 0.0);
}

#[test]
fn criterion_6_spectra() {
    let s = power_spectrum(sine_wave(8192, 256.0).ys()).unwrap();
    let total: f64 = s.power[1..].iter().sum();
    let near: f64 = s.power[31..=33].iter().sum();
    let peak_ok = near / total >= 0.95;

    let g = gaussian_white(1 << 14, 0.0, 1.0, RngSeed(6));
    let white = spectral_slope(&power_spectrum(&g).unwrap()).unwrap().fit.slope;
    let walk = brownian_walk(&g);
    let sw = power_spectrum(&walk).unwrap();
    let brown = spectral_slope(&sw).unwrap().fit.slope;
    let slopes_ok = white.abs() <= 0.2 && (brown + 2.0).abs() <= 0.3;

    let m = sw.fft_len;
    let windowed: f64 = walk[..m]
        .iter()
        .enumerate()
        .map(|(i, &y)| {
            let w = 0.5 * (1.0 - (std::f64::consts::TAU * i as f64 / (m - 1) as f64).cos());
            (y * w) * (y * w)
        })
        .sum();
    let spectral =
        (sw.power[0] + sw.power[m / 2] + 2.0 * sw.power[1..m / 2].iter().sum::<f64>()) / m as f64;
    let parseval_ok = (spectral - windowed).abs() <= 1e-6 * windowed;
    verdict("6 spectra", peak_ok && slopes_ok && parseval_ok);
}

#[test]
fn criterion_7_digit_indistinguishability() {
    use rand::seq::SliceRandom;
    use rand::SeedableRng;
    let digits = uniform_digits(1_000_000, RngSeed(77));
    let series: Vec<f64> = digits.iter().map(|&d| d as f64).collect();
    let mut shuffled = series.clone();
    shuffled.shuffle(&mut rand_chacha::ChaCha12Rng::seed_from_u64(78));
    let a = sevcik_dimension(&Waveform::from_series(series).unwrap()).unwrap();
    let b = sevcik_dimension(&Waveform::from_series(shuffled).unwrap()).unwrap();
    let cmp = vp_compare(&a, &b, 0.05).unwrap();
    verdict("7 digit-indistinguishability", !cmp.significant);
}

/// The paper-scale run: D_S of 10^9 uniform digits. Roughly a minute
/// and ~1 GiB; run with `cargo test -- --ignored`.
#[test]
#[ignore]
fn criterion_7_full_scale_digits() {
    let n: usize = 1_000_000_000;
    let digits = uniform_digits(n, RngSeed(77));
    let (mut y_min, mut y_max) = (f64::INFINITY, f64::NEG_INFINITY);
    for &d in &digits {
        y_min = y_min.min(d as f64);
        y_max = y_max.max(d as f64);
    }
    let x_max = (n - 1) as f64;
    let y_span = y_max - y_min;
    let mut length = KahanSum::default();
    for pair in digits.windows(2) {
        let dy = (pair[1] as f64 - pair[0] as f64) / y_span;
        length.add((1.0 / x_max).hypot(dy));
    }
    // Ball-count form, matching the white/brown calibration in criterion 2.
    let d_s = 1.0 + (length.value().ln() - 2f64.ln()) / (2.0 * x_max).ln();
    verdict(
        "7-full ds-1e9-digits",
        (d_s - 1.88743881).abs() <= 0.001,
    );
}

#[test]
fn criterion_8_mandelbrot_lorenz_sanity() {
    let in_set = mandelbrot_escape(0.0, 0.0, 1024, 2.0) == 1024
        && mandelbrot_escape(-1.0, 0.0, 1024, 2.0) == 1024;
    let escapes = mandelbrot_escape(1.0, 0.0, 1024, 2.0) == 3;
    let w = MandelbrotWindow {
        width: 120,
        height: 80,
        max_iter: 256,
        ..MandelbrotWindow::default()
    };
    let grid = mandelbrot_grid(&w).unwrap();
    let symmetric = (0..w.height).all(|i| grid[i] == grid[w.height - 1 - i]);

    let traj = lorenz_trajectory(&LorenzParams::default()).unwrap();
    let bounded = traj.len() == 40_000 && traj.iter().all(|s| s.iter().all(|c| c.abs() < 60.0));
    let e = 25.5f64.sqrt();
    let eq = LorenzParams {
        x0: e,
        y0: e,
        z0: 25.5,
        steps: 1000,
        ..LorenzParams::default()
    };
    let fixed = lorenz_trajectory(&eq)
        .unwrap()
        .iter()
        .all(|s| (s[0] - e).abs() < 1e-6 && (s[1] - e).abs() < 1e-6 && (s[2] - 25.5).abs() < 1e-6);
    verdict(
        "8 mandelbrot-lorenz-sanity",
        in_set && escapes && symmetric && bounded && fixed,
    );
}

#[test]
fn criterion_9_determinism() {
    let bin = env!("CARGO_BIN_EXE_wavedim");
    let dir = tempfile::tempdir().unwrap();
    let data = dir.path().join("series.csv");

    let run = |args: &[&str]| {
        let out = Command::new(bin).args(args).output().unwrap();
        assert!(out.status.success(), "{args:?}: {:?}", out);
        out.stdout
    };
    let data_s = data.to_str().unwrap();
    let mut same = true;
    let gen = ["gen", "white", "--n", "4096", "--seed", "11"];
    let first = run(&gen);
    same &= first == run(&gen);
    std::fs::write(&data, &first).unwrap();
    for args in [
        vec!["--porcelain", "dim", data_s, "--method", "sevcik"],
        vec!["--porcelain", "dim", data_s, "--method", "higuchi"],
        vec!["--porcelain", "--hex-floats", "dim", data_s, "--method", "hurst"],
        vec!["--porcelain", "window", data_s, "--window", "500"],
        vec!["--porcelain", "spectrum", data_s],
        vec!["gen", "digits", "--n", "1000", "--seed", "3"],
        vec!["gen", "lorenz", "--steps", "500"],
    ] {
        same &= run(&args) == run(&args);
    }
    verdict("9 determinism", same);
}
