//! Monte Carlo validation suite: each experiment reproduces a desk-scale
//! quantitative claim and reports its statistics against declared bands.
//! Everything is driven by one master seed, so a re-run is reproducible
//! check for check.

use std::path::Path;
use std::time::Instant;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha12Rng;

use crate::analysis::{power_spectrum, spectral_slope};
use crate::error::Result;
use crate::estimators::{
    default_higuchi_k, higuchi_dimension, hurst_exponent, katz_dimension,
    rescaled_range_by_scale, sevcik_dimension, sevcik_dimension_form, sevcik_on_koch, vp_compare,
    HiguchiConfig, HurstConfig, SevcikForm,
};
use crate::generators::{
    brownian_walk, gaussian_white, koch_curve, sine_wave, uniform_digits, RngSeed,
};
use crate::waveform::{cumsum, diff, KahanSum, Waveform};

/// One named statistic checked against a closed band [low, high].
#[derive(Debug, Clone)]
pub struct Check {
    pub statistic: String,
    pub value: f64,
    pub low: f64,
    pub high: f64,
    pub pass: bool,
}

impl Check {
    fn band(statistic: &str, value: f64, low: f64, high: f64) -> Self {
        Self {
            statistic: statistic.to_string(),
            value,
            low,
            high,
            pass: low <= value && value <= high,
        }
    }

    fn flag(statistic: &str, pass: bool) -> Self {
        Self::band(statistic, if pass { 1.0 } else { 0.0 }, 1.0, 1.0)
    }
}

#[derive(Debug, Clone)]
pub struct ExperimentReport {
    pub name: String,
    pub trials: usize,
    pub checks: Vec<Check>,
    pub runtime_s: f64,
}

impl ExperimentReport {
    pub fn pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

/// Suite sizes; `quick` trims trial counts and series lengths so the
/// whole run stays under a few seconds.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SuiteSize {
    Quick,
    Full,
}

fn mean(v: &[f64]) -> f64 {
    v.iter().sum::<f64>() / v.len() as f64
}

/// Mean finite-N (ball-count form) D_S of white and Brownian noise at
/// n = 10^4, plus the increasing-dimension trend with n.
pub fn run_white_brown_ds(trials: usize, seed: RngSeed, size: SuiteSize) -> Result<ExperimentReport> {
    let start = Instant::now();
    let mut white = Vec::with_capacity(trials);
    let mut brown = Vec::with_capacity(trials);
    for t in 0..trials as u64 {
        let g = gaussian_white(10_000, 0.0, 1.0, RngSeed(seed.0 ^ t));
        let w = Waveform::from_series(g.clone())?;
        white.push(sevcik_dimension_form(&w, SevcikForm::BallCount)?.value);
        let b = Waveform::from_series(brownian_walk(&g))?;
        brown.push(sevcik_dimension_form(&b, SevcikForm::BallCount)?.value);
    }
    let mut checks = vec![
        Check::band("mean_ds_white_1e4", mean(&white), 1.63, 1.69),
        Check::band("mean_ds_brownian_1e4", mean(&brown), 1.29, 1.36),
    ];
    let sizes: &[usize] = match size {
        SuiteSize::Quick => &[1_000, 10_000, 100_000],
        SuiteSize::Full => &[1_000, 10_000, 100_000, 1_000_000],
    };
    let mut trend = |make: &dyn Fn(&[f64]) -> Vec<f64>, label: &str| -> Result<()> {
        let mut prev = f64::NEG_INFINITY;
        let mut increasing = true;
        for &n in sizes {
            let g = gaussian_white(n, 0.0, 1.0, RngSeed(seed.0.wrapping_add(n as u64)));
            let w = Waveform::from_series(make(&g))?;
            let d = sevcik_dimension_form(&w, SevcikForm::BallCount)?.value;
            increasing &= d > prev;
            prev = d;
        }
        checks.push(Check::flag(label, increasing));
        Ok(())
    };
    trend(&|g| g.to_vec(), "ds_white_increasing_with_n")?;
    trend(&|g| brownian_walk(g), "ds_brownian_increasing_with_n")?;
    Ok(ExperimentReport {
        name: "white_brown_ds".into(),
        trials,
        checks,
        runtime_s: start.elapsed().as_secs_f64(),
    })
}

/// The Katz pitfall: D_K drifts toward 1 as N grows even though the
/// signal's roughness is unchanged, while d/L itself stabilizes.
pub fn run_katz_refutation(seed: RngSeed) -> Result<ExperimentReport> {
    let start = Instant::now();
    let digits: Vec<f64> = uniform_digits(100_000, seed).iter().map(|&d| d as f64).collect();
    let mut checks = Vec::new();

    let mut prev = f64::INFINITY;
    let mut decreasing = true;
    for &n in &[100usize, 1_000, 10_000, 100_000] {
        let w = Waveform::from_series(digits[..n].to_vec())?;
        let dk = katz_dimension(&w)?.value;
        checks.push(Check::band(&format!("dk_uniform_n{n}"), dk, 1.0, prev));
        decreasing &= dk < prev;
        prev = dk;
    }
    checks.push(Check::flag("dk_decreasing_with_n", decreasing));

    let mut line_exact = true;
    for &n in &[100usize, 1_000, 10_000] {
        let ys: Vec<f64> = (0..n).map(|i| 2.0 * i as f64).collect();
        line_exact &= katz_dimension(&Waveform::from_series(ys)?)?.value == 1.0;
    }
    checks.push(Check::flag("dk_straight_line_exact_one", line_exact));

    // d/L sample path on growing prefixes: relative fluctuation past
    // N = 50. The abscissa dominates the extent, so d and L both grow
    // linearly and the ratio flattens out.
    let mut ratios = Vec::new();
    let mut length = KahanSum::default();
    let mut d2_max = 0f64;
    for i in 1..10_000usize {
        length.add(1f64.hypot(digits[i] - digits[i - 1]));
        let d2 = (i as f64) * (i as f64) + (digits[i] - digits[0]) * (digits[i] - digits[0]);
        d2_max = d2_max.max(d2);
        let n = i + 1;
        if n >= 50 {
            ratios.push(d2_max.sqrt() / length.value());
        }
    }
    // Relative fluctuation as the coefficient of variation of the
    // stabilized sample path.
    let m = mean(&ratios);
    let var = ratios.iter().map(|r| (r - m) * (r - m)).sum::<f64>() / ratios.len() as f64;
    checks.push(Check::band("d_over_l_rel_fluctuation", var.sqrt() / m, 0.0, 0.05));

    Ok(ExperimentReport {
        name: "katz_refutation".into(),
        trials: 1,
        checks,
        runtime_s: start.elapsed().as_secs_f64(),
    })
}

/// Closed-form Koch dimensions approach ln 4 / ln 3 monotonically, and
/// the point-set estimator agrees with the closed form.
pub fn run_koch_convergence(max_stage: u32) -> Result<ExperimentReport> {
    let start = Instant::now();
    let target = 4f64.ln() / 3f64.ln();
    let mut checks = Vec::new();
    let mut prev_err = f64::INFINITY;
    let mut shrinking = true;
    let mut last = f64::NAN;
    for stage in 0..=max_stage {
        last = sevcik_on_koch(stage)?.value;
        let err = (last - target).abs();
        shrinking &= err < prev_err;
        prev_err = err;
    }
    checks.push(Check::flag("error_strictly_decreasing", shrinking));
    checks.push(Check::band(
        &format!("ds_stage{max_stage}"),
        last,
        target - 0.02,
        target + 0.02,
    ));
    checks.push(Check::band("ds_stage0", sevcik_on_koch(0)?.value, 1.0, 1.0));
    let curve = koch_curve(max_stage.min(8))?;
    let point_set = sevcik_dimension(&curve)?.value;
    let closed = sevcik_on_koch(max_stage.min(8))?.value;
    checks.push(Check::band(
        "point_set_vs_closed_form",
        (point_set - closed).abs(),
        0.0,
        0.01,
    ));
    Ok(ExperimentReport {
        name: "koch_convergence".into(),
        trials: 1,
        checks,
        runtime_s: start.elapsed().as_secs_f64(),
    })
}

/// D_S of a uniform digit stream is indistinguishable from D_S of the
/// same digits shuffled (Vysochanskij-Petunin bound at alpha = 0.05).
pub fn run_digit_comparison(
    n: usize,
    seed: RngSeed,
    digits_file: Option<&Path>,
) -> Result<ExperimentReport> {
    let start = Instant::now();
    let digits: Vec<u8> = match digits_file {
        Some(path) => crate::io::read_digits(path)?,
        None => uniform_digits(n, seed),
    };
    let series: Vec<f64> = digits.iter().map(|&d| d as f64).collect();
    let mut shuffled = series.clone();
    shuffled.shuffle(&mut ChaCha12Rng::seed_from_u64(seed.0 ^ 0x9e37_79b9_7f4a_7c15));
    let a = sevcik_dimension(&Waveform::from_series(series)?)?;
    let b = sevcik_dimension(&Waveform::from_series(shuffled)?)?;
    let cmp = vp_compare(&a, &b, 0.05)?;
    let self_cmp = vp_compare(&a, &a, 0.05)?;
    let checks = vec![
        Check::flag("shuffle_not_significant", !cmp.significant),
        Check::band("identical_input_lambda", self_cmp.lambda, 0.0, 0.0),
        Check::band("p_bound", cmp.p_bound, 0.05, 1.0),
    ];
    Ok(ExperimentReport {
        name: "digit_comparison".into(),
        trials: 1,
        checks,
        runtime_s: start.elapsed().as_secs_f64(),
    })
}

/// Spectral shapes: sine peak concentration, flat white spectrum, 1/f^2
/// Brownian spectrum, and the difference/sum reconstruction identity.
pub fn run_spectral_suite(n: usize, seed: RngSeed) -> Result<ExperimentReport> {
    let start = Instant::now();
    let mut checks = Vec::new();

    let sine = sine_wave(8192, 256.0);
    let s = power_spectrum(sine.ys())?;
    let total: f64 = s.power[1..].iter().sum();
    let near: f64 = s.power[31..=33].iter().sum();
    checks.push(Check::band("sine_peak_concentration", near / total, 0.95, 1.0));

    let g = gaussian_white(n, 0.0, 1.0, seed);
    let white = spectral_slope(&power_spectrum(&g)?)?;
    checks.push(Check::band("white_slope", white.fit.slope, -0.2, 0.2));
    let walk = brownian_walk(&g);
    let brown = spectral_slope(&power_spectrum(&walk)?)?;
    checks.push(Check::band("brownian_slope", brown.fit.slope, -2.3, -1.7));

    // Reconstruction: the running sum of the first differences is the
    // walk re-based at its first sample, bit for bit; the walk starts
    // at zero so the spectra agree exactly too.
    let rebuilt = cumsum(&diff(&walk));
    let identical = rebuilt
        .iter()
        .zip(&walk)
        .all(|(r, w)| (r - (w - walk[0])).abs() == 0.0);
    checks.push(Check::flag("cumsum_diff_reconstruction", identical));
    let sa = power_spectrum(&walk)?;
    let sb = power_spectrum(&rebuilt)?;
    let spectra_match = sa
        .power
        .iter()
        .zip(&sb.power)
        .all(|(a, b)| (a - b).abs() <= 1e-9 * a.abs().max(1.0));
    checks.push(Check::flag("reconstruction_spectrum_match", spectra_match));

    // Parseval: full-FFT energy (DC + Nyquist + twice the interior)
    // equals the windowed time-domain energy.
    let m = sa.fft_len;
    let windowed: f64 = walk[..m]
        .iter()
        .enumerate()
        .map(|(i, &y)| {
            let w = 0.5 * (1.0 - (std::f64::consts::TAU * i as f64 / (m - 1) as f64).cos());
            (y * w) * (y * w)
        })
        .sum();
    let spectral =
        (sa.power[0] + sa.power[m / 2] + 2.0 * sa.power[1..m / 2].iter().sum::<f64>()) / m as f64;
    checks.push(Check::band(
        "parseval_rel_err",
        (spectral - windowed).abs() / windowed,
        0.0,
        1e-6,
    ));

    Ok(ExperimentReport {
        name: "spectral_suite".into(),
        trials: 1,
        checks,
        runtime_s: start.elapsed().as_secs_f64(),
    })
}

/// Rescaled-range behaviour of coin-flip-like noise: H near 1/2 and the
/// per-scale constant <R/sigma>/sqrt(n) inside [1.0, 1.5].
pub fn run_hurst_suite(n: usize, trials: usize, seed: RngSeed) -> Result<ExperimentReport> {
    let start = Instant::now();
    let cfg = HurstConfig::default();
    let mut hs = Vec::with_capacity(trials);
    let mut per_scale: Vec<(usize, Vec<f64>)> = Vec::new();
    for t in 0..trials as u64 {
        let g = gaussian_white(n, 0.0, 1.0, RngSeed(seed.0 ^ (t << 32)));
        let (est, _) = hurst_exponent(&g, &cfg)?;
        hs.push(est.value);
        for (scale, rs) in rescaled_range_by_scale(&g, &cfg)? {
            match per_scale.iter_mut().find(|(s, _)| *s == scale) {
                Some((_, v)) => v.push(rs),
                None => per_scale.push((scale, vec![rs])),
            }
        }
    }
    let mut checks = vec![Check::band("mean_h_white", mean(&hs), 0.42, 0.58)];
    for (scale, values) in &per_scale {
        let c = mean(values) / (*scale as f64).sqrt();
        checks.push(Check::band(&format!("rs_over_sqrt_n_scale{scale}"), c, 1.0, 1.5));
    }
    let alternating: Vec<f64> = (0..n).map(|i| if i % 2 == 0 { 1.0 } else { -1.0 }).collect();
    let (alt, _) = hurst_exponent(&alternating, &cfg)?;
    checks.push(Check::band("alternating_h", alt.value, 0.0, 0.0));
    Ok(ExperimentReport {
        name: "hurst_suite".into(),
        trials,
        checks,
        runtime_s: start.elapsed().as_secs_f64(),
    })
}

/// Higuchi bands on the reference signals (companion to the harness's
/// Sevcik experiments; same exit-gate bands as the test suite).
pub fn run_higuchi_suite(seed: RngSeed, size: SuiteSize) -> Result<ExperimentReport> {
    let start = Instant::now();
    let n = match size {
        SuiteSize::Quick => 1 << 14,
        SuiteSize::Full => 1 << 17,
    };
    let mut checks = Vec::new();

    let ramp: Vec<f64> = (0..4096).map(|i| i as f64).collect();
    let cfg = HiguchiConfig::new(default_higuchi_k(4096));
    let (est, fit) = higuchi_dimension(&ramp, &cfg)?;
    checks.push(Check::band("ramp_dimension", est.value, 1.0 - 1e-9, 1.0 + 1e-9));
    checks.push(Check::band("ramp_r2", fit.r_squared, 1.0 - 1e-9, 1.0));

    let g = gaussian_white(n + 1000, 0.0, 1.0, seed);
    let cfg = HiguchiConfig::new(default_higuchi_k(n));
    let (white, _) = higuchi_dimension(&g[..n], &cfg)?;
    checks.push(Check::band("white_dimension", white.value, 1.9, 2.05));

    // Brownian validation series: y_i is the running sum of the first
    // 1000 + i Gaussian increments.
    let all = brownian_walk(&g);
    let brown_series: Vec<f64> = all[1000..1000 + n].to_vec();
    let (brown, _) = higuchi_dimension(&brown_series, &cfg)?;
    checks.push(Check::band("brownian_dimension", brown.value, 1.4, 1.6));

    Ok(ExperimentReport {
        name: "higuchi_suite".into(),
        trials: 1,
        checks,
        runtime_s: start.elapsed().as_secs_f64(),
    })
}

/// Run every experiment with sizes appropriate to `size`, all derived
/// from one master seed.
pub fn run_all(
    size: SuiteSize,
    seed: RngSeed,
    digits_file: Option<&Path>,
) -> Result<Vec<ExperimentReport>> {
    let (trials, digit_n, hurst_trials) = match size {
        SuiteSize::Quick => (10, 100_000, 20),
        SuiteSize::Full => (30, 1_000_000, 100),
    };
    Ok(vec![
        run_koch_convergence(8)?,
        run_white_brown_ds(trials, seed, size)?,
        run_katz_refutation(seed)?,
        run_higuchi_suite(seed, size)?,
        run_hurst_suite(4096, hurst_trials, seed)?,
        run_spectral_suite(1 << 14, seed)?,
        run_digit_comparison(digit_n, seed, digits_file)?,
    ])
}

/// report CSV: name,statistic,value,low,high,pass
pub fn write_report_csv(path: &Path, reports: &[ExperimentReport]) -> Result<()> {
    use std::io::Write;
    let mut out = std::io::BufWriter::new(std::fs::File::create(path)?);
    writeln!(out, "name,statistic,value,low,high,pass")?;
    for r in reports {
        for c in &r.checks {
            writeln!(
                out,
                "{},{},{},{},{},{}",
                r.name, c.statistic, c.value, c.low, c.high, c.pass
            )?;
        }
    }
    Ok(())
}
