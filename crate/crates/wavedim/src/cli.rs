//! Command-line front end: signal generation, dimension estimation,
//! windowed tortuosity, spectra, Mandelbrot rendering, and the
//! validation suite.
//!
//! Exit codes: 0 success, 1 usage error, 2 data/computation error.

use std::fs::File;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::analysis::{power_spectrum, q_compare, sliding_q, spectral_slope};
use crate::error::{Error, Result};
use crate::estimators::{
    default_higuchi_k, higuchi_dimension, hurst_exponent, katz_dimension, sevcik_dimension_form,
    HiguchiConfig, HurstConfig, LengthMode, SevcikForm,
};
use crate::generators::{
    brownian_walk, gaussian_white, koch_curve, lorenz_discrete_map, lorenz_trajectory,
    mandelbrot_grid, sine_wave, uniform_digits, LorenzParams, MandelbrotWindow, RngSeed,
};
use crate::harness::{run_all, write_report_csv, SuiteSize};
use crate::io::{
    write_digits, write_grid_csv, write_pgm, write_q_profile, write_series, write_spectrum,
    write_triples, write_waveform, SeriesFile,
};
use crate::waveform::LineFit;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_DATA: i32 = 2;

#[derive(Parser)]
#[command(name = "wavedim", version, about = "Fractal dimension estimation of sampled waveforms")]
struct Cli {
    /// Emit machine-readable key=value lines instead of prose.
    #[arg(long, global = true)]
    porcelain: bool,
    /// Print floating-point results as raw IEEE-754 bit patterns.
    #[arg(long, global = true)]
    hex_floats: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Generate a reference signal as CSV (stdout or --out).
    Gen {
        #[command(subcommand)]
        kind: GenKind,
    },
    /// Estimate a dimension/exponent of a CSV series or x,y waveform.
    Dim(DimArgs),
    /// Sliding-window tortuosity profile Q = D_S - 1 (CSV center,q).
    Window {
        file: PathBuf,
        #[arg(long)]
        window: usize,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Optional second file: also report the profile comparison.
        #[arg(long)]
        compare: Option<PathBuf>,
    },
    /// Hann-windowed power spectrum (CSV freq,power) plus log-log slope.
    Spectrum {
        file: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Render a Mandelbrot escape-count grid as binary PGM (P5).
    Mandelbrot(MandelbrotArgs),
    /// Run the Monte Carlo validation suite.
    Validate {
        /// Trimmed trial counts and sizes (default).
        #[arg(long, conflicts_with = "full")]
        quick: bool,
        /// Full trial counts and series lengths.
        #[arg(long)]
        full: bool,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// External decimal-digit file for the digit-comparison experiment.
        #[arg(long)]
        digits_file: Option<PathBuf>,
        /// Write the full report CSV (name,statistic,value,low,high,pass).
        #[arg(long)]
        report: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum GenKind {
    /// Gaussian white noise via the Box-Muller transform.
    White {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 0.0)]
        mean: f64,
        #[arg(long, default_value_t = 1.0)]
        variance: f64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Running sum of Gaussian white noise (a Brownian walk).
    Brownian {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 0.0)]
        mean: f64,
        #[arg(long, default_value_t = 1.0)]
        variance: f64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Uniform decimal digits 0..9.
    Digits {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// One-sided triadic Koch curve (x,y rows).
    Koch {
        #[arg(long)]
        stage: u32,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Sine wave y_i = sin(2 pi i / period).
    Sine {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        period: f64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Lorenz trajectory (x,y,z rows), RK4 integration.
    Lorenz {
        #[arg(long, default_value_t = 40_000)]
        steps: usize,
        #[arg(long, default_value_t = 3.0)]
        sigma: f64,
        #[arg(long, default_value_t = 26.5)]
        rho: f64,
        #[arg(long, default_value_t = 1.0)]
        beta: f64,
        #[arg(long, default_value_t = -1.0)]
        x0: f64,
        #[arg(long, default_value_t = 0.0)]
        y0: f64,
        #[arg(long, default_value_t = 1.0)]
        z0: f64,
        #[arg(long, default_value_t = 0.01)]
        dt: f64,
        /// Iterate the crude explicit map instead of integrating.
        #[arg(long)]
        discrete_map: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
struct DimArgs {
    file: PathBuf,
    #[arg(long, value_enum, default_value_t = MethodArg::Sevcik)]
    method: MethodArg,
    /// Sevcik finite-N form.
    #[arg(long, value_enum, default_value_t = FormArg::Simplified)]
    form: FormArg,
    /// Largest Higuchi stride (default: schedule capped at N/4).
    #[arg(long)]
    k_max: Option<usize>,
    #[arg(long, value_enum, default_value_t = LengthModeArg::AbsoluteDifference)]
    length_mode: LengthModeArg,
    /// Smallest dyadic Hurst segment.
    #[arg(long, default_value_t = 32)]
    min_segment: usize,
}

#[derive(Args)]
struct MandelbrotArgs {
    #[arg(long, default_value_t = -3.0)]
    x_min: f64,
    #[arg(long, default_value_t = 3.0)]
    x_max: f64,
    #[arg(long, default_value_t = -2.0)]
    y_min: f64,
    #[arg(long, default_value_t = 2.0)]
    y_max: f64,
    #[arg(long, default_value_t = 600)]
    width: usize,
    #[arg(long, default_value_t = 400)]
    height: usize,
    #[arg(long, default_value_t = 1024)]
    max_iter: u32,
    #[arg(long, default_value_t = 2.0)]
    escape_radius: f64,
    /// Emit raw iteration counts as CSV instead of a PGM image.
    #[arg(long)]
    raw: bool,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Sevcik,
    Katz,
    Higuchi,
    Hurst,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormArg {
    Simplified,
    BallCount,
}

#[derive(Clone, Copy, ValueEnum)]
enum LengthModeArg {
    AbsoluteDifference,
    EuclideanChord,
}

/// Printer that applies the output conventions: key=value porcelain,
/// 9-significant-digit decimals, optional raw-bit floats.
struct Printer {
    porcelain: bool,
    hex_floats: bool,
}

impl Printer {
    fn float(&self, v: f64) -> String {
        if self.hex_floats {
            format!("0x{:016x}", v.to_bits())
        } else {
            format!("{v:.8e}")
        }
    }

    fn kv(&self, key: &str, value: &str) {
        if self.porcelain {
            println!("{key}={value}");
        } else {
            println!("{key}: {value}");
        }
    }

    fn kv_float(&self, key: &str, v: f64) {
        self.kv(key, &self.float(v));
    }

    fn fit(&self, fit: &LineFit) {
        self.kv_float("slope", fit.slope);
        self.kv_float("intercept", fit.intercept);
        self.kv_float("r_squared", fit.r_squared);
    }
}

fn out_writer(out: Option<&Path>) -> Result<Box<dyn Write>> {
    Ok(match out {
        Some(path) => Box::new(File::create(path)?),
        None => Box::new(std::io::stdout().lock()),
    })
}

/// Parse and run; returns the process exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    let printer = Printer {
        porcelain: cli.porcelain,
        hex_floats: cli.hex_floats,
    };
    match dispatch(cli.cmd, &printer) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::InvalidParameter(_) => EXIT_USAGE,
                _ => EXIT_DATA,
            }
        }
    }
}

fn dispatch(cmd: Cmd, p: &Printer) -> Result<i32> {
    match cmd {
        Cmd::Gen { kind } => cmd_gen(kind),
        Cmd::Dim(args) => cmd_dim(args, p),
        Cmd::Window {
            file,
            window,
            out,
            compare,
        } => cmd_window(&file, window, out.as_deref(), compare.as_deref(), p),
        Cmd::Spectrum { file, out } => cmd_spectrum(&file, out.as_deref(), p),
        Cmd::Mandelbrot(args) => cmd_mandelbrot(args),
        Cmd::Validate {
            quick: _,
            full,
            seed,
            digits_file,
            report,
        } => cmd_validate(full, seed, digits_file.as_deref(), report.as_deref(), p),
    }
}

fn cmd_gen(kind: GenKind) -> Result<i32> {
    match kind {
        GenKind::White {
            n,
            seed,
            mean,
            variance,
            out,
        } => {
            eprintln!("gen white n={n} mean={mean} variance={variance} seed={seed}");
            write_series(
                out_writer(out.as_deref())?,
                &gaussian_white(n, mean, variance, RngSeed(seed)),
            )?;
        }
        GenKind::Brownian {
            n,
            seed,
            mean,
            variance,
            out,
        } => {
            eprintln!("gen brownian n={n} mean={mean} variance={variance} seed={seed}");
            let g = gaussian_white(n, mean, variance, RngSeed(seed));
            write_series(out_writer(out.as_deref())?, &brownian_walk(&g))?;
        }
        GenKind::Digits { n, seed, out } => {
            eprintln!("gen digits n={n} seed={seed}");
            write_digits(out_writer(out.as_deref())?, &uniform_digits(n, RngSeed(seed)))?;
        }
        GenKind::Koch { stage, out } => {
            eprintln!("gen koch stage={stage}");
            write_waveform(out_writer(out.as_deref())?, &koch_curve(stage)?)?;
        }
        GenKind::Sine { n, period, out } => {
            eprintln!("gen sine n={n} period={period}");
            if n < 2 || period <= 0.0 {
                return Err(Error::InvalidParameter(
                    "sine needs n >= 2 and period > 0".into(),
                ));
            }
            write_waveform(out_writer(out.as_deref())?, &sine_wave(n, period))?;
        }
        GenKind::Lorenz {
            steps,
            sigma,
            rho,
            beta,
            x0,
            y0,
            z0,
            dt,
            discrete_map,
            out,
        } => {
            eprintln!(
                "gen lorenz steps={steps} sigma={sigma} rho={rho} beta={beta} \
                 x0={x0} y0={y0} z0={z0} dt={dt} discrete_map={discrete_map}"
            );
            let params = LorenzParams {
                sigma,
                rho,
                beta,
                x0,
                y0,
                z0,
                dt,
                steps,
            };
            let traj = if discrete_map {
                lorenz_discrete_map(&params)?
            } else {
                lorenz_trajectory(&params)?
            };
            write_triples(out_writer(out.as_deref())?, &traj)?;
        }
    }
    Ok(EXIT_OK)
}

fn cmd_dim(args: DimArgs, p: &Printer) -> Result<i32> {
    let input = SeriesFile::read(&args.file)?;
    match args.method {
        MethodArg::Sevcik => {
            let form = match args.form {
                FormArg::Simplified => SevcikForm::Simplified,
                FormArg::BallCount => SevcikForm::BallCount,
            };
            let est = sevcik_dimension_form(&input.waveform()?, form)?;
            p.kv("method", "sevcik");
            p.kv("n", &est.n.to_string());
            p.kv_float("value", est.value);
            if let Some(v) = est.variance {
                p.kv_float("variance", v);
            }
        }
        MethodArg::Katz => {
            let est = katz_dimension(&input.waveform()?)?;
            p.kv("method", "katz");
            p.kv("n", &est.n.to_string());
            p.kv_float("value", est.value);
            p.kv("approximate", &est.approximate.to_string());
        }
        MethodArg::Higuchi => {
            let series = input.series();
            let mut ks = default_higuchi_k(series.len());
            if let Some(k_max) = args.k_max {
                ks.retain(|&k| k <= k_max);
            }
            let mode = match args.length_mode {
                LengthModeArg::AbsoluteDifference => LengthMode::AbsoluteDifference,
                LengthModeArg::EuclideanChord => LengthMode::EuclideanChord,
            };
            let (est, fit) = higuchi_dimension(series, &HiguchiConfig::with_mode(ks, mode))?;
            p.kv("method", "higuchi");
            p.kv("n", &est.n.to_string());
            p.kv_float("value", est.value);
            p.fit(&fit);
        }
        MethodArg::Hurst => {
            let cfg = HurstConfig {
                min_segment: args.min_segment,
            };
            let (est, fit) = hurst_exponent(input.series(), &cfg)?;
            p.kv("method", "hurst");
            p.kv("n", &est.n.to_string());
            p.kv_float("value", est.value);
            p.fit(&fit);
        }
    }
    Ok(EXIT_OK)
}

fn cmd_window(
    file: &Path,
    window: usize,
    out: Option<&Path>,
    compare: Option<&Path>,
    p: &Printer,
) -> Result<i32> {
    let series = SeriesFile::read(file)?;
    let profile = sliding_q(series.series(), window)?;
    write_q_profile(out_writer(out)?, &profile)?;
    if let Some(other) = compare {
        let other = SeriesFile::read(other)?;
        let other_profile = sliding_q(other.series(), window)?;
        let cmp = q_compare(&profile, &other_profile)?;
        p.kv("pairs", &cmp.pairs.len().to_string());
        p.kv_float("identity_r_squared", cmp.identity_r_squared);
        p.fit(&cmp.fit);
    }
    Ok(EXIT_OK)
}

fn cmd_spectrum(file: &Path, out: Option<&Path>, p: &Printer) -> Result<i32> {
    let series = SeriesFile::read(file)?;
    let spectrum = power_spectrum(series.series())?;
    write_spectrum(out_writer(out)?, &spectrum)?;
    match spectral_slope(&spectrum) {
        Ok(sf) => {
            // When the CSV goes to stdout, keep the report out of it.
            if out.is_none() {
                eprintln!(
                    "fft_len={} slope={:.8e} r_squared={:.8e} floored_bins={}",
                    spectrum.fft_len, sf.fit.slope, sf.fit.r_squared, sf.floored
                );
            } else {
                p.kv("fft_len", &spectrum.fft_len.to_string());
                p.fit(&sf.fit);
                p.kv("floored_bins", &sf.floored.to_string());
            }
        }
        Err(e) => eprintln!("slope unavailable: {e}"),
    }
    Ok(EXIT_OK)
}

fn cmd_mandelbrot(args: MandelbrotArgs) -> Result<i32> {
    let window = MandelbrotWindow {
        x_min: args.x_min,
        x_max: args.x_max,
        y_min: args.y_min,
        y_max: args.y_max,
        width: args.width,
        height: args.height,
        max_iter: args.max_iter,
        escape_radius: args.escape_radius,
    };
    let grid = mandelbrot_grid(&window)?;
    if args.raw {
        write_grid_csv(out_writer(args.out.as_deref())?, &grid)?;
    } else {
        write_pgm(out_writer(args.out.as_deref())?, &grid, args.max_iter)?;
    }
    Ok(EXIT_OK)
}

fn cmd_validate(
    full: bool,
    seed: u64,
    digits_file: Option<&Path>,
    report: Option<&Path>,
    p: &Printer,
) -> Result<i32> {
    let size = if full { SuiteSize::Full } else { SuiteSize::Quick };
    let reports = run_all(size, RngSeed(seed), digits_file)?;
    let mut all_pass = true;
    for r in &reports {
        all_pass &= r.pass();
        if p.porcelain {
            println!(
                "experiment={} checks={} pass={}",
                r.name,
                r.checks.len(),
                r.pass()
            );
        } else {
            println!(
                "{:<18} {:>4} checks  {}  ({:.2}s)",
                r.name,
                r.checks.len(),
                if r.pass() { "PASS" } else { "FAIL" },
                r.runtime_s
            );
            for c in r.checks.iter().filter(|c| !c.pass) {
                println!(
                    "  FAIL {}: {} outside [{}, {}]",
                    c.statistic, c.value, c.low, c.high
                );
            }
        }
    }
    if let Some(path) = report {
        write_report_csv(path, &reports)?;
    }
    Ok(if all_pass { EXIT_OK } else { EXIT_DATA })
}
