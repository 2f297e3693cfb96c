//! Fractal dimension estimation of sampled waveforms.
//!
//! The crate estimates waveform complexity four ways — Sevcik's
//! normalized-length dimension, Katz's extent ratio, Higuchi's
//! stride-length fit, and the Hurst rescaled range — and ships the
//! deterministic reference generators (noise, Koch, sine, Lorenz,
//! Mandelbrot), sliding-window tortuosity analysis, Hann-windowed
//! spectral diagnostics, and a Monte Carlo validation harness that
//! checks the estimators against known bands.
//!
//! Start with the `examples/` directory: each major capability has a
//! small runnable program. The same functionality is scriptable through
//! the `wavedim` binary (`gen`, `dim`, `window`, `spectrum`,
//! `mandelbrot`, `validate`).

pub mod analysis;
pub mod cli;
pub mod error;
pub mod estimators;
pub mod generators;
pub mod harness;
pub mod io;
pub mod waveform;

pub use analysis::{power_spectrum, q_compare, sliding_q, spectral_slope, QProfile, Spectrum};
pub use error::{Error, Result};
pub use estimators::{
    default_higuchi_k, higuchi_dimension, hurst_exponent, katz_dimension, sevcik_dimension,
    sevcik_dimension_form, sevcik_on_koch, vp_compare, HiguchiConfig, HurstConfig, LengthMode,
    SevcikForm, VpComparison,
};
pub use generators::{
    brownian_walk, gaussian_white, koch_curve, lorenz_trajectory, mandelbrot_grid, sine_wave,
    uniform_digits, LorenzParams, MandelbrotWindow, RngSeed,
};
pub use waveform::{DimensionEstimate, LineFit, Method, Waveform};
