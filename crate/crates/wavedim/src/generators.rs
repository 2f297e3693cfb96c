//! Deterministic, seeded reference-signal generators: Gaussian white and
//! Brownian noise, uniform decimal digits, the one-sided triadic Koch
//! curve, sine waves, Lorenz trajectories, and Mandelbrot escape grids.
//!
//! Every generator is pure given (params, seed): the stream RNG is frozen
//! to ChaCha12 seeded from the 64-bit seed, and Gaussian variates come
//! from an explicit Box-Muller transform, so re-runs are bit-identical.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha12Rng;

use crate::error::{Error, Result};
use crate::waveform::Waveform;

/// 64-bit seed for the stream generator. Same seed, same build ==>
/// bit-identical output.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RngSeed(pub u64);

impl From<u64> for RngSeed {
    fn from(seed: u64) -> Self {
        RngSeed(seed)
    }
}

fn stream(seed: RngSeed) -> ChaCha12Rng {
    ChaCha12Rng::seed_from_u64(seed.0)
}

/// n Gaussian G(mean, variance) variates via the Box-Muller transform of
/// a seeded uniform stream.
pub fn gaussian_white(n: usize, mean: f64, variance: f64, seed: RngSeed) -> Vec<f64> {
    assert!(n >= 1, "n must be >= 1");
    assert!(variance >= 0.0, "variance must be >= 0");
    if variance == 0.0 {
        return vec![mean; n];
    }
    let sigma = variance.sqrt();
    let mut rng = stream(seed);
    let mut out = Vec::with_capacity(n);
    while out.len() < n {
        // u1 in (0,1] so the log is finite; u2 in [0,1).
        let u1: f64 = 1.0 - rng.gen::<f64>();
        let u2: f64 = rng.gen();
        let r = (-2.0 * u1.ln()).sqrt();
        let theta = std::f64::consts::TAU * u2;
        out.push(mean + sigma * r * theta.cos());
        if out.len() < n {
            out.push(mean + sigma * r * theta.sin());
        }
    }
    out
}

/// Running sum of the noise with b[0] = 0: b[i] = b[i-1] + g[i-1].
/// Same contract as [`crate::waveform::cumsum`] composed with a leading
/// zero; kept as a named generator for discoverability.
pub fn brownian_walk(noise: &[f64]) -> Vec<f64> {
    assert!(!noise.is_empty(), "noise must be non-empty");
    let mut out = Vec::with_capacity(noise.len());
    out.push(0.0);
    for &g in &noise[..noise.len() - 1] {
        out.push(out.last().unwrap() + g);
    }
    out
}

/// n i.i.d. digits in {0..9}.
pub fn uniform_digits(n: usize, seed: RngSeed) -> Vec<u8> {
    assert!(n >= 1, "n must be >= 1");
    let mut rng = stream(seed);
    (0..n).map(|_| rng.gen_range(0..10u8)).collect()
}

/// One-sided triadic Koch curve on [0,1], bumps pointing in +y: 4^stage
/// segments of length 3^-stage each, apex height 1/sqrt(12).
pub fn koch_curve(stage: u32) -> Result<Waveform> {
    if stage > 10 {
        return Err(Error::StageTooLarge(stage));
    }
    let mut pts: Vec<(f64, f64)> = vec![(0.0, 0.0), (1.0, 0.0)];
    for _ in 0..stage {
        let mut next = Vec::with_capacity((pts.len() - 1) * 4 + 1);
        for pair in pts.windows(2) {
            let (x1, y1) = pair[0];
            let (x2, y2) = pair[1];
            let dx = (x2 - x1) / 3.0;
            let dy = (y2 - y1) / 3.0;
            let b = (x1 + dx, y1 + dy);
            // Apex: middle third rotated +60 degrees about b.
            let c = (
                b.0 + dx * 0.5 - dy * 3f64.sqrt() / 2.0,
                b.1 + dy * 0.5 + dx * 3f64.sqrt() / 2.0,
            );
            let d = (x1 + 2.0 * dx, y1 + 2.0 * dy);
            next.push(pair[0]);
            next.push(b);
            next.push(c);
            next.push(d);
        }
        next.push(*pts.last().unwrap());
        pts = next;
    }
    let (xs, ys) = pts.into_iter().unzip();
    // Deeper stages double back in x (segments at 120 degrees), so this
    // is a planar polyline, not a function graph.
    Waveform::from_points(xs, ys)
}

/// y_i = sin(2 pi i / period) on a unit-spaced abscissa.
pub fn sine_wave(n: usize, period: f64) -> Waveform {
    assert!(n >= 2, "n must be >= 2");
    assert!(period > 0.0, "period must be > 0");
    let ys = (0..n)
        .map(|i| (std::f64::consts::TAU * i as f64 / period).sin())
        .collect();
    Waveform::from_series(ys).expect("n >= 2 checked above")
}

#[derive(Debug, Clone, Copy)]
pub struct LorenzParams {
    pub sigma: f64,
    pub rho: f64,
    pub beta: f64,
    pub x0: f64,
    pub y0: f64,
    pub z0: f64,
    pub dt: f64,
    pub steps: usize,
}

impl Default for LorenzParams {
    fn default() -> Self {
        Self {
            sigma: 3.0,
            rho: 26.5,
            beta: 1.0,
            x0: -1.0,
            y0: 0.0,
            z0: 1.0,
            dt: 0.01,
            steps: 40_000,
        }
    }
}

impl LorenzParams {
    fn validate(&self) -> Result<()> {
        if !(self.dt > 0.0) {
            return Err(Error::InvalidParameter("dt must be > 0".into()));
        }
        if self.steps < 1 {
            return Err(Error::InvalidParameter("steps must be >= 1".into()));
        }
        Ok(())
    }
}

const LORENZ_BLOWUP: f64 = 1e6;

fn lorenz_rhs(sigma: f64, rho: f64, beta: f64, s: [f64; 3]) -> [f64; 3] {
    let [x, y, z] = s;
    [sigma * (y - x), rho * x - x * z - y, x * y - beta * z]
}

/// Fixed-step RK4 integration of the Lorenz system; returns `steps`
/// states after the initial one.
pub fn lorenz_trajectory(p: &LorenzParams) -> Result<Vec<[f64; 3]>> {
    p.validate()?;
    let mut s = [p.x0, p.y0, p.z0];
    let mut out = Vec::with_capacity(p.steps);
    let h = p.dt;
    for _ in 0..p.steps {
        let k1 = lorenz_rhs(p.sigma, p.rho, p.beta, s);
        let k2 = lorenz_rhs(
            p.sigma,
            p.rho,
            p.beta,
            [
                s[0] + 0.5 * h * k1[0],
                s[1] + 0.5 * h * k1[1],
                s[2] + 0.5 * h * k1[2],
            ],
        );
        let k3 = lorenz_rhs(
            p.sigma,
            p.rho,
            p.beta,
            [
                s[0] + 0.5 * h * k2[0],
                s[1] + 0.5 * h * k2[1],
                s[2] + 0.5 * h * k2[2],
            ],
        );
        let k4 = lorenz_rhs(
            p.sigma,
            p.rho,
            p.beta,
            [s[0] + h * k3[0], s[1] + h * k3[1], s[2] + h * k3[2]],
        );
        for i in 0..3 {
            s[i] += h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
        }
        if s.iter().any(|c| !c.is_finite() || c.abs() > LORENZ_BLOWUP) {
            return Err(Error::NumericalBlowup);
        }
        out.push(s);
    }
    Ok(out)
}

/// The crude explicit map x' = -sx + sy, y' = xz + rx - y, z' = xy - bz,
/// with no time step at all. Kept for fidelity experiments only; it is
/// not an integrator and diverges for most parameters.
pub fn lorenz_discrete_map(p: &LorenzParams) -> Result<Vec<[f64; 3]>> {
    p.validate()?;
    let mut s = [p.x0, p.y0, p.z0];
    let mut out = Vec::with_capacity(p.steps);
    for _ in 0..p.steps {
        s = [
            -p.sigma * s[0] + p.sigma * s[1],
            s[0] * s[2] + p.rho * s[0] - s[1],
            s[0] * s[1] - p.beta * s[2],
        ];
        if s.iter().any(|c| !c.is_finite() || c.abs() > LORENZ_BLOWUP) {
            return Err(Error::NumericalBlowup);
        }
        out.push(s);
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy)]
pub struct MandelbrotWindow {
    pub x_min: f64,
    pub x_max: f64,
    pub y_min: f64,
    pub y_max: f64,
    pub width: usize,
    pub height: usize,
    pub max_iter: u32,
    pub escape_radius: f64,
}

impl Default for MandelbrotWindow {
    fn default() -> Self {
        Self {
            x_min: -3.0,
            x_max: 3.0,
            y_min: -2.0,
            y_max: 2.0,
            width: 600,
            height: 400,
            max_iter: 1024,
            escape_radius: 2.0,
        }
    }
}

impl MandelbrotWindow {
    pub fn validate(&self) -> Result<()> {
        if !(self.x_min < self.x_max) || !(self.y_min < self.y_max) {
            return Err(Error::InvalidParameter(
                "window bounds must satisfy min < max".into(),
            ));
        }
        if self.width == 0 || self.height == 0 {
            return Err(Error::InvalidParameter("grid must be non-empty".into()));
        }
        if self.max_iter < 1 {
            return Err(Error::InvalidParameter("max_iter must be >= 1".into()));
        }
        if !(self.escape_radius >= 2.0) {
            return Err(Error::InvalidParameter(
                "escape radius must be >= 2".into(),
            ));
        }
        Ok(())
    }
}

/// Escape count for one point C: the first n with |Z_n| > radius under
/// Z_{n+1} = Z_n^2 + C from Z_0 = 0, or max_iter if it never escapes
/// (max_iter means "in the set at this resolution").
pub fn mandelbrot_escape(c_re: f64, c_im: f64, max_iter: u32, escape_radius: f64) -> u32 {
    let r2 = escape_radius * escape_radius;
    let (mut zr, mut zi) = (0.0f64, 0.0f64);
    for n in 1..=max_iter {
        let (zr2, zi2) = (zr * zr - zi * zi + c_re, 2.0 * zr * zi + c_im);
        zr = zr2;
        zi = zi2;
        if zr * zr + zi * zi > r2 {
            return n;
        }
    }
    max_iter
}

/// Escape counts for the whole window, row 0 at y_max (image order);
/// pixel centers at (j + 0.5, i + 0.5) in grid coordinates.
pub fn mandelbrot_grid(w: &MandelbrotWindow) -> Result<Vec<Vec<u32>>> {
    w.validate()?;
    let dx = (w.x_max - w.x_min) / w.width as f64;
    let dy = (w.y_max - w.y_min) / w.height as f64;
    let grid = (0..w.height)
        .map(|i| {
            let y = w.y_max - (i as f64 + 0.5) * dy;
            (0..w.width)
                .map(|j| {
                    let x = w.x_min + (j as f64 + 0.5) * dx;
                    mandelbrot_escape(x, y, w.max_iter, w.escape_radius)
                })
                .collect()
        })
        .collect();
    Ok(grid)
}
