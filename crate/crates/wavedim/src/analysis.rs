//! Sliding-window tortuosity profiles, profile comparison, and spectral
//! diagnostics.

use rustfft::num_complex::Complex;
use rustfft::FftPlanner;

use crate::error::{Error, Result};
use crate::estimators::sevcik_dimension;
use crate::waveform::{least_squares, LineFit, Waveform};

/// Tortuosity profile: Q = D_S - 1 per sliding window, assigned to the
/// window center. Flat windows have no dimension and are recorded as
/// missing rather than failing the whole profile.
#[derive(Debug, Clone)]
pub struct QProfile {
    pub window: usize,
    pub centers: Vec<usize>,
    pub q: Vec<Option<f64>>,
}

/// Q at every center i + window/2 for starts i = 0..N-window, step 1.
pub fn sliding_q(series: &[f64], window: usize) -> Result<QProfile> {
    let n = series.len();
    if window < 10 {
        return Err(Error::InvalidParameter("window must be >= 10".into()));
    }
    if window > n {
        return Err(Error::WindowTooLarge { window, n });
    }
    let mut centers = Vec::with_capacity(n - window + 1);
    let mut q = Vec::with_capacity(n - window + 1);
    for start in 0..=(n - window) {
        let w = Waveform::from_series(series[start..start + window].to_vec())?;
        centers.push(start + window / 2);
        q.push(match sevcik_dimension(&w) {
            Ok(est) => Some(est.value - 1.0),
            Err(Error::FlatSignal) => None,
            Err(e) => return Err(e),
        });
    }
    Ok(QProfile { window, centers, q })
}

/// Result of comparing two tortuosity profiles point by point.
#[derive(Debug, Clone)]
pub struct QComparison {
    /// (q_a, q_b) at centers where both profiles have a value.
    pub pairs: Vec<(f64, f64)>,
    /// Free least-squares fit of q_b on q_a, for diagnostics.
    pub fit: LineFit,
    /// Coefficient of determination measured against the identity line
    /// y = x (residuals about y = x, total about the mean), clamped to
    /// [0, 1]. Equal profiles give exactly 1.
    pub identity_r_squared: f64,
}

pub fn q_compare(a: &QProfile, b: &QProfile) -> Result<QComparison> {
    if a.window != b.window || a.centers != b.centers {
        return Err(Error::LengthMismatch);
    }
    let pairs: Vec<(f64, f64)> = a
        .q
        .iter()
        .zip(&b.q)
        .filter_map(|(x, y)| Some((x.as_ref().copied()?, y.as_ref().copied()?)))
        .collect();
    if pairs.len() < 2 {
        return Err(Error::DegenerateFit);
    }
    let xs: Vec<f64> = pairs.iter().map(|p| p.0).collect();
    let ys: Vec<f64> = pairs.iter().map(|p| p.1).collect();
    let fit = least_squares(&xs, &ys)?;
    let mean_y = ys.iter().sum::<f64>() / ys.len() as f64;
    let ss_res: f64 = pairs.iter().map(|(x, y)| (y - x) * (y - x)).sum();
    let ss_tot: f64 = ys.iter().map(|y| (y - mean_y) * (y - mean_y)).sum();
    let identity_r_squared = if ss_res == 0.0 {
        1.0
    } else if ss_tot == 0.0 {
        0.0
    } else {
        (1.0 - ss_res / ss_tot).clamp(0.0, 1.0)
    };
    Ok(QComparison {
        pairs,
        fit,
        identity_r_squared,
    })
}

/// One-sided Hann-windowed spectrum: bins k = 0..M/2 of an M-point FFT,
/// M the largest power of two <= N (truncation, not padding).
#[derive(Debug, Clone)]
pub struct Spectrum {
    /// Cycles per sample, k/M, in [0, 0.5].
    pub freqs: Vec<f64>,
    /// Squared modulus a_f^2 + b_f^2 per bin; see [`Spectrum::amplitude`]
    /// for the modulus itself.
    pub power: Vec<f64>,
    /// FFT length actually analyzed.
    pub fft_len: usize,
}

impl Spectrum {
    /// Modulus sqrt(a_f^2 + b_f^2) of one bin.
    pub fn amplitude(&self, bin: usize) -> f64 {
        self.power[bin].sqrt()
    }
}

pub fn power_spectrum(series: &[f64]) -> Result<Spectrum> {
    let n = series.len();
    if n < 64 {
        return Err(Error::TooShort { need: 64, got: n });
    }
    let m = 1usize << (usize::BITS - 1 - n.leading_zeros());
    let mut buf: Vec<Complex<f64>> = series[..m]
        .iter()
        .enumerate()
        .map(|(i, &y)| {
            let w = 0.5 * (1.0 - (std::f64::consts::TAU * i as f64 / (m - 1) as f64).cos());
            Complex::new(y * w, 0.0)
        })
        .collect();
    FftPlanner::new().plan_fft_forward(m).process(&mut buf);
    let freqs = (0..=m / 2).map(|k| k as f64 / m as f64).collect();
    let power = buf[..=m / 2].iter().map(|z| z.norm_sqr()).collect();
    Ok(Spectrum {
        freqs,
        power,
        fft_len: m,
    })
}

/// Log-log slope of the spectrum over bins [1, M/8]; the DC bin and the
/// noisy top of the band are excluded.
#[derive(Debug, Clone, Copy)]
pub struct SlopeFit {
    pub fit: LineFit,
    /// Bins with zero power were substituted with a 1e-300 floor.
    pub floored: usize,
}

pub fn spectral_slope(s: &Spectrum) -> Result<SlopeFit> {
    let m = s.fft_len;
    let hi = m / 8;
    if hi < 16 {
        return Err(Error::TooShort {
            need: 16,
            got: hi,
        });
    }
    let mut floored = 0usize;
    let mut xs = Vec::with_capacity(hi);
    let mut ys = Vec::with_capacity(hi);
    for k in 1..=hi {
        let p = if s.power[k] > 0.0 {
            s.power[k]
        } else {
            floored += 1;
            1e-300
        };
        xs.push(s.freqs[k].ln());
        ys.push(p.ln());
    }
    let fit = least_squares(&xs, &ys)?;
    Ok(SlopeFit { fit, floored })
}
