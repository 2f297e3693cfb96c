//! Domain types and the shared numeric utilities the estimators build on:
//! unit-square normalization, polyline length, differences, running sums
//! and ordinary least squares.

use crate::error::{Error, Result};

/// A sampled waveform: pairs (x_i, y_i) with monotone non-decreasing x.
#[derive(Debug, Clone, PartialEq)]
pub struct Waveform {
    xs: Vec<f64>,
    ys: Vec<f64>,
}

impl Waveform {
    pub fn new(xs: Vec<f64>, ys: Vec<f64>) -> Result<Self> {
        let w = Self::from_points(xs, ys)?;
        if w.xs.windows(2).any(|p| p[1] < p[0]) {
            return Err(Error::InvalidWaveform(
                "abscissa not monotone non-decreasing".into(),
            ));
        }
        Ok(w)
    }

    /// A planar polyline that need not be a function graph: the abscissa
    /// may double back (e.g. the deeper Koch stages). Everything else is
    /// validated as in [`Waveform::new`].
    pub fn from_points(xs: Vec<f64>, ys: Vec<f64>) -> Result<Self> {
        if xs.len() != ys.len() {
            return Err(Error::InvalidWaveform(format!(
                "len(xs) = {} != len(ys) = {}",
                xs.len(),
                ys.len()
            )));
        }
        if xs.len() < 2 {
            return Err(Error::TooShort {
                need: 2,
                got: xs.len(),
            });
        }
        if xs.iter().chain(ys.iter()).any(|v| !v.is_finite()) {
            return Err(Error::InvalidWaveform("non-finite sample".into()));
        }
        Ok(Self { xs, ys })
    }

    /// Wrap a bare series on a unit-spaced abscissa 0, 1, ..., n-1.
    pub fn from_series(ys: Vec<f64>) -> Result<Self> {
        let xs = (0..ys.len()).map(|i| i as f64).collect();
        Self::new(xs, ys)
    }

    pub fn len(&self) -> usize {
        self.xs.len()
    }

    pub fn is_empty(&self) -> bool {
        false // construction guarantees N >= 2
    }

    pub fn xs(&self) -> &[f64] {
        &self.xs
    }

    pub fn ys(&self) -> &[f64] {
        &self.ys
    }
}

/// A waveform mapped into the unit square: x* = x / max(x),
/// y* = (y - min(y)) / (max(y) - min(y)).
#[derive(Debug, Clone, PartialEq)]
pub struct NormalizedWaveform {
    xs: Vec<f64>,
    ys: Vec<f64>,
}

impl NormalizedWaveform {
    pub fn len(&self) -> usize {
        self.xs.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn xs(&self) -> &[f64] {
        &self.xs
    }

    pub fn ys(&self) -> &[f64] {
        &self.ys
    }

    pub fn into_waveform(self) -> Waveform {
        Waveform {
            xs: self.xs,
            ys: self.ys,
        }
    }
}

/// Which estimator produced a [`DimensionEstimate`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Sevcik,
    Katz,
    Higuchi,
    Hurst,
}

impl std::fmt::Display for Method {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Method::Sevcik => "sevcik",
            Method::Katz => "katz",
            Method::Higuchi => "higuchi",
            Method::Hurst => "hurst",
        };
        f.write_str(s)
    }
}

/// An estimator value with its variance (when the method defines one),
/// the sample count and the method tag.
#[derive(Debug, Clone, PartialEq)]
pub struct DimensionEstimate {
    pub value: f64,
    pub variance: Option<f64>,
    pub n: usize,
    pub method: Method,
    /// Set when a shortcut was taken (e.g. Katz max-distance fallback).
    pub approximate: bool,
}

/// Ordinary least-squares line.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LineFit {
    pub slope: f64,
    pub intercept: f64,
    pub r_squared: f64,
}

/// Compensated (Kahan) accumulator; long chord sums feed ln(L), so the
/// rounding error of a naive sum would leak into the dimension.
#[derive(Debug, Clone, Copy, Default)]
pub struct KahanSum {
    sum: f64,
    carry: f64,
}

impl KahanSum {
    pub fn add(&mut self, v: f64) {
        let y = v - self.carry;
        let t = self.sum + y;
        self.carry = (t - self.sum) - y;
        self.sum = t;
    }

    pub fn value(&self) -> f64 {
        self.sum
    }
}

/// Map a waveform into the unit square.
///
/// The abscissa is divided by max(x) only (no shift); waveforms with a
/// negative abscissa are rejected rather than silently shifted.
pub fn normalize(w: &Waveform) -> Result<NormalizedWaveform> {
    let x_max = w.xs.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    let x_min = w.xs.iter().cloned().fold(f64::INFINITY, f64::min);
    let y_max = w.ys.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    let y_min = w.ys.iter().cloned().fold(f64::INFINITY, f64::min);
    if x_min < 0.0 {
        return Err(Error::NegativeAbscissa);
    }
    if x_max == 0.0 {
        return Err(Error::ZeroAbscissa);
    }
    if y_max == y_min {
        return Err(Error::FlatSignal);
    }
    let xs = w.xs.iter().map(|x| x / x_max).collect();
    let ys = w
        .ys
        .iter()
        .map(|y| (y - y_min) / (y_max - y_min))
        .collect();
    Ok(NormalizedWaveform { xs, ys })
}

/// Total chord length of the normalized polyline, compensated summation.
pub fn polyline_length(w: &NormalizedWaveform) -> f64 {
    let mut acc = KahanSum::default();
    for i in 1..w.len() {
        let dx = w.xs[i] - w.xs[i - 1];
        let dy = w.ys[i] - w.ys[i - 1];
        acc.add(dx.hypot(dy));
    }
    acc.value()
}

/// Chord lengths of the individual segments of a normalized waveform.
pub fn segment_lengths(w: &NormalizedWaveform) -> Vec<f64> {
    (1..w.len())
        .map(|i| (w.xs[i] - w.xs[i - 1]).hypot(w.ys[i] - w.ys[i - 1]))
        .collect()
}

/// First differences, zero-anchored: out[0] = 0, out[t] = y[t] - y[t-1].
pub fn diff(series: &[f64]) -> Vec<f64> {
    let mut out = Vec::with_capacity(series.len());
    for (t, &y) in series.iter().enumerate() {
        if t == 0 {
            out.push(0.0);
        } else {
            out.push(y - series[t - 1]);
        }
    }
    out
}

/// Running sum, zero-anchored: out[0] = 0, out[i] = out[i-1] + in[i].
///
/// Note the first input element is dropped by the anchoring convention,
/// so cumsum(diff(r)) == r - r[0] elementwise.
pub fn cumsum(series: &[f64]) -> Vec<f64> {
    let mut out = Vec::with_capacity(series.len());
    let mut acc = KahanSum::default();
    for (i, &v) in series.iter().enumerate() {
        if i > 0 {
            acc.add(v);
        }
        out.push(acc.value());
    }
    out
}

/// Ordinary least squares of ys on xs.
pub fn least_squares(xs: &[f64], ys: &[f64]) -> Result<LineFit> {
    assert_eq!(xs.len(), ys.len(), "least_squares: length mismatch");
    let n = xs.len();
    if n < 2 {
        return Err(Error::TooShort { need: 2, got: n });
    }
    let x_mean = xs.iter().sum::<f64>() / n as f64;
    let y_mean = ys.iter().sum::<f64>() / n as f64;
    let mut sxx = 0.0;
    let mut sxy = 0.0;
    for i in 0..n {
        let dx = xs[i] - x_mean;
        sxx += dx * dx;
        sxy += dx * (ys[i] - y_mean);
    }
    if sxx == 0.0 {
        return Err(Error::DegenerateFit);
    }
    let slope = sxy / sxx;
    let intercept = y_mean - slope * x_mean;
    let mut ss_res = 0.0;
    let mut ss_tot = 0.0;
    for i in 0..n {
        let r = ys[i] - (slope * xs[i] + intercept);
        ss_res += r * r;
        let d = ys[i] - y_mean;
        ss_tot += d * d;
    }
    let r_squared = if ss_tot == 0.0 {
        1.0
    } else {
        (1.0 - ss_res / ss_tot).clamp(0.0, 1.0)
    };
    Ok(LineFit {
        slope,
        intercept,
        r_squared,
    })
}
