//! CSV and PGM serialization for the CLI: series/waveform readers with
//! line-numbered errors, and plain writers for the analysis products.

use std::fs::File;
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::Path;

use crate::analysis::{QProfile, Spectrum};
use crate::error::{Error, Result};
use crate::waveform::Waveform;

/// A parsed input file: one real per line is a plain series, two
/// comma-separated reals per line is an (x, y) waveform. A single
/// non-numeric first row is treated as a header and skipped.
#[derive(Debug, Clone)]
pub enum SeriesFile {
    Series(Vec<f64>),
    Waveform(Waveform),
}

impl SeriesFile {
    pub fn read(path: &Path) -> Result<Self> {
        let file = File::open(path)?;
        Self::parse(BufReader::new(file), path)
    }

    fn parse<R: BufRead>(reader: R, path: &Path) -> Result<Self> {
        let err = |line: usize, msg: String| Error::Parse {
            path: path.display().to_string(),
            line,
            msg,
        };
        let mut series = Vec::new();
        let mut pairs: Vec<(f64, f64)> = Vec::new();
        let mut columns: Option<usize> = None;
        for (idx, line) in reader.lines().enumerate() {
            let line = line?;
            let trimmed = line.trim();
            if trimmed.is_empty() {
                continue;
            }
            let fields: Vec<&str> = trimmed.split(',').map(str::trim).collect();
            let parsed: std::result::Result<Vec<f64>, _> =
                fields.iter().map(|f| f.parse::<f64>()).collect();
            let values = match parsed {
                Ok(v) => v,
                // Only the very first row may be non-numeric (a header).
                Err(e) if idx == 0 => {
                    let _ = e;
                    continue;
                }
                Err(e) => return Err(err(idx + 1, e.to_string())),
            };
            match (columns, values.len()) {
                (None, 1) => {
                    columns = Some(1);
                    series.push(values[0]);
                }
                (None, 2) => {
                    columns = Some(2);
                    pairs.push((values[0], values[1]));
                }
                (Some(1), 1) => series.push(values[0]),
                (Some(2), 2) => pairs.push((values[0], values[1])),
                (_, k) => {
                    return Err(err(
                        idx + 1,
                        format!("expected consistent 1- or 2-column rows, got {k} fields"),
                    ))
                }
            }
        }
        match columns {
            Some(1) => Ok(SeriesFile::Series(series)),
            Some(2) => {
                let (xs, ys) = pairs.into_iter().unzip();
                let w = Waveform::new(xs, ys)
                    .map_err(|e| err(0, format!("invalid waveform: {e}")))?;
                Ok(SeriesFile::Waveform(w))
            }
            None => Err(err(0, "no data rows".into())),
            Some(_) => unreachable!("only 1- or 2-column layouts are recorded"),
        }
    }

    /// The ordinate values regardless of shape.
    pub fn series(&self) -> &[f64] {
        match self {
            SeriesFile::Series(ys) => ys,
            SeriesFile::Waveform(w) => w.ys(),
        }
    }

    /// The waveform view: two-column files as-is, one-column files on a
    /// unit-spaced abscissa.
    pub fn waveform(&self) -> Result<Waveform> {
        match self {
            SeriesFile::Series(ys) => Waveform::from_series(ys.clone()),
            SeriesFile::Waveform(w) => Ok(w.clone()),
        }
    }
}

pub fn write_series<W: Write>(out: W, ys: &[f64]) -> Result<()> {
    let mut out = BufWriter::new(out);
    for y in ys {
        writeln!(out, "{y}")?;
    }
    out.flush()?;
    Ok(())
}

pub fn write_waveform<W: Write>(out: W, w: &Waveform) -> Result<()> {
    let mut out = BufWriter::new(out);
    for (x, y) in w.xs().iter().zip(w.ys()) {
        writeln!(out, "{x},{y}")?;
    }
    out.flush()?;
    Ok(())
}

pub fn write_triples<W: Write>(out: W, rows: &[[f64; 3]]) -> Result<()> {
    let mut out = BufWriter::new(out);
    for r in rows {
        writeln!(out, "{},{},{}", r[0], r[1], r[2])?;
    }
    out.flush()?;
    Ok(())
}

pub fn write_digits<W: Write>(out: W, digits: &[u8]) -> Result<()> {
    let mut out = BufWriter::new(out);
    for d in digits {
        writeln!(out, "{d}")?;
    }
    out.flush()?;
    Ok(())
}

/// center,q rows; missing windows keep the row with an empty q field.
pub fn write_q_profile<W: Write>(out: W, p: &QProfile) -> Result<()> {
    let mut out = BufWriter::new(out);
    writeln!(out, "center,q")?;
    for (c, q) in p.centers.iter().zip(&p.q) {
        match q {
            Some(q) => writeln!(out, "{c},{q}")?,
            None => writeln!(out, "{c},")?,
        }
    }
    out.flush()?;
    Ok(())
}

pub fn write_spectrum<W: Write>(out: W, s: &Spectrum) -> Result<()> {
    let mut out = BufWriter::new(out);
    writeln!(out, "freq,power")?;
    for (f, p) in s.freqs.iter().zip(&s.power) {
        writeln!(out, "{f},{p}")?;
    }
    out.flush()?;
    Ok(())
}

/// Binary PGM (P5), counts scaled linearly so max_iter maps to 255.
pub fn write_pgm<W: Write>(out: W, grid: &[Vec<u32>], max_iter: u32) -> Result<()> {
    let height = grid.len();
    let width = grid.first().map_or(0, Vec::len);
    let mut out = BufWriter::new(out);
    write!(out, "P5\n{width} {height}\n255\n")?;
    for row in grid {
        let bytes: Vec<u8> = row
            .iter()
            .map(|&c| ((c as u64 * 255) / max_iter as u64) as u8)
            .collect();
        out.write_all(&bytes)?;
    }
    out.flush()?;
    Ok(())
}

pub fn write_grid_csv<W: Write>(out: W, grid: &[Vec<u32>]) -> Result<()> {
    let mut out = BufWriter::new(out);
    for row in grid {
        let cells: Vec<String> = row.iter().map(u32::to_string).collect();
        writeln!(out, "{}", cells.join(","))?;
    }
    out.flush()?;
    Ok(())
}

/// A digits file for the validation suite: any decimal digits in the
/// file, whitespace and separators ignored.
pub fn read_digits(path: &Path) -> Result<Vec<u8>> {
    let file = File::open(path)?;
    let mut digits = Vec::new();
    for line in BufReader::new(file).lines() {
        for b in line?.bytes() {
            if b.is_ascii_digit() {
                digits.push(b - b'0');
            }
        }
    }
    Ok(digits)
}
