//! End-to-end checks of the `wavedim` binary: exit codes, round-trips
//! between `gen` and `dim`, and output formats.

use std::path::Path;
use std::process::{Command, Output};

use wavedim::estimators::{sevcik_dimension_form, SevcikForm};
use wavedim::generators::{gaussian_white, RngSeed};
use wavedim::waveform::Waveform;

fn wavedim(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_wavedim"))
        .args(args)
        .output()
        .unwrap()
}

fn porcelain_value(stdout: &[u8], key: &str) -> String {
    let text = String::from_utf8_lossy(stdout);
    text.lines()
        .find_map(|l| l.strip_prefix(&format!("{key}=")))
        .unwrap_or_else(|| panic!("no {key}= line in {text}"))
        .to_string()
}

#[test]
fn usage_error_exits_1() {
    let out = wavedim(&["dim"]);
    assert_eq!(out.status.code(), Some(1));
    let out = wavedim(&["no-such-command"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn help_exits_0() {
    assert_eq!(wavedim(&["--help"]).status.code(), Some(0));
    assert_eq!(wavedim(&["gen", "--help"]).status.code(), Some(0));
}

#[test]
fn missing_file_exits_2() {
    let out = wavedim(&["dim", "/nonexistent/input.csv"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(!out.stderr.is_empty());
}

#[test]
fn bad_data_exits_2_with_line_number() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.csv");
    std::fs::write(&path, "1\n2\noops\n").unwrap();
    let out = wavedim(&["dim", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains(":3:"));
}

#[test]
fn gen_dim_round_trip_matches_library() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("white.csv");
    let out = wavedim(&[
        "gen", "white", "--n", "10000", "--seed", "42", "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        std::fs::read_to_string(&path).unwrap().lines().count(),
        10000
    );

    let out = wavedim(&[
        "--porcelain",
        "--hex-floats",
        "dim",
        path.to_str().unwrap(),
        "--method",
        "sevcik",
        "--form",
        "ball-count",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let cli_bits = porcelain_value(&out.stdout, "value");

    let g = gaussian_white(10_000, 0.0, 1.0, RngSeed(42));
    let w = Waveform::from_series(g).unwrap();
    let lib = sevcik_dimension_form(&w, SevcikForm::BallCount).unwrap();
    assert_eq!(cli_bits, format!("0x{:016x}", lib.value.to_bits()));
    // The published-scale band for n = 10^4 white noise.
    assert!((1.63..=1.69).contains(&lib.value));
}

#[test]
fn dim_straight_line_katz_is_one() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("line.csv");
    let rows: String = (0..1000).map(|i| format!("{i},{}\n", 2 * i)).collect();
    std::fs::write(&path, rows).unwrap();
    let out = wavedim(&["--porcelain", "dim", path.to_str().unwrap(), "--method", "katz"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(porcelain_value(&out.stdout, "value"), "1.00000000e0");
}

#[test]
fn gen_koch_point_count() {
    let out = wavedim(&["gen", "koch", "--stage", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let lines = out.stdout.split(|&b| b == b'\n').filter(|l| !l.is_empty());
    assert_eq!(lines.count(), 65);
}

#[test]
fn gen_lorenz_row_count_and_shape() {
    let out = wavedim(&["gen", "lorenz", "--steps", "1000"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let rows: Vec<&str> = text.lines().collect();
    assert_eq!(rows.len(), 1000);
    assert_eq!(rows[0].split(',').count(), 3);
    let provenance = String::from_utf8(out.stderr).unwrap();
    assert!(provenance.contains("sigma=3"), "{provenance}");
}

#[test]
fn window_csv_caption_arithmetic() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("sine.csv");
    let rows: String = (0..3600)
        .map(|i| format!("{}\n", (i as f64 * 0.05).sin() + 0.1 * (i as f64 * 0.71).sin()))
        .collect();
    std::fs::write(&path, rows).unwrap();
    let out = wavedim(&["window", path.to_str().unwrap(), "--window", "500"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("center,q"));
    let rows: Vec<&str> = lines.collect();
    assert_eq!(rows.len(), 3101);
    assert!(rows[0].starts_with("250,"));
    assert!(rows[3100].starts_with("3350,"));
}

#[test]
fn spectrum_csv_and_slope_report() {
    let dir = tempfile::tempdir().unwrap();
    let data = dir.path().join("noise.csv");
    let spec = dir.path().join("spec.csv");
    let gen = wavedim(&["gen", "white", "--n", "4096", "--seed", "9", "--out", data.to_str().unwrap()]);
    assert_eq!(gen.status.code(), Some(0));
    let out = wavedim(&[
        "--porcelain",
        "spectrum",
        data.to_str().unwrap(),
        "--out",
        spec.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(porcelain_value(&out.stdout, "fft_len"), "4096");
    let slope: f64 = porcelain_value(&out.stdout, "slope").parse().unwrap();
    assert!(slope.abs() < 0.5);
    let csv = std::fs::read_to_string(&spec).unwrap();
    assert!(csv.starts_with("freq,power\n"));
    assert_eq!(csv.lines().count(), 2050); // header + 2049 bins
}

#[test]
fn mandelbrot_pgm_and_raw() {
    let dir = tempfile::tempdir().unwrap();
    let pgm = dir.path().join("m.pgm");
    let out = wavedim(&[
        "mandelbrot", "--width", "60", "--height", "40", "--max-iter", "64",
        "--out", pgm.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let bytes = std::fs::read(&pgm).unwrap();
    assert!(bytes.starts_with(b"P5\n60 40\n255\n"));
    assert_eq!(bytes.len(), 13 + 60 * 40);

    let out = wavedim(&[
        "mandelbrot", "--width", "8", "--height", "6", "--max-iter", "64", "--raw",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().count(), 6);
    assert_eq!(text.lines().next().unwrap().split(',').count(), 8);
}

#[test]
fn validate_quick_passes_and_writes_report() {
    let dir = tempfile::tempdir().unwrap();
    let report = dir.path().join("report.csv");
    let out = wavedim(&[
        "--porcelain", "validate", "--quick", "--seed", "1",
        "--report", report.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0), "{out:?}");
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.lines().all(|l| l.contains("pass=true")), "{text}");
    let csv = std::fs::read_to_string(&report).unwrap();
    assert!(csv.starts_with("name,statistic,value,low,high,pass\n"));
    assert!(csv.lines().skip(1).all(|l| l.ends_with("true")), "{csv}");
}

#[test]
fn validate_with_digits_file() {
    let dir = tempfile::tempdir().unwrap();
    let digits = dir.path().join("digits.txt");
    let gen = wavedim(&[
        "gen", "digits", "--n", "200000", "--seed", "9",
        "--out", digits.to_str().unwrap(),
    ]);
    assert_eq!(gen.status.code(), Some(0));
    let out = wavedim(&[
        "validate", "--quick", "--seed", "2",
        "--digits-file", digits.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0), "{out:?}");
}

fn first_line(path: &Path) -> String {
    std::fs::read_to_string(path)
        .unwrap()
        .lines()
        .next()
        .unwrap()
        .to_string()
}

#[test]
fn gen_is_seed_sensitive() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.csv");
    let b = dir.path().join("b.csv");
    wavedim(&["gen", "white", "--n", "10", "--seed", "1", "--out", a.to_str().unwrap()]);
    wavedim(&["gen", "white", "--n", "10", "--seed", "2", "--out", b.to_str().unwrap()]);
    assert_ne!(first_line(&a), first_line(&b));
}
