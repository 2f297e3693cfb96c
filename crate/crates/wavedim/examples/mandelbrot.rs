//! Mandelbrot escape-time grid rendered to a PGM image, plus a tortuosity
//! scan of one horizontal line through the set: the boundary crossings are
//! where the escape counts are roughest.
//!
//! Run with: cargo run --release --example mandelbrot

use std::fs::File;

use wavedim::io::write_pgm;
use wavedim::{mandelbrot_grid, sliding_q, MandelbrotWindow};

fn main() -> wavedim::Result<()> {
    let window = MandelbrotWindow::default();
    let grid = mandelbrot_grid(&window)?;
    write_pgm(File::create("mandelbrot.pgm")?, &grid, window.max_iter)?;
    println!(
        "wrote mandelbrot.pgm ({}x{}, max_iter {})",
        window.width, window.height, window.max_iter
    );

    // The row through the real axis: escape counts as a 1-D series.
    let row: Vec<f64> = grid[window.height / 2].iter().map(|&c| f64::from(c)).collect();
    let profile = sliding_q(&row, 40)?;
    let (center, q) = profile
        .centers
        .iter()
        .zip(&profile.q)
        .filter_map(|(&c, q)| q.map(|q| (c, q)))
        .max_by(|a, b| a.1.total_cmp(&b.1))
        .unwrap();
    let x = window.x_min + (center as f64 + 0.5) * (window.x_max - window.x_min) / window.width as f64;
    println!("roughest window on the real-axis row: Q = {q:.4} near x = {x:.4}");
    Ok(())
}
