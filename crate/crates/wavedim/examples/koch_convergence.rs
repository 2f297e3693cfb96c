//! Sevcik dimension of the Koch curve, stage by stage, converging to the
//! theoretical ln 4 / ln 3.
//!
//! Run with: cargo run --release --example koch_convergence

use wavedim::{koch_curve, sevcik_dimension, sevcik_on_koch};

const KOCH_LIMIT: f64 = 1.261_859_507_142_914_8; // ln 4 / ln 3

fn main() -> wavedim::Result<()> {
    println!("{:>5}  {:>8}  {:>12}  {:>12}  {:>10}", "stage", "points", "D (points)", "D (closed)", "error");
    for stage in 1..=8 {
        let w = koch_curve(stage)?;
        let from_points = sevcik_dimension(&w)?;
        let closed = sevcik_on_koch(stage)?;
        println!(
            "{:>5}  {:>8}  {:>12.8}  {:>12.8}  {:>10.2e}",
            stage,
            w.len(),
            from_points.value,
            closed.value,
            (closed.value - KOCH_LIMIT).abs()
        );
    }
    println!("theoretical limit ln4/ln3 = {KOCH_LIMIT:.8}");
    Ok(())
}
