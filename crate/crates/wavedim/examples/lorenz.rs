//! Lorenz trajectory (RK4) and the tortuosity of its coordinate traces.
//! Writes the trajectory to lorenz.csv for plotting.
//!
//! Run with: cargo run --release --example lorenz

use std::fs::File;

use wavedim::io::write_triples;
use wavedim::{higuchi_dimension, lorenz_trajectory, HiguchiConfig, LorenzParams};

fn main() -> wavedim::Result<()> {
    let params = LorenzParams::default();
    let traj = lorenz_trajectory(&params)?;
    println!(
        "integrated {} steps at dt = {} (sigma = {}, rho = {}, beta = {})",
        traj.len() - 1,
        params.dt,
        params.sigma,
        params.rho,
        params.beta
    );
    let last = traj.last().unwrap();
    println!("final state: ({:.6}, {:.6}, {:.6})", last[0], last[1], last[2]);

    // Skip the transient, then estimate the complexity of each coordinate.
    let skip = 5_000;
    let ks = wavedim::default_higuchi_k(traj.len() - skip);
    let cfg = HiguchiConfig::new(ks);
    for (idx, name) in ["x", "y", "z"].iter().enumerate() {
        let series: Vec<f64> = traj[skip..].iter().map(|p| p[idx]).collect();
        let (d, _) = higuchi_dimension(&series, &cfg)?;
        println!("{name}(t) Higuchi dimension: {:.4}", d.value);
    }

    write_triples(File::create("lorenz.csv")?, &traj)?;
    println!("wrote lorenz.csv ({} rows)", traj.len());
    Ok(())
}
