//! Exact node-component check on random integer matrices.
//!
//! `cargo run --release --example node_check -- [samples] [seed]`

use pminors::hyperdet::{node_check_batch, NodeStatus};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let samples: usize = args.next().map(|s| s.parse()).transpose()?.unwrap_or(20);
    let seed: u64 = args.next().map(|s| s.parse()).transpose()?.unwrap_or(3);
    let batch = node_check_batch(samples, seed)?;
    for r in &batch.reports {
        println!("{:?}  disc = {}  eliminant = {}", r.status, r.discriminant, r.eliminant);
    }
    println!("redraws: {}", batch.redraws.len());
    println!("passed {}/{}", batch.passed(), samples);
    if batch.reports.iter().any(|r| r.status == NodeStatus::Fail) {
        std::process::exit(1);
    }
    Ok(())
}
