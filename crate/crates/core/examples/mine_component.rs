//! Mines minimal generators of one multidegree by interpolation.
//!
//! `cargo run --release --example mine_component -- 4 4 6 6`

use pminors::relation_miner::{census_box, Coords, MinerConfig};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<u32> = std::env::args().skip(1).map(|s| s.parse()).collect::<Result<_, _>>()?;
    let d: [u32; 4] = if args.is_empty() { [4, 4, 6, 6] } else { args.try_into().map_err(|_| "need four exponents")? };
    let c = census_box(Coords::CycleSums, &d, &MinerConfig::default())?;
    let s = c.components.iter().find(|s| s.multidegree == d).unwrap();
    println!("{} monomials, kernel {}, lower rank {}, minimal {}", s.monomials, s.kernel_dim, s.lower_rank, s.minimal);
    for (id, r) in c.generators.iter().filter(|(_, r)| r.multidegree == d) {
        println!("table row {:?}: {} C-terms, {} A-terms", id, r.poly.len(), r.minor_form().len());
        if r.poly.len() <= 60 {
            println!("{}", r.poly);
        }
    }
    Ok(())
}
