//! Closes the modules generated by the homogenized generators D, E and F
//! and decomposes them into irreducible summands.

use pminors::lie_action::module_report;
use pminors::nanson::{homogenize, nanson_minor, to_minor_coordinates};
use pminors::relation_miner::{enumerate_monomials, mine_component, Coords, MinerConfig};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let cfg = MinerConfig::default();
    let mined = |d: [u32; 4]| -> Result<_, Box<dyn std::error::Error>> {
        let (_, rels) = mine_component(&enumerate_monomials(&d, Coords::CycleSums), &[], None, &cfg)?;
        Ok(rels[0].poly.clone())
    };
    let seeds = [(1, nanson_minor(1)?), (5, mined([4, 4, 6, 6])?), (26, mined([3, 6, 6, 6])?)];
    let mut total = 0;
    for (id, f) in seeds {
        let t = std::time::Instant::now();
        let h = homogenize(&to_minor_coordinates(&f)?, 12)?;
        let (report, _) = module_report(id, &h)?;
        total += report.dimension;
        println!("{}  ({:.1?})", report.to_json(), t.elapsed());
    }
    println!("total dimension {total}");
    Ok(())
}
