//! Mines every minimal generator of multidegree at most `MAX` (default 7)
//! in cycle-sum coordinates and compares with the reference table.

use pminors::relation_miner::{census, format_comparison, Census, CensusMode, Coords, MinerConfig};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let max: u32 = std::env::args().nth(1).map_or(Ok(7), |s| s.parse())?;
    let t = std::time::Instant::now();
    let c = census(Coords::CycleSums, max, CensusMode::Orbit, &MinerConfig::default())?;
    println!("{} minimal generators in {:.1?}", c.total_minimal(), t.elapsed());
    for (d, k) in c.generator_degrees() {
        println!("{d:?}: {k}");
    }
    let recs = c.records()?;
    print!("{}", format_comparison(&Census::compare(&recs)));
    Ok(())
}
