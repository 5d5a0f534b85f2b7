//! Tests 16-vectors for being principal-minor vectors of a 4×4 matrix
//! against the full set of 65 generators (mined first, about two minutes).

use num_rational::BigRational;
use pminors::exactpoly::IntPoly;
use pminors::minor_maps::{is_realizable_4, principal_minors, rational_matrix};
use pminors::relation_miner::{census, CensusMode, Coords, MinerConfig};
use pminors::subset::SubsetIndex;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let c = census(Coords::CycleSums, 7, CensusMode::Orbit, &MinerConfig::default())?;
    let gens: Vec<IntPoly> = c.generators.iter().map(|(_, r)| r.poly.clone()).collect();
    println!("{} generators", gens.len());
    let u = principal_minors(&rational_matrix(&[vec![1, 2, 0, 3], vec![4, 1, 1, 0], vec![2, 2, 5, 1], vec![0, 7, 1, 1]]))?;
    println!("minors of a matrix: {:?}", is_realizable_4(&u, &gens)?);
    let mut v = u.clone();
    let top = SubsetIndex::full(4);
    v.set(top, u.get(top) + BigRational::from_integer(1.into()));
    println!("top minor perturbed: {:?}", is_realizable_4(&v, &gens)?);
    Ok(())
}
