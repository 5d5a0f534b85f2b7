//! The five maximal minors of the cycle-sum matrix: sizes, multidegrees and
//! vanishing at principal minors of a random matrix.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use pminors::exactpoly::Var;
use pminors::minor_maps::cycle_sums_of_matrix;
use pminors::nanson::{nanson_minors, quotient_generator_g};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let m: Vec<Vec<BigInt>> = [[3, -1, 4, 1], [-5, 9, 2, -6], [5, 3, -5, 8], [9, -7, 9, 3]]
        .iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    let point: BTreeMap<Var, BigInt> = cycle_sums_of_matrix(&m)?.iter().map(|(s, v)| (Var::c(s), v.clone())).collect();
    for r in nanson_minors()? {
        println!(
            "id {:?}: multidegree {:?}, {} C-terms of degree {}, {} A-terms, value {}",
            r.id,
            r.multidegree,
            r.size_c(),
            r.deg_c(),
            r.size_a(),
            r.poly_c.evaluate(&point)?
        );
    }
    println!("g = {}\ng at the same point: {}", quotient_generator_g(), quotient_generator_g().evaluate(&point)?);
    Ok(())
}
