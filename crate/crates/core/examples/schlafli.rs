//! Expands the 2×2×2×2 hyperdeterminant and its cycle-sum form.
//!
//! Heavy: several minutes and a few GB of memory.

use std::time::Instant;

use pminors::hyperdet::{evaluate_table, minor_table, schlafli_expand, schlafli_in_cycle_sums};
use num_bigint::BigInt;
use num_traits::Zero;
use rand::{Rng, SeedableRng};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let t = Instant::now();
    let h = schlafli_expand()?;
    println!("hyperdeterminant: {} terms, degree {:?} ({:.1?})", h.len(), h.total_degree(), t.elapsed());
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
    let m: Vec<Vec<BigInt>> = (0..4).map(|_| (0..4).map(|_| BigInt::from(rng.gen_range(-9..=9))).collect()).collect();
    let v = evaluate_table(&h, &minor_table(&m)?);
    println!("value at a principal-minor table: {} (zero: {})", v, v.is_zero());
    let t = Instant::now();
    let c = schlafli_in_cycle_sums()?;
    println!("in cycle-sums: {} terms ({:.1?})", c.len(), t.elapsed());
    Ok(())
}
