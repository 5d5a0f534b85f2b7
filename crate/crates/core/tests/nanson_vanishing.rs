//! The Nanson minors vanish at principal minors of random matrices, in
//! both coordinate systems.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use pminors::exactpoly::Var;
use pminors::minor_maps::{cycle_sums_of_matrix, principal_minors};
use pminors::nanson::{nanson_minors, quotient_generator_g};

fn random_matrix(rng: &mut impl Rng) -> Vec<Vec<BigInt>> {
    (0..4).map(|_| (0..4).map(|_| BigInt::from(rng.gen_range(-50..=50))).collect()).collect()
}

#[test]
fn vanish_in_both_coordinates() {
    let recs = nanson_minors().unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    for _ in 0..40 {
        let m = random_matrix(&mut rng);
        let c: BTreeMap<Var, BigInt> = cycle_sums_of_matrix(&m).unwrap().iter().map(|(s, v)| (Var::c(s), v.clone())).collect();
        let a: BTreeMap<Var, BigInt> = principal_minors(&m).unwrap().iter().map(|(s, v)| (Var::a(s), v.clone())).collect();
        for r in &recs {
            assert!(r.poly_c.evaluate(&c).unwrap().is_zero());
            assert!(r.poly_a.evaluate(&a).unwrap().is_zero());
        }
        assert!(!quotient_generator_g().evaluate(&c).unwrap().is_zero());
    }
}

#[test]
fn records_round_trip_through_json() {
    for r in nanson_minors().unwrap() {
        let line = r.to_json();
        assert_eq!(pminors::nanson::GeneratorRecord::from_json(&line).unwrap(), r);
    }
}
