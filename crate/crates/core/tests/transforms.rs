//! Minor/cycle-sum transforms against direct evaluation on random matrices.

use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

use pminors::exactpoly::{IntPoly, Universe};
use pminors::minor_maps::{
    cycle_sums_of_matrix, cyclesums_to_minors, minors_to_cyclesums, principal_minors, realize_3, MinorVector,
};

fn matrix(n: usize) -> impl Strategy<Value = Vec<Vec<BigInt>>> {
    prop::collection::vec(prop::collection::vec((-9i64..=9).prop_map(BigInt::from), n), n)
}

fn rational_vector(n: usize) -> impl Strategy<Value = MinorVector<BigRational>> {
    prop::collection::vec((-30i64..=30, 1i64..=7), (1usize << n) - 1).prop_map(move |v| {
        let mut vals = vec![BigRational::from_integer(1.into())];
        vals.extend(v.into_iter().map(|(a, b)| BigRational::new(a.into(), b.into())));
        MinorVector::from_values(n, vals).unwrap()
    })
}

#[test]
fn symbolic_round_trips() {
    for n in 1..=4 {
        let u = MinorVector::<IntPoly>::symbolic(n, Universe::A);
        assert_eq!(cyclesums_to_minors(&minors_to_cyclesums(&u).unwrap()).unwrap(), u, "n = {n}");
        let v = MinorVector::<IntPoly>::symbolic(n, Universe::C);
        assert_eq!(minors_to_cyclesums(&cyclesums_to_minors(&v).unwrap()).unwrap(), v, "n = {n}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn psi_of_minors_is_cycle_sums(m in (1usize..=5).prop_flat_map(matrix)) {
        let a = principal_minors(&m).unwrap();
        prop_assert_eq!(minors_to_cyclesums(&a).unwrap(), cycle_sums_of_matrix(&m).unwrap());
    }

    #[test]
    fn minors_from_cycle_sums(m in matrix(4)) {
        let c = cycle_sums_of_matrix(&m).unwrap();
        prop_assert_eq!(cyclesums_to_minors(&c).unwrap(), principal_minors(&m).unwrap());
    }

    #[test]
    fn numeric_round_trip_five(u in rational_vector(5)) {
        prop_assert_eq!(&cyclesums_to_minors(&minors_to_cyclesums(&u).unwrap()).unwrap(), &u);
        prop_assert_eq!(&minors_to_cyclesums(&cyclesums_to_minors(&u).unwrap()).unwrap(), &u);
    }

    #[test]
    fn realize_3_reproduces_minors(u in rational_vector(3)) {
        let mats = realize_3(&u).unwrap();
        prop_assert!(!mats.is_empty());
        for m in mats {
            let back = principal_minors(&m).unwrap();
            for (s, v) in u.iter() {
                prop_assert_eq!(back.get(s), &pminors::exactpoly::QuadExt::rational(v.clone()));
            }
        }
    }
}

/// Every pattern of vanishing 2-cycle values, with and without a 3-cycle.
#[test]
fn realize_3_degenerate_branches() {
    use pminors::subset::SubsetIndex;
    let q = |x: i64| BigRational::from_integer(x.into());
    for zeros in 0u8..8 {
        for s in [0, 5, -7] {
            let gamma = |k: u8, v: i64| if zeros & (1 << k) != 0 { q(0) } else { q(v) };
            let c = MinorVector::from_fn(3, |t| match t.digits().as_str() {
                "" => q(1),
                "1" => q(2),
                "2" => q(-1),
                "3" => q(3),
                "12" => gamma(0, 6),
                "13" => gamma(1, -2),
                "23" => gamma(2, 3),
                _ => q(s),
            });
            let u = cyclesums_to_minors(&c).unwrap();
            let mats = realize_3(&u).unwrap();
            assert!(!mats.is_empty());
            for m in mats {
                let back = principal_minors(&m).unwrap();
                for t in SubsetIndex::all(3) {
                    assert_eq!(back.get(t), &pminors::exactpoly::QuadExt::rational(u.get(t).clone()), "zeros {zeros:03b}, s {s}");
                }
            }
        }
    }
}
