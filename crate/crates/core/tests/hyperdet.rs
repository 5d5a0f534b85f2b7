//! Hyperdeterminant pieces against independent constructions.

use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

use pminors::hyperdet::{
    cayley_222, coefficients_are_minors, node_membership_check, quartic_discriminant, NodeStatus, WidePoly,
};
use pminors::minor_maps::rational_matrix;

fn c(x: i64) -> WidePoly {
    WidePoly::constant(x as i128)
}

fn value(p: &WidePoly) -> i128 {
    assert!(p.terms.keys().all(|&k| k == 0));
    p.terms.get(&0).copied().unwrap_or(0)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    /// Cayley's form is the discriminant of the pencil `det(B0 + t B1)`.
    #[test]
    fn cayley_is_pencil_discriminant(b in prop::array::uniform8(-6i64..=6)) {
        let w: [WidePoly; 8] = std::array::from_fn(|k| c(b[k]));
        let h = value(&cayley_222(&w).unwrap());
        // slices by the first index: B_i[j][k] = b[4i + 2j + k]
        let (a0, b0, c0, d0) = (b[0], b[1], b[2], b[3]);
        let (a1, b1, c1, d1) = (b[4], b[5], b[6], b[7]);
        let q2 = a1 * d1 - b1 * c1;
        let q1 = a0 * d1 + a1 * d0 - b0 * c1 - b1 * c0;
        let q0 = a0 * d0 - b0 * c0;
        prop_assert_eq!(h, (q1 * q1 - 4 * q0 * q2) as i128);
    }

    /// Discriminant of a quartic with integer roots.
    #[test]
    fn quartic_discriminant_from_roots(r in prop::array::uniform4(-5i64..=5), lead in 1i64..=3) {
        // lead * Π (t - r_i)
        let mut coef = vec![lead as i128];
        for &x in &r {
            let mut next = vec![0i128; coef.len() + 1];
            for (k, &a) in coef.iter().enumerate() {
                next[k] += a;
                next[k + 1] -= a * x as i128;
            }
            coef = next;
        }
        let q: [WidePoly; 5] = std::array::from_fn(|k| WidePoly::constant(coef[k]));
        let mut expected = (lead as i128).pow(6);
        for i in 0..4 {
            for j in i + 1..4 {
                expected *= ((r[i] - r[j]) as i128).pow(2);
            }
        }
        prop_assert_eq!(value(&quartic_discriminant(&q).unwrap()), expected);
    }

    #[test]
    fn multilinear_coefficients_are_minors(m in prop::collection::vec(prop::collection::vec(-20i64..=20, 4), 4)) {
        prop_assert!(coefficients_are_minors(&rational_matrix(&m)).unwrap());
    }
}

#[test]
fn node_check_on_fixed_matrices() {
    let mats = [
        vec![vec![-6, 8, -8, -2], vec![-7, 5, 4, 5], vec![10, 2, -4, -7], vec![5, -10, 2, 3]],
        vec![vec![-3, 1, 4, -1], vec![5, 9, -2, 6], vec![5, -3, 5, 8], vec![9, 7, -9, 3]],
    ];
    for m in mats {
        let r = node_membership_check(&rational_matrix(&m)).unwrap();
        assert_eq!(r.status, NodeStatus::Pass, "{}", r.to_json());
        assert_eq!(r.points.len(), 2);
        assert!(r.checks.values().all(|&b| b));
        let disc: BigRational = r.discriminant.parse().unwrap();
        assert_ne!(disc, BigRational::from_integer(BigInt::from(0)));
    }
}

#[test]
fn double_root_is_nongeneric() {
    let m = vec![vec![1, 2, 3, 4], vec![5, -6, 7, 8], vec![9, 10, -11, 12], vec![13, 14, 15, 17]];
    let r = node_membership_check(&rational_matrix(&m)).unwrap();
    assert_eq!(r.status, NodeStatus::Nongeneric);
    assert_eq!(r.eliminant, "w^2 + 2*w + 1");
    assert_eq!(r.discriminant, "0");
    assert!(r.points.is_empty());
}
