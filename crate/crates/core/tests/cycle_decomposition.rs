//! Every pair and triple of distinct equal-support cycles: the decomposition
//! preserves the cycle monomial, uses only shorter cycles, and a
//! decomposition also exists by exhaustive search.

use pminors::cli::checks::cycle_instances;
use pminors::cycle_decomp::{brute_force_decompose, product_decompose, Cycle, CycleGraph};
use pminors::exactpoly::Monomial;

fn monomial_product(cs: &[Cycle]) -> Monomial {
    cs.iter().fold(Monomial::one(), |m, c| m.mul(&c.monomial()))
}

#[test]
fn instance_counts() {
    let inst = cycle_instances();
    let four_pairs = inst.iter().filter(|i| i.len() == 2 && i[0].len() == 4).count();
    let triples = inst.iter().filter(|i| i.len() == 3).count();
    let three = inst.iter().filter(|i| i[0].len() == 3).count();
    let five = inst.iter().filter(|i| i[0].len() == 5).count();
    assert_eq!((four_pairs, triples), (15, 20));
    // ten supports with one pair each; 24 five-cycles give 276 pairs
    assert_eq!((three, five), (10, 276));
}

#[test]
fn all_instances_decompose() {
    for inst in cycle_instances() {
        let k = inst[0].len();
        let out = product_decompose(&inst).unwrap_or_else(|e| panic!("{inst:?}: {e}"));
        assert!(out.iter().all(|c| c.len() < k), "{inst:?} -> {out:?}");
        assert_eq!(monomial_product(&out), monomial_product(&inst), "{inst:?}");
        let g = CycleGraph::from_cycles(&inst);
        let brute = brute_force_decompose(&g, k - 1).unwrap().expect("brute force finds a decomposition");
        assert_eq!(monomial_product(&brute), monomial_product(&inst));
    }
}

#[test]
fn equal_cycles_are_rejected() {
    let c = Cycle::parse("(1234)").unwrap();
    assert!(product_decompose(&[c.clone(), c]).is_err());
}

#[test]
fn single_long_cycle_has_no_shorter_decomposition() {
    let c = Cycle::parse("(12345)").unwrap();
    let g = CycleGraph::from_cycles([&c]);
    assert_eq!(brute_force_decompose(&g, 4).unwrap(), None);
}
