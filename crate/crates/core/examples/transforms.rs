//! Principal minors, cycle-sums and the transforms between them, plus a
//! 3×3 realization of a minor vector.

use pminors::minor_maps::{
    cycle_sums_of_matrix, cyclesums_to_minors, minor_in_cyclesums, minors_to_cyclesums, principal_minors, rational_matrix,
    realize_3,
};
use pminors::subset::SubsetIndex;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let a = rational_matrix(&[vec![2, -1, 0, 3], vec![1, 4, 2, -2], vec![0, 5, -3, 1], vec![7, 1, 1, 1]]);
    let minors = principal_minors(&a)?;
    let cycles = minors_to_cyclesums(&minors)?;
    assert_eq!(cycles, cycle_sums_of_matrix(&a)?);
    assert_eq!(cyclesums_to_minors(&cycles)?, minors);
    println!("I\tA_I\tC_I");
    for (s, v) in minors.iter() {
        println!("{s}\t{v}\t{}", cycles.get(s));
    }
    println!("\nA_123 in cycle-sums: {}", minor_in_cyclesums(SubsetIndex::parse_digits("123").unwrap()));

    let b = rational_matrix(&[vec![1, 2, 3], vec![4, 5, 6], vec![7, 8, 10]]);
    let u = principal_minors(&b)?;
    for (k, m) in realize_3(&u)?.iter().enumerate() {
        println!("\nrealization {}:", k + 1);
        for row in m {
            println!("  {}", row.iter().map(|x| x.to_string()).collect::<Vec<_>>().join("  "));
        }
    }
    Ok(())
}
