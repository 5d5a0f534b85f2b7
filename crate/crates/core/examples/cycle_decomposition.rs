//! Products of equal-support cycles rewritten with shorter cycles, checked
//! against exhaustive search.

use pminors::cycle_decomp::{brute_force_decompose, format_cycles, product_decompose, Cycle, CycleGraph};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let cases: [&[&str]; 4] =
        [&["(1234)", "(1243)"], &["(123)", "(132)"], &["(1234)", "(1342)", "(1423)"], &["(12345)", "(13524)"]];
    for case in cases {
        let cs: Vec<Cycle> = case.iter().map(|c| Cycle::parse(c)).collect::<Result<_, _>>()?;
        let out = product_decompose(&cs)?;
        let g = CycleGraph::from_cycles(&cs);
        let brute = brute_force_decompose(&g, cs[0].len() - 1)?.expect("a decomposition exists");
        println!("{} = {}    (search: {})", format_cycles(&cs), format_cycles(&out), format_cycles(&brute));
    }
    Ok(())
}
