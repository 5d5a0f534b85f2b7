//! Lexicographic Gröbner bases and the ideal of 3×3 minors of `c + diag(x, y, z, w)`.

use pminors::exactpoly::parse_poly;
use pminors::hyperdet::{buchberger_lex, multilinear_form, node_membership_check, node_vars, shifted_matrix_ideal};
use pminors::minor_maps::rational_matrix;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let vars = node_vars();
    let gens = ["x^2 + y^2 + z^2 - 1", "x - y", "y - z^2"].map(|s| parse_poly(s, ()).unwrap());
    let gb = buchberger_lex(&gens, &vars[..3])?;
    println!("basis of a small system ({} reductions):", gb.reductions);
    for g in gb.basis() {
        println!("  {g}");
    }

    let c = rational_matrix(&[vec![-6, 8, -8, -2], vec![-7, 5, 4, 5], vec![10, 2, -4, -7], vec![5, -10, 2, 3]]);
    println!("F = {}", multilinear_form(&c)?);
    let gb = buchberger_lex(&shifted_matrix_ideal(&c)?, &vars)?;
    println!("3x3 minors: initial ideal {:?}", gb.initial_ideal().iter().map(|m| m.to_string()).collect::<Vec<_>>());
    for g in gb.basis() {
        println!("  {g}");
    }
    println!("{}", node_membership_check(&c)?.to_json());
    Ok(())
}
