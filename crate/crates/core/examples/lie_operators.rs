//! Raising and lowering operators on polynomials in the minors, and the
//! highest-weight test.

use pminors::exactpoly::parse_poly;
use pminors::lie_action::{apply_s4, elementary, is_highest_weight};
use pminors::nanson::{homogenize, nanson_minor, to_minor_coordinates};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let f = parse_poly("A_{12}*A_{}", ())?;
    for i in 1..=4 {
        println!("E{i}+ (A_12 A_0) = {}", elementary(i, true, &f)?);
        println!("E{i}- (A_12 A_0) = {}", elementary(i, false, &f)?);
    }
    println!("(12) acting: {}", apply_s4(&f, &[2, 1, 3, 4]));
    let top = parse_poly("A_{1234}^2", ())?;
    println!("A_1234^2 highest weight: {}", is_highest_weight(&top)?);

    let d = homogenize(&to_minor_coordinates(&nanson_minor(1)?)?, 12)?;
    println!("homogenized first generator: {} terms, highest weight: {}", d.len(), is_highest_weight(&d)?);
    Ok(())
}
