//! Scale a number by positive and negative factors. A negative factor
//! mirrors the support and swaps the two means.
//!
//! ```bash
//! cargo run --example scalar_multiplication
//! ```

use std::error::Error;

use pdmf::{scale, GPdmf};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let b3 = GPdmf::new(-1.0, 1.0, 2.0, -0.6745, -0.4399)?;
    for lambda in [3.0, 0.5, 0.0, -1.0, -2.0] {
        let r = scale(lambda, &b3);
        println!("{lambda:>5} * b3 = {r}");
    }
    let flipped = -2.0 * b3;
    assert_eq!(flipped.support(), (-4.0, -2.0, 2.0));
    assert!((flipped.mu_left() - 0.8798).abs() < 1e-12);

    // Mixed-sign factors do not distribute over the scalar sum.
    let split = 2.0 * b3 + -1.0 * b3;
    println!("2*b3 + (-1)*b3 = {split}, but 1*b3 = {b3}");
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
