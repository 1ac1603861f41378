//! Subtract numbers and solve `b2 + X = b1` by `X = b1 - b2`.
//!
//! ```bash
//! cargo run --example subtraction_and_equations
//! ```

use std::error::Error;

use pdmf::{solve_add_equation, GPdmf};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let b1 = GPdmf::new(-1.0, 0.0, 1.0, 0.0, 0.0)?;
    let b3 = GPdmf::new(-1.0, 1.0, 2.0, -0.6745, -0.4399)?;
    println!("b3 - b1 = {}", b3 - b1);
    let copy = GPdmf::new(-1.0, 1.0, 2.0, -0.6745, -0.4399)?;
    println!("b3 - b3 = {}  (not the crisp zero)", b3 - copy);

    let check = solve_add_equation(&b3, &b1);
    println!("{check}");
    println!(
        "support residual {}, mean residual {}",
        check.residual.support_max_abs(),
        check.residual.mu_max_abs()
    );

    // With a crisp right-hand operand the subtraction is an exact inverse.
    let crisp = GPdmf::new(0.5, 0.5, 0.5, 0.25, 0.25)?;
    let exact = solve_add_equation(&b3, &crisp);
    println!("crisp operand: {exact}");
    assert!(exact.reproduces(1e-12));
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
