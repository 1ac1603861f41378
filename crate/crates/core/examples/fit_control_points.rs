//! Fit a Gaussian PDMF through one control point per side and evaluate it.
//!
//! ```bash
//! cargo run --example fit_control_points
//! ```

use std::error::Error;

use pdmf::{fit_gpdmf, ControlPoint, FuzzyNumber};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let p = ControlPoint::new(0.0, 0.75)?;
    let q = ControlPoint::new(1.5, 0.6)?;
    let num = fit_gpdmf(-1.0, 1.0, 2.0, p, q)?;
    println!("fitted: {num}");

    for x in [-1.0, -0.5, 0.0, 0.5, 1.0, 1.5, 2.0] {
        println!("  f({x:>4}) = {:.6}", num.membership(x)?.get());
    }
    assert!((num.membership(p.x)?.get() - p.y).abs() < 1e-12);
    assert!((num.membership(q.x)?.get() - q.y).abs() < 1e-12);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
