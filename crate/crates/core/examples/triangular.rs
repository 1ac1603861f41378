//! A triangular fuzzy number expressed as a PDMF with a quantile auxiliary
//! function. Any kernel mean gives the same straight sides.
//!
//! ```bash
//! cargo run --example triangular
//! ```

use std::error::Error;

use pdmf::{triangular_as_pdmf, FuzzyNumber};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let (a, b, c) = (0.0, 1.0, 3.0);
    for mu in [0.0, 3.7, -2.0] {
        let spec = triangular_as_pdmf(a, b, c, mu)?;
        let mut worst: f64 = 0.0;
        for i in 0..=300 {
            let x = a + (c - a) * i as f64 / 300.0;
            let tri = if x <= b { (x - a) / (b - a) } else { (c - x) / (c - b) };
            worst = worst.max((spec.membership(x)?.get() - tri).abs());
        }
        println!("mu = {mu:>4}: max deviation from the triangle {worst:.2e}");
        assert!(worst < 1e-9);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
