//! Add two fitted numbers and compare the sum with the pointwise min/max of
//! the operands.
//!
//! ```bash
//! cargo run --example addition
//! ```

use std::error::Error;

use pdmf::{fit_gpdmf, ControlPoint, FuzzyNumber, GPdmf};

fn fit(a: f64, b: f64, c: f64, p: (f64, f64), q: (f64, f64)) -> Result<GPdmf, Box<dyn Error>> {
    let p = ControlPoint::new(p.0, p.1)?;
    let q = ControlPoint::new(q.0, q.1)?;
    Ok(fit_gpdmf(a, b, c, p, q)?)
}

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let b1 = fit(-1.0, 0.0, 1.0, (-0.5, 0.5), (0.5, 0.5))?;
    let b2 = fit(-1.0, 1.0, 4.0, (0.0, 0.5), (2.5, 0.5))?;
    let sum = b1 + b2;
    println!("b1      = {b1}");
    println!("b2      = {b2}");
    println!("b1 + b2 = {sum}");
    assert_eq!(sum.support(), (-2.0, 1.0, 5.0));

    println!("{:>6} {:>8} {:>8} {:>8}", "x", "sum", "min", "max");
    for i in 0..=14 {
        let x = -2.0 + 0.5 * i as f64;
        let f1 = b1.membership(x)?.get();
        let f2 = b2.membership(x)?.get();
        let f = sum.membership(x)?.get();
        println!("{x:>6.2} {f:>8.4} {:>8.4} {:>8.4}", f1.min(f2), f1.max(f2));
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
