//! Fit several control points per side with piecewise-constant densities.
//!
//! ```bash
//! cargo run --example step_density_fit
//! ```

use std::error::Error;

use pdmf::{
    check_monotone_fuzzy_number, fit_step_pdmf, AuxiliaryFunction, ControlPoint, Density,
    FuzzyNumber,
};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let lefts = [ControlPoint::new(1.0, 0.2)?, ControlPoint::new(2.0, 0.7)?];
    let rights = [
        ControlPoint::new(3.5, 0.9)?,
        ControlPoint::new(4.0, 0.6)?,
        ControlPoint::new(4.5, 0.1)?,
    ];
    let spec = fit_step_pdmf(0.0, 3.0, 5.0, &lefts, &rights, AuxiliaryFunction::Tangent)?;

    for (side, d) in [("left", spec.left_density()), ("right", spec.right_density())] {
        if let Density::Step(pdf) = d {
            println!("{side}: breakpoints {:?}", pdf.breakpoints());
            println!("{side}: densities   {:?}", pdf.densities());
        }
    }
    for p in lefts.iter().chain(&rights) {
        println!("f({}) = {} (target {})", p.x, spec.membership(p.x)?.get(), p.y);
    }
    let report = check_monotone_fuzzy_number(&spec, 1001);
    print!("{report}");
    assert!(report.passed());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
