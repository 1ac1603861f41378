//! Validate auxiliary functions before using them in a PDMF.
//!
//! ```bash
//! cargo run --example custom_auxiliary
//! ```

use std::error::Error;

use pdmf::{
    validate_laf, validate_laf_with, AuxiliaryFunction, FuzzyNumber, GaussianKernel, LafCheck,
    PdmfSpec,
};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let reciprocal = AuxiliaryFunction::custom("reciprocal", |u: f64| 1.0 / (1.0 - u) - 1.0 / u);
    print!("{}", validate_laf(&reciprocal, 10_001));

    let kernel = GaussianKernel::new(0.0)?;
    let spec = PdmfSpec::new(-1.0, 0.0, 2.0, reciprocal, kernel, kernel)?;
    println!("f(-0.5) = {:.6}, f(1) = {:.6}", spec.membership(-0.5)?.get(), spec.membership(1.0)?.get());

    // A bounded function is rejected.
    let bounded = AuxiliaryFunction::custom("identity", |u: f64| u);
    let report = validate_laf(&bounded, 1001);
    print!("{report}");
    assert!(!report.passed());
    assert!(PdmfSpec::new(-1.0, 0.0, 2.0, bounded, kernel, kernel).is_err());

    // Logit diverges too slowly for the default thresholds.
    let logit = AuxiliaryFunction::custom("logit", |u: f64| (u / (1.0 - u)).ln());
    let loose = LafCheck { epsilon: 1e-8, threshold: 15.0 };
    println!(
        "logit: default {}, loose {}",
        validate_laf(&logit, 1001).passed(),
        validate_laf_with(&logit, 1001, &loose).passed()
    );
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
