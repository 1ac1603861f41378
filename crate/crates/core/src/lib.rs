//! Fuzzy numbers whose membership functions are built from probability
//! densities.
//!
//! A membership function on a support triple `a <= b <= c` is obtained by
//! pushing each side interval through an auxiliary function `h` onto the
//! real line and reading off the cumulative mass of a density there:
//!
//! ```text
//! f(x) = P_left(h((x - a) / (b - a)))    for a < x < b
//! f(b) = 1
//! f(x) = P_right(h((c - x) / (c - b)))   for b < x < c
//! f(x) = 0                               otherwise
//! ```
//!
//! The Gaussian specialization ([`GPdmf`]) uses the tangent auxiliary
//! function and unit-variance normal densities. It is fully described by
//! five numbers `<(a, b, c); mu_left, mu_right>`, and its arithmetic works on
//! those numbers directly (see [`algebra`]).
//!
//! ```
//! use pdmf::{fit_gpdmf, ControlPoint};
//!
//! let p = ControlPoint::new(0.0, 0.75).unwrap();
//! let q = ControlPoint::new(1.5, 0.6).unwrap();
//! let num = fit_gpdmf(-1.0, 1.0, 2.0, p, q).unwrap();
//! assert!((num.mu_left() + 0.674489750196).abs() < 1e-8);
//!
//! let tripled = 3.0 * num;
//! assert_eq!(tripled.support(), (-3.0, 3.0, 6.0));
//! ```

// `!(x > y)` is used on purpose so that NaN fails the check.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod algebra;
pub mod auxiliary;
pub mod cli;
pub mod densities;
mod error;
pub mod fitting;
pub mod membership;
pub mod numerics;

pub use algebra::{add, approx_equal, scale, solve_add_equation, sub, EquationCheck, Residual};
pub use auxiliary::{
    left_map, quantile_h, right_map, tangent_h, validate_laf, validate_laf_with, AuxKind,
    AuxiliaryFunction, LafCheck, LafReport,
};
pub use densities::{
    build_multi_step_pdf, build_two_step_pdf, gaussian_cdf_at, step_cdf_at, Density,
    GaussianKernel, StepPdf,
};
pub use error::{Error, Result};
pub use fitting::{
    fit_gpdmf, fit_mu_left, fit_mu_right, fit_step_pdmf, triangular_as_pdmf, ControlPoint,
};
pub use membership::{
    check_monotone_fuzzy_number, eval_gpdmf, eval_membership, sample_curve, FuzzyNumber, GPdmf,
    PdmfSpec, StructureReport,
};
pub use numerics::{std_normal_cdf, std_normal_quantile, Probability};
