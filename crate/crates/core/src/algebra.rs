//! Operational laws on Gaussian PDMFs.
//!
//! All operations act on the five-parameter form `<(a, b, c); mu-, mu+>`;
//! membership functions are never sampled.
//!
//! | operation | support | means |
//! |-----------|---------|-------|
//! | `b1 + b2` | `(a1+a2, b1+b2, c1+c2)` | `(mu1- + mu2-, mu1+ + mu2+)` |
//! | `l * b`, `l >= 0` | `(l a, l b, l c)` | `(l mu-, l mu+)` |
//! | `l * b`, `l < 0` | `(l c, l b, l a)` | `(l mu+, l mu-)` |
//! | `b1 - b2` | `(a1-c2, b1-b2, c1-a2)` | `(mu1- - mu2+, mu1+ - mu2-)` |
//!
//! Subtraction is not the inverse of addition: `b - b` is generally not the
//! crisp zero, and `b2 + (b1 - b2)` only recovers `b1` when `b2` is crisp.

use std::fmt;
use std::ops;

use crate::error::{Error, Result};
use crate::membership::GPdmf;

pub fn add(b1: &GPdmf, b2: &GPdmf) -> GPdmf {
    GPdmf::from_parts(
        b1.a() + b2.a(),
        b1.b() + b2.b(),
        b1.c() + b2.c(),
        b1.mu_left() + b2.mu_left(),
        b1.mu_right() + b2.mu_right(),
    )
}

/// Negative scalars reverse the support and swap the two means.
pub fn scale(lambda: f64, b: &GPdmf) -> GPdmf {
    // Adding +0 turns any -0 product into +0.
    let m = |v: f64| lambda * v + 0.0;
    if lambda >= 0.0 {
        GPdmf::from_parts(m(b.a()), m(b.b()), m(b.c()), m(b.mu_left()), m(b.mu_right()))
    } else {
        GPdmf::from_parts(m(b.c()), m(b.b()), m(b.a()), m(b.mu_right()), m(b.mu_left()))
    }
}

pub fn sub(b1: &GPdmf, b2: &GPdmf) -> GPdmf {
    GPdmf::from_parts(
        b1.a() - b2.c(),
        b1.b() - b2.b(),
        b1.c() - b2.a(),
        b1.mu_left() - b2.mu_right(),
        b1.mu_right() - b2.mu_left(),
    )
}

/// True iff every component of `b1` and `b2` differs by at most `tol`.
pub fn approx_equal(b1: &GPdmf, b2: &GPdmf, tol: f64) -> Result<bool> {
    if !(tol > 0.0) {
        return Err(Error::OutOfRange {
            what: "tolerance",
            value: tol,
            range: "(0, inf)".into(),
        });
    }
    Ok(b1
        .components()
        .iter()
        .zip(b2.components())
        .all(|(x, y)| (x - y).abs() <= tol))
}

/// Componentwise difference `lhs - rhs` of two five-parameter forms.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Residual {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub mu_left: f64,
    pub mu_right: f64,
}

impl Residual {
    pub fn between(lhs: &GPdmf, rhs: &GPdmf) -> Self {
        Residual {
            a: lhs.a() - rhs.a(),
            b: lhs.b() - rhs.b(),
            c: lhs.c() - rhs.c(),
            mu_left: lhs.mu_left() - rhs.mu_left(),
            mu_right: lhs.mu_right() - rhs.mu_right(),
        }
    }

    pub fn components(&self) -> [f64; 5] {
        [self.a, self.b, self.c, self.mu_left, self.mu_right]
    }

    pub fn max_abs(&self) -> f64 {
        self.components().iter().fold(0.0, |m, v| m.max(v.abs()))
    }

    pub fn support_max_abs(&self) -> f64 {
        self.a.abs().max(self.b.abs()).max(self.c.abs())
    }

    pub fn mu_max_abs(&self) -> f64 {
        self.mu_left.abs().max(self.mu_right.abs())
    }
}

/// Result of solving `b2 + X = b1` by `X = b1 - b2`, together with how well
/// `b2 + X` reproduces `b1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EquationCheck {
    pub solution: GPdmf,
    /// `b2 + solution`.
    pub recomposed: GPdmf,
    /// `recomposed - b1`, componentwise.
    pub residual: Residual,
}

impl EquationCheck {
    pub fn reproduces(&self, tol: f64) -> bool {
        self.residual.max_abs() <= tol
    }
}

impl fmt::Display for EquationCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "X = {}; b2 + X = {}; residual max {:e}",
            self.solution,
            self.recomposed,
            self.residual.max_abs()
        )
    }
}

/// Solves the fuzzy equation `b2 + X = b1` by direct subtraction.
pub fn solve_add_equation(b1: &GPdmf, b2: &GPdmf) -> EquationCheck {
    let solution = sub(b1, b2);
    let recomposed = add(b2, &solution);
    EquationCheck {
        solution,
        recomposed,
        residual: Residual::between(&recomposed, b1),
    }
}

impl ops::Add for GPdmf {
    type Output = GPdmf;

    fn add(self, rhs: GPdmf) -> GPdmf {
        add(&self, &rhs)
    }
}

impl ops::Sub for GPdmf {
    type Output = GPdmf;

    fn sub(self, rhs: GPdmf) -> GPdmf {
        sub(&self, &rhs)
    }
}

impl ops::Mul<GPdmf> for f64 {
    type Output = GPdmf;

    fn mul(self, rhs: GPdmf) -> GPdmf {
        scale(self, &rhs)
    }
}

impl ops::Neg for GPdmf {
    type Output = GPdmf;

    fn neg(self) -> GPdmf {
        scale(-1.0, &self)
    }
}
