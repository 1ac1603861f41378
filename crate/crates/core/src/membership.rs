//! Membership evaluation for generic PDMFs and the Gaussian specialization.

use std::fmt;

use crate::auxiliary::{self, validate_laf, AuxiliaryFunction};
use crate::densities::{Density, GaussianKernel};
use crate::error::{finite, Error, Result};
use crate::numerics::{self, Probability};

/// Normalized side coordinates closer than this to 0 or 1 evaluate to the
/// limit value instead of going through the auxiliary function.
pub const EDGE_SATURATION: f64 = 1e-12;

/// Grid used to vet custom auxiliary functions at construction.
const CUSTOM_LAF_GRID: usize = 10_001;

/// Anything with a support triple and a membership function.
pub trait FuzzyNumber {
    /// `(a, b, c)` with `a <= b <= c`.
    fn support(&self) -> (f64, f64, f64);

    fn membership(&self, x: f64) -> Result<Probability>;
}

fn check_support(a: f64, b: f64, c: f64) -> Result<()> {
    finite("a", a)?;
    finite("b", b)?;
    finite("c", c)?;
    if a <= b && b <= c {
        Ok(())
    } else {
        Err(Error::Ordering(format!("a <= b <= c required, got ({a}, {b}, {c})")))
    }
}

/// Generic PDMF `(a, b, c, h, p_left, p_right)`.
#[derive(Debug, Clone)]
pub struct PdmfSpec {
    a: f64,
    b: f64,
    c: f64,
    h: AuxiliaryFunction,
    p_left: Density,
    p_right: Density,
}

impl PdmfSpec {
    /// Custom auxiliary functions are validated on a 10 001-point grid.
    pub fn new(
        a: f64,
        b: f64,
        c: f64,
        h: AuxiliaryFunction,
        p_left: impl Into<Density>,
        p_right: impl Into<Density>,
    ) -> Result<Self> {
        check_support(a, b, c)?;
        if let AuxiliaryFunction::Custom { name, .. } = &h {
            let report = validate_laf(&h, CUSTOM_LAF_GRID);
            if !report.passed() {
                return Err(Error::Invalid(format!(
                    "auxiliary function '{name}' is not a valid LAF: {}",
                    report.failures.join("; ")
                )));
            }
        }
        Ok(PdmfSpec {
            a,
            b,
            c,
            h,
            p_left: p_left.into(),
            p_right: p_right.into(),
        })
    }

    pub fn auxiliary(&self) -> &AuxiliaryFunction {
        &self.h
    }

    pub fn left_density(&self) -> &Density {
        &self.p_left
    }

    pub fn right_density(&self) -> &Density {
        &self.p_right
    }
}

impl FuzzyNumber for PdmfSpec {
    fn support(&self) -> (f64, f64, f64) {
        (self.a, self.b, self.c)
    }

    fn membership(&self, x: f64) -> Result<Probability> {
        eval_membership(self, x)
    }
}

/// Which branch of the piecewise definition `x` falls in, with the
/// normalized side coordinate where applicable.
enum Branch {
    Zero,
    Peak,
    Left(f64),
    Right(f64),
}

fn branch(a: f64, b: f64, c: f64, x: f64) -> Branch {
    if x == b {
        Branch::Peak
    } else if x <= a || x >= c {
        Branch::Zero
    } else if x < b {
        Branch::Left((x - a) / (b - a))
    } else {
        Branch::Right((c - x) / (c - b))
    }
}

/// Cumulative mass at `h(u)`, with the limit values forced near the ends.
fn side_value(u: f64, h: impl FnOnce(f64) -> f64, cdf: impl FnOnce(f64) -> Result<Probability>) -> Result<Probability> {
    if u < EDGE_SATURATION {
        Ok(Probability::ZERO)
    } else if u > 1.0 - EDGE_SATURATION {
        Ok(Probability::ONE)
    } else {
        cdf(h(u))
    }
}

pub fn eval_membership(spec: &PdmfSpec, x: f64) -> Result<Probability> {
    finite("x", x)?;
    match branch(spec.a, spec.b, spec.c, x) {
        Branch::Zero => Ok(Probability::ZERO),
        Branch::Peak => Ok(Probability::ONE),
        Branch::Left(u) => side_value(u, |u| spec.h.eval_unchecked(u), |z| spec.p_left.cdf_at(z)),
        Branch::Right(u) => side_value(u, |u| spec.h.eval_unchecked(u), |z| spec.p_right.cdf_at(z)),
    }
}

/// Gaussian PDMF `<(a, b, c); mu_left, mu_right>`: tangent auxiliary function
/// with `N(mu_left, 1)` on the left side and `N(mu_right, 1)` on the right.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GPdmf {
    a: f64,
    b: f64,
    c: f64,
    mu_left: f64,
    mu_right: f64,
}

impl GPdmf {
    pub fn new(a: f64, b: f64, c: f64, mu_left: f64, mu_right: f64) -> Result<Self> {
        check_support(a, b, c)?;
        finite("mu_left", mu_left)?;
        finite("mu_right", mu_right)?;
        Ok(GPdmf {
            a,
            b,
            c,
            mu_left,
            mu_right,
        })
    }

    /// For arithmetic results, whose ordering follows from the operands'.
    pub(crate) fn from_parts(a: f64, b: f64, c: f64, mu_left: f64, mu_right: f64) -> Self {
        debug_assert!(a <= b && b <= c, "({a}, {b}, {c})");
        GPdmf {
            a,
            b,
            c,
            mu_left,
            mu_right,
        }
    }

    /// The crisp zero `<(0, 0, 0); 0, 0>`.
    pub const fn zero() -> Self {
        GPdmf {
            a: 0.0,
            b: 0.0,
            c: 0.0,
            mu_left: 0.0,
            mu_right: 0.0,
        }
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn b(&self) -> f64 {
        self.b
    }

    pub fn c(&self) -> f64 {
        self.c
    }

    pub fn mu_left(&self) -> f64 {
        self.mu_left
    }

    pub fn mu_right(&self) -> f64 {
        self.mu_right
    }

    pub fn support(&self) -> (f64, f64, f64) {
        (self.a, self.b, self.c)
    }

    /// `[a, b, c, mu_left, mu_right]`.
    pub fn components(&self) -> [f64; 5] {
        [self.a, self.b, self.c, self.mu_left, self.mu_right]
    }

    /// The equivalent generic spec.
    pub fn to_spec(&self) -> PdmfSpec {
        PdmfSpec {
            a: self.a,
            b: self.b,
            c: self.c,
            h: AuxiliaryFunction::Tangent,
            p_left: Density::Gaussian(GaussianKernel::new(self.mu_left).expect("finite mu")),
            p_right: Density::Gaussian(GaussianKernel::new(self.mu_right).expect("finite mu")),
        }
    }

    pub fn is_valid(&self) -> bool {
        check_support(self.a, self.b, self.c).is_ok()
            && self.mu_left.is_finite()
            && self.mu_right.is_finite()
    }
}

impl fmt::Display for GPdmf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "<({}, {}, {}); {}, {}>",
            self.a, self.b, self.c, self.mu_left, self.mu_right
        )
    }
}

impl FuzzyNumber for GPdmf {
    fn support(&self) -> (f64, f64, f64) {
        GPdmf::support(self)
    }

    fn membership(&self, x: f64) -> Result<Probability> {
        eval_gpdmf(self, x)
    }
}

/// `Phi(tan(pi (x-a)/(b-a) - pi/2) - mu_left)` on `(a, b)`, the mirrored
/// expression on `(b, c)`.
pub fn eval_gpdmf(num: &GPdmf, x: f64) -> Result<Probability> {
    finite("x", x)?;
    let gauss = |mu: f64| {
        move |z: f64| Ok(Probability::saturating(numerics::cdf_unchecked(z - mu)))
    };
    match branch(num.a, num.b, num.c, x) {
        Branch::Zero => Ok(Probability::ZERO),
        Branch::Peak => Ok(Probability::ONE),
        Branch::Left(u) => side_value(u, auxiliary::tangent_unchecked, gauss(num.mu_left)),
        Branch::Right(u) => side_value(u, auxiliary::tangent_unchecked, gauss(num.mu_right)),
    }
}

/// `n` uniform points over `[a - w/10, c + w/10]` (`w = c - a`) plus the
/// three support points, sorted by abscissa. Always `n + 3` pairs.
pub fn sample_curve<F: FuzzyNumber + ?Sized>(num: &F, n: usize) -> Result<Vec<(f64, f64)>> {
    if n < 2 {
        return Err(Error::Invalid(format!("curve needs at least 2 samples, got {n}")));
    }
    let (a, b, c) = num.support();
    let xs = curve_abscissae(a, b, c, n);
    xs.into_iter()
        .map(|x| Ok((x, num.membership(x)?.get())))
        .collect()
}

pub(crate) fn curve_abscissae(a: f64, b: f64, c: f64, n: usize) -> Vec<f64> {
    let margin = 0.1 * (c - a);
    let lo = a - margin;
    let hi = c + margin;
    let step = (hi - lo) / (n - 1) as f64;
    let mut xs: Vec<f64> = (0..n)
        .map(|i| if i == n - 1 { hi } else { lo + i as f64 * step })
        .collect();
    xs.extend([a, b, c]);
    xs.sort_by(|p, q| p.total_cmp(q));
    xs
}

/// Outcome of the structural fuzzy-number checks.
#[derive(Debug, Clone, PartialEq)]
pub struct StructureReport {
    pub grid_size: usize,
    pub nondecreasing_left: bool,
    pub nonincreasing_right: bool,
    pub normal_at_peak: bool,
    pub zero_outside_support: bool,
    pub within_unit_range: bool,
    pub failures: Vec<String>,
}

impl StructureReport {
    pub fn passed(&self) -> bool {
        self.nondecreasing_left
            && self.nonincreasing_right
            && self.normal_at_peak
            && self.zero_outside_support
            && self.within_unit_range
    }
}

impl fmt::Display for StructureReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mark = |ok: bool| if ok { "pass" } else { "FAIL" };
        writeln!(f, "fuzzy number structure (grid {}):", self.grid_size)?;
        writeln!(f, "  nondecreasing on (a,b): {}", mark(self.nondecreasing_left))?;
        writeln!(f, "  nonincreasing on (b,c): {}", mark(self.nonincreasing_right))?;
        writeln!(f, "  f(b) = 1:               {}", mark(self.normal_at_peak))?;
        writeln!(f, "  zero outside [a,c]:     {}", mark(self.zero_outside_support))?;
        writeln!(f, "  range within [0,1]:     {}", mark(self.within_unit_range))?;
        for msg in &self.failures {
            writeln!(f, "  - {msg}")?;
        }
        Ok(())
    }
}

/// Checks monotone structure on `grid_size` points per side, normality at the
/// peak, vanishing outside the support and the unit range.
pub fn check_monotone_fuzzy_number<F: FuzzyNumber + ?Sized>(num: &F, grid_size: usize) -> StructureReport {
    let n = grid_size.max(3);
    let (a, b, c) = num.support();
    let mut failures = Vec::new();
    let mut within_unit_range = true;

    let mut eval = |x: f64, failures: &mut Vec<String>| -> Option<f64> {
        match num.membership(x) {
            Ok(p) => {
                let v = p.get();
                if !(0.0..=1.0).contains(&v) {
                    within_unit_range = false;
                    failures.push(format!("f({x}) = {v} outside [0, 1]"));
                }
                Some(v)
            }
            Err(e) => {
                failures.push(format!("f({x}) failed: {e}"));
                None
            }
        }
    };

    let mut side = |lo: f64, hi: f64, increasing: bool, failures: &mut Vec<String>| -> bool {
        if !(lo < hi) {
            return true;
        }
        let step = (hi - lo) / (n - 1) as f64;
        let mut prev: Option<f64> = None;
        let mut ok = true;
        for i in 0..n {
            let x = if i == n - 1 { hi } else { lo + i as f64 * step };
            let Some(v) = eval(x, failures) else {
                ok = false;
                continue;
            };
            if let Some(p) = prev {
                let bad = if increasing { v < p } else { v > p };
                if bad && ok {
                    failures.push(format!("monotonicity broken at x = {x}: {p} -> {v}"));
                    ok = false;
                }
            }
            prev = Some(v);
        }
        ok
    };

    let nondecreasing_left = side(a, b, true, &mut failures);
    let nonincreasing_right = side(b, c, false, &mut failures);

    let peak = num.membership(b).map(|p| p.get());
    let normal_at_peak = peak == Ok(1.0);
    if !normal_at_peak {
        failures.push(format!("f(b) = {peak:?}, expected 1"));
    }

    let w = (c - a).max(1.0);
    let mut zero_outside_support = true;
    let outside = [a - w, a - 0.5 * w, a - 1e-9 * w, c + 1e-9 * w, c + 0.5 * w, c + w];
    let mut probes: Vec<f64> = outside.to_vec();
    if a < b {
        probes.push(a);
    }
    if b < c {
        probes.push(c);
    }
    for x in probes {
        match num.membership(x) {
            Ok(p) if p.get() == 0.0 => {}
            other => {
                zero_outside_support = false;
                failures.push(format!("f({x}) = {other:?}, expected 0"));
            }
        }
    }

    StructureReport {
        grid_size: n,
        nondecreasing_left,
        nonincreasing_right,
        normal_at_peak,
        zero_outside_support,
        within_unit_range,
        failures,
    }
}
