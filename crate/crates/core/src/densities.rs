//! Probability densities and their cumulative functions: the unit-variance
//! Gaussian kernel and piecewise-constant step densities.

use crate::error::{finite, open_interval, Error, Result};
use crate::numerics::{self, Probability};

/// Tolerance on total mass for [`StepPdf`].
pub const MASS_TOLERANCE: f64 = 1e-12;

/// Normal density with mean `mu` and unit variance.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GaussianKernel {
    mu: f64,
}

impl GaussianKernel {
    pub fn new(mu: f64) -> Result<Self> {
        Ok(GaussianKernel {
            mu: finite("mu", mu)?,
        })
    }

    pub fn mu(&self) -> f64 {
        self.mu
    }

    pub fn pdf(&self, t: f64) -> f64 {
        numerics::std_normal_pdf(t - self.mu)
    }

    /// Mass on `(-inf, z]`. Infinite `z` gives the limit value.
    pub fn cdf_at(&self, z: f64) -> Result<Probability> {
        if z.is_nan() {
            return Err(Error::NotFinite {
                what: "cdf argument",
                value: z,
            });
        }
        Ok(Probability::saturating(numerics::cdf_unchecked(z - self.mu)))
    }
}

pub fn gaussian_cdf_at(z: f64, kernel: &GaussianKernel) -> Result<Probability> {
    kernel.cdf_at(z)
}

/// Piecewise-constant density on `z_0 < z_1 < ... < z_k`, with density
/// `densities[i]` on the half-open interval `(z_i, z_{i+1}]` and zero outside
/// `[z_0, z_k]`.
#[derive(Debug, Clone, PartialEq)]
pub struct StepPdf {
    breakpoints: Vec<f64>,
    densities: Vec<f64>,
    // Mass on (-inf, z_i]; first entry 0, last entry 1.
    cumulative: Vec<f64>,
}

impl StepPdf {
    /// Validates nonnegativity and unit total mass.
    pub fn new(breakpoints: Vec<f64>, densities: Vec<f64>) -> Result<Self> {
        if breakpoints.len() < 2 || densities.len() != breakpoints.len() - 1 {
            return Err(Error::Invalid(format!(
                "step density needs k+1 breakpoints and k densities, got {} and {}",
                breakpoints.len(),
                densities.len()
            )));
        }
        for &z in &breakpoints {
            finite("breakpoint", z)?;
        }
        if let Some(i) = breakpoints.windows(2).position(|w| !(w[1] > w[0])) {
            return Err(Error::Ordering(format!(
                "breakpoints must be strictly increasing, z[{}] = {} >= z[{}] = {}",
                i,
                breakpoints[i],
                i + 1,
                breakpoints[i + 1]
            )));
        }
        if let Some(&d) = densities.iter().find(|d| !(d.is_finite() && **d >= 0.0)) {
            return Err(Error::OutOfRange {
                what: "density",
                value: d,
                range: "[0, inf)".into(),
            });
        }
        let mut cumulative = Vec::with_capacity(breakpoints.len());
        cumulative.push(0.0);
        let mut acc = 0.0;
        for (w, d) in breakpoints.windows(2).zip(&densities) {
            acc += d * (w[1] - w[0]);
            cumulative.push(acc);
        }
        if (acc - 1.0).abs() > MASS_TOLERANCE {
            return Err(Error::Invalid(format!("step density has total mass {acc}, expected 1")));
        }
        *cumulative.last_mut().unwrap() = 1.0;
        Ok(StepPdf {
            breakpoints,
            densities,
            cumulative,
        })
    }

    /// Builds from exact cumulative knots. Densities are the knot slopes,
    /// except where supplied explicitly.
    fn from_knots(breakpoints: Vec<f64>, densities: Vec<f64>, cumulative: Vec<f64>) -> Self {
        debug_assert_eq!(breakpoints.len(), cumulative.len());
        debug_assert_eq!(densities.len() + 1, breakpoints.len());
        StepPdf {
            breakpoints,
            densities,
            cumulative,
        }
    }

    pub fn breakpoints(&self) -> &[f64] {
        &self.breakpoints
    }

    pub fn densities(&self) -> &[f64] {
        &self.densities
    }

    /// `sum densities[i] * (z_{i+1} - z_i)`.
    pub fn total_mass(&self) -> f64 {
        self.breakpoints
            .windows(2)
            .zip(&self.densities)
            .map(|(w, d)| d * (w[1] - w[0]))
            .sum()
    }

    pub fn pdf(&self, t: f64) -> f64 {
        let z = &self.breakpoints;
        if !(t > z[0] && t <= z[z.len() - 1]) {
            return 0.0;
        }
        // First breakpoint >= t closes the interval containing t.
        let i = z.partition_point(|&b| b < t);
        self.densities[i - 1]
    }

    /// Piecewise-linear cumulative mass; exact at every breakpoint.
    pub fn cdf_at(&self, z: f64) -> Result<Probability> {
        if z.is_nan() {
            return Err(Error::NotFinite {
                what: "cdf argument",
                value: z,
            });
        }
        let bp = &self.breakpoints;
        let last = bp.len() - 1;
        if z <= bp[0] {
            return Ok(Probability::ZERO);
        }
        if z >= bp[last] {
            return Ok(Probability::ONE);
        }
        let i = bp.partition_point(|&b| b < z);
        if bp[i] == z {
            return Ok(Probability::saturating(self.cumulative[i]));
        }
        let lo = self.cumulative[i - 1];
        let hi = self.cumulative[i];
        let v = lo + self.densities[i - 1] * (z - bp[i - 1]);
        Ok(Probability::saturating(v.clamp(lo, hi)))
    }
}

pub fn step_cdf_at(z: f64, pdf: &StepPdf) -> Result<Probability> {
    pdf.cdf_at(z)
}

/// Density with mass `y` on `(z - 1, z]` and `1 - y` on `(z, z + 1]`, so the
/// CDF equals `y` at `z`.
pub fn build_two_step_pdf(z: f64, y: f64) -> Result<StepPdf> {
    build_multi_step_pdf(&[z], &[y])
}

/// Step density whose CDF interpolates `(zs[i], ys[i])` exactly, padded with
/// unit-width intervals of mass `ys[0]` on the left and `1 - ys[m-1]` on the
/// right.
pub fn build_multi_step_pdf(zs: &[f64], ys: &[f64]) -> Result<StepPdf> {
    if zs.is_empty() {
        return Err(Error::Invalid("at least one control abscissa required".into()));
    }
    if zs.len() != ys.len() {
        return Err(Error::Invalid(format!(
            "{} abscissae but {} ordinates",
            zs.len(),
            ys.len()
        )));
    }
    for &z in zs {
        finite("control abscissa", z)?;
    }
    for &y in ys {
        open_interval("control ordinate", y, 0.0, 1.0)?;
    }
    if let Some(i) = zs.windows(2).position(|w| !(w[1] > w[0])) {
        return Err(Error::Ordering(format!(
            "abscissae must be strictly increasing, z[{}] = {} >= z[{}] = {}",
            i,
            zs[i],
            i + 1,
            zs[i + 1]
        )));
    }
    if let Some(i) = ys.windows(2).position(|w| !(w[1] > w[0])) {
        return Err(Error::Ordering(format!(
            "ordinates must be strictly increasing, y[{}] = {} >= y[{}] = {}",
            i,
            ys[i],
            i + 1,
            ys[i + 1]
        )));
    }

    let m = zs.len();
    let first = zs[0] - 1.0;
    let tail = zs[m - 1] + 1.0;
    // The unit-width padding must be distinguishable from the first/last
    // control abscissa.
    if !(first < zs[0] && tail > zs[m - 1]) {
        return Err(Error::Invalid(format!(
            "control abscissae {} .. {} too large for unit padding",
            zs[0],
            zs[m - 1]
        )));
    }

    let mut breakpoints = Vec::with_capacity(m + 2);
    breakpoints.push(first);
    breakpoints.extend_from_slice(zs);
    breakpoints.push(tail);

    let mut densities = Vec::with_capacity(m + 1);
    densities.push(ys[0]);
    for i in 1..m {
        densities.push((ys[i] - ys[i - 1]) / (zs[i] - zs[i - 1]));
    }
    densities.push(1.0 - ys[m - 1]);

    let mut cumulative = Vec::with_capacity(m + 2);
    cumulative.push(0.0);
    cumulative.extend_from_slice(ys);
    cumulative.push(1.0);

    Ok(StepPdf::from_knots(breakpoints, densities, cumulative))
}

/// A density usable on one side of a PDMF.
#[derive(Debug, Clone, PartialEq)]
pub enum Density {
    Gaussian(GaussianKernel),
    Step(StepPdf),
}

impl Density {
    pub fn cdf_at(&self, z: f64) -> Result<Probability> {
        match self {
            Density::Gaussian(k) => k.cdf_at(z),
            Density::Step(s) => s.cdf_at(z),
        }
    }

    pub fn pdf(&self, t: f64) -> f64 {
        match self {
            Density::Gaussian(k) => k.pdf(t),
            Density::Step(s) => s.pdf(t),
        }
    }
}

impl From<GaussianKernel> for Density {
    fn from(k: GaussianKernel) -> Self {
        Density::Gaussian(k)
    }
}

impl From<StepPdf> for Density {
    fn from(s: StepPdf) -> Self {
        Density::Step(s)
    }
}
