//! Auxiliary functions: increasing bijections `(0, 1) -> R` used to stretch a
//! side interval of the support over the whole real line.
//!
//! The left map is `h((x - a) / (b - a))` on `(a, b)`. The right map reuses
//! the same `h` with a reflected argument, `h((c - x) / (c - b))` on `(b, c)`,
//! which makes it decreasing in `x`.

use std::fmt;
use std::sync::Arc;

use crate::error::{finite, open_interval, Error, Result};
use crate::numerics;

type Evaluator = Arc<dyn Fn(f64) -> f64 + Send + Sync>;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum AuxKind {
    Tangent,
    Quantile { mu: f64 },
    Custom,
}

/// A left auxiliary function on the unit interval.
#[derive(Clone)]
pub enum AuxiliaryFunction {
    /// `tan(pi u - pi/2)`.
    Tangent,
    /// `mu + Q(u)` with `Q` the standard normal quantile. Composing with the
    /// CDF of `N(mu, 1)` gives back `u`.
    Quantile { mu: f64 },
    /// A user-supplied function. Must pass [`validate_laf`] before it can be
    /// used in a [`PdmfSpec`](crate::PdmfSpec).
    Custom { name: String, eval: Evaluator },
}

impl AuxiliaryFunction {
    pub fn quantile(mu: f64) -> Result<Self> {
        Ok(AuxiliaryFunction::Quantile {
            mu: finite("mu", mu)?,
        })
    }

    pub fn custom<F>(name: impl Into<String>, f: F) -> Self
    where
        F: Fn(f64) -> f64 + Send + Sync + 'static,
    {
        AuxiliaryFunction::Custom {
            name: name.into(),
            eval: Arc::new(f),
        }
    }

    pub fn kind(&self) -> AuxKind {
        match self {
            AuxiliaryFunction::Tangent => AuxKind::Tangent,
            AuxiliaryFunction::Quantile { mu } => AuxKind::Quantile { mu: *mu },
            AuxiliaryFunction::Custom { .. } => AuxKind::Custom,
        }
    }

    pub fn name(&self) -> &str {
        match self {
            AuxiliaryFunction::Tangent => "tangent",
            AuxiliaryFunction::Quantile { .. } => "quantile",
            AuxiliaryFunction::Custom { name, .. } => name,
        }
    }

    /// Evaluates at `u`, which must lie in `(0, 1)`.
    pub fn eval(&self, u: f64) -> Result<f64> {
        open_interval("auxiliary argument", u, 0.0, 1.0)?;
        Ok(self.eval_unchecked(u))
    }

    pub(crate) fn eval_unchecked(&self, u: f64) -> f64 {
        match self {
            AuxiliaryFunction::Tangent => tangent_unchecked(u),
            AuxiliaryFunction::Quantile { mu } => mu + numerics::quantile_unchecked(u),
            AuxiliaryFunction::Custom { eval, .. } => eval(u),
        }
    }
}

impl fmt::Debug for AuxiliaryFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AuxiliaryFunction::Tangent => f.write_str("Tangent"),
            AuxiliaryFunction::Quantile { mu } => f.debug_struct("Quantile").field("mu", mu).finish(),
            AuxiliaryFunction::Custom { name, .. } => {
                f.debug_struct("Custom").field("name", name).finish_non_exhaustive()
            }
        }
    }
}

// `u - 0.5` is exact on [0.25, 1], and tan is odd, so h(u) = -h(1 - u)
// holds bit-for-bit whenever 1 - u is representable.
#[inline]
pub(crate) fn tangent_unchecked(u: f64) -> f64 {
    (std::f64::consts::PI * (u - 0.5)).tan()
}

pub fn tangent_h(u: f64) -> Result<f64> {
    AuxiliaryFunction::Tangent.eval(u)
}

pub fn quantile_h(u: f64, mu: f64) -> Result<f64> {
    AuxiliaryFunction::quantile(mu)?.eval(u)
}

/// `h((x - a) / (b - a))` for `a < x < b`.
pub fn left_map(x: f64, a: f64, b: f64, h: &AuxiliaryFunction) -> Result<f64> {
    check_side(a, b, "a < b")?;
    open_interval("x", x, a, b)?;
    h.eval((x - a) / (b - a))
}

/// `h((c - x) / (c - b))` for `b < x < c`. Decreasing in `x`.
pub fn right_map(x: f64, b: f64, c: f64, h: &AuxiliaryFunction) -> Result<f64> {
    check_side(b, c, "b < c")?;
    open_interval("x", x, b, c)?;
    h.eval((c - x) / (c - b))
}

fn check_side(lo: f64, hi: f64, what: &str) -> Result<()> {
    finite("interval endpoint", lo)?;
    finite("interval endpoint", hi)?;
    if lo < hi {
        Ok(())
    } else {
        Err(Error::Ordering(format!("{what} required, got ({lo}, {hi})")))
    }
}

/// Thresholds for the finite-precision LAF checks.
///
/// Divergence is measured from the centre value: the check requires
/// `h(epsilon) < h(1/2) - threshold` and `h(1 - epsilon) > h(1/2) + threshold`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LafCheck {
    /// Distance from the interval ends at which divergence is probed.
    pub epsilon: f64,
    pub threshold: f64,
}

impl Default for LafCheck {
    fn default() -> Self {
        LafCheck {
            epsilon: 1e-8,
            threshold: 1e6,
        }
    }
}

impl LafCheck {
    /// Thresholds matched to the growth rate of `h`.
    ///
    /// The normal quantile only reaches about 8.2 at `1 - 2^-53`, so the
    /// quantile LAF is probed at `epsilon = 1e-16` against a threshold of 8.
    /// Everything else gets the default.
    pub fn recommended(h: &AuxiliaryFunction) -> Self {
        match h {
            AuxiliaryFunction::Quantile { .. } => LafCheck {
                epsilon: 1e-16,
                threshold: 8.0,
            },
            _ => LafCheck::default(),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct LafReport {
    pub grid_size: usize,
    pub strictly_increasing: bool,
    pub divergent_at_ends: bool,
    pub continuous: bool,
    /// Human-readable description of each failed check.
    pub failures: Vec<String>,
}

impl LafReport {
    pub fn passed(&self) -> bool {
        self.strictly_increasing && self.divergent_at_ends && self.continuous
    }
}

impl fmt::Display for LafReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mark = |ok: bool| if ok { "pass" } else { "FAIL" };
        writeln!(f, "auxiliary function (grid {}):", self.grid_size)?;
        writeln!(f, "  strictly increasing: {}", mark(self.strictly_increasing))?;
        writeln!(f, "  divergent at ends:   {}", mark(self.divergent_at_ends))?;
        writeln!(f, "  continuity sweep:    {}", mark(self.continuous))?;
        for msg in &self.failures {
            writeln!(f, "  - {msg}")?;
        }
        Ok(())
    }
}

/// [`validate_laf_with`] using [`LafCheck::recommended`].
pub fn validate_laf(h: &AuxiliaryFunction, grid_size: usize) -> LafReport {
    validate_laf_with(h, grid_size, &LafCheck::recommended(h))
}

/// Samples `h` on a uniform grid of `grid_size` points spanning
/// `[epsilon, 1 - epsilon]` and reports monotonicity, end divergence and a
/// local continuity sweep. Grid sizes below 3 are raised to 3.
pub fn validate_laf_with(h: &AuxiliaryFunction, grid_size: usize, check: &LafCheck) -> LafReport {
    let n = grid_size.max(3);
    let eps = check.epsilon;
    let step = (1.0 - 2.0 * eps) / (n - 1) as f64;
    let grid: Vec<f64> = (0..n)
        .map(|i| if i == n - 1 { 1.0 - eps } else { eps + i as f64 * step })
        .collect();
    let values: Vec<f64> = grid.iter().map(|&u| h.eval_unchecked(u)).collect();
    let mut failures = Vec::new();

    let strictly_increasing = match values
        .windows(2)
        .position(|w| w[0].is_nan() || !(w[1] > w[0]))
    {
        None => true,
        Some(i) => {
            failures.push(format!(
                "not strictly increasing between u={} and u={}",
                grid[i],
                grid[i + 1]
            ));
            false
        }
    };

    let lo = values[0];
    let hi = values[n - 1];
    let centre = h.eval_unchecked(0.5);
    let divergent_at_ends = lo < centre - check.threshold && hi > centre + check.threshold;
    if !divergent_at_ends {
        failures.push(format!(
            "h({eps}) = {lo}, h(1-{eps}) = {hi}; need beyond h(1/2) -/+ {}",
            check.threshold
        ));
    }

    // A continuous function's local oscillation shrinks with the probe width;
    // a jump leaves it roughly constant.
    let mut continuous = true;
    for &u in &grid[1..n - 1] {
        let wide = oscillation(h, u, 1e-4 * u.min(1.0 - u));
        let narrow = oscillation(h, u, 1e-5 * u.min(1.0 - u));
        let floor = 1e-12 * (1.0 + h.eval_unchecked(u).abs());
        if !(narrow <= (0.5 * wide).max(floor)) {
            failures.push(format!("continuity sweep failed near u={u}"));
            continuous = false;
            break;
        }
    }

    LafReport {
        grid_size: n,
        strictly_increasing,
        divergent_at_ends,
        continuous,
        failures,
    }
}

fn oscillation(h: &AuxiliaryFunction, u: f64, delta: f64) -> f64 {
    let mid = h.eval_unchecked(u);
    let l = (h.eval_unchecked(u - delta) - mid).abs();
    let r = (h.eval_unchecked(u + delta) - mid).abs();
    if l.is_nan() || r.is_nan() {
        f64::NAN
    } else {
        l.max(r)
    }
}
