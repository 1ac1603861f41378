//! Standard normal CDF and quantile.
//!
//! The CDF goes through `erfc` so that the lower tail keeps full relative
//! precision. The quantile starts from a rational approximation and is
//! polished with Halley steps against that CDF.

use std::f64::consts::{FRAC_1_SQRT_2, PI};
use std::fmt;

use crate::error::{finite, Error, Result};

/// `|x|` beyond which the CDF is reported as exactly 0 or 1.
pub const CDF_SATURATION: f64 = 40.0;

/// A value in `[0, 1]`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Default)]
pub struct Probability(f64);

impl Probability {
    pub const ZERO: Probability = Probability(0.0);
    pub const ONE: Probability = Probability(1.0);

    pub fn new(value: f64) -> Result<Self> {
        if (0.0..=1.0).contains(&value) {
            Ok(Probability(value))
        } else {
            Err(Error::OutOfRange {
                what: "probability",
                value,
                range: "[0, 1]".into(),
            })
        }
    }

    /// Clamps into `[0, 1]`. Callers guarantee the value is not NaN.
    pub(crate) fn saturating(value: f64) -> Self {
        debug_assert!(!value.is_nan());
        Probability(value.clamp(0.0, 1.0))
    }

    #[inline]
    pub fn get(self) -> f64 {
        self.0
    }
}

impl From<Probability> for f64 {
    fn from(p: Probability) -> f64 {
        p.0
    }
}

impl TryFrom<f64> for Probability {
    type Error = Error;

    fn try_from(value: f64) -> Result<Self> {
        Probability::new(value)
    }
}

impl fmt::Display for Probability {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Standard normal density.
#[inline]
pub fn std_normal_pdf(x: f64) -> f64 {
    const INV_SQRT_2PI: f64 = 0.398_942_280_401_432_7;
    INV_SQRT_2PI * (-0.5 * x * x).exp()
}

/// `Phi(x)`, the standard normal CDF. Exactly 0 for `x <= -40` and exactly 1
/// for `x >= 40`.
pub fn std_normal_cdf(x: f64) -> Result<Probability> {
    let x = finite("cdf argument", x)?;
    Ok(Probability(cdf_unchecked(x)))
}

#[inline]
pub(crate) fn cdf_unchecked(x: f64) -> f64 {
    if x <= -CDF_SATURATION {
        0.0
    } else if x >= CDF_SATURATION {
        1.0
    } else {
        0.5 * libm::erfc(-x * FRAC_1_SQRT_2)
    }
}

/// Inverse of [`std_normal_cdf`] on the open interval `(0, 1)`.
///
/// The endpoints map to `-inf`/`+inf` and are rejected; callers that need the
/// limit handle it themselves.
pub fn std_normal_quantile(y: Probability) -> Result<f64> {
    let y = y.get();
    if y <= 0.0 || y >= 1.0 {
        return Err(Error::OutOfRange {
            what: "quantile level",
            value: y,
            range: "(0, 1)".into(),
        });
    }
    Ok(quantile_unchecked(y))
}

pub(crate) fn quantile_unchecked(y: f64) -> f64 {
    if y > 0.5 {
        // 1 - y is exact here; polish in the lower tail where Phi has full
        // relative precision.
        -lower_quantile(1.0 - y)
    } else {
        lower_quantile(y)
    }
}

/// Quantile for `0 < y <= 0.5`.
fn lower_quantile(y: f64) -> f64 {
    let mut x = acklam(y);
    for _ in 0..2 {
        let err = cdf_unchecked(x) - y;
        if err == 0.0 {
            break;
        }
        // Halley step on Phi(x) - y using Phi' = pdf and Phi'' = -x pdf.
        let u = err * (2.0 * PI).sqrt() * (0.5 * x * x).exp();
        if !u.is_finite() {
            break;
        }
        x -= u / (1.0 + 0.5 * x * u);
    }
    x
}

/// Rational initial guess, relative error about 1.15e-9 over `(0, 1)`.
fn acklam(y: f64) -> f64 {
    const A: [f64; 6] = [
        -3.969_683_028_665_376e1,
        2.209_460_984_245_205e2,
        -2.759_285_104_469_687e2,
        1.383_577_518_672_69e2,
        -3.066_479_806_614_716e1,
        2.506_628_277_459_239,
    ];
    const B: [f64; 5] = [
        -5.447_609_879_822_406e1,
        1.615_858_368_580_409e2,
        -1.556_989_798_598_866e2,
        6.680_131_188_771_972e1,
        -1.328_068_155_288_572e1,
    ];
    const C: [f64; 6] = [
        -7.784_894_002_430_293e-3,
        -3.223_964_580_411_365e-1,
        -2.400_758_277_161_838,
        -2.549_732_539_343_734,
        4.374_664_141_464_968,
        2.938_163_982_698_783,
    ];
    const D: [f64; 4] = [
        7.784_695_709_041_462e-3,
        3.224_671_290_700_398e-1,
        2.445_134_137_142_996,
        3.754_408_661_907_416,
    ];
    const P_LOW: f64 = 0.02425;

    if y < P_LOW {
        let q = (-2.0 * y.ln()).sqrt();
        (((((C[0] * q + C[1]) * q + C[2]) * q + C[3]) * q + C[4]) * q + C[5])
            / ((((D[0] * q + D[1]) * q + D[2]) * q + D[3]) * q + 1.0)
    } else {
        let q = y - 0.5;
        let r = q * q;
        (((((A[0] * r + A[1]) * r + A[2]) * r + A[3]) * r + A[4]) * r + A[5]) * q
            / (((((B[0] * r + B[1]) * r + B[2]) * r + B[3]) * r + B[4]) * r + 1.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(y: f64) -> Probability {
        Probability::new(y).unwrap()
    }

    // Independent oracle: Maclaurin series of erf, accurate to ~1e-16 for |t| < 3.
    fn erf_series(t: f64) -> f64 {
        let mut term = t;
        let mut sum = t;
        let t2 = t * t;
        for n in 1..200 {
            term *= -t2 / n as f64;
            let add = term / (2 * n + 1) as f64;
            sum += add;
            if add.abs() < 1e-18 {
                break;
            }
        }
        sum * 2.0 / PI.sqrt()
    }

    fn bisect_quantile(y: f64) -> f64 {
        let (mut lo, mut hi) = (-40.0, 40.0);
        while hi - lo > 1e-14 {
            let mid = 0.5 * (lo + hi);
            if cdf_unchecked(mid) < y {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        0.5 * (lo + hi)
    }

    #[test]
    fn cdf_examples() {
        assert_eq!(std_normal_cdf(0.0).unwrap().get(), 0.5);
        assert!(std_normal_cdf(40.0).unwrap().get() >= 1.0 - 1e-300);
        assert_eq!(std_normal_cdf(40.0).unwrap().get(), 1.0);
        assert_eq!(std_normal_cdf(-40.0).unwrap().get(), 0.0);
        // 0.749999999999974023925 from a 40-digit evaluation.
        let v = std_normal_cdf(0.674489750196).unwrap().get();
        assert!((v - 0.75).abs() <= 1e-10);
        assert!((v - 0.749_999_999_999_974).abs() <= 1e-15);
    }

    #[test]
    fn cdf_rejects_non_finite() {
        assert!(std_normal_cdf(f64::NAN).is_err());
        assert!(std_normal_cdf(f64::INFINITY).is_err());
    }

    #[test]
    fn cdf_matches_series_oracle() {
        for i in -400..=400 {
            let x = i as f64 / 100.0;
            let oracle = 0.5 * (1.0 + erf_series(x * FRAC_1_SQRT_2));
            let got = cdf_unchecked(x);
            assert!((got - oracle).abs() <= 1e-12, "x={x}: {got} vs {oracle}");
        }
    }

    #[test]
    fn cdf_tail_values() {
        // 40-digit reference values.
        let cases = [
            (-5.0, 2.866_515_718_791_939e-7),
            (-8.0, 6.220_960_574_271_784e-16),
            (-20.0, 2.753_624_118_606_234e-89),
        ];
        for (x, want) in cases {
            let got = cdf_unchecked(x);
            assert!(((got - want) / want).abs() < 1e-13, "x={x}: {got}");
        }
    }

    #[test]
    fn quantile_examples() {
        assert_eq!(std_normal_quantile(p(0.5)).unwrap(), 0.0);
        let q75 = std_normal_quantile(p(0.75)).unwrap();
        assert!((q75 - bisect_quantile(0.75)).abs() <= 1e-9);
        assert!((q75 - 0.674489750196).abs() <= 1e-9);
        let q6 = std_normal_quantile(p(0.6)).unwrap();
        assert!((q6 - bisect_quantile(0.6)).abs() <= 1e-9);
        assert!((q6 - 0.253347103136).abs() <= 1e-9);
    }

    #[test]
    fn quantile_rejects_endpoints() {
        assert!(std_normal_quantile(Probability::ZERO).is_err());
        assert!(std_normal_quantile(Probability::ONE).is_err());
    }

    #[test]
    fn quantile_tail_against_reference() {
        // 40-digit reference values.
        let q = std_normal_quantile(p(1e-9)).unwrap();
        assert!((q + 5.997_807_015_007_687).abs() < 1e-12);
        let q = std_normal_quantile(p(0.001)).unwrap();
        assert!((q + 3.090_232_306_167_814).abs() < 1e-12);
        let q = std_normal_quantile(p(0.999999)).unwrap();
        assert!((q - 4.753_424_308_822_899).abs() < 1e-9);
    }

    #[test]
    fn round_trip_grid() {
        let mut grid = vec![1e-9, 1e-6, 0.001];
        grid.extend((1..100).map(|k| k as f64 / 100.0));
        grid.extend([0.999, 1.0 - 1e-6, 1.0 - 1e-9]);
        for y in grid {
            let x = std_normal_quantile(p(y)).unwrap();
            let back = cdf_unchecked(x);
            assert!((back - y).abs() <= 1e-9, "y={y}: {back}");
        }
    }

    #[test]
    fn symmetry_and_antisymmetry() {
        for i in 0..=1000 {
            let x = i as f64 / 100.0;
            let d = cdf_unchecked(-x) - (1.0 - cdf_unchecked(x));
            assert!(d.abs() <= 1e-12, "x={x}");
        }
        for i in 1..=5000 {
            let y = i as f64 / 10_000.0;
            let s = quantile_unchecked(y) + quantile_unchecked(1.0 - y);
            assert!(s.abs() <= 1e-8, "y={y}: {s}");
        }
    }

    #[test]
    fn monotone_on_sorted_grids() {
        let mut prev = 0.0;
        for i in -80_000..=80_000 {
            let v = cdf_unchecked(i as f64 * 5e-4);
            assert!(v >= prev, "cdf inversion at {}", i as f64 * 5e-4);
            prev = v;
        }
        let mut prev = f64::NEG_INFINITY;
        for i in 1..100_000 {
            let v = quantile_unchecked(i as f64 / 100_000.0);
            assert!(v >= prev, "quantile inversion at {i}");
            prev = v;
        }
    }
}
