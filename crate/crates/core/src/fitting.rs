//! Recovering density parameters from prescribed control points.

use crate::auxiliary::{self, AuxiliaryFunction};
use crate::densities::{build_multi_step_pdf, GaussianKernel};
use crate::error::{finite, open_interval, Error, Result};
use crate::membership::{GPdmf, PdmfSpec};
use crate::numerics::quantile_unchecked;

/// A point `(x, y)` the membership curve must pass through, `0 < y < 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ControlPoint {
    pub x: f64,
    pub y: f64,
}

impl ControlPoint {
    pub fn new(x: f64, y: f64) -> Result<Self> {
        finite("control point x", x)?;
        open_interval("control point y", y, 0.0, 1.0)?;
        Ok(ControlPoint { x, y })
    }
}

// Rejects hand-built points that bypassed `new`.
fn ordinate(p: &ControlPoint) -> Result<f64> {
    open_interval("control point y", p.y, 0.0, 1.0)
}

/// `mu_left = tan(pi (x - a)/(b - a) - pi/2) - Q(y)`: the unique mean for
/// which the left branch passes through `p`.
pub fn fit_mu_left(a: f64, b: f64, p: &ControlPoint) -> Result<f64> {
    let y = ordinate(p)?;
    let z = auxiliary::left_map(p.x, a, b, &AuxiliaryFunction::Tangent)?;
    Ok(z - quantile_unchecked(y))
}

/// Mirror of [`fit_mu_left`] on `(b, c)`.
pub fn fit_mu_right(b: f64, c: f64, q: &ControlPoint) -> Result<f64> {
    let y = ordinate(q)?;
    let z = auxiliary::right_map(q.x, b, c, &AuxiliaryFunction::Tangent)?;
    Ok(z - quantile_unchecked(y))
}

/// Fits `<(a, b, c); mu_left, mu_right>` through `p` on the left and `q` on
/// the right. Requires `a < p.x < b < q.x < c`.
pub fn fit_gpdmf(a: f64, b: f64, c: f64, p: ControlPoint, q: ControlPoint) -> Result<GPdmf> {
    for (name, v) in [("a", a), ("b", b), ("c", c)] {
        finite(name, v)?;
    }
    if !(a < p.x && p.x < b && b < q.x && q.x < c) {
        return Err(Error::Ordering(format!(
            "a < P.x < b < Q.x < c required, got a={a}, P.x={}, b={b}, Q.x={}, c={c}",
            p.x, q.x
        )));
    }
    GPdmf::new(a, b, c, fit_mu_left(a, b, &p)?, fit_mu_right(b, c, &q)?)
}

/// Step-density PDMF through every control point: `lefts` on `(a, b)` with
/// increasing abscissae and ordinates, `rights` on `(b, c)` with increasing
/// abscissae and decreasing ordinates.
pub fn fit_step_pdmf(
    a: f64,
    b: f64,
    c: f64,
    lefts: &[ControlPoint],
    rights: &[ControlPoint],
    h: AuxiliaryFunction,
) -> Result<PdmfSpec> {
    for (name, v) in [("a", a), ("b", b), ("c", c)] {
        finite(name, v)?;
    }
    if !(a < b && b < c) {
        return Err(Error::Ordering(format!("a < b < c required, got ({a}, {b}, {c})")));
    }
    if lefts.is_empty() {
        return Err(Error::Invalid("at least one left control point required".into()));
    }
    if rights.is_empty() {
        return Err(Error::Invalid("at least one right control point required".into()));
    }
    for p in lefts.iter().chain(rights) {
        ordinate(p)?;
    }
    check_side_order("left", lefts, a, b, true)?;
    check_side_order("right", rights, b, c, false)?;

    let mut lz = Vec::with_capacity(lefts.len());
    for p in lefts {
        lz.push(auxiliary::left_map(p.x, a, b, &h)?);
    }
    let ly: Vec<f64> = lefts.iter().map(|p| p.y).collect();

    // The right map reverses orientation, so the right points are ascending
    // in z once reversed.
    let mut rz = Vec::with_capacity(rights.len());
    for q in rights.iter().rev() {
        rz.push(auxiliary::right_map(q.x, b, c, &h)?);
    }
    let ry: Vec<f64> = rights.iter().rev().map(|q| q.y).collect();

    let p_left = build_multi_step_pdf(&lz, &ly)?;
    let p_right = build_multi_step_pdf(&rz, &ry)?;
    PdmfSpec::new(a, b, c, h, p_left, p_right)
}

fn check_side_order(side: &str, pts: &[ControlPoint], lo: f64, hi: f64, rising: bool) -> Result<()> {
    for (i, p) in pts.iter().enumerate() {
        if !(p.x > lo && p.x < hi) {
            return Err(Error::Ordering(format!(
                "{side} control point {} has x = {} outside ({lo}, {hi})",
                i + 1,
                p.x
            )));
        }
    }
    for (i, w) in pts.windows(2).enumerate() {
        if !(w[1].x > w[0].x) {
            return Err(Error::Ordering(format!(
                "{side} control abscissae must increase: x{} = {} >= x{} = {}",
                i + 1,
                w[0].x,
                i + 2,
                w[1].x
            )));
        }
        let ok = if rising { w[1].y > w[0].y } else { w[1].y < w[0].y };
        if !ok {
            let dir = if rising { "increase" } else { "decrease" };
            return Err(Error::Ordering(format!(
                "{side} control ordinates must {dir}: y{} = {}, y{} = {}",
                i + 1,
                w[0].y,
                i + 2,
                w[1].y
            )));
        }
    }
    Ok(())
}

/// The triangular number `(a, b, c)` as a PDMF: `h = mu + Q(.)` with
/// `N(mu, 1)` on both sides, so each side is exactly linear.
pub fn triangular_as_pdmf(a: f64, b: f64, c: f64, mu: f64) -> Result<PdmfSpec> {
    for (name, v) in [("a", a), ("b", b), ("c", c)] {
        finite(name, v)?;
    }
    if !(a < b && b < c) {
        return Err(Error::Ordering(format!("a < b < c required, got ({a}, {b}, {c})")));
    }
    let kernel = GaussianKernel::new(mu)?;
    PdmfSpec::new(a, b, c, AuxiliaryFunction::quantile(mu)?, kernel, kernel)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::densities::Density;
    use crate::membership::{eval_gpdmf, eval_membership};

    fn cp(x: f64, y: f64) -> ControlPoint {
        ControlPoint::new(x, y).unwrap()
    }

    #[test]
    fn control_point_validation() {
        assert!(ControlPoint::new(0.0, 0.0).is_err());
        assert!(ControlPoint::new(0.0, 1.0).is_err());
        assert!(ControlPoint::new(f64::NAN, 0.5).is_err());
        let forged = ControlPoint { x: 0.0, y: 1.5 };
        assert!(fit_mu_left(-1.0, 1.0, &forged).is_err());
    }

    #[test]
    fn mu_left_examples() {
        let mu = fit_mu_left(-1.0, 1.0, &cp(0.0, 0.75)).unwrap();
        assert!((mu + 0.674489750196).abs() <= 1e-8);
        assert_eq!(fit_mu_left(-1.0, 0.0, &cp(-0.5, 0.5)).unwrap(), 0.0);
        assert_eq!(fit_mu_left(-1.0, 1.0, &cp(0.0, 0.5)).unwrap(), 0.0);
        assert!(fit_mu_left(-1.0, 1.0, &cp(1.0, 0.5)).is_err());
        assert!(fit_mu_left(-1.0, 1.0, &cp(-1.5, 0.5)).is_err());
    }

    #[test]
    fn mu_right_examples() {
        assert_eq!(fit_mu_right(1.0, 4.0, &cp(2.5, 0.5)).unwrap(), 0.0);
        assert_eq!(fit_mu_right(0.0, 1.0, &cp(0.5, 0.5)).unwrap(), 0.0);
        let mu = fit_mu_right(1.0, 2.0, &cp(1.5, 0.6)).unwrap();
        assert!((mu + 0.253347103136).abs() <= 1e-8);
        assert!(fit_mu_right(1.0, 2.0, &cp(0.5, 0.6)).is_err());
    }

    #[test]
    fn fitted_curve_passes_through_points() {
        let p = cp(-0.37, 0.12);
        let q = cp(3.9, 0.66);
        let num = fit_gpdmf(-1.0, 1.0, 4.0, p, q).unwrap();
        assert!((eval_gpdmf(&num, p.x).unwrap().get() - p.y).abs() <= 1e-8);
        assert!((eval_gpdmf(&num, q.x).unwrap().get() - q.y).abs() <= 1e-8);
    }

    #[test]
    fn gpdmf_examples() {
        let b1 = fit_gpdmf(-1.0, 0.0, 1.0, cp(-0.5, 0.5), cp(0.5, 0.5)).unwrap();
        assert_eq!(b1, GPdmf::new(-1.0, 0.0, 1.0, 0.0, 0.0).unwrap());
        let b2 = fit_gpdmf(-1.0, 1.0, 4.0, cp(0.0, 0.5), cp(2.5, 0.5)).unwrap();
        assert_eq!(b2, GPdmf::new(-1.0, 1.0, 4.0, 0.0, 0.0).unwrap());
        let b3 = fit_gpdmf(-1.0, 1.0, 2.0, cp(0.0, 0.75), cp(1.5, 0.6)).unwrap();
        assert!((b3.mu_left() + 0.6745).abs() <= 1e-4);
        assert!((b3.mu_right() + 0.2533).abs() <= 1e-4);
    }

    #[test]
    fn gpdmf_ordering_errors() {
        assert!(matches!(
            fit_gpdmf(-1.0, 1.0, 2.0, cp(1.5, 0.5), cp(0.0, 0.5)),
            Err(Error::Ordering(_))
        ));
        assert!(fit_gpdmf(-1.0, 1.0, 2.0, cp(0.0, 0.5), cp(2.0, 0.5)).is_err());
        assert!(fit_gpdmf(f64::NAN, 1.0, 2.0, cp(0.0, 0.5), cp(1.5, 0.5)).is_err());
    }

    #[test]
    fn uniqueness_in_ordinate() {
        let x = 0.3;
        let mut prev = f64::INFINITY;
        for k in 1..1000 {
            let mu = fit_mu_left(0.0, 1.0, &cp(x, k as f64 / 1000.0)).unwrap();
            assert!(mu < prev);
            prev = mu;
        }
    }

    #[test]
    fn step_fit_single_points() {
        let spec = fit_step_pdmf(0.0, 1.0, 2.0, &[cp(0.5, 0.3)], &[cp(1.5, 0.4)], AuxiliaryFunction::Tangent)
            .unwrap();
        assert_eq!(eval_membership(&spec, 0.5).unwrap().get(), 0.3);
        assert_eq!(eval_membership(&spec, 1.5).unwrap().get(), 0.4);
    }

    #[test]
    fn step_fit_two_left_points() {
        let spec = fit_step_pdmf(
            0.0,
            1.0,
            2.0,
            &[cp(0.25, 0.2), cp(0.75, 0.8)],
            &[cp(1.5, 0.5)],
            AuxiliaryFunction::Tangent,
        )
        .unwrap();
        let Density::Step(left) = spec.left_density() else {
            panic!("expected a step density");
        };
        let z = left.breakpoints();
        assert!((z[1] + 1.0).abs() < 1e-12 && (z[2] - 1.0).abs() < 1e-12);
        let d = left.densities();
        assert!((d[0] - 0.2).abs() < 1e-12);
        assert!((d[1] - 0.3).abs() < 1e-12);
        assert!((d[2] - 0.2).abs() < 1e-12);
        assert_eq!(eval_membership(&spec, 0.25).unwrap().get(), 0.2);
        assert_eq!(eval_membership(&spec, 0.75).unwrap().get(), 0.8);
    }

    #[test]
    fn step_fit_right_side_reordering() {
        let rights = [cp(1.2, 0.9), cp(1.5, 0.6), cp(1.9, 0.05)];
        let spec = fit_step_pdmf(0.0, 1.0, 2.0, &[cp(0.5, 0.5)], &rights, AuxiliaryFunction::Tangent).unwrap();
        for q in rights {
            assert!((eval_membership(&spec, q.x).unwrap().get() - q.y).abs() <= 1e-10);
        }
    }

    #[test]
    fn step_fit_hypothesis_errors() {
        let t = || AuxiliaryFunction::Tangent;
        let err = fit_step_pdmf(0.0, 1.0, 2.0, &[], &[], t()).unwrap_err();
        assert!(err.to_string().contains("left"));
        assert!(fit_step_pdmf(0.0, 1.0, 2.0, &[cp(0.5, 0.5)], &[], t()).is_err());
        let err = fit_step_pdmf(0.0, 1.0, 2.0, &[cp(0.6, 0.2), cp(0.4, 0.3)], &[cp(1.5, 0.5)], t()).unwrap_err();
        assert!(err.to_string().contains("left control abscissae"), "{err}");
        let err = fit_step_pdmf(0.0, 1.0, 2.0, &[cp(0.4, 0.3), cp(0.6, 0.2)], &[cp(1.5, 0.5)], t()).unwrap_err();
        assert!(err.to_string().contains("left control ordinates must increase"), "{err}");
        let err = fit_step_pdmf(0.0, 1.0, 2.0, &[cp(0.4, 0.3)], &[cp(1.2, 0.2), cp(1.5, 0.5)], t()).unwrap_err();
        assert!(err.to_string().contains("right control ordinates must decrease"), "{err}");
        let err = fit_step_pdmf(0.0, 1.0, 2.0, &[cp(1.4, 0.3)], &[cp(1.5, 0.5)], t()).unwrap_err();
        assert!(err.to_string().contains("outside"), "{err}");
        assert!(fit_step_pdmf(0.0, 2.0, 1.0, &[cp(0.5, 0.3)], &[cp(1.5, 0.5)], t()).is_err());
    }

    #[test]
    fn triangular_examples() {
        let t = triangular_as_pdmf(0.0, 1.0, 2.0, 0.0).unwrap();
        assert!((eval_membership(&t, 0.5).unwrap().get() - 0.5).abs() <= 1e-9);
        assert!((eval_membership(&t, 1.75).unwrap().get() - 0.25).abs() <= 1e-9);
        let t = triangular_as_pdmf(0.0, 1.0, 2.0, 3.7).unwrap();
        assert!((eval_membership(&t, 0.5).unwrap().get() - 0.5).abs() <= 1e-9);
        assert!(triangular_as_pdmf(1.0, 1.0, 2.0, 0.0).is_err());
        assert!(triangular_as_pdmf(0.0, 2.0, 2.0, 0.0).is_err());
    }
}
