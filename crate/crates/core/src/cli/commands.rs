use std::fmt::Write;

use super::document::{NumberDocument, Realized};
use super::render::NumberFormat;
use super::CliError;
use crate::algebra::{self, Residual};
use crate::auxiliary::validate_laf;
use crate::densities::{Density, StepPdf};
use crate::membership::{check_monotone_fuzzy_number, curve_abscissae, FuzzyNumber, GPdmf};

/// Tolerance for declaring that `b2 + X` reproduces `b1`.
pub const SOLVE_TOLERANCE: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Scale,
    Solve,
}

/// `{"a": .., "b": .., "c": .., "mu_left": .., "mu_right": ..}`
pub fn render_parameters(num: &GPdmf, fmt: NumberFormat) -> String {
    let r = |x| fmt.render(x);
    format!(
        "{{\"a\": {}, \"b\": {}, \"c\": {}, \"mu_left\": {}, \"mu_right\": {}}}",
        r(num.a()),
        r(num.b()),
        r(num.c()),
        r(num.mu_left()),
        r(num.mu_right())
    )
}

fn render_list(xs: &[f64], fmt: NumberFormat) -> String {
    let items: Vec<String> = xs.iter().map(|&x| fmt.render(x)).collect();
    format!("[{}]", items.join(", "))
}

fn render_step(s: &StepPdf, fmt: NumberFormat) -> String {
    format!(
        "{{\"breakpoints\": {}, \"densities\": {}}}",
        render_list(s.breakpoints(), fmt),
        render_list(s.densities(), fmt)
    )
}

fn render_density(d: &Density, fmt: NumberFormat) -> String {
    match d {
        Density::Step(s) => render_step(s, fmt),
        Density::Gaussian(k) => format!("{{\"mu\": {}, \"sigma\": 1}}", fmt.render(k.mu())),
    }
}

/// Fits one document. Gaussian forms come back in parameter form; the
/// multi-point and triangular forms come back as a description of the
/// constructed densities.
pub fn fit(doc: &NumberDocument, fmt: NumberFormat) -> Result<String, CliError> {
    let r = |x| fmt.render(x);
    match doc {
        NumberDocument::ControlPoints { .. } | NumberDocument::Parameters { .. } => {
            Ok(render_parameters(&doc.to_gpdmf()?, fmt))
        }
        NumberDocument::MultiPoint { a, b, c, .. } => {
            let Realized::Generic(spec) = doc.realize()? else {
                unreachable!("multi-point documents realize to generic specs")
            };
            Ok(format!(
                "{{\"form\": \"step\", \"a\": {}, \"b\": {}, \"c\": {}, \"h\": \"tangent\", \"left\": {}, \"right\": {}}}",
                r(*a),
                r(*b),
                r(*c),
                render_density(spec.left_density(), fmt),
                render_density(spec.right_density(), fmt)
            ))
        }
        NumberDocument::Triangular { a, b, c, mu } => {
            doc.realize()?;
            Ok(format!(
                "{{\"form\": \"triangular\", \"a\": {}, \"b\": {}, \"c\": {}, \"h\": \"quantile\", \"mu\": {}, \"kernel\": {{\"mu\": {}, \"sigma\": 1}}}}",
                r(*a),
                r(*b),
                r(*c),
                r(*mu),
                r(*mu)
            ))
        }
    }
}

/// Runs an arithmetic operation. `scale` takes one operand and a scalar, the
/// others take two operands. `solve` appends a residual line.
pub fn arith(
    op: ArithOp,
    operands: &[NumberDocument],
    lambda: Option<f64>,
    fmt: NumberFormat,
) -> Result<String, CliError> {
    let want = if op == ArithOp::Scale { 1 } else { 2 };
    if operands.len() != want {
        return Err(CliError::Usage(format!(
            "{op:?} takes {want} operand(s), got {}",
            operands.len()
        )));
    }
    let nums = operands
        .iter()
        .map(NumberDocument::to_gpdmf)
        .collect::<crate::Result<Vec<_>>>()?;
    let out = match op {
        ArithOp::Add => render_parameters(&algebra::add(&nums[0], &nums[1]), fmt),
        ArithOp::Sub => render_parameters(&algebra::sub(&nums[0], &nums[1]), fmt),
        ArithOp::Scale => {
            let lambda = lambda.ok_or_else(|| CliError::Usage("scale requires --lambda".into()))?;
            if !lambda.is_finite() {
                return Err(CliError::Usage(format!("--lambda must be finite, got {lambda}")));
            }
            render_parameters(&algebra::scale(lambda, &nums[0]), fmt)
        }
        ArithOp::Solve => {
            let check = algebra::solve_add_equation(&nums[0], &nums[1]);
            format!(
                "{}\n{}",
                render_parameters(&check.solution, fmt),
                render_residual(&check.residual, check.reproduces(SOLVE_TOLERANCE), fmt)
            )
        }
    };
    Ok(out)
}

fn render_residual(res: &Residual, reproduces: bool, fmt: NumberFormat) -> String {
    let r = |x| fmt.render(x);
    format!(
        "{{\"residual\": {{\"a\": {}, \"b\": {}, \"c\": {}, \"mu_left\": {}, \"mu_right\": {}}}, \"reproduces\": {reproduces}}}",
        r(res.a),
        r(res.b),
        r(res.c),
        r(res.mu_left),
        r(res.mu_right)
    )
}

/// Samples the membership curve as CSV. Abscissae are snapped to their
/// rendered decimal before evaluation, so every row is self-consistent.
///
/// With `compare`, the columns are `x,f_op,f_min,f_max`, the last two being
/// the pointwise min and max of the two baseline memberships.
pub fn curve(
    doc: &NumberDocument,
    n: usize,
    compare: Option<(&NumberDocument, &NumberDocument)>,
    fmt: NumberFormat,
) -> Result<String, CliError> {
    if n < 2 {
        return Err(CliError::Usage(format!("--n must be at least 2, got {n}")));
    }
    let num = doc.realize()?;
    let baselines = match compare {
        Some((x, y)) => Some((x.realize()?, y.realize()?)),
        None => None,
    };
    let (a, b, c) = num.support();
    let mut out = String::new();
    out.push_str(if baselines.is_some() { "x,f_op,f_min,f_max\n" } else { "x,f\n" });
    for x in curve_abscissae(a, b, c, n) {
        let x = fmt.snap(x);
        let f = num.membership(x)?.get();
        write!(out, "{},{}", fmt.render(x), fmt.render(f)).unwrap();
        if let Some((p, q)) = &baselines {
            let f1 = p.membership(x)?.get();
            let f2 = q.membership(x)?.get();
            write!(out, ",{},{}", fmt.render(f1.min(f2)), fmt.render(f1.max(f2))).unwrap();
        }
        out.push('\n');
    }
    Ok(out)
}

/// Structural and auxiliary-function reports for one document.
pub fn check(doc: &NumberDocument, grid_size: usize) -> Result<(String, bool), CliError> {
    if grid_size < 3 {
        return Err(CliError::Usage(format!("--grid must be at least 3, got {grid_size}")));
    }
    let num = doc.realize()?;
    let structure = check_monotone_fuzzy_number(&num, grid_size);
    let laf = validate_laf(&num.auxiliary(), grid_size);
    let ok = structure.passed() && laf.passed();
    let verdict = if ok { "PASS" } else { "FAIL" };
    Ok((format!("{structure}{laf}overall: {verdict}\n"), ok))
}
