//! JSON number documents.
//!
//! A document is one JSON object in one of four forms:
//!
//! ```text
//! {"a": -1, "b": 1, "c": 2, "P": {"x": 0, "y": 0.75}, "Q": {"x": 1.5, "y": 0.6}}
//! {"a": -1, "b": 1, "c": 2, "mu_left": -0.6745, "mu_right": -0.4399}
//! {"a": 0, "b": 1, "c": 2, "lefts": [{"x": 0.5, "y": 0.3}], "rights": [...], "h": "tangent"}
//! {"a": 0, "b": 1, "c": 2, "mu": 0}
//! ```
//!
//! A file may hold several documents back to back (one per line, say).

use serde::Deserialize;

use super::CliError;
use crate::auxiliary::AuxiliaryFunction;
use crate::error::{Error, Result};
use crate::fitting::{fit_gpdmf, fit_step_pdmf, triangular_as_pdmf, ControlPoint};
use crate::membership::{FuzzyNumber, GPdmf, PdmfSpec};
use crate::numerics::Probability;

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawPoint {
    x: f64,
    y: f64,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawDocument {
    a: f64,
    b: f64,
    c: f64,
    #[serde(rename = "P", alias = "p")]
    p: Option<RawPoint>,
    #[serde(rename = "Q", alias = "q")]
    q: Option<RawPoint>,
    mu_left: Option<f64>,
    mu_right: Option<f64>,
    lefts: Option<Vec<RawPoint>>,
    rights: Option<Vec<RawPoint>>,
    h: Option<String>,
    mu: Option<f64>,
}

/// A parsed number document. Numeric preconditions are checked when the
/// document is realized, not when it is parsed.
#[derive(Debug, Clone, PartialEq)]
pub enum NumberDocument {
    ControlPoints {
        a: f64,
        b: f64,
        c: f64,
        p: (f64, f64),
        q: (f64, f64),
    },
    Parameters {
        a: f64,
        b: f64,
        c: f64,
        mu_left: f64,
        mu_right: f64,
    },
    MultiPoint {
        a: f64,
        b: f64,
        c: f64,
        lefts: Vec<(f64, f64)>,
        rights: Vec<(f64, f64)>,
    },
    Triangular {
        a: f64,
        b: f64,
        c: f64,
        mu: f64,
    },
}

impl TryFrom<RawDocument> for NumberDocument {
    type Error = String;

    fn try_from(raw: RawDocument) -> std::result::Result<Self, String> {
        let RawDocument {
            a,
            b,
            c,
            p,
            q,
            mu_left,
            mu_right,
            lefts,
            rights,
            h,
            mu,
        } = raw;
        let control = p.is_some() || q.is_some();
        let params = mu_left.is_some() || mu_right.is_some();
        let multi = lefts.is_some() || rights.is_some() || h.is_some();
        let tri = mu.is_some();
        let forms = [control, params, multi, tri].iter().filter(|f| **f).count();
        if forms != 1 {
            return Err(
                "document must contain exactly one of: P and Q; mu_left and mu_right; \
                 lefts and rights; mu"
                    .into(),
            );
        }
        let pt = |r: RawPoint| (r.x, r.y);
        let pts = |v: Vec<RawPoint>| v.into_iter().map(pt).collect();
        if control {
            match (p, q) {
                (Some(p), Some(q)) => Ok(NumberDocument::ControlPoints {
                    a,
                    b,
                    c,
                    p: pt(p),
                    q: pt(q),
                }),
                (None, _) => Err("P: missing (control-point form needs both P and Q)".into()),
                (_, None) => Err("Q: missing (control-point form needs both P and Q)".into()),
            }
        } else if params {
            match (mu_left, mu_right) {
                (Some(mu_left), Some(mu_right)) => Ok(NumberDocument::Parameters {
                    a,
                    b,
                    c,
                    mu_left,
                    mu_right,
                }),
                (None, _) => Err("mu_left: missing".into()),
                (_, None) => Err("mu_right: missing".into()),
            }
        } else if multi {
            if let Some(h) = h.as_deref() {
                if h != "tangent" {
                    return Err(format!("h: unknown auxiliary function '{h}', expected \"tangent\""));
                }
            }
            match (lefts, rights) {
                (Some(l), Some(r)) => Ok(NumberDocument::MultiPoint {
                    a,
                    b,
                    c,
                    lefts: pts(l),
                    rights: pts(r),
                }),
                (None, _) => Err("lefts: missing".into()),
                (_, None) => Err("rights: missing".into()),
            }
        } else {
            Ok(NumberDocument::Triangular {
                a,
                b,
                c,
                mu: mu.expect("form detected"),
            })
        }
    }
}

/// Parses every JSON object in `text`. Errors carry the document index and
/// the field path.
pub fn parse_documents(text: &str) -> std::result::Result<Vec<NumberDocument>, CliError> {
    let mut docs = Vec::new();
    for (i, value) in serde_json::Deserializer::from_str(text)
        .into_iter::<serde_json::Value>()
        .enumerate()
    {
        let value = value.map_err(|e| CliError::Parse(format!("document {}: {e}", i + 1)))?;
        let raw: RawDocument = serde_path_to_error::deserialize(value).map_err(|e| {
            let path = e.path().to_string();
            CliError::Parse(format!("document {}: at '{path}': {}", i + 1, e.inner()))
        })?;
        let doc = NumberDocument::try_from(raw)
            .map_err(|msg| CliError::Parse(format!("document {}: {msg}", i + 1)))?;
        docs.push(doc);
    }
    if docs.is_empty() {
        return Err(CliError::Parse("no document found".into()));
    }
    Ok(docs)
}

/// Parses exactly one document.
pub fn parse_document(text: &str) -> std::result::Result<NumberDocument, CliError> {
    let mut docs = parse_documents(text)?;
    if docs.len() != 1 {
        return Err(CliError::Usage(format!(
            "expected a single document, found {}",
            docs.len()
        )));
    }
    Ok(docs.pop().unwrap())
}

fn control(x: f64, y: f64) -> Result<ControlPoint> {
    ControlPoint::new(x, y)
}

/// A document turned into an evaluable number.
#[derive(Debug, Clone)]
pub enum Realized {
    Gaussian(GPdmf),
    Generic(PdmfSpec),
}

impl FuzzyNumber for Realized {
    fn support(&self) -> (f64, f64, f64) {
        match self {
            Realized::Gaussian(g) => g.support(),
            Realized::Generic(s) => s.support(),
        }
    }

    fn membership(&self, x: f64) -> Result<Probability> {
        match self {
            Realized::Gaussian(g) => g.membership(x),
            Realized::Generic(s) => s.membership(x),
        }
    }
}

impl Realized {
    pub fn auxiliary(&self) -> AuxiliaryFunction {
        match self {
            Realized::Gaussian(_) => AuxiliaryFunction::Tangent,
            Realized::Generic(s) => s.auxiliary().clone(),
        }
    }
}

impl NumberDocument {
    pub fn support(&self) -> (f64, f64, f64) {
        match *self {
            NumberDocument::ControlPoints { a, b, c, .. }
            | NumberDocument::Parameters { a, b, c, .. }
            | NumberDocument::MultiPoint { a, b, c, .. }
            | NumberDocument::Triangular { a, b, c, .. } => (a, b, c),
        }
    }

    /// Gaussian forms only; control points are fitted first.
    pub fn to_gpdmf(&self) -> Result<GPdmf> {
        match *self {
            NumberDocument::ControlPoints { a, b, c, p, q } => {
                fit_gpdmf(a, b, c, control(p.0, p.1)?, control(q.0, q.1)?)
            }
            NumberDocument::Parameters {
                a,
                b,
                c,
                mu_left,
                mu_right,
            } => GPdmf::new(a, b, c, mu_left, mu_right),
            NumberDocument::MultiPoint { .. } | NumberDocument::Triangular { .. } => Err(
                Error::Invalid("arithmetic is defined only on Gaussian (parameter or control-point) documents".into()),
            ),
        }
    }

    pub fn realize(&self) -> Result<Realized> {
        match self {
            NumberDocument::ControlPoints { .. } | NumberDocument::Parameters { .. } => {
                self.to_gpdmf().map(Realized::Gaussian)
            }
            NumberDocument::MultiPoint {
                a,
                b,
                c,
                lefts,
                rights,
            } => {
                let l = lefts.iter().map(|&(x, y)| control(x, y)).collect::<Result<Vec<_>>>()?;
                let r = rights.iter().map(|&(x, y)| control(x, y)).collect::<Result<Vec<_>>>()?;
                fit_step_pdmf(*a, *b, *c, &l, &r, AuxiliaryFunction::Tangent).map(Realized::Generic)
            }
            NumberDocument::Triangular { a, b, c, mu } => {
                triangular_as_pdmf(*a, *b, *c, *mu).map(Realized::Generic)
            }
        }
    }
}
