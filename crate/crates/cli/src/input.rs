//! JSON input documents.
//!
//! ```json
//! {
//!   "field": "complex",
//!   "x": [[1.0, 0.5], 2.0],
//!   "family": [[1.0, 0.0], [[0.0, 1.0], 1.0]],
//!   "coefficients": [1.0, [0.0, -1.0]],
//!   "p_list": [1, 1.5, 2, "inf"]
//! }
//! ```
//!
//! Complex coordinates are `[re, im]` pairs; bare numbers are real. A
//! `"real"` document only accepts bare numbers.

use std::path::Path;

use bombieri_core::{BoundError, Complex, Field, Vector, VectorFamily};
use serde::Deserialize;

use crate::CliError;

#[derive(Debug, Clone, Copy, Deserialize)]
#[serde(rename_all = "lowercase")]
enum RawField {
    Real,
    Complex,
}

#[derive(Debug, Clone, Copy, Deserialize)]
#[serde(untagged)]
enum RawScalar {
    Real(f64),
    Complex([f64; 2]),
}

#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
pub(crate) enum RawExponent {
    Number(f64),
    Text(String),
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawDocument {
    field: RawField,
    x: Vec<RawScalar>,
    family: Vec<Vec<RawScalar>>,
    #[serde(default)]
    coefficients: Option<Vec<RawScalar>>,
    #[serde(default)]
    p_list: Option<Vec<RawExponent>>,
}

/// A validated input document.
#[derive(Debug, Clone, PartialEq)]
pub struct InputDocument {
    pub field: Field,
    pub x: Vector<f64>,
    pub family: VectorFamily<f64>,
    /// All ones when the document omits them.
    pub coefficients: Vec<Complex<f64>>,
    pub p_list: Option<Vec<f64>>,
}

/// Parses `"inf"`, `"infinity"` (any case, optional `+`) or a decimal.
pub fn parse_exponent(s: &str) -> Result<f64, String> {
    let t = s.trim();
    match t.trim_start_matches('+').to_ascii_lowercase().as_str() {
        "inf" | "infinity" | "∞" => Ok(f64::INFINITY),
        _ => t
            .parse::<f64>()
            .map_err(|_| format!("invalid exponent `{s}`")),
    }
}

impl RawExponent {
    fn resolve(&self) -> Result<f64, CliError> {
        match self {
            RawExponent::Number(p) => Ok(*p),
            RawExponent::Text(s) => parse_exponent(s).map_err(CliError::Usage),
        }
    }
}

fn scalars(field: Field, what: &str, raw: &[RawScalar]) -> Result<Vec<Complex<f64>>, CliError> {
    raw.iter()
        .enumerate()
        .map(|(i, s)| match (*s, field) {
            (RawScalar::Real(r), _) => Ok(Complex::new(r, 0.0)),
            (RawScalar::Complex([re, im]), Field::Complex) => Ok(Complex::new(re, im)),
            (RawScalar::Complex(_), Field::Real) => Err(CliError::Usage(format!(
                "{what}[{i}]: complex pair in a real document"
            ))),
        })
        .collect()
}

impl InputDocument {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        let raw: RawDocument = serde_json::from_str(text)?;
        let field = match raw.field {
            RawField::Real => Field::Real,
            RawField::Complex => Field::Complex,
        };
        let x = Vector::new(scalars(field, "x", &raw.x)?)?;
        let vectors = raw
            .family
            .iter()
            .enumerate()
            .map(|(i, v)| Ok(Vector::new(scalars(field, &format!("family[{i}]"), v)?)?))
            .collect::<Result<Vec<_>, CliError>>()?;
        let family = VectorFamily::new(field, x.dim(), vectors)?;
        let coefficients = match &raw.coefficients {
            Some(c) => {
                let c = scalars(field, "coefficients", c)?;
                if c.len() != family.len() {
                    return Err(BoundError::Shape {
                        what: "coefficients",
                        expected: family.len(),
                        found: c.len(),
                    }
                    .into());
                }
                c
            }
            None => vec![Complex::new(1.0, 0.0); family.len()],
        };
        let p_list = raw
            .p_list
            .map(|ps| {
                ps.iter()
                    .map(RawExponent::resolve)
                    .collect::<Result<Vec<_>, _>>()
            })
            .transpose()?;
        Ok(Self {
            field,
            x,
            family,
            coefficients,
            p_list,
        })
    }

    pub fn read(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
            path: path.display().to_string(),
            source,
        })?;
        Self::parse(&text)
    }
}
