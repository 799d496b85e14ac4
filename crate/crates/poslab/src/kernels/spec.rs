//! Kernel family descriptions and their canonical JSON form.
//!
//! A [`KernelSpec`] pins down one concrete matrix: the family plus its
//! parameters. The JSON encoding is canonical in the byte-for-byte sense:
//! serializing a spec, parsing it back, and serializing again yields the
//! identical string, so specs can be embedded in reports and matrix files
//! and compared textually.

use rug::Rational;
use serde::{Deserialize, Serialize};
use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::numerics::rational::{format_rational, parse_rational};

/// A parameterized matrix family.
#[derive(Clone, Debug, PartialEq)]
pub enum KernelSpec {
    /// `[(p_i + p_j)^(p_i + p_j)]` on positive strictly increasing points.
    Power { points: Vec<Rational> },
    /// `[(i + j - 1)^(i + j - 1)]`, 1-based; the power kernel at half-integer
    /// points `i - 1/2`.
    MatrixA { n: usize },
    /// `[(p_i + p_j) ln(p_i + p_j)]` on positive strictly increasing points.
    Log { points: Vec<Rational> },
    /// `[1 / (p_i + p_j + lambda)]`, `lambda >= 0`.
    Cauchy { points: Vec<Rational>, lambda: Rational },
    /// `[p_i + p_j]`.
    Sum { points: Vec<Rational> },
    /// All-ones matrix.
    Ones { n: usize },
    /// `[1 / (i + j - 1)]`, 1-based.
    Hilbert { n: usize },
    /// `[min(i, j)]`, 1-based.
    Min { n: usize },
    /// `[C(i + j, i)]`, 0-based.
    Pascal { n: usize },
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "family", deny_unknown_fields)]
enum Wire {
    #[serde(rename = "power")]
    Power { points: Vec<String> },
    #[serde(rename = "matrix-a")]
    MatrixA { n: usize },
    #[serde(rename = "log")]
    Log { points: Vec<String> },
    #[serde(rename = "cauchy")]
    Cauchy { points: Vec<String>, lambda: String },
    #[serde(rename = "sum")]
    Sum { points: Vec<String> },
    #[serde(rename = "ones")]
    Ones { n: usize },
    #[serde(rename = "hilbert")]
    Hilbert { n: usize },
    #[serde(rename = "min")]
    Min { n: usize },
    #[serde(rename = "pascal")]
    Pascal { n: usize },
}

fn points_out(pts: &[Rational]) -> Vec<String> {
    pts.iter().map(format_rational).collect()
}

fn points_in(pts: &[String]) -> Result<Vec<Rational>> {
    pts.iter().map(|s| parse_rational(s)).collect()
}

impl KernelSpec {
    /// Matrix order this spec generates.
    pub fn n(&self) -> usize {
        match self {
            KernelSpec::Power { points }
            | KernelSpec::Log { points }
            | KernelSpec::Sum { points }
            | KernelSpec::Cauchy { points, .. } => points.len(),
            KernelSpec::MatrixA { n }
            | KernelSpec::Ones { n }
            | KernelSpec::Hilbert { n }
            | KernelSpec::Min { n }
            | KernelSpec::Pascal { n } => *n,
        }
    }

    /// The family tag used in JSON and reports.
    pub fn family(&self) -> &'static str {
        match self {
            KernelSpec::Power { .. } => "power",
            KernelSpec::MatrixA { .. } => "matrix-a",
            KernelSpec::Log { .. } => "log",
            KernelSpec::Cauchy { .. } => "cauchy",
            KernelSpec::Sum { .. } => "sum",
            KernelSpec::Ones { .. } => "ones",
            KernelSpec::Hilbert { .. } => "hilbert",
            KernelSpec::Min { .. } => "min",
            KernelSpec::Pascal { .. } => "pascal",
        }
    }

    /// The point list, for families parameterized by points.
    pub fn points(&self) -> Option<&[Rational]> {
        match self {
            KernelSpec::Power { points }
            | KernelSpec::Log { points }
            | KernelSpec::Sum { points }
            | KernelSpec::Cauchy { points, .. } => Some(points),
            _ => None,
        }
    }

    /// Checks the parameter constraints of the family.
    pub fn validate(&self) -> Result<()> {
        if let Some(points) = self.points() {
            validate_points(points)?;
        }
        if let KernelSpec::Cauchy { lambda, .. } = self {
            if lambda.cmp0() == Ordering::Less {
                return Err(Error::InvalidSpec(
                    "lambda must be nonnegative".to_string(),
                ));
            }
        }
        if self.n() == 0 {
            return Err(Error::InvalidSpec("order must be at least 1".to_string()));
        }
        Ok(())
    }

    /// Canonical single-line JSON.
    pub fn to_json(&self) -> String {
        let wire = match self {
            KernelSpec::Power { points } => Wire::Power {
                points: points_out(points),
            },
            KernelSpec::MatrixA { n } => Wire::MatrixA { n: *n },
            KernelSpec::Log { points } => Wire::Log {
                points: points_out(points),
            },
            KernelSpec::Cauchy { points, lambda } => Wire::Cauchy {
                points: points_out(points),
                lambda: format_rational(lambda),
            },
            KernelSpec::Sum { points } => Wire::Sum {
                points: points_out(points),
            },
            KernelSpec::Ones { n } => Wire::Ones { n: *n },
            KernelSpec::Hilbert { n } => Wire::Hilbert { n: *n },
            KernelSpec::Min { n } => Wire::Min { n: *n },
            KernelSpec::Pascal { n } => Wire::Pascal { n: *n },
        };
        serde_json::to_string(&wire).expect("spec serialization is infallible")
    }

    /// Parses and validates a spec from JSON.
    pub fn from_json(s: &str) -> Result<KernelSpec> {
        let wire: Wire =
            serde_json::from_str(s).map_err(|e| Error::InvalidSpec(e.to_string()))?;
        let spec = match wire {
            Wire::Power { points } => KernelSpec::Power {
                points: points_in(&points)?,
            },
            Wire::MatrixA { n } => KernelSpec::MatrixA { n },
            Wire::Log { points } => KernelSpec::Log {
                points: points_in(&points)?,
            },
            Wire::Cauchy { points, lambda } => KernelSpec::Cauchy {
                points: points_in(&points)?,
                lambda: parse_rational(&lambda)?,
            },
            Wire::Sum { points } => KernelSpec::Sum {
                points: points_in(&points)?,
            },
            Wire::Ones { n } => KernelSpec::Ones { n },
            Wire::Hilbert { n } => KernelSpec::Hilbert { n },
            Wire::Min { n } => KernelSpec::Min { n },
            Wire::Pascal { n } => KernelSpec::Pascal { n },
        };
        spec.validate()?;
        Ok(spec)
    }
}

/// Positive and strictly increasing, the shared precondition of all
/// point-parameterized families.
pub fn validate_points(points: &[Rational]) -> Result<()> {
    if points.is_empty() {
        return Err(Error::InvalidPoints);
    }
    for (i, p) in points.iter().enumerate() {
        if p.cmp0() != Ordering::Greater {
            return Err(Error::InvalidPoints);
        }
        if i > 0 && points[i - 1] >= *p {
            return Err(Error::InvalidPoints);
        }
    }
    Ok(())
}
