//! The on-disk matrix format.
//!
//! A matrix file is one JSON object: an optional embedded spec, a kind tag,
//! and the entries. Exact entries are rational strings ("11/4"); enclosure
//! entries are [lo, hi] decimal pairs valid at the file's precision tag.
//!
//! When a spec is embedded it is authoritative: classify regenerates the
//! matrix from it rather than trusting the listed entries, so verdicts on a
//! generated file match verdicts on the in-process spec exactly. The
//! entries still make the file self-describing for other consumers. A file
//! without a spec is classified from its entries as written; enclosure
//! entries never refine, so checks that need more precision than the file
//! carries come back undetermined.

use serde::{Deserialize, Serialize};
use serde_json::value::RawValue;

use poslab::kernels::{generate, KernelSpec};
use poslab::numerics::{format_rational, parse_rational, Interval, Matrix, Scalar};

#[derive(Serialize, Deserialize)]
struct FileForm {
    #[serde(skip_serializing_if = "Option::is_none", default)]
    spec: Option<Box<RawValue>>,
    kind: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    precision: Option<u32>,
    entries: Vec<Vec<Entry>>,
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum Entry {
    Exact(String),
    Enclosure([String; 2]),
}

/// A matrix read back from disk, with its spec when one was embedded.
pub struct LoadedMatrix {
    pub matrix: Matrix,
    pub spec: Option<KernelSpec>,
}

/// Renders a generated matrix to the file format. Exact matrices keep
/// their rational entries; anything irrational is written as enclosures
/// evaluated at `enclosure_prec`.
pub fn render(spec: &KernelSpec, m: &Matrix, enclosure_prec: u32) -> String {
    let spec_raw = RawValue::from_string(spec.to_json()).expect("spec json is valid");
    let form = match m.as_exact() {
        Some(exact) => FileForm {
            spec: Some(spec_raw),
            kind: "exact".to_string(),
            precision: None,
            entries: (0..exact.n())
                .map(|i| {
                    (0..exact.n())
                        .map(|j| Entry::Exact(format_rational(exact.entry(i, j))))
                        .collect()
                })
                .collect(),
        },
        None => {
            let iv = m.eval(enclosure_prec);
            FileForm {
                spec: Some(spec_raw),
                kind: "interval".to_string(),
                precision: Some(enclosure_prec),
                entries: (0..iv.n())
                    .map(|i| {
                        (0..iv.n())
                            .map(|j| {
                                let (lo, hi) = iv.entry(i, j).to_decimal_strings();
                                Entry::Enclosure([lo, hi])
                            })
                            .collect()
                    })
                    .collect(),
            }
        }
    };
    serde_json::to_string(&form).expect("matrix file serialization is infallible")
}

/// Parses a matrix file.
pub fn load(text: &str) -> Result<LoadedMatrix, String> {
    let form: FileForm =
        serde_json::from_str(text).map_err(|e| format!("malformed matrix file: {e}"))?;

    if let Some(raw) = &form.spec {
        let spec = KernelSpec::from_json(raw.get()).map_err(|e| e.to_string())?;
        let matrix = generate(&spec).map_err(|e| e.to_string())?;
        return Ok(LoadedMatrix {
            matrix,
            spec: Some(spec),
        });
    }

    let n = form.entries.len();
    if n == 0 {
        return Err("malformed matrix file: no entries".to_string());
    }
    if form.entries.iter().any(|row| row.len() != n) {
        return Err("malformed matrix file: entries must be square".to_string());
    }
    let matrix = match form.kind.as_str() {
        "exact" => build(n, &form.entries, |e| match e {
            Entry::Exact(s) => parse_rational(s)
                .map(Scalar::Exact)
                .map_err(|e| e.to_string()),
            Entry::Enclosure(_) => Err("enclosure entry in an exact matrix file".to_string()),
        })?,
        "interval" => {
            let prec = form
                .precision
                .ok_or("malformed matrix file: interval kind needs a precision tag")?;
            if prec < 2 {
                return Err("malformed matrix file: precision tag must be at least 2".to_string());
            }
            build(n, &form.entries, |e| match e {
                Entry::Enclosure([lo, hi]) => Interval::from_decimal_strings(lo, hi, prec)
                    .map(Scalar::Given)
                    .ok_or_else(|| format!("bad enclosure [{lo}, {hi}]")),
                Entry::Exact(_) => Err("exact entry in an interval matrix file".to_string()),
            })?
        }
        other => return Err(format!("malformed matrix file: unknown kind '{other}'")),
    };
    Ok(LoadedMatrix { matrix, spec: None })
}

fn build(
    n: usize,
    entries: &[Vec<Entry>],
    mut f: impl FnMut(&Entry) -> Result<Scalar, String>,
) -> Result<Matrix, String> {
    let mut scalars = Vec::with_capacity(n * n);
    for row in entries {
        for e in row {
            scalars.push(f(e).map_err(|msg| format!("malformed matrix file: {msg}"))?);
        }
    }
    Ok(Matrix::from_entries(n, scalars))
}
