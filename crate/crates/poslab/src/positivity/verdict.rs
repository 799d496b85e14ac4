//! Verdicts, certificates, and witnesses.
//!
//! Every check returns a three-valued [`Verdict`]. A `yes` always carries a
//! [`Certificate`] that can be replayed; a `no` always carries a [`Witness`]
//! that any rational-arithmetic implementation can confirm independently;
//! `undetermined` carries neither and names the precision that gave up.
//! Numbers in the serialized forms are decimal or `num/den` strings, never
//! binary floats.

use rug::Rational;
use serde::{Deserialize, Serialize};

use crate::numerics::interval::Interval;
use crate::numerics::rational::format_rational;

/// The positivity classes the toolkit decides.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum PositivityClass {
    /// Positive semidefinite.
    #[serde(rename = "psd")]
    Psd,
    /// Positive definite.
    #[serde(rename = "pd")]
    Pd,
    /// Positive semidefinite on the zero-sum hyperplane.
    #[serde(rename = "cpd")]
    Cpd,
    /// Negative semidefinite on the zero-sum hyperplane.
    #[serde(rename = "cnd")]
    Cnd,
    /// Positive definite on the zero-sum hyperplane.
    #[serde(rename = "cpd-nonsingular")]
    CpdNonsingular,
    /// Every Hadamard power `r > 0` is PSD.
    #[serde(rename = "infdiv")]
    InfDiv,
    /// Every minor is nonnegative.
    #[serde(rename = "tp")]
    TotallyPositive,
    /// Every minor is strictly positive.
    #[serde(rename = "stp")]
    StrictlyTotallyPositive,
}

impl PositivityClass {
    pub fn name(self) -> &'static str {
        match self {
            PositivityClass::Psd => "psd",
            PositivityClass::Pd => "pd",
            PositivityClass::Cpd => "cpd",
            PositivityClass::Cnd => "cnd",
            PositivityClass::CpdNonsingular => "cpd-nonsingular",
            PositivityClass::InfDiv => "infdiv",
            PositivityClass::TotallyPositive => "tp",
            PositivityClass::StrictlyTotallyPositive => "stp",
        }
    }

    pub fn all() -> [PositivityClass; 8] {
        [
            PositivityClass::Psd,
            PositivityClass::Pd,
            PositivityClass::Cpd,
            PositivityClass::Cnd,
            PositivityClass::CpdNonsingular,
            PositivityClass::InfDiv,
            PositivityClass::TotallyPositive,
            PositivityClass::StrictlyTotallyPositive,
        ]
    }

    pub fn parse(s: &str) -> Option<PositivityClass> {
        PositivityClass::all().into_iter().find(|c| c.name() == s)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Outcome {
    #[serde(rename = "yes")]
    CertifiedYes,
    #[serde(rename = "no")]
    CertifiedNo,
    #[serde(rename = "undetermined")]
    Undetermined,
}

/// A reported number: exact `num/den`, or a decimal enclosure whose
/// endpoints were rounded outward.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ValueRepr {
    Exact { exact: String },
    Enclosure { lo: String, hi: String },
}

impl ValueRepr {
    pub fn from_rational(q: &Rational) -> ValueRepr {
        ValueRepr::Exact {
            exact: format_rational(q),
        }
    }

    pub fn from_interval(iv: &Interval) -> ValueRepr {
        let (lo, hi) = iv.to_decimal_strings();
        ValueRepr::Enclosure { lo, hi }
    }
}

/// Replayable evidence for a `yes`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum Certificate {
    /// Diagonal of an exact `L D L^T` factorization; all entries `>= 0`,
    /// strictly positive when the claim is definiteness.
    #[serde(rename = "exact-pivots")]
    ExactPivots { pivots: Vec<String> },
    /// Cholesky pivot enclosures, each certified strictly positive.
    #[serde(rename = "pivot-enclosures")]
    PivotEnclosures { pivots: Vec<(String, String)> },
    /// Every minor of the matrix with its certified value.
    #[serde(rename = "minor-list")]
    MinorList { minors: Vec<MinorValue> },
    /// Contiguous minors only, which suffice for strict total positivity.
    #[serde(rename = "contiguous-minor-list")]
    ContiguousMinorList { minors: Vec<MinorValue> },
    /// Restriction to the zero-sum hyperplane in the given basis, plus the
    /// certificate for the compressed matrix.
    #[serde(rename = "compression")]
    Compression {
        basis: Vec<Vec<String>>,
        inner: Box<Certificate>,
    },
    /// Certificate about the entrywise log of the matrix.
    #[serde(rename = "log-matrix")]
    LogMatrix { inner: Box<Certificate> },
    /// Certificate about the entrywise negation of the matrix.
    #[serde(rename = "negation")]
    Negation { inner: Box<Certificate> },
    /// Definiteness of a Hankel matrix and of its column-shift companion.
    #[serde(rename = "hankel-pair")]
    HankelPair {
        main: Box<Certificate>,
        shifted: Box<Certificate>,
    },
    /// Nothing to prove (zero-dimensional restriction).
    #[serde(rename = "vacuous")]
    Vacuous,
}

/// One minor and its value.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MinorValue {
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
    pub value: ValueRepr,
}

/// Independently checkable evidence for a `no`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum Witness {
    /// A vector with non-positive energy `x^T M x`; strictly negative when
    /// refuting semidefiniteness, possibly zero when refuting strictness.
    /// For hyperplane classes the vector also sums to zero.
    #[serde(rename = "energy")]
    Energy {
        vector: Vec<String>,
        value: ValueRepr,
    },
    /// A minor with a disqualifying sign.
    #[serde(rename = "minor")]
    Minor {
        rows: Vec<usize>,
        cols: Vec<usize>,
        value: ValueRepr,
    },
    /// A disqualifying minor of the hyperplane compression in the given
    /// basis.
    #[serde(rename = "compressed-minor")]
    CompressedMinor {
        basis: Vec<Vec<String>>,
        rows: Vec<usize>,
        cols: Vec<usize>,
        value: ValueRepr,
    },
    /// The Hadamard `r`-th power fails semidefiniteness.
    #[serde(rename = "sampled-power")]
    SampledPower { r: String, inner: Box<Witness> },
    /// The entrywise log of the matrix fails the inner claim.
    #[serde(rename = "log-matrix")]
    LogMatrix { inner: Box<Witness> },
    /// The entrywise negation of the matrix fails the inner claim.
    #[serde(rename = "negation")]
    Negation { inner: Box<Witness> },
    /// The matrix itself fails positive definiteness, which a strictly
    /// totally positive matrix cannot.
    #[serde(rename = "not-pd")]
    NotPd { inner: Box<Witness> },
    /// The column-shift companion fails positive definiteness; its minors
    /// are minors of the original, so strict total positivity fails.
    #[serde(rename = "shifted-not-pd")]
    ShiftedNotPd { inner: Box<Witness> },
}

/// The answer to one classification question.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Verdict {
    pub class: PositivityClass,
    pub outcome: Outcome,
    /// Highest working precision consulted, absent for purely exact runs.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub precision: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub certificate: Option<Certificate>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<Witness>,
}

impl Verdict {
    pub fn yes(class: PositivityClass, certificate: Certificate, precision: Option<u32>) -> Verdict {
        Verdict {
            class,
            outcome: Outcome::CertifiedYes,
            precision,
            certificate: Some(certificate),
            witness: None,
        }
    }

    pub fn no(class: PositivityClass, witness: Witness, precision: Option<u32>) -> Verdict {
        Verdict {
            class,
            outcome: Outcome::CertifiedNo,
            precision,
            certificate: None,
            witness: Some(witness),
        }
    }

    pub fn undetermined(class: PositivityClass, precision: u32) -> Verdict {
        Verdict {
            class,
            outcome: Outcome::Undetermined,
            precision: Some(precision),
            certificate: None,
            witness: None,
        }
    }

    pub fn is_yes(&self) -> bool {
        self.outcome == Outcome::CertifiedYes
    }

    pub fn is_no(&self) -> bool {
        self.outcome == Outcome::CertifiedNo
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("verdict serialization is infallible")
    }
}

/// Renders a rational vector for a witness or basis.
pub fn vector_strings(v: &[Rational]) -> Vec<String> {
    v.iter().map(format_rational).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::str::FromStr;

    #[test]
    fn verdict_json_shape() {
        let v = Verdict::yes(
            PositivityClass::Pd,
            Certificate::ExactPivots {
                pivots: vec!["1".into(), "11".into()],
            },
            None,
        );
        assert_eq!(
            v.to_json(),
            r#"{"class":"pd","outcome":"yes","certificate":{"kind":"exact-pivots","pivots":["1","11"]}}"#
        );
    }

    #[test]
    fn witness_json_round_trips() {
        let w = Witness::SampledPower {
            r: "1/10".into(),
            inner: Box::new(Witness::Energy {
                vector: vec!["1".into(), "-2".into(), "1".into()],
                value: ValueRepr::Exact {
                    exact: "-1/7".into(),
                },
            }),
        };
        let v = Verdict::no(PositivityClass::InfDiv, w, Some(128));
        let j = v.to_json();
        let back: Verdict = serde_json::from_str(&j).unwrap();
        assert_eq!(back, v);
        assert_eq!(back.to_json(), j);
    }

    #[test]
    fn enclosure_values_serialize_with_both_endpoints() {
        let q = Rational::from_str("-3/4").unwrap();
        let iv = Interval::from_rational(&q, 64);
        let v = ValueRepr::from_interval(&iv);
        let j = serde_json::to_string(&v).unwrap();
        assert!(j.contains("\"lo\"") && j.contains("\"hi\""));
        let back: ValueRepr = serde_json::from_str(&j).unwrap();
        assert_eq!(back, v);
    }

    #[test]
    fn class_names_round_trip() {
        for c in PositivityClass::all() {
            assert_eq!(PositivityClass::parse(c.name()), Some(c));
        }
        assert_eq!(PositivityClass::parse("banana"), None);
    }
}
