//! Definiteness checks and the classes derived from them.
//!
//! Every public function here returns a three-valued [`Verdict`]: a `yes`
//! carries a certificate that can be replayed, a `no` carries a witness that
//! can be rechecked, and `undetermined` means the precision schedule ran out
//! before either side was certified. Exactly representable matrices are
//! decided with rational arithmetic and never return `undetermined`.

use std::cmp::Ordering;

use rug::Rational;

use crate::error::{Error, Result};
use crate::kernels::transform::{entrywise_log, hadamard_power};
use crate::numerics::cholesky::{interval_cholesky, CholeskyOutcome};
use crate::numerics::det::det_interval;
use crate::numerics::interval::Interval;
use crate::numerics::ldlt::{back_substitute, exact_ldlt, Ldlt};
use crate::numerics::matrix::{ExactMatrix, IntervalMatrix, Matrix};
use crate::numerics::rational::format_rational;
use crate::numerics::sign::{PrecisionSchedule, Sign};

use super::compress::CompressionBasis;
use super::heuristic::min_eigenvector_candidate;
use super::verdict::{
    vector_strings, Certificate, Outcome, PositivityClass, ValueRepr, Verdict, Witness,
};

/// Largest dimension for which an undecided enclosure run falls back to
/// scanning all principal minors before giving up.
const MINOR_SCAN_LIMIT: usize = 10;

/// Knobs shared by every classification routine.
#[derive(Clone, Copy, Debug, Default)]
pub struct CheckConfig {
    /// Working precisions for enclosure arithmetic, lowest first.
    pub schedule: PrecisionSchedule,
}

/// Is the matrix positive semidefinite?
pub fn check_psd(m: &Matrix, cfg: &CheckConfig) -> Result<Verdict> {
    Ok(answer_to_verdict(
        definite(m, cfg.schedule, false)?,
        PositivityClass::Psd,
    ))
}

/// Is the matrix positive definite?
pub fn check_pd(m: &Matrix, cfg: &CheckConfig) -> Result<Verdict> {
    Ok(answer_to_verdict(
        definite(m, cfg.schedule, true)?,
        PositivityClass::Pd,
    ))
}

/// Is the matrix conditionally positive definite, that is, positive
/// semidefinite as a quadratic form on the zero-sum hyperplane?
pub fn check_cpd(m: &Matrix, cfg: &CheckConfig) -> Result<Verdict> {
    hyperplane(m, None, cfg, false, PositivityClass::Cpd)
}

/// Like [`check_cpd`] but in a caller-supplied basis of the hyperplane. The
/// verdict's outcome cannot depend on the basis, only the shape of the
/// evidence can.
pub fn check_cpd_in_basis(
    m: &Matrix,
    basis: &CompressionBasis,
    cfg: &CheckConfig,
) -> Result<Verdict> {
    hyperplane(m, Some(basis), cfg, false, PositivityClass::Cpd)
}

/// Is the form strictly positive on nonzero zero-sum vectors?
pub fn check_cpd_nonsingular(m: &Matrix, cfg: &CheckConfig) -> Result<Verdict> {
    hyperplane(m, None, cfg, true, PositivityClass::CpdNonsingular)
}

/// Is the matrix conditionally negative definite? Decided by negating and
/// asking the conditionally-positive question.
pub fn check_cnd(m: &Matrix, cfg: &CheckConfig) -> Result<Verdict> {
    let inner = check_cpd(&m.negate(), cfg)?;
    let class = PositivityClass::Cnd;
    Ok(match inner.outcome {
        Outcome::CertifiedYes => Verdict::yes(
            class,
            Certificate::Negation {
                inner: Box::new(inner.certificate.expect("yes carries a certificate")),
            },
            inner.precision,
        ),
        Outcome::CertifiedNo => Verdict::no(
            class,
            Witness::Negation {
                inner: Box::new(inner.witness.expect("no carries a witness")),
            },
            inner.precision,
        ),
        Outcome::Undetermined => Verdict::undetermined(
            class,
            inner.precision.unwrap_or(cfg.schedule.start),
        ),
    })
}

/// Default Hadamard powers sampled by [`check_infdiv`] before the full
/// logarithmic test: a couple of fractional powers plus small integers.
pub fn default_power_grid() -> Vec<Rational> {
    ["1/10", "1/2", "1", "2", "3"]
        .iter()
        .map(|s| s.parse().expect("literal grid"))
        .collect()
}

/// Is the matrix infinitely divisible, that is, positive semidefinite under
/// every Hadamard power `r > 0`?
///
/// Entries must be certifiably positive; otherwise fractional powers are not
/// even defined and the check refuses with [`Error::LogRequiresPositive`].
/// Sampled powers from `grid` run first because a single failing power
/// refutes the whole family cheaply. When all samples pass, the decision
/// reduces to conditional positivity of the entrywise logarithm, which is
/// equivalent to every power being semidefinite, so a `yes` from that step
/// covers all powers and not just the sampled ones.
pub fn check_infdiv(m: &Matrix, cfg: &CheckConfig, grid: &[Rational]) -> Result<Verdict> {
    if !m.is_symmetric() {
        return Err(Error::SymmetryRequired);
    }
    for r in grid {
        if r.cmp0() != Ordering::Greater {
            return Err(Error::InvalidSpec(
                "sampled powers must be positive".into(),
            ));
        }
    }
    // validates entry positivity as a side effect
    let log = entrywise_log(m, cfg.schedule)?;
    for r in grid {
        let powered = hadamard_power(m, r, cfg.schedule)?;
        if let DefiniteAnswer::No {
            evidence,
            precision,
        } = definite(&powered, cfg.schedule, false)?
        {
            return Ok(Verdict::no(
                PositivityClass::InfDiv,
                Witness::SampledPower {
                    r: format_rational(r),
                    inner: Box::new(evidence_to_witness(evidence)),
                },
                precision,
            ));
        }
    }
    let inner = check_cpd(&log, cfg)?;
    let class = PositivityClass::InfDiv;
    Ok(match inner.outcome {
        Outcome::CertifiedYes => Verdict::yes(
            class,
            Certificate::LogMatrix {
                inner: Box::new(inner.certificate.expect("yes carries a certificate")),
            },
            inner.precision,
        ),
        Outcome::CertifiedNo => Verdict::no(
            class,
            Witness::LogMatrix {
                inner: Box::new(inner.witness.expect("no carries a witness")),
            },
            inner.precision,
        ),
        Outcome::Undetermined => Verdict::undetermined(
            class,
            inner.precision.unwrap_or(cfg.schedule.start),
        ),
    })
}

/// Internal answer of the definiteness core, keeping witness vectors in
/// rational form so hyperplane callers can change coordinates exactly.
enum DefiniteAnswer {
    Yes {
        certificate: Certificate,
        precision: Option<u32>,
    },
    No {
        evidence: NoEvidence,
        precision: Option<u32>,
    },
    Undetermined {
        precision: u32,
    },
}

enum NoEvidence {
    /// `vector^T M vector` has the recorded non-positive value.
    Energy {
        vector: Vec<Rational>,
        value: ValueRepr,
    },
    /// The principal minor on `rows` has a disqualifying value.
    Minor { rows: Vec<usize>, value: ValueRepr },
}

fn evidence_to_witness(e: NoEvidence) -> Witness {
    match e {
        NoEvidence::Energy { vector, value } => Witness::Energy {
            vector: vector_strings(&vector),
            value,
        },
        NoEvidence::Minor { rows, value } => Witness::Minor {
            cols: rows.clone(),
            rows,
            value,
        },
    }
}

fn answer_to_verdict(ans: DefiniteAnswer, class: PositivityClass) -> Verdict {
    match ans {
        DefiniteAnswer::Yes {
            certificate,
            precision,
        } => Verdict::yes(class, certificate, precision),
        DefiniteAnswer::No {
            evidence,
            precision,
        } => Verdict::no(class, evidence_to_witness(evidence), precision),
        DefiniteAnswer::Undetermined { precision } => Verdict::undetermined(class, precision),
    }
}

/// Decides semidefiniteness (`strict = false`) or definiteness
/// (`strict = true`), choosing the exact route whenever every entry is a
/// rational number.
fn definite(m: &Matrix, schedule: PrecisionSchedule, strict: bool) -> Result<DefiniteAnswer> {
    if !m.is_symmetric() {
        return Err(Error::SymmetryRequired);
    }
    if let Some(exact) = m.as_exact() {
        return Ok(definite_exact(&exact, strict));
    }
    Ok(definite_interval(m, schedule, strict))
}

fn definite_exact(m: &ExactMatrix, strict: bool) -> DefiniteAnswer {
    match exact_ldlt(m) {
        Ldlt::Factored { lower, pivots } => {
            if strict {
                if let Some(k) = pivots.iter().position(|d| d.cmp0() == Ordering::Equal) {
                    // null direction: unit energy against pivot k, which is 0
                    let mut seed = vec![Rational::new(); m.n()];
                    seed[k] = Rational::from(1);
                    let vector = back_substitute(&lower, &seed, m.n());
                    debug_assert!(m.quadratic_form(&vector).cmp0() == Ordering::Equal);
                    return DefiniteAnswer::No {
                        evidence: NoEvidence::Energy {
                            vector,
                            value: ValueRepr::from_rational(&Rational::new()),
                        },
                        precision: None,
                    };
                }
            }
            DefiniteAnswer::Yes {
                certificate: Certificate::ExactPivots {
                    pivots: pivots.iter().map(format_rational).collect(),
                },
                precision: None,
            }
        }
        Ldlt::Indefinite { witness, energy } => DefiniteAnswer::No {
            evidence: NoEvidence::Energy {
                value: ValueRepr::from_rational(&energy),
                vector: witness,
            },
            precision: None,
        },
    }
}

fn definite_interval(m: &Matrix, schedule: PrecisionSchedule, strict: bool) -> DefiniteAnswer {
    let mut last = schedule.start;
    let mut last_eval = None;
    for prec in schedule.steps() {
        last = prec;
        let iv = m.eval(prec);
        match interval_cholesky(&iv) {
            CholeskyOutcome::Positive { pivots } => {
                return DefiniteAnswer::Yes {
                    certificate: Certificate::PivotEnclosures {
                        pivots: pivots.iter().map(Interval::to_decimal_strings).collect(),
                    },
                    precision: Some(prec),
                }
            }
            CholeskyOutcome::NegativePivot { index, pivots } => {
                return DefiniteAnswer::No {
                    evidence: leading_minor_evidence(index, &pivots, prec),
                    precision: Some(prec),
                }
            }
            CholeskyOutcome::ZeroPivot { index, pivots } => {
                if strict {
                    return DefiniteAnswer::No {
                        evidence: leading_minor_evidence(index, &pivots, prec),
                        precision: Some(prec),
                    };
                }
                // an exactly zero leading minor settles nothing for the
                // semidefinite question; try to refute some other way
            }
            CholeskyOutcome::Undetermined { .. } => {}
        }
        if let Some(no) = refute_with_candidate(&iv, strict) {
            return DefiniteAnswer::No {
                evidence: no,
                precision: Some(prec),
            };
        }
        last_eval = Some(iv);
    }
    if let Some(iv) = last_eval.filter(|iv| iv.n() <= MINOR_SCAN_LIMIT) {
        if let Some(no) = principal_minor_scan(&iv, strict) {
            return DefiniteAnswer::No {
                evidence: no,
                precision: Some(last),
            };
        }
    }
    DefiniteAnswer::Undetermined { precision: last }
}

/// Product of the pivot enclosures, which brackets the leading principal
/// minor that the factorization found disqualifying.
fn leading_minor_evidence(index: usize, pivots: &[Interval], prec: u32) -> NoEvidence {
    let mut minor = Interval::from_i64(1, prec);
    for p in pivots {
        minor = minor.mul(p);
    }
    NoEvidence::Minor {
        rows: (0..=index).collect(),
        value: ValueRepr::from_interval(&minor),
    }
}

/// Asks the floating-point eigensolver for a direction and keeps it only if
/// the enclosure arithmetic certifies the energy as disqualifying.
fn refute_with_candidate(iv: &IntervalMatrix, strict: bool) -> Option<NoEvidence> {
    let vector = min_eigenvector_candidate(iv)?;
    let qf = iv.quadratic_form(&vector);
    let refutes = match qf.sign() {
        Sign::Negative => true,
        Sign::Zero => strict,
        _ => false,
    };
    refutes.then(|| NoEvidence::Energy {
        value: ValueRepr::from_interval(&qf),
        vector,
    })
}

/// Last-resort refutation sweep over all principal minors, smallest order
/// first, each order in ascending index order.
fn principal_minor_scan(iv: &IntervalMatrix, strict: bool) -> Option<NoEvidence> {
    let n = iv.n();
    for k in 1..=n {
        for mask in 1u32..(1 << n) {
            if mask.count_ones() as usize != k {
                continue;
            }
            let rows: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
            let d = det_interval(&iv.submatrix(&rows, &rows));
            let refutes = match d.sign() {
                Sign::Negative => true,
                Sign::Zero => strict,
                _ => false,
            };
            if refutes {
                return Some(NoEvidence::Minor {
                    rows,
                    value: ValueRepr::from_interval(&d),
                });
            }
        }
    }
    None
}

/// Shared engine for the hyperplane-restricted classes.
fn hyperplane(
    m: &Matrix,
    basis: Option<&CompressionBasis>,
    cfg: &CheckConfig,
    strict: bool,
    class: PositivityClass,
) -> Result<Verdict> {
    if !m.is_symmetric() {
        return Err(Error::SymmetryRequired);
    }
    let n = m.n();
    if n <= 1 {
        // the zero-sum hyperplane is trivial; there is nothing to test
        return Ok(Verdict::yes(class, Certificate::Vacuous, None));
    }
    let owned;
    let basis = match basis {
        Some(b) => {
            if b.n() != n {
                return Err(Error::InvalidBasis {
                    n,
                    expected: n - 1,
                });
            }
            b
        }
        None => {
            owned = CompressionBasis::difference(n);
            &owned
        }
    };
    let g = basis.compress(m);
    Ok(match definite(&g, cfg.schedule, strict)? {
        DefiniteAnswer::Yes {
            certificate,
            precision,
        } => Verdict::yes(
            class,
            Certificate::Compression {
                basis: basis.strings(),
                inner: Box::new(certificate),
            },
            precision,
        ),
        DefiniteAnswer::No {
            evidence,
            precision,
        } => match evidence {
            NoEvidence::Energy { vector, value } => {
                let x = basis.expand(&vector);
                Verdict::no(
                    class,
                    Witness::Energy {
                        vector: vector_strings(&x),
                        value,
                    },
                    precision,
                )
            }
            NoEvidence::Minor { rows, value } => {
                match minor_to_energy(&g, basis, cfg.schedule, strict, class, precision) {
                    Some(v) => v,
                    None => Verdict::no(
                        class,
                        Witness::CompressedMinor {
                            basis: basis.strings(),
                            cols: rows.clone(),
                            rows,
                            value,
                        },
                        precision,
                    ),
                }
            }
        },
        DefiniteAnswer::Undetermined { precision } => Verdict::undetermined(class, precision),
    })
}

/// A compressed-minor refutation is sound but opaque; an energy witness in
/// the original coordinates is nicer to recheck. Try to find one.
fn minor_to_energy(
    g: &Matrix,
    basis: &CompressionBasis,
    schedule: PrecisionSchedule,
    strict: bool,
    class: PositivityClass,
    precision: Option<u32>,
) -> Option<Verdict> {
    for prec in schedule.steps() {
        let giv = g.eval(prec);
        let y = min_eigenvector_candidate(&giv)?;
        let qf = giv.quadratic_form(&y);
        let refutes = match qf.sign() {
            Sign::Negative => true,
            Sign::Zero => strict,
            _ => false,
        };
        if refutes {
            // expanding the basis combination preserves the energy exactly
            let x = basis.expand(&y);
            return Some(Verdict::no(
                class,
                Witness::Energy {
                    vector: vector_strings(&x),
                    value: ValueRepr::from_interval(&qf),
                },
                precision.max(Some(prec)),
            ));
        }
    }
    None
}
