//! Total positivity, decided through minors.
//!
//! The brute-force routes enumerate every square minor and are capped by
//! dimension, since the count grows as a central binomial coefficient. The
//! contiguous route only examines minors on consecutive index windows, which
//! is enough for strict total positivity and keeps the count polynomial. The
//! pair route applies to Hankel matrices, where strict total positivity is
//! equivalent to the matrix and its one-step shift both being positive
//! definite.
//!
//! Minors are scanned smallest order first, index sets in ascending
//! lexicographic order, rows before columns, so the reported witness is the
//! same on every run.

use std::cmp::Ordering;

use rug::Rational;

use crate::error::{Error, Result};
use crate::kernels::transform::hankel_shift;
use crate::numerics::det::{det_exact, det_interval};
use crate::numerics::matrix::Matrix;
use crate::numerics::rational::format_rational;
use crate::numerics::sign::{PrecisionSchedule, Sign};

use super::checks::{check_pd, CheckConfig};
use super::verdict::{
    Certificate, MinorValue, Outcome, PositivityClass, ValueRepr, Verdict, Witness,
};

/// Default dimension cap for the exhaustive minor scans.
pub const DEFAULT_MINOR_CAP: usize = 6;

/// Dimension limit of the enclosure determinant, which works subset by
/// subset and is exponential in `n`.
const INTERVAL_DET_LIMIT: usize = 20;

/// Are all minors nonnegative? Exhaustive, so `n` must not exceed `cap`.
pub fn check_tp_bruteforce(m: &Matrix, cfg: &CheckConfig, cap: usize) -> Result<Verdict> {
    guard_cap(m.n(), cap)?;
    total_check(m, cfg.schedule, false, false, PositivityClass::TotallyPositive)
}

/// Are all minors strictly positive? Exhaustive, so `n` must not exceed
/// `cap`.
pub fn check_stp_bruteforce(m: &Matrix, cfg: &CheckConfig, cap: usize) -> Result<Verdict> {
    guard_cap(m.n(), cap)?;
    total_check(m, cfg.schedule, true, false, PositivityClass::StrictlyTotallyPositive)
}

/// Strict total positivity through contiguous minors only: positivity of
/// every minor on consecutive rows and columns already forces positivity of
/// all minors, and there are only cubically many of them.
pub fn check_stp_fekete(m: &Matrix, cfg: &CheckConfig) -> Result<Verdict> {
    total_check(m, cfg.schedule, true, true, PositivityClass::StrictlyTotallyPositive)
}

/// Strict total positivity for Hankel matrices: equivalent to the matrix
/// and its one-step shift (drop the first column and the last row) both
/// being positive definite. Refuses non-Hankel input.
pub fn check_hankel_stp(m: &Matrix, cfg: &CheckConfig) -> Result<Verdict> {
    if !m.is_hankel() {
        return Err(Error::HankelRequired);
    }
    let class = PositivityClass::StrictlyTotallyPositive;
    let main = check_pd(m, cfg)?;
    if main.is_no() {
        return Ok(Verdict::no(
            class,
            Witness::NotPd {
                inner: Box::new(main.witness.expect("no carries a witness")),
            },
            main.precision,
        ));
    }
    let shifted = check_pd(&hankel_shift(m)?, cfg)?;
    if shifted.is_no() {
        return Ok(Verdict::no(
            class,
            Witness::ShiftedNotPd {
                inner: Box::new(shifted.witness.expect("no carries a witness")),
            },
            shifted.precision,
        ));
    }
    let precision = main.precision.max(shifted.precision);
    Ok(
        if main.outcome == Outcome::CertifiedYes && shifted.outcome == Outcome::CertifiedYes {
            Verdict::yes(
                class,
                Certificate::HankelPair {
                    main: Box::new(main.certificate.expect("yes carries a certificate")),
                    shifted: Box::new(shifted.certificate.expect("yes carries a certificate")),
                },
                precision,
            )
        } else {
            Verdict::undetermined(class, precision.unwrap_or(cfg.schedule.start))
        },
    )
}

fn guard_cap(n: usize, cap: usize) -> Result<()> {
    if n > cap {
        return Err(Error::BruteForceCapped { n, cap });
    }
    Ok(())
}

fn total_check(
    m: &Matrix,
    schedule: PrecisionSchedule,
    strict: bool,
    contiguous: bool,
    class: PositivityClass,
) -> Result<Verdict> {
    let pairs = enumerate_pairs(m.n(), contiguous);
    if let Some(exact) = m.as_exact() {
        let mut minors = Vec::with_capacity(pairs.len());
        for (rows, cols) in pairs {
            let d = det_exact(&exact.submatrix(&rows, &cols));
            if disqualifies(exact_sign(&d), strict) {
                return Ok(Verdict::no(
                    class,
                    Witness::Minor {
                        rows,
                        cols,
                        value: ValueRepr::Exact {
                            exact: format_rational(&d),
                        },
                    },
                    None,
                ));
            }
            minors.push(MinorValue {
                rows,
                cols,
                value: ValueRepr::Exact {
                    exact: format_rational(&d),
                },
            });
        }
        return Ok(Verdict::yes(class, minor_list(minors, contiguous), None));
    }
    if m.n() > INTERVAL_DET_LIMIT {
        return Err(Error::BruteForceCapped {
            n: m.n(),
            cap: INTERVAL_DET_LIMIT,
        });
    }
    let mut last = schedule.start;
    for prec in schedule.steps() {
        last = prec;
        let iv = m.eval(prec);
        let mut minors = Vec::with_capacity(pairs.len());
        let mut undecided = false;
        for (rows, cols) in &pairs {
            let d = det_interval(&iv.submatrix(rows, cols));
            let sign = d.sign();
            if disqualifies(sign, strict) {
                return Ok(Verdict::no(
                    class,
                    Witness::Minor {
                        rows: rows.clone(),
                        cols: cols.clone(),
                        value: ValueRepr::from_interval(&d),
                    },
                    Some(prec),
                ));
            }
            match sign {
                Sign::Positive | Sign::Zero => minors.push(MinorValue {
                    rows: rows.clone(),
                    cols: cols.clone(),
                    value: ValueRepr::from_interval(&d),
                }),
                _ => undecided = true,
            }
        }
        if !undecided {
            return Ok(Verdict::yes(
                class,
                minor_list(minors, contiguous),
                Some(prec),
            ));
        }
    }
    Ok(Verdict::undetermined(class, last))
}

fn exact_sign(d: &Rational) -> Sign {
    match d.cmp0() {
        Ordering::Less => Sign::Negative,
        Ordering::Equal => Sign::Zero,
        Ordering::Greater => Sign::Positive,
    }
}

fn disqualifies(sign: Sign, strict: bool) -> bool {
    match sign {
        Sign::Negative => true,
        Sign::Zero => strict,
        _ => false,
    }
}

fn minor_list(minors: Vec<MinorValue>, contiguous: bool) -> Certificate {
    if contiguous {
        Certificate::ContiguousMinorList { minors }
    } else {
        Certificate::MinorList { minors }
    }
}

/// All (row set, column set) pairs to examine, in the canonical scan order.
fn enumerate_pairs(n: usize, contiguous: bool) -> Vec<(Vec<usize>, Vec<usize>)> {
    let mut out = Vec::new();
    for k in 1..=n {
        if contiguous {
            for i in 0..=n - k {
                for j in 0..=n - k {
                    out.push(((i..i + k).collect(), (j..j + k).collect()));
                }
            }
        } else {
            let sets = combinations(n, k);
            for rows in &sets {
                for cols in &sets {
                    out.push((rows.clone(), cols.clone()));
                }
            }
        }
    }
    out
}

/// `k`-element subsets of `0..n` in ascending lexicographic order.
fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..k).collect();
    loop {
        out.push(cur.clone());
        // advance the rightmost index that still has room
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if cur[i] != i + n - k {
                break;
            }
        }
        cur[i] += 1;
        for j in i + 1..k {
            cur[j] = cur[j - 1] + 1;
        }
    }
}
