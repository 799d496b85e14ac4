//! Independent confirmation of refutation witnesses.
//!
//! A `no` verdict ships evidence that any skeptic can replay against the
//! matrix. This module is that skeptic: it recomputes the claimed quantity
//! from scratch and certifies its sign, accepting nothing on faith from the
//! verdict that produced the witness. Any malformed, mismatched or
//! unconfirmable claim comes back `false`; there are no error returns,
//! because an unverifiable witness is simply not a witness.

use std::cmp::Ordering;

use rug::Rational;

use crate::kernels::transform::{entrywise_log, hadamard_power, hankel_shift};
use crate::numerics::det::{det_exact, det_interval};
use crate::numerics::matrix::Matrix;
use crate::numerics::sign::{PrecisionSchedule, Sign};

use super::compress::CompressionBasis;
use super::verdict::{PositivityClass, Witness};

/// Dimension limit of the enclosure determinant.
const INTERVAL_DET_LIMIT: usize = 20;

/// Does `witness` genuinely refute membership of `m` in `class`?
pub fn verify_witness(
    m: &Matrix,
    class: PositivityClass,
    witness: &Witness,
    schedule: PrecisionSchedule,
) -> bool {
    use PositivityClass::*;
    match (class, witness) {
        (Psd | Pd, Witness::Energy { vector, .. }) => {
            match energy_sign(m, vector, schedule) {
                Some(Sign::Negative) => true,
                Some(Sign::Zero) => class == Pd,
                _ => false,
            }
        }
        (Psd | Pd, Witness::Minor { rows, cols, .. }) => {
            // definiteness is refuted by principal minors only
            if rows != cols {
                return false;
            }
            match minor_sign(m, rows, cols, schedule) {
                Some(Sign::Negative) => true,
                Some(Sign::Zero) => class == Pd,
                _ => false,
            }
        }
        (Cpd | CpdNonsingular, Witness::Energy { vector, .. }) => {
            match parse_vector(vector, m.n()) {
                Some(x) if zero_sum(&x) => {}
                _ => return false,
            }
            match energy_sign(m, vector, schedule) {
                Some(Sign::Negative) => true,
                Some(Sign::Zero) => class == CpdNonsingular,
                _ => false,
            }
        }
        (
            Cpd | CpdNonsingular,
            Witness::CompressedMinor {
                basis, rows, cols, ..
            },
        ) => {
            if rows != cols {
                return false;
            }
            let Some(vectors) = parse_basis(basis, m.n()) else {
                return false;
            };
            let Ok(basis) = CompressionBasis::custom(m.n(), vectors) else {
                return false;
            };
            let g = basis.compress(m);
            match minor_sign(&g, rows, cols, schedule) {
                Some(Sign::Negative) => true,
                Some(Sign::Zero) => class == CpdNonsingular,
                _ => false,
            }
        }
        (Cnd, Witness::Negation { inner }) => {
            verify_witness(&m.negate(), Cpd, inner, schedule)
        }
        (InfDiv, Witness::SampledPower { r, inner }) => {
            let Ok(r) = r.parse::<Rational>() else {
                return false;
            };
            if r.cmp0() != Ordering::Greater {
                return false;
            }
            match hadamard_power(m, &r, schedule) {
                Ok(powered) => verify_witness(&powered, Psd, inner, schedule),
                Err(_) => false,
            }
        }
        (InfDiv, Witness::LogMatrix { inner }) => match entrywise_log(m, schedule) {
            Ok(log) => verify_witness(&log, Cpd, inner, schedule),
            Err(_) => false,
        },
        (TotallyPositive, Witness::Minor { rows, cols, .. }) => {
            minor_sign(m, rows, cols, schedule) == Some(Sign::Negative)
        }
        (StrictlyTotallyPositive, Witness::Minor { rows, cols, .. }) => matches!(
            minor_sign(m, rows, cols, schedule),
            Some(Sign::Negative) | Some(Sign::Zero)
        ),
        (StrictlyTotallyPositive, Witness::NotPd { inner }) => {
            m.is_hankel() && verify_witness(m, Pd, inner, schedule)
        }
        (StrictlyTotallyPositive, Witness::ShiftedNotPd { inner }) => match hankel_shift(m) {
            Ok(shifted) => verify_witness(&shifted, Pd, inner, schedule),
            Err(_) => false,
        },
        _ => false,
    }
}

/// Certified sign of `x^T M x` for the witness vector, or `None` when the
/// vector is malformed, zero, or the sign never resolves.
fn energy_sign(m: &Matrix, vector: &[String], schedule: PrecisionSchedule) -> Option<Sign> {
    let x = parse_vector(vector, m.n())?;
    if x.iter().all(|v| v.cmp0() == Ordering::Equal) {
        return None;
    }
    let (sign, _) = m.quadratic_form(&x).certified_sign(schedule);
    (sign != Sign::Undetermined).then_some(sign)
}

/// Certified sign of the minor on `rows x cols`, or `None` when indices are
/// malformed or the sign never resolves.
fn minor_sign(
    m: &Matrix,
    rows: &[usize],
    cols: &[usize],
    schedule: PrecisionSchedule,
) -> Option<Sign> {
    if rows.is_empty() || rows.len() != cols.len() {
        return None;
    }
    for list in [rows, cols] {
        if list.iter().any(|&i| i >= m.n()) {
            return None;
        }
        if list.windows(2).any(|w| w[0] >= w[1]) {
            return None;
        }
    }
    let sub = m.submatrix(rows, cols);
    if let Some(exact) = sub.as_exact() {
        return Some(match det_exact(&exact).cmp0() {
            Ordering::Less => Sign::Negative,
            Ordering::Equal => Sign::Zero,
            Ordering::Greater => Sign::Positive,
        });
    }
    if sub.n() > INTERVAL_DET_LIMIT {
        return None;
    }
    for prec in schedule.steps() {
        let d = det_interval(&sub.eval(prec));
        if d.sign() != Sign::Undetermined {
            return Some(d.sign());
        }
    }
    None
}

fn parse_vector(strings: &[String], n: usize) -> Option<Vec<Rational>> {
    if strings.len() != n {
        return None;
    }
    strings.iter().map(|s| s.parse().ok()).collect()
}

fn parse_basis(strings: &[Vec<String>], n: usize) -> Option<Vec<Vec<Rational>>> {
    strings.iter().map(|v| parse_vector(v, n)).collect()
}

fn zero_sum(x: &[Rational]) -> bool {
    x.iter().fold(Rational::new(), |a, b| a + b).cmp0() == Ordering::Equal
}
