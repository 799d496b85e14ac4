//! Entrywise and structural matrix transforms.

use rug::Rational;

use crate::error::{Error, Result};
use crate::numerics::matrix::Matrix;
use crate::numerics::scalar::Scalar;
use crate::numerics::sign::{PrecisionSchedule, Sign};

/// Certifies that an entry is strictly positive, structurally when possible
/// and by enclosure refinement otherwise.
fn certify_positive(e: &Scalar, schedule: PrecisionSchedule) -> bool {
    e.certainly_positive() || e.certified_sign(schedule).0 == Sign::Positive
}

/// Entrywise power `M^(r)`: each entry raised to the `r`-th real power.
///
/// For non-integer `r` every entry must be certifiably positive, since the
/// real power `x^r` is otherwise undefined; integer `r >= 0` needs nothing,
/// and negative integer `r` fails only on entries that are exactly zero.
pub fn hadamard_power(m: &Matrix, r: &Rational, schedule: PrecisionSchedule) -> Result<Matrix> {
    if !r.is_integer() {
        for i in 0..m.n() {
            for j in 0..m.n() {
                if !certify_positive(m.entry(i, j), schedule) {
                    return Err(Error::PowerUndefined);
                }
            }
        }
    }
    m.try_map(|e| Scalar::pow_expr(e.clone(), r))
}

/// Entrywise natural log; every entry must be certifiably positive.
pub fn entrywise_log(m: &Matrix, schedule: PrecisionSchedule) -> Result<Matrix> {
    for i in 0..m.n() {
        for j in 0..m.n() {
            if !certify_positive(m.entry(i, j), schedule) {
                return Err(Error::LogRequiresPositive);
            }
        }
    }
    m.try_map(|e| Scalar::log(e.clone()))
}

/// Entrywise exponential; total.
pub fn entrywise_exp(m: &Matrix) -> Matrix {
    m.try_map(|e| Ok(Scalar::exp(e.clone())))
        .expect("exp is total")
}

/// Drops the first column and last row of a Hankel matrix, the companion
/// matrix in the two-sided strict-positivity criterion. Requires Hankel
/// structure; the result is one order smaller.
pub fn hankel_shift(m: &Matrix) -> Result<Matrix> {
    if !m.is_hankel() {
        return Err(Error::HankelRequired);
    }
    let n = m.n();
    Ok(Matrix::from_fn(n - 1, |i, j| m.entry(i, j + 1).clone()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernels::generate::generate;
    use crate::kernels::spec::KernelSpec;
    use std::str::FromStr;

    fn rat(s: &str) -> Rational {
        Rational::from_str(s).unwrap()
    }

    fn sched() -> PrecisionSchedule {
        PrecisionSchedule::default()
    }

    #[test]
    fn integer_power_of_exact_kernel_stays_exact() {
        let m = generate(&KernelSpec::MatrixA { n: 2 }).unwrap();
        let sq = hadamard_power(&m, &rat("2"), sched()).unwrap();
        let e = sq.as_exact().unwrap();
        assert_eq!(*e.entry(0, 1), rat("16"));
        assert_eq!(*e.entry(1, 1), rat("729"));
    }

    #[test]
    fn half_power_folds_perfect_squares() {
        // [(k_i+k_j)^(k_i+k_j)] at integer points 1,3: entries 4, 256, 46656
        let m = generate(&KernelSpec::Power {
            points: vec![rat("1"), rat("3")],
        })
        .unwrap();
        let h = hadamard_power(&m, &rat("1/2"), sched()).unwrap();
        let e = h.as_exact().unwrap();
        assert_eq!(*e.entry(0, 0), rat("2"));
        assert_eq!(*e.entry(0, 1), rat("16"));
        assert_eq!(*e.entry(1, 1), rat("216"));
    }

    #[test]
    fn fractional_power_needs_positive_entries() {
        let m = Matrix::from_fn(2, |i, j| {
            Scalar::exact(rat(if i == j { "1" } else { "0" }))
        });
        assert!(matches!(
            hadamard_power(&m, &rat("1/2"), sched()),
            Err(Error::PowerUndefined)
        ));
        // integer powers are fine on the same matrix
        assert!(hadamard_power(&m, &rat("3"), sched()).is_ok());
    }

    #[test]
    fn log_of_power_kernel_gives_scaled_logs() {
        let m = generate(&KernelSpec::Power {
            points: vec![rat("1/2"), rat("3/2")],
        })
        .unwrap();
        let l = entrywise_log(&m, sched()).unwrap();
        // entry (0,0): ln(1^1) = 0
        assert_eq!(l.entry(0, 0).as_exact(), Some(&rat("0")));
        // entry (1,1): ln(3^3) = 3 ln 3, positive
        let (s, _) = l.entry(1, 1).certified_sign(sched());
        assert_eq!(s, Sign::Positive);
    }

    #[test]
    fn log_rejects_matrices_with_zero_entries() {
        let m = generate(&KernelSpec::Min { n: 2 }).unwrap();
        assert!(entrywise_log(&m, sched()).is_ok());
        let z = Matrix::from_fn(2, |i, j| {
            Scalar::exact(rat(if i == j { "1" } else { "0" }))
        });
        assert!(matches!(
            entrywise_log(&z, sched()),
            Err(Error::LogRequiresPositive)
        ));
    }

    #[test]
    fn exp_inverts_log() {
        let m = generate(&KernelSpec::Power {
            points: vec![rat("1"), rat("2")],
        })
        .unwrap();
        let back = entrywise_exp(&entrywise_log(&m, sched()).unwrap());
        assert_eq!(back.as_exact().unwrap(), m.as_exact().unwrap());
    }

    #[test]
    fn hankel_shift_drops_first_column_and_last_row() {
        let m = generate(&KernelSpec::MatrixA { n: 3 }).unwrap();
        let s = hankel_shift(&m).unwrap().as_exact().unwrap();
        // original entries: rows [1 4 27; 4 27 256; 27 256 3125]
        assert_eq!(s.n(), 2);
        assert_eq!(*s.entry(0, 0), rat("4"));
        assert_eq!(*s.entry(0, 1), rat("27"));
        assert_eq!(*s.entry(1, 0), rat("27"));
        assert_eq!(*s.entry(1, 1), rat("256"));
    }

    #[test]
    fn hankel_shift_requires_hankel_structure() {
        let m = generate(&KernelSpec::Power {
            points: vec![rat("1"), rat("2"), rat("7/2")],
        })
        .unwrap();
        assert!(matches!(hankel_shift(&m), Err(Error::HankelRequired)));
    }
}
