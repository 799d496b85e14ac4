//! Determinants: exact fraction-free elimination and certified enclosures.

use rug::Rational;
use std::cmp::Ordering;

use super::interval::Interval;
use super::matrix::{ExactMatrix, IntervalMatrix};

/// Exact determinant by Bareiss elimination with row pivoting.
///
/// Divisions in the Bareiss recurrence are exact, which keeps intermediate
/// values from exploding the way naive cofactor expansion does, and the
/// result carries no rounding at all.
pub fn det_exact(m: &ExactMatrix) -> Rational {
    let n = m.n();
    if n == 0 {
        return Rational::from(1);
    }
    let mut a: Vec<Vec<Rational>> = (0..n)
        .map(|i| (0..n).map(|j| m.entry(i, j).clone()).collect())
        .collect();
    let mut sign = 1i32;
    let mut prev = Rational::from(1);
    for k in 0..n - 1 {
        if a[k][k].cmp0() == Ordering::Equal {
            match (k + 1..n).find(|&r| a[r][k].cmp0() != Ordering::Equal) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return Rational::new(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = Rational::from(&a[i][j] * &a[k][k]) - Rational::from(&a[i][k] * &a[k][j]);
                a[i][j] = t / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    let mut det = a[n - 1][n - 1].clone();
    if sign < 0 {
        det = -det;
    }
    det
}

/// Certified enclosure of a determinant, by expansion over column subsets.
///
/// Division-free, so it never needs a sign-definite pivot; cost is
/// `O(n * 2^n)` interval operations, fine for the small orders where
/// enclosure determinants are needed. Panics above order 20 rather than
/// silently grinding.
pub fn det_interval(m: &IntervalMatrix) -> Interval {
    let n = m.n();
    assert!(n <= 20, "enclosure determinant limited to order 20");
    let prec = m.prec();
    if n == 0 {
        return Interval::from_i64(1, prec);
    }
    // d[mask] = det of the top popcount(mask) rows on the columns in mask
    let mut d: Vec<Option<Interval>> = vec![None; 1usize << n];
    d[0] = Some(Interval::from_i64(1, prec));
    for mask in 1usize..(1 << n) {
        let row = (mask.count_ones() - 1) as usize;
        let mut acc = Interval::from_i64(0, prec);
        let mut pos = 0u32;
        for j in 0..n {
            if mask & (1 << j) == 0 {
                continue;
            }
            let sub = d[mask ^ (1 << j)]
                .as_ref()
                .expect("smaller masks filled first")
                .clone();
            let term = m.entry(row, j).mul(&sub);
            // cofactor sign alternates with the column's rank inside the mask
            acc = if (row as u32 + pos).is_multiple_of(2) {
                acc.add(&term)
            } else {
                acc.sub(&term)
            };
            pos += 1;
        }
        d[mask] = Some(acc);
    }
    d[(1 << n) - 1].take().unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::matrix::Matrix;
    use crate::numerics::scalar::Scalar;
    use rug::ops::Pow;
    use std::str::FromStr;

    fn rat(s: &str) -> Rational {
        Rational::from_str(s).unwrap()
    }

    fn det_cofactor(m: &ExactMatrix) -> Rational {
        let n = m.n();
        if n == 0 {
            return Rational::from(1);
        }
        if n == 1 {
            return m.entry(0, 0).clone();
        }
        let mut acc = Rational::new();
        let rows: Vec<usize> = (1..n).collect();
        for j in 0..n {
            let cols: Vec<usize> = (0..n).filter(|&c| c != j).collect();
            let minor = det_cofactor(&m.submatrix(&rows, &cols));
            let term = Rational::from(m.entry(0, j) * &minor);
            if j % 2 == 0 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        acc
    }

    fn power_matrix(pts: &[i64]) -> ExactMatrix {
        ExactMatrix::from_fn(pts.len(), |i, j| {
            let s = u32::try_from(pts[i] + pts[j]).unwrap();
            Rational::from(s).pow(s as i32)
        })
    }

    #[test]
    fn known_determinants() {
        // [(i+j-1)^(i+j-1)] for 1-based i,j is the power matrix at 1/2-offset
        // integer points; orders 2 and 3 have hand-checked determinants.
        let a2 = ExactMatrix::from_entries(
            2,
            vec![rat("1"), rat("4"), rat("4"), rat("27")],
        );
        assert_eq!(det_exact(&a2), rat("11"));
        let a3 = ExactMatrix::from_entries(
            3,
            vec![
                rat("1"),
                rat("4"),
                rat("27"),
                rat("4"),
                rat("27"),
                rat("256"),
                rat("27"),
                rat("256"),
                rat("3125"),
            ],
        );
        assert_eq!(det_exact(&a3), rat("4452"));
    }

    #[test]
    fn zero_column_means_zero_det() {
        let m = ExactMatrix::from_fn(3, |i, j| {
            if j == 1 {
                Rational::new()
            } else {
                Rational::from((i + j) as i64 + 1)
            }
        });
        assert_eq!(det_exact(&m), rat("0"));
    }

    #[test]
    fn pivoting_handles_leading_zero() {
        let m = ExactMatrix::from_entries(
            2,
            vec![rat("0"), rat("1"), rat("1"), rat("0")],
        );
        assert_eq!(det_exact(&m), rat("-1"));
    }

    #[test]
    fn bareiss_matches_cofactor_on_structured_inputs() {
        for pts in [vec![1, 2], vec![1, 2, 3], vec![1, 3, 4, 6], vec![2, 3, 5, 7, 8]] {
            let m = power_matrix(&pts);
            assert_eq!(det_exact(&m), det_cofactor(&m));
        }
        // rational entries with mixed signs
        let m = ExactMatrix::from_fn(4, |i, j| {
            rat(&format!("{}/{}", (i as i64 * 7 - j as i64 * 5) % 11, j + 2))
        });
        assert_eq!(det_exact(&m), det_cofactor(&m));
    }

    #[test]
    fn interval_det_encloses_exact_det() {
        let pts = vec![1, 2, 4, 5];
        let exact = power_matrix(&pts);
        let truth = det_exact(&exact);
        let iv = det_interval(&exact.to_symbolic().eval(128));
        assert!(iv.contains_rational(&truth));
    }

    #[test]
    fn interval_det_on_irrational_entries_has_certified_sign() {
        // [[1, sqrt2], [sqrt2, 3]] has determinant 1 > 0
        let sqrt2 = Scalar::pow(rat("2"), rat("1/2")).unwrap();
        let m = Matrix::from_entries(
            2,
            vec![
                Scalar::one(),
                sqrt2.clone(),
                sqrt2,
                Scalar::exact(rat("3")),
            ],
        );
        let iv = det_interval(&m.eval(64));
        assert!(iv.contains_rational(&rat("1")));
        assert_eq!(iv.sign(), crate::numerics::sign::Sign::Positive);
    }
}
