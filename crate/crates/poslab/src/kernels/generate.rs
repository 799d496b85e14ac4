//! Matrix generation for each kernel family.

use rug::ops::Pow;
use rug::{Integer, Rational};

use super::spec::KernelSpec;
use crate::error::Result;
use crate::numerics::matrix::Matrix;
use crate::numerics::scalar::Scalar;

/// Builds the matrix a spec describes. Entries that are rational fold to
/// exact scalars, so integer-point power kernels, Cauchy, Hilbert, Pascal
/// and the rest all take the exact decision paths downstream.
pub fn generate(spec: &KernelSpec) -> Result<Matrix> {
    spec.validate()?;
    let n = spec.n();
    match spec {
        KernelSpec::Power { points } => Matrix::try_from_fn(n, |i, j| {
            let s = Rational::from(&points[i] + &points[j]);
            Scalar::pow(s.clone(), s)
        }),
        KernelSpec::MatrixA { .. } => Ok(Matrix::from_fn(n, |i, j| {
            let e = (i + j + 1) as u32;
            Scalar::exact(Rational::from(Integer::from(e).pow(e)))
        })),
        KernelSpec::Log { points } => Matrix::try_from_fn(n, |i, j| {
            let s = Rational::from(&points[i] + &points[j]);
            Ok(Scalar::scale(s.clone(), Scalar::log_rat(s)?))
        }),
        KernelSpec::Cauchy { points, lambda } => Ok(Matrix::from_fn(n, |i, j| {
            let d = Rational::from(&points[i] + &points[j]) + lambda;
            Scalar::exact(d.recip())
        })),
        KernelSpec::Sum { points } => Ok(Matrix::from_fn(n, |i, j| {
            Scalar::exact(Rational::from(&points[i] + &points[j]))
        })),
        KernelSpec::Ones { .. } => Ok(Matrix::from_fn(n, |_, _| Scalar::one())),
        KernelSpec::Hilbert { .. } => Ok(Matrix::from_fn(n, |i, j| {
            Scalar::exact(Rational::from((1, (i + j + 1) as i64)))
        })),
        KernelSpec::Min { .. } => Ok(Matrix::from_fn(n, |i, j| {
            Scalar::exact(Rational::from(i.min(j) as i64 + 1))
        })),
        KernelSpec::Pascal { .. } => {
            let mut rows: Vec<Vec<Rational>> = Vec::with_capacity(n);
            for i in 0..n {
                let mut row = Vec::with_capacity(n);
                for j in 0..n {
                    let v = if i == 0 || j == 0 {
                        Rational::from(1)
                    } else {
                        Rational::from(&rows[i - 1][j] + &row[j - 1])
                    };
                    row.push(v);
                }
                rows.push(row);
            }
            Ok(Matrix::from_fn(n, |i, j| {
                Scalar::exact(rows[i][j].clone())
            }))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::numerics::det::det_exact;
    use std::str::FromStr;

    fn rat(s: &str) -> Rational {
        Rational::from_str(s).unwrap()
    }

    fn pts(s: &[&str]) -> Vec<Rational> {
        s.iter().map(|v| rat(v)).collect()
    }

    #[test]
    fn matrix_a_equals_power_kernel_at_half_integer_points() {
        let a = generate(&KernelSpec::MatrixA { n: 3 }).unwrap();
        let p = generate(&KernelSpec::Power {
            points: pts(&["1/2", "3/2", "5/2"]),
        })
        .unwrap();
        assert_eq!(a, p);
        let exact = a.as_exact().unwrap();
        assert_eq!(*exact.entry(0, 0), rat("1"));
        assert_eq!(*exact.entry(2, 2), rat("3125"));
        assert_eq!(det_exact(&exact), rat("4452"));
    }

    #[test]
    fn power_kernel_on_fractional_points_is_symbolic() {
        let m = generate(&KernelSpec::Power {
            points: pts(&["1/3", "2/3"]),
        })
        .unwrap();
        assert!(m.as_exact().is_none());
        // (1/3 + 2/3)^1 = 1 folds exactly
        assert_eq!(m.entry(0, 1).as_exact(), Some(&rat("1")));
        assert!(m.is_symmetric());
    }

    #[test]
    fn log_kernel_zero_at_unit_sum() {
        let m = generate(&KernelSpec::Log {
            points: pts(&["1/2", "3/2"]),
        })
        .unwrap();
        // (1/2+1/2) ln 1 = 0
        assert_eq!(m.entry(0, 0).as_exact(), Some(&rat("0")));
        // 2 ln 2 is irrational
        assert!(m.entry(0, 1).as_exact().is_none());
        // 3 ln 3 = 3.29583686600...
        let iv = m.entry(1, 1).eval(64);
        assert!(*iv.lo() > rat("329583/100000"));
        assert!(*iv.hi() < rat("329584/100000"));
    }

    #[test]
    fn cauchy_determinant_matches_product_formula() {
        // det [1/(p_i+p_j)] for points 1,2 is (2-1)^2 / ((2)(3)(3)(4)) = 1/72
        let m = generate(&KernelSpec::Cauchy {
            points: pts(&["1", "2"]),
            lambda: rat("0"),
        })
        .unwrap();
        let det = det_exact(&m.as_exact().unwrap());
        assert_eq!(det, rat("1/72"));
    }

    #[test]
    fn hilbert_is_cauchy_at_half_integers() {
        let h = generate(&KernelSpec::Hilbert { n: 3 }).unwrap();
        let c = generate(&KernelSpec::Cauchy {
            points: pts(&["1/2", "3/2", "5/2"]),
            lambda: rat("0"),
        })
        .unwrap();
        assert_eq!(h, c);
    }

    #[test]
    fn pascal_entries_and_unimodular_determinant() {
        let p = generate(&KernelSpec::Pascal { n: 3 }).unwrap().as_exact().unwrap();
        assert_eq!(*p.entry(1, 1), rat("2"));
        assert_eq!(*p.entry(1, 2), rat("3"));
        assert_eq!(*p.entry(2, 2), rat("6"));
        for n in 1..=6 {
            let m = generate(&KernelSpec::Pascal { n }).unwrap().as_exact().unwrap();
            assert_eq!(det_exact(&m), rat("1"), "order {n}");
        }
    }

    #[test]
    fn min_and_sum_and_ones_shapes() {
        let m = generate(&KernelSpec::Min { n: 3 }).unwrap().as_exact().unwrap();
        assert_eq!(*m.entry(2, 1), rat("2"));
        assert_eq!(det_exact(&m), rat("1"));

        let s = generate(&KernelSpec::Sum {
            points: pts(&["1", "5/2", "4"]),
        })
        .unwrap()
        .as_exact()
        .unwrap();
        assert_eq!(*s.entry(0, 2), rat("5"));
        // rank 2, so every 3x3 determinant vanishes
        assert_eq!(det_exact(&s), rat("0"));

        let e = generate(&KernelSpec::Ones { n: 4 }).unwrap().as_exact().unwrap();
        assert_eq!(det_exact(&e), rat("0"));
    }

    #[test]
    fn generation_validates_the_spec() {
        assert!(matches!(
            generate(&KernelSpec::Power {
                points: pts(&["3", "2"])
            }),
            Err(Error::InvalidPoints)
        ));
    }
}
