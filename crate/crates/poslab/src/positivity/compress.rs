//! Restriction of quadratic forms to the zero-sum hyperplane.
//!
//! Conditional positivity is semidefiniteness of `x^T M x` over vectors with
//! `sum x_i = 0`. Fixing a basis `u_1, ..., u_{n-1}` of that hyperplane turns
//! the question into ordinary semidefiniteness of the compressed matrix
//! `G = [u_a^T M u_b]`, and the verdict is basis-independent because any two
//! bases differ by a congruence.

use rug::Rational;
use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::numerics::matrix::Matrix;
use crate::numerics::scalar::Scalar;

/// A rational basis of the zero-sum hyperplane in dimension `n`.
#[derive(Clone, Debug, PartialEq)]
pub struct CompressionBasis {
    n: usize,
    vectors: Vec<Vec<Rational>>,
}

impl CompressionBasis {
    /// The difference basis `u_a = e_a - e_{a+1}`.
    pub fn difference(n: usize) -> CompressionBasis {
        assert!(n >= 1);
        let mut vectors = Vec::with_capacity(n.saturating_sub(1));
        for a in 0..n.saturating_sub(1) {
            let mut v = vec![Rational::new(); n];
            v[a] = Rational::from(1);
            v[a + 1] = Rational::from(-1);
            vectors.push(v);
        }
        CompressionBasis { n, vectors }
    }

    /// A caller-supplied basis; must be `n - 1` independent zero-sum vectors.
    pub fn custom(n: usize, vectors: Vec<Vec<Rational>>) -> Result<CompressionBasis> {
        let expected = n.saturating_sub(1);
        let invalid = || Error::InvalidBasis { n, expected };
        if vectors.len() != expected {
            return Err(invalid());
        }
        for v in &vectors {
            if v.len() != n {
                return Err(invalid());
            }
            let sum: Rational = v.iter().fold(Rational::new(), |acc, x| acc + x);
            if sum.cmp0() != Ordering::Equal {
                return Err(invalid());
            }
        }
        if rank(&vectors) != expected {
            return Err(invalid());
        }
        Ok(CompressionBasis { n, vectors })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vectors(&self) -> &[Vec<Rational>] {
        &self.vectors
    }

    pub fn strings(&self) -> Vec<Vec<String>> {
        self.vectors
            .iter()
            .map(|v| v.iter().map(crate::numerics::rational::format_rational).collect())
            .collect()
    }

    /// The compressed matrix `G = [u_a^T M u_b]`, symmetric by construction.
    pub fn compress(&self, m: &Matrix) -> Matrix {
        assert_eq!(m.n(), self.n, "basis dimension must match the matrix");
        let k = self.vectors.len();
        let mut entries = vec![Scalar::zero(); k * k];
        for a in 0..k {
            for b in a..k {
                let mut terms = Vec::new();
                for (i, ca) in self.vectors[a].iter().enumerate() {
                    if ca.cmp0() == Ordering::Equal {
                        continue;
                    }
                    for (j, cb) in self.vectors[b].iter().enumerate() {
                        if cb.cmp0() == Ordering::Equal {
                            continue;
                        }
                        terms.push(Scalar::scale(
                            Rational::from(ca * cb),
                            m.entry(i, j).clone(),
                        ));
                    }
                }
                let s = Scalar::sum(terms);
                entries[a * k + b] = s.clone();
                entries[b * k + a] = s;
            }
        }
        Matrix::from_entries(k, entries)
    }

    /// Lifts compressed coordinates back: `x = sum_a y_a u_a`. The result is
    /// zero-sum, and `x^T M x` equals `y^T G y`.
    pub fn expand(&self, y: &[Rational]) -> Vec<Rational> {
        assert_eq!(y.len(), self.vectors.len());
        let mut x = vec![Rational::new(); self.n];
        for (ya, u) in y.iter().zip(&self.vectors) {
            if ya.cmp0() == Ordering::Equal {
                continue;
            }
            for (xi, ui) in x.iter_mut().zip(u) {
                *xi += Rational::from(ya * ui);
            }
        }
        x
    }
}

/// Exact row rank by Gaussian elimination.
fn rank(vectors: &[Vec<Rational>]) -> usize {
    let mut rows: Vec<Vec<Rational>> = vectors.to_vec();
    let mut rank = 0;
    let cols = rows.first().map_or(0, Vec::len);
    let mut lead = 0;
    for r in 0..rows.len() {
        while lead < cols {
            if let Some(p) = (r..rows.len()).find(|&i| rows[i][lead].cmp0() != Ordering::Equal) {
                rows.swap(r, p);
                break;
            }
            lead += 1;
        }
        if lead == cols {
            break;
        }
        let inv = rows[r][lead].clone().recip();
        for c in lead..cols {
            rows[r][c] *= &inv;
        }
        for i in r + 1..rows.len() {
            if rows[i][lead].cmp0() == Ordering::Equal {
                continue;
            }
            let f = rows[i][lead].clone();
            for c in lead..cols {
                let sub = Rational::from(&rows[r][c] * &f);
                rows[i][c] -= sub;
            }
        }
        rank += 1;
        lead += 1;
    }
    rank
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

    fn rats(ss: &[&str]) -> Vec<Rational> {
        ss.iter().map(|s| rat(s)).collect()
    }

    #[test]
    fn difference_basis_spans_hyperplane() {
        let b = CompressionBasis::difference(4);
        assert_eq!(b.vectors().len(), 3);
        for v in b.vectors() {
            let sum: Rational = v.iter().fold(Rational::new(), |a, x| a + x);
            assert_eq!(sum, Rational::new());
        }
        assert_eq!(rank(b.vectors()), 3);
    }

    #[test]
    fn compression_of_ones_matrix_vanishes() {
        let m = generate(&KernelSpec::Ones { n: 3 }).unwrap();
        let g = CompressionBasis::difference(3).compress(&m);
        for a in 0..2 {
            for b in 0..2 {
                assert_eq!(g.entry(a, b).as_exact(), Some(&Rational::new()));
            }
        }
    }

    #[test]
    fn log_kernel_compression_value() {
        // points 1/2, 3/2: G is 1x1 with value 3 ln 3 - 4 ln 2 = ln(27/16)
        let m = generate(&KernelSpec::Log {
            points: rats(&["1/2", "3/2"]),
        })
        .unwrap();
        let g = CompressionBasis::difference(2).compress(&m);
        assert_eq!(g.n(), 1);
        let iv = g.entry(0, 0).eval(64);
        // ln(27/16) = 0.5232...
        assert!(*iv.lo() > rat("52/100"));
        assert!(*iv.hi() < rat("53/100"));
    }

    #[test]
    fn expand_preserves_energy() {
        let m = generate(&KernelSpec::MatrixA { n: 3 }).unwrap();
        let basis = CompressionBasis::difference(3);
        let g = basis.compress(&m).as_exact().unwrap();
        let y = rats(&["2", "-1/3"]);
        let x = basis.expand(&y);
        assert_eq!(x.iter().fold(Rational::new(), |a, v| a + v), Rational::new());
        let me = m.as_exact().unwrap();
        assert_eq!(me.quadratic_form(&x), g.quadratic_form(&y));
    }

    #[test]
    fn custom_basis_must_be_zero_sum_and_independent() {
        assert!(CompressionBasis::custom(3, vec![rats(&["1", "-1", "0"]), rats(&["1", "0", "-1"])]).is_ok());
        // not zero-sum
        assert!(CompressionBasis::custom(3, vec![rats(&["1", "1", "0"]), rats(&["1", "0", "-1"])]).is_err());
        // dependent
        assert!(CompressionBasis::custom(
            3,
            vec![rats(&["1", "-1", "0"]), rats(&["2", "-2", "0"])]
        )
        .is_err());
        // wrong count
        assert!(CompressionBasis::custom(3, vec![rats(&["1", "-1", "0"])]).is_err());
        // wrong length
        assert!(CompressionBasis::custom(3, vec![rats(&["1", "-1"]), rats(&["1", "0", "-1"])]).is_err());
    }

    #[test]
    fn compressed_matrix_is_structurally_symmetric() {
        let m = generate(&KernelSpec::Power {
            points: rats(&["1/2", "3/2", "5/2", "7/2"]),
        })
        .unwrap();
        let g = CompressionBasis::difference(4).compress(&m);
        assert!(g.is_symmetric());
    }
}
