//! Matrix containers for the three evaluation regimes: symbolic entries,
//! exact rationals, and certified enclosures.

use rug::Rational;

use super::interval::Interval;
use super::scalar::Scalar;
use crate::error::Result;

/// A square matrix of symbolic entries, row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct Matrix {
    n: usize,
    entries: Vec<Scalar>,
}

impl Matrix {
    pub fn from_entries(n: usize, entries: Vec<Scalar>) -> Self {
        assert_eq!(entries.len(), n * n, "entry count must be n^2");
        Matrix { n, entries }
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Self {
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                entries.push(f(i, j));
            }
        }
        Matrix { n, entries }
    }

    /// Fallible construction, for entry builders that can hit domain errors.
    pub fn try_from_fn(
        n: usize,
        mut f: impl FnMut(usize, usize) -> Result<Scalar>,
    ) -> Result<Self> {
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                entries.push(f(i, j)?);
            }
        }
        Ok(Matrix { n, entries })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn entry(&self, i: usize, j: usize) -> &Scalar {
        &self.entries[i * self.n + j]
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.entries
    }

    /// Structural symmetry. Entries built by the same generator for `(i,j)`
    /// and `(j,i)` compare equal, so this is exact for generated matrices
    /// and conservative for hand-assembled ones.
    pub fn is_symmetric(&self) -> bool {
        for i in 0..self.n {
            for j in (i + 1)..self.n {
                if self.entry(i, j) != self.entry(j, i) {
                    return false;
                }
            }
        }
        true
    }

    /// Structural Hankel test: the entry depends only on `i + j`.
    pub fn is_hankel(&self) -> bool {
        for s in 1..(2 * self.n).saturating_sub(2) {
            let first = s.saturating_sub(self.n - 1);
            let mut prev: Option<(usize, usize)> = None;
            for i in first..=s.min(self.n - 1) {
                let j = s - i;
                if let Some((pi, pj)) = prev {
                    if self.entry(pi, pj) != self.entry(i, j) {
                        return false;
                    }
                }
                prev = Some((i, j));
            }
        }
        true
    }

    /// Exact form when every entry is an exact rational.
    pub fn as_exact(&self) -> Option<ExactMatrix> {
        let mut entries = Vec::with_capacity(self.entries.len());
        for e in &self.entries {
            entries.push(e.as_exact()?.clone());
        }
        Some(ExactMatrix {
            n: self.n,
            entries,
        })
    }

    pub fn eval(&self, prec: u32) -> IntervalMatrix {
        IntervalMatrix {
            n: self.n,
            entries: self.entries.iter().map(|e| e.eval(prec)).collect(),
            prec,
        }
    }

    pub fn try_map(&self, mut f: impl FnMut(&Scalar) -> Result<Scalar>) -> Result<Matrix> {
        let mut entries = Vec::with_capacity(self.entries.len());
        for e in &self.entries {
            entries.push(f(e)?);
        }
        Ok(Matrix {
            n: self.n,
            entries,
        })
    }

    pub fn negate(&self) -> Matrix {
        Matrix {
            n: self.n,
            entries: self
                .entries
                .iter()
                .map(|e| Scalar::neg(e.clone()))
                .collect(),
        }
    }

    /// Submatrix on the given row and column index sets (strictly increasing).
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Matrix {
        assert_eq!(rows.len(), cols.len(), "square submatrix required");
        Matrix::from_fn(rows.len(), |a, b| self.entry(rows[a], cols[b]).clone())
    }

    /// Quadratic form `x^T M x` as a symbolic scalar, exact coefficients.
    pub fn quadratic_form(&self, x: &[Rational]) -> Scalar {
        assert_eq!(x.len(), self.n);
        let mut terms = Vec::new();
        for i in 0..self.n {
            if x[i].cmp0() == std::cmp::Ordering::Equal {
                continue;
            }
            for j in 0..self.n {
                if x[j].cmp0() == std::cmp::Ordering::Equal {
                    continue;
                }
                let c = Rational::from(&x[i] * &x[j]);
                terms.push(Scalar::scale(c, self.entry(i, j).clone()));
            }
        }
        Scalar::sum(terms)
    }
}

/// A square matrix of exact rationals.
#[derive(Clone, Debug, PartialEq)]
pub struct ExactMatrix {
    n: usize,
    entries: Vec<Rational>,
}

impl ExactMatrix {
    pub fn from_entries(n: usize, entries: Vec<Rational>) -> Self {
        assert_eq!(entries.len(), n * n, "entry count must be n^2");
        ExactMatrix { n, entries }
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                entries.push(f(i, j));
            }
        }
        ExactMatrix { n, entries }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn entry(&self, i: usize, j: usize) -> &Rational {
        &self.entries[i * self.n + j]
    }

    pub fn is_symmetric(&self) -> bool {
        for i in 0..self.n {
            for j in (i + 1)..self.n {
                if self.entry(i, j) != self.entry(j, i) {
                    return false;
                }
            }
        }
        true
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> ExactMatrix {
        assert_eq!(rows.len(), cols.len(), "square submatrix required");
        ExactMatrix::from_fn(rows.len(), |a, b| self.entry(rows[a], cols[b]).clone())
    }

    pub fn quadratic_form(&self, x: &[Rational]) -> Rational {
        assert_eq!(x.len(), self.n);
        let mut acc = Rational::new();
        for i in 0..self.n {
            for j in 0..self.n {
                acc += Rational::from(&x[i] * &x[j]) * self.entry(i, j);
            }
        }
        acc
    }

    pub fn to_symbolic(&self) -> Matrix {
        Matrix::from_fn(self.n, |i, j| Scalar::exact(self.entry(i, j).clone()))
    }
}

/// A square matrix of certified enclosures at a fixed working precision.
#[derive(Clone, Debug)]
pub struct IntervalMatrix {
    n: usize,
    entries: Vec<Interval>,
    prec: u32,
}

impl IntervalMatrix {
    pub fn from_entries(n: usize, entries: Vec<Interval>, prec: u32) -> Self {
        assert_eq!(entries.len(), n * n, "entry count must be n^2");
        IntervalMatrix { n, entries, prec }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn prec(&self) -> u32 {
        self.prec
    }

    pub fn entry(&self, i: usize, j: usize) -> &Interval {
        &self.entries[i * self.n + j]
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> IntervalMatrix {
        assert_eq!(rows.len(), cols.len(), "square submatrix required");
        let mut entries = Vec::with_capacity(rows.len() * cols.len());
        for &i in rows {
            for &j in cols {
                entries.push(self.entry(i, j).clone());
            }
        }
        IntervalMatrix {
            n: rows.len(),
            entries,
            prec: self.prec,
        }
    }

    pub fn quadratic_form(&self, x: &[Rational]) -> Interval {
        assert_eq!(x.len(), self.n);
        let mut acc = Interval::from_i64(0, self.prec);
        for i in 0..self.n {
            for j in 0..self.n {
                let c = Rational::from(&x[i] * &x[j]);
                acc = acc.add(&self.entry(i, j).mul_rational(&c));
            }
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::str::FromStr;

    fn rat(s: &str) -> Rational {
        Rational::from_str(s).unwrap()
    }

    fn power_entry(a: &Rational, b: &Rational) -> Scalar {
        let s = Rational::from(a + b);
        Scalar::pow(s.clone(), s).unwrap()
    }

    #[test]
    fn generated_matrices_are_structurally_symmetric() {
        let pts = [rat("1/2"), rat("3/2"), rat("7/3")];
        let m = Matrix::from_fn(3, |i, j| power_entry(&pts[i], &pts[j]));
        assert!(m.is_symmetric());
    }

    #[test]
    fn hankel_detection() {
        // integer points 1..4 give entries depending on i+j only
        let pts: Vec<Rational> = (1..=4).map(Rational::from).collect();
        let m = Matrix::from_fn(4, |i, j| power_entry(&pts[i], &pts[j]));
        assert!(m.is_hankel());

        let pts2 = [rat("1"), rat("2"), rat("7/2")];
        let m2 = Matrix::from_fn(3, |i, j| power_entry(&pts2[i], &pts2[j]));
        assert!(!m2.is_hankel());
    }

    #[test]
    fn exact_extraction_round_trips() {
        let pts: Vec<Rational> = (1..=3).map(Rational::from).collect();
        let m = Matrix::from_fn(3, |i, j| power_entry(&pts[i], &pts[j]));
        let e = m.as_exact().expect("integer points give exact entries");
        assert_eq!(*e.entry(0, 0), rat("4"));
        assert_eq!(*e.entry(2, 2), rat("46656"));
        assert_eq!(*e.entry(0, 2), rat("256"));
        assert!(e.is_symmetric());
    }

    #[test]
    fn half_integer_points_are_not_exact() {
        let pts = [rat("1/2"), rat("1")];
        let m = Matrix::from_fn(2, |i, j| power_entry(&pts[i], &pts[j]));
        assert!(m.as_exact().is_none());
        // but the (0,0) entry 1^1 folds
        assert_eq!(m.entry(0, 0).as_exact(), Some(&rat("1")));
    }

    #[test]
    fn quadratic_form_matches_between_regimes() {
        let pts: Vec<Rational> = (1..=3).map(Rational::from).collect();
        let m = Matrix::from_fn(3, |i, j| power_entry(&pts[i], &pts[j]));
        let x = [rat("1"), rat("-2"), rat("1")];
        let sym = m.quadratic_form(&x);
        let exact = m.as_exact().unwrap().quadratic_form(&x);
        assert_eq!(sym.as_exact(), Some(&exact));
        let iv = m.eval(64).quadratic_form(&x);
        assert!(iv.contains_rational(&exact));
    }

    #[test]
    fn interval_eval_encloses_exact_entries() {
        let pts = [rat("1/2"), rat("3/2")];
        let m = Matrix::from_fn(2, |i, j| power_entry(&pts[i], &pts[j]));
        let iv = m.eval(96);
        // (1/2+3/2)^2 = 4 exactly
        assert!(iv.entry(0, 1).contains_rational(&rat("4")));
        assert_eq!(iv.entry(0, 1).sign(), crate::numerics::sign::Sign::Positive);
    }

    #[test]
    fn submatrix_selects_rows_and_columns() {
        let e = ExactMatrix::from_fn(3, |i, j| Rational::from((i * 3 + j) as i64));
        let s = e.submatrix(&[0, 2], &[1, 2]);
        assert_eq!(*s.entry(0, 0), rat("1"));
        assert_eq!(*s.entry(1, 1), rat("8"));
    }
}
