//! Interval Cholesky factorization for certifying strict positive
//! definiteness of matrices with enclosure entries.
//!
//! Each pivot is an enclosure of the exact Cholesky pivot. A pivot that is
//! certainly positive extends the factorization; one that is certainly
//! negative proves the corresponding leading principal minor negative (the
//! minor is the product of the pivots so far). A pivot straddling zero means
//! the working precision cannot decide, and the caller escalates.

use super::interval::Interval;
use super::matrix::IntervalMatrix;
use super::sign::Sign;

#[derive(Clone, Debug)]
pub enum CholeskyOutcome {
    /// Every pivot certified `> 0`: the matrix (any symmetric matrix inside
    /// the enclosure) is positive definite. Pivot enclosures are the
    /// certificate.
    Positive { pivots: Vec<Interval> },
    /// Pivot `index` certified `< 0`: the leading principal minor of order
    /// `index + 1` is negative. `pivots` includes the offending pivot last,
    /// and their product encloses that minor.
    NegativePivot { index: usize, pivots: Vec<Interval> },
    /// Pivot `index` is exactly zero: the leading principal minor of order
    /// `index + 1` vanishes, so the matrix is singular and not PD.
    ZeroPivot { index: usize, pivots: Vec<Interval> },
    /// Pivot `index` straddles zero at this precision.
    Undetermined { index: usize },
}

/// Runs the factorization on a symmetric enclosure matrix.
pub fn interval_cholesky(m: &IntervalMatrix) -> CholeskyOutcome {
    let n = m.n();
    let mut l: Vec<Vec<Interval>> = vec![Vec::new(); n];
    let mut pivots: Vec<Interval> = Vec::with_capacity(n);
    for k in 0..n {
        let mut d = m.entry(k, k).clone();
        for j in 0..k {
            d = d.sub(&l[k][j].square());
        }
        match d.sign() {
            Sign::Positive => {
                let root = d.sqrt();
                pivots.push(d);
                let mut col = Vec::with_capacity(n - k - 1);
                for i in k + 1..n {
                    let mut v = m.entry(i, k).clone();
                    for j in 0..k {
                        v = v.sub(&l[i][j].mul(&l[k][j]));
                    }
                    col.push(v.div(&root));
                }
                l[k].push(root);
                for (i, v) in (k + 1..n).zip(col) {
                    l[i].push(v);
                }
            }
            Sign::Negative => {
                pivots.push(d);
                return CholeskyOutcome::NegativePivot {
                    index: k,
                    pivots,
                };
            }
            Sign::Zero => {
                pivots.push(d);
                return CholeskyOutcome::ZeroPivot { index: k, pivots };
            }
            Sign::Undetermined => {
                return CholeskyOutcome::Undetermined { index: k };
            }
        }
    }
    CholeskyOutcome::Positive { pivots }
}
