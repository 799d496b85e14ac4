//! Exact symmetric elimination `M = L D L^T` with certified indefiniteness
//! witnesses.
//!
//! For a symmetric matrix over the rationals this decides semidefiniteness
//! outright: elimination either completes with all pivots `>= 0` (the matrix
//! is PSD, and PD iff all pivots are `> 0`), or it exposes a direction of
//! negative energy. That direction is returned as an exact vector `x` with
//! `x^T M x < 0`, checkable by anyone with a rational arithmetic library.
//!
//! A zero pivot is legal only when its entire remaining column is zero;
//! otherwise the `2x2` block `[[0, a], [a, c]]` in the Schur complement is
//! indefinite and yields a witness with energy exactly `-1`.

use rug::Rational;
use std::cmp::Ordering;

use super::matrix::ExactMatrix;

/// Result of exact symmetric elimination.
#[derive(Clone, Debug)]
pub enum Ldlt {
    /// Completed factorization; all pivots are `>= 0`.
    Factored {
        /// Unit lower-triangular factor, full storage.
        lower: Vec<Vec<Rational>>,
        /// Diagonal of `D`, one pivot per step.
        pivots: Vec<Rational>,
    },
    /// The matrix is not PSD: `witness^T M witness = energy < 0`.
    Indefinite {
        witness: Vec<Rational>,
        energy: Rational,
    },
}

/// Eliminates a symmetric matrix. The caller guarantees symmetry.
pub fn exact_ldlt(m: &ExactMatrix) -> Ldlt {
    let n = m.n();
    debug_assert!(m.is_symmetric());
    let mut s: Vec<Vec<Rational>> = (0..n)
        .map(|i| (0..n).map(|j| m.entry(i, j).clone()).collect())
        .collect();
    let mut lower: Vec<Vec<Rational>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| Rational::from(i32::from(i == j)))
                .collect()
        })
        .collect();
    let mut pivots: Vec<Rational> = Vec::with_capacity(n);

    for k in 0..n {
        let d = s[k][k].clone();
        match d.cmp0() {
            Ordering::Less => {
                // energy of e_k against the Schur complement is d itself
                let mut seed = vec![Rational::new(); n];
                seed[k] = Rational::from(1);
                let witness = back_substitute(&lower, &seed, k);
                return Ldlt::Indefinite { witness, energy: d };
            }
            Ordering::Equal => {
                if let Some(i) = (k + 1..n).find(|&i| s[i][k].cmp0() != Ordering::Equal) {
                    // [[0, a], [a, c]] block: choose t so the energy is -1
                    let a = s[i][k].clone();
                    let c = s[i][i].clone();
                    let t = -(c + Rational::from(1)) / (Rational::from(2) * a);
                    let mut seed = vec![Rational::new(); n];
                    seed[k] = t;
                    seed[i] = Rational::from(1);
                    let witness = back_substitute(&lower, &seed, k);
                    return Ldlt::Indefinite {
                        witness,
                        energy: Rational::from(-1),
                    };
                }
                // zero pivot with a zero column: a null direction, still PSD
                pivots.push(Rational::new());
            }
            Ordering::Greater => {
                for i in k + 1..n {
                    let l = Rational::from(&s[i][k] / &d);
                    for j in k + 1..=i {
                        let upd = Rational::from(&l * &s[j][k]);
                        s[i][j] -= upd;
                    }
                    lower[i][k] = l;
                }
                // mirror the strictly-lower update into the upper triangle
                for i in k + 1..n {
                    for j in i + 1..n {
                        s[i][j] = s[j][i].clone();
                    }
                }
                pivots.push(d);
            }
        }
    }
    Ldlt::Factored { lower, pivots }
}

/// Solves `L^T x = seed` where only the first `built` columns of `L` carry
/// multipliers (later columns are still identity). The returned `x` satisfies
/// `x^T M x = seed^T S seed` for the Schur complement `S` at step `built`.
pub fn back_substitute(
    lower: &[Vec<Rational>],
    seed: &[Rational],
    built: usize,
) -> Vec<Rational> {
    let n = seed.len();
    let mut x = seed.to_vec();
    for i in (0..built.min(n)).rev() {
        let mut acc = seed[i].clone();
        for (j, xj) in x.iter().enumerate().take(n).skip(i + 1) {
            if lower[j][i].cmp0() != Ordering::Equal && xj.cmp0() != Ordering::Equal {
                acc -= Rational::from(&lower[j][i] * xj);
            }
        }
        x[i] = acc;
    }
    x
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::str::FromStr;

    fn rat(s: &str) -> Rational {
        Rational::from_str(s).unwrap()
    }

    fn mat(n: usize, vals: &[&str]) -> ExactMatrix {
        ExactMatrix::from_entries(n, vals.iter().map(|v| rat(v)).collect())
    }

    fn energy(m: &ExactMatrix, x: &[Rational]) -> Rational {
        m.quadratic_form(x)
    }

    #[test]
    fn positive_definite_factors_with_positive_pivots() {
        let m = mat(2, &["1", "4", "4", "27"]);
        match exact_ldlt(&m) {
            Ldlt::Factored { pivots, .. } => {
                assert_eq!(pivots, vec![rat("1"), rat("11")]);
            }
            Ldlt::Indefinite { .. } => panic!("PD matrix reported indefinite"),
        }
    }

    #[test]
    fn psd_singular_gets_zero_pivot() {
        // rank-1 Gram matrix of (1, 2)
        let m = mat(2, &["1", "2", "2", "4"]);
        match exact_ldlt(&m) {
            Ldlt::Factored { pivots, .. } => {
                assert_eq!(pivots, vec![rat("1"), rat("0")]);
            }
            Ldlt::Indefinite { .. } => panic!("PSD matrix reported indefinite"),
        }
    }

    #[test]
    fn negative_pivot_witness_checks_out() {
        // trace 0 with nonzero entries: indefinite
        let m = mat(2, &["1", "3", "3", "1"]);
        match exact_ldlt(&m) {
            Ldlt::Indefinite { witness, energy: e } => {
                assert_eq!(energy(&m, &witness), e);
                assert!(e.cmp0() == std::cmp::Ordering::Less);
            }
            Ldlt::Factored { .. } => panic!("indefinite matrix factored"),
        }
    }

    #[test]
    fn zero_pivot_with_nonzero_column_yields_energy_minus_one() {
        let m = mat(2, &["0", "1", "1", "5"]);
        match exact_ldlt(&m) {
            Ldlt::Indefinite { witness, energy: e } => {
                assert_eq!(e, rat("-1"));
                assert_eq!(energy(&m, &witness), rat("-1"));
            }
            Ldlt::Factored { .. } => panic!("indefinite matrix factored"),
        }
    }

    #[test]
    fn deep_indefiniteness_surfaces_through_schur_complement() {
        // corner 3000 keeps det positive (3077); corner 100 drives it to
        // -28823 while the leading 2x2 stays PD
        let m = mat(
            3,
            &["1", "4", "27", "4", "27", "256", "27", "256", "3000"],
        );
        let m2 = mat(
            3,
            &["1", "4", "27", "4", "27", "256", "27", "256", "100"],
        );
        match exact_ldlt(&m2) {
            Ldlt::Indefinite { witness, energy: e } => {
                assert_eq!(energy(&m2, &witness), e);
                assert!(e.cmp0() == std::cmp::Ordering::Less);
            }
            Ldlt::Factored { pivots, .. } => panic!("expected indefinite, got {pivots:?}"),
        }
        match exact_ldlt(&m) {
            Ldlt::Factored { pivots, .. } => {
                assert!(pivots.iter().all(|p| p.cmp0() == std::cmp::Ordering::Greater));
            }
            Ldlt::Indefinite { .. } => panic!("PD matrix reported indefinite"),
        }
    }

    #[test]
    fn factorization_reconstructs_matrix() {
        let m = mat(3, &["4", "2", "2", "2", "3", "1", "2", "1", "6"]);
        match exact_ldlt(&m) {
            Ldlt::Factored { lower, pivots } => {
                let n = 3;
                for i in 0..n {
                    for j in 0..n {
                        let mut acc = Rational::new();
                        for k in 0..n {
                            acc += Rational::from(&lower[i][k] * &lower[j][k]) * &pivots[k];
                        }
                        assert_eq!(&acc, m.entry(i, j), "entry ({i},{j})");
                    }
                }
            }
            Ldlt::Indefinite { .. } => panic!("PD matrix reported indefinite"),
        }
    }

    #[test]
    fn empty_matrix_is_trivially_factored() {
        let m = ExactMatrix::from_entries(0, vec![]);
        assert!(matches!(exact_ldlt(&m), Ldlt::Factored { pivots, .. } if pivots.is_empty()));
    }
}
