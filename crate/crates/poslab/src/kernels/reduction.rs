//! Reduction of fractional-point power kernels to integer-point ones.
//!
//! For points `p_j = k_j / m` with a common denominator `m`, each entry
//! factors as
//!
//! ```text
//! (p_i + p_j)^(p_i + p_j) = m^(-p_i) * (k_i + k_j)^((k_i + k_j)/m) * m^(-p_j)
//! ```
//!
//! so the Hadamard `r`-th power of the fractional-point kernel is a diagonal
//! congruence `X * K^(r/m) * X` of a Hadamard power of the *integer*-point
//! kernel `K`. Diagonal congruences preserve every positivity class of
//! interest, which transfers results between the two settings.

use rug::ops::Pow;
use rug::{Integer, Rational};

use super::spec::validate_points;
use crate::error::{Error, Result};
use crate::numerics::matrix::{ExactMatrix, Matrix};
use crate::numerics::rational::denominator_lcm;
use crate::numerics::scalar::Scalar;

/// Exponents above this would make the integer-point kernel entries
/// unreasonably large to materialize exactly.
const MAX_SCALED_SUM: u32 = 1_000_000;

/// The pieces of the factorization `Q^(r) = X * K^(r/m) * X`.
#[derive(Clone, Debug)]
pub struct Reduction {
    /// Common denominator `m` of the points.
    pub multiplier: Integer,
    /// Integer points `k_j = m * p_j`.
    pub scaled_points: Vec<Integer>,
    /// Integer-point kernel `K = [(k_i + k_j)^(k_i + k_j)]`, exact.
    pub base: ExactMatrix,
    /// Hadamard exponent `r / m` applied to `K`.
    pub exponent: Rational,
    /// Diagonal of `X`: `m^(-r * p_j)`, exact whenever `r * p_j` is integral.
    pub scale: Vec<Scalar>,
}

/// Factors the Hadamard `r`-th power of the power kernel on the given
/// fractional points through the integer-point kernel.
pub fn rational_reduction(points: &[Rational], r: &Rational) -> Result<Reduction> {
    validate_points(points)?;
    let m = denominator_lcm(points);
    let scaled_points: Vec<Integer> = points
        .iter()
        .map(|p| {
            let k = Rational::from(p * &m);
            debug_assert!(k.is_integer());
            k.numer().clone()
        })
        .collect();
    let n = scaled_points.len();
    let max_sum = Integer::from(&scaled_points[n - 1] * 2u32);
    if !max_sum.to_u32().is_some_and(|s| s <= MAX_SCALED_SUM) {
        return Err(Error::InvalidSpec(
            "scaled point sums exceed the exact-power limit".to_string(),
        ));
    }
    let base = ExactMatrix::from_fn(n, |i, j| {
        let s = Integer::from(&scaled_points[i] + &scaled_points[j]);
        let e = s.to_u32().expect("bounded by max_sum");
        Rational::from(Integer::from(e).pow(e))
    });
    let m_rat = Rational::from(&m);
    let exponent = Rational::from(r / &m_rat);
    let mut scale = Vec::with_capacity(n);
    for p in points {
        let e = -Rational::from(r * p);
        // m >= 1, so the power is always defined
        scale.push(Scalar::pow(m_rat.clone(), e)?);
    }
    Ok(Reduction {
        multiplier: m,
        scaled_points,
        base,
        exponent,
        scale,
    })
}

impl Reduction {
    /// Assembles `X * K^(exponent) * X` as a symbolic matrix. By the
    /// factorization this equals the Hadamard `r`-th power of the original
    /// fractional-point kernel, entry for entry.
    pub fn assemble(&self) -> Result<Matrix> {
        let n = self.base.n();
        Matrix::try_from_fn(n, |i, j| {
            let core = Scalar::pow(self.base.entry(i, j).clone(), self.exponent.clone())?;
            Ok(Scalar::mul(
                self.scale[i].clone(),
                Scalar::mul(core, self.scale[j].clone()),
            ))
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernels::generate::generate;
    use crate::kernels::spec::KernelSpec;
    use crate::kernels::transform::hadamard_power;
    use crate::numerics::sign::PrecisionSchedule;
    use std::str::FromStr;

    fn rat(s: &str) -> Rational {
        Rational::from_str(s).unwrap()
    }

    #[test]
    fn half_integer_points_scale_by_two() {
        let pts = vec![rat("1/2"), rat("3/2")];
        let red = rational_reduction(&pts, &rat("1")).unwrap();
        assert_eq!(red.multiplier, Integer::from(2));
        assert_eq!(red.scaled_points, vec![Integer::from(1), Integer::from(3)]);
        assert_eq!(*red.base.entry(0, 0), rat("4"));
        assert_eq!(*red.base.entry(0, 1), rat("256"));
        assert_eq!(*red.base.entry(1, 1), rat("46656"));
        assert_eq!(red.exponent, rat("1/2"));
    }

    #[test]
    fn assembled_form_matches_direct_power_exactly_when_rational() {
        // r = 2 on half-integer points: both sides are exact matrices
        let pts = vec![rat("1/2"), rat("3/2")];
        let red = rational_reduction(&pts, &rat("2")).unwrap();
        let assembled = red.assemble().unwrap().as_exact().expect("exact");
        let direct = hadamard_power(
            &generate(&KernelSpec::Power { points: pts }).unwrap(),
            &rat("2"),
            PrecisionSchedule::default(),
        )
        .unwrap()
        .as_exact()
        .expect("exact");
        assert_eq!(assembled, direct);
    }

    #[test]
    fn assembled_form_encloses_direct_power_when_irrational() {
        let pts = vec![rat("1/2"), rat("3/2"), rat("9/4")];
        let r = rat("1/2");
        let red = rational_reduction(&pts, &r).unwrap();
        let assembled = red.assemble().unwrap();
        let direct = hadamard_power(
            &generate(&KernelSpec::Power { points: pts }).unwrap(),
            &r,
            PrecisionSchedule::default(),
        )
        .unwrap();
        for i in 0..3 {
            for j in 0..3 {
                let a = assembled.entry(i, j).eval(128);
                let d = direct.entry(i, j).eval(128);
                // both enclose the same real number
                let diff = a.sub(&d);
                assert!(diff.contains_rational(&Rational::new()), "entry ({i},{j})");
                assert!(diff.width().to_f64() < 1e-25, "entry ({i},{j}) too wide");
            }
        }
    }

    #[test]
    fn integer_points_reduce_trivially() {
        let pts = vec![rat("1"), rat("2"), rat("5")];
        let red = rational_reduction(&pts, &rat("1")).unwrap();
        assert_eq!(red.multiplier, Integer::from(1));
        assert_eq!(red.exponent, rat("1"));
        let assembled = red.assemble().unwrap().as_exact().unwrap();
        let direct = generate(&KernelSpec::Power { points: pts })
            .unwrap()
            .as_exact()
            .unwrap();
        assert_eq!(assembled, direct);
    }

    #[test]
    fn oversized_scaled_points_are_rejected() {
        let pts = vec![rat("1/1000003"), rat("600001")];
        assert!(rational_reduction(&pts, &rat("1")).is_err());
    }
}
