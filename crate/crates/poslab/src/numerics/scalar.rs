//! Symbolic scalars that evaluate to certified enclosures at any precision.
//!
//! Matrix entries like `(p_i+p_j)^(p_i+p_j)` are irrational for most rational
//! points, so entries are kept as expressions and only turned into numbers
//! when a sign has to be decided. Keeping the expression lets the precision
//! ladder re-evaluate the *same* quantity with tighter enclosures instead of
//! accumulating rounding from a fixed-precision snapshot.
//!
//! Constructors normalize aggressively: integer powers, perfect roots, and
//! log/exp cancellations all fold back to exact rationals, so a matrix whose
//! entries happen to be rational takes the exact decision path with no
//! rounding at all.

use rug::ops::Pow;
use rug::{Integer, Rational};
use std::cmp::Ordering;

use super::interval::Interval;
use super::sign::{sign_of, PrecisionSchedule, Sign};
use crate::error::{Error, Result};

/// Largest integer exponent expanded eagerly into an exact rational.
/// Beyond this the value stays symbolic and is evaluated as an enclosure,
/// which costs no bignum blowup.
const MAX_EXACT_EXPONENT: i32 = 1_000_000;

/// A real-valued expression with an exact-rational fast path.
#[derive(Clone, Debug, PartialEq)]
pub enum Scalar {
    /// An exact rational.
    Exact(Rational),
    /// `base ^ expo` with `base > 0`, `base != 1`, and `expo` not foldable.
    Pow { base: Rational, expo: Rational },
    /// `ln q` with `q > 0`, `q != 1`.
    LogRat(Rational),
    /// `q * inner` with `q != 0`, `q != 1`.
    Scale(Rational, Box<Scalar>),
    /// Non-empty sum; at most one exact term, no zero terms.
    Sum(Vec<Scalar>),
    /// Product of two non-exact factors.
    Mul(Box<Scalar>, Box<Scalar>),
    /// `ln inner`; the caller certifies positivity of `inner` before building.
    Log(Box<Scalar>),
    /// `e ^ inner`.
    Exp(Box<Scalar>),
    /// A fixed enclosure taken from input data; never refined.
    Given(Interval),
}

// neg/add/mul are symbolic tree constructors, not arithmetic on values;
// implementing the operator traits would promise evaluation semantics
// these nodes do not have until `eval` runs
#[allow(clippy::should_implement_trait)]
impl Scalar {
    pub fn zero() -> Scalar {
        Scalar::Exact(Rational::new())
    }

    pub fn one() -> Scalar {
        Scalar::Exact(Rational::from(1))
    }

    pub fn exact(q: Rational) -> Scalar {
        Scalar::Exact(q)
    }

    /// The exact value, when this scalar is one.
    pub fn as_exact(&self) -> Option<&Rational> {
        match self {
            Scalar::Exact(q) => Some(q),
            _ => None,
        }
    }

    /// `base ^ expo` over the reals.
    ///
    /// Folds to an exact rational whenever the result is one: integer
    /// exponents of moderate size, and fractional exponents whose root is
    /// exact (`4^(1/2)`, `(27/8)^(2/3)`). Errors when the real power is
    /// undefined: `0` with a negative exponent, or a negative base with a
    /// non-integer exponent.
    pub fn pow(base: Rational, expo: Rational) -> Result<Scalar> {
        match base.cmp0() {
            Ordering::Equal => {
                return match expo.cmp0() {
                    Ordering::Greater => Ok(Scalar::zero()),
                    Ordering::Equal => Ok(Scalar::one()),
                    Ordering::Less => Err(Error::PowerUndefined),
                };
            }
            Ordering::Less if !expo.is_integer() => return Err(Error::PowerUndefined),
            _ => {}
        }
        if base == 1 {
            return Ok(Scalar::one());
        }
        if expo.cmp0() == Ordering::Equal {
            return Ok(Scalar::one());
        }
        if expo.is_integer() {
            if base == -1 {
                return Ok(Scalar::Exact(Rational::from(
                    if expo.numer().is_odd() { -1 } else { 1 },
                )));
            }
            if let Some(n) = expo.numer().to_i32() {
                if n.unsigned_abs() <= MAX_EXACT_EXPONENT as u32 {
                    return Ok(Scalar::Exact(base.pow(n)));
                }
            }
            // Exponent too large to expand; keep |base|^expo symbolic and
            // track the sign of a negative base separately.
            if base.cmp0() == Ordering::Less {
                let odd = expo.numer().is_odd();
                let mag = Scalar::Pow { base: -base, expo };
                return Ok(if odd {
                    Scalar::scale(Rational::from(-1), mag)
                } else {
                    mag
                });
            }
            return Ok(Scalar::Pow { base, expo });
        }
        // base > 0, expo = n/d in lowest terms with d >= 2.
        if let Some(folded) = try_exact_root(&base, &expo) {
            return Ok(folded);
        }
        Ok(Scalar::Pow { base, expo })
    }

    /// `ln q` for an exact rational.
    pub fn log_rat(q: Rational) -> Result<Scalar> {
        if q.cmp0() != Ordering::Greater {
            return Err(Error::LogRequiresPositive);
        }
        if q == 1 {
            return Ok(Scalar::zero());
        }
        Ok(Scalar::LogRat(q))
    }

    /// `ln s`. Exact and power arguments fold; otherwise the caller must
    /// have certified `s > 0` (evaluation stays sound regardless, widening
    /// the lower bound to −∞ when positivity is not visible numerically).
    pub fn log(s: Scalar) -> Result<Scalar> {
        match s {
            Scalar::Exact(q) => Scalar::log_rat(q),
            Scalar::Pow { base, expo } => {
                // base > 0 and base != 1 in normal form
                Ok(Scalar::scale(expo, Scalar::LogRat(base)))
            }
            Scalar::Exp(inner) => Ok(*inner),
            other => Ok(Scalar::Log(Box::new(other))),
        }
    }

    /// `e ^ s`, folding inverses of [`Scalar::log`].
    pub fn exp(s: Scalar) -> Scalar {
        match s {
            Scalar::Exact(q) if q.cmp0() == Ordering::Equal => Scalar::one(),
            Scalar::LogRat(b) => Scalar::Exact(b),
            Scalar::Scale(q, inner) => {
                if let Scalar::LogRat(b) = *inner {
                    // e^(q ln b) = b^q with b > 0, which never errors
                    match Scalar::pow(b.clone(), q.clone()) {
                        Ok(folded) => folded,
                        Err(_) => Scalar::Exp(Box::new(Scalar::Scale(
                            q,
                            Box::new(Scalar::LogRat(b)),
                        ))),
                    }
                } else {
                    Scalar::Exp(Box::new(Scalar::Scale(q, inner)))
                }
            }
            Scalar::Log(inner) => *inner,
            other => Scalar::Exp(Box::new(other)),
        }
    }

    /// `q * s` with constant folding.
    pub fn scale(q: Rational, s: Scalar) -> Scalar {
        if q.cmp0() == Ordering::Equal {
            return Scalar::zero();
        }
        if q == 1 {
            return s;
        }
        match s {
            Scalar::Exact(r) => Scalar::Exact(q * r),
            Scalar::Scale(q2, inner) => {
                let merged = q * q2;
                if merged == 1 {
                    *inner
                } else {
                    Scalar::Scale(merged, inner)
                }
            }
            other => Scalar::Scale(q, Box::new(other)),
        }
    }

    pub fn neg(s: Scalar) -> Scalar {
        Scalar::scale(Rational::from(-1), s)
    }

    /// Sum with flattening and exact-term folding.
    pub fn sum(terms: Vec<Scalar>) -> Scalar {
        let mut exact = Rational::new();
        let mut rest: Vec<Scalar> = Vec::new();
        let mut stack: Vec<Scalar> = terms;
        stack.reverse();
        while let Some(t) = stack.pop() {
            match t {
                Scalar::Exact(q) => exact += q,
                Scalar::Sum(inner) => {
                    for s in inner.into_iter().rev() {
                        stack.push(s);
                    }
                }
                other => rest.push(other),
            }
        }
        if rest.is_empty() {
            return Scalar::Exact(exact);
        }
        if exact.cmp0() != Ordering::Equal {
            rest.push(Scalar::Exact(exact));
        }
        if rest.len() == 1 {
            rest.pop().unwrap()
        } else {
            Scalar::Sum(rest)
        }
    }

    pub fn add(a: Scalar, b: Scalar) -> Scalar {
        Scalar::sum(vec![a, b])
    }

    pub fn mul(a: Scalar, b: Scalar) -> Scalar {
        match (a, b) {
            (Scalar::Exact(q), other) | (other, Scalar::Exact(q)) => Scalar::scale(q, other),
            (x, y) => Scalar::Mul(Box::new(x), Box::new(y)),
        }
    }

    /// Entrywise real power `s ^ r` of an already-built entry.
    ///
    /// Callers certify `s > 0` first whenever `r` is not a non-negative
    /// integer; with that precondition the rewrite `s^r = e^(r ln s)` is
    /// valid and the power folds exactly where possible.
    pub fn pow_expr(s: Scalar, r: &Rational) -> Result<Scalar> {
        if r.cmp0() == Ordering::Equal {
            return Ok(Scalar::one());
        }
        if *r == 1 {
            return Ok(s);
        }
        match s {
            Scalar::Exact(q) => Scalar::pow(q, r.clone()),
            Scalar::Pow { base, expo } => Scalar::pow(base, expo * r),
            Scalar::Exp(inner) => Ok(Scalar::exp(Scalar::scale(r.clone(), *inner))),
            other => {
                if r.is_integer() && r.cmp0() == Ordering::Greater {
                    if let Some(n) = r.numer().to_u32() {
                        if n <= 64 {
                            let mut acc = other.clone();
                            for _ in 1..n {
                                acc = Scalar::mul(acc, other.clone());
                            }
                            return Ok(acc);
                        }
                    }
                }
                Ok(Scalar::exp(Scalar::scale(r.clone(), Scalar::log(other)?)))
            }
        }
    }

    /// Structural positivity: `true` means the value is provably `> 0`
    /// without evaluating anything. `false` is inconclusive, not negative.
    pub fn certainly_positive(&self) -> bool {
        match self {
            Scalar::Exact(q) => q.cmp0() == Ordering::Greater,
            Scalar::Pow { .. } => true,
            Scalar::LogRat(q) => *q > 1,
            Scalar::Scale(q, inner) => {
                q.cmp0() == Ordering::Greater && inner.certainly_positive()
            }
            Scalar::Sum(terms) => terms.iter().all(|t| t.certainly_positive()),
            Scalar::Mul(a, b) => a.certainly_positive() && b.certainly_positive(),
            Scalar::Log(_) => false,
            Scalar::Exp(_) => true,
            Scalar::Given(iv) => iv.sign() == Sign::Positive,
        }
    }

    /// Certified enclosure of the value at `prec` bits.
    ///
    /// Every path rounds outward, and re-evaluating at a higher precision
    /// yields a sub-interval of the lower-precision result, except for
    /// [`Scalar::Given`] which is fixed input data.
    pub fn eval(&self, prec: u32) -> Interval {
        match self {
            Scalar::Exact(q) => Interval::from_rational(q, prec),
            Scalar::Pow { base, expo } => Interval::from_rational(base, prec)
                .ln()
                .mul_rational(expo)
                .exp(),
            Scalar::LogRat(q) => Interval::from_rational(q, prec).ln(),
            Scalar::Scale(q, inner) => inner.eval(prec).mul_rational(q),
            Scalar::Sum(terms) => {
                let mut acc = Interval::from_i64(0, prec);
                for t in terms {
                    acc = acc.add(&t.eval(prec));
                }
                acc
            }
            Scalar::Mul(a, b) => a.eval(prec).mul(&b.eval(prec)),
            Scalar::Log(inner) => inner.eval(prec).ln(),
            Scalar::Exp(inner) => inner.eval(prec).exp(),
            Scalar::Given(iv) => iv.clone(),
        }
    }

    /// Certified sign. Exact values are decided without evaluation and
    /// report no precision; symbolic values climb the schedule.
    pub fn certified_sign(&self, schedule: PrecisionSchedule) -> (Sign, Option<u32>) {
        if let Some(q) = self.as_exact() {
            let s = match q.cmp0() {
                Ordering::Less => Sign::Negative,
                Ordering::Equal => Sign::Zero,
                Ordering::Greater => Sign::Positive,
            };
            return (s, None);
        }
        let (s, bits) = sign_of(schedule, |p| self.eval(p));
        (s, Some(bits))
    }
}

/// Folds `base^(n/d)` to an exact rational when numerator and denominator of
/// `base` are both perfect `d`-th powers.
fn try_exact_root(base: &Rational, expo: &Rational) -> Option<Scalar> {
    let d = expo.denom().to_u32()?;
    let n = expo.numer().to_i32()?;
    if n.unsigned_abs() > MAX_EXACT_EXPONENT as u32 {
        return None;
    }
    let num_root = perfect_root(base.numer(), d)?;
    let den_root = perfect_root(base.denom(), d)?;
    let root = Rational::from((num_root, den_root));
    Some(Scalar::Exact(root.pow(n)))
}

fn perfect_root(x: &Integer, d: u32) -> Option<Integer> {
    let r = x.clone().root(d);
    if r.clone().pow(d) == *x {
        Some(r)
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(s: &str) -> Rational {
        use std::str::FromStr;
        Rational::from_str(s).unwrap()
    }

    #[test]
    fn integer_powers_fold() {
        assert_eq!(
            Scalar::pow(rat("-3"), rat("3")).unwrap(),
            Scalar::Exact(rat("-27"))
        );
        assert_eq!(
            Scalar::pow(rat("1/2"), rat("-2")).unwrap(),
            Scalar::Exact(rat("4"))
        );
        assert_eq!(Scalar::pow(rat("7"), rat("0")).unwrap(), Scalar::one());
    }

    #[test]
    fn zero_base_cases() {
        assert_eq!(Scalar::pow(rat("0"), rat("3/2")).unwrap(), Scalar::zero());
        assert_eq!(Scalar::pow(rat("0"), rat("0")).unwrap(), Scalar::one());
        assert!(matches!(
            Scalar::pow(rat("0"), rat("-1")),
            Err(Error::PowerUndefined)
        ));
    }

    #[test]
    fn negative_base_fractional_exponent_rejected() {
        assert!(matches!(
            Scalar::pow(rat("-8"), rat("1/3")),
            Err(Error::PowerUndefined)
        ));
    }

    #[test]
    fn perfect_roots_fold() {
        assert_eq!(
            Scalar::pow(rat("4"), rat("1/2")).unwrap(),
            Scalar::Exact(rat("2"))
        );
        assert_eq!(
            Scalar::pow(rat("46656"), rat("1/6")).unwrap(),
            Scalar::Exact(rat("6"))
        );
        assert_eq!(
            Scalar::pow(rat("27/8"), rat("2/3")).unwrap(),
            Scalar::Exact(rat("9/4"))
        );
    }

    #[test]
    fn irrational_power_stays_symbolic_and_encloses() {
        let s = Scalar::pow(rat("2"), rat("1/2")).unwrap();
        assert!(matches!(s, Scalar::Pow { .. }));
        let iv = s.eval(64);
        // sqrt(2)^2 = 2 must be inside the squared enclosure
        assert!(iv.square().contains_rational(&rat("2")));
    }

    #[test]
    fn log_of_power_folds_to_scaled_log() {
        let s = Scalar::pow(rat("2"), rat("1/2")).unwrap();
        let l = Scalar::log(s).unwrap();
        assert_eq!(
            l,
            Scalar::Scale(rat("1/2"), Box::new(Scalar::LogRat(rat("2"))))
        );
    }

    #[test]
    fn exp_of_scaled_log_folds_back_to_power() {
        let e = Scalar::exp(Scalar::Scale(
            rat("3/2"),
            Box::new(Scalar::LogRat(rat("4"))),
        ));
        assert_eq!(e, Scalar::Exact(rat("8")));
    }

    #[test]
    fn log_rejects_nonpositive() {
        assert!(matches!(
            Scalar::log_rat(rat("-1")),
            Err(Error::LogRequiresPositive)
        ));
        assert!(matches!(
            Scalar::log_rat(rat("0")),
            Err(Error::LogRequiresPositive)
        ));
        assert_eq!(Scalar::log_rat(rat("1")).unwrap(), Scalar::zero());
    }

    #[test]
    fn sums_flatten_and_fold() {
        let s = Scalar::sum(vec![
            Scalar::exact(rat("1")),
            Scalar::sum(vec![Scalar::exact(rat("2")), Scalar::LogRat(rat("3"))]),
            Scalar::exact(rat("-3")),
        ]);
        assert_eq!(s, Scalar::LogRat(rat("3")));
        let t = Scalar::sum(vec![Scalar::exact(rat("1")), Scalar::exact(rat("2"))]);
        assert_eq!(t, Scalar::Exact(rat("3")));
    }

    #[test]
    fn scale_folds() {
        assert_eq!(Scalar::scale(rat("0"), Scalar::LogRat(rat("2"))), Scalar::zero());
        let twice = Scalar::scale(rat("2"), Scalar::LogRat(rat("2")));
        let back = Scalar::scale(rat("1/2"), twice);
        assert_eq!(back, Scalar::LogRat(rat("2")));
    }

    #[test]
    fn pow_expr_composes_exponents() {
        // ((2)^(1/2))^2 = 2 exactly
        let s = Scalar::pow(rat("2"), rat("1/2")).unwrap();
        let sq = Scalar::pow_expr(s, &rat("2")).unwrap();
        assert_eq!(sq, Scalar::Exact(rat("2")));
        // (4^4)^(1/2) = 16 exactly via exponent merge
        let b = Scalar::pow(rat("4"), rat("4")).unwrap();
        let h = Scalar::pow_expr(b, &rat("1/2")).unwrap();
        assert_eq!(h, Scalar::Exact(rat("16")));
    }

    #[test]
    fn certified_sign_exact_and_symbolic() {
        let (s, bits) = Scalar::exact(rat("-5")).certified_sign(PrecisionSchedule::default());
        assert_eq!(s, Sign::Negative);
        assert_eq!(bits, None);

        // 3 ln 3 - 4 ln 2 = ln(27/16) > 0
        let expr = Scalar::sum(vec![
            Scalar::scale(rat("3"), Scalar::LogRat(rat("3"))),
            Scalar::scale(rat("-4"), Scalar::LogRat(rat("2"))),
        ]);
        let (s, bits) = expr.certified_sign(PrecisionSchedule::default());
        assert_eq!(s, Sign::Positive);
        assert_eq!(bits, Some(64));
    }

    #[test]
    fn refinement_narrows_composite_expressions() {
        let expr = Scalar::exp(Scalar::mul(
            Scalar::LogRat(rat("7/3")),
            Scalar::LogRat(rat("5/2")),
        ));
        let coarse = expr.eval(64);
        let fine = expr.eval(256);
        assert!(coarse.contains(&fine));
        assert!(fine.width() < coarse.width());
    }

    #[test]
    fn structural_positivity() {
        assert!(Scalar::pow(rat("2"), rat("1/2")).unwrap().certainly_positive());
        assert!(Scalar::LogRat(rat("3")).certainly_positive());
        assert!(!Scalar::LogRat(rat("1/2")).certainly_positive());
        assert!(Scalar::exp(Scalar::LogRat(rat("1/2"))).certainly_positive());
        assert!(!Scalar::exact(rat("0")).certainly_positive());
    }
}
