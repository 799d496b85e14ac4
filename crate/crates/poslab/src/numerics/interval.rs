//! Directed-rounding interval arithmetic at arbitrary working precision.
//!
//! An [`Interval`] is a pair of multiple-precision floats `[lo, hi]` with
//! every operation rounding `lo` toward −∞ and `hi` toward +∞, so the result
//! always encloses the exact value (outward rounding). Enclosures built this
//! way are *refinable*: re-evaluating the same expression at a higher working
//! precision yields a sub-interval, because a p-bit significand is also a
//! 2p-bit significand and directed rounding is monotone on nested grids.
//!
//! Intervals are the carrier for transcendental matrix entries such as
//! `(p_i+p_j)^(p_i+p_j)` with non-integer exponents. They never appear on a
//! verdict path for data that is exactly rational; the exact path handles
//! those without rounding.

use rug::float::{Round, Special};
use rug::{Float, Rational};

use super::sign::Sign;

/// A closed interval `[lo, hi]` of multiple-precision floats, `lo <= hi`.
#[derive(Clone, Debug, PartialEq)]
pub struct Interval {
    lo: Float,
    hi: Float,
}

fn f_down<T>(prec: u32, src: T) -> Float
where
    Float: rug::ops::AssignRound<T, Round = Round, Ordering = std::cmp::Ordering>,
{
    Float::with_val_round(prec, src, Round::Down).0
}

fn f_up<T>(prec: u32, src: T) -> Float
where
    Float: rug::ops::AssignRound<T, Round = Round, Ordering = std::cmp::Ordering>,
{
    Float::with_val_round(prec, src, Round::Up).0
}

// named methods instead of operator traits: every operation here rounds
// outward, and that should be visible at the call site
#[allow(clippy::should_implement_trait)]
impl Interval {
    /// Enclosure of an exact rational at `prec` bits.
    pub fn from_rational(q: &Rational, prec: u32) -> Self {
        Interval {
            lo: f_down(prec, q),
            hi: f_up(prec, q),
        }
    }

    /// Point interval for a small integer.
    pub fn from_i64(v: i64, prec: u32) -> Self {
        Interval {
            lo: Float::with_val(prec, v),
            hi: Float::with_val(prec, v),
        }
    }

    /// Builds an interval from already-rounded endpoints.
    ///
    /// Panics if `lo > hi` (both non-NaN); NaN endpoints are rejected.
    pub fn from_endpoints(lo: Float, hi: Float) -> Self {
        assert!(!lo.is_nan() && !hi.is_nan(), "NaN endpoint");
        assert!(lo <= hi, "inverted interval");
        Interval { lo, hi }
    }

    /// The whole real line; used when a sub-expression cannot be bounded yet
    /// at the current precision.
    pub fn entire(prec: u32) -> Self {
        Interval {
            lo: Float::with_val(prec, Special::NegInfinity),
            hi: Float::with_val(prec, Special::Infinity),
        }
    }

    pub fn lo(&self) -> &Float {
        &self.lo
    }

    pub fn hi(&self) -> &Float {
        &self.hi
    }

    /// Working precision in bits (the larger of the two endpoints').
    pub fn prec(&self) -> u32 {
        self.lo.prec().max(self.hi.prec())
    }

    pub fn add(&self, other: &Interval) -> Interval {
        let prec = self.prec().max(other.prec());
        Interval {
            lo: f_down(prec, &self.lo + &other.lo),
            hi: f_up(prec, &self.hi + &other.hi),
        }
    }

    pub fn sub(&self, other: &Interval) -> Interval {
        let prec = self.prec().max(other.prec());
        Interval {
            lo: f_down(prec, &self.lo - &other.hi),
            hi: f_up(prec, &self.hi - &other.lo),
        }
    }

    pub fn neg(&self) -> Interval {
        Interval {
            lo: -self.hi.clone(),
            hi: -self.lo.clone(),
        }
    }

    pub fn mul(&self, other: &Interval) -> Interval {
        let prec = self.prec().max(other.prec());
        let pairs = [
            (&self.lo, &other.lo),
            (&self.lo, &other.hi),
            (&self.hi, &other.lo),
            (&self.hi, &other.hi),
        ];
        let mut lo: Option<Float> = None;
        let mut hi: Option<Float> = None;
        for (a, b) in pairs {
            let d = f_down(prec, a * b);
            let u = f_up(prec, a * b);
            lo = Some(match lo {
                Some(cur) => cur.min(&d),
                None => d,
            });
            hi = Some(match hi {
                Some(cur) => cur.max(&u),
                None => u,
            });
        }
        Interval {
            lo: lo.unwrap(),
            hi: hi.unwrap(),
        }
    }

    /// Division by an interval that excludes zero.
    ///
    /// Panics if the divisor straddles or touches zero; callers must certify
    /// the sign of the divisor first.
    pub fn div(&self, other: &Interval) -> Interval {
        assert!(
            other.lo.is_sign_positive() && !other.lo.is_zero()
                || other.hi.is_sign_negative() && !other.hi.is_zero(),
            "interval division by a divisor that may contain zero"
        );
        let prec = self.prec().max(other.prec());
        let pairs = [
            (&self.lo, &other.lo),
            (&self.lo, &other.hi),
            (&self.hi, &other.lo),
            (&self.hi, &other.hi),
        ];
        let mut lo: Option<Float> = None;
        let mut hi: Option<Float> = None;
        for (a, b) in pairs {
            let d = f_down(prec, a / b);
            let u = f_up(prec, a / b);
            lo = Some(match lo {
                Some(cur) => cur.min(&d),
                None => d,
            });
            hi = Some(match hi {
                Some(cur) => cur.max(&u),
                None => u,
            });
        }
        Interval {
            lo: lo.unwrap(),
            hi: hi.unwrap(),
        }
    }

    /// Multiplication by an exact rational.
    pub fn mul_rational(&self, q: &Rational) -> Interval {
        let prec = self.prec();
        if q.cmp0() == std::cmp::Ordering::Less {
            Interval {
                lo: f_down(prec, &self.hi * q),
                hi: f_up(prec, &self.lo * q),
            }
        } else {
            Interval {
                lo: f_down(prec, &self.lo * q),
                hi: f_up(prec, &self.hi * q),
            }
        }
    }

    pub fn square(&self) -> Interval {
        let prec = self.prec();
        let contains_zero = self.lo.is_sign_negative() && self.hi.is_sign_positive();
        let lo_sq_d = f_down(prec, &self.lo * &self.lo);
        let lo_sq_u = f_up(prec, &self.lo * &self.lo);
        let hi_sq_d = f_down(prec, &self.hi * &self.hi);
        let hi_sq_u = f_up(prec, &self.hi * &self.hi);
        if contains_zero {
            Interval {
                lo: Float::with_val(prec, 0),
                hi: lo_sq_u.max(&hi_sq_u),
            }
        } else {
            Interval {
                lo: lo_sq_d.min(&hi_sq_d),
                hi: lo_sq_u.max(&hi_sq_u),
            }
        }
    }

    /// Square root; requires `lo >= 0`.
    pub fn sqrt(&self) -> Interval {
        assert!(!self.lo.is_sign_negative() || self.lo.is_zero(), "sqrt of negative interval");
        let prec = self.prec();
        Interval {
            lo: f_down(prec, self.lo.sqrt_ref()),
            hi: f_up(prec, self.hi.sqrt_ref()),
        }
    }

    /// Natural log. If the lower endpoint is not strictly positive the lower
    /// bound of the result is −∞ (a valid enclosure as long as the true value
    /// is positive); an upper endpoint `<= 0` is a caller bug.
    pub fn ln(&self) -> Interval {
        assert!(
            self.hi.is_sign_positive() && !self.hi.is_zero(),
            "ln of certainly non-positive interval"
        );
        let prec = self.prec();
        let lo = if self.lo.is_sign_positive() && !self.lo.is_zero() {
            f_down(prec, self.lo.ln_ref())
        } else {
            Float::with_val(prec, Special::NegInfinity)
        };
        Interval {
            lo,
            hi: f_up(prec, self.hi.ln_ref()),
        }
    }

    pub fn exp(&self) -> Interval {
        let prec = self.prec();
        Interval {
            lo: f_down(prec, self.lo.exp_ref()),
            hi: f_up(prec, self.hi.exp_ref()),
        }
    }

    pub fn contains(&self, other: &Interval) -> bool {
        self.lo <= other.lo && other.hi <= self.hi
    }

    pub fn contains_rational(&self, q: &Rational) -> bool {
        self.lo <= *q && *q <= self.hi
    }

    /// Width `hi − lo`, rounded up.
    pub fn width(&self) -> Float {
        f_up(self.prec(), &self.hi - &self.lo)
    }

    pub fn is_point(&self) -> bool {
        self.lo == self.hi
    }

    /// Sign classification of every value in the interval.
    ///
    /// `Zero` only for the exact point interval `[0, 0]`; an interval that
    /// straddles zero is `Undetermined`.
    pub fn sign(&self) -> Sign {
        if self.lo.is_sign_positive() && !self.lo.is_zero() {
            Sign::Positive
        } else if self.hi.is_sign_negative() && !self.hi.is_zero() {
            Sign::Negative
        } else if self.lo.is_zero() && self.hi.is_zero() {
            Sign::Zero
        } else {
            Sign::Undetermined
        }
    }

    /// Midpoint as `f64`, for heuristics only.
    pub fn mid_f64(&self) -> f64 {
        if self.lo.is_infinite() || self.hi.is_infinite() {
            return if self.lo.is_infinite() && self.hi.is_infinite() {
                0.0
            } else if self.lo.is_infinite() {
                self.hi.to_f64()
            } else {
                self.lo.to_f64()
            };
        }
        (self.lo.to_f64() + self.hi.to_f64()) / 2.0
    }

    /// Decimal string pair with outward rounding, so that re-parsing with
    /// directed rounding yields an enclosure of this one.
    pub fn to_decimal_strings(&self) -> (String, String) {
        (
            float_to_decimal(&self.lo, Round::Down),
            float_to_decimal(&self.hi, Round::Up),
        )
    }

    /// Parses a decimal endpoint pair written by [`Interval::to_decimal_strings`].
    pub fn from_decimal_strings(lo: &str, hi: &str, prec: u32) -> Option<Interval> {
        let lo = Float::with_val_round(prec, Float::parse(lo).ok()?, Round::Down).0;
        let hi = Float::with_val_round(prec, Float::parse(hi).ok()?, Round::Up).0;
        if lo.is_nan() || hi.is_nan() || lo > hi {
            return None;
        }
        Some(Interval { lo, hi })
    }
}

/// Decimal rendering with a directed rounding mode and enough digits to
/// change the value by at most one unit in the last place.
pub fn float_to_decimal(f: &Float, round: Round) -> String {
    if f.is_infinite() {
        return if f.is_sign_negative() { "-inf" } else { "inf" }.to_string();
    }
    // prec bits need ceil(prec * log10(2)) + 2 decimal digits to be faithful.
    let digits = (f.prec() as f64 * std::f64::consts::LOG10_2).ceil() as usize + 2;
    f.to_string_radix_round(10, Some(digits), round)
}
