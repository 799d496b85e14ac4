//! Exact and certified-enclosure arithmetic.
//!
//! Two regimes, one rule: every verdict traces back either to exact rational
//! arithmetic or to an interval whose endpoints were rounded outward. Plain
//! floating point appears only in heuristics that propose candidates, never
//! in anything that decides.

pub mod cholesky;
pub mod det;
pub mod interval;
pub mod ldlt;
pub mod matrix;
pub mod rational;
pub mod scalar;
pub mod sign;

pub use cholesky::{interval_cholesky, CholeskyOutcome};
pub use det::{det_exact, det_interval};
pub use interval::Interval;
pub use ldlt::{back_substitute, exact_ldlt, Ldlt};
pub use matrix::{ExactMatrix, IntervalMatrix, Matrix};
pub use rational::{denominator_lcm, format_rational, parse_rational, parse_rational_list};
pub use scalar::Scalar;
pub use sign::{sign_of, PrecisionSchedule, Sign};
pub use rug::{Integer, Rational};
