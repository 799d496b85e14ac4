//! Sign determination under an escalating precision schedule.

use super::interval::Interval;

/// Certified sign of a quantity, or an admission that the working precision
/// was not enough to separate it from zero.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
    Undetermined,
}

/// Doubling precision ladder: `start, 2*start, ...` up to `cap` inclusive.
#[derive(Clone, Copy, Debug)]
pub struct PrecisionSchedule {
    pub start: u32,
    pub cap: u32,
}

impl Default for PrecisionSchedule {
    fn default() -> Self {
        PrecisionSchedule {
            start: 64,
            cap: 4096,
        }
    }
}

impl PrecisionSchedule {
    pub fn with_cap(cap: u32) -> Self {
        PrecisionSchedule {
            start: 64.min(cap),
            cap,
        }
    }

    /// The precisions to try, in order.
    pub fn steps(&self) -> impl Iterator<Item = u32> {
        let (start, cap) = (self.start.max(2), self.cap);
        std::iter::successors(
            Some(start),
            move |&p| {
                if p >= cap {
                    None
                } else {
                    Some((p * 2).min(cap))
                }
            },
        )
    }
}

/// Evaluates `f` at increasing precision until the sign of the result is
/// decided or the cap is reached. Returns the sign and the precision that
/// decided it (the cap, if undetermined).
///
/// `Zero` is only ever returned when `f` produces the exact point interval
/// `[0, 0]`, which the evaluators do only for structurally exact zeros, so a
/// zero answer is a certificate rather than a guess.
pub fn sign_of(schedule: PrecisionSchedule, mut f: impl FnMut(u32) -> Interval) -> (Sign, u32) {
    let mut last = schedule.start;
    for prec in schedule.steps() {
        last = prec;
        match f(prec).sign() {
            Sign::Undetermined => continue,
            decided => return (decided, prec),
        }
    }
    (Sign::Undetermined, last)
}
