//! Exact rational scalars.
//!
//! All verdict-relevant arithmetic on rational data goes through
//! [`Rational`], an arbitrary-precision fraction kept in lowest terms with a
//! positive denominator. Parsing accepts both fraction literals (`"3/4"`)
//! and decimal literals (`"0.25"`, `"3.14159"`); a decimal literal denotes
//! the exact rational it spells, never a binary float.

use crate::error::{Error, Result};
use rug::ops::Pow;
pub use rug::Integer;
pub use rug::Rational;

/// Parses `"a/b"`, `"-a/b"`, an integer literal, or a decimal literal into
/// an exact rational.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    if s.is_empty() {
        return Err(Error::InvalidSpec("empty rational literal".into()));
    }
    if let Some(dot) = s.find('.') {
        if s.contains('/') {
            return Err(Error::InvalidSpec(format!("bad rational literal {s:?}")));
        }
        let (int_part, frac_part) = (&s[..dot], &s[dot + 1..]);
        if frac_part.is_empty() || !frac_part.bytes().all(|b| b.is_ascii_digit()) {
            return Err(Error::InvalidSpec(format!("bad decimal literal {s:?}")));
        }
        let negative = int_part.starts_with('-');
        let int_digits = int_part.trim_start_matches(['-', '+']);
        if !int_digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(Error::InvalidSpec(format!("bad decimal literal {s:?}")));
        }
        let int_val: Integer = if int_digits.is_empty() {
            Integer::new()
        } else {
            int_digits
                .parse()
                .map_err(|_| Error::InvalidSpec(format!("bad decimal literal {s:?}")))?
        };
        let frac_val: Integer = frac_part
            .parse()
            .map_err(|_| Error::InvalidSpec(format!("bad decimal literal {s:?}")))?;
        let scale = Integer::from(10).pow(frac_part.len() as u32);
        let mut q = Rational::from((int_val * &scale + frac_val, scale));
        if negative {
            q = -q;
        }
        Ok(q)
    } else {
        s.parse()
            .map_err(|_| Error::InvalidSpec(format!("bad rational literal {s:?}")))
    }
}

/// Canonical string form: `"num"` for integers, `"num/den"` otherwise.
pub fn format_rational(q: &Rational) -> String {
    q.to_string()
}

/// Parses a comma-separated list of rationals.
pub fn parse_rational_list(s: &str) -> Result<Vec<Rational>> {
    s.split(',').map(parse_rational).collect()
}

/// Least common multiple of the denominators of `qs`.
pub fn denominator_lcm(qs: &[Rational]) -> Integer {
    let mut m = Integer::from(1);
    for q in qs {
        m = m.lcm(q.denom());
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_fractions_and_decimals() {
        assert_eq!(parse_rational("3/6").unwrap(), Rational::from((1, 2)));
        assert_eq!(parse_rational("7").unwrap(), Rational::from(7));
        assert_eq!(parse_rational("0.25").unwrap(), Rational::from((1, 4)));
        assert_eq!(
            parse_rational("3.14159").unwrap(),
            Rational::from((314159, 100000))
        );
        assert_eq!(parse_rational("-0.5").unwrap(), Rational::from((-1, 2)));
        assert_eq!(parse_rational(".5").unwrap(), Rational::from((1, 2)));
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_rational("").is_err());
        assert!(parse_rational("1/2.5").is_err());
        assert!(parse_rational("abc").is_err());
        assert!(parse_rational("1.").is_err());
    }

    #[test]
    fn lcm_of_denominators() {
        let qs = vec![
            Rational::from((1, 2)),
            Rational::from((3, 4)),
            Rational::from((5, 6)),
        ];
        assert_eq!(denominator_lcm(&qs), Integer::from(12));
    }
}
