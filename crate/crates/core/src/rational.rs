//! Exact rational numbers.
//!
//! Every probability, weight and cost in the exact code paths is a
//! [`Rational`]: an arbitrary-precision fraction kept in lowest terms with a
//! positive denominator.

use std::str::FromStr;

pub use num::bigint::BigInt;
use num::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Rational = num::BigRational;

/// Parses `"3"`, `"-0.125"`, `".5"` or `"7/20"` into an exact rational.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let invalid = || Error::InvalidRational(text.to_string());
    let s = text.trim();
    if s.is_empty() {
        return Err(invalid());
    }
    if let Some((num, den)) = s.split_once('/') {
        let num = parse_integer(num.trim()).ok_or_else(invalid)?;
        let den = parse_integer(den.trim()).ok_or_else(invalid)?;
        if den.is_zero() || den.is_negative() {
            return Err(invalid());
        }
        return Ok(Rational::new(num, den));
    }
    let (negative, body) = match s.as_bytes()[0] {
        b'-' => (true, &s[1..]),
        b'+' => (false, &s[1..]),
        _ => (false, s),
    };
    let (int_part, frac_part) = body.split_once('.').unwrap_or((body, ""));
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(invalid());
    }
    let all_digits = |p: &str| p.bytes().all(|b| b.is_ascii_digit());
    if !all_digits(int_part) || !all_digits(frac_part) {
        return Err(invalid());
    }
    let digits = format!("{int_part}{frac_part}");
    let mut numer = BigInt::from_str(&digits).map_err(|_| invalid())?;
    if negative {
        numer = -numer;
    }
    let denom = num::pow(BigInt::from(10u32), frac_part.len());
    Ok(Rational::new(numer, denom))
}

fn parse_integer(s: &str) -> Option<BigInt> {
    let digits = s.strip_prefix('-').or_else(|| s.strip_prefix('+')).unwrap_or(s);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    BigInt::from_str(s.strip_prefix('+').unwrap_or(s)).ok()
}

/// Canonical text form: `"n"` for integers, `"p/q"` otherwise.
pub fn format_rational(value: &Rational) -> String {
    if value.denom().is_one() {
        value.numer().to_string()
    } else {
        format!("{}/{}", value.numer(), value.denom())
    }
}

pub fn to_f64(value: &Rational) -> f64 {
    value.to_f64().unwrap_or(f64::NAN)
}

pub fn from_int(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

pub fn ratio(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

/// `2^-exp` as an exact rational.
pub fn inverse_power_of_two(exp: usize) -> Rational {
    Rational::new(BigInt::one(), num::pow(BigInt::from(2u32), exp))
}

pub mod serde_str {
    //! Serde adapter storing a [`Rational`] as its canonical string.
    use serde::{Deserialize, Deserializer, Serializer};

    use super::{format_rational, parse_rational, Rational};

    pub fn serialize<S: Serializer>(value: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format_rational(value))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let text = String::deserialize(d)?;
        parse_rational(&text).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn decimals_are_exact() {
        assert_eq!(parse_rational("0.5").unwrap(), ratio(1, 2));
        assert_eq!(parse_rational("0.027").unwrap(), ratio(27, 1000));
        assert_eq!(parse_rational(".8").unwrap(), ratio(4, 5));
        assert_eq!(parse_rational("1").unwrap(), from_int(1));
        assert_eq!(parse_rational("-2.50").unwrap(), ratio(-5, 2));
    }

    #[test]
    fn fractions_stay_reduced() {
        let third = parse_rational("1/3").unwrap();
        assert_eq!(third, ratio(1, 3));
        assert_eq!(parse_rational("6/8").unwrap(), ratio(3, 4));
        assert_eq!(format_rational(&parse_rational("6/8").unwrap()), "3/4");
        assert_eq!(format_rational(&parse_rational("4/2").unwrap()), "2");
    }

    #[test]
    fn garbage_is_rejected() {
        for bad in ["", "abc", "1/0", "1/-2", "1.2.3", "0x10", ".", "-", "1/", "1e-3"] {
            assert!(parse_rational(bad).is_err(), "{bad:?} should not parse");
        }
    }

    #[test]
    fn powers_of_two() {
        assert_eq!(inverse_power_of_two(0), from_int(1));
        assert_eq!(inverse_power_of_two(3), ratio(1, 8));
    }

    proptest! {
        #[test]
        fn format_parse_identity(n in -10_000i64..10_000, d in 1i64..10_000) {
            let r = ratio(n, d);
            prop_assert_eq!(parse_rational(&format_rational(&r)).unwrap(), r);
        }
    }
}
