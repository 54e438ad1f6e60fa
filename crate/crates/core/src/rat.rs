//! The rational ground field.
//!
//! `BigRational` keeps numerator and denominator coprime with a positive
//! denominator, and zero is stored as `0/1`, so structural equality is value
//! equality.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

pub type Rat = num_rational::BigRational;

pub fn int(v: i64) -> Rat {
    Rat::from_integer(BigInt::from(v))
}

/// `n / d`; panics when `d == 0`.
pub fn ratio(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

pub fn sign(r: &Rat) -> i8 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

pub fn pow(base: &Rat, exp: usize) -> Rat {
    let mut acc = Rat::one();
    let mut b = base.clone();
    let mut e = exp;
    while e > 0 {
        if e & 1 == 1 {
            acc *= &b;
        }
        e >>= 1;
        if e > 0 {
            b = &b * &b;
        }
    }
    acc
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseRatError {
    Empty,
    Malformed(String),
    ZeroDenominator(String),
}

impl fmt::Display for ParseRatError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseRatError::Empty => write!(f, "empty rational"),
            ParseRatError::Malformed(s) => write!(f, "malformed rational {s:?}"),
            ParseRatError::ZeroDenominator(s) => write!(f, "zero denominator in {s:?}"),
        }
    }
}

impl std::error::Error for ParseRatError {}

fn parse_int(s: &str, allow_sign: bool) -> Option<BigInt> {
    let digits = if allow_sign {
        s.strip_prefix(['-', '+']).unwrap_or(s)
    } else {
        s
    };
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    BigInt::from_str(s.strip_prefix('+').unwrap_or(s)).ok()
}

/// Parses `"p"` or `"p/q"` with an optional sign on `p` and `q > 0`.
pub fn parse(s: &str) -> Result<Rat, ParseRatError> {
    let s = s.trim();
    if s.is_empty() {
        return Err(ParseRatError::Empty);
    }
    let malformed = || ParseRatError::Malformed(s.to_string());
    match s.split_once('/') {
        None => Ok(Rat::from_integer(parse_int(s, true).ok_or_else(malformed)?)),
        Some((n, d)) => {
            let n = parse_int(n, true).ok_or_else(malformed)?;
            let d = parse_int(d, false).ok_or_else(malformed)?;
            if d.is_zero() {
                return Err(ParseRatError::ZeroDenominator(s.to_string()));
            }
            Ok(Rat::new(n, d))
        }
    }
}

/// Smallest-denominator rational in the closed interval `[lo, hi]`.
pub fn simplest_between(lo: &Rat, hi: &Rat) -> Rat {
    debug_assert!(lo <= hi);
    if lo.is_negative() && hi.is_positive() || lo.is_zero() || hi.is_zero() {
        return Rat::zero();
    }
    if hi.is_negative() {
        return -simplest_between(&-hi, &-lo);
    }
    // Stern-Brocot descent via continued fractions, 0 < lo <= hi.
    let fl = lo.floor();
    if &fl == lo {
        return fl;
    }
    if &fl + Rat::one() <= *hi {
        return fl + Rat::one();
    }
    let lo_frac = lo - &fl;
    let hi_frac = hi - &fl;
    // 1/hi_frac <= 1/x <= 1/lo_frac
    let inner = simplest_between(&hi_frac.recip(), &lo_frac.recip());
    fl + inner.recip()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_integers_and_fractions() {
        assert_eq!(parse("3").unwrap(), int(3));
        assert_eq!(parse("-4/6").unwrap(), ratio(-2, 3));
        assert_eq!(parse(" +7/1 ").unwrap(), int(7));
    }

    #[test]
    fn rejects_bad_rationals() {
        assert_eq!(parse("1/0"), Err(ParseRatError::ZeroDenominator("1/0".into())));
        assert!(matches!(parse("1/-2"), Err(ParseRatError::Malformed(_))));
        assert!(matches!(parse("1.5"), Err(ParseRatError::Malformed(_))));
        assert!(matches!(parse("/3"), Err(ParseRatError::Malformed(_))));
        assert_eq!(parse(""), Err(ParseRatError::Empty));
    }

    #[test]
    fn display_is_canonical() {
        assert_eq!(ratio(6, -4).to_string(), "-3/2");
        assert_eq!(int(0).to_string(), "0");
    }

    #[test]
    fn simplest_fraction() {
        assert_eq!(simplest_between(&ratio(1, 3), &ratio(1, 2)), ratio(1, 2));
        assert_eq!(simplest_between(&ratio(3, 10), &ratio(34, 100)), ratio(1, 3));
        assert_eq!(simplest_between(&ratio(-34, 100), &ratio(-3, 10)), ratio(-1, 3));
        assert_eq!(simplest_between(&ratio(7, 5), &ratio(7, 5)), ratio(7, 5));
        assert_eq!(simplest_between(&ratio(-1, 5), &ratio(7, 5)), int(0));
        assert_eq!(simplest_between(&ratio(11, 10), &ratio(29, 10)), int(2));
    }
}
