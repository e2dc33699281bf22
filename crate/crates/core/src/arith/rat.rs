//! Rational scalars.
//!
//! The scalar field is fixed to the rationals with arbitrary-precision
//! numerator and denominator; `num-rational` already keeps values reduced with
//! a positive denominator, so `Rat` is an alias rather than a newtype.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::ParseError;

pub type Rat = BigRational;

pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Wire form used in JSON: always `num/den`, even for integers.
pub fn rat_to_wire(r: &Rat) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Human form: `3`, `-3/2`.
pub fn rat_to_text(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Accepts `n`, `-n`, `n/d`; rejects zero denominators.
pub fn parse_rat(s: &str) -> Result<Rat, ParseError> {
    let s = s.trim();
    let bad = || ParseError::BadRational(s.to_string());
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = n.parse().map_err(|_| bad())?;
    let d: BigInt = d.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(ParseError::ZeroDenominator { pos: 0 });
    }
    Ok(Rat::new(n, d))
}

/// Height of a rational: max(|num|, den).
pub fn height(r: &Rat) -> BigInt {
    let n = r.numer().abs();
    let d = r.denom().clone();
    if n > d {
        n
    } else {
        d
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_forms() {
        assert_eq!(rat(2, -4), rat(-1, 2));
        assert_eq!(rat_to_wire(&int(2)), "2/1");
        assert_eq!(rat_to_wire(&rat(0, 5)), "0/1");
        assert_eq!(rat_to_text(&rat(-3, 2)), "-3/2");
        assert_eq!(parse_rat("-6/4").unwrap(), rat(-3, 2));
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("x").is_err());
    }
}
