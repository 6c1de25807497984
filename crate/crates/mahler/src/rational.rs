//! Exact rational scalars.
//!
//! All coefficient arithmetic in this crate is exact: scalars are
//! arbitrary-precision rationals kept in lowest terms with a positive
//! denominator (both invariants are maintained by `num_rational`).
//! Floating point never appears anywhere.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Arbitrary-precision rational number, always reduced, denominator > 0.
pub type Rat = num_rational::BigRational;

/// Integer rational.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Rational `n/d`. Panics if `d == 0`.
pub fn rat_frac(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// True iff `r` is an integer.
pub fn is_integer(r: &Rat) -> bool {
    r.denom().is_one()
}

/// `r` as an i64, or `None` if it is not an integer or does not fit.
pub fn to_i64(r: &Rat) -> Option<i64> {
    if !is_integer(r) {
        return None;
    }
    i64::try_from(r.numer().clone()).ok()
}

/// `base^exp` as a rational, for a non-negative integer exponent.
pub fn rat_pow_u(base: u64, exp: u32) -> Rat {
    Rat::from_integer(BigInt::from(base).pow(exp))
}

/// Reduced denominator of `r` (always positive).
pub fn denominator(r: &Rat) -> BigInt {
    r.denom().clone()
}

/// Parse an exact rational from a decimal-free string such as `-3/4` or `12`.
///
/// Rejects anything containing `.`, `e` or `E` so that floating-point
/// literals are never silently accepted.
pub fn parse_rat(s: &str) -> Result<Rat, String> {
    let t = s.trim();
    if t.is_empty() {
        return Err("empty number".into());
    }
    if t.contains(['.', 'e', 'E']) {
        return Err(format!("`{t}`: floating-point literals are not accepted; use an exact fraction like 1/2"));
    }
    t.parse::<Rat>().map_err(|e| format!("`{t}`: {e}"))
}

/// Render `r` as `num/den` (or just `num` for integers).
pub fn rat_str(r: &Rat) -> String {
    if is_integer(r) {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Sign-aware magnitude comparison helper used by displays.
pub fn is_negative(r: &Rat) -> bool {
    r.is_negative()
}

pub fn rat_zero() -> Rat {
    Rat::zero()
}

pub fn rat_one() -> Rat {
    Rat::one()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_rejects_floats() {
        assert!(parse_rat("0.5").is_err());
        assert!(parse_rat("1e3").is_err());
        assert_eq!(parse_rat("-3/4").unwrap(), rat_frac(-3, 4));
        assert_eq!(parse_rat("12").unwrap(), rat(12));
    }

    #[test]
    fn display_round_trip() {
        let r = rat_frac(-7, 3);
        assert_eq!(parse_rat(&rat_str(&r)).unwrap(), r);
    }
}
