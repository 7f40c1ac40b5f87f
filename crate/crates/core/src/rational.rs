//! Exact rational scalars.
//!
//! Every computation in this crate runs over arbitrary-precision rationals;
//! there is no floating point anywhere in a verdict path. `Rational` is
//! always stored reduced with a positive denominator, so structural equality
//! is value equality and serialized forms are canonical.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};

pub type Rational = BigRational;

/// `n/d` as an exact rational. Panics on `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    assert!(d != 0, "zero denominator");
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Integer `n` as an exact rational.
pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parses "p/q" or "p" with optional sign. The denominator must be positive
/// after reduction; "3/0" and garbage are rejected.
pub fn parse_rational(s: &str) -> Result<Rational, String> {
    let s = s.trim();
    if s.is_empty() {
        return Err("empty rational literal".to_string());
    }
    let (num_str, den_str) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (s, None),
    };
    let num: BigInt = num_str
        .parse()
        .map_err(|_| format!("malformed numerator in {s:?}"))?;
    let den: BigInt = match den_str {
        Some(d) => d
            .parse()
            .map_err(|_| format!("malformed denominator in {s:?}"))?,
        None => BigInt::one(),
    };
    if den.is_zero() {
        return Err(format!("zero denominator in {s:?}"));
    }
    Ok(Rational::new(num, den))
}

/// Canonical rendering: "p/q", or "p" when the denominator is 1.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// True for rationals that are squares in ℚ, returning the positive root.
pub fn rational_sqrt(r: &Rational) -> Option<Rational> {
    if r.is_negative() {
        return None;
    }
    if r.is_zero() {
        return Some(Rational::zero());
    }
    let num = r.numer().sqrt();
    let den = r.denom().sqrt();
    if &(&num * &num) == r.numer() && &(&den * &den) == r.denom() {
        Some(Rational::new(num, den))
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parse_and_format_round_trip() {
        for src in ["3", "-4", "1/2", "-7/3", "0", "6/4", "-6/4"] {
            let r = parse_rational(src).unwrap();
            let rendered = format_rational(&r);
            assert_eq!(parse_rational(&rendered).unwrap(), r);
        }
        assert_eq!(format_rational(&parse_rational("6/4").unwrap()), "3/2");
        assert_eq!(format_rational(&parse_rational("-1/1").unwrap()), "-1");
    }

    #[test]
    fn rejects_malformed() {
        assert!(parse_rational("").is_err());
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("a/b").is_err());
        assert!(parse_rational("1.5").is_err());
    }

    #[test]
    fn sqrt_of_squares() {
        assert_eq!(rational_sqrt(&rat(9, 4)), Some(rat(3, 2)));
        assert_eq!(rational_sqrt(&rat(2, 1)), None);
        assert_eq!(rational_sqrt(&rat(-4, 1)), None);
        assert_eq!(rational_sqrt(&Rational::zero()), Some(Rational::zero()));
    }

    proptest! {
        #[test]
        fn always_reduced(n in -1000i64..1000, d in 1i64..1000) {
            let r = rat(n, d);
            prop_assert!(r.denom() > &BigInt::zero());
            prop_assert!(num::Integer::gcd(r.numer(), r.denom()).is_one() || r.numer().is_zero());
            let back = parse_rational(&format_rational(&r)).unwrap();
            prop_assert_eq!(back, r);
        }
    }
}
