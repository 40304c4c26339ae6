//! Exact rational numbers and small parsing/formatting helpers.
//!
//! `Rational` is an arbitrary-precision fraction kept in lowest terms with a
//! positive denominator; both invariants are maintained by the backing
//! implementation.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Rational = BigRational;

/// Shorthand for an integer-valued rational.
pub fn rat_int<T: Into<BigInt>>(n: T) -> Rational {
    Rational::from_integer(n.into())
}

/// Shorthand for `p/q`. Panics if `q == 0`.
pub fn rat<T: Into<BigInt>, U: Into<BigInt>>(p: T, q: U) -> Rational {
    Rational::new(p.into(), q.into())
}

/// Parses `p/q` or a bare integer `p`, with optional leading sign.
/// Rejects empty input, a zero denominator, and any trailing garbage.
pub fn parse_rational(s: &str) -> Result<Rational, String> {
    let s = s.trim();
    if s.is_empty() {
        return Err("empty rational".to_string());
    }
    let (num_str, den_str) = match s.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (s, None),
    };
    let num: BigInt = num_str
        .parse()
        .map_err(|_| format!("bad integer `{num_str}`"))?;
    let den: BigInt = match den_str {
        Some(d) => d.parse().map_err(|_| format!("bad integer `{d}`"))?,
        None => BigInt::one(),
    };
    if den.is_zero() {
        return Err(format!("zero denominator in `{s}`"));
    }
    Ok(Rational::new(num, den))
}

/// Formats as `p/q`, or `p` when the denominator is one.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Floor of a rational as a big integer.
pub fn rational_floor(r: &Rational) -> BigInt {
    r.floor().to_integer()
}

/// `true` iff `r` is a square of a rational (numerator and denominator both
/// perfect squares after reduction).
pub fn is_rational_square(r: &Rational) -> bool {
    if r.is_negative() {
        return false;
    }
    let n = r.numer();
    let d = r.denom();
    let sn = n.sqrt();
    let sd = d.sqrt();
    &(&sn * &sn) == n && &(&sd * &sd) == d
}

/// A rational upper bound for `sqrt(r)`, tight to roughly 2^-20.
/// Panics on negative input.
pub fn sqrt_upper(r: &Rational) -> Rational {
    assert!(!r.is_negative(), "sqrt of a negative rational");
    if r.is_zero() {
        return Rational::zero();
    }
    let scale = BigInt::one() << 40u32;
    let scaled = (r * Rational::from_integer(scale)).floor().to_integer();
    let root = scaled.sqrt() + BigInt::one();
    Rational::new(root, BigInt::one() << 20u32)
}

/// A rational lower bound for `sqrt(r)` (nonnegative input).
pub fn sqrt_lower(r: &Rational) -> Rational {
    assert!(!r.is_negative(), "sqrt of a negative rational");
    if r.is_zero() {
        return Rational::zero();
    }
    let scale = BigInt::one() << 40u32;
    let scaled = (r * Rational::from_integer(scale)).floor().to_integer();
    Rational::new(scaled.sqrt(), BigInt::one() << 20u32)
}

/// Exact square root of a rational square; `None` otherwise.
pub fn rational_sqrt_exact(r: &Rational) -> Option<Rational> {
    if r.is_negative() {
        return None;
    }
    let sn = r.numer().sqrt();
    let sd = r.denom().sqrt();
    if &(&sn * &sn) == r.numer() && &(&sd * &sd) == r.denom() {
        Some(Rational::new(sn, sd))
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_roundtrip() {
        for s in ["3/4", "-7/2", "5", "0", "-12"] {
            let r = parse_rational(s).unwrap();
            assert_eq!(format_rational(&r), s);
        }
    }

    #[test]
    fn parse_reduces() {
        assert_eq!(parse_rational("6/4").unwrap(), rat(3, 2));
        assert_eq!(parse_rational("4/-2").unwrap(), rat_int(-2));
    }

    #[test]
    fn parse_rejects_garbage() {
        for s in ["", "1/0", "a/2", "1/2/3", "3.5", "1 2"] {
            assert!(parse_rational(s).is_err(), "accepted `{s}`");
        }
    }

    #[test]
    fn square_detection() {
        assert!(is_rational_square(&rat(4, 9)));
        assert!(!is_rational_square(&rat(-4, 9)));
        assert!(!is_rational_square(&rat(2, 1)));
        assert_eq!(rational_sqrt_exact(&rat(49, 4)), Some(rat(7, 2)));
    }

    #[test]
    fn sqrt_enclosures() {
        for r in [rat(232, 71), rat_int(2), rat_int(124), rat(1, 7)] {
            let lo = sqrt_lower(&r);
            let hi = sqrt_upper(&r);
            assert!(&lo * &lo <= r, "lower bound too big for {r}");
            assert!(&hi * &hi >= r, "upper bound too small for {r}");
            assert!(&hi - &lo < rat(1, 100_000));
        }
    }
}
