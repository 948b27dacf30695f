//! Exact rational scalars.
//!
//! All coordinates and derived measures in this crate are arbitrary-precision
//! fractions, kept reduced with a positive denominator. The representation is
//! `num_rational::BigRational`; this module adds exact parsing, formatting and
//! a couple of conversion helpers.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub type Rational = BigRational;

/// Shorthand for small rational constants.
pub fn rat(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

/// Exact conversion of a finite `f64` (always a dyadic rational).
pub fn from_f64_exact(x: f64) -> Option<Rational> {
    Rational::from_float(x)
}

pub fn to_f64(x: &Rational) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

/// Parses `"a"`, `"-a"`, `"a/b"` or a decimal literal such as `"1.25"`.
///
/// Decimal literals are converted exactly (`1.25` becomes `5/4`).
pub fn parse_rational(s: &str) -> Result<Rational, String> {
    let s = s.trim();
    if s.is_empty() {
        return Err("empty coordinate".to_string());
    }
    if let Some((numer, denom)) = s.split_once('/') {
        let n: BigInt = numer
            .trim()
            .parse()
            .map_err(|_| format!("bad numerator {numer:?}"))?;
        let d: BigInt = denom
            .trim()
            .parse()
            .map_err(|_| format!("bad denominator {denom:?}"))?;
        if d.is_zero() {
            return Err(format!("zero denominator in {s:?}"));
        }
        return Ok(Rational::new(n, d));
    }
    if let Some((whole, frac)) = s.split_once('.') {
        let negative = whole.starts_with('-');
        let whole_digits = whole.strip_prefix(['-', '+']).unwrap_or(whole);
        if !whole_digits.chars().all(|c| c.is_ascii_digit())
            || !frac.chars().all(|c| c.is_ascii_digit())
            || frac.is_empty()
        {
            return Err(format!("bad decimal literal {s:?}"));
        }
        let whole_digits = if whole_digits.is_empty() { "0" } else { whole_digits };
        let w: BigInt = whole_digits.parse().map_err(|_| format!("bad literal {s:?}"))?;
        let f: BigInt = frac.parse().map_err(|_| format!("bad literal {s:?}"))?;
        let scale = BigInt::from(10u8).pow(frac.len() as u32);
        let mut value = Rational::new(w * &scale + f, scale);
        if negative {
            value = -value;
        }
        return Ok(value);
    }
    let n: BigInt = s.parse().map_err(|_| format!("bad integer {s:?}"))?;
    Ok(Rational::from_integer(n))
}

/// Canonical text form: `"a"` for integers, `"a/b"` otherwise.
pub fn format_rational(x: &Rational) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Exact binomial coefficient C(n, k).
pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut result = BigInt::one();
    for i in 0..k {
        result = result * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    result
}

/// Exact factorial n!.
pub fn factorial(n: usize) -> BigInt {
    let mut result = BigInt::one();
    for i in 2..=n {
        result *= BigInt::from(i);
    }
    result
}

pub fn is_nonnegative(x: &Rational) -> bool {
    !x.is_negative()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_integers_and_fractions() {
        assert_eq!(parse_rational("3").unwrap(), int(3));
        assert_eq!(parse_rational("-7").unwrap(), int(-7));
        assert_eq!(parse_rational("2/6").unwrap(), rat(1, 3));
        assert_eq!(parse_rational("-4/8").unwrap(), rat(-1, 2));
    }

    #[test]
    fn parses_decimals_exactly() {
        assert_eq!(parse_rational("1.25").unwrap(), rat(5, 4));
        assert_eq!(parse_rational("-0.5").unwrap(), rat(-1, 2));
        assert_eq!(parse_rational("0.1").unwrap(), rat(1, 10));
        assert_eq!(parse_rational(".5"), Ok(rat(1, 2)));
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_rational("").is_err());
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("a").is_err());
        assert!(parse_rational("1.").is_err());
    }

    #[test]
    fn formats_round_trip() {
        for s in ["0", "-3", "1/3", "-22/7"] {
            let v = parse_rational(s).unwrap();
            assert_eq!(format_rational(&v), s);
        }
    }

    #[test]
    fn f64_conversion_is_exact_dyadic() {
        let v = from_f64_exact(0.375).unwrap();
        assert_eq!(v, rat(3, 8));
    }

    #[test]
    fn binomials_and_factorials() {
        assert_eq!(binomial(6, 2), BigInt::from(15));
        assert_eq!(binomial(3, 5), BigInt::zero());
        assert_eq!(factorial(5), BigInt::from(120));
    }
}
