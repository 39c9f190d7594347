//! Exact rational scalars and their string encoding.
//!
//! Every scalar in the crate is a [`Rational`]; `BigRational` already keeps
//! values reduced with a positive denominator, so the newtype-free alias is
//! enough. The textual form is `p/q` in lowest terms, or just `p` when the
//! denominator is one.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

pub type Rational = num_rational::BigRational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseRationalError {
    #[error("empty rational literal")]
    Empty,
    #[error("malformed rational literal `{0}`")]
    Malformed(String),
    #[error("zero denominator in `{0}`")]
    ZeroDenominator(String),
    #[error("fraction `{0}` is not in lowest terms")]
    NotReduced(String),
}

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Serializes as `p/q` (reduced), or `p` for integers.
pub fn format_rational(q: &Rational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

fn parse_int(s: &str, whole: &str) -> Result<BigInt, ParseRationalError> {
    let digits = s.strip_prefix(['-', '+']).unwrap_or(s);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(ParseRationalError::Malformed(whole.to_string()));
    }
    s.parse::<BigInt>()
        .map_err(|_| ParseRationalError::Malformed(whole.to_string()))
}

/// Parses an optionally signed integer or a reduced fraction `p/q`.
///
/// Non-reduced fractions (`2/4`), signed or non-positive denominators and
/// surrounding whitespace are rejected.
pub fn parse_rational(s: &str) -> Result<Rational, ParseRationalError> {
    if s.is_empty() {
        return Err(ParseRationalError::Empty);
    }
    match s.split_once('/') {
        None => Ok(Rational::from_integer(parse_int(s, s)?)),
        Some((n, d)) => {
            let num = parse_int(n, s)?;
            if d.starts_with(['-', '+']) {
                return Err(ParseRationalError::Malformed(s.to_string()));
            }
            let den = parse_int(d, s)?;
            if den.is_zero() {
                return Err(ParseRationalError::ZeroDenominator(s.to_string()));
            }
            if !num.gcd(&den).is_one() || (num.is_zero() && !den.is_one()) {
                return Err(ParseRationalError::NotReduced(s.to_string()));
            }
            Ok(Rational::new(num, den))
        }
    }
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn formats_integers_without_denominator() {
        assert_eq!(format_rational(&rat(3)), "3");
        assert_eq!(format_rational(&ratio(-6, 4)), "-3/2");
        assert_eq!(format_rational(&rat(0)), "0");
    }

    #[test]
    fn parses_signed_integers_and_fractions() {
        assert_eq!(parse_rational("-7").unwrap(), rat(-7));
        assert_eq!(parse_rational("+7").unwrap(), rat(7));
        assert_eq!(parse_rational("-1/3").unwrap(), ratio(-1, 3));
        assert_eq!(parse_rational("0").unwrap(), rat(0));
    }

    #[test]
    fn rejects_bad_fractions() {
        assert!(matches!(parse_rational("2/4"), Err(ParseRationalError::NotReduced(_))));
        assert!(matches!(parse_rational("0/5"), Err(ParseRationalError::NotReduced(_))));
        assert!(matches!(parse_rational("1/0"), Err(ParseRationalError::ZeroDenominator(_))));
        assert!(parse_rational("1/-2").is_err());
        assert!(parse_rational(" 1").is_err());
        assert!(parse_rational("1.5").is_err());
        assert!(parse_rational("").is_err());
        assert!(parse_rational("-").is_err());
    }

    #[test]
    fn field_inverse_pairs() {
        for (a, b) in [(3, 7), (-2, 5), (11, -13)] {
            let x = ratio(a, b);
            let y = ratio(b, a);
            assert_eq!(x * y, rat(1));
        }
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(7, 2), BigInt::from(21));
        assert_eq!(binomial(3, 5), BigInt::zero());
        assert_eq!(factorial(6), BigInt::from(720));
    }
}
