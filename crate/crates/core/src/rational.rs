//! Exact rational values and their canonical text form.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

/// Parses `"n"`, `"-n"` or `"p/q"` (q ≠ 0). The result is reduced.
pub fn parse(text: &str) -> Result<Rational> {
    let bad = || Error::BadRational(text.to_string());
    let text_trim = text.trim();
    if text_trim.is_empty() {
        return Err(bad());
    }
    match text_trim.split_once('/') {
        None => {
            let n: BigInt = text_trim.parse().map_err(|_| bad())?;
            Ok(Rational::from_integer(n))
        }
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(p, q))
        }
    }
}

/// Reduced `"p/q"` with `q > 0`, or `"n"` for integers.
pub fn format(value: &Rational) -> String {
    if value.denom().is_one() {
        value.numer().to_string()
    } else {
        format!("{}/{}", value.numer(), value.denom())
    }
}

pub fn is_positive(value: &Rational) -> bool {
    value.is_positive()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_and_reduces() {
        assert_eq!(parse("2/4").unwrap(), ratio(1, 2));
        assert_eq!(parse("-3").unwrap(), int(-3));
        assert_eq!(parse("3/-6").unwrap(), ratio(-1, 2));
        assert_eq!(format(&parse("3/-6").unwrap()), "-1/2");
        assert_eq!(format(&parse("10/5").unwrap()), "2");
    }

    #[test]
    fn rejects_garbage() {
        for bad in ["", "1/0", "a", "1/2/3", "0.5"] {
            assert!(parse(bad).is_err(), "{bad}");
        }
    }
}
