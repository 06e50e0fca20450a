use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Exact rational number; always stored reduced with a positive denominator.
pub type Rational = BigRational;

pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// How a textual rational was written.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Notation {
    Fraction,
    Decimal,
}

/// Parses `"p/q"`, an integer, or a finite decimal such as `"0.75"`.
/// Decimals convert exactly (`0.1 == 1/10`).
pub fn parse_rational(text: &str) -> Result<(Rational, Notation)> {
    let bad = || Error::BadRational(text.to_string());
    let t = text.trim();
    if let Some((p, q)) = t.split_once('/') {
        let p: BigInt = p.trim().parse().map_err(|_| bad())?;
        let q: BigInt = q.trim().parse().map_err(|_| bad())?;
        if q.is_zero() {
            return Err(bad());
        }
        return Ok((Rational::new(p, q), Notation::Fraction));
    }
    if let Some((int, frac)) = t.split_once('.') {
        let negative = int.starts_with('-');
        let int_digits = int.trim_start_matches(['-', '+']);
        if !int_digits.chars().all(|c| c.is_ascii_digit()) || !frac.chars().all(|c| c.is_ascii_digit()) {
            return Err(bad());
        }
        if int_digits.is_empty() && frac.is_empty() {
            return Err(bad());
        }
        let digits = format!("{int_digits}{frac}");
        let num: BigInt = if digits.is_empty() { BigInt::zero() } else { digits.parse().map_err(|_| bad())? };
        let den = num_traits::pow(BigInt::from(10), frac.len());
        let r = Rational::new(if negative { -num } else { num }, den);
        return Ok((r, Notation::Decimal));
    }
    let p: BigInt = t.parse().map_err(|_| bad())?;
    Ok((Rational::from_integer(p), Notation::Fraction))
}

/// Rejects values outside `[0, 1]`.
pub fn check_alpha(alpha: &Rational) -> Result<()> {
    if alpha.is_negative() || *alpha > Rational::one() {
        Err(Error::AlphaOutOfRange(alpha.to_string()))
    } else {
        Ok(())
    }
}

pub fn parse_alpha(text: &str) -> Result<(Rational, Notation)> {
    let (a, notation) = parse_rational(text)?;
    check_alpha(&a)?;
    Ok((a, notation))
}

pub fn to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parsing() {
        assert_eq!(parse_rational("3/4").unwrap(), (rat(3, 4), Notation::Fraction));
        assert_eq!(parse_rational("6/8").unwrap().0, rat(3, 4));
        assert_eq!(parse_rational("0.75").unwrap(), (rat(3, 4), Notation::Decimal));
        assert_eq!(parse_rational(".1").unwrap().0, rat(1, 10));
        assert_eq!(parse_rational("1").unwrap().0, rat(1, 1));
        assert_eq!(parse_rational("-0.5").unwrap().0, rat(-1, 2));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("abc").is_err());
        assert!(parse_rational(".").is_err());
        assert!(parse_rational("1.2.3").is_err());
    }

    #[test]
    fn alpha_range() {
        assert!(parse_alpha("0").is_ok());
        assert!(parse_alpha("1").is_ok());
        assert!(matches!(parse_alpha("5/4"), Err(Error::AlphaOutOfRange(_))));
        assert!(matches!(parse_alpha("-0.1"), Err(Error::AlphaOutOfRange(_))));
    }
}
