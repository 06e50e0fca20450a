use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use super::bivar::BivarPoly;
use super::rational::Rational;
use super::ring::{IntPoly, RatPoly};
use crate::error::{Error, Result};

/// Quotient of two bivariate integer polynomials, kept in lowest terms with
/// a denominator whose lexicographic leading coefficient is positive.
#[derive(Clone, Debug, Eq)]
pub struct RatFunc {
    num: BivarPoly,
    den: BivarPoly,
}

impl RatFunc {
    pub fn new(num: BivarPoly, den: BivarPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(RatFunc { num, den }.normalize())
    }

    pub fn from_poly(p: BivarPoly) -> Self {
        RatFunc { num: p, den: BivarPoly::one() }
    }

    /// Clears the rational coefficients of `num / den` (both in `x` only).
    pub fn from_rational_polys(num: &RatPoly, den: &RatPoly) -> Result<Self> {
        let lcm = num.coeffs().iter().chain(den.coeffs()).fold(<BigInt as One>::one(), |acc, c| acc.lcm(c.denom()));
        RatFunc::new(scale_to_integer(num, &lcm), scale_to_integer(den, &lcm))
    }

    pub fn numerator(&self) -> &BivarPoly {
        &self.num
    }

    pub fn denominator(&self) -> &BivarPoly {
        &self.den
    }

    /// Divides out the greatest common divisor and fixes the sign.
    pub fn normalize(self) -> Self {
        if self.num.is_zero() {
            return RatFunc { num: BivarPoly::zero(), den: BivarPoly::one() };
        }
        let g = self.num.gcd(&self.den);
        let (mut num, mut den) = if g == BivarPoly::one() {
            (self.num, self.den)
        } else {
            (
                self.num.div_exact(&g).expect("gcd divides numerator"),
                self.den.div_exact(&g).expect("gcd divides denominator"),
            )
        };
        if den.lex_lead().is_some_and(Signed::is_negative) {
            num = -num;
            den = -den;
        }
        RatFunc { num, den }
    }

    pub fn mul(&self, other: &RatFunc) -> RatFunc {
        RatFunc { num: &self.num * &other.num, den: &self.den * &other.den }.normalize()
    }

    pub fn add(&self, other: &RatFunc) -> RatFunc {
        RatFunc { num: &(&self.num * &other.den) + &(&other.num * &self.den), den: &self.den * &other.den }.normalize()
    }

    pub fn neg(&self) -> RatFunc {
        RatFunc { num: -&self.num, den: self.den.clone() }
    }

    pub fn sub(&self, other: &RatFunc) -> RatFunc {
        self.add(&other.neg())
    }

    pub fn div(&self, other: &RatFunc) -> Result<RatFunc> {
        if other.num.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(RatFunc { num: &self.num * &other.den, den: &self.den * &other.num }.normalize())
    }

    pub fn scale_poly(&self, p: &BivarPoly) -> RatFunc {
        RatFunc { num: &self.num * p, den: self.den.clone() }.normalize()
    }

    /// Substitutes `x -> x + c(α)` in numerator and denominator.
    pub fn shift_x(&self, c: &IntPoly) -> RatFunc {
        RatFunc { num: self.num.shift_x(c), den: self.den.shift_x(c) }.normalize()
    }

    /// The polynomial this function equals, if the denominator divides out.
    pub fn as_poly(&self) -> Option<BivarPoly> {
        self.num.div_exact(&self.den)
    }

    pub fn eval(&self, x0: &Rational, a0: &Rational) -> Result<Rational> {
        let d = self.den.eval(x0, a0);
        if Zero::is_zero(&d) {
            return Err(Error::DivisionByZero);
        }
        Ok(self.num.eval(x0, a0) / d)
    }

    /// Specializes `α = a0`; the result is a function of `x` alone.
    pub fn eval_alpha(&self, a0: &Rational) -> Result<RatFunc> {
        RatFunc::from_rational_polys(&self.num.eval_alpha(a0), &self.den.eval_alpha(a0))
    }

    pub fn to_json(&self) -> Value {
        json!({ "num": self.num.to_json(), "den": self.den.to_json() })
    }
}

/// Equality as fractions: `a/b == c/d` iff `a·d == c·b`.
impl PartialEq for RatFunc {
    fn eq(&self, other: &Self) -> bool {
        &self.num * &other.den == &other.num * &self.den
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == BivarPoly::one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

fn scale_to_integer(p: &RatPoly, lcm: &BigInt) -> BivarPoly {
    let rows: Vec<IntPoly> =
        p.coeffs().iter().map(|c| IntPoly::constant((c * Rational::from_integer(lcm.clone())).to_integer())).collect();
    BivarPoly::from_x_rows(rows)
}
