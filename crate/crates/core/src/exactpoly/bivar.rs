use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde_json::{json, Value};

use super::ring::{IntPoly, Poly, RatPoly, Ring};

/// Integer polynomial in the spectral variable `x` and the parameter `α`.
///
/// Stored as a polynomial in `x` whose coefficients are integer polynomials
/// in `α`, both levels trimmed, so structural equality is coefficient equality.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct BivarPoly(Poly<IntPoly>);

impl BivarPoly {
    pub fn zero() -> Self {
        BivarPoly(Poly::zero())
    }

    pub fn one() -> Self {
        BivarPoly::constant(1)
    }

    pub fn constant(c: i64) -> Self {
        BivarPoly(Poly::constant(IntPoly::from_i64(c)))
    }

    pub fn x() -> Self {
        BivarPoly(Poly::var())
    }

    pub fn alpha() -> Self {
        BivarPoly(Poly::constant(IntPoly::var()))
    }

    /// Builds `Σ c · x^dx · α^da` from `(dx, da, c)` triples; repeated monomials add up.
    pub fn from_terms(terms: &[(usize, usize, i64)]) -> Self {
        terms.iter().fold(BivarPoly::zero(), |acc, &(dx, da, c)| {
            acc + BivarPoly(Poly::monomial(IntPoly::monomial(BigInt::from(c), da), dx))
        })
    }

    /// A polynomial in `α` only.
    pub fn from_alpha_poly(p: IntPoly) -> Self {
        BivarPoly(Poly::constant(p))
    }

    pub fn from_x_rows(rows: Vec<IntPoly>) -> Self {
        BivarPoly(Poly::new(rows))
    }

    pub fn inner(&self) -> &Poly<IntPoly> {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn coeff(&self, dx: usize, da: usize) -> BigInt {
        self.0.coeff(dx).coeff(da)
    }

    /// Coefficient of `x^dx` as a polynomial in `α`.
    pub fn x_coeff(&self, dx: usize) -> IntPoly {
        self.0.coeff(dx)
    }

    pub fn x_degree(&self) -> Option<usize> {
        self.0.degree()
    }

    pub fn alpha_degree(&self) -> Option<usize> {
        self.0.coeffs().iter().filter_map(|r| r.degree()).max()
    }

    /// Non-zero terms `(dx, da, c)`, descending `x`-degree then descending `α`-degree.
    pub fn terms(&self) -> Vec<(usize, usize, BigInt)> {
        let mut out = Vec::new();
        for (dx, row) in self.0.coeffs().iter().enumerate().rev() {
            for (da, c) in row.coeffs().iter().enumerate().rev() {
                if !Zero::is_zero(c) {
                    out.push((dx, da, c.clone()));
                }
            }
        }
        out
    }

    pub fn eval(&self, x0: &BigRational, a0: &BigRational) -> BigRational {
        self.eval_alpha(a0).eval(x0)
    }

    /// Substitutes `α = a0`, leaving a univariate polynomial in `x`.
    pub fn eval_alpha(&self, a0: &BigRational) -> RatPoly {
        self.0.map(|row| row.eval_rational(a0))
    }

    /// `p(x + c(α))`.
    pub fn shift_x(&self, c: &IntPoly) -> Self {
        BivarPoly(self.0.shift(c))
    }

    pub fn div_exact(&self, d: &BivarPoly) -> Option<BivarPoly> {
        if d.is_zero() {
            return None;
        }
        self.0.div_exact_poly(&d.0).map(BivarPoly)
    }

    pub fn gcd(&self, other: &BivarPoly) -> BivarPoly {
        BivarPoly(self.0.gcd_poly(&other.0))
    }

    pub fn scale(&self, c: i64) -> BivarPoly {
        BivarPoly(self.0.scale(&IntPoly::from_i64(c)))
    }

    /// Leading coefficient in lexicographic order (`x` first, then `α`).
    pub fn lex_lead(&self) -> Option<&BigInt> {
        self.0.lead().and_then(|row| row.lead())
    }

    pub fn to_json(&self) -> Value {
        Value::Array(self.terms().into_iter().map(|(dx, da, c)| json!([dx, da, c.to_string()])).collect())
    }

    pub fn from_json(v: &Value) -> Option<BivarPoly> {
        let mut acc = BivarPoly::zero();
        for t in v.as_array()? {
            let t = t.as_array()?;
            let dx = t.first()?.as_u64()? as usize;
            let da = t.get(1)?.as_u64()? as usize;
            let c: BigInt = t.get(2)?.as_str()?.parse().ok()?;
            acc = acc + BivarPoly(Poly::monomial(IntPoly::monomial(c, da), dx));
        }
        Some(acc)
    }
}

impl fmt::Display for BivarPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.terms();
        if terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (dx, da, c)) in terms.iter().enumerate() {
            let mut mono = Vec::new();
            match da {
                0 => {}
                1 => mono.push("a".to_string()),
                _ => mono.push(format!("a^{da}")),
            }
            match dx {
                0 => {}
                1 => mono.push("x".to_string()),
                _ => mono.push(format!("x^{dx}")),
            }
            write_term(f, k == 0, Signed::is_negative(c), &c.abs().to_string(), &mono.join("*"))?;
        }
        Ok(())
    }
}

/// Shared term writer: `"x^2 - 2*a*x + 1"` style.
pub(crate) fn write_term(
    f: &mut fmt::Formatter<'_>,
    first: bool,
    negative: bool,
    abs: &str,
    mono: &str,
) -> fmt::Result {
    match (first, negative) {
        (true, true) => f.write_str("-")?,
        (true, false) => {}
        (false, true) => f.write_str(" - ")?,
        (false, false) => f.write_str(" + ")?,
    }
    if mono.is_empty() {
        f.write_str(abs)
    } else if abs == "1" {
        f.write_str(mono)
    } else {
        write!(f, "{abs}*{mono}")
    }
}

/// Renders a univariate rational polynomial in `x`.
pub fn render_ratpoly(p: &RatPoly) -> String {
    struct R<'a>(&'a RatPoly);
    impl fmt::Display for R<'_> {
        fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            let mut first = true;
            for (dx, c) in self.0.coeffs().iter().enumerate().rev() {
                if Zero::is_zero(c) {
                    continue;
                }
                let mono = match dx {
                    0 => String::new(),
                    1 => "x".into(),
                    _ => format!("x^{dx}"),
                };
                write_term(f, first, Signed::is_negative(c), &c.abs().to_string(), &mono)?;
                first = false;
            }
            if first {
                f.write_str("0")?;
            }
            Ok(())
        }
    }
    R(p).to_string()
}

macro_rules! bin_op {
    ($tr:ident, $method:ident, $ring:ident) => {
        impl $tr<&BivarPoly> for &BivarPoly {
            type Output = BivarPoly;
            fn $method(self, rhs: &BivarPoly) -> BivarPoly {
                BivarPoly(Ring::$ring(&self.0, &rhs.0))
            }
        }
        impl $tr<BivarPoly> for BivarPoly {
            type Output = BivarPoly;
            fn $method(self, rhs: BivarPoly) -> BivarPoly {
                BivarPoly(Ring::$ring(&self.0, &rhs.0))
            }
        }
        impl $tr<&BivarPoly> for BivarPoly {
            type Output = BivarPoly;
            fn $method(self, rhs: &BivarPoly) -> BivarPoly {
                BivarPoly(Ring::$ring(&self.0, &rhs.0))
            }
        }
    };
}

bin_op!(Add, add, add);
bin_op!(Sub, sub, sub);
bin_op!(Mul, mul, mul);

impl Neg for BivarPoly {
    type Output = BivarPoly;
    fn neg(self) -> BivarPoly {
        BivarPoly(Ring::neg(&self.0))
    }
}

impl Neg for &BivarPoly {
    type Output = BivarPoly;
    fn neg(self) -> BivarPoly {
        BivarPoly(Ring::neg(&self.0))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::rational::rat;

    #[test]
    fn products_and_rendering() {
        let x = BivarPoly::x();
        let a = BivarPoly::alpha();
        assert_eq!(&(&x - &a) * &(&x + &a), BivarPoly::from_terms(&[(2, 0, 1), (0, 2, -1)]));
        let one = BivarPoly::one();
        let lhs = &(&x - &a) * &(&x - &a) - &(&(&one - &a) * &(&one - &a));
        assert_eq!(lhs.to_string(), "x^2 - 2*a*x + 2*a - 1");
        assert_eq!(&lhs + &BivarPoly::zero(), lhs);
        assert_eq!(BivarPoly::zero().to_string(), "0");
        assert_eq!((-BivarPoly::x()).to_string(), "-x");
        assert_eq!(BivarPoly::from_terms(&[(3, 2, 5)]).to_string(), "5*a^2*x^3");
    }

    #[test]
    fn evaluation() {
        let p = BivarPoly::from_terms(&[(2, 0, 1), (1, 1, -2), (0, 1, 2), (0, 0, -1)]);
        assert_eq!(p.eval(&rat(1, 1), &rat(3, 4)), rat(0, 1));
        let at0 = p.eval_alpha(&rat(0, 1));
        assert_eq!(at0.coeffs().len(), 3);
        assert_eq!(at0.coeff(1), rat(0, 1));
        assert_eq!(BivarPoly::x().eval(&rat(5, 1), &rat(7, 3)), rat(5, 1));
    }

    #[test]
    fn json_round_trip() {
        let p = BivarPoly::from_terms(&[(2, 0, 1), (1, 1, -2), (0, 1, 2), (0, 0, -1)]);
        let v = p.to_json();
        assert_eq!(v, serde_json::json!([[2, 0, "1"], [1, 1, "-2"], [0, 1, "2"], [0, 0, "-1"]]));
        assert_eq!(BivarPoly::from_json(&v), Some(p));
    }

    #[test]
    fn bivariate_gcd_and_division() {
        let x = BivarPoly::x();
        let a = BivarPoly::alpha();
        let f = &x - &(&a * &BivarPoly::constant(3));
        let g = &(&x * &x) + &a;
        let h = &x + &BivarPoly::one();
        let p = &f * &g;
        let q = &(&f * &h).scale(6);
        assert_eq!(p.gcd(q), f);
        assert_eq!(p.div_exact(&f), Some(g.clone()));
        assert_eq!(p.div_exact(&h), None);
        // shift x -> x - α
        let s = g.shift_x(&IntPoly::var().map(|c| -c));
        assert_eq!(s.to_string(), "x^2 - 2*a*x + a^2 + a");
    }
}
