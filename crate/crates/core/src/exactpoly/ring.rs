//! A minimal commutative-ring abstraction and dense univariate polynomials over it.
//!
//! `Poly<T>` is itself a `Ring`, so `Poly<Poly<BigInt>>` gives the bivariate
//! integer ring used for characteristic polynomials.

use std::fmt::Debug;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub trait Ring: Clone + PartialEq + Debug + Send + Sync {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(v: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    /// `Some(q)` with `q * d == self`, or `None` when `d` does not divide `self`.
    fn div_exact(&self, d: &Self) -> Option<Self>;
    /// A greatest common divisor, unit-normalized. `gcd(0, 0) == 0`.
    fn gcd(&self, other: &Self) -> Self;
    /// True when the unit-normal associate of `self` is `-self`.
    fn is_negative(&self) -> bool;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }
}

impl Ring for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn div_exact(&self, d: &Self) -> Option<Self> {
        if Zero::is_zero(d) {
            return None;
        }
        let (q, r) = self.div_rem(d);
        Zero::is_zero(&r).then_some(q)
    }
    fn gcd(&self, other: &Self) -> Self {
        Integer::gcd(self, other)
    }
    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }
}

impl Ring for BigRational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(v.into())
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn div_exact(&self, d: &Self) -> Option<Self> {
        (!Zero::is_zero(d)).then(|| self / d)
    }
    fn gcd(&self, other: &Self) -> Self {
        if Zero::is_zero(self) && Zero::is_zero(other) {
            Zero::zero()
        } else {
            One::one()
        }
    }
    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }
}

/// Dense univariate polynomial, coefficients stored low degree first with no
/// trailing zeros. The zero polynomial has an empty coefficient vector.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Poly<T> {
    coeffs: Vec<T>,
}

impl<T: Ring> Poly<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn constant(c: T) -> Self {
        Poly::new(vec![c])
    }

    /// The indeterminate itself.
    pub fn var() -> Self {
        Poly { coeffs: vec![T::zero(), T::one()] }
    }

    pub fn monomial(c: T, k: usize) -> Self {
        let mut coeffs = vec![T::zero(); k];
        coeffs.push(c);
        Poly::new(coeffs)
    }

    /// `x - r`.
    pub fn linear_root(r: T) -> Self {
        Poly { coeffs: vec![r.neg(), T::one()] }
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }

    /// Coefficient of the `k`-th power, zero past the degree.
    pub fn coeff(&self, k: usize) -> T {
        self.coeffs.get(k).cloned().unwrap_or_else(T::zero)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lead(&self) -> Option<&T> {
        self.coeffs.last()
    }

    pub fn scale(&self, c: &T) -> Self {
        Poly::new(self.coeffs.iter().map(|a| a.mul(c)).collect())
    }

    pub fn eval(&self, at: &T) -> T {
        self.coeffs.iter().rev().fold(T::zero(), |acc, c| acc.mul(at).add(c))
    }

    /// Coefficient-wise map into another ring.
    pub fn map<U: Ring>(&self, f: impl Fn(&T) -> U) -> Poly<U> {
        Poly::new(self.coeffs.iter().map(f).collect())
    }

    /// `p(x + c)` by repeated Horner steps.
    pub fn shift(&self, c: &T) -> Self {
        let step = Poly::new(vec![c.clone(), T::one()]);
        self.coeffs.iter().rev().fold(Poly::zero(), |acc: Poly<T>, a| acc.mul(&step).add(&Poly::constant(a.clone())))
    }

    pub fn derivative(&self) -> Self {
        Poly::new(self.coeffs.iter().enumerate().skip(1).map(|(k, c)| c.mul(&T::from_i64(k as i64))).collect())
    }

    pub fn content(&self) -> T {
        self.coeffs.iter().fold(T::zero(), |g, c| g.gcd(c))
    }

    pub fn primitive_part(&self) -> Self {
        if self.coeffs.is_empty() {
            return self.clone();
        }
        let c = self.content();
        let pp = self.div_scalar_exact(&c).expect("content divides every coefficient");
        pp.unit_normal()
    }

    pub fn div_scalar_exact(&self, c: &T) -> Option<Self> {
        self.coeffs.iter().map(|a| a.div_exact(c)).collect::<Option<Vec<_>>>().map(Poly::new)
    }

    pub fn unit_normal(self) -> Self {
        if self.lead().is_some_and(|l| l.is_negative()) {
            self.neg()
        } else {
            self
        }
    }

    /// Long division requiring every quotient coefficient to divide exactly.
    /// Returns `(quotient, remainder)` or `None` if some leading-coefficient
    /// division fails.
    pub fn div_rem(&self, d: &Self) -> Option<(Self, Self)> {
        let dd = d.degree()?;
        let dl = d.lead().expect("non-zero divisor");
        let mut rem = self.coeffs.clone();
        let Some(sd) = self.degree() else {
            return Some((Poly::zero(), Poly::zero()));
        };
        if sd < dd {
            return Some((Poly::zero(), self.clone()));
        }
        let mut quot = vec![T::zero(); sd - dd + 1];
        for k in (0..=sd - dd).rev() {
            let top = &rem[k + dd];
            if top.is_zero() {
                continue;
            }
            let q = top.div_exact(dl)?;
            for (i, dc) in d.coeffs.iter().enumerate() {
                rem[k + i] = rem[k + i].sub(&q.mul(dc));
            }
            quot[k] = q;
        }
        Some((Poly::new(quot), Poly::new(rem)))
    }

    pub fn div_exact_poly(&self, d: &Self) -> Option<Self> {
        let (q, r) = self.div_rem(d)?;
        r.is_zero().then_some(q)
    }

    /// Pseudo-remainder: `lc(d)^k * self mod d` for the needed `k`.
    pub fn pseudo_rem(&self, d: &Self) -> Self {
        let dd = d.degree().expect("non-zero divisor");
        let lc = d.lead().expect("non-zero divisor").clone();
        let mut r = self.clone();
        while let Some(rd) = r.degree() {
            if rd < dd {
                break;
            }
            let top = r.lead().expect("non-zero").clone();
            let sub = d.scale(&top).mul(&Poly::monomial(T::one(), rd - dd));
            r = r.scale(&lc).sub(&sub);
        }
        r
    }

    /// Greatest common divisor by the primitive polynomial remainder sequence.
    pub fn gcd_poly(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.primitive_part_with_content();
        }
        if other.is_zero() {
            return self.primitive_part_with_content();
        }
        let c = self.content().gcd(&other.content());
        let (mut a, mut b) = (self.primitive_part(), other.primitive_part());
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        loop {
            let r = a.pseudo_rem(&b);
            if r.is_zero() {
                return b.scale(&c).unit_normal();
            }
            if r.degree() == Some(0) {
                return Poly::constant(c).unit_normal();
            }
            a = b;
            b = r.primitive_part();
        }
    }

    fn primitive_part_with_content(&self) -> Self {
        self.clone().unit_normal()
    }
}

impl<T: Ring> Ring for Poly<T> {
    fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }
    fn one() -> Self {
        Poly { coeffs: vec![T::one()] }
    }
    fn from_i64(v: i64) -> Self {
        Poly::new(vec![T::from_i64(v)])
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
    fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Poly::new(
            (0..n)
                .map(|k| match (self.coeffs.get(k), other.coeffs.get(k)) {
                    (Some(a), Some(b)) => a.add(b),
                    (Some(a), None) => a.clone(),
                    (None, Some(b)) => b.clone(),
                    (None, None) => unreachable!(),
                })
                .collect(),
        )
    }
    fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }
    fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] = out[i + j].add(&a.mul(b));
                }
            }
        }
        Poly::new(out)
    }
    fn neg(&self) -> Self {
        Poly { coeffs: self.coeffs.iter().map(|c| c.neg()).collect() }
    }
    fn div_exact(&self, d: &Self) -> Option<Self> {
        self.div_exact_poly(d)
    }
    fn gcd(&self, other: &Self) -> Self {
        self.gcd_poly(other)
    }
    fn is_negative(&self) -> bool {
        self.lead().is_some_and(|l| l.is_negative())
    }
}

pub type IntPoly = Poly<BigInt>;
pub type RatPoly = Poly<BigRational>;

impl RatPoly {
    pub fn monic(&self) -> Self {
        match self.lead() {
            None => self.clone(),
            Some(l) => {
                let l = l.clone();
                self.map(|c| c / &l)
            }
        }
    }

    /// Multiplicity of `r` as a root (0 when `r` is not a root).
    pub fn root_multiplicity(&self, r: &BigRational) -> usize {
        if self.is_zero() {
            return 0;
        }
        let lin = Poly::linear_root(r.clone());
        let mut p = self.clone();
        let mut k = 0;
        while let Some(q) = p.div_exact_poly(&lin) {
            p = q;
            k += 1;
        }
        k
    }

    /// Number of roots strictly greater than `t`, counted with multiplicity.
    /// Assumes every root is real, as for characteristic polynomials of
    /// symmetric matrices.
    pub fn count_roots_above(&self, t: &BigRational) -> usize {
        self.squarefree_decomposition().iter().map(|(k, f)| k * f.sturm_distinct_above(t)).sum()
    }

    /// Distinct real roots in `(t, ∞)` by a Sturm chain.
    fn sturm_distinct_above(&self, t: &BigRational) -> usize {
        let mut p = self.clone();
        let m = p.root_multiplicity(t);
        for _ in 0..m {
            p = p.div_exact_poly(&Poly::linear_root(t.clone())).expect("root divides");
        }
        if p.degree().unwrap_or(0) == 0 {
            return 0;
        }
        let mut chain = vec![p.clone(), p.derivative()];
        loop {
            let k = chain.len();
            let (_, r) = chain[k - 2].div_rem(&chain[k - 1]).expect("field division");
            if r.is_zero() {
                break;
            }
            chain.push(r.neg());
        }
        let sign_changes = |signs: Vec<i8>| {
            let nz: Vec<i8> = signs.into_iter().filter(|&s| s != 0).collect();
            nz.windows(2).filter(|w| w[0] != w[1]).count()
        };
        let at_t = chain.iter().map(|q| sign_of(&q.eval(t))).collect();
        let at_inf = chain.iter().map(|q| q.lead().map_or(0, sign_of)).collect();
        sign_changes(at_t) - sign_changes(at_inf)
    }

    /// Yun's square-free decomposition: returns `(k, f_k)` with
    /// `self = lc * Π f_k^k`, each `f_k` monic, square-free and pairwise coprime.
    pub fn squarefree_decomposition(&self) -> Vec<(usize, RatPoly)> {
        let mut out = Vec::new();
        if self.degree().unwrap_or(0) == 0 {
            return out;
        }
        let f = self.monic();
        let df = f.derivative();
        let a0 = f.gcd_poly(&df).monic();
        let mut b = f.div_exact_poly(&a0).expect("gcd divides f");
        let mut c = df.div_exact_poly(&a0).expect("gcd divides f'");
        let mut d = c.sub(&b.derivative());
        let mut k = 1;
        while b.degree().unwrap_or(0) > 0 {
            let a = b.gcd_poly(&d).monic();
            if a.degree().unwrap_or(0) > 0 {
                out.push((k, a.clone()));
            }
            b = b.div_exact_poly(&a).expect("gcd divides b");
            c = d.div_exact_poly(&a).expect("gcd divides d");
            d = c.sub(&b.derivative());
            k += 1;
        }
        out
    }
}

fn sign_of(r: &BigRational) -> i8 {
    if Zero::is_zero(r) {
        0
    } else if Signed::is_negative(r) {
        -1
    } else {
        1
    }
}

impl IntPoly {
    pub fn to_rational(&self) -> RatPoly {
        self.map(|c| BigRational::from_integer(c.clone()))
    }

    pub fn eval_rational(&self, at: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(<BigRational as Zero>::zero(), |acc, c| acc * at + BigRational::from_integer(c.clone()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ip(c: &[i64]) -> IntPoly {
        Poly::new(c.iter().map(|&v| BigInt::from(v)).collect())
    }

    fn rp(c: &[i64]) -> RatPoly {
        ip(c).to_rational()
    }

    #[test]
    fn arithmetic() {
        let a = ip(&[-1, 1]);
        let b = ip(&[1, 1]);
        assert_eq!(a.mul(&b), ip(&[-1, 0, 1]));
        assert_eq!(a.add(&Poly::zero()), a);
        assert_eq!(a.sub(&a), Poly::zero());
        assert_eq!(ip(&[1, 2, 0, 0]).degree(), Some(1));
    }

    #[test]
    fn shift_and_eval() {
        // (x^2)(x + 1) = x^2 + 2x + 1
        let p = ip(&[0, 0, 1]);
        assert_eq!(p.shift(&BigInt::from(1)), ip(&[1, 2, 1]));
        assert_eq!(p.eval(&BigInt::from(-3)), BigInt::from(9));
        assert_eq!(ip(&[5, 0, 3]).derivative(), ip(&[0, 6]));
    }

    #[test]
    fn division() {
        let p = ip(&[-1, 0, 1]);
        assert_eq!(p.div_exact_poly(&ip(&[1, 1])), Some(ip(&[-1, 1])));
        assert_eq!(p.div_exact_poly(&ip(&[2, 1])), None);
        assert_eq!(ip(&[2, 4]).div_exact_poly(&ip(&[1, 3])), None);
        assert_eq!(ip(&[2, 6]).div_exact_poly(&ip(&[1, 3])), Some(ip(&[2])));
    }

    #[test]
    fn integer_gcd() {
        // (x-1)(x+2) and 2(x-1)(x-3)
        let a = ip(&[-1, 1]).mul(&ip(&[2, 1]));
        let b = ip(&[-1, 1]).mul(&ip(&[-3, 1])).scale(&BigInt::from(2));
        assert_eq!(a.gcd_poly(&b), ip(&[-1, 1]));
        assert_eq!(ip(&[4, 6]).gcd_poly(&ip(&[6, 9])), ip(&[2, 3]));
        assert_eq!(ip(&[-4, -6]).gcd_poly(&Poly::zero()), ip(&[4, 6]));
        assert_eq!(ip(&[1, 1]).gcd_poly(&ip(&[1, 2])), ip(&[1]));
    }

    #[test]
    fn squarefree() {
        // (x-1)^3 (x+2)
        let p = rp(&[-1, 1]).mul(&rp(&[-1, 1])).mul(&rp(&[-1, 1])).mul(&rp(&[2, 1]));
        let sf = p.squarefree_decomposition();
        assert_eq!(sf, vec![(1, rp(&[2, 1])), (3, rp(&[-1, 1]))]);
        assert_eq!(p.root_multiplicity(&BigRational::from_integer(1.into())), 3);
        assert_eq!(p.root_multiplicity(&BigRational::from_integer(2.into())), 0);
        let r = |v: i64| BigRational::from_integer(v.into());
        assert_eq!(p.count_roots_above(&r(0)), 3);
        assert_eq!(p.count_roots_above(&r(1)), 0);
        assert_eq!(p.count_roots_above(&r(-2)), 3);
        assert_eq!(p.count_roots_above(&r(-5)), 4);
    }
}
