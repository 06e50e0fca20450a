//! Coronals, characteristic polynomials of joins, and construction of
//! cospectral pairs by joining.
//!
//! The coronal of a square matrix `M` is `Γ_M(x) = 1ᵀ(xI - M)⁻¹1`. With
//! `B = xI - A_α` it equals `(det(B + J) - det B) / det B`, so it is computed
//! from two exact determinants instead of an inverse.

use num_traits::Zero;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::exactpoly::{BivarPoly, IntPoly, RatFunc, RatPoly, Rational};
use crate::graph::{self, Graph};
use crate::scan::canon::canonical_form;
use crate::spectra::{
    bareiss_det, char_matrix, charpoly_at, charpoly_exact_bounded, charpoly_minus_ones_at, ModalCharpoly, Mode,
    DEFAULT_EXACT_BOUND,
};

/// `Γ_{A_α(G)}(x)` as an exact rational function of `x` and `α`.
#[derive(Debug, Clone, PartialEq)]
pub struct Coronal {
    order: usize,
    charpoly: BivarPoly,
    adjugate_sum: BivarPoly,
    value: RatFunc,
}

impl Coronal {
    pub fn order(&self) -> usize {
        self.order
    }

    /// `det(xI - A_α)`.
    pub fn charpoly(&self) -> &BivarPoly {
        &self.charpoly
    }

    /// `1ᵀ adj(xI - A_α) 1 = det(xI - A_α + J) - det(xI - A_α)`.
    pub fn adjugate_sum(&self) -> &BivarPoly {
        &self.adjugate_sum
    }

    /// The reduced fraction.
    pub fn value(&self) -> &RatFunc {
        &self.value
    }
}

pub fn coronal(g: &Graph) -> Result<Coronal> {
    coronal_bounded(g, DEFAULT_EXACT_BOUND)
}

pub fn coronal_bounded(g: &Graph, bound: usize) -> Result<Coronal> {
    let b = char_matrix(g);
    if g.order() > bound {
        return Err(Error::SizeBound { n: g.order(), bound });
    }
    let plus_j: Vec<Vec<BivarPoly>> = b.iter().map(|row| row.iter().map(|e| e + &BivarPoly::one()).collect()).collect();
    let charpoly = bareiss_det(b)?;
    let adjugate_sum = &bareiss_det(plus_j)? - &charpoly;
    let value = RatFunc::new(adjugate_sum.clone(), charpoly.clone())?;
    Ok(Coronal { order: g.order(), charpoly, adjugate_sum, value })
}

/// The coronal at a fixed `α`, as a function of `x` alone.
pub fn coronal_at(g: &Graph, alpha: &Rational) -> Result<RatFunc> {
    let p = charpoly_at(g, alpha)?;
    let sum = crate::exactpoly::Ring::sub(&charpoly_minus_ones_at(g, alpha)?, &p);
    RatFunc::from_rational_polys(&sum, &p)
}

/// Coronal in the form a [`Mode`] compares.
pub fn coronal_in_mode(g: &Graph, mode: &Mode) -> Result<RatFunc> {
    match mode {
        Mode::Symbolic => Ok(coronal(g)?.value().clone()),
        Mode::Fixed(a) => coronal_at(g, a),
    }
}

/// `x -> x - c·α`, as the shift polynomial `-c·α`.
fn alpha_shift(c: usize) -> IntPoly {
    IntPoly::monomial((-(c as i64)).into(), 1)
}

/// `(1 - α)²`.
fn off_diagonal_weight() -> BivarPoly {
    BivarPoly::from_terms(&[(0, 0, 1), (0, 1, -2), (0, 2, 1)])
}

/// Characteristic polynomial of `G₁ ∨ G₂` from data of the two factors:
///
/// `P₁(x - αn₂)·P₂(x - αn₁) - (1-α)²·S₁(x - αn₂)·S₂(x - αn₁)`,
///
/// where `S_i` is the adjugate sum of `xI - A_α(G_i)`. This is the product
/// `P₁P₂(1 - (1-α)²Γ₁Γ₂)` with the coronal denominators cleared.
pub fn join_charpoly(g1: &Graph, g2: &Graph) -> Result<BivarPoly> {
    let (c1, c2) = (coronal(g1)?, coronal(g2)?);
    let (s1, s2) = (alpha_shift(g2.order()), alpha_shift(g1.order()));
    let direct = c1.charpoly().shift_x(&s1) * c2.charpoly().shift_x(&s2);
    let cross = c1.adjugate_sum().shift_x(&s1) * c2.adjugate_sum().shift_x(&s2);
    Ok(direct - off_diagonal_weight() * cross)
}

/// The same polynomial evaluated through reduced coronal fractions.
pub fn join_charpoly_via_coronals(g1: &Graph, g2: &Graph) -> Result<BivarPoly> {
    let (c1, c2) = (coronal(g1)?, coronal(g2)?);
    let (s1, s2) = (alpha_shift(g2.order()), alpha_shift(g1.order()));
    let gamma = c1.value().shift_x(&s1).mul(&c2.value().shift_x(&s2));
    let factor = RatFunc::from_poly(BivarPoly::one()).sub(&gamma.scale_poly(&off_diagonal_weight()));
    let p = c1.charpoly().shift_x(&s1) * c2.charpoly().shift_x(&s2);
    factor.scale_poly(&p).as_poly().ok_or_else(|| Error::InexactDivision("coronal denominators do not cancel".into()))
}

fn regular_cofactor(p: &BivarPoly, shift: &IntPoly, n_other: usize, r: usize) -> Result<BivarPoly> {
    let root = &(&BivarPoly::x() - &BivarPoly::from_terms(&[(0, 1, n_other as i64)])) - &BivarPoly::constant(r as i64);
    p.shift_x(shift)
        .div_exact(&root)
        .ok_or_else(|| Error::InexactDivision(format!("x - {r} does not divide the charpoly of an {r}-regular factor")))
}

fn regular_join(
    n1: usize,
    r1: usize,
    p1: &BivarPoly,
    n2: usize,
    r2: usize,
    p2: &BivarPoly,
    weighted: bool,
) -> Result<BivarPoly> {
    let q1 = regular_cofactor(p1, &alpha_shift(n2), n2, r1)?;
    let q2 = regular_cofactor(p2, &alpha_shift(n1), n1, r2)?;
    let x = BivarPoly::x();
    let l1 = &(&x - &BivarPoly::from_terms(&[(0, 1, n2 as i64)])) - &BivarPoly::constant(r1 as i64);
    let l2 = &(&x - &BivarPoly::from_terms(&[(0, 1, n1 as i64)])) - &BivarPoly::constant(r2 as i64);
    let mut cross = BivarPoly::constant((n1 * n2) as i64);
    if weighted {
        cross = cross * off_diagonal_weight();
    }
    Ok(q1 * q2 * (l1 * l2 - cross))
}

/// Join polynomial of an `r₁`-regular graph on `n₁` vertices with an
/// `r₂`-regular graph on `n₂` vertices, given their characteristic
/// polynomials:
///
/// `P₁(x-αn₂)P₂(x-αn₁) / ((x-αn₂-r₁)(x-αn₁-r₂)) · f(x)` with
/// `f(x) = (x-αn₂-r₁)(x-αn₁-r₂) - (1-α)²n₁n₂`.
pub fn join_charpoly_regular(
    n1: usize,
    r1: usize,
    p1: &BivarPoly,
    n2: usize,
    r2: usize,
    p2: &BivarPoly,
) -> Result<BivarPoly> {
    regular_join(n1, r1, p1, n2, r2, p2, true)
}

/// The same product with the unweighted cross term `f(x) = (x-αn₂-r₁)(x-αn₁-r₂) - n₁n₂`.
/// It agrees with the join polynomial only at `α = 0`; kept as a regression reference.
pub fn join_charpoly_regular_unweighted(
    n1: usize,
    r1: usize,
    p1: &BivarPoly,
    n2: usize,
    r2: usize,
    p2: &BivarPoly,
) -> Result<BivarPoly> {
    regular_join(n1, r1, p1, n2, r2, p2, false)
}

/// Evidence that two non-isomorphic graphs share a characteristic polynomial.
#[derive(Debug, Clone, PartialEq)]
pub struct CospectralCertificate {
    pub left: Graph,
    pub right: Graph,
    pub mode: Mode,
    pub charpoly: ModalCharpoly,
    /// Coronal of the factor joined into `left` (rendered).
    pub coronal_left: String,
    /// Coronal of the factor joined into `right` (rendered).
    pub coronal_right: String,
}

impl CospectralCertificate {
    pub fn to_json(&self) -> Value {
        let mut v = json!({
            "mode": self.mode.name(),
            "left_g6": self.left.to_graph6(),
            "right_g6": self.right.to_graph6(),
            "charpoly": self.charpoly.render(),
            "coronal_left": self.coronal_left,
            "coronal_right": self.coronal_right,
        });
        if let Some(a) = self.mode.alpha() {
            v["alpha"] = json!(a.to_string());
        }
        v
    }

    /// Recomputes both characteristic polynomials by fraction-free
    /// elimination over `Z[x, α]` and checks them against the stored one,
    /// and checks that the two graphs are not isomorphic.
    pub fn verify(&self) -> Result<bool> {
        let bound = self.left.order().max(self.right.order());
        let l = charpoly_exact_bounded(&self.left, bound)?;
        let r = charpoly_exact_bounded(&self.right, bound)?;
        let agrees = match (&self.mode, &self.charpoly) {
            (Mode::Symbolic, ModalCharpoly::Symbolic(p)) => l == *p && r == *p,
            (Mode::Fixed(a), ModalCharpoly::Fixed(p)) => l.eval_alpha(a) == *p && r.eval_alpha(a) == *p,
            _ => false,
        };
        Ok(agrees && !isomorphic(&self.left, &self.right))
    }
}

fn isomorphic(a: &Graph, b: &Graph) -> bool {
    a.order() == b.order() && a.degree_sequence() == b.degree_sequence() && canonical_form(a) == canonical_form(b)
}

fn render_ratfunc_in_mode(f: &RatFunc, mode: &Mode) -> String {
    match mode {
        Mode::Symbolic => f.to_string(),
        Mode::Fixed(_) => {
            let num = f.numerator().eval_alpha(&Rational::zero());
            let den = f.denominator().eval_alpha(&Rational::zero());
            let r = |p: &RatPoly| crate::exactpoly::render_ratpoly(p);
            if den.degree() == Some(0) && den.coeff(0) == Rational::from_integer(1.into()) {
                r(&num)
            } else {
                format!("({}) / ({})", r(&num), r(&den))
            }
        }
    }
}

fn check_pair(a: &Graph, b: &Graph, mode: &Mode) -> Result<(RatFunc, RatFunc)> {
    let ca = coronal_in_mode(a, mode)?;
    if a == b {
        return Ok((ca.clone(), ca));
    }
    let pa = crate::spectra::charpoly_in_mode(a, mode)?;
    let pb = crate::spectra::charpoly_in_mode(b, mode)?;
    if pa != pb {
        return Err(Error::ForgePrecondition(format!(
            "{a} and {b} are not cospectral in {mode} mode: {} vs {}",
            pa.render(),
            pb.render()
        )));
    }
    let cb = coronal_in_mode(b, mode)?;
    if ca != cb {
        return Err(Error::ForgePrecondition(format!(
            "coronals of {a} and {b} differ in {mode} mode: {} vs {}",
            render_ratfunc_in_mode(&ca, mode),
            render_ratfunc_in_mode(&cb, mode)
        )));
    }
    Ok((ca, cb))
}

/// `G ∨ H₁` versus `G ∨ H₂` for cospectral `H₁`, `H₂` with equal coronals.
pub fn forge_cospectral_pair(g: &Graph, h1: &Graph, h2: &Graph, mode: &Mode) -> Result<CospectralCertificate> {
    forge_cospectral_pair_both(g, g, h1, h2, mode)
}

/// `G₁ ∨ H₁` versus `G₂ ∨ H₂`, where each of the pairs `(G₁, G₂)` and
/// `(H₁, H₂)` is cospectral with equal coronals (or identical).
pub fn forge_cospectral_pair_both(
    g1: &Graph,
    g2: &Graph,
    h1: &Graph,
    h2: &Graph,
    mode: &Mode,
) -> Result<CospectralCertificate> {
    if let Mode::Fixed(a) = mode {
        crate::exactpoly::check_alpha(a)?;
    }
    check_pair(g1, g2, mode)?;
    let (ch1, ch2) = check_pair(h1, h2, mode)?;
    let left = graph::join(g1, h1)?;
    let right = graph::join(g2, h2)?;
    if isomorphic(&left, &right) {
        return Err(Error::ForgePrecondition(format!("{left} and {right} are isomorphic")));
    }
    let charpoly = match mode {
        Mode::Symbolic => {
            let pl = join_charpoly(g1, h1)?;
            let pr = join_charpoly(g2, h2)?;
            if pl != pr {
                return Err(Error::ForgePrecondition("joined polynomials differ".into()));
            }
            ModalCharpoly::Symbolic(pl)
        }
        Mode::Fixed(a) => {
            let pl = charpoly_at(&left, a)?;
            if pl != charpoly_at(&right, a)? {
                return Err(Error::ForgePrecondition("joined polynomials differ".into()));
            }
            ModalCharpoly::Fixed(pl)
        }
    };
    Ok(CospectralCertificate {
        left,
        right,
        mode: mode.clone(),
        charpoly,
        coronal_left: render_ratfunc_in_mode(&ch1, mode),
        coronal_right: render_ratfunc_in_mode(&ch2, mode),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::rat;
    use crate::graph::*;
    use crate::spectra::charpoly_exact;

    #[test]
    fn coronal_examples() {
        let k1 = coronal(&empty(1)).unwrap();
        assert_eq!(k1.value().numerator(), &BivarPoly::one());
        assert_eq!(k1.value().denominator(), &BivarPoly::x());
        let k2 = coronal(&complete(2)).unwrap();
        assert_eq!(k2.value().to_string(), "(2) / (x - 1)");
        let c5 = coronal(&cycle(5)).unwrap();
        assert_eq!(c5.value().to_string(), "(5) / (x - 2)");
    }

    #[test]
    fn coronal_at_matches_symbolic() {
        let g = path(4);
        let a = rat(2, 5);
        let fixed = coronal_at(&g, &a).unwrap();
        let sym = coronal(&g).unwrap().value().eval_alpha(&a).unwrap();
        assert_eq!(fixed, sym);
    }

    #[test]
    fn join_matches_direct() {
        for (a, b) in [(empty(1), empty(1)), (empty(1), cycle(4)), (path(3), star(4)), (complete(2), empty(3))] {
            let direct = charpoly_exact(&join(&a, &b).unwrap()).unwrap();
            assert_eq!(join_charpoly(&a, &b).unwrap(), direct);
            assert_eq!(join_charpoly_via_coronals(&a, &b).unwrap(), direct);
        }
    }

    #[test]
    fn regular_formula() {
        let x = BivarPoly::x();
        let k2 = charpoly_exact(&complete(2)).unwrap();
        assert_eq!(join_charpoly_regular(1, 0, &x, 1, 0, &x).unwrap(), k2);
        let bad = join_charpoly_regular_unweighted(1, 0, &x, 1, 0, &x).unwrap();
        assert_ne!(bad.eval_alpha(&rat(1, 2)), k2.eval_alpha(&rat(1, 2)));
        assert_eq!(bad.eval_alpha(&rat(0, 1)), k2.eval_alpha(&rat(0, 1)));
        let c4 = charpoly_exact(&cycle(4)).unwrap();
        assert_eq!(join_charpoly_regular(1, 0, &x, 4, 2, &c4).unwrap(), charpoly_exact(&wheel(5)).unwrap());
        assert!(join_charpoly_regular(1, 1, &x, 4, 2, &c4).is_err());
    }

    #[test]
    fn forge_rejects_identical() {
        let h = cycle(4);
        assert!(matches!(forge_cospectral_pair(&empty(1), &h, &h, &Mode::Symbolic), Err(Error::ForgePrecondition(_))));
        let err = forge_cospectral_pair(&empty(1), &path(4), &star(4), &Mode::Symbolic);
        assert!(matches!(err, Err(Error::ForgePrecondition(_))));
    }

    #[test]
    fn forge_at_alpha_one() {
        // A_1 = D, so equal-degree regular graphs are cospectral there.
        let h1 = cycle(6);
        let h2 = disjoint_union(&[cycle(3), cycle(3)]).unwrap();
        let mode = Mode::Fixed(rat(1, 1));
        let cert = forge_cospectral_pair(&path(2), &h1, &h2, &mode).unwrap();
        assert!(cert.verify().unwrap());
        let j = cert.to_json();
        assert_eq!(j["mode"], "fixed");
        assert_eq!(j["alpha"], "1");
    }
}
