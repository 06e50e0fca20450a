//! The `A_α = αD + (1-α)A` matrix, its exact characteristic polynomials and
//! its numerical spectrum.

use nalgebra::{DMatrix, SymmetricEigen};
use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactpoly::{check_alpha, BivarPoly, IntPoly, RatPoly, Rational};
use crate::graph::Graph;

/// Largest order accepted by the bivariate routines unless a caller asks otherwise.
pub const DEFAULT_EXACT_BOUND: usize = 12;
pub const DEFAULT_TOL: f64 = 1e-10;
/// Eigenvalues closer than this are reported as one cluster.
pub const CLUSTER_TOL: f64 = 1e-8;
const MAX_EIGEN_SWEEPS: usize = 10_000;

/// `A_α(G)` at a fixed rational `α`, stored densely.
#[derive(Debug, Clone, PartialEq)]
pub struct AlphaMatrix {
    n: usize,
    alpha: Rational,
    entries: Vec<Rational>,
}

impl AlphaMatrix {
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn alpha(&self) -> &Rational {
        &self.alpha
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.entries[i * self.n + j]
    }

    pub fn to_f64(&self) -> DMatrix<f64> {
        DMatrix::from_fn(self.n, self.n, |i, j| self.get(i, j).to_f64().unwrap_or(f64::NAN))
    }
}

pub fn a_alpha_matrix(g: &Graph, alpha: &Rational) -> Result<AlphaMatrix> {
    check_alpha(alpha)?;
    let n = g.order();
    let off = Rational::one() - alpha;
    let mut entries = vec![Rational::zero(); n * n];
    for i in 0..n {
        entries[i * n + i] = alpha * Rational::from_integer(g.degree(i).into());
        for j in 0..n {
            if g.has_edge(i, j) {
                entries[i * n + j] = off.clone();
            }
        }
    }
    Ok(AlphaMatrix { n, alpha: alpha.clone(), entries })
}

/// `A_α(G)` with entries as integer polynomials in `α`.
pub fn symbolic_alpha_matrix(g: &Graph) -> Vec<Vec<IntPoly>> {
    let n = g.order();
    let off = IntPoly::new(vec![1.into(), (-1).into()]);
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        IntPoly::monomial(BigInt::from(g.degree(i)), 1)
                    } else if g.has_edge(i, j) {
                        off.clone()
                    } else {
                        IntPoly::new(Vec::new())
                    }
                })
                .collect()
        })
        .collect()
}

/// `xI - A_α(G)` over `Z[x, α]`.
pub fn char_matrix(g: &Graph) -> Vec<Vec<BivarPoly>> {
    symbolic_alpha_matrix(g)
        .into_iter()
        .enumerate()
        .map(|(i, row)| {
            row.into_iter()
                .enumerate()
                .map(|(j, e)| {
                    let e = -BivarPoly::from_alpha_poly(e);
                    if i == j {
                        &BivarPoly::x() + &e
                    } else {
                        e
                    }
                })
                .collect()
        })
        .collect()
}

/// Fraction-free (Bareiss) determinant.
///
/// No pivoting is done: callers pass matrices whose leading principal minors
/// are monic in `x`, which holds for `xI - M` and `xI - M + J`.
pub fn bareiss_det(mut m: Vec<Vec<BivarPoly>>) -> Result<BivarPoly> {
    let n = m.len();
    if n == 0 {
        return Ok(BivarPoly::one());
    }
    let mut prev = BivarPoly::one();
    for k in 0..n - 1 {
        let pivot = m[k][k].clone();
        if pivot.is_zero() {
            return Err(Error::InexactDivision("zero pivot in fraction-free elimination".into()));
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let mut v = &pivot * &m[i][j];
                if !m[i][k].is_zero() && !m[k][j].is_zero() {
                    v = &v - &(&m[i][k] * &m[k][j]);
                }
                m[i][j] = v.div_exact(&prev).ok_or_else(|| Error::InexactDivision("Bareiss step".into()))?;
            }
        }
        prev = pivot;
    }
    Ok(m[n - 1][n - 1].clone())
}

fn check_bound(g: &Graph, bound: usize) -> Result<()> {
    if g.order() > bound {
        Err(Error::SizeBound { n: g.order(), bound })
    } else {
        Ok(())
    }
}

/// `det(xI - A_α(G))` in `Z[x, α]`.
pub fn charpoly_exact(g: &Graph) -> Result<BivarPoly> {
    charpoly_exact_bounded(g, DEFAULT_EXACT_BOUND)
}

pub fn charpoly_exact_bounded(g: &Graph, bound: usize) -> Result<BivarPoly> {
    check_bound(g, bound)?;
    bareiss_det(char_matrix(g))
}

/// Faddeev–LeVerrier over any ring where division by the integers `1..=n`
/// is exact on the coefficients that arise. Returns coefficients of
/// `det(xI - A)`, lowest degree first.
pub fn faddeev_leverrier<T: crate::exactpoly::Ring>(a: &[Vec<T>]) -> Result<Vec<T>> {
    let n = a.len();
    let mut coeffs = vec![T::zero(); n + 1];
    coeffs[n] = T::one();
    let mut m: Vec<Vec<T>> = vec![vec![T::zero(); n]; n];
    for k in 1..=n {
        // M_k = A M_{k-1} + c_{n-k+1} I
        let mut next = mat_mul(a, &m);
        for (i, row) in next.iter_mut().enumerate() {
            row[i] = row[i].add(&coeffs[n - k + 1]);
        }
        m = next;
        let am = mat_mul(a, &m);
        let trace = (0..n).fold(T::zero(), |acc, i| acc.add(&am[i][i]));
        coeffs[n - k] = trace
            .neg()
            .div_exact(&T::from_i64(k as i64))
            .ok_or_else(|| Error::InexactDivision(format!("trace not divisible by {k}")))?;
    }
    Ok(coeffs)
}

fn mat_mul<T: crate::exactpoly::Ring>(a: &[Vec<T>], b: &[Vec<T>]) -> Vec<Vec<T>> {
    let n = a.len();
    let mut out = vec![vec![T::zero(); n]; n];
    for i in 0..n {
        for k in 0..n {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..n {
                if !b[k][j].is_zero() {
                    out[i][j] = out[i][j].add(&a[i][k].mul(&b[k][j]));
                }
            }
        }
    }
    out
}

/// Second route to the bivariate polynomial: Faddeev–LeVerrier over `Z[α]`.
pub fn charpoly_exact_leverrier(g: &Graph) -> Result<BivarPoly> {
    let c = faddeev_leverrier(&symbolic_alpha_matrix(g))?;
    Ok(BivarPoly::from_x_rows(c))
}

/// The integer matrix `q·A_α` for `α = p/q` in lowest terms.
fn scaled_integer_matrix(g: &Graph, alpha: &Rational) -> (Vec<Vec<i128>>, i128) {
    let p = alpha.numer().to_i128().expect("alpha numerator fits i128");
    let q = alpha.denom().to_i128().expect("alpha denominator fits i128");
    let n = g.order();
    let m = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        p * g.degree(i) as i128
                    } else if g.has_edge(i, j) {
                        q - p
                    } else {
                        0
                    }
                })
                .collect()
        })
        .collect();
    (m, q)
}

fn leverrier_i128(a: &[Vec<i128>]) -> Option<Vec<i128>> {
    let n = a.len();
    let mul = |x: &[Vec<i128>], y: &[Vec<i128>]| -> Option<Vec<Vec<i128>>> {
        let mut out = vec![vec![0i128; n]; n];
        for i in 0..n {
            for k in 0..n {
                let xik = x[i][k];
                if xik == 0 {
                    continue;
                }
                for j in 0..n {
                    out[i][j] = out[i][j].checked_add(xik.checked_mul(y[k][j])?)?;
                }
            }
        }
        Some(out)
    };
    let mut coeffs = vec![0i128; n + 1];
    coeffs[n] = 1;
    let mut m = vec![vec![0i128; n]; n];
    for k in 1..=n {
        let mut next = mul(a, &m)?;
        for (i, row) in next.iter_mut().enumerate() {
            row[i] = row[i].checked_add(coeffs[n - k + 1])?;
        }
        m = next;
        let mut trace = 0i128;
        for i in 0..n {
            for j in 0..n {
                trace = trace.checked_add(a[i][j].checked_mul(m[j][i])?)?;
            }
        }
        debug_assert_eq!(trace % k as i128, 0);
        coeffs[n - k] = -trace / k as i128;
    }
    Some(coeffs)
}

/// Characteristic polynomial of `q·A_α` (integer coefficients, lowest degree
/// first) together with `q`. At fixed `α` this is an injective encoding of the
/// `A_α`-characteristic polynomial.
pub fn scaled_integer_charpoly(g: &Graph, alpha: &Rational) -> Result<(Vec<BigInt>, BigInt)> {
    check_alpha(alpha)?;
    let (m, q) = scaled_integer_matrix(g, alpha);
    Ok((integer_charpoly(&m)?, BigInt::from(q)))
}

fn integer_charpoly(m: &[Vec<i128>]) -> Result<Vec<BigInt>> {
    match leverrier_i128(m) {
        Some(c) => Ok(c.into_iter().map(BigInt::from).collect()),
        None => {
            let big: Vec<Vec<BigInt>> = m.iter().map(|r| r.iter().map(|&v| BigInt::from(v)).collect()).collect();
            faddeev_leverrier(&big)
        }
    }
}

/// Rescales `det(yI - qM)` to `det(xI - M)`: the coefficient of `x^k` is divided by `q^(n-k)`.
fn unscale(b: &[BigInt], q: &BigInt) -> RatPoly {
    let n = b.len() - 1;
    let mut qpow = BigInt::one();
    let mut out = vec![Rational::zero(); n + 1];
    for k in (0..=n).rev() {
        out[k] = Rational::new(b[k].clone(), qpow.clone());
        qpow *= q;
    }
    RatPoly::new(out)
}

/// `det(xI - A_α(G))` at a fixed rational `α`.
pub fn charpoly_at(g: &Graph, alpha: &Rational) -> Result<RatPoly> {
    let (b, q) = scaled_integer_charpoly(g, alpha)?;
    Ok(unscale(&b, &q))
}

/// `det(xI - A_α(G) + J)` at a fixed rational `α`, where `J` is the all-ones matrix.
pub fn charpoly_minus_ones_at(g: &Graph, alpha: &Rational) -> Result<RatPoly> {
    check_alpha(alpha)?;
    let (mut m, q) = scaled_integer_matrix(g, alpha);
    for row in m.iter_mut() {
        for v in row.iter_mut() {
            *v -= q;
        }
    }
    Ok(unscale(&integer_charpoly(&m)?, &BigInt::from(q)))
}

/// How cospectrality is decided: as equal bivariate polynomials (every `α`
/// at once) or at one fixed rational `α`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Mode {
    Symbolic,
    Fixed(Rational),
}

impl Mode {
    pub fn fixed(alpha: Rational) -> Result<Mode> {
        check_alpha(&alpha)?;
        Ok(Mode::Fixed(alpha))
    }

    pub fn name(&self) -> &'static str {
        match self {
            Mode::Symbolic => "symbolic",
            Mode::Fixed(_) => "fixed",
        }
    }

    pub fn alpha(&self) -> Option<&Rational> {
        match self {
            Mode::Symbolic => None,
            Mode::Fixed(a) => Some(a),
        }
    }
}

impl std::fmt::Display for Mode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Mode::Symbolic => f.write_str("symbolic"),
            Mode::Fixed(a) => write!(f, "fixed({a})"),
        }
    }
}

/// A characteristic polynomial in the form a [`Mode`] compares.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ModalCharpoly {
    Symbolic(BivarPoly),
    Fixed(RatPoly),
}

impl ModalCharpoly {
    pub fn render(&self) -> String {
        match self {
            ModalCharpoly::Symbolic(p) => p.to_string(),
            ModalCharpoly::Fixed(p) => crate::exactpoly::render_ratpoly(p),
        }
    }
}

/// Symbolic mode honours [`DEFAULT_EXACT_BOUND`]; fixed mode has no size bound.
pub fn charpoly_in_mode(g: &Graph, mode: &Mode) -> Result<ModalCharpoly> {
    match mode {
        Mode::Symbolic => charpoly_exact(g).map(ModalCharpoly::Symbolic),
        Mode::Fixed(a) => charpoly_at(g, a).map(ModalCharpoly::Fixed),
    }
}

// ---------------------------------------------------------------------------
// numerical spectrum

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Cluster {
    pub value: f64,
    pub multiplicity: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SpectrumReport {
    pub alpha: String,
    /// Non-increasing.
    pub eigenvalues: Vec<f64>,
    pub clusters: Vec<Cluster>,
}

impl SpectrumReport {
    pub fn largest(&self) -> f64 {
        self.eigenvalues[0]
    }
}

/// Sorted eigenvalues (non-increasing) of a symmetric matrix.
pub fn symmetric_eigenvalues(m: DMatrix<f64>, tol: f64) -> Result<Vec<f64>> {
    let eps = tol.min(f64::EPSILON);
    let eig = SymmetricEigen::try_new(m, eps, MAX_EIGEN_SWEEPS).ok_or(Error::NonConvergence(MAX_EIGEN_SWEEPS))?;
    let mut vals: Vec<f64> = eig.eigenvalues.iter().copied().collect();
    vals.sort_by(|a, b| b.total_cmp(a));
    Ok(vals)
}

pub fn alpha_matrix_f64(g: &Graph, alpha: f64) -> DMatrix<f64> {
    let n = g.order();
    DMatrix::from_fn(n, n, |i, j| {
        if i == j {
            alpha * g.degree(i) as f64
        } else if g.has_edge(i, j) {
            1.0 - alpha
        } else {
            0.0
        }
    })
}

pub fn eigenvalues(g: &Graph, alpha: f64, tol: f64) -> Result<SpectrumReport> {
    if !(0.0..=1.0).contains(&alpha) {
        return Err(Error::AlphaOutOfRange(alpha.to_string()));
    }
    let vals = symmetric_eigenvalues(alpha_matrix_f64(g, alpha), tol)?;
    let clusters = cluster(&vals, CLUSTER_TOL);
    Ok(SpectrumReport { alpha: alpha.to_string(), eigenvalues: vals, clusters })
}

/// Same as [`eigenvalues`] but labels the report with the exact `α`.
pub fn eigenvalues_exact_alpha(g: &Graph, alpha: &Rational, tol: f64) -> Result<SpectrumReport> {
    check_alpha(alpha)?;
    let mut r = eigenvalues(g, alpha.to_f64().unwrap_or(f64::NAN), tol)?;
    r.alpha = alpha.to_string();
    Ok(r)
}

/// Groups a non-increasing list into runs whose consecutive gaps are at most `tol`.
pub fn cluster(sorted_desc: &[f64], tol: f64) -> Vec<Cluster> {
    let mut out: Vec<(f64, usize)> = Vec::new();
    let mut last = f64::NAN;
    for &v in sorted_desc {
        match out.last_mut() {
            Some((sum, k)) if (last - v).abs() <= tol => {
                *sum += v;
                *k += 1;
            }
            _ => out.push((v, 1)),
        }
        last = v;
    }
    out.into_iter().map(|(sum, k)| Cluster { value: sum / k as f64, multiplicity: k }).collect()
}

/// Multiplicities of the distinct roots, from the square-free decomposition,
/// sorted non-increasing.
pub fn exact_multiplicities(p: &RatPoly) -> Vec<usize> {
    let mut out: Vec<usize> = p
        .squarefree_decomposition()
        .into_iter()
        .flat_map(|(k, f)| std::iter::repeat_n(k, f.degree().unwrap_or(0)))
        .collect();
    out.sort_unstable_by(|a, b| b.cmp(a));
    out
}

// ---------------------------------------------------------------------------
// invariants recoverable from the spectrum

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InvariantReport {
    pub n: usize,
    pub m: usize,
    /// `Σ d_i²`; unavailable at `α = 0`.
    pub sum_sq_degrees: Option<u64>,
    /// `Σ_{i<j} d_i d_j`; unavailable at `α = 0`.
    pub sum_pair_products: Option<u64>,
    pub regular_r: Option<usize>,
}

impl InvariantReport {
    /// Direct computation from the graph, for comparison.
    pub fn of_graph(g: &Graph) -> InvariantReport {
        let d = g.degrees();
        let m = g.edge_count();
        let sq: u64 = d.iter().map(|&x| (x * x) as u64).sum();
        let pairs = ((2 * m as u64).pow(2) - sq) / 2;
        InvariantReport {
            n: g.order(),
            m,
            sum_sq_degrees: Some(sq),
            sum_pair_products: Some(pairs),
            regular_r: g.is_regular(),
        }
    }
}

fn to_nonneg_integer(r: &Rational, what: &str) -> Result<u64> {
    if !r.is_integer() || r.is_negative() {
        return Err(Error::NotCharpoly(format!("{what} = {r} is not a non-negative integer")));
    }
    r.to_integer().to_u64().ok_or_else(|| Error::NotCharpoly(format!("{what} too large")))
}

/// Reads `n`, `m` and the degree moments off a fixed-`α` characteristic polynomial.
///
/// With `p = x^n + a_1 x^{n-1} + a_2 x^{n-2} + ...`: `a_1 = -2αm`, and for `α > 0`
/// `Σ_{i<j} d_i d_j = (a_2 + (1-α)² m) / α²`. At `α = 0` the trace vanishes and
/// `m = -a_2`; the degree moments are then not determined.
pub fn invariants_from_charpoly(p: &RatPoly, alpha: &Rational) -> Result<InvariantReport> {
    check_alpha(alpha)?;
    let n = p.degree().ok_or_else(|| Error::NotCharpoly("zero polynomial".into()))?;
    if !p.lead().is_some_and(|l| l.is_one()) {
        return Err(Error::NotCharpoly("not monic".into()));
    }
    let a1 = if n >= 1 { p.coeff(n - 1) } else { Rational::zero() };
    let a2 = if n >= 2 { p.coeff(n - 2) } else { Rational::zero() };
    let one = Rational::one();
    let (m, moments) = if alpha.is_zero() {
        if !a1.is_zero() {
            return Err(Error::NotCharpoly("non-zero trace at alpha = 0".into()));
        }
        (to_nonneg_integer(&-a2.clone(), "m")?, None)
    } else {
        let two = Rational::from_integer(2.into());
        let m = to_nonneg_integer(&(-a1.clone() / (two * alpha)), "m")?;
        let mr = Rational::from_integer(m.into());
        let off = &one - alpha;
        let pairs = (a2.clone() + &off * &off * &mr) / (alpha * alpha);
        let pairs = to_nonneg_integer(&pairs, "sum of degree pair products")?;
        let total = (2 * m).pow(2);
        let sq =
            total.checked_sub(2 * pairs).ok_or_else(|| Error::NotCharpoly("negative sum of squared degrees".into()))?;
        (m, Some((sq, pairs)))
    };
    Ok(InvariantReport {
        n,
        m: m as usize,
        sum_sq_degrees: moments.map(|(s, _)| s),
        sum_pair_products: moments.map(|(_, p)| p),
        regular_r: regularity_from_spectrum(p, alpha),
    })
}

/// `Some(r)` iff the polynomial certifies that every graph with it is `r`-regular.
///
/// The largest eigenvalue of `A_α` is at least the average row sum `2m/n`,
/// with equality exactly for regular graphs when `α < 1`. So `r = 2m/n` must be
/// an integer, a root, and no root may exceed it. At `α = 1` the spectrum is
/// the degree multiset, so `r` must be a root of multiplicity `n`.
pub fn regularity_from_spectrum(p: &RatPoly, alpha: &Rational) -> Option<usize> {
    let n = p.degree()?;
    if n == 0 {
        return None;
    }
    // average row sum = trace-free reading of the edge count
    let sum_row = if alpha.is_zero() {
        -p.coeff(n.checked_sub(2)?) * Rational::from_integer(2.into())
    } else {
        -p.coeff(n - 1) / alpha
    };
    let r = sum_row / Rational::from_integer(BigInt::from(n));
    if !r.is_integer() || r.is_negative() {
        return None;
    }
    let mult = p.root_multiplicity(&r);
    let ok = if alpha.is_one() { mult == n } else { mult >= 1 && p.count_roots_above(&r) == 0 };
    ok.then(|| r.to_integer().to_usize()).flatten()
}
