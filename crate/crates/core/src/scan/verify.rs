//! Verification suites: spectral determination of graph families, the
//! numeric eigenvalue comparisons behind them, and exact degree counts.

use std::time::Instant;

use num_traits::{ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use serde::Serialize;

use super::{cospectral_partition, enumerate_graphs, find_mates_in};
use crate::error::{Error, Result};
use crate::exactpoly::{rat, Rational};
use crate::graph::{self, complete, cycle, disjoint_union, empty, path, star, DegreeSequence, Graph};
use crate::joins::{forge_cospectral_pair, join_charpoly, join_charpoly_regular, join_charpoly_regular_unweighted};
use crate::spectra::{charpoly_at, charpoly_exact, eigenvalues, Mode, DEFAULT_TOL};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// A machine-checkable witness: the graph(s) involved, the `α` and what failed.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Counterexample {
    pub left: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub right: Option<String>,
    pub alpha: String,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SuiteParameters {
    pub n_min: usize,
    pub n_max: usize,
    pub alphas: Vec<String>,
    pub mode: String,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub suite: String,
    pub parameters: SuiteParameters,
    pub status: Status,
    pub checks: usize,
    pub counterexamples: Vec<Counterexample>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u64>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    /// Folds several reports into one: checks add up, counterexamples and
    /// notes are concatenated, the range covers all parts.
    pub fn combine(suite: &str, parts: Vec<VerificationReport>) -> VerificationReport {
        let mut alphas: Vec<String> = Vec::new();
        let mut notes = Vec::new();
        let mut out = VerificationReport {
            suite: suite.into(),
            parameters: SuiteParameters {
                n_min: usize::MAX,
                n_max: 0,
                alphas: Vec::new(),
                mode: String::new(),
                notes: Vec::new(),
            },
            status: Status::Pass,
            checks: 0,
            counterexamples: Vec::new(),
            timing_ms: None,
        };
        for p in parts {
            out.parameters.n_min = out.parameters.n_min.min(p.parameters.n_min);
            out.parameters.n_max = out.parameters.n_max.max(p.parameters.n_max);
            for a in p.parameters.alphas {
                if !alphas.contains(&a) {
                    alphas.push(a);
                }
            }
            if out.parameters.mode.is_empty() {
                out.parameters.mode = p.parameters.mode.clone();
            } else if out.parameters.mode != p.parameters.mode {
                out.parameters.mode = "mixed".into();
            }
            notes.push(format!("{}: {} checks, {:?}", p.suite, p.checks, p.status).to_lowercase());
            notes.extend(p.parameters.notes.into_iter().map(|n| format!("{}: {n}", p.suite)));
            out.checks += p.checks;
            out.counterexamples.extend(p.counterexamples);
            out.timing_ms = match (out.timing_ms, p.timing_ms) {
                (None, None) => None,
                (a, b) => Some(a.unwrap_or(0) + b.unwrap_or(0)),
            };
        }
        if out.parameters.n_min == usize::MAX {
            out.parameters.n_min = 0;
        }
        out.parameters.alphas = alphas;
        out.parameters.notes = notes;
        out.status = if out.counterexamples.is_empty() { Status::Pass } else { Status::Fail };
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("report serializes")
    }
}

struct Recorder {
    suite: String,
    parameters: SuiteParameters,
    checks: usize,
    counterexamples: Vec<Counterexample>,
    started: Instant,
}

impl Recorder {
    fn new(suite: &str, n_min: usize, n_max: usize, alphas: &[Rational], mode: &str) -> Self {
        Recorder {
            suite: suite.into(),
            parameters: SuiteParameters {
                n_min,
                n_max,
                alphas: alphas.iter().map(|a| a.to_string()).collect(),
                mode: mode.into(),
                notes: Vec::new(),
            },
            checks: 0,
            counterexamples: Vec::new(),
            started: Instant::now(),
        }
    }

    fn note(&mut self, text: impl Into<String>) {
        self.parameters.notes.push(text.into());
    }

    fn check(&mut self, ok: bool, witness: impl FnOnce() -> Counterexample) {
        self.checks += 1;
        if !ok {
            self.counterexamples.push(witness());
        }
    }

    fn finish(self, timing: bool) -> VerificationReport {
        VerificationReport {
            status: if self.counterexamples.is_empty() { Status::Pass } else { Status::Fail },
            suite: self.suite,
            parameters: self.parameters,
            checks: self.checks,
            counterexamples: self.counterexamples,
            timing_ms: timing.then(|| self.started.elapsed().as_millis() as u64),
        }
    }
}

fn cx(left: &Graph, right: Option<&Graph>, alpha: &Rational, detail: String) -> Counterexample {
    Counterexample { left: left.to_graph6(), right: right.map(Graph::to_graph6), alpha: alpha.to_string(), detail }
}

fn to_f64(a: &Rational) -> f64 {
    a.to_f64().unwrap_or(f64::NAN)
}

fn lambda1(g: &Graph, alpha: &Rational) -> Result<f64> {
    Ok(eigenvalues(g, to_f64(alpha), DEFAULT_TOL)?.largest())
}

/// Shared options for the suites.
#[derive(Debug, Clone, PartialEq)]
pub struct SuiteOptions {
    pub n_min: usize,
    pub n_max: usize,
    pub alphas: Vec<Rational>,
    /// Equalities must hold within `tol`; strict inequalities need a margin above it.
    pub tol: f64,
    pub timing: bool,
}

impl SuiteOptions {
    pub fn new(n_min: usize, n_max: usize, alphas: Vec<Rational>) -> Self {
        SuiteOptions { n_min, n_max, alphas, tol: 1e-9, timing: false }
    }
}

// ---------------------------------------------------------------------------
// families claimed to be determined by their spectrum

/// Graph families for [`verify_ds`]. Each yields every member on `n` vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DsFamily {
    Path,
    Complete,
    Star,
    CycleUnions,
    CycleUnionComplements,
    MatchingPlusIsolates,
    MatchingComplements,
    PathComplement,
    Wheel,
    Friendship,
    CompleteSplit,
    CliqueJoinPath,
}

impl DsFamily {
    pub const ALL: [DsFamily; 12] = [
        DsFamily::Path,
        DsFamily::Complete,
        DsFamily::Star,
        DsFamily::CycleUnions,
        DsFamily::CycleUnionComplements,
        DsFamily::MatchingPlusIsolates,
        DsFamily::MatchingComplements,
        DsFamily::PathComplement,
        DsFamily::Wheel,
        DsFamily::Friendship,
        DsFamily::CompleteSplit,
        DsFamily::CliqueJoinPath,
    ];

    pub fn name(self) -> &'static str {
        match self {
            DsFamily::Path => "path",
            DsFamily::Complete => "complete",
            DsFamily::Star => "star",
            DsFamily::CycleUnions => "cycle-unions",
            DsFamily::CycleUnionComplements => "cycle-union-complements",
            DsFamily::MatchingPlusIsolates => "matching",
            DsFamily::MatchingComplements => "matching-complements",
            DsFamily::PathComplement => "path-complement",
            DsFamily::Wheel => "wheel",
            DsFamily::Friendship => "friendship",
            DsFamily::CompleteSplit => "complete-split",
            DsFamily::CliqueJoinPath => "clique-path",
        }
    }

    pub fn parse(name: &str) -> Result<DsFamily> {
        DsFamily::ALL.into_iter().find(|f| f.name() == name).ok_or_else(|| Error::UnknownFamily(name.into()))
    }

    /// Members on exactly `n` vertices, with a short label each.
    pub fn members(self, n: usize) -> Vec<(String, Graph)> {
        let mut out = Vec::new();
        match self {
            DsFamily::Path => out.push((format!("P{n}"), path(n))),
            DsFamily::Complete => out.push((format!("K{n}"), complete(n))),
            DsFamily::Star if n >= 2 => out.push((format!("K1,{}", n - 1), star(n))),
            DsFamily::CycleUnions | DsFamily::CycleUnionComplements => {
                for parts in cycle_partitions(n, 3) {
                    let g = disjoint_union(&parts.iter().map(|&k| cycle(k)).collect::<Vec<_>>()).expect("within limit");
                    let label = parts.iter().map(|k| format!("C{k}")).collect::<Vec<_>>().join("+");
                    if self == DsFamily::CycleUnions {
                        out.push((label, g));
                    } else {
                        out.push((format!("co({label})"), g.complement()));
                    }
                }
            }
            DsFamily::MatchingPlusIsolates | DsFamily::MatchingComplements => {
                for k in 0..=n / 2 {
                    let g = graph::matching_plus_isolates(n, k);
                    let label = format!("{k}K2+{}K1", n - 2 * k);
                    if self == DsFamily::MatchingPlusIsolates {
                        out.push((label, g));
                    } else {
                        out.push((format!("co({label})"), g.complement()));
                    }
                }
            }
            DsFamily::PathComplement => out.push((format!("co(P{n})"), path(n).complement())),
            DsFamily::Wheel if n >= 4 => out.push((format!("W{n}"), graph::wheel(n))),
            DsFamily::Friendship if n >= 3 && n % 2 == 1 => out.push((format!("F{}", n / 2), graph::friendship(n / 2))),
            DsFamily::CompleteSplit => {
                for m in 1..n {
                    out.push((format!("CS({m},{})", n - m), graph::complete_split(m, n - m)));
                }
            }
            DsFamily::CliqueJoinPath => {
                for m in 1..n {
                    let g = graph::join(&complete(m), &path(n - m)).expect("within limit");
                    out.push((format!("K{m}vP{}", n - m), g));
                }
            }
            _ => {}
        }
        out
    }
}

/// Non-increasing partitions of `n` into parts of size at least `min`.
fn cycle_partitions(n: usize, min: usize) -> Vec<Vec<usize>> {
    fn rec(rest: usize, max: usize, min: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        for k in (min..=max.min(rest)).rev() {
            cur.push(k);
            rec(rest - k, k, min, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if n >= min {
        rec(n, n, min, &mut Vec::new(), &mut out);
    }
    out
}

/// Every member of `family` on `n_min..=n_max` vertices must have no
/// cospectral mate at any of the `modes`.
pub fn verify_ds(family: DsFamily, opts: &SuiteOptions, modes: &[Mode]) -> Result<VerificationReport> {
    let alphas: Vec<Rational> = modes.iter().filter_map(|m| m.alpha().cloned()).collect();
    let mode_name = if modes.contains(&Mode::Symbolic) { "symbolic" } else { "fixed" };
    let mut rec = Recorder::new(&format!("ds:{}", family.name()), opts.n_min, opts.n_max, &alphas, mode_name);
    for n in opts.n_min..=opts.n_max {
        let members = family.members(n);
        if members.is_empty() {
            continue;
        }
        let all = enumerate_graphs(n)?;
        for (label, g) in &members {
            for mode in modes {
                let mates = find_mates_in(g, &all, mode)?;
                let alpha = mode.alpha().cloned().unwrap_or_else(Rational::zero);
                rec.checks += 1;
                for h in mates {
                    rec.counterexamples.push(cx(
                        g,
                        Some(&h),
                        &alpha,
                        format!("{label} has a cospectral mate in {mode} mode"),
                    ));
                }
            }
        }
    }
    Ok(rec.finish(opts.timing))
}

// ---------------------------------------------------------------------------
// largest-eigenvalue comparisons

fn random_graph(n: usize, seed: u64) -> Graph {
    let mut rng = rand::rngs::StdRng::seed_from_u64(seed);
    let edges: Vec<(usize, usize)> =
        (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).filter(|_| rng.gen_bool(0.5)).collect();
    Graph::from_edges(n, &edges).expect("valid random graph")
}

/// Fixed choices of the free part `H`, plus two seeded random graphs.
fn free_parts(h: usize, seed: u64) -> Vec<(String, Graph)> {
    if h == 0 {
        return vec![(String::new(), Graph::empty(1).expect("one vertex"))];
    }
    let mut out = vec![(format!("E{h}"), empty(h)), (format!("P{h}"), path(h)), (format!("K{h}"), complete(h))];
    if h >= 3 {
        out.push((format!("K1,{}", h - 1), star(h)));
    }
    if h >= 2 {
        for s in 0..2 {
            out.push((format!("R{h}.{s}"), random_graph(h, seed * 31 + s)));
        }
    }
    out
}

fn union_with(parts: Vec<Graph>, h: Option<&Graph>) -> Graph {
    let mut parts = parts;
    if let Some(h) = h {
        parts.push(h.clone());
    }
    disjoint_union(&parts).expect("within limit")
}

/// `λ₁` of the complement of `C_{n₁} ∪ C_{n₂} ∪ H` equals `λ₁` of the
/// complement of `C_{n₁+n₂} ∪ H`.
pub fn verify_cycle_merge(opts: &SuiteOptions) -> Result<VerificationReport> {
    let mut rec = Recorder::new("cycle-merge", opts.n_min, opts.n_max, &opts.alphas, "numeric");
    rec.note("H ranges over E_h, P_h, K_h, K_{1,h-1} and two seeded random graphs of order h = n - n1 - n2");
    for n in opts.n_min..=opts.n_max {
        for n1 in 3..=n {
            for n2 in n1..=n - n1 {
                if n2 < 3 {
                    continue;
                }
                let h = n - n1 - n2;
                for (label, hg) in free_parts(h, (n * 100 + n1 * 10 + n2) as u64) {
                    let hg = (h > 0).then_some(&hg);
                    let g = union_with(vec![cycle(n1), cycle(n2)], hg).complement();
                    let g2 = union_with(vec![cycle(n1 + n2)], hg).complement();
                    for a in &opts.alphas {
                        let (l, r) = (lambda1(&g, a)?, lambda1(&g2, a)?);
                        rec.check((l - r).abs() <= opts.tol, || {
                            cx(&g, Some(&g2), a, format!("C{n1}+C{n2}+{label}: |{l} - {r}| > {}", opts.tol))
                        });
                    }
                }
            }
        }
    }
    Ok(rec.finish(opts.timing))
}

/// Decides `λ₁(hi) > λ₁(lo)` exactly when the floating-point gap is too small
/// to trust: a rational `t` between the two estimates must have a root of
/// `hi` above it and none of `lo`.
fn exact_order(hi: &Graph, l_hi: f64, lo: &Graph, l_lo: f64, alpha: &Rational) -> Result<String> {
    let Some(t) = Rational::from_float((l_hi + l_lo) / 2.0) else {
        return Ok("order not certified".into());
    };
    let above_hi = charpoly_at(hi, alpha)?.count_roots_above(&t);
    let above_lo = charpoly_at(lo, alpha)?.count_roots_above(&t);
    Ok(match (above_hi, above_lo) {
        (1.., 0) => "strict order certified exactly".into(),
        (0, 1..) => "reverse order certified exactly".into(),
        _ => "order not certified".into(),
    })
}

/// Complement of `P_k ∪ C_{n-k}` versus the complement of `P_n`,
/// `2 ≤ k ≤ n - 3`: `λ₁` is smaller for even `k` and larger for odd `k`.
pub fn verify_path_cycle_split(opts: &SuiteOptions) -> Result<VerificationReport> {
    let mut rec = Recorder::new("path-cycle-split", opts.n_min, opts.n_max, &opts.alphas, "numeric");
    for n in opts.n_min..=opts.n_max {
        let base = path(n).complement();
        for k in 2..=n.saturating_sub(3) {
            let g = disjoint_union(&[path(k), cycle(n - k)])?.complement();
            for a in &opts.alphas {
                let (lp, lg) = (lambda1(&base, a)?, lambda1(&g, a)?);
                let gap = if k % 2 == 0 { lp - lg } else { lg - lp };
                let order = if gap > opts.tol {
                    String::new()
                } else if k % 2 == 0 {
                    exact_order(&base, lp, &g, lg, a)?
                } else {
                    exact_order(&g, lg, &base, lp, a)?
                };
                rec.check(gap > opts.tol, || {
                    cx(&base, Some(&g), a, format!("k = {k}: expected margin > {}, got {gap:e}; {order}", opts.tol))
                });
            }
        }
    }
    Ok(rec.finish(opts.timing))
}

/// Outcome of the exact test at `t = αn - 1` for one graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DominatingCertificate {
    /// Vertices of degree `n - 1`.
    pub dominating: usize,
    /// Eigenvalues strictly above `t`.
    pub above: usize,
    /// Multiplicity of `t` as an eigenvalue.
    pub multiplicity: usize,
}

impl DominatingCertificate {
    /// Indices `k ≥ 2` with `λ_k = αn - 1` (1-based, non-increasing order).
    pub fn indices(&self) -> Vec<usize> {
        (self.above + 1..=self.above + self.multiplicity).filter(|&k| k >= 2).collect()
    }

    /// `λ_k = αn - 1` holds for `k ≥ 2` exactly when the graph has at least
    /// `k` vertices of degree `n - 1`, i.e. the indices are `2..=dominating`.
    pub fn consistent(&self) -> bool {
        self.indices() == (2..=self.dominating).collect::<Vec<_>>()
    }
}

/// Exact certificate at `t = αn - 1`: multiplicity by repeated division,
/// eigenvalues above `t` by Sturm sequences.
pub fn dominating_certificate(g: &Graph, alpha: &Rational) -> Result<DominatingCertificate> {
    let n = g.order();
    let t = alpha * Rational::from_integer(n.into()) - Rational::from_integer(1.into());
    let p = charpoly_at(g, alpha)?;
    Ok(DominatingCertificate {
        dominating: g.dominating_vertex_count(),
        above: p.count_roots_above(&t),
        multiplicity: p.root_multiplicity(&t),
    })
}

/// For every graph on `n_min..=n_max` vertices: `λ_k = αn - 1` (`k ≥ 2`)
/// iff at least `k` vertices have degree `n - 1`. Certified exactly; the
/// floating-point spectrum must agree with the exact counts at margin `1e-6`.
pub fn verify_dominating(opts: &SuiteOptions) -> Result<VerificationReport> {
    const MARGIN: f64 = 1e-6;
    let mut rec = Recorder::new("dominating", opts.n_min, opts.n_max, &opts.alphas, "exact");
    rec.note(
        "equality certified by exact root multiplicity and Sturm counts; numeric spectrum cross-checked at margin 1e-6",
    );
    for n in opts.n_min..=opts.n_max {
        for g in enumerate_graphs(n)? {
            for a in &opts.alphas {
                let cert = dominating_certificate(&g, a)?;
                let t = to_f64(a) * n as f64 - 1.0;
                let spec = eigenvalues(&g, to_f64(a), DEFAULT_TOL)?.eigenvalues;
                let num_above = spec.iter().filter(|&&l| l > t + MARGIN).count();
                let num_at = spec.iter().filter(|&&l| (l - t).abs() <= MARGIN).count();
                let agrees = num_above == cert.above && num_at == cert.multiplicity;
                rec.check(cert.consistent() && agrees, || {
                    cx(
                        &g,
                        None,
                        a,
                        format!(
                            "dominating = {}, exact indices {:?}, numeric above/at = {num_above}/{num_at}",
                            cert.dominating,
                            cert.indices()
                        ),
                    )
                });
            }
        }
    }
    Ok(rec.finish(opts.timing))
}

/// `λ₁(K_m ∨ (C_{n₁} ∪ C_{n₂} ∪ H))` equals `λ₁(K_m ∨ (C_{n₁+n₂} ∪ H))`.
pub fn verify_clique_cycle_merge(opts: &SuiteOptions, m_values: &[usize]) -> Result<VerificationReport> {
    let mut rec = Recorder::new("clique-cycle-merge", opts.n_min, opts.n_max, &opts.alphas, "numeric");
    rec.note(format!(
        "m in {m_values:?}; the free part ranges over E_h, P_h, K_h, K_{{1,h-1}} and two seeded random graphs"
    ));
    for &m in m_values {
        for n in opts.n_min..=opts.n_max {
            for n1 in 3..=n {
                for n2 in n1..=n - n1 {
                    if n2 < 3 {
                        continue;
                    }
                    let h = n - n1 - n2;
                    for (label, hg) in free_parts(h, (m * 1000 + n * 100 + n1 * 10 + n2) as u64) {
                        let hg = (h > 0).then_some(&hg);
                        let left = graph::join(&complete(m), &union_with(vec![cycle(n1), cycle(n2)], hg))?;
                        let right = graph::join(&complete(m), &union_with(vec![cycle(n1 + n2)], hg))?;
                        for a in &opts.alphas {
                            let (l, r) = (lambda1(&left, a)?, lambda1(&right, a)?);
                            rec.check((l - r).abs() <= opts.tol, || {
                                cx(&left, Some(&right), a, format!("C{n1}+C{n2}+{label}: |{l} - {r}| > {}", opts.tol))
                            });
                        }
                    }
                }
            }
        }
    }
    Ok(rec.finish(opts.timing))
}

/// `λ₁(K_m ∨ (C_k ∪ P_{n-k})) > λ₁(K_m ∨ P_n)` for `3 ≤ k ≤ n - 1`.
pub fn verify_clique_path_extremal(opts: &SuiteOptions, m_values: &[usize]) -> Result<VerificationReport> {
    let mut rec = Recorder::new("clique-path-extremal", opts.n_min, opts.n_max, &opts.alphas, "numeric");
    rec.note(format!("m in {m_values:?}"));
    for &m in m_values {
        for n in opts.n_min..=opts.n_max {
            let base = graph::join(&complete(m), &path(n))?;
            for k in 3..n {
                let h = disjoint_union(&[cycle(k), path(n - k)])?;
                let g = graph::join(&complete(m), &h)?;
                for a in &opts.alphas {
                    let gap = lambda1(&g, a)? - lambda1(&base, a)?;
                    rec.check(gap > opts.tol, || cx(&g, Some(&base), a, format!("m = {m}, k = {k}: margin {gap:e}")));
                }
            }
        }
    }
    Ok(rec.finish(opts.timing))
}

/// `K_m ∨ P_n` has no cospectral mate: both eigenvalue comparisons for
/// `m ∈ m_values`, and an exhaustive mate search over all graphs of order
/// `m + n ≤ opts.n_max`.
pub fn verify_clique_path(opts: &SuiteOptions, m_values: &[usize]) -> Result<VerificationReport> {
    let modes: Vec<Mode> = opts.alphas.iter().map(|a| Mode::Fixed(a.clone())).collect();
    let sweep = SuiteOptions { n_min: 2, ..opts.clone() };
    let parts = vec![
        verify_clique_cycle_merge(opts, m_values)?,
        verify_clique_path_extremal(opts, m_values)?,
        verify_ds(DsFamily::CliqueJoinPath, &sweep, &modes)?,
    ];
    Ok(VerificationReport::combine("clique-path", parts))
}

// ---------------------------------------------------------------------------
// regular graphs and joins with cliques

/// Eigenvalues of an `r`-regular graph at `α` equal `αr + (1-α)` times those at `0`.
pub fn verify_regular_shift(opts: &SuiteOptions) -> Result<VerificationReport> {
    let mut rec = Recorder::new("regular-shift", opts.n_min, opts.n_max, &opts.alphas, "numeric");
    for n in opts.n_min..=opts.n_max {
        for g in enumerate_graphs(n)?.into_iter().filter(|g| g.is_regular().is_some()) {
            let r = g.is_regular().expect("filtered") as f64;
            let base = eigenvalues(&g, 0.0, DEFAULT_TOL)?.eigenvalues;
            for a in &opts.alphas {
                let af = to_f64(a);
                let spec = eigenvalues(&g, af, DEFAULT_TOL)?.eigenvalues;
                let err =
                    spec.iter().zip(&base).map(|(l, b)| (l - (af * r + (1.0 - af) * b)).abs()).fold(0.0, f64::max);
                rec.check(err <= opts.tol, || cx(&g, None, a, format!("max deviation {err:e}")));
            }
        }
    }
    Ok(rec.finish(opts.timing))
}

/// Regular graphs on `n_min..=n_max` vertices with a cospectral regular mate
/// at `α`, smallest order first. Each pair is listed once.
pub fn regular_cospectral_pairs(n_min: usize, n_max: usize, alpha: &Rational) -> Result<Vec<(Graph, Graph)>> {
    let mode = Mode::Fixed(alpha.clone());
    let mut out = Vec::new();
    for n in n_min..=n_max {
        let regular: Vec<Graph> = enumerate_graphs(n)?.into_iter().filter(|g| g.is_regular().is_some()).collect();
        for class in cospectral_partition(&regular, &mode)? {
            for (i, &a) in class.iter().enumerate() {
                for &b in &class[i + 1..] {
                    out.push((regular[a].clone(), regular[b].clone()));
                }
            }
        }
        if !out.is_empty() {
            break;
        }
    }
    Ok(out)
}

/// For each regular graph `G` on `n_min..=n_max` vertices and each `α`:
/// if `G` has no mate then neither has `G ∨ K_m` (`m ≤ max_m`, order at most
/// `max_total`); if it has a mate `H` then `K_m ∨ G` and `K_m ∨ H` must be
/// forged into a verified certificate.
pub fn verify_regular_ds_transfer(opts: &SuiteOptions, max_m: usize, max_total: usize) -> Result<VerificationReport> {
    let mut rec = Recorder::new("regular-join-transfer", opts.n_min, opts.n_max, &opts.alphas, "fixed");
    rec.note(format!("m <= {max_m}, joined order <= {max_total}; mates confirmed exactly"));
    for n in opts.n_min..=opts.n_max {
        let all = enumerate_graphs(n)?;
        for g in all.iter().filter(|g| g.is_regular().is_some()) {
            for a in &opts.alphas {
                let mode = Mode::Fixed(a.clone());
                let mates = find_mates_in(g, &all, &mode)?;
                for m in 1..=max_m {
                    if n + m > max_total {
                        break;
                    }
                    let joined = graph::join(g, &complete(m))?;
                    if mates.is_empty() {
                        let joined_all = enumerate_graphs(n + m)?;
                        let jm = find_mates_in(&joined, &joined_all, &mode)?;
                        rec.check(jm.is_empty(), || {
                            cx(&joined, jm.first(), a, format!("{g} has no mate but its join with K{m} does"))
                        });
                    } else {
                        for h in &mates {
                            let ok = forge_cospectral_pair(&complete(m), g, h, &mode).and_then(|c| c.verify());
                            rec.check(matches!(ok, Ok(true)), || {
                                cx(g, Some(h), a, format!("forging joins with K{m} failed: {ok:?}"))
                            });
                        }
                    }
                }
            }
        }
    }
    Ok(rec.finish(opts.timing))
}

/// The product formula for regular joins with the `(1-α)²` weight agrees with
/// the determinant on every pair of regular graphs of order at most `max_order`;
/// the unweighted variant disagrees on `(K₁, K₁)` at `α = 1/2`.
pub fn verify_corollary_regression(max_order: usize, timing: bool) -> Result<VerificationReport> {
    let half = rat(1, 2);
    let mut rec = Recorder::new("corollary-regression", 1, max_order, std::slice::from_ref(&half), "symbolic");
    let x = crate::exactpoly::BivarPoly::x();
    let k2 = charpoly_exact(&complete(2))?;
    let unweighted = join_charpoly_regular_unweighted(1, 0, &x, 1, 0, &x)?;
    let k1 = empty(1);
    rec.check(unweighted.eval_alpha(&half) != k2.eval_alpha(&half), || {
        cx(&k1, Some(&k1), &half, "unweighted cross term unexpectedly matches".into())
    });
    let mut regular = Vec::new();
    for n in 1..=max_order {
        for g in enumerate_graphs(n)?.into_iter().filter(|g| g.is_regular().is_some()) {
            let p = charpoly_exact(&g)?;
            regular.push((g, p));
        }
    }
    for (i, (g1, p1)) in regular.iter().enumerate() {
        for (g2, p2) in &regular[i..] {
            let r1 = g1.is_regular().expect("regular");
            let r2 = g2.is_regular().expect("regular");
            let formula = join_charpoly_regular(g1.order(), r1, p1, g2.order(), r2, p2)?;
            let direct = join_charpoly(g1, g2)?;
            rec.check(formula == direct, || cx(g1, Some(g2), &half, "regular product formula disagrees".into()));
        }
    }
    Ok(rec.finish(timing))
}

// ---------------------------------------------------------------------------
// degree-sequence integer program

/// All minimizers of `Σ a_i²` over integer vectors with `0 ≤ a_i ≤ n - 1`
/// and `Σ a_i = (n-2)(n-1)`, listed as non-increasing sequences.
pub fn min_square_degree_sequences(n: usize) -> Result<Vec<DegreeSequence>> {
    if n < 4 {
        return Err(Error::DegreeSequence(format!("the program needs n >= 4, got {n}")));
    }
    fn rec(slots: usize, max: usize, rest: usize, cur: &mut Vec<usize>, best: &mut (usize, Vec<Vec<usize>>)) {
        if slots == 0 {
            if rest == 0 {
                let sq: usize = cur.iter().map(|a| a * a).sum();
                if sq < best.0 {
                    *best = (sq, vec![cur.clone()]);
                } else if sq == best.0 {
                    best.1.push(cur.clone());
                }
            }
            return;
        }
        if rest > slots * max {
            return;
        }
        for a in (0..=max.min(rest)).rev() {
            cur.push(a);
            rec(slots - 1, a, rest - a, cur, best);
            cur.pop();
        }
    }
    let mut best = (usize::MAX, Vec::new());
    rec(n, n - 1, (n - 2) * (n - 1), &mut Vec::new(), &mut best);
    best.1.into_iter().map(DegreeSequence::new).collect()
}
