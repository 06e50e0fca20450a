//! Exhaustive scans: enumeration, cospectral classes, mates, and the
//! verification suites built on them.

pub mod canon;
pub mod enumerate;
pub mod verify;

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;
use serde_json::{json, Value};
use xxhash_rust::xxh3::xxh3_128;

pub use canon::{canonical_form, canonical_graph, canonical_labeling, is_isomorphic};
pub use enumerate::{count_graphs, dedupe_classes, enumerate_graphs, KNOWN_COUNTS, MAX_ENUMERATION_ORDER};

use crate::error::Result;
use crate::exactpoly::Rational;
use crate::graph::Graph;
use crate::spectra::{charpoly_exact, charpoly_in_mode, scaled_integer_charpoly, symmetric_eigenvalues, Mode};

/// Gap above which two sorted eigenvalue coordinates are treated as different
/// in the floating-point pre-pass.
pub const PREPASS_GAP: f64 = 1e-6;

/// Exact encoding of a characteristic polynomial in a given mode.
///
/// The byte string is injective on polynomials of one mode; the 128-bit hash
/// is a compact label only. Equality compares the full bytes.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Fingerprint {
    bytes: Vec<u8>,
    hash: u128,
}

impl Fingerprint {
    fn from_bytes(bytes: Vec<u8>) -> Self {
        let hash = xxh3_128(&bytes);
        Fingerprint { bytes, hash }
    }

    pub fn bytes(&self) -> &[u8] {
        &self.bytes
    }

    pub fn hex(&self) -> String {
        format!("{:032x}", self.hash)
    }
}

fn push_int(buf: &mut Vec<u8>, v: &BigInt) {
    let b = v.to_signed_bytes_be();
    buf.extend_from_slice(&(b.len() as u32).to_be_bytes());
    buf.extend_from_slice(&b);
}

/// Length-prefixed big-endian coefficients of the exact polynomial.
pub fn fingerprint(g: &Graph, mode: &Mode) -> Result<Fingerprint> {
    let mut buf = Vec::new();
    match mode {
        Mode::Symbolic => {
            buf.push(b'S');
            let terms = charpoly_exact(g)?.terms();
            buf.extend_from_slice(&(terms.len() as u32).to_be_bytes());
            for (dx, da, c) in terms {
                buf.extend_from_slice(&(dx as u32).to_be_bytes());
                buf.extend_from_slice(&(da as u32).to_be_bytes());
                push_int(&mut buf, &c);
            }
        }
        Mode::Fixed(a) => {
            buf.push(b'F');
            push_int(&mut buf, a.numer());
            push_int(&mut buf, a.denom());
            let (coeffs, _) = scaled_integer_charpoly(g, a)?;
            buf.extend_from_slice(&(coeffs.len() as u32).to_be_bytes());
            for c in &coeffs {
                push_int(&mut buf, c);
            }
        }
    }
    Ok(Fingerprint::from_bytes(buf))
}

/// Invariants every cospectral pair shares in the given mode: order, edge
/// count and (unless `α = 0`) the sum of squared degrees.
fn bucket_key(g: &Graph, mode: &Mode) -> (usize, usize, usize) {
    let sq = match mode.alpha() {
        Some(a) if a.is_zero() => 0,
        _ => g.degree_sequence().sum_of_squares(),
    };
    (g.order(), g.edge_count(), sq)
}

fn prepass_alpha(mode: &Mode) -> f64 {
    match mode {
        // any fixed value works as a filter for equality at every α
        Mode::Symbolic => 7.0 / 22.0,
        Mode::Fixed(a) => a.to_f64().unwrap_or(f64::NAN),
    }
}

/// Splits `group` (indices into `spectra`) by gaps in one sorted coordinate
/// at a time. Graphs whose spectra agree to within the gap are never split.
fn gap_cluster(group: Vec<usize>, spectra: &[Vec<f64>], coord: usize, out: &mut Vec<Vec<usize>>) {
    if group.len() == 1 || coord == spectra[group[0]].len() {
        out.push(group);
        return;
    }
    let mut group = group;
    group.sort_by(|&a, &b| spectra[a][coord].total_cmp(&spectra[b][coord]).then(a.cmp(&b)));
    let mut start = 0;
    for i in 1..=group.len() {
        if i == group.len() || spectra[group[i]][coord] - spectra[group[i - 1]][coord] > PREPASS_GAP {
            gap_cluster(group[start..i].to_vec(), spectra, coord + 1, out);
            start = i;
        }
    }
}

/// Confirms a pre-pass cluster exactly, splitting it by fingerprint.
fn confirm(group: &[usize], graphs: &[Graph], mode: &Mode) -> Result<Vec<Vec<usize>>> {
    if group.len() == 1 {
        return Ok(vec![group.to_vec()]);
    }
    let split = |ids: &[usize], m: &Mode| -> Result<Vec<Vec<usize>>> {
        let mut by_fp: BTreeMap<Fingerprint, Vec<usize>> = BTreeMap::new();
        for &i in ids {
            by_fp.entry(fingerprint(&graphs[i], m)?).or_default().push(i);
        }
        Ok(by_fp.into_values().collect())
    };
    match mode {
        Mode::Fixed(_) => split(group, mode),
        Mode::Symbolic => {
            // an exact split at one α is cheap and coarser than the bivariate one
            let generic = Mode::Fixed(Rational::new(7.into(), 22.into()));
            let mut out = Vec::new();
            for sub in split(group, &generic)? {
                if sub.len() == 1 {
                    out.push(sub);
                } else {
                    out.extend(split(&sub, mode)?);
                }
            }
            Ok(out)
        }
    }
}

/// Partitions `graphs` (indices) by equality of the characteristic polynomial
/// in `mode`. Two stages: an exact invariant bucket plus a floating-point
/// spectrum filter, then exact confirmation of every multi-member cluster.
/// Classes are listed by their smallest index; members ascend.
pub fn cospectral_partition(graphs: &[Graph], mode: &Mode) -> Result<Vec<Vec<usize>>> {
    let alpha = prepass_alpha(mode);
    let mut buckets: BTreeMap<(usize, usize, usize), Vec<usize>> = BTreeMap::new();
    for (i, g) in graphs.iter().enumerate() {
        buckets.entry(bucket_key(g, mode)).or_default().push(i);
    }
    let spectra: Vec<Vec<f64>> = graphs
        .par_iter()
        .map(|g| symmetric_eigenvalues(crate::spectra::alpha_matrix_f64(g, alpha), crate::spectra::DEFAULT_TOL))
        .collect::<Result<_>>()?;
    let shards: Vec<Vec<usize>> = buckets.into_values().collect();
    let mut classes: Vec<Vec<usize>> = shards
        .into_par_iter()
        .map(|bucket| -> Result<Vec<Vec<usize>>> {
            let mut clusters = Vec::new();
            gap_cluster(bucket, &spectra, 0, &mut clusters);
            let mut out = Vec::new();
            for c in clusters {
                out.extend(confirm(&c, graphs, mode)?);
            }
            Ok(out)
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .map(|mut c| {
            c.sort_unstable();
            c
        })
        .collect();
    classes.sort_unstable_by_key(|c| c[0]);
    Ok(classes)
}

/// Exact-only partition: every graph is fingerprinted. Shards build local
/// maps that merge by key, so the result does not depend on sharding.
pub fn exact_partition(graphs: &[Graph], mode: &Mode) -> Result<Vec<Vec<usize>>> {
    let merged = graphs
        .par_iter()
        .enumerate()
        .map(|(i, g)| fingerprint(g, mode).map(|f| BTreeMap::from([(f, vec![i])])))
        .try_reduce(BTreeMap::new, |mut a, b| {
            for (k, v) in b {
                a.entry(k).or_insert_with(Vec::new).extend(v);
            }
            Ok(a)
        })?;
    let mut classes: Vec<Vec<usize>> = merged
        .into_values()
        .map(|mut c| {
            c.sort_unstable();
            c
        })
        .collect();
    classes.sort_unstable_by_key(|c| c[0]);
    Ok(classes)
}

/// Graphs sharing one characteristic polynomial in one mode.
#[derive(Debug, Clone, PartialEq)]
pub struct CospectralClass {
    pub mode: Mode,
    pub fingerprint: Fingerprint,
    pub members: Vec<Graph>,
    pub charpoly: String,
}

impl CospectralClass {
    pub fn to_json(&self) -> Value {
        let mut v = json!({
            "mode": self.mode.name(),
            "fingerprint": self.fingerprint.hex(),
            "members": self.members.iter().map(Graph::to_graph6).collect::<Vec<_>>(),
            "charpoly": self.charpoly,
        });
        if let Some(a) = self.mode.alpha() {
            v["alpha"] = json!(a.to_string());
        }
        v
    }
}

/// Full class records for a list of pairwise non-isomorphic graphs.
pub fn cospectral_classes(graphs: &[Graph], mode: &Mode) -> Result<Vec<CospectralClass>> {
    cospectral_partition(graphs, mode)?
        .into_par_iter()
        .map(|idx| {
            let first = &graphs[idx[0]];
            Ok(CospectralClass {
                mode: mode.clone(),
                fingerprint: fingerprint(first, mode)?,
                charpoly: charpoly_in_mode(first, mode)?.render(),
                members: idx.iter().map(|&i| graphs[i].clone()).collect(),
            })
        })
        .collect()
}

/// Non-isomorphic graphs on the same vertex set size with the same
/// characteristic polynomial as `target`, searched over `candidates`.
pub fn find_mates_in(target: &Graph, candidates: &[Graph], mode: &Mode) -> Result<Vec<Graph>> {
    let key = bucket_key(target, mode);
    let target_fp = fingerprint(target, mode)?;
    let target_canon = canonical_form(target);
    let mut mates: Vec<Graph> = candidates
        .par_iter()
        .filter(|h| bucket_key(h, mode) == key)
        .map(|h| -> Result<Option<Graph>> {
            if fingerprint(h, mode)? == target_fp && canonical_form(h) != target_canon {
                Ok(Some(h.clone()))
            } else {
                Ok(None)
            }
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();
    mates.sort();
    mates.dedup_by(|a, b| canonical_form(a) == canonical_form(b));
    Ok(mates)
}

/// All mates of `target` among every graph on its vertex count.
pub fn find_mates(target: &Graph, mode: &Mode) -> Result<Vec<Graph>> {
    let all = enumerate_graphs(target.order())?;
    find_mates_in(target, &all, mode)
}

/// The first pair of non-isomorphic graphs on at most `n_max` vertices that
/// share both characteristic polynomial and coronal in `mode`, smallest
/// order first. Such a pair can be joined with any graph to give a
/// cospectral pair of joins.
pub fn find_coronal_mates(n_max: usize, mode: &Mode) -> Result<Option<(Graph, Graph)>> {
    for n in 1..=n_max {
        let all = enumerate_graphs(n)?;
        for class in cospectral_partition(&all, mode)? {
            let coronals: Vec<_> =
                class.iter().map(|&i| crate::joins::coronal_in_mode(&all[i], mode)).collect::<Result<_>>()?;
            for a in 0..class.len() {
                for b in a + 1..class.len() {
                    if coronals[a] == coronals[b] {
                        return Ok(Some((all[class[a]].clone(), all[class[b]].clone())));
                    }
                }
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::rat;
    use crate::graph::*;

    #[test]
    fn star_has_one_adjacency_mate() {
        let mates = find_mates(&star(5), &Mode::Fixed(rat(0, 1))).unwrap();
        assert_eq!(mates.len(), 1);
        assert!(is_isomorphic(&mates[0], &disjoint_union(&[cycle(4), empty(1)]).unwrap()));
        assert!(find_mates(&star(5), &Mode::Fixed(rat(3, 4))).unwrap().is_empty());
    }

    #[test]
    fn coronal_mates_at_one() {
        let (a, b) = find_coronal_mates(6, &Mode::Fixed(rat(1, 1))).unwrap().unwrap();
        assert!(!is_isomorphic(&a, &b));
        assert_eq!(a.degree_sequence(), b.degree_sequence());
    }

    #[test]
    fn small_symbolic_classes_are_singletons() {
        for n in 1..=4 {
            let gs = enumerate_graphs(n).unwrap();
            assert!(cospectral_partition(&gs, &Mode::Symbolic).unwrap().iter().all(|c| c.len() == 1));
        }
    }

    #[test]
    fn prepass_agrees_with_exact() {
        for mode in [Mode::Fixed(rat(0, 1)), Mode::Fixed(rat(1, 2)), Mode::Symbolic] {
            let gs = enumerate_graphs(6).unwrap();
            assert_eq!(cospectral_partition(&gs, &mode).unwrap(), exact_partition(&gs, &mode).unwrap());
        }
    }

    #[test]
    fn fingerprints_are_mode_specific() {
        let a = fingerprint(&path(3), &Mode::Fixed(rat(1, 2))).unwrap();
        let b = fingerprint(&path(3), &Mode::Fixed(rat(1, 3))).unwrap();
        assert_ne!(a, b);
        assert_eq!(a.hex().len(), 32);
    }
}
