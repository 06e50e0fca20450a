//! Isomorphism-class enumeration of all graphs on up to ten vertices.
//!
//! Graphs on `n` vertices are grown from the representatives on `n - 1` by
//! adding a vertex of minimum degree. Every graph arises this way (delete one
//! of its minimum-degree vertices), so canonicalizing each extension and
//! removing duplicates leaves exactly one graph per class.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use rayon::prelude::*;

use super::canon::{canonical_graph, from_triangle_key, triangle_key};
use crate::error::{Error, Result};
use crate::graph::Graph;

pub const MAX_ENUMERATION_ORDER: usize = 10;

/// Number of graphs on `n = 1..=10` vertices up to isomorphism.
pub const KNOWN_COUNTS: [usize; 10] = [1, 2, 4, 11, 34, 156, 1044, 12346, 274668, 12005168];

fn cache() -> &'static Mutex<HashMap<usize, std::sync::Arc<Vec<u64>>>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, std::sync::Arc<Vec<u64>>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Canonical upper-triangle keys of every class on `n` vertices, sorted.
fn class_keys(n: usize) -> std::sync::Arc<Vec<u64>> {
    if let Some(k) = cache().lock().expect("cache lock").get(&n) {
        return k.clone();
    }
    let keys = if n == 1 {
        vec![0]
    } else {
        let smaller = class_keys(n - 1);
        smaller
            .par_chunks(64)
            .map(|chunk| {
                let mut keys: Vec<u64> = chunk.iter().flat_map(|&k| extensions(&from_triangle_key(n - 1, k))).collect();
                keys.sort_unstable();
                keys.dedup();
                keys
            })
            .reduce(Vec::new, merge_sorted)
    };
    let keys = std::sync::Arc::new(keys);
    cache().lock().expect("cache lock").insert(n, keys.clone());
    keys
}

fn merge_sorted(a: Vec<u64>, b: Vec<u64>) -> Vec<u64> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => {
                out.push(a[i]);
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                out.push(b[j]);
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}

fn extensions(h: &Graph) -> Vec<u64> {
    let m = h.order();
    let n = m + 1;
    let degrees = h.degrees();
    let mut out = Vec::new();
    for s in 0u64..1 << m {
        let k = s.count_ones() as usize;
        // the new vertex must have minimum degree in the extended graph
        let min_other = (0..m).map(|v| degrees[v] + (s >> v & 1) as usize).min().unwrap_or(usize::MAX);
        if k > min_other {
            continue;
        }
        let mut rows: Vec<u64> = h.rows().to_vec();
        rows.push(s);
        let g = Graph::from_rows(n, &rows).expect("order within limit");
        out.push(triangle_key(&canonical_graph(&g)));
    }
    out
}

/// One representative per isomorphism class on `n` vertices, each in
/// canonical labelling, in a fixed deterministic order.
pub fn enumerate_graphs(n: usize) -> Result<Vec<Graph>> {
    if !(1..=MAX_ENUMERATION_ORDER).contains(&n) {
        return Err(Error::EnumerationRange(n));
    }
    Ok(class_keys(n).iter().map(|&k| from_triangle_key(n, k)).collect())
}

/// Number of classes on `n` vertices, computed by enumeration.
pub fn count_graphs(n: usize) -> Result<usize> {
    if !(1..=MAX_ENUMERATION_ORDER).contains(&n) {
        return Err(Error::EnumerationRange(n));
    }
    Ok(class_keys(n).len())
}

/// Keeps one graph per isomorphism class from an arbitrary list (for
/// ingesting external catalogs). Output is canonical and sorted.
pub fn dedupe_classes(graphs: &[Graph]) -> Vec<Graph> {
    let mut canon: Vec<Graph> = graphs.par_iter().map(canonical_graph).collect();
    canon.sort();
    canon.dedup();
    canon
}
