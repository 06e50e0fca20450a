//! Simple undirected graphs on at most 64 vertices.
//!
//! Each adjacency row is a single `u64` bit mask, so adjacency tests and
//! degree computations are constant time. Graph values are immutable once
//! built; every operation returns a new graph.

use std::fmt;

use crate::error::{Error, Graph6Error, Result};

pub const MAX_VERTICES: usize = 64;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    n: usize,
    rows: Vec<u64>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        check_order(n)?;
        Ok(Graph { n, rows: vec![0; n] })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            if u >= n || v >= n || u == v {
                return Err(Error::FamilyParams {
                    family: "edge list".into(),
                    reason: format!("edge ({u}, {v}) invalid for n = {n}"),
                });
            }
            g.set_edge(u, v);
        }
        Ok(g)
    }

    /// Builds a graph from raw rows. Rows are symmetrized and loops dropped.
    pub fn from_rows(n: usize, rows: &[u64]) -> Result<Self> {
        check_order(n)?;
        let mut g = Graph { n, rows: vec![0; n] };
        for (i, &row) in rows.iter().enumerate().take(n) {
            let mut bits = row & mask(n) & !(1u64 << i);
            while bits != 0 {
                let j = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                g.set_edge(i, j);
            }
        }
        Ok(g)
    }

    pub(crate) fn set_edge(&mut self, u: usize, v: usize) {
        self.rows[u] |= 1 << v;
        self.rows[v] |= 1 << u;
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> &[u64] {
        &self.rows
    }

    pub fn neighbors(&self, v: usize) -> u64 {
        self.rows[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u] >> v & 1 == 1
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].count_ones() as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| ((u + 1)..self.n).filter(move |&v| self.has_edge(u, v)).map(move |v| (u, v)))
    }

    pub fn degree_sequence(&self) -> DegreeSequence {
        let mut d = self.degrees();
        d.sort_unstable_by(|a, b| b.cmp(a));
        DegreeSequence(d)
    }

    /// Returns `Some(r)` iff every vertex has degree `r`.
    pub fn is_regular(&self) -> Option<usize> {
        let r = self.degree(0);
        (1..self.n).all(|v| self.degree(v) == r).then_some(r)
    }

    /// Number of vertices adjacent to all others.
    pub fn dominating_vertex_count(&self) -> usize {
        (0..self.n).filter(|&v| self.degree(v) == self.n - 1).count()
    }

    pub fn complement(&self) -> Graph {
        let full = mask(self.n);
        let rows = self.rows.iter().enumerate().map(|(i, &r)| !r & full & !(1u64 << i)).collect();
        Graph { n: self.n, rows }
    }

    /// Applies `perm`, sending vertex `v` to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        let mut rows = vec![0u64; self.n];
        for (u, &pu) in perm.iter().enumerate() {
            let mut bits = self.rows[u];
            while bits != 0 {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                rows[pu] |= 1 << perm[v];
            }
        }
        Graph { n: self.n, rows }
    }

    /// Graph induced on the vertices whose bit is set in `keep`, in increasing order.
    pub fn induced(&self, keep: u64) -> Result<Graph> {
        let verts: Vec<usize> = (0..self.n).filter(|&v| keep >> v & 1 == 1).collect();
        let mut g = Graph::empty(verts.len())?;
        for (i, &u) in verts.iter().enumerate() {
            for (j, &v) in verts.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.set_edge(i, j);
                }
            }
        }
        Ok(g)
    }

    pub fn is_connected(&self) -> bool {
        let mut seen = 1u64;
        let mut frontier = 1u64;
        while frontier != 0 {
            let mut next = 0u64;
            let mut bits = frontier;
            while bits != 0 {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                next |= self.rows[v];
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen == mask(self.n)
    }

    pub fn to_graph6(&self) -> String {
        String::from_utf8(encode_graph6(self)).expect("graph6 output is ASCII")
    }

    pub fn parse_graph6(text: &str) -> std::result::Result<Graph, Graph6Error> {
        parse_graph6(text)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({})", self.to_graph6())
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_graph6())
    }
}

pub(crate) fn mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

fn check_order(n: usize) -> Result<()> {
    if n == 0 {
        Err(Error::EmptyGraph)
    } else if n > MAX_VERTICES {
        Err(Error::VertexLimit(n))
    } else {
        Ok(())
    }
}

/// Degrees sorted non-increasing.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize)]
pub struct DegreeSequence(Vec<usize>);

impl DegreeSequence {
    /// Validates length-independent invariants: entries at most `len - 1`, even sum.
    pub fn new(mut degrees: Vec<usize>) -> Result<Self> {
        degrees.sort_unstable_by(|a, b| b.cmp(a));
        let n = degrees.len();
        if n == 0 {
            return Err(Error::DegreeSequence("empty sequence".into()));
        }
        if degrees[0] > n - 1 {
            return Err(Error::DegreeSequence(format!("degree {} exceeds n - 1 = {}", degrees[0], n - 1)));
        }
        if degrees.iter().sum::<usize>() % 2 != 0 {
            return Err(Error::DegreeSequence("odd degree sum".into()));
        }
        Ok(DegreeSequence(degrees))
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn sum_of_squares(&self) -> usize {
        self.0.iter().map(|d| d * d).sum()
    }
}

// ---------------------------------------------------------------------------
// graph6

pub fn encode_graph6(g: &Graph) -> Vec<u8> {
    let n = g.n;
    let mut out = Vec::with_capacity(2 + (n * (n - 1) / 2).div_ceil(6));
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        out.push(((n >> 12) & 63) as u8 + 63);
        out.push(((n >> 6) & 63) as u8 + 63);
        out.push((n & 63) as u8 + 63);
    }
    let mut acc = 0u8;
    let mut nbits = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            nbits += 1;
            if nbits == 6 {
                out.push(acc + 63);
                acc = 0;
                nbits = 0;
            }
        }
    }
    if nbits > 0 {
        out.push((acc << (6 - nbits)) + 63);
    }
    out
}

pub fn parse_graph6(text: &str) -> std::result::Result<Graph, Graph6Error> {
    let s = text.trim_end_matches(['\n', '\r']);
    let s = s.strip_prefix(">>graph6<<").unwrap_or(s);
    let bytes = s.as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::MalformedHeader("empty record".into()));
    }
    for (offset, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(Graph6Error::InvalidByte { byte: b, offset });
        }
    }
    let (n, body) = if bytes[0] != 126 {
        ((bytes[0] - 63) as usize, &bytes[1..])
    } else if bytes.len() >= 2 && bytes[1] == 126 {
        if bytes.len() < 8 {
            return Err(Graph6Error::MalformedHeader("short 8-byte order field".into()));
        }
        let n = bytes[2..8].iter().fold(0usize, |acc, &b| acc << 6 | (b - 63) as usize);
        (n, &bytes[8..])
    } else {
        if bytes.len() < 4 {
            return Err(Graph6Error::MalformedHeader("short 4-byte order field".into()));
        }
        let n = bytes[1..4].iter().fold(0usize, |acc, &b| acc << 6 | (b - 63) as usize);
        if n <= 62 {
            return Err(Graph6Error::MalformedHeader(format!("long order field used for n = {n}")));
        }
        (n, &bytes[4..])
    };
    if n > MAX_VERTICES {
        return Err(Graph6Error::OrderExceedsLimit(n));
    }
    if n == 0 {
        return Err(Graph6Error::MalformedHeader("graph has no vertices".into()));
    }
    let expected = (n * (n - 1) / 2).div_ceil(6);
    if body.len() < expected {
        return Err(Graph6Error::Truncated { expected, found: body.len() });
    }
    if body.len() > expected {
        return Err(Graph6Error::TrailingData(body.len() - expected));
    }
    let mut g = Graph { n, rows: vec![0; n] };
    let mut k = 0usize;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                g.set_edge(i, j);
            }
            k += 1;
        }
    }
    Ok(g)
}

/// Parses a `.g6` file body: one record per line, blank lines and the
/// optional `>>graph6<<` header skipped.
pub fn parse_graph6_lines(text: &str) -> std::result::Result<Vec<Graph>, (usize, Graph6Error)> {
    let mut out = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        let line = line.strip_prefix(">>graph6<<").unwrap_or(line);
        if line.is_empty() {
            continue;
        }
        out.push(parse_graph6(line).map_err(|e| (lineno + 1, e))?);
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// operations

/// Block-diagonal union; vertices of `gs[0]` come first.
pub fn disjoint_union(gs: &[Graph]) -> Result<Graph> {
    let total: usize = gs.iter().map(|g| g.n).sum();
    if total > MAX_VERTICES {
        return Err(Error::VertexLimit(total));
    }
    let mut out = Graph::empty(total)?;
    let mut offset = 0;
    for g in gs {
        for (u, &row) in g.rows.iter().enumerate() {
            out.rows[offset + u] = row << offset;
        }
        offset += g.n;
    }
    Ok(out)
}

/// `g1 ∨ g2`: vertices of `g1` first, then `g2`, plus every cross edge.
pub fn join(g1: &Graph, g2: &Graph) -> Result<Graph> {
    let mut out = disjoint_union(&[g1.clone(), g2.clone()])?;
    let left = mask(g1.n);
    let right = mask(g1.n + g2.n) & !left;
    for u in 0..g1.n {
        out.rows[u] |= right;
    }
    for v in g1.n..out.n {
        out.rows[v] |= left;
    }
    Ok(out)
}

/// Join of a list of graphs, left to right.
pub fn join_all(gs: &[Graph]) -> Result<Graph> {
    let (first, rest) = gs.split_first().ok_or(Error::EmptyGraph)?;
    rest.iter().try_fold(first.clone(), |acc, g| join(&acc, g))
}

// ---------------------------------------------------------------------------
// named families

/// Named graph families with fixed vertex orderings.
///
/// * `Path(n)`: `0 - 1 - ... - (n-1)`.
/// * `Cycle(n)`: the path plus the edge `(n-1, 0)`.
/// * `Star(n)`: `K_{1,n-1}` with centre `0`.
/// * `CompleteSplit(m, k)`: clique on `0..m`, independent set on `m..m+k`.
/// * `Friendship(k)`: centre `0`, triangles closed by edges `(1,2), (3,4), ...`.
/// * `Wheel(n)`: hub `0`, rim `C_{n-1}` on `1..n` in cyclic order.
/// * `MatchingPlusIsolates(n, k)`: edges `(0,1), (2,3), ...` then `n - 2k` isolated vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    Star(usize),
    Empty(usize),
    CompleteSplit(usize, usize),
    Friendship(usize),
    Wheel(usize),
    MatchingPlusIsolates(usize, usize),
}

impl Family {
    pub fn parse(name: &str, params: &[usize]) -> Result<Family> {
        let want = |k: usize| -> Result<()> {
            if params.len() == k {
                Ok(())
            } else {
                Err(Error::FamilyParams {
                    family: name.into(),
                    reason: format!("expected {k} parameters, got {}", params.len()),
                })
            }
        };
        let fam = match name {
            "path" => {
                want(1)?;
                Family::Path(params[0])
            }
            "cycle" => {
                want(1)?;
                Family::Cycle(params[0])
            }
            "complete" => {
                want(1)?;
                Family::Complete(params[0])
            }
            "star" => {
                want(1)?;
                Family::Star(params[0])
            }
            "empty" => {
                want(1)?;
                Family::Empty(params[0])
            }
            "complete_split" => {
                want(2)?;
                Family::CompleteSplit(params[0], params[1])
            }
            "friendship" => {
                want(1)?;
                Family::Friendship(params[0])
            }
            "wheel" => {
                want(1)?;
                Family::Wheel(params[0])
            }
            "matching_plus_isolates" => {
                want(2)?;
                Family::MatchingPlusIsolates(params[0], params[1])
            }
            other => return Err(Error::UnknownFamily(other.into())),
        };
        Ok(fam)
    }

    pub fn build(self) -> Result<Graph> {
        let bad = |family: &str, reason: &str| Error::FamilyParams { family: family.into(), reason: reason.into() };
        match self {
            Family::Path(n) => {
                let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
                Graph::from_edges(n, &edges)
            }
            Family::Cycle(n) => {
                if n < 3 {
                    return Err(bad("cycle", "needs n >= 3"));
                }
                let mut edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
                edges.push((n - 1, 0));
                Graph::from_edges(n, &edges)
            }
            Family::Complete(n) => Ok(Graph::empty(n)?.complement()),
            Family::Star(n) => {
                let edges: Vec<_> = (1..n).map(|i| (0, i)).collect();
                Graph::from_edges(n, &edges)
            }
            Family::Empty(n) => Graph::empty(n),
            Family::CompleteSplit(m, k) => {
                if m + k == 0 {
                    return Err(bad("complete_split", "needs at least one vertex"));
                }
                if m == 0 {
                    return Graph::empty(k);
                }
                if k == 0 {
                    return Family::Complete(m).build();
                }
                join(&Family::Complete(m).build()?, &Graph::empty(k)?)
            }
            Family::Friendship(k) => {
                if k == 0 {
                    return Err(bad("friendship", "needs k >= 1"));
                }
                join(&Graph::empty(1)?, &Family::MatchingPlusIsolates(2 * k, k).build()?)
            }
            Family::Wheel(n) => {
                if n < 4 {
                    return Err(bad("wheel", "needs n >= 4"));
                }
                join(&Graph::empty(1)?, &Family::Cycle(n - 1).build()?)
            }
            Family::MatchingPlusIsolates(n, k) => {
                if 2 * k > n {
                    return Err(bad("matching_plus_isolates", "needs 2k <= n"));
                }
                let edges: Vec<_> = (0..k).map(|i| (2 * i, 2 * i + 1)).collect();
                Graph::from_edges(n, &edges)
            }
        }
    }
}

pub fn path(n: usize) -> Graph {
    Family::Path(n).build().expect("valid path order")
}

pub fn cycle(n: usize) -> Graph {
    Family::Cycle(n).build().expect("valid cycle order")
}

pub fn complete(n: usize) -> Graph {
    Family::Complete(n).build().expect("valid complete order")
}

pub fn star(n: usize) -> Graph {
    Family::Star(n).build().expect("valid star order")
}

pub fn empty(n: usize) -> Graph {
    Graph::empty(n).expect("valid order")
}

pub fn wheel(n: usize) -> Graph {
    Family::Wheel(n).build().expect("valid wheel order")
}

pub fn friendship(k: usize) -> Graph {
    Family::Friendship(k).build().expect("valid friendship order")
}

pub fn complete_split(m: usize, k: usize) -> Graph {
    Family::CompleteSplit(m, k).build().expect("valid complete split")
}

pub fn matching_plus_isolates(n: usize, k: usize) -> Graph {
    Family::MatchingPlusIsolates(n, k).build().expect("valid matching")
}
