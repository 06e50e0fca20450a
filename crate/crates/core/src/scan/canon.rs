//! Canonical labelling by individualization and refinement.
//!
//! The search tree individualizes one vertex of the first non-singleton cell
//! at every level and refines to an equitable partition. Each leaf yields a
//! relabelled adjacency; the canonical graph is the lexicographically largest
//! one. Automorphisms discovered at equal leaves prune sibling subtrees.

use crate::graph::Graph;

type Partition = Vec<Vec<usize>>;

/// Splits cells until every vertex in a cell has the same number of
/// neighbours in every cell. Sub-cells are ordered by that count vector, so
/// the result depends only on the graph and the input partition.
fn refine(g: &Graph, mut cells: Partition) -> Partition {
    loop {
        let masks: Vec<u64> = cells.iter().map(|c| c.iter().fold(0u64, |m, &v| m | 1 << v)).collect();
        let mut next: Partition = Vec::with_capacity(g.order());
        let mut split = false;
        for cell in &cells {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut keyed: Vec<(Vec<u32>, usize)> =
                cell.iter().map(|&v| (masks.iter().map(|m| (g.neighbors(v) & m).count_ones()).collect(), v)).collect();
            keyed.sort();
            let before = next.len();
            let mut start = 0;
            for i in 1..=keyed.len() {
                if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                    next.push(keyed[start..i].iter().map(|(_, v)| *v).collect());
                    start = i;
                }
            }
            split |= next.len() - before > 1;
        }
        cells = next;
        if !split {
            return cells;
        }
    }
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind((0..n).collect())
    }

    fn find(&mut self, v: usize) -> usize {
        let mut r = v;
        while self.0[r] != r {
            r = self.0[r];
        }
        let mut c = v;
        while self.0[c] != r {
            let next = self.0[c];
            self.0[c] = r;
            c = next;
        }
        r
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.0[ra.max(rb)] = ra.min(rb);
        }
    }
}

struct Search<'a> {
    g: &'a Graph,
    first: Option<(Vec<u64>, Vec<usize>)>,
    best: Option<(Vec<u64>, Vec<usize>)>,
    automorphisms: Vec<Vec<usize>>,
}

impl Search<'_> {
    fn visit(&mut self, part: Partition, prefix: &mut Vec<usize>) {
        let part = refine(self.g, part);
        let Some(target) = part.iter().position(|c| c.len() > 1) else {
            let mut lab = vec![0; self.g.order()];
            for (pos, cell) in part.iter().enumerate() {
                lab[cell[0]] = pos;
            }
            self.leaf(lab);
            return;
        };
        let cell = part[target].clone();
        let mut explored: Vec<usize> = Vec::new();
        for &v in &cell {
            if !explored.is_empty() && self.equivalent_to_explored(v, &explored, prefix) {
                continue;
            }
            let mut child = Vec::with_capacity(part.len() + 1);
            child.extend_from_slice(&part[..target]);
            child.push(vec![v]);
            child.push(cell.iter().copied().filter(|&w| w != v).collect());
            child.extend_from_slice(&part[target + 1..]);
            prefix.push(v);
            self.visit(child, prefix);
            prefix.pop();
            explored.push(v);
        }
    }

    fn equivalent_to_explored(&self, v: usize, explored: &[usize], prefix: &[usize]) -> bool {
        let mut uf = UnionFind::new(self.g.order());
        let mut any = false;
        for gamma in &self.automorphisms {
            if prefix.iter().all(|&p| gamma[p] == p) {
                any = true;
                for (a, &b) in gamma.iter().enumerate() {
                    uf.union(a, b);
                }
            }
        }
        if !any {
            return false;
        }
        let rv = uf.find(v);
        explored.iter().any(|&w| uf.find(w) == rv)
    }

    fn leaf(&mut self, lab: Vec<usize>) {
        let cert = self.g.relabel(&lab).rows().to_vec();
        for reference in [&self.first, &self.best].into_iter().flatten() {
            if reference.0 == cert {
                let mut inverse = vec![0; lab.len()];
                for (v, &p) in reference.1.iter().enumerate() {
                    inverse[p] = v;
                }
                let gamma: Vec<usize> = lab.iter().map(|&p| inverse[p]).collect();
                if gamma.iter().enumerate().any(|(i, &j)| i != j) {
                    self.automorphisms.push(gamma);
                }
                return;
            }
        }
        if self.first.is_none() {
            self.first = Some((cert.clone(), lab.clone()));
        }
        if self.best.as_ref().is_none_or(|b| cert > b.0) {
            self.best = Some((cert, lab));
        }
    }
}

/// A canonical labelling: `lab[v]` is the position of vertex `v` in the
/// canonical graph. Isomorphic graphs map to identical relabelled graphs.
pub fn canonical_labeling(g: &Graph) -> Vec<usize> {
    let mut search = Search { g, first: None, best: None, automorphisms: Vec::new() };
    search.visit(vec![(0..g.order()).collect()], &mut Vec::new());
    search.best.expect("search reaches at least one leaf").1
}

pub fn canonical_graph(g: &Graph) -> Graph {
    g.relabel(&canonical_labeling(g))
}

/// Canonical byte string: the graph6 encoding of the canonical graph.
/// Equal strings exactly for isomorphic graphs.
pub fn canonical_form(g: &Graph) -> Vec<u8> {
    crate::graph::encode_graph6(&canonical_graph(g))
}

pub fn is_isomorphic(g: &Graph, h: &Graph) -> bool {
    g.order() == h.order()
        && g.edge_count() == h.edge_count()
        && g.degree_sequence() == h.degree_sequence()
        && canonical_graph(g) == canonical_graph(h)
}

/// Upper-triangle bits of a graph, packed row by row. Injective for `n ≤ 11`.
pub(crate) fn triangle_key(g: &Graph) -> u64 {
    let n = g.order();
    let mut key = 0u64;
    let mut bit = 0;
    for i in 0..n {
        for j in i + 1..n {
            if g.has_edge(i, j) {
                key |= 1 << bit;
            }
            bit += 1;
        }
    }
    key
}

pub(crate) fn from_triangle_key(n: usize, key: u64) -> Graph {
    let mut edges = Vec::new();
    let mut bit = 0;
    for i in 0..n {
        for j in i + 1..n {
            if key >> bit & 1 == 1 {
                edges.push((i, j));
            }
            bit += 1;
        }
    }
    Graph::from_edges(n, &edges).expect("key decodes to a valid graph")
}
