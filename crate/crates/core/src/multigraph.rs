//! Loopless multigraphs and the verifiers every construction is checked with.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphError {
    VertexOutOfRange {
        vertex: usize,
        n: usize,
    },
    /// Loops cannot be represented.
    Loop(usize),
    /// A builder ended with a negative multiplicity on this pair.
    NegativeMultiplicity(usize, usize),
    /// A union's two operands overlapped in this many vertices.
    SharedVertexCountNotOne(usize),
    /// A vertex map sends two vertices to the same image.
    NotInjective(usize),
    /// A vertex map has the wrong length.
    MapLength {
        expected: usize,
        got: usize,
    },
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphError::VertexOutOfRange { vertex, n } => {
                write!(f, "vertex {vertex} outside 1..={n}")
            }
            GraphError::Loop(v) => write!(f, "loop at vertex {v}"),
            GraphError::NegativeMultiplicity(u, v) => {
                write!(f, "pair {{{u},{v}}} ended with negative multiplicity")
            }
            GraphError::SharedVertexCountNotOne(c) => {
                write!(f, "union operands share {c} vertices, expected exactly 1")
            }
            GraphError::NotInjective(v) => write!(f, "vertex map hits {v} twice"),
            GraphError::MapLength { expected, got } => {
                write!(f, "vertex map has length {got}, expected {expected}")
            }
        }
    }
}

impl core::error::Error for GraphError {}

/// A loopless multigraph on vertices `1..=n`.
///
/// Edges are kept as `(u, v, m)` with `u < v` and `m >= 1`, sorted by
/// `(u, v)`, one entry per pair. An absent pair has multiplicity 0.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Multigraph {
    n: usize,
    edges: Vec<(usize, usize, u64)>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TriangularityReport {
    pub is_triangular: bool,
    pub uncovered_edge: Option<(usize, usize)>,
}

impl Multigraph {
    pub fn empty(n: usize) -> Self {
        Multigraph {
            n,
            edges: Vec::new(),
        }
    }

    /// Builds from arbitrary `(u, v, m)` triples; repeated pairs add up and
    /// zero multiplicities are dropped.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize, u64)>,
    {
        let mut b = MultigraphBuilder::new(n);
        for (u, v, m) in edges {
            b.add(u, v, m as i64)?;
        }
        b.build()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Pairs of positive multiplicity, sorted, `u < v`.
    pub fn edges(&self) -> &[(usize, usize, u64)] {
        &self.edges
    }

    /// Number of pairs with positive multiplicity.
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn total_multiplicity(&self) -> u64 {
        self.edges.iter().map(|e| e.2).sum()
    }

    pub fn multiplicity(&self, u: usize, v: usize) -> u64 {
        let key = if u < v { (u, v) } else { (v, u) };
        self.edges
            .binary_search_by(|e| (e.0, e.1).cmp(&key))
            .map(|i| self.edges[i].2)
            .unwrap_or(0)
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v == 0 || v > self.n {
            Err(GraphError::VertexOutOfRange {
                vertex: v,
                n: self.n,
            })
        } else {
            Ok(())
        }
    }

    /// Sum of multiplicities of edges at `v`.
    pub fn degree(&self, v: usize) -> Result<i64, GraphError> {
        self.check_vertex(v)?;
        Ok(self
            .edges
            .iter()
            .filter(|e| e.0 == v || e.1 == v)
            .map(|e| e.2 as i64)
            .sum())
    }

    /// Degrees in vertex order (entry `i` is the degree of vertex `i + 1`).
    pub fn degree_sequence(&self) -> Vec<i64> {
        let mut deg = vec![0i64; self.n];
        for &(u, v, m) in &self.edges {
            deg[u - 1] += m as i64;
            deg[v - 1] += m as i64;
        }
        deg
    }

    /// Sorted neighbor lists in CSR form: `(offsets, targets)`, 0-based.
    fn adjacency(&self) -> (Vec<usize>, Vec<usize>) {
        let mut offsets = vec![0usize; self.n + 1];
        for &(u, v, _) in &self.edges {
            offsets[u] += 1;
            offsets[v] += 1;
        }
        for i in 0..self.n {
            offsets[i + 1] += offsets[i];
        }
        let mut fill = offsets.clone();
        let mut targets = vec![0usize; offsets[self.n]];
        // scanning edges in (u, v) order pushes each list in ascending order
        for &(u, v, _) in &self.edges {
            targets[fill[u - 1]] = v;
            fill[u - 1] += 1;
            targets[fill[v - 1]] = u;
            fill[v - 1] += 1;
        }
        (offsets, targets)
    }

    /// Every positive pair must have a common neighbor. Reports the first
    /// uncovered pair in edge order otherwise.
    pub fn check_triangular(&self) -> TriangularityReport {
        let (offsets, targets) = self.adjacency();
        let nbrs = |x: usize| &targets[offsets[x - 1]..offsets[x]];
        for &(u, v, _) in &self.edges {
            let (a, b) = (nbrs(u), nbrs(v));
            let (small, large) = if a.len() <= b.len() { (a, b) } else { (b, a) };
            let covered = small
                .iter()
                .any(|w| *w != u && *w != v && large.binary_search(w).is_ok());
            if !covered {
                return TriangularityReport {
                    is_triangular: false,
                    uncovered_edge: Some((u, v)),
                };
            }
        }
        TriangularityReport {
            is_triangular: true,
            uncovered_edge: None,
        }
    }

    /// Same graph with every positive multiplicity set to 1.
    pub fn support(&self) -> Multigraph {
        Multigraph {
            n: self.n,
            edges: self.edges.iter().map(|&(u, v, _)| (u, v, 1)).collect(),
        }
    }

    /// Renames vertex `i` to `map[i - 1]` in a graph on `new_n` vertices.
    pub fn relabel(&self, map: &[usize], new_n: usize) -> Result<Multigraph, GraphError> {
        if map.len() != self.n {
            return Err(GraphError::MapLength {
                expected: self.n,
                got: map.len(),
            });
        }
        let mut seen = vec![false; new_n + 1];
        for &x in map {
            if x == 0 || x > new_n {
                return Err(GraphError::VertexOutOfRange {
                    vertex: x,
                    n: new_n,
                });
            }
            if core::mem::replace(&mut seen[x], true) {
                return Err(GraphError::NotInjective(x));
            }
        }
        let mut edges: Vec<_> = self
            .edges
            .iter()
            .map(|&(u, v, m)| {
                let (a, b) = (map[u - 1], map[v - 1]);
                if a < b {
                    (a, b, m)
                } else {
                    (b, a, m)
                }
            })
            .collect();
        sort_pairs(&mut edges, new_n);
        Ok(Multigraph { n: new_n, edges })
    }

    /// Glues `g2`, relabelled by `relabel2`, onto `g1`. The image of `g2`
    /// must meet `g1`'s vertices `1..=g1.n()` in exactly one vertex; the
    /// result has `max(g1.n(), max(relabel2))` vertices and summed
    /// multiplicities.
    pub fn union_on_shared_vertex(
        g1: &Multigraph,
        g2: &Multigraph,
        relabel2: &[usize],
    ) -> Result<Multigraph, GraphError> {
        let n = relabel2.iter().copied().max().unwrap_or(0).max(g1.n);
        let shared = relabel2.iter().filter(|&&x| x >= 1 && x <= g1.n).count();
        let g2 = g2.relabel(relabel2, n)?;
        if shared != 1 {
            return Err(GraphError::SharedVertexCountNotOne(shared));
        }
        let (a, b) = (&g1.edges, &g2.edges);
        let mut edges = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            let (ka, kb) = ((a[i].0, a[i].1), (b[j].0, b[j].1));
            if ka < kb {
                edges.push(a[i]);
                i += 1;
            } else if kb < ka {
                edges.push(b[j]);
                j += 1;
            } else {
                edges.push((ka.0, ka.1, a[i].2 + b[j].2));
                i += 1;
                j += 1;
            }
        }
        edges.extend_from_slice(&a[i..]);
        edges.extend_from_slice(&b[j..]);
        Ok(Multigraph { n, edges })
    }
}

/// Accumulates signed multiplicity changes; [`build`](Self::build) sums
/// them per pair.
#[derive(Debug, Clone)]
pub struct MultigraphBuilder {
    n: usize,
    entries: Vec<(usize, usize, i64)>,
}

impl MultigraphBuilder {
    pub fn new(n: usize) -> Self {
        MultigraphBuilder {
            n,
            entries: Vec::new(),
        }
    }

    pub fn with_capacity(n: usize, cap: usize) -> Self {
        MultigraphBuilder {
            n,
            entries: Vec::with_capacity(cap),
        }
    }

    /// Adds `delta` (possibly negative) to `m(u, v)`.
    pub fn add(&mut self, u: usize, v: usize, delta: i64) -> Result<&mut Self, GraphError> {
        for x in [u, v] {
            if x == 0 || x > self.n {
                return Err(GraphError::VertexOutOfRange {
                    vertex: x,
                    n: self.n,
                });
            }
        }
        if u == v {
            return Err(GraphError::Loop(u));
        }
        let (a, b) = if u < v { (u, v) } else { (v, u) };
        self.entries.push((a, b, delta));
        Ok(self)
    }

    pub fn build(mut self) -> Result<Multigraph, GraphError> {
        sort_pairs(&mut self.entries, self.n);
        let mut edges: Vec<(usize, usize, u64)> = Vec::with_capacity(self.entries.len());
        let mut i = 0;
        while i < self.entries.len() {
            let (u, v, _) = self.entries[i];
            let mut m = 0i64;
            while i < self.entries.len() && (self.entries[i].0, self.entries[i].1) == (u, v) {
                m += self.entries[i].2;
                i += 1;
            }
            match m {
                0 => {}
                m if m < 0 => return Err(GraphError::NegativeMultiplicity(u, v)),
                m => edges.push((u, v, m as u64)),
            }
        }
        Ok(Multigraph { n: self.n, edges })
    }
}

/// Stable counting sort by `(u, v)`, vertices in `1..=n`. Linear in
/// `n + items.len()`.
fn sort_pairs<T: Copy>(items: &mut [(usize, usize, T)], n: usize) {
    let descents = items
        .windows(2)
        .filter(|w| (w[0].0, w[0].1) > (w[1].0, w[1].1))
        .count();
    if descents == 0 {
        return;
    }
    // a few sorted runs merge faster than two scatter passes
    if items.len() < 64 || descents < 16 {
        items.sort_by_key(|e| (e.0, e.1));
        return;
    }
    let mut buf = items.to_vec();
    counting_pass(items, &mut buf, n, |e| e.1);
    counting_pass(&buf, items, n, |e| e.0);
}

fn counting_pass<T: Copy>(
    src: &[(usize, usize, T)],
    dst: &mut [(usize, usize, T)],
    n: usize,
    key: impl Fn(&(usize, usize, T)) -> usize,
) {
    let mut start = vec![0usize; n + 2];
    for e in src {
        start[key(e) + 1] += 1;
    }
    for i in 1..start.len() {
        start[i] += start[i - 1];
    }
    for e in src {
        let k = key(e);
        dst[start[k]] = *e;
        start[k] += 1;
    }
}
