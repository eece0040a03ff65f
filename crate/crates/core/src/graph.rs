//! Simple undirected graphs and the distance and degree invariants computed
//! on them.
//!
//! Adjacency is stored as one bit row per vertex (a single `u64` when
//! `n <= 64`), so a BFS level expansion is an OR over the rows of the
//! current frontier.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};

/// A simple undirected graph on vertices `0..n`.
///
/// Values are immutable once built; edits such as [`Graph::with_toggled`]
/// return a new graph.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    words: usize,
    adj: Vec<u64>,
    degrees: Vec<u32>,
    edge_count: usize,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate pairs collapse.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::empty(n);
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            g.set_edge(u, v, true);
        }
        Ok(g)
    }

    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        let words = n.div_ceil(64).max(1);
        Self {
            n,
            words,
            adj: vec![0; n * words],
            degrees: vec![0; n],
            edge_count: 0,
        }
    }

    pub fn path(n: usize) -> Self {
        let mut g = Self::empty(n);
        for v in 1..n {
            g.set_edge(v - 1, v, true);
        }
        g
    }

    /// The cycle `C_n`; requires `n >= 3`.
    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::TooFewVertices { what: "cycle", n, min: 3 });
        }
        let mut g = Self::path(n);
        g.set_edge(0, n - 1, true);
        Ok(g)
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Self::empty(n);
        for v in 0..n {
            for u in 0..v {
                g.set_edge(u, v, true);
            }
        }
        g
    }

    /// The star `K_{1,n-1}` centred on vertex 0.
    pub fn star(n: usize) -> Self {
        let mut g = Self::empty(n);
        for v in 1..n {
            g.set_edge(0, v, true);
        }
        g
    }

    pub(crate) fn set_edge(&mut self, u: usize, v: usize, present: bool) {
        debug_assert!(u != v && u < self.n && v < self.n);
        if self.has_edge(u, v) == present {
            return;
        }
        let (wu, bu) = (u / 64, 1u64 << (u % 64));
        let (wv, bv) = (v / 64, 1u64 << (v % 64));
        self.adj[u * self.words + wv] ^= bv;
        self.adj[v * self.words + wu] ^= bu;
        if present {
            self.degrees[u] += 1;
            self.degrees[v] += 1;
            self.edge_count += 1;
        } else {
            self.degrees[u] -= 1;
            self.degrees[v] -= 1;
            self.edge_count -= 1;
        }
    }

    /// Returns a copy with the edge `uv` added if absent or removed if present.
    pub fn with_toggled(&self, u: usize, v: usize) -> Result<Self> {
        let n = self.n;
        for w in [u, v] {
            if w >= n {
                return Err(Error::VertexOutOfRange { vertex: w, n });
            }
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        let mut g = self.clone();
        g.set_edge(u, v, !self.has_edge(u, v));
        Ok(g)
    }

    /// Relabels vertices so that old vertex `v` becomes `perm[v]`.
    ///
    /// # Panics
    ///
    /// Panics if `perm` is not a permutation of `0..n`.
    pub fn relabel(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.n, "permutation length must equal order");
        let mut seen = vec![false; self.n];
        for &p in perm {
            assert!(p < self.n && !seen[p], "not a permutation");
            seen[p] = true;
        }
        let mut g = Self::empty(self.n);
        for (u, v) in self.edges() {
            g.set_edge(perm[u], perm[v], true);
        }
        g
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    /// Number of edges.
    #[inline]
    pub fn size(&self) -> usize {
        self.edge_count
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.degrees[v] as usize
    }

    /// Neighborhood of `v` as a bit set, 64 vertices per word.
    #[inline]
    pub fn row(&self, v: usize) -> &[u64] {
        &self.adj[v * self.words..(v + 1) * self.words]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        set_bits(self.row(v))
    }

    /// Edges `(u, v)` with `u < v`, ordered by `u` then `v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| self.neighbors(u).filter(move |&v| v > u).map(move |v| (u, v)))
    }

    /// Minimum degree; 0 for the empty graph.
    pub fn min_degree(&self) -> usize {
        self.degrees.iter().copied().min().unwrap_or(0) as usize
    }

    pub fn max_degree(&self) -> usize {
        self.degrees.iter().copied().max().unwrap_or(0) as usize
    }

    /// Degrees sorted ascending.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut seq: Vec<usize> = self.degrees.iter().map(|&d| d as usize).collect();
        seq.sort_unstable();
        seq
    }

    /// Whether every vertex is reachable from vertex 0.
    pub fn is_connected(&self) -> Result<bool> {
        if self.n == 0 {
            return Err(Error::EmptyGraph);
        }
        let mut bfs = Bfs::new(self);
        Ok(bfs.run(self, 0, |_, _| {}) == self.n)
    }

    /// BFS distance between every pair. Fails on disconnected input.
    pub fn all_pairs_distances(&self) -> Result<DistanceMatrix> {
        let n = self.n;
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        let mut data = vec![0u32; n * n];
        let mut bfs = Bfs::new(self);
        for (s, row) in data.chunks_exact_mut(n).enumerate() {
            let reached = bfs.run(self, s, |v, d| row[v] = d);
            if reached != n {
                let missing = bfs.first_unvisited(n);
                return Err(Error::Disconnected(s, missing));
            }
        }
        Ok(DistanceMatrix { n, data })
    }

    fn require_two_vertices(&self, what: &'static str) -> Result<()> {
        if self.n < 2 {
            return Err(Error::TooFewVertices { what, n: self.n, min: 2 });
        }
        Ok(())
    }

    /// `D(G)`, the largest shortest-path distance.
    pub fn diameter(&self) -> Result<usize> {
        self.require_two_vertices("diameter")?;
        Ok(self.all_pairs_distances()?.diameter())
    }

    /// `mu(G)`, the mean distance over the `n(n-1)/2` unordered pairs.
    pub fn average_distance(&self) -> Result<f64> {
        self.require_two_vertices("average distance")?;
        Ok(self.all_pairs_distances()?.average())
    }

    /// `R(G)`: the sum over edges `uv` of `1/sqrt(d(u) d(v))`. Zero when edgeless.
    ///
    /// Edges are grouped by their degree pair first, so graphs with few
    /// distinct degrees are summed with only a handful of roundings.
    pub fn randic_index(&self) -> f64 {
        let mut classes: BTreeMap<(usize, usize), u64> = BTreeMap::new();
        for (u, v) in self.edges() {
            let (a, b) = (self.degree(u), self.degree(v));
            *classes.entry((a.min(b), a.max(b))).or_default() += 1;
        }
        let (mut sum, mut carry) = (0.0f64, 0.0f64);
        for ((a, b), count) in classes {
            let term = count as f64 / ((a * b) as f64).sqrt();
            let t = sum + term;
            carry += if sum.abs() >= term.abs() { (sum - t) + term } else { (term - t) + sum };
            sum = t;
        }
        sum + carry
    }

    /// Every invariant at once. Distance fields are `None` unless the graph
    /// is connected with at least two vertices.
    pub fn invariant_report(&self) -> InvariantReport {
        let n = self.n;
        let is_connected = n > 0 && self.is_connected().unwrap_or(false);
        let (diameter, avg_distance) = if is_connected && n >= 2 {
            let dist = self.all_pairs_distances().expect("connected graph has all distances");
            (Some(dist.diameter()), Some(dist.average()))
        } else {
            (None, None)
        };
        InvariantReport {
            n,
            m: self.size(),
            min_degree: self.min_degree(),
            degree_sequence: self.degree_sequence(),
            randic: self.randic_index(),
            diameter,
            avg_distance,
            is_connected,
        }
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

/// Reusable BFS scratch space.
struct Bfs {
    visited: Vec<u64>,
    frontier: Vec<u64>,
    next: Vec<u64>,
}

impl Bfs {
    fn new(g: &Graph) -> Self {
        Self {
            visited: vec![0; g.words],
            frontier: vec![0; g.words],
            next: vec![0; g.words],
        }
    }

    /// Calls `visit(v, depth)` for every vertex reachable from `source`
    /// and returns how many there were.
    fn run(&mut self, g: &Graph, source: usize, mut visit: impl FnMut(usize, u32)) -> usize {
        self.visited.fill(0);
        self.frontier.fill(0);
        self.visited[source / 64] |= 1 << (source % 64);
        self.frontier[source / 64] |= 1 << (source % 64);
        visit(source, 0);
        let mut reached = 1;
        let mut depth = 0;
        loop {
            depth += 1;
            self.next.fill(0);
            for v in set_bits(&self.frontier) {
                for (acc, w) in self.next.iter_mut().zip(g.row(v)) {
                    *acc |= w;
                }
            }
            let mut any = false;
            for ((nx, vis), fr) in self.next.iter_mut().zip(&mut self.visited).zip(&mut self.frontier) {
                *nx &= !*vis;
                *vis |= *nx;
                *fr = *nx;
                any |= *nx != 0;
            }
            if !any {
                return reached;
            }
            for v in set_bits(&self.frontier) {
                visit(v, depth);
                reached += 1;
            }
        }
    }

    fn first_unvisited(&self, n: usize) -> usize {
        (0..n).find(|&v| self.visited[v / 64] >> (v % 64) & 1 == 0).unwrap_or(n)
    }
}

/// Symmetric matrix of shortest-path lengths with zero diagonal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    data: Vec<u32>,
}

impl DistanceMatrix {
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn get(&self, u: usize, v: usize) -> usize {
        self.data[u * self.n + v] as usize
    }

    pub fn row(&self, u: usize) -> &[u32] {
        &self.data[u * self.n..(u + 1) * self.n]
    }

    pub fn diameter(&self) -> usize {
        self.data.iter().copied().max().unwrap_or(0) as usize
    }

    /// Sum over unordered pairs.
    pub fn total(&self) -> u64 {
        self.data.iter().map(|&d| d as u64).sum::<u64>() / 2
    }

    /// Mean over unordered pairs; `NaN` when `n < 2`.
    pub fn average(&self) -> f64 {
        let pairs = self.n * self.n.saturating_sub(1) / 2;
        self.total() as f64 / pairs as f64
    }
}

/// Per-graph invariants.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct InvariantReport {
    pub n: usize,
    pub m: usize,
    pub min_degree: usize,
    pub degree_sequence: Vec<usize>,
    pub randic: f64,
    pub diameter: Option<usize>,
    pub avg_distance: Option<f64>,
    pub is_connected: bool,
}

/// Indices of set bits across a word slice, lowest first.
pub(crate) fn set_bits(words: &[u64]) -> impl Iterator<Item = usize> + '_ {
    words.iter().enumerate().flat_map(|(i, &w)| {
        let mut rest = w;
        std::iter::from_fn(move || {
            if rest == 0 {
                return None;
            }
            let b = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            Some(i * 64 + b)
        })
    })
}
