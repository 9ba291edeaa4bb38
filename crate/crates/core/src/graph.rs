//! Immutable simple undirected graphs stored as adjacency bit rows.

use std::collections::VecDeque;
use std::fmt;

use crate::bitset::{popcount_and, test_bit, words_for, BitIter, VertexSet};
use crate::{Error, Result};

/// Largest order accepted for invariant computation.
pub const MAX_ORDER: usize = 2048;

/// A finite simple undirected graph on vertices `0..n`.
///
/// Row `v` has bit `u` set iff `uv` is an edge. Rows are symmetric and
/// loop-free; every constructor maintains this.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    words: usize,
    rows: Vec<u64>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    ///
    /// # Panics
    /// Panics if `n > MAX_ORDER`.
    pub fn empty(n: usize) -> Self {
        assert!(n <= MAX_ORDER, "graph order {n} exceeds {MAX_ORDER}");
        let words = words_for(n);
        Graph {
            n,
            words,
            rows: vec![0; n * words],
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if n > MAX_ORDER {
            return Err(Error::UnsupportedSize {
                n,
                limit: MAX_ORDER,
            });
        }
        let mut b = GraphBuilder::new(n);
        for &(u, v) in edges {
            b.add_edge(u, v)?;
        }
        Ok(b.build())
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.rows
            .iter()
            .map(|w| w.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    /// Neighbourhood bit row of `v`.
    #[inline]
    pub fn row(&self, v: usize) -> &[u64] {
        &self.rows[v * self.words..(v + 1) * self.words]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        test_bit(self.row(u), v)
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    /// Degrees sorted in non-increasing order.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d = self.degrees();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        BitIter::new(self.row(v))
    }

    pub fn neighbor_set(&self, v: usize) -> VertexSet {
        VertexSet::from_words(self.n, self.row(v))
    }

    /// Number of neighbours of `v` inside `set`.
    #[inline]
    pub fn degree_into(&self, v: usize, set: &VertexSet) -> usize {
        popcount_and(self.row(v), set.words()) as usize
    }

    /// Edges `(u, v)` with `u < v`, ordered by `u` then `v`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m());
        for u in 0..self.n {
            out.extend(self.neighbors(u).filter(|&v| v > u).map(|v| (u, v)));
        }
        out
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn is_complete(&self) -> bool {
        (0..self.n).all(|v| self.degree(v) + 1 == self.n)
    }

    /// Subgraph induced by `s`, relabelled `0..|s|` in ascending order of
    /// the original ids.
    pub fn induced(&self, s: &VertexSet) -> Graph {
        let keep: Vec<usize> = s.iter().filter(|&v| v < self.n).collect();
        self.induced_ordered(&keep)
    }

    /// Subgraph induced by `order`, where new vertex `i` is `order[i]`.
    pub(crate) fn induced_ordered(&self, order: &[usize]) -> Graph {
        let mut h = Graph::empty(order.len());
        for (i, &u) in order.iter().enumerate() {
            for (j, &v) in order.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    h.set_edge(i, j);
                }
            }
        }
        h
    }

    pub fn remove_vertex(&self, v: usize) -> Graph {
        let mut s = self.vertex_set();
        s.remove(v);
        self.induced(&s)
    }

    /// Relabelled copy: vertex `v` of `self` becomes `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut h = Graph::empty(self.n);
        for (u, v) in self.edges() {
            h.set_edge(perm[u], perm[v]);
        }
        h
    }

    /// Vertex-disjoint union; `other`'s vertices are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let mut h = Graph::empty(self.n + other.n);
        for (u, v) in self.edges() {
            h.set_edge(u, v);
        }
        for (u, v) in other.edges() {
            h.set_edge(u + self.n, v + self.n);
        }
        h
    }

    #[inline]
    pub(crate) fn set_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.n && v < self.n);
        let w = self.words;
        self.rows[u * w + v / 64] |= 1u64 << (v % 64);
        self.rows[v * w + u / 64] |= 1u64 << (u % 64);
    }

    /// Vertices reachable from `start` using only vertices of `within`.
    pub fn reach_within(&self, start: usize, within: &VertexSet) -> VertexSet {
        let mut seen = VertexSet::empty(self.n);
        if !within.contains(start) {
            return seen;
        }
        seen.insert(start);
        let mut frontier = seen.clone();
        while !frontier.is_empty() {
            let mut next = VertexSet::empty(self.n);
            for v in frontier.iter() {
                next.union_words(self.row(v));
            }
            next.intersect_words(within.words());
            next.subtract_words(seen.words());
            seen.union_words(next.words());
            frontier = next;
        }
        seen
    }

    /// True iff `n >= 1` and every vertex is reachable from vertex 0.
    pub fn is_connected(&self) -> bool {
        self.n >= 1 && self.reach_within(0, &self.vertex_set()).len() == self.n
    }

    /// True iff the subgraph induced by `s` is connected (and nonempty).
    pub fn is_connected_within(&self, s: &VertexSet) -> bool {
        match s.first() {
            Some(v) => self.reach_within(v, s).len() == s.len(),
            None => false,
        }
    }

    /// Connected components, each listed as a vertex set, ordered by least
    /// vertex.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut left = self.vertex_set();
        let mut out = Vec::new();
        while let Some(v) = left.first() {
            let c = self.reach_within(v, &left);
            left.subtract_words(c.words());
            out.push(c);
        }
        out
    }

    /// Breadth-first distances from `src`; unreachable vertices get `None`.
    pub fn bfs_distances(&self, src: usize) -> Vec<Option<u32>> {
        let mut dist = vec![None; self.n];
        dist[src] = Some(0);
        let mut queue = VecDeque::from([src]);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap_or(0);
            for v in self.neighbors(u) {
                if dist[v].is_none() {
                    dist[v] = Some(du + 1);
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    pub fn distance_matrix(&self) -> Result<DistanceMatrix> {
        if self.n == 0 {
            return Err(Error::EmptyGraph);
        }
        let mut d = Vec::with_capacity(self.n * self.n);
        for s in 0..self.n {
            for x in self.bfs_distances(s) {
                d.push(x.ok_or(Error::Disconnected)?);
            }
        }
        Ok(DistanceMatrix { n: self.n, d })
    }

    /// Greatest distance between two vertices (0 for `K1`).
    pub fn diameter(&self) -> Result<usize> {
        Ok(self.distance_matrix()?.max() as usize)
    }

    /// Two-colouring if the graph is bipartite.
    pub fn bipartition(&self) -> Option<Vec<bool>> {
        let mut colour: Vec<Option<bool>> = vec![None; self.n];
        for s in 0..self.n {
            if colour[s].is_some() {
                continue;
            }
            colour[s] = Some(false);
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                let cu = colour[u].unwrap_or(false);
                for v in self.neighbors(u) {
                    match colour[v] {
                        None => {
                            colour[v] = Some(!cu);
                            queue.push_back(v);
                        }
                        Some(cv) if cv == cu => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        Some(colour.into_iter().map(|c| c.unwrap_or(false)).collect())
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

/// Free-function form of [`Graph::induced`].
pub fn induced(g: &Graph, s: &VertexSet) -> Graph {
    g.induced(s)
}

/// Incremental construction of a [`Graph`].
#[derive(Debug, Clone)]
pub struct GraphBuilder {
    g: Graph,
}

impl GraphBuilder {
    pub fn new(n: usize) -> Self {
        GraphBuilder { g: Graph::empty(n) }
    }

    /// Adds edge `uv`; repeated edges are idempotent, loops are rejected.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<&mut Self> {
        let n = self.g.n;
        for x in [u, v] {
            if x >= n {
                return Err(Error::VertexOutOfRange { vertex: x, n });
            }
        }
        if u == v {
            return Err(Error::Loop(u));
        }
        self.g.set_edge(u, v);
        Ok(self)
    }

    pub fn add_path(&mut self, vertices: &[usize]) -> Result<&mut Self> {
        for w in vertices.windows(2) {
            self.add_edge(w[0], w[1])?;
        }
        Ok(self)
    }

    pub fn add_clique(&mut self, vertices: &[usize]) -> Result<&mut Self> {
        for (i, &u) in vertices.iter().enumerate() {
            for &v in &vertices[i + 1..] {
                self.add_edge(u, v)?;
            }
        }
        Ok(self)
    }

    pub fn build(self) -> Graph {
        self.g
    }
}

/// All-pairs shortest-path lengths of a connected graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<u32>,
}

impl DistanceMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, x: usize, y: usize) -> u32 {
        self.d[x * self.n + y]
    }

    pub fn row(&self, x: usize) -> &[u32] {
        &self.d[x * self.n..(x + 1) * self.n]
    }

    pub fn max(&self) -> u32 {
        self.d.iter().copied().max().unwrap_or(0)
    }
}
