//! Simple undirected graphs and bipartite graphs on dense vertex indices.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::set::VertexSet;
use crate::{Error, Result};

/// Simple undirected graph on vertices `0..n` with one adjacency bitset per
/// vertex.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    words: usize,
    rows: Vec<u64>,
    edges: usize,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Self {
        let words = n.div_ceil(64).max(1);
        Graph { n, words, rows: vec![0; words * n], edges: 0 }
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::new(n);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Cycle `0 1 … n−1 0`.
    pub fn cycle(n: usize) -> Self {
        let mut g = Graph::new(n);
        if n >= 3 {
            for v in 0..n {
                g.insert(v, (v + 1) % n);
            }
        }
        g
    }

    /// Path `0 1 … n−1`.
    pub fn path(n: usize) -> Self {
        let mut g = Graph::new(n);
        for v in 1..n {
            g.insert(v - 1, v);
        }
        g
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                g.insert(u, v);
            }
        }
        g
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of edges, `e(G)`.
    pub fn edge_count(&self) -> usize {
        self.edges
    }

    /// Adds `uv`; returns `false` if it was already present.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<bool> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::Loop(u));
        }
        Ok(self.insert(u, v))
    }

    /// Removes `uv`; returns `false` if it was absent.
    pub fn remove_edge(&mut self, u: usize, v: usize) -> bool {
        if u >= self.n || v >= self.n || !self.has_edge(u, v) {
            return false;
        }
        self.rows[u * self.words + v / 64] &= !(1 << (v % 64));
        self.rows[v * self.words + u / 64] &= !(1 << (u % 64));
        self.edges -= 1;
        true
    }

    fn insert(&mut self, u: usize, v: usize) -> bool {
        if self.has_edge(u, v) {
            return false;
        }
        self.rows[u * self.words + v / 64] |= 1 << (v % 64);
        self.rows[v * self.words + u / 64] |= 1 << (u % 64);
        self.edges += 1;
        true
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        }
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.rows[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    pub fn degree(&self, v: usize) -> usize {
        self.row_words(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Raw adjacency words of `v`.
    pub fn row_words(&self, v: usize) -> &[u64] {
        &self.rows[v * self.words..(v + 1) * self.words]
    }

    /// Neighborhood `N(v)` as a vertex set.
    pub fn row<S: VertexSet>(&self, v: usize) -> S {
        S::from_words(self.row_words(v), self.n)
    }

    pub fn rows<S: VertexSet>(&self) -> Vec<S> {
        (0..self.n).map(|v| self.row(v)).collect()
    }

    /// Neighbors of `v` in ascending order.
    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.row_words(v).iter().enumerate().flat_map(|(i, &w)| {
            let mut w = w;
            core::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(i * 64 + b)
            })
        })
    }

    /// Edges `(u, v)` with `u < v`, lexicographically ascending.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| self.neighbors(u).filter(move |&v| v > u).map(move |v| (u, v)))
    }

    /// Vertex sets of all triangles, each once, ascending.
    pub fn triangle_list(&self) -> Vec<[usize; 3]> {
        let mut out = Vec::new();
        for (u, v) in self.edges() {
            for w in self.common_neighbors(u, v) {
                if w > v {
                    out.push([u, v, w]);
                }
            }
        }
        out
    }

    /// `t(G)`.
    pub fn triangle_count(&self) -> usize {
        self.edges()
            .map(|(u, v)| {
                let mut c = 0;
                for (i, (a, b)) in self.row_words(u).iter().zip(self.row_words(v)).enumerate() {
                    // only count the third vertex above v
                    let above = if i * 64 > v {
                        u64::MAX
                    } else if (i + 1) * 64 <= v + 1 {
                        0
                    } else {
                        !((2u64 << (v % 64)) - 1)
                    };
                    c += (a & b & above).count_ones() as usize;
                }
                c
            })
            .sum()
    }

    /// Common neighbors of `u` and `v`, ascending.
    pub fn common_neighbors(&self, u: usize, v: usize) -> impl Iterator<Item = usize> + '_ {
        let (ru, rv) = (self.row_words(u), self.row_words(v));
        ru.iter().zip(rv).enumerate().flat_map(|(i, (&a, &b))| {
            let mut w = a & b;
            core::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let bit = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(i * 64 + bit)
            })
        })
    }

    /// `e(G[N(x)])`, the number of edges inside the neighborhood of `x`,
    /// which equals the number of triangles through `x`.
    pub fn neighborhood_edge_count(&self, x: usize) -> usize {
        self.neighbors(x)
            .map(|u| self.common_neighbors(u, x).filter(|&w| w > u).count())
            .sum()
    }

    /// Subgraph on the same vertex set keeping the edges accepted by `keep`.
    pub fn filter_edges(&self, mut keep: impl FnMut(usize, usize) -> bool) -> Graph {
        let mut g = Graph::new(self.n);
        for (u, v) in self.edges() {
            if keep(u, v) {
                g.insert(u, v);
            }
        }
        g
    }

    /// Vertices reachable from `start` inside `allowed` (which must contain `start`).
    pub fn component<S: VertexSet>(rows: &[S], start: usize, allowed: &S) -> S {
        let n = rows.len();
        let mut seen = S::empty(n);
        seen.insert(start);
        let mut frontier = seen.clone();
        while !frontier.is_empty() {
            let mut next = S::empty(n);
            for v in frontier.members() {
                next.union_with(&rows[v]);
            }
            next = next.intersect(allowed).difference(&seen);
            seen.union_with(&next);
            frontier = next;
        }
        seen
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, ", self.n)?;
        f.debug_list().entries(self.edges()).finish()?;
        write!(f, ")")
    }
}

/// Bipartite graph with parts `0..m` (left) and `0..n` (right).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BipartiteGraph {
    m: usize,
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl BipartiteGraph {
    pub fn new(m: usize, n: usize) -> Self {
        BipartiteGraph { m, n, edges: Vec::new() }
    }

    /// Builds from `(left, right)` pairs; duplicates collapse.
    pub fn from_edges<I>(m: usize, n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut list = Vec::new();
        for (a, b) in edges {
            if a >= m {
                return Err(Error::VertexOutOfRange { vertex: a, n: m });
            }
            if b >= n {
                return Err(Error::VertexOutOfRange { vertex: b, n });
            }
            list.push((a, b));
        }
        list.sort_unstable();
        list.dedup();
        Ok(BipartiteGraph { m, n, edges: list })
    }

    /// The even cycle `C_len` with parts of size `len / 2`:
    /// left `i` is joined to right `i` and right `i + 1 (mod len / 2)`.
    pub fn even_cycle(len: usize) -> Result<Self> {
        if len < 4 || len % 2 == 1 {
            return Err(Error::ParameterOutOfRange {
                name: "cycle length",
                value: len,
                expected: "even and at least 4",
            });
        }
        let h = len / 2;
        BipartiteGraph::from_edges(h, h, (0..h).flat_map(|i| [(i, i), (i, (i + 1) % h)]))
    }

    pub fn left(&self) -> usize {
        self.m
    }

    pub fn right(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges `(left, right)`, lexicographically ascending.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.edges.binary_search(&(a, b)).is_ok()
    }

    /// The same graph on `m + n` vertices, right vertex `j` becoming `m + j`.
    pub fn to_graph(&self) -> Graph {
        let mut g = Graph::new(self.m + self.n);
        for &(a, b) in &self.edges {
            g.insert(a, self.m + b);
        }
        g
    }
}

impl fmt::Debug for BipartiteGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BipartiteGraph({}+{}, {:?})", self.m, self.n, self.edges)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k4_minus_edge() -> Graph {
        let mut g = Graph::complete(4);
        g.remove_edge(2, 3);
        g
    }

    #[test]
    fn rejects_loops_and_out_of_range() {
        assert_eq!(Graph::from_edges(3, [(1, 1)]), Err(Error::Loop(1)));
        assert_eq!(
            Graph::from_edges(3, [(0, 3)]),
            Err(Error::VertexOutOfRange { vertex: 3, n: 3 })
        );
    }

    #[test]
    fn adjacency_is_symmetric_and_deduplicated() {
        let g = Graph::from_edges(4, [(0, 1), (1, 0), (2, 3)]).unwrap();
        assert_eq!(g.edge_count(), 2);
        assert!(g.has_edge(1, 0) && g.has_edge(0, 1));
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1), (2, 3)]);
    }

    #[test]
    fn triangle_examples() {
        assert_eq!(Graph::complete(4).triangle_list().len(), 4);
        assert!(Graph::cycle(5).triangle_list().is_empty());
        assert_eq!(k4_minus_edge().triangle_list(), vec![[0, 1, 2], [0, 1, 3]]);
    }

    #[test]
    fn triangle_count_spans_words() {
        let mut g = Graph::new(130);
        for (u, v) in [(0, 64), (64, 129), (0, 129), (1, 2), (2, 70), (1, 70), (63, 64), (0, 63)] {
            g.add_edge(u, v).unwrap();
        }
        assert_eq!(g.triangle_count(), 3);
        assert_eq!(g.triangle_list().len(), 3);
    }

    #[test]
    fn even_cycle_bipartite() {
        let c6 = BipartiteGraph::even_cycle(6).unwrap();
        assert_eq!((c6.left(), c6.right(), c6.edge_count()), (3, 3, 6));
        let g = c6.to_graph();
        assert!((0..6).all(|v| g.degree(v) == 2));
        assert!(BipartiteGraph::even_cycle(5).is_err());
    }
}
