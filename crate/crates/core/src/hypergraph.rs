//! 3-uniform hypergraphs (triple systems), pair degrees and Berge-cycle
//! witnesses.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use crate::graph::Graph;
use crate::{Error, Result};

/// Unordered vertex pair stored as `(lo, hi)` with `lo < hi`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Pair {
    lo: u32,
    hi: u32,
}

impl Pair {
    /// Canonical pair of two distinct vertices.
    pub fn new(u: usize, v: usize) -> Self {
        debug_assert_ne!(u, v);
        let (lo, hi) = if u < v { (u, v) } else { (v, u) };
        Pair { lo: lo as u32, hi: hi as u32 }
    }

    pub fn lo(self) -> usize {
        self.lo as usize
    }

    pub fn hi(self) -> usize {
        self.hi as usize
    }

    /// Packed key: `lo` in the high half. Orders like `(lo, hi)`.
    pub fn key(self) -> u64 {
        (self.lo as u64) << 32 | self.hi as u64
    }

    pub fn from_key(key: u64) -> Self {
        Pair { lo: (key >> 32) as u32, hi: key as u32 }
    }

    pub fn contains(self, v: usize) -> bool {
        self.lo() == v || self.hi() == v
    }
}

impl fmt::Debug for Pair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.lo, self.hi)
    }
}

impl From<(usize, usize)> for Pair {
    fn from((u, v): (usize, usize)) -> Self {
        Pair::new(u, v)
    }
}

/// The three pairs of a sorted triple, lexicographically ascending.
pub fn pairs_of(t: [usize; 3]) -> [Pair; 3] {
    [Pair::new(t[0], t[1]), Pair::new(t[0], t[2]), Pair::new(t[1], t[2])]
}

/// A 3-uniform hypergraph on `0..n`.
///
/// Every edge is stored sorted ascending and the edge list is sorted
/// lexicographically and deduplicated, so edge indices are canonical.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TripleSystem {
    n: usize,
    edges: Vec<[usize; 3]>,
}

impl TripleSystem {
    pub fn empty(n: usize) -> Self {
        TripleSystem { n, edges: Vec::new() }
    }

    /// Builds a system from triples in any vertex order; repeats collapse.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = [usize; 3]>,
    {
        let mut list = Vec::new();
        for e in edges {
            let mut t = e;
            t.sort_unstable();
            if t[0] == t[1] || t[1] == t[2] {
                return Err(Error::DegenerateTriple(e));
            }
            if t[2] >= n {
                return Err(Error::VertexOutOfRange { vertex: t[2], n });
            }
            list.push(t);
        }
        list.sort_unstable();
        list.dedup();
        Ok(TripleSystem { n, edges: list })
    }

    /// All `C(n, 3)` triples on `n` vertices.
    pub fn complete(n: usize) -> Self {
        let mut edges = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                for c in b + 1..n {
                    edges.push([a, b, c]);
                }
            }
        }
        TripleSystem { n, edges }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `|H|`.
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn edges(&self) -> &[[usize; 3]] {
        &self.edges
    }

    pub fn edge(&self, i: usize) -> [usize; 3] {
        self.edges[i]
    }

    /// Index of a triple given in any vertex order.
    pub fn index_of(&self, triple: [usize; 3]) -> Option<usize> {
        let mut t = triple;
        t.sort_unstable();
        self.edges.binary_search(&t).ok()
    }

    /// Subsystem made of the edges at `indices` (same vertex set).
    pub fn subsystem(&self, indices: &[usize]) -> TripleSystem {
        let mut edges: Vec<_> = indices.iter().map(|&i| self.edges[i]).collect();
        edges.sort_unstable();
        edges.dedup();
        TripleSystem { n: self.n, edges }
    }

    /// Pair multiplicities `deg(u, v)`.
    pub fn shadow_pairs(&self) -> PairDegreeMap {
        let mut counts = BTreeMap::new();
        for &t in &self.edges {
            for p in pairs_of(t) {
                *counts.entry(p.key()).or_insert(0) += 1;
            }
        }
        PairDegreeMap { counts }
    }

    /// True iff every two edges share at most one vertex.
    pub fn is_linear(&self) -> bool {
        self.shadow_pairs().max_multiplicity() <= 1
    }

    /// The shadow as a simple graph: pairs covered at least `min` times.
    pub fn shadow_graph(&self, min: usize) -> Graph {
        let shadow = self.shadow_pairs();
        let mut g = Graph::new(self.n);
        for (p, d) in shadow.iter() {
            if d >= min {
                g.add_edge(p.lo(), p.hi()).expect("shadow pairs are in range");
            }
        }
        g
    }

    /// Indices of edges containing both `u` and `v`, ascending.
    pub fn edges_containing(&self, u: usize, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.edges
            .iter()
            .enumerate()
            .filter(move |(_, t)| t.contains(&u) && t.contains(&v))
            .map(|(i, _)| i)
    }
}

impl fmt::Debug for TripleSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TripleSystem(n={}, {:?})", self.n, self.edges)
    }
}

/// Multiplicity of every covered pair; uncovered pairs are absent.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct PairDegreeMap {
    counts: BTreeMap<u64, usize>,
}

impl PairDegreeMap {
    /// `deg(u, v)`, zero when uncovered.
    pub fn get(&self, u: usize, v: usize) -> usize {
        if u == v {
            return 0;
        }
        self.counts.get(&Pair::new(u, v).key()).copied().unwrap_or(0)
    }

    /// Covered pairs with multiplicities, ascending by pair.
    pub fn iter(&self) -> impl Iterator<Item = (Pair, usize)> + '_ {
        self.counts.iter().map(|(&k, &d)| (Pair::from_key(k), d))
    }

    /// Number of covered pairs.
    pub fn len(&self) -> usize {
        self.counts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    /// Sum of all multiplicities; equals `3 |H|`.
    pub fn total(&self) -> usize {
        self.counts.values().sum()
    }

    pub fn max_multiplicity(&self) -> usize {
        self.counts.values().copied().max().unwrap_or(0)
    }
}

/// Core vertices `v_0..v_{ℓ−1}` and distinct hyperedges `H_0..H_{ℓ−1}` with
/// `{v_i, v_{i+1 mod ℓ}} ⊆ H_i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BergeCycleWitness {
    pub core: Vec<usize>,
    /// Indices into the host [`TripleSystem`].
    pub hyperedges: Vec<usize>,
}

impl BergeCycleWitness {
    pub fn len(&self) -> usize {
        self.core.len()
    }

    pub fn is_empty(&self) -> bool {
        self.core.is_empty()
    }

    /// Checks the witness against its host.
    pub fn validate(&self, host: &TripleSystem) -> Result<()> {
        let l = self.core.len();
        if l < 2 || self.hyperedges.len() != l {
            return Err(Error::InvalidWitness("core and hyperedge sequences must have equal length ≥ 2"));
        }
        if !all_distinct(&self.core) {
            return Err(Error::InvalidWitness("core vertices repeat"));
        }
        if !all_distinct(&self.hyperedges) {
            return Err(Error::InvalidWitness("hyperedges repeat"));
        }
        for i in 0..l {
            let h = self.hyperedges[i];
            if h >= host.len() {
                return Err(Error::InvalidWitness("hyperedge index out of range"));
            }
            let t = host.edge(h);
            if !t.contains(&self.core[i]) || !t.contains(&self.core[(i + 1) % l]) {
                return Err(Error::InvalidWitness("consecutive core pair not inside its hyperedge"));
            }
        }
        Ok(())
    }
}

pub(crate) fn all_distinct(xs: &[usize]) -> bool {
    xs.iter().enumerate().all(|(i, x)| !xs[..i].contains(x))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn ts(n: usize, e: &[[usize; 3]]) -> TripleSystem {
        TripleSystem::from_edges(n, e.iter().copied()).unwrap()
    }

    #[test]
    fn shadow_examples() {
        let two = ts(4, &[[0, 1, 2], [0, 1, 3]]);
        let got: Vec<_> = two.shadow_pairs().iter().map(|(p, d)| (p.lo(), p.hi(), d)).collect();
        assert_eq!(got, vec![(0, 1, 2), (0, 2, 1), (0, 3, 1), (1, 2, 1), (1, 3, 1)]);
        assert!(ts(3, &[]).shadow_pairs().is_empty());
        let one = ts(3, &[[2, 0, 1]]).shadow_pairs();
        assert_eq!((one.get(0, 1), one.get(0, 2), one.get(2, 1), one.len()), (1, 1, 1, 3));
    }

    #[test]
    fn linearity_examples() {
        assert!(ts(5, &[[0, 1, 2], [2, 3, 4]]).is_linear());
        assert!(!ts(4, &[[0, 1, 2], [0, 1, 3]]).is_linear());
        assert!(ts(0, &[]).is_linear());
    }

    #[test]
    fn edges_are_canonical() {
        let h = ts(5, &[[4, 3, 2], [2, 1, 0], [0, 2, 1]]);
        assert_eq!(h.edges(), &[[0, 1, 2], [2, 3, 4]]);
        assert_eq!(h.index_of([3, 4, 2]), Some(1));
        assert!(matches!(
            TripleSystem::from_edges(3, [[0, 0, 1]]),
            Err(Error::DegenerateTriple(_))
        ));
        assert!(matches!(
            TripleSystem::from_edges(3, [[0, 1, 3]]),
            Err(Error::VertexOutOfRange { vertex: 3, n: 3 })
        ));
    }

    #[test]
    fn witness_validation() {
        let h = ts(7, &[[1, 2, 4], [2, 3, 5], [1, 3, 6]]);
        let ok = BergeCycleWitness { core: vec![1, 2, 3], hyperedges: vec![0, 1, 2] };
        // edges sort to [1,2,4], [1,3,6], [2,3,5]
        assert!(ok.validate(&h).is_err());
        let ok = BergeCycleWitness { core: vec![1, 2, 3], hyperedges: vec![0, 2, 1] };
        assert_eq!(ok.validate(&h), Ok(()));
        let repeated = BergeCycleWitness { core: vec![1, 2, 3], hyperedges: vec![0, 2, 0] };
        assert!(repeated.validate(&h).is_err());
    }
}
