//! Constructive versions of the counting arguments behind the Berge-cycle
//! upper bounds.
//!
//! A triple system `H` is split by pair multiplicity:
//!
//! - `G₂`: pairs covered at least twice.
//! - `h2`: triples whose three pairs are all covered at least twice.
//! - `h1`: the rest; each has a *private pair* covered only by itself.
//! - `h3 ⊆ h1`: triples whose private pair is monochromatic in a 2-coloring
//!   while the third vertex has the other color (`|h3| ≥ |h1| / 4`).
//! - `h4 ⊆ h3`: third vertex `w` with `max(deg(w,u), deg(w,v)) ≥ 3`; the
//!   private pairs of `h4` form `G₄`.
//! - `h5 = h3 ∖ h4`, and `h6 ⊆ h5` linear with `|h6| ≥ |h5| / 3`.
//!
//! Pair degrees are always measured in the full system `H`.

mod coloring;
mod tripartition;

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

pub use coloring::two_color_h3;
pub use tripartition::{rainbow_tripartition, Tripartition};

use crate::detect::{is_free, ForbiddenSpec, Host};
use crate::graph::Graph;
use crate::hypergraph::{pairs_of, Pair, PairDegreeMap, TripleSystem};
use crate::{Error, Result};

/// Vertex color in the 2-coloring, `1` or `2`.
pub type Color = u8;

/// Every stage of the decomposition of one triple system.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub source: TripleSystem,
    pub g2: Graph,
    pub h1: Vec<usize>,
    pub h2: Vec<usize>,
    /// Private pair of every `h1` edge.
    pub private_pair: BTreeMap<usize, Pair>,
    /// Color (1 or 2) of every vertex.
    pub coloring: Vec<Color>,
    pub h3: Vec<usize>,
    pub h4: Vec<usize>,
    pub h5: Vec<usize>,
    pub h6: Vec<usize>,
    pub g4: Graph,
}

/// `h1` with private pairs, and `h2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiplicitySplit {
    pub h1: Vec<usize>,
    pub private_pair: BTreeMap<usize, Pair>,
    pub h2: Vec<usize>,
}

/// `G₂`: the graph of pairs with `deg(u, v) ≥ 2`.
pub fn build_g2(h: &TripleSystem) -> Graph {
    h.shadow_graph(2)
}

/// Splits edges into `h1` (with the lexicographically least multiplicity-1
/// pair as private pair) and `h2` (all pairs covered at least twice).
pub fn split_h1_h2(h: &TripleSystem) -> MultiplicitySplit {
    let deg = h.shadow_pairs();
    let mut split = MultiplicitySplit { h1: Vec::new(), private_pair: BTreeMap::new(), h2: Vec::new() };
    for (i, &t) in h.edges().iter().enumerate() {
        match pairs_of(t).into_iter().find(|p| deg.get(p.lo(), p.hi()) == 1) {
            Some(p) => {
                split.h1.push(i);
                split.private_pair.insert(i, p);
            }
            None => split.h2.push(i),
        }
    }
    split
}

fn third_vertex(t: [usize; 3], p: Pair) -> usize {
    t.into_iter().find(|&x| !p.contains(x)).expect("pair lies inside its triple")
}

/// Splits `h3` into `h4` (third vertex `w` with `max(deg(w,u), deg(w,v)) ≥ 3`
/// for private pair `uv`) and `h5`.
pub fn split_h4_h5(h: &TripleSystem, h3: &[usize], private_pair: &BTreeMap<usize, Pair>) -> (Vec<usize>, Vec<usize>) {
    let deg = h.shadow_pairs();
    h3.iter().partition(|&&i| {
        let p = private_pair[&i];
        let w = third_vertex(h.edge(i), p);
        deg.get(w, p.lo()).max(deg.get(w, p.hi())) >= 3
    })
}

/// `G₄`: the private pairs of the `h4` edges.
pub fn g4_graph(h: &TripleSystem, h4: &[usize], private_pair: &BTreeMap<usize, Pair>) -> Graph {
    let mut g = Graph::new(h.n());
    for i in h4 {
        let p = private_pair[i];
        g.add_edge(p.lo(), p.hi()).expect("private pairs are in range");
    }
    g
}

/// Greedy linear subfamily of `h5` in ascending edge order.
///
/// Each `h5` edge has a private pair and two pairs of multiplicity at most 2,
/// so it shares a pair with at most two other edges and the greedy choice
/// keeps at least a third of them.
pub fn greedy_linear(h: &TripleSystem, h5: &[usize], private_pair: &BTreeMap<usize, Pair>) -> Result<Vec<usize>> {
    let deg = h.shadow_pairs();
    for &i in h5 {
        let Some(&p) = private_pair.get(&i) else {
            return Err(Error::Precondition { edge: i, reason: "edge has no private pair" });
        };
        if deg.get(p.lo(), p.hi()) != 1 {
            return Err(Error::Precondition { edge: i, reason: "private pair is covered more than once" });
        }
        if pairs_of(h.edge(i)).iter().any(|q| deg.get(q.lo(), q.hi()) > 2) {
            return Err(Error::Precondition { edge: i, reason: "a pair is covered more than twice" });
        }
    }
    let mut taken: Vec<[usize; 3]> = Vec::new();
    let mut h6 = Vec::new();
    let mut order = h5.to_vec();
    order.sort_unstable();
    for i in order {
        let t = h.edge(i);
        if taken.iter().all(|s| shared(*s, t) <= 1) {
            taken.push(t);
            h6.push(i);
        }
    }
    if 3 * h6.len() < h5.len() {
        return Err(Error::GuaranteeViolated(format!("|h6| = {} < |h5| / 3 = {} / 3", h6.len(), h5.len())));
    }
    Ok(h6)
}

fn shared(a: [usize; 3], b: [usize; 3]) -> usize {
    a.iter().filter(|x| b.contains(x)).count()
}

/// Runs the whole pipeline and checks its quantitative guarantees.
pub fn decompose(h: &TripleSystem) -> Result<Decomposition> {
    let g2 = build_g2(h);
    let MultiplicitySplit { h1, private_pair, h2 } = split_h1_h2(h);
    let (coloring, h3) = two_color_h3(h, &h1, &private_pair)?;
    let (h4, h5) = split_h4_h5(h, &h3, &private_pair);
    let g4 = g4_graph(h, &h4, &private_pair);
    let h6 = greedy_linear(h, &h5, &private_pair)?;
    let d = Decomposition { source: h.clone(), g2, h1, h2, private_pair, coloring, h3, h4, h5, h6, g4 };
    d.verify()?;
    Ok(d)
}

impl Decomposition {
    /// Re-checks every structural invariant and counting guarantee.
    pub fn verify(&self) -> Result<()> {
        let fail = |what: &str| Err(Error::GuaranteeViolated(format!("decomposition: {what}")));
        let h = &self.source;
        let deg: PairDegreeMap = h.shadow_pairs();

        let mut all: Vec<usize> = self.h1.iter().chain(&self.h2).copied().collect();
        all.sort_unstable();
        if all != (0..h.len()).collect::<Vec<_>>() {
            return fail("h1 and h2 do not partition the edges");
        }
        if self.h2.iter().any(|&i| pairs_of(h.edge(i)).iter().any(|p| deg.get(p.lo(), p.hi()) < 2)) {
            return fail("an h2 edge has a pair covered once");
        }
        if self.h1.iter().any(|i| self.private_pair.get(i).is_none_or(|p| deg.get(p.lo(), p.hi()) != 1)) {
            return fail("an h1 edge lacks a private pair");
        }
        if self.h3.iter().any(|i| !self.h1.contains(i)) {
            return fail("h3 is not inside h1");
        }
        for &i in &self.h3 {
            let p = self.private_pair[&i];
            let w = third_vertex(h.edge(i), p);
            let c = self.coloring[p.lo()];
            if self.coloring[p.hi()] != c || self.coloring[w] == c {
                return fail("an h3 edge is not split by the coloring");
            }
        }
        let mut h45: Vec<usize> = self.h4.iter().chain(&self.h5).copied().collect();
        h45.sort_unstable();
        let mut h3 = self.h3.clone();
        h3.sort_unstable();
        if h45 != h3 {
            return fail("h4 and h5 do not partition h3");
        }
        if self.h6.iter().any(|i| !self.h5.contains(i)) {
            return fail("h6 is not inside h5");
        }
        if !h.subsystem(&self.h6).is_linear() {
            return fail("h6 is not linear");
        }
        if self.h1.len() > 4 * self.h3.len() {
            return fail("|h1| > 4 |h3|");
        }
        if self.h5.len() > 3 * self.h6.len() {
            return fail("|h5| > 3 |h6|");
        }
        if self.g4.edge_count() != self.h4.len() {
            return fail("|G4| differs from |h4|");
        }
        if h.len() > self.h2.len() + 4 * self.h4.len() + 12 * self.h6.len() {
            return fail("|H| > |h2| + 4|h4| + 12|h6|");
        }
        Ok(())
    }
}

/// Checks `t(G) ≤ (ℓ − 3) e(G) / 3` for a `C_ℓ`-free graph, exactly.
///
/// Errors if `g` contains `C_ℓ`. A `false` return would contradict the
/// triangle-count lemma and signals a bug.
pub fn check_triangle_lemma(g: &Graph, len: usize) -> Result<bool> {
    if !is_free(Host::Graph(g), &ForbiddenSpec::cycle(len))? {
        return Err(Error::NotCycleFree(len));
    }
    Ok(3 * g.triangle_count() <= (len - 3) * g.edge_count())
}
