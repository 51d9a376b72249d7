//! Exact extremal numbers by branch-and-bound.
//!
//! The candidate items of a universe (vertex pairs, left/right pairs, or
//! triples) are decided one by one in lexicographic order, include first.
//! Adding an item is only checked for forbidden structures through that
//! item, since every supported family is closed under taking subgraphs.
//! [`oracle_solve`] is an unpruned enumeration used to validate [`solve`].

mod engine;
mod oracle;
mod symmetry;

use alloc::format;
use alloc::vec::Vec;
use core::time::Duration;

use crate::bounds::{BaseEstimate, Quantity};
use crate::detect::{is_free_of_all, ForbiddenKind, ForbiddenSpec, Host};
use crate::graph::{BipartiteGraph, Graph};
use crate::hypergraph::TripleSystem;
use crate::{Error, Result};

pub use oracle::oracle_solve;

/// The objects searched over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Universe {
    /// Graphs on `n` labeled vertices.
    Graph { n: usize },
    /// Bipartite graphs with parts of sizes `m` and `n`.
    Bipartite { m: usize, n: usize },
    /// 3-uniform hypergraphs on `n` vertices.
    Triples { n: usize },
}

impl Universe {
    /// Number of vertices of the underlying host.
    pub fn vertices(&self) -> usize {
        match *self {
            Universe::Graph { n } | Universe::Triples { n } => n,
            Universe::Bipartite { m, n } => m + n,
        }
    }

    /// Number of candidate items.
    pub fn slot_count(&self) -> usize {
        match *self {
            Universe::Graph { n } => n * n.saturating_sub(1) / 2,
            Universe::Bipartite { m, n } => m * n,
            Universe::Triples { n } => n * n.saturating_sub(1) * n.saturating_sub(2) / 6,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Objective {
    Edges,
    /// Number of triangles; graph universes only.
    Triangles,
}

/// Search limits. A limit of zero is rejected; `None` means unlimited.
/// The time limit is only enforced with the `std` feature.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Budget {
    pub max_nodes: Option<u64>,
    pub max_time: Option<Duration>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchProblem {
    pub universe: Universe,
    pub forbidden: Vec<ForbiddenSpec>,
    pub objective: Objective,
    /// Only linear triple systems (triple universes only).
    pub linear: bool,
    pub budget: Budget,
}

impl SearchProblem {
    pub fn new(universe: Universe, forbidden: Vec<ForbiddenSpec>, objective: Objective) -> Self {
        SearchProblem { universe, forbidden, objective, linear: false, budget: Budget::default() }
    }

    pub fn linear(mut self, linear: bool) -> Self {
        self.linear = linear;
        self
    }

    pub fn with_budget(mut self, budget: Budget) -> Self {
        self.budget = budget;
        self
    }

    pub fn validate(&self) -> Result<()> {
        let triples = matches!(self.universe, Universe::Triples { .. });
        for spec in &self.forbidden {
            spec.validate()?;
            if spec.kind.is_hypergraph_kind() != triples {
                return Err(Error::InvalidProblem(format!("{spec} does not apply to this universe")));
            }
        }
        if self.objective == Objective::Triangles && !matches!(self.universe, Universe::Graph { .. }) {
            return Err(Error::InvalidProblem("the triangle objective needs a graph universe".into()));
        }
        if self.linear && !triples {
            return Err(Error::InvalidProblem("linearity only applies to triple universes".into()));
        }
        if self.budget.max_nodes == Some(0) || self.budget.max_time == Some(Duration::ZERO) {
            return Err(Error::InvalidProblem("the budget must be positive".into()));
        }
        Ok(())
    }

    /// The extremal quantity this problem computes, when it has a name.
    pub fn quantity(&self) -> Option<Quantity> {
        let [spec] = self.forbidden[..] else {
            return None;
        };
        let p = spec.parameter;
        Some(match (self.universe, spec.kind, self.objective, self.linear) {
            (Universe::Graph { n }, ForbiddenKind::Cycle, Objective::Edges, _) => Quantity::ExCycle { n, len: p },
            (Universe::Graph { n }, ForbiddenKind::Cycle, Objective::Triangles, _) => Quantity::Triangles { n, len: p },
            (Universe::Graph { n }, ForbiddenKind::Path, Objective::Edges, _) => Quantity::ExPath { n, order: p },
            (Universe::Graph { n }, ForbiddenKind::ThetaAtLeast, Objective::Edges, _) => {
                Quantity::ExTheta { n, order: p }
            }
            (Universe::Bipartite { m, n }, ForbiddenKind::Cycle, _, _) => Quantity::ExBipartiteCycle { m, n, len: p },
            (Universe::Bipartite { m, n }, ForbiddenKind::CyclesUpTo, _, _) => {
                Quantity::ExBipartiteGirth { m, n, len: p }
            }
            (Universe::Triples { n }, ForbiddenKind::Berge, _, false) => Quantity::ExBerge { n, len: p },
            (Universe::Triples { n }, ForbiddenKind::Berge, _, true) => Quantity::ExLinearBerge { n, len: p },
            _ => return None,
        })
    }
}

/// Universe size caps.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Vertex cap for graph and bipartite universes (at most 64).
    pub max_graph_vertices: usize,
    /// Vertex cap for triple universes (at most 64).
    pub max_triple_vertices: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { max_graph_vertices: 10, max_triple_vertices: 8 }
    }
}

/// Engine settings that do not change the answer.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchConfig {
    pub limits: Limits,
    /// Worker threads; values above 1 need the `std` feature.
    pub threads: usize,
    /// Depth at which the tree is cut into parallel tasks.
    pub split_depth: usize,
    /// Number of leading decisions subject to symmetry pruning; `None`
    /// picks 25 for graph universes and 40 for triple universes.
    pub symmetry_depth: Option<usize>,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig { limits: Limits::default(), threads: 1, split_depth: 8, symmetry_depth: None }
    }
}

/// An extremal object.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Extremal {
    Graph(Graph),
    Bipartite(BipartiteGraph),
    Triples(TripleSystem),
}

impl Extremal {
    pub fn host(&self) -> Host<'_> {
        match self {
            Extremal::Graph(g) => Host::Graph(g),
            Extremal::Bipartite(b) => Host::Bipartite(b),
            Extremal::Triples(h) => Host::Triples(h),
        }
    }

    pub fn edge_count(&self) -> usize {
        match self {
            Extremal::Graph(g) => g.edge_count(),
            Extremal::Bipartite(b) => b.edge_count(),
            Extremal::Triples(h) => h.len(),
        }
    }

    /// The object as a plain graph (bipartite right vertices shifted by
    /// `m`); `None` for triple systems.
    pub fn as_graph(&self) -> Option<Graph> {
        match self {
            Extremal::Graph(g) => Some(g.clone()),
            Extremal::Bipartite(b) => Some(b.to_graph()),
            Extremal::Triples(_) => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchResult {
    /// Best objective value found.
    pub value: u64,
    pub witness: Extremal,
    /// The search space was exhausted, so `value` is the extremal number.
    pub optimal: bool,
    pub nodes_explored: u64,
    /// Elapsed time; `None` without the `std` feature.
    pub wall_time: Option<Duration>,
}

impl SearchResult {
    /// Re-checks the witness: forbidden structures, linearity and value.
    pub fn verify(&self, problem: &SearchProblem) -> Result<()> {
        if !is_free_of_all(self.witness.host(), &problem.forbidden)? {
            return Err(Error::InvalidWitness("witness contains a forbidden structure"));
        }
        if let Extremal::Triples(h) = &self.witness {
            if problem.linear && !h.is_linear() {
                return Err(Error::InvalidWitness("witness is not linear"));
            }
        }
        let value = match problem.objective {
            Objective::Edges => self.witness.edge_count(),
            Objective::Triangles => self.witness.as_graph().map_or(0, |g| g.triangle_count()),
        };
        if value as u64 != self.value {
            return Err(Error::InvalidWitness("witness value differs from the reported value"));
        }
        Ok(())
    }

    /// The result as an exact inner value for a bound, when it is optimal
    /// and the problem names a quantity.
    pub fn as_base(&self, problem: &SearchProblem) -> Option<BaseEstimate> {
        if !self.optimal {
            return None;
        }
        Some(BaseEstimate::exact(problem.quantity()?, self.value))
    }
}

/// Solves `problem` with the default configuration.
pub fn solve(problem: &SearchProblem) -> Result<SearchResult> {
    solve_with(problem, &SearchConfig::default())
}

/// Solves `problem`. Running out of budget is not an error: the best object
/// found is returned with `optimal == false`.
pub fn solve_with(problem: &SearchProblem, config: &SearchConfig) -> Result<SearchResult> {
    problem.validate()?;
    let (cap, what) = match problem.universe {
        Universe::Triples { .. } => (config.limits.max_triple_vertices, "triple"),
        _ => (config.limits.max_graph_vertices, "graph"),
    };
    let vertices = problem.universe.vertices();
    if vertices > cap.min(64) {
        return Err(Error::UniverseTooLarge(format!(
            "{vertices} vertices exceed the {what} universe limit of {}",
            cap.min(64)
        )));
    }
    if config.threads == 0 {
        return Err(Error::InvalidProblem("at least one thread is needed".into()));
    }
    engine::run(problem, config)
}

/// Builds the object made of the given items.
pub(crate) fn assemble(universe: Universe, slots: &[[usize; 3]], chosen: &[usize]) -> Extremal {
    match universe {
        Universe::Graph { n } => {
            Extremal::Graph(Graph::from_edges(n, chosen.iter().map(|&i| (slots[i][0], slots[i][1]))).expect("valid slots"))
        }
        Universe::Bipartite { m, n } => Extremal::Bipartite(
            BipartiteGraph::from_edges(m, n, chosen.iter().map(|&i| (slots[i][0], slots[i][1] - m))).expect("valid slots"),
        ),
        Universe::Triples { n } => {
            Extremal::Triples(TripleSystem::from_edges(n, chosen.iter().map(|&i| slots[i])).expect("valid slots"))
        }
    }
}

/// Candidate items in lexicographic order. Graph items are `[u, v, NONE]`;
/// bipartite items use `m + j` for right vertex `j`.
pub(crate) fn slots(universe: Universe) -> Vec<[usize; 3]> {
    let mut out = Vec::with_capacity(universe.slot_count());
    match universe {
        Universe::Graph { n } => {
            for u in 0..n {
                for v in u + 1..n {
                    out.push([u, v, NONE]);
                }
            }
        }
        Universe::Bipartite { m, n } => {
            for a in 0..m {
                for j in 0..n {
                    out.push([a, m + j, NONE]);
                }
            }
        }
        Universe::Triples { n } => {
            for a in 0..n {
                for b in a + 1..n {
                    for c in b + 1..n {
                        out.push([a, b, c]);
                    }
                }
            }
        }
    }
    out
}

pub(crate) const NONE: usize = usize::MAX;

#[cfg(test)]
mod tests {
    use super::*;

    fn graph(n: usize, spec: ForbiddenSpec, objective: Objective) -> SearchProblem {
        SearchProblem::new(Universe::Graph { n }, alloc::vec![spec], objective)
    }

    #[test]
    fn validation() {
        let bad = SearchProblem::new(Universe::Graph { n: 4 }, alloc::vec![ForbiddenSpec::berge(3)], Objective::Edges);
        assert!(bad.validate().is_err());
        let bad = SearchProblem::new(Universe::Triples { n: 4 }, alloc::vec![], Objective::Triangles);
        assert!(bad.validate().is_err());
        let bad = graph(4, ForbiddenSpec::cycle(3), Objective::Edges).linear(true);
        assert!(bad.validate().is_err());
        let bad = graph(4, ForbiddenSpec::cycle(3), Objective::Edges).with_budget(Budget { max_nodes: Some(0), max_time: None });
        assert!(bad.validate().is_err());
        assert!(matches!(solve(&graph(11, ForbiddenSpec::cycle(4), Objective::Edges)), Err(Error::UniverseTooLarge(_))));
    }

    #[test]
    fn slot_orders() {
        assert_eq!(slots(Universe::Graph { n: 3 }), [[0, 1, NONE], [0, 2, NONE], [1, 2, NONE]]);
        assert_eq!(slots(Universe::Bipartite { m: 1, n: 2 }), [[0, 1, NONE], [0, 2, NONE]]);
        assert_eq!(slots(Universe::Triples { n: 4 }).len(), 4);
        assert_eq!(Universe::Triples { n: 8 }.slot_count(), 56);
    }

    #[test]
    fn quantities() {
        assert_eq!(
            graph(5, ForbiddenSpec::cycle(5), Objective::Triangles).quantity(),
            Some(Quantity::Triangles { n: 5, len: 5 })
        );
        let lin = SearchProblem::new(Universe::Triples { n: 5 }, alloc::vec![ForbiddenSpec::berge(5)], Objective::Edges).linear(true);
        assert_eq!(lin.quantity(), Some(Quantity::ExLinearBerge { n: 5, len: 5 }));
    }
}
