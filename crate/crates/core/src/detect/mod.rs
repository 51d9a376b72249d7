//! Exact detectors for forbidden structures, each returning a checkable
//! witness.
//!
//! All searches iterate vertices and edges in ascending order, so witnesses
//! are deterministic.

mod berge;
mod cycles;
mod paths;
mod theta;

use alloc::format;
use alloc::string::ToString;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

pub use berge::{find_berge_cycle, find_berge_cycle_through};
pub use cycles::{count_cycles, find_cycle, for_each_cycle, is_cycle};
pub use paths::{find_path, find_path_dp, is_path, DP_MAX_VERTICES};
pub use theta::{find_theta_at_least, ThetaWitness};

pub(crate) use berge::berge_in;
pub(crate) use cycles::{distance_avoiding_edge, has_path_with_edges};
pub(crate) use paths::path_in;
pub(crate) use theta::theta_in;

use crate::graph::{BipartiteGraph, Graph};
use crate::hypergraph::{BergeCycleWitness, TripleSystem};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ForbiddenKind {
    /// `C_ℓ`.
    Cycle,
    /// Every cycle of length `3..=ℓ`, i.e. girth greater than `ℓ`.
    CyclesUpTo,
    /// `P_k`, the path on `k` vertices.
    Path,
    /// Any theta graph of order at least `ℓ`.
    ThetaAtLeast,
    /// Berge cycle of length `ℓ` in a triple system.
    Berge,
    /// Berge cycles of every length `3..=ℓ`.
    BergeUpTo,
}

impl ForbiddenKind {
    pub fn name(self) -> &'static str {
        match self {
            ForbiddenKind::Cycle => "cycle",
            ForbiddenKind::CyclesUpTo => "cycles-up-to",
            ForbiddenKind::Path => "path",
            ForbiddenKind::ThetaAtLeast => "theta",
            ForbiddenKind::Berge => "berge",
            ForbiddenKind::BergeUpTo => "berge-up-to",
        }
    }

    /// Whether the kind lives in triple systems rather than graphs.
    pub fn is_hypergraph_kind(self) -> bool {
        matches!(self, ForbiddenKind::Berge | ForbiddenKind::BergeUpTo)
    }

    fn min_parameter(self) -> usize {
        match self {
            ForbiddenKind::Path => 2,
            ForbiddenKind::ThetaAtLeast => 4,
            _ => 3,
        }
    }
}

/// A forbidden structure and its size parameter.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ForbiddenSpec {
    pub kind: ForbiddenKind,
    pub parameter: usize,
}

impl ForbiddenSpec {
    pub fn new(kind: ForbiddenKind, parameter: usize) -> Result<Self> {
        let spec = ForbiddenSpec { kind, parameter };
        spec.validate()?;
        Ok(spec)
    }

    pub fn cycle(len: usize) -> Self {
        ForbiddenSpec { kind: ForbiddenKind::Cycle, parameter: len }
    }

    pub fn cycles_up_to(len: usize) -> Self {
        ForbiddenSpec { kind: ForbiddenKind::CyclesUpTo, parameter: len }
    }

    pub fn path(order: usize) -> Self {
        ForbiddenSpec { kind: ForbiddenKind::Path, parameter: order }
    }

    pub fn theta_at_least(order: usize) -> Self {
        ForbiddenSpec { kind: ForbiddenKind::ThetaAtLeast, parameter: order }
    }

    pub fn berge(len: usize) -> Self {
        ForbiddenSpec { kind: ForbiddenKind::Berge, parameter: len }
    }

    pub fn berge_up_to(len: usize) -> Self {
        ForbiddenSpec { kind: ForbiddenKind::BergeUpTo, parameter: len }
    }

    pub fn validate(&self) -> Result<()> {
        if self.parameter < self.kind.min_parameter() {
            return Err(Error::ParameterOutOfRange {
                name: self.kind.name(),
                value: self.parameter,
                expected: match self.kind.min_parameter() {
                    2 => "at least 2",
                    4 => "at least 4",
                    _ => "at least 3",
                },
            });
        }
        Ok(())
    }
}

impl fmt::Display for ForbiddenSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}={}", self.kind.name(), self.parameter)
    }
}

impl FromStr for ForbiddenSpec {
    type Err = Error;

    /// Parses `kind=parameter`, e.g. `cycle=4`, `cycles-up-to=4`, `path=4`,
    /// `theta=4`, `berge=3`, `berge-up-to=5`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidProblem(format!("cannot parse forbidden structure {s:?}"));
        let (kind, value) = s.split_once('=').ok_or_else(bad)?;
        let kind = match kind.trim() {
            "cycle" => ForbiddenKind::Cycle,
            "cycles-up-to" | "girth" => ForbiddenKind::CyclesUpTo,
            "path" => ForbiddenKind::Path,
            "theta" => ForbiddenKind::ThetaAtLeast,
            "berge" => ForbiddenKind::Berge,
            "berge-up-to" => ForbiddenKind::BergeUpTo,
            _ => return Err(bad()),
        };
        let parameter = value.trim().parse().map_err(|_| bad())?;
        ForbiddenSpec::new(kind, parameter)
    }
}

/// Any host a detector can run on.
#[derive(Clone, Copy, Debug)]
pub enum Host<'a> {
    Graph(&'a Graph),
    Bipartite(&'a BipartiteGraph),
    Triples(&'a TripleSystem),
}

impl Host<'_> {
    fn name(&self) -> &'static str {
        match self {
            Host::Graph(_) => "graph",
            Host::Bipartite(_) => "bipartite graph",
            Host::Triples(_) => "triple system",
        }
    }
}

/// Certificate that a host contains a forbidden structure. Vertex indices of
/// bipartite hosts follow [`BipartiteGraph::to_graph`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Witness {
    Cycle(Vec<usize>),
    Path(Vec<usize>),
    Theta(ThetaWitness),
    Berge(BergeCycleWitness),
}

impl Witness {
    /// Re-checks the witness against its host.
    pub fn validate(&self, host: Host<'_>) -> Result<()> {
        let owned;
        let graph = match host {
            Host::Graph(g) => Some(g),
            Host::Bipartite(b) => {
                owned = b.to_graph();
                Some(&owned)
            }
            Host::Triples(_) => None,
        };
        match (self, graph, host) {
            (Witness::Cycle(c), Some(g), _) if is_cycle(g, c) => Ok(()),
            (Witness::Path(p), Some(g), _) if is_path(g, p) => Ok(()),
            (Witness::Theta(t), Some(g), _) => t.validate(g),
            (Witness::Berge(b), None, Host::Triples(h)) => b.validate(h),
            _ => Err(Error::InvalidWitness("witness does not fit the host")),
        }
    }
}

/// First witness of `spec` in `host`, or `None` when the host is free.
pub fn find(host: Host<'_>, spec: &ForbiddenSpec) -> Result<Option<Witness>> {
    spec.validate()?;
    let mismatch = || Error::HostMismatch { spec: spec.to_string(), host: host.name() };
    match host {
        Host::Triples(h) => {
            if !spec.kind.is_hypergraph_kind() {
                return Err(mismatch());
            }
            let lengths = match spec.kind {
                ForbiddenKind::Berge => spec.parameter..=spec.parameter,
                _ => 3..=spec.parameter,
            };
            for len in lengths {
                if let Some(w) = find_berge_cycle(h, len)? {
                    return Ok(Some(Witness::Berge(w)));
                }
            }
            Ok(None)
        }
        Host::Graph(_) | Host::Bipartite(_) => {
            if spec.kind.is_hypergraph_kind() {
                return Err(mismatch());
            }
            let owned;
            let (g, bipartite) = match host {
                Host::Graph(g) => (g, false),
                Host::Bipartite(b) => {
                    owned = b.to_graph();
                    (&owned, true)
                }
                Host::Triples(_) => unreachable!(),
            };
            find_in_graph(g, spec, bipartite)
        }
    }
}

fn find_in_graph(g: &Graph, spec: &ForbiddenSpec, bipartite: bool) -> Result<Option<Witness>> {
    let l = spec.parameter;
    Ok(match spec.kind {
        ForbiddenKind::Cycle => {
            if bipartite && l % 2 == 1 {
                None
            } else {
                find_cycle(g, l)?.map(Witness::Cycle)
            }
        }
        ForbiddenKind::CyclesUpTo => {
            let mut found = None;
            for len in 3..=l {
                if bipartite && len % 2 == 1 {
                    continue;
                }
                if let Some(c) = find_cycle(g, len)? {
                    found = Some(Witness::Cycle(c));
                    break;
                }
            }
            found
        }
        ForbiddenKind::Path => find_path(g, l)?.map(Witness::Path),
        ForbiddenKind::ThetaAtLeast => find_theta_at_least(g, l)?.map(Witness::Theta),
        ForbiddenKind::Berge | ForbiddenKind::BergeUpTo => unreachable!(),
    })
}

/// True iff `host` contains no `spec` structure.
pub fn is_free(host: Host<'_>, spec: &ForbiddenSpec) -> Result<bool> {
    Ok(find(host, spec)?.is_none())
}

/// True iff `host` avoids every structure in `specs`.
pub fn is_free_of_all(host: Host<'_>, specs: &[ForbiddenSpec]) -> Result<bool> {
    for s in specs {
        if !is_free(host, s)? {
            return Ok(false);
        }
    }
    Ok(true)
}
