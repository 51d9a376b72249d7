use alloc::format;
use alloc::vec::Vec;

use super::{assemble, slots, Extremal, Objective, SearchProblem, SearchResult, Universe};
use crate::detect::is_free_of_all;
use crate::{Error, Result};

const MAX_GRAPH_VERTICES: usize = 7;
const MAX_TRIPLE_VERTICES: usize = 6;

/// Exhaustive enumeration of every object in the universe, checked with the
/// plain detectors. Graph universes up to 7 vertices, triple universes up
/// to 6. The witness is the optimal object with the smallest item mask.
pub fn oracle_solve(problem: &SearchProblem) -> Result<SearchResult> {
    problem.validate()?;
    let (vertices, cap) = match problem.universe {
        Universe::Triples { n } => (n, MAX_TRIPLE_VERTICES),
        u => (u.vertices(), MAX_GRAPH_VERTICES),
    };
    if vertices > cap {
        return Err(Error::UniverseTooLarge(format!("the oracle handles at most {cap} vertices here, got {vertices}")));
    }
    let items = slots(problem.universe);
    let mut best: Option<(u64, Extremal)> = None;
    let total = 1u64 << items.len();
    for mask in 0..total {
        let chosen: Vec<usize> = (0..items.len()).filter(|&i| mask >> i & 1 == 1).collect();
        let object = assemble(problem.universe, &items, &chosen);
        if let Extremal::Triples(h) = &object {
            if problem.linear && !h.is_linear() {
                continue;
            }
        }
        if !is_free_of_all(object.host(), &problem.forbidden)? {
            continue;
        }
        let value = match problem.objective {
            Objective::Edges => object.edge_count(),
            Objective::Triangles => object.as_graph().map_or(0, |g| g.triangle_count()),
        } as u64;
        if best.as_ref().is_none_or(|(v, _)| value > *v) {
            best = Some((value, object));
        }
    }
    let (value, witness) = best.expect("the empty object is always admissible");
    Ok(SearchResult { value, witness, optimal: true, nodes_explored: total, wall_time: None })
}
