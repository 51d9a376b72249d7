//! Lower-bound constructions.

use crate::graph::{BipartiteGraph, Graph};
use crate::hypergraph::TripleSystem;
use crate::{Error, Result};

/// The triple system of all triangles of `g`.
///
/// If `g` is `C_{2k+1}`-free this system has no Berge cycle of length
/// `2k + 1`, so `t_{2k+1}(n) ≤ ex₃(n, C⁽³⁾_{2k+1})`.
pub fn triangle_hypergraph(g: &Graph) -> TripleSystem {
    TripleSystem::from_edges(g.n(), g.triangle_list()).expect("triangles are valid triples")
}

/// Doubles every right-part vertex of `b`: the edge `(a, j)` becomes the
/// triple `{a, m + j, m + n + j}`, where `m + j` is the original right
/// vertex and `m + n + j` its clone. The result has `m + 2n` vertices and
/// `e(b)` triples.
pub fn double_one_side(b: &BipartiteGraph) -> TripleSystem {
    let (m, n) = (b.left(), b.right());
    TripleSystem::from_edges(m + 2 * n, b.edges().iter().map(|&(a, j)| [a, m + j, m + n + j]))
        .expect("clone labels are in range")
}

/// Balanced blow-up of `C_5` on `n` vertices: class `c` is
/// `c·n/5 .. (c+1)·n/5`, and consecutive classes (cyclically) are joined
/// completely.
pub fn blowup_c5(n: usize) -> Result<Graph> {
    if n % 5 != 0 {
        return Err(Error::ParameterOutOfRange { name: "blow-up order", value: n, expected: "a multiple of 5" });
    }
    let s = n / 5;
    let mut g = Graph::new(n);
    for c in 0..5 {
        let d = (c + 1) % 5;
        for i in 0..s {
            for j in 0..s {
                g.add_edge(c * s + i, d * s + j)?;
            }
        }
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::detect::{count_cycles, find_berge_cycle, find_cycle};

    #[test]
    fn triangle_hypergraph_examples() {
        assert_eq!(triangle_hypergraph(&Graph::complete(4)).len(), 4);
        assert!(triangle_hypergraph(&Graph::cycle(5)).is_empty());
        let bowtie = Graph::from_edges(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]).unwrap();
        assert_eq!(triangle_hypergraph(&bowtie).edges(), &[[0, 1, 2], [2, 3, 4]]);
    }

    #[test]
    fn doubling_examples() {
        let single = BipartiteGraph::from_edges(1, 1, [(0, 0)]).unwrap();
        let h = double_one_side(&single);
        assert_eq!((h.n(), h.edges()), (3, &[[0, 1, 2]][..]));

        let c6 = BipartiteGraph::even_cycle(6).unwrap();
        let h = double_one_side(&c6);
        assert_eq!((h.n(), h.len()), (9, 6));
        assert_eq!(find_berge_cycle(&h, 4).unwrap(), None);
        // clone of right vertex j sits at m + n + j
        assert!(h.edges().contains(&[0, 3, 6]));
    }

    #[test]
    fn blowup_examples() {
        let c5 = blowup_c5(5).unwrap();
        assert_eq!(c5, Graph::cycle(5));
        assert_eq!(count_cycles(&c5, 5).unwrap(), 1);
        let g = blowup_c5(10).unwrap();
        assert_eq!(g.edge_count(), 20);
        assert_eq!(count_cycles(&g, 5).unwrap(), 32);
        assert_eq!(find_cycle(&g, 3).unwrap(), None);
        assert!(blowup_c5(7).is_err());
    }
}
