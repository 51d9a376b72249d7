//! Seeded random generators.
//!
//! Every generator draws from a ChaCha8 stream selected by `(seed, stream)`,
//! so a suite can give each case family its own stream and stay
//! reproducible when other families change.

use berge_forge_core::{BipartiteGraph, Graph, TripleSystem};
use rand::seq::{index, SliceRandom};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub type FuzzRng = ChaCha8Rng;

pub fn rng(seed: u64, stream: u64) -> FuzzRng {
    let mut r = ChaCha8Rng::seed_from_u64(seed);
    r.set_stream(stream);
    r
}

/// `G(n, p)`.
pub fn random_graph(rng: &mut FuzzRng, n: usize, p: f64) -> Graph {
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v).expect("in range");
            }
        }
    }
    g
}

/// Random bipartite graph with parts `m`, `n` and edge probability `p`.
pub fn random_bipartite(rng: &mut FuzzRng, m: usize, n: usize, p: f64) -> BipartiteGraph {
    let edges: Vec<(usize, usize)> = (0..m).flat_map(|a| (0..n).map(move |j| (a, j))).filter(|_| rng.gen_bool(p)).collect();
    BipartiteGraph::from_edges(m, n, edges).expect("in range")
}

/// `m` distinct triples on `n` vertices, uniformly among all such systems.
/// `m` is clamped to `C(n, 3)`.
pub fn random_triples(rng: &mut FuzzRng, n: usize, m: usize) -> TripleSystem {
    let all = TripleSystem::complete(n);
    let m = m.min(all.len());
    let picks = index::sample(rng, all.len(), m);
    TripleSystem::from_edges(n, picks.into_iter().map(|i| all.edge(i))).expect("in range")
}

/// Adds the triples on `n` vertices in random order, up to `limit` of
/// them, keeping each one for which `keep` accepts the grown system.
/// With a monotone property this gives a random maximal (or
/// `limit`-sized) system with the property.
pub fn grow_triples<E>(
    rng: &mut FuzzRng,
    n: usize,
    limit: usize,
    mut keep: impl FnMut(&TripleSystem) -> Result<bool, E>,
) -> Result<TripleSystem, E> {
    let all = TripleSystem::complete(n);
    let mut order: Vec<[usize; 3]> = all.edges().to_vec();
    order.shuffle(rng);
    let mut chosen: Vec<[usize; 3]> = Vec::new();
    let mut h = TripleSystem::empty(n);
    for t in order {
        if chosen.len() >= limit {
            break;
        }
        chosen.push(t);
        let next = TripleSystem::from_edges(n, chosen.iter().copied()).expect("in range");
        if keep(&next)? {
            h = next;
        } else {
            chosen.pop();
        }
    }
    Ok(h)
}

/// Graph counterpart of [`grow_triples`].
pub fn grow_graph<E>(rng: &mut FuzzRng, n: usize, limit: usize, mut keep: impl FnMut(&Graph) -> Result<bool, E>) -> Result<Graph, E> {
    let mut order: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    order.shuffle(rng);
    let mut g = Graph::new(n);
    for (u, v) in order {
        if g.edge_count() >= limit {
            break;
        }
        g.add_edge(u, v).expect("in range");
        if !keep(&g)? {
            g.remove_edge(u, v);
        }
    }
    Ok(g)
}
