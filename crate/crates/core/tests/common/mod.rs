//! Naive reference implementations: plain enumeration of vertex sequences
//! and edge assignments, sharing no code with the library detectors.
#![allow(dead_code)]

use berge_forge_core::{Graph, TripleSystem};

pub fn adjacency(g: &Graph) -> Vec<Vec<bool>> {
    let n = g.n();
    let mut a = vec![vec![false; n]; n];
    for (u, v) in g.edges() {
        a[u][v] = true;
        a[v][u] = true;
    }
    a
}

/// Calls `visit` on every sequence of `len` distinct vertices out of `n`.
fn sequences(n: usize, len: usize, visit: &mut dyn FnMut(&[usize]) -> bool) -> bool {
    fn go(n: usize, len: usize, seq: &mut Vec<usize>, visit: &mut dyn FnMut(&[usize]) -> bool) -> bool {
        if seq.len() == len {
            return visit(seq);
        }
        for v in 0..n {
            if !seq.contains(&v) {
                seq.push(v);
                if go(n, len, seq, visit) {
                    return true;
                }
                seq.pop();
            }
        }
        false
    }
    go(n, len, &mut Vec::new(), visit)
}

fn closes(a: &[Vec<bool>], seq: &[usize]) -> bool {
    let l = seq.len();
    (0..l).all(|i| a[seq[i]][seq[(i + 1) % l]])
}

pub fn has_cycle(g: &Graph, len: usize) -> bool {
    let a = adjacency(g);
    len >= 3 && len <= g.n() && sequences(g.n(), len, &mut |s| closes(&a, s))
}

pub fn count_cycles(g: &Graph, len: usize) -> u64 {
    let a = adjacency(g);
    let mut count = 0u64;
    if len >= 3 && len <= g.n() {
        sequences(g.n(), len, &mut |s| {
            if closes(&a, s) {
                count += 1;
            }
            false
        });
    }
    // every cycle is seen from each start in both directions
    count / (2 * len as u64).max(1)
}

pub fn has_path(g: &Graph, k: usize) -> bool {
    let a = adjacency(g);
    if k == 0 || k > g.n() {
        return k == 0;
    }
    sequences(g.n(), k, &mut |s| s.windows(2).all(|w| a[w[0]][w[1]]))
}

pub fn has_theta(g: &Graph, min_order: usize) -> bool {
    let a = adjacency(g);
    (min_order.max(4)..=g.n()).any(|len| {
        sequences(g.n(), len, &mut |s| {
            closes(&a, s) && (0..len).any(|i| (i + 2..len).any(|j| !(i == 0 && j == len - 1) && a[s[i]][s[j]]))
        })
    })
}

/// Berge cycle of length `len`: distinct core vertices and distinct
/// hyperedges, hyperedge `i` containing core vertices `i` and `i + 1`.
pub fn has_berge(h: &TripleSystem, len: usize) -> bool {
    if len < 2 || len > h.n() || len > h.len() {
        return false;
    }
    let edges = h.edges();
    sequences(h.n(), len, &mut |core| {
        fn assign(edges: &[[usize; 3]], core: &[usize], i: usize, used: &mut Vec<usize>) -> bool {
            if i == core.len() {
                return true;
            }
            let (a, b) = (core[i], core[(i + 1) % core.len()]);
            for (e, t) in edges.iter().enumerate() {
                if !used.contains(&e) && t.contains(&a) && t.contains(&b) {
                    used.push(e);
                    if assign(edges, core, i + 1, used) {
                        return true;
                    }
                    used.pop();
                }
            }
            false
        }
        assign(edges, core, 0, &mut Vec::new())
    })
}

pub fn triangles(g: &Graph) -> usize {
    let a = adjacency(g);
    let n = g.n();
    let mut t = 0;
    for x in 0..n {
        for y in x + 1..n {
            for z in y + 1..n {
                if a[x][y] && a[y][z] && a[x][z] {
                    t += 1;
                }
            }
        }
    }
    t
}

pub fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let mut edges = Vec::new();
    let mut bit = 0;
    for u in 0..n {
        for v in u + 1..n {
            if mask >> bit & 1 == 1 {
                edges.push((u, v));
            }
            bit += 1;
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

pub fn triples_from_picks(n: usize, picks: &[usize]) -> TripleSystem {
    let all = TripleSystem::complete(n);
    let chosen: Vec<[usize; 3]> = picks.iter().map(|&p| all.edge(p % all.len())).collect();
    TripleSystem::from_edges(n, chosen).unwrap()
}
