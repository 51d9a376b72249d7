use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;
use core::ops::ControlFlow;

use crate::graph::Graph;
use crate::set::{full, VertexSet, WideSet};
use crate::{Error, Result};

const FAR: usize = usize::MAX;

pub(crate) fn check_cycle_len(len: usize) -> Result<()> {
    if len >= 3 {
        Ok(())
    } else {
        Err(Error::ParameterOutOfRange { name: "cycle length", value: len, expected: "at least 3" })
    }
}

/// A cycle of length exactly `len`, anchored at its smallest vertex and
/// oriented so the second vertex is smaller than the last.
pub fn find_cycle(g: &Graph, len: usize) -> Result<Option<Vec<usize>>> {
    check_cycle_len(len)?;
    let mut found = None;
    for_each_cycle(g, len, |c| {
        found = Some(c.to_vec());
        ControlFlow::Break(())
    })?;
    Ok(found)
}

/// Number of cycles of length exactly `len` (as subgraphs).
pub fn count_cycles(g: &Graph, len: usize) -> Result<u64> {
    check_cycle_len(len)?;
    let mut count = 0u64;
    for_each_cycle(g, len, |_| {
        count += 1;
        ControlFlow::Continue(())
    })?;
    Ok(count)
}

/// Visits every cycle of length `len` exactly once, in canonical form,
/// until `visit` breaks.
pub fn for_each_cycle<F>(g: &Graph, len: usize, visit: F) -> Result<()>
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    check_cycle_len(len)?;
    if g.n() <= 64 {
        let _ = cycles_in(&g.rows::<u64>(), len, visit);
    } else {
        let _ = cycles_in(&g.rows::<WideSet>(), len, visit);
    }
    Ok(())
}

pub(crate) fn cycles_in<S, F>(rows: &[S], len: usize, mut visit: F) -> ControlFlow<()>
where
    S: VertexSet,
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    let n = rows.len();
    if len > n {
        return ControlFlow::Continue(());
    }
    let mut allowed: S = full(n);
    let mut dist = vec![FAR; n];
    let mut path = Vec::with_capacity(len);
    for anchor in 0..n {
        allowed.remove(anchor);
        if allowed.len() + 1 < len || rows[anchor].intersect(&allowed).len() < 2 {
            continue;
        }
        distances(rows, anchor, &allowed, &mut dist);
        path.clear();
        path.push(anchor);
        let mut used = S::empty(n);
        used.insert(anchor);
        extend(rows, len, &allowed, &dist, &mut path, &mut used, &mut visit)?;
    }
    ControlFlow::Continue(())
}

fn extend<S, F>(
    rows: &[S],
    len: usize,
    allowed: &S,
    dist: &[usize],
    path: &mut Vec<usize>,
    used: &mut S,
    visit: &mut F,
) -> ControlFlow<()>
where
    S: VertexSet,
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    let x = *path.last().unwrap();
    let depth = path.len();
    if depth == len {
        if rows[x].contains(path[0]) && path[1] < x {
            return visit(path);
        }
        return ControlFlow::Continue(());
    }
    let next = rows[x].intersect(allowed).difference(used);
    for y in next.members() {
        // y still needs len - depth - 1 path edges plus the closing edge
        if dist[y] > len - depth {
            continue;
        }
        if depth + 1 == len && y < path[1] {
            continue;
        }
        path.push(y);
        used.insert(y);
        let flow = extend(rows, len, allowed, dist, path, used, visit);
        used.remove(y);
        path.pop();
        flow?;
    }
    ControlFlow::Continue(())
}

/// BFS distances from `source` inside `allowed ∪ {source}`.
pub(crate) fn distances<S: VertexSet>(rows: &[S], source: usize, allowed: &S, dist: &mut [usize]) {
    dist.iter_mut().for_each(|d| *d = FAR);
    dist[source] = 0;
    let mut queue = VecDeque::new();
    queue.push_back(source);
    while let Some(v) = queue.pop_front() {
        for w in rows[v].intersect(allowed).members() {
            if dist[w] == FAR {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
        }
    }
}

/// Is there a simple `u`–`v` path with exactly `edges` edges? The edge `uv`
/// itself, if present, is not used.
pub(crate) fn has_path_with_edges<S: VertexSet>(rows: &[S], u: usize, v: usize, edges: usize) -> bool {
    let n = rows.len();
    if edges == 0 || u == v {
        return false;
    }
    if edges == 1 {
        return rows[u].contains(v);
    }
    let mut allowed: S = full(n);
    allowed.remove(u);
    let mut dist = vec![FAR; n];
    distances(rows, v, &allowed, &mut dist);
    let mut used = S::empty(n);
    used.insert(u);
    path_search(rows, v, edges, u, &dist, &mut used)
}

fn path_search<S: VertexSet>(rows: &[S], target: usize, remaining: usize, x: usize, dist: &[usize], used: &mut S) -> bool {
    if remaining == 1 {
        return x != target && rows[x].contains(target);
    }
    let mut next = rows[x].difference(used);
    next.remove(target);
    for y in next.members() {
        if dist[y] > remaining - 1 {
            continue;
        }
        used.insert(y);
        let hit = path_search(rows, target, remaining - 1, y, dist, used);
        used.remove(y);
        if hit {
            return true;
        }
    }
    false
}

/// Shortest `u`–`v` distance avoiding the edge `uv`.
pub(crate) fn distance_avoiding_edge<S: VertexSet>(rows: &[S], u: usize, v: usize) -> usize {
    let n = rows.len();
    let mut dist = vec![FAR; n];
    dist[u] = 0;
    let mut queue = VecDeque::new();
    queue.push_back(u);
    while let Some(x) = queue.pop_front() {
        for w in rows[x].members() {
            if x == u && w == v {
                continue;
            }
            if dist[w] == FAR {
                dist[w] = dist[x] + 1;
                if w == v {
                    return dist[w];
                }
                queue.push_back(w);
            }
        }
    }
    FAR
}

/// True iff `seq` is a cycle of `g`: distinct vertices, consecutive (and
/// last-to-first) pairs adjacent, length at least 3.
pub fn is_cycle(g: &Graph, seq: &[usize]) -> bool {
    seq.len() >= 3
        && seq.iter().all(|&v| v < g.n())
        && crate::hypergraph::all_distinct(seq)
        && (0..seq.len()).all(|i| g.has_edge(seq[i], seq[(i + 1) % seq.len()]))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycle_examples() {
        let c5 = Graph::cycle(5);
        let found = find_cycle(&c5, 5).unwrap().unwrap();
        assert_eq!(found, vec![0, 1, 2, 3, 4]);
        assert!(is_cycle(&c5, &found));
        assert_eq!(find_cycle(&c5, 4).unwrap(), None);
        assert!(find_cycle(&Graph::complete(4), 3).unwrap().is_some());
        assert!(find_cycle(&c5, 2).is_err());
    }

    #[test]
    fn counts_in_complete_graphs() {
        // (n)_l / (2 l) labelled cycles
        assert_eq!(count_cycles(&Graph::complete(4), 3).unwrap(), 4);
        assert_eq!(count_cycles(&Graph::complete(4), 4).unwrap(), 3);
        assert_eq!(count_cycles(&Graph::complete(5), 5).unwrap(), 12);
        assert_eq!(count_cycles(&Graph::complete(6), 4).unwrap(), 45);
    }

    #[test]
    fn path_with_exact_length() {
        let rows = Graph::cycle(6).rows::<u64>();
        assert!(has_path_with_edges(&rows, 0, 1, 5));
        assert!(has_path_with_edges(&rows, 0, 1, 1));
        assert!(!has_path_with_edges(&rows, 0, 1, 3));
        assert!(has_path_with_edges(&rows, 0, 3, 3));
        assert_eq!(distance_avoiding_edge(&rows, 0, 1), 5);
    }

    #[test]
    fn wide_hosts_use_the_generic_path() {
        let g = Graph::cycle(70);
        assert_eq!(count_cycles(&g, 70).unwrap(), 1);
        assert_eq!(count_cycles(&g, 69).unwrap(), 0);
    }
}
