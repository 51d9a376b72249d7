use alloc::vec;
use alloc::vec::Vec;

use crate::graph::Graph;
use crate::set::{full, VertexSet, WideSet};
use crate::{Error, Result};

/// Largest host accepted by [`find_path_dp`].
pub const DP_MAX_VERTICES: usize = 24;

fn check_path_len(k: usize) -> Result<()> {
    if k >= 2 {
        Ok(())
    } else {
        Err(Error::ParameterOutOfRange { name: "path order", value: k, expected: "at least 2" })
    }
}

/// A path on exactly `k` vertices, found by depth-first search with
/// component-size pruning.
pub fn find_path(g: &Graph, k: usize) -> Result<Option<Vec<usize>>> {
    check_path_len(k)?;
    if k > g.n() {
        return Ok(None);
    }
    Ok(if g.n() <= 64 {
        path_in(&g.rows::<u64>(), k)
    } else {
        path_in(&g.rows::<WideSet>(), k)
    })
}

pub(crate) fn path_in<S: VertexSet>(rows: &[S], k: usize) -> Option<Vec<usize>> {
    let n = rows.len();
    let everything: S = full(n);
    let mut path = Vec::with_capacity(k);
    for start in 0..n {
        if Graph::component(rows, start, &everything).len() < k {
            continue;
        }
        path.clear();
        path.push(start);
        let mut used = S::empty(n);
        used.insert(start);
        if grow(rows, k, &everything, &mut path, &mut used) {
            return Some(path);
        }
    }
    None
}

fn grow<S: VertexSet>(rows: &[S], k: usize, everything: &S, path: &mut Vec<usize>, used: &mut S) -> bool {
    if path.len() == k {
        return true;
    }
    let x = *path.last().unwrap();
    let free = everything.difference(used);
    for y in rows[x].difference(used).members() {
        // the rest of the path lives in y's component of G - path
        if Graph::component(rows, y, &free).len() + path.len() < k {
            continue;
        }
        path.push(y);
        used.insert(y);
        if grow(rows, k, everything, path, used) {
            return true;
        }
        used.remove(y);
        path.pop();
    }
    false
}

/// Exact subset dynamic program: `ends[mask]` holds every vertex at which a
/// path visiting exactly `mask` can end. Only for `n ≤ 24`.
pub fn find_path_dp(g: &Graph, k: usize) -> Result<Option<Vec<usize>>> {
    check_path_len(k)?;
    let n = g.n();
    if n > DP_MAX_VERTICES {
        return Err(Error::UniverseTooLarge(alloc::format!(
            "subset DP needs n ≤ {DP_MAX_VERTICES}, got {n}"
        )));
    }
    if k > n {
        return Ok(None);
    }
    let rows: Vec<u64> = g.rows();
    let mut ends = vec![0u32; 1 << n];
    for v in 0..n {
        ends[1 << v] = 1 << v;
    }
    for mask in 1usize..1 << n {
        let e = ends[mask];
        if e == 0 {
            continue;
        }
        let size = mask.count_ones() as usize;
        if size == k {
            return Ok(Some(unwind(&ends, &rows, mask)));
        }
        for v in (e as u64).members() {
            for w in rows[v].difference(&(mask as u64)).members() {
                ends[mask | 1 << w] |= 1 << w;
            }
        }
    }
    Ok(None)
}

fn unwind(ends: &[u32], rows: &[u64], mask: usize) -> Vec<usize> {
    let mut mask = mask;
    let mut last = (ends[mask] as u64).first().unwrap();
    let mut path = vec![last];
    while mask.count_ones() > 1 {
        let prev_mask = mask & !(1 << last);
        let prev = (ends[prev_mask] as u64 & rows[last]).first().unwrap();
        path.push(prev);
        mask = prev_mask;
        last = prev;
    }
    path.reverse();
    path
}

/// True iff `seq` is a path of `g` on `seq.len()` distinct vertices.
pub fn is_path(g: &Graph, seq: &[usize]) -> bool {
    !seq.is_empty()
        && seq.iter().all(|&v| v < g.n())
        && crate::hypergraph::all_distinct(seq)
        && seq.windows(2).all(|w| g.has_edge(w[0], w[1]))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn two_triangles() -> Graph {
        Graph::from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap()
    }

    #[test]
    fn path_examples() {
        let p5 = Graph::path(5);
        assert_eq!(find_path(&p5, 5).unwrap(), Some(vec![0, 1, 2, 3, 4]));
        assert_eq!(find_path(&Graph::complete(3), 4).unwrap(), None);
        assert_eq!(find_path(&two_triangles(), 4).unwrap(), None);
        assert!(find_path(&p5, 1).is_err());
    }

    #[test]
    fn dp_agrees_on_examples() {
        for (g, k) in [(Graph::path(5), 5), (Graph::complete(3), 4), (two_triangles(), 4), (two_triangles(), 3)] {
            let dfs = find_path(&g, k).unwrap();
            let dp = find_path_dp(&g, k).unwrap();
            assert_eq!(dfs.is_some(), dp.is_some());
            if let Some(p) = dp {
                assert_eq!(p.len(), k);
                assert!(is_path(&g, &p));
            }
        }
        assert!(find_path_dp(&Graph::new(25), 2).is_err());
    }
}
