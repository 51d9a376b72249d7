use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use super::{third_vertex, Color};
use crate::hypergraph::{Pair, TripleSystem};
use crate::{Error, Result};

const UNSET: Color = 0;

/// Derandomized 2-coloring by conditional expectations.
///
/// An `h1` edge with private pair `uv` and third vertex `w` is *split* when
/// `u, v` share a color and `w` has the other one; a uniform coloring splits
/// each edge with probability 1/4. Vertices are colored in ascending order,
/// each taking the color that maximizes the conditional expected number of
/// split edges (ties go to color 1), so at least `⌈|h1| / 4⌉` edges end up
/// split. Returns the coloring and `h3`, the split edges.
pub fn two_color_h3(h: &TripleSystem, h1: &[usize], private_pair: &BTreeMap<usize, Pair>) -> Result<(Vec<Color>, Vec<usize>)> {
    // (u, v, w) per h1 edge
    let roles: Vec<[usize; 3]> = h1
        .iter()
        .map(|i| {
            let p = private_pair[i];
            [p.lo(), p.hi(), third_vertex(h.edge(*i), p)]
        })
        .collect();
    let mut touching: Vec<Vec<usize>> = vec![Vec::new(); h.n()];
    for (e, r) in roles.iter().enumerate() {
        for &x in r {
            touching[x].push(e);
        }
    }

    let mut color = vec![UNSET; h.n()];
    for x in 0..h.n() {
        let mut best = (0u32, 1);
        for c in [1, 2] {
            color[x] = c;
            let score: u32 = touching[x].iter().map(|&e| scaled_split_chance(&roles[e], &color)).sum();
            if c == 1 || score > best.0 {
                best = (score, c);
            }
        }
        color[x] = best.1;
    }

    let h3: Vec<usize> = h1
        .iter()
        .zip(&roles)
        .filter(|(_, r)| scaled_split_chance(r, &color) == 8)
        .map(|(&i, _)| i)
        .collect();
    if 4 * h3.len() < h1.len() {
        return Err(Error::GuaranteeViolated(format!("|h3| = {} < |h1| / 4 = {} / 4", h3.len(), h1.len())));
    }
    Ok((color, h3))
}

/// `8 · P(edge split | current partial coloring)`.
fn scaled_split_chance(&[u, v, w]: &[usize; 3], color: &[Color]) -> u32 {
    let free = [u, v, w].iter().filter(|&&x| color[x] == UNSET).count() as u32;
    let consistent = [(1, 1, 2), (2, 2, 1)]
        .iter()
        .filter(|&&(a, b, c)| {
            [(u, a), (v, b), (w, c)].iter().all(|&(x, want)| color[x] == UNSET || color[x] == want)
        })
        .count() as u32;
    consistent << (3 - free)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decompose::split_h1_h2;

    #[test]
    fn single_edge_is_split() {
        let h = TripleSystem::from_edges(3, [[0, 1, 2]]).unwrap();
        let s = split_h1_h2(&h);
        let (color, h3) = two_color_h3(&h, &s.h1, &s.private_pair).unwrap();
        assert_eq!(color, vec![1, 1, 2]);
        assert_eq!(h3, vec![0]);
    }

    #[test]
    fn empty_h1() {
        let h = TripleSystem::complete(4);
        let (color, h3) = two_color_h3(&h, &[], &BTreeMap::new()).unwrap();
        assert_eq!(color.len(), 4);
        assert!(h3.is_empty());
    }

    #[test]
    fn expectation_starts_at_a_quarter() {
        let color = vec![UNSET; 3];
        assert_eq!(scaled_split_chance(&[0, 1, 2], &color), 2);
    }
}
