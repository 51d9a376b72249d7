use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::graph::Graph;
use crate::{Error, Result};

/// Balanced 3-partition with its number of rainbow triangles.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tripartition {
    /// Class (1, 2 or 3) of every vertex.
    pub classes: Vec<u8>,
    pub rainbow_count: usize,
}

impl Tripartition {
    /// Size of class `i ∈ {1, 2, 3}`.
    pub fn class_size(&self, i: u8) -> usize {
        self.classes.iter().filter(|&&c| c == i).count()
    }
}

/// Target size `⌊(n + i − 1) / 3⌋` of class `i`.
pub fn target_size(n: usize, i: usize) -> usize {
    (n + i - 1) / 3
}

/// Derandomized balanced 3-partition maximizing rainbow triangles.
///
/// The reference distribution is a uniformly random assignment with class
/// sizes exactly `⌊(n + i − 1) / 3⌋`. Vertices are placed in ascending order
/// into the class (with room left) that maximizes the conditional expected
/// number of rainbow triangles, ties to the lowest class. The initial
/// expectation is `6 c₁ c₂ c₃ / (n (n−1) (n−2)) · t(G) ≥ (2/9) t(G)` and
/// never decreases, so `rainbow_count ≥ (2/9) t(G)`; the bound is re-checked
/// in integers and a violation is reported as an error.
pub fn rainbow_tripartition(g: &Graph) -> Result<Tripartition> {
    let n = g.n();
    if n < 3 {
        return Err(Error::ParameterOutOfRange { name: "vertex count", value: n, expected: "at least 3" });
    }
    let triangles = g.triangle_list();
    let mut capacity = [target_size(n, 1), target_size(n, 2), target_size(n, 3)];
    let mut class = vec![None::<usize>; n];

    for v in 0..n {
        let remaining = n - v - 1;
        let mut best: Option<(u128, usize)> = None;
        for c in 0..3 {
            if capacity[c] == 0 {
                continue;
            }
            class[v] = Some(c);
            capacity[c] -= 1;
            let score = scaled_expectation(&triangles, &class, &capacity, remaining);
            capacity[c] += 1;
            if best.is_none_or(|(s, _)| score > s) {
                best = Some((score, c));
            }
        }
        let (_, c) = best.expect("capacities sum to the number of unplaced vertices");
        class[v] = Some(c);
        capacity[c] -= 1;
    }

    let classes: Vec<u8> = class.iter().map(|c| c.unwrap() as u8 + 1).collect();
    let rainbow_count = triangles
        .iter()
        .filter(|t| {
            let mut seen = [false; 3];
            t.iter().for_each(|&x| seen[classes[x] as usize - 1] = true);
            seen == [true; 3]
        })
        .count();
    if 9 * rainbow_count < 2 * triangles.len() {
        return Err(Error::GuaranteeViolated(format!(
            "rainbow triangles {} < 2/9 of {}",
            rainbow_count,
            triangles.len()
        )));
    }
    Ok(Tripartition { classes, rainbow_count })
}

fn falling(r: usize, j: usize) -> u128 {
    (0..j).map(|i| (r - i) as u128).product()
}

/// Conditional expected rainbow count, scaled by `r (r−1) (r−2)` (factors
/// truncated at `r`) where `r` vertices are still unplaced.
fn scaled_expectation(triangles: &[[usize; 3]], class: &[Option<usize>], capacity: &[usize; 3], r: usize) -> u128 {
    let scale = falling(r, r.min(3));
    let mut total = 0u128;
    for t in triangles {
        let mut taken = [false; 3];
        let mut free = 0;
        let mut clash = false;
        for &x in t {
            match class[x] {
                Some(c) if taken[c] => clash = true,
                Some(c) => taken[c] = true,
                None => free += 1,
            }
        }
        if clash {
            continue;
        }
        // the free vertices must fill the missing classes bijectively
        let ways: u128 = (0..3).filter(|&c| !taken[c]).map(|c| capacity[c] as u128).product();
        let orders = falling(free, free);
        total += orders * ways * (scale / falling(r, free));
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_is_forced_rainbow() {
        let p = rainbow_tripartition(&Graph::complete(3)).unwrap();
        assert_eq!(p.classes.len(), 3);
        assert_eq!((p.class_size(1), p.class_size(2), p.class_size(3)), (1, 1, 1));
        assert_eq!(p.rainbow_count, 1);
    }

    #[test]
    fn triangle_free_graph_still_balanced() {
        let p = rainbow_tripartition(&Graph::cycle(8)).unwrap();
        assert_eq!(p.rainbow_count, 0);
        assert_eq!((p.class_size(1), p.class_size(2), p.class_size(3)), (2, 3, 3));
    }

    #[test]
    fn k6_meets_the_bound() {
        let p = rainbow_tripartition(&Graph::complete(6)).unwrap();
        assert!(p.rainbow_count >= 5);
        // every balanced partition of K6 has 2·2·2 rainbow triangles
        assert_eq!(p.rainbow_count, 8);
    }

    #[test]
    fn too_small() {
        assert!(rainbow_tripartition(&Graph::complete(2)).is_err());
    }
}
