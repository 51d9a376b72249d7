//! Shallow isomorph rejection.
//!
//! After the first `i` items are decided, a vertex permutation `σ` that maps
//! the set of those items onto itself maps the subtree of a decision vector
//! `D` onto the subtree of `σ(D)`, with equal objective values. If `σ(D)`
//! comes first in search order, `D` can be skipped.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use super::NONE;

/// Slot permutations stabilizing each decided prefix: `groups[i]` holds, for
/// prefix length `i`, maps `j ↦ σ(slot j)` on `0..i` (identity omitted).
pub(crate) struct PrefixGroups {
    groups: Vec<Vec<Vec<u16>>>,
}

/// Upper limit on stored permutations per prefix; a subset of the
/// stabilizer is still sound.
const CAP: usize = 5040;

impl PrefixGroups {
    pub(crate) fn new(slots: &[[usize; 3]], classes: &[u8], depth: usize) -> Self {
        let depth = depth.min(slots.len());
        let mut groups = vec![Vec::new()];
        for i in 1..=depth {
            groups.push(stabilizer(&slots[..i], classes));
        }
        PrefixGroups { groups }
    }

    /// True if some stabilizing permutation maps `decisions` to a vector
    /// explored earlier (include before exclude).
    pub(crate) fn dominated(&self, decisions: &[bool]) -> bool {
        let Some(group) = self.groups.get(decisions.len()) else {
            return false;
        };
        let mut image = vec![false; decisions.len()];
        group.iter().any(|sigma| {
            for (j, &to) in sigma.iter().enumerate() {
                image[to as usize] = decisions[j];
            }
            match image.iter().zip(decisions).find(|(a, b)| a != b) {
                Some((&img, _)) => img,
                None => false,
            }
        })
    }
}

fn stabilizer(prefix: &[[usize; 3]], classes: &[u8]) -> Vec<Vec<u16>> {
    let index: BTreeMap<[usize; 3], usize> = prefix.iter().enumerate().map(|(i, &s)| (s, i)).collect();
    let mut touched: Vec<usize> = prefix.iter().flatten().copied().filter(|&v| v != NONE).collect();
    touched.sort_unstable();
    touched.dedup();
    // slots that become fully mapped once touched[j] has an image
    let mut closing: Vec<Vec<usize>> = vec![Vec::new(); touched.len()];
    for (i, s) in prefix.iter().enumerate() {
        let top = s.iter().copied().filter(|&v| v != NONE).max().unwrap();
        closing[touched.binary_search(&top).unwrap()].push(i);
    }
    let n = classes.len();
    let mut state = Enum {
        prefix,
        classes,
        index: &index,
        touched: &touched,
        closing: &closing,
        image: vec![NONE; n],
        used: vec![false; n],
        out: Vec::new(),
    };
    state.extend(0);
    let mut out = state.out;
    out.sort_unstable();
    out.dedup();
    out
}

struct Enum<'a> {
    prefix: &'a [[usize; 3]],
    classes: &'a [u8],
    index: &'a BTreeMap<[usize; 3], usize>,
    touched: &'a [usize],
    closing: &'a [Vec<usize>],
    image: Vec<usize>,
    used: Vec<bool>,
    out: Vec<Vec<u16>>,
}

impl Enum<'_> {
    fn map_slot(&self, s: [usize; 3]) -> Option<usize> {
        let mut t = s.map(|v| if v == NONE { NONE } else { self.image[v] });
        t.sort_unstable();
        self.index.get(&t).copied()
    }

    fn extend(&mut self, j: usize) {
        if self.out.len() >= CAP {
            return;
        }
        if j == self.touched.len() {
            let sigma: Vec<u16> = self.prefix.iter().map(|&s| self.map_slot(s).unwrap() as u16).collect();
            if sigma.iter().enumerate().any(|(i, &t)| i != t as usize) {
                self.out.push(sigma);
            }
            return;
        }
        let v = self.touched[j];
        for k in 0..self.touched.len() {
            let w = self.touched[k];
            if self.used[w] || self.classes[w] != self.classes[v] {
                continue;
            }
            self.image[v] = w;
            self.used[w] = true;
            if self.closing[j].iter().all(|&i| self.map_slot(self.prefix[i]).is_some()) {
                self.extend(j + 1);
            }
            self.used[w] = false;
            self.image[v] = NONE;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::search::{slots, Universe};

    #[test]
    fn graph_prefix_groups() {
        let s = slots(Universe::Graph { n: 5 });
        let g = PrefixGroups::new(&s, &[0; 5], 4);
        // {01}: swap 0,1 fixes the slot; nothing moves
        assert!(g.groups[1].is_empty());
        // {01, 02}: swap 1,2
        assert_eq!(g.groups[2], vec![vec![1, 0]]);
        // {01, 02, 03}: all permutations of {1, 2, 3}
        assert_eq!(g.groups[3].len(), 5);
        assert!(g.dominated(&[false, true]));
        assert!(!g.dominated(&[true, false]));
        assert!(!g.dominated(&[true, true]));
        assert!(g.dominated(&[true, false, true]));
    }

    #[test]
    fn bipartite_classes_are_kept() {
        let s = slots(Universe::Bipartite { m: 2, n: 2 });
        let g = PrefixGroups::new(&s, &[0, 0, 1, 1], 4);
        // all four slots: swapping left, right, or both
        assert_eq!(g.groups[4].len(), 3);
    }

    #[test]
    fn triple_prefix_groups() {
        let s = slots(Universe::Triples { n: 5 });
        let g = PrefixGroups::new(&s, &[0; 5], 3);
        // {012, 013}: swapping 0,1 fixes both slots; swapping 2,3 exchanges them
        assert_eq!(g.groups[2], vec![vec![1, 0]]);
        assert!(g.dominated(&[false, true]));
    }
}
