//! Incremental bipartite matching (Kuhn's augmenting paths).
//!
//! Left vertices arrive one at a time with their candidate lists; a push
//! fails when no augmenting path exists, i.e. when Hall's condition breaks
//! for the current left set.

use alloc::vec;
use alloc::vec::Vec;

const FREE: usize = usize::MAX;

pub(crate) struct Matching<'a> {
    candidates: Vec<&'a [usize]>,
    assigned: Vec<usize>,
    owner: Vec<usize>,
    seen: Vec<u32>,
    stamp: u32,
}

impl<'a> Matching<'a> {
    pub(crate) fn new(right: usize) -> Self {
        Matching {
            candidates: Vec::new(),
            assigned: Vec::new(),
            owner: vec![FREE; right],
            seen: vec![0; right],
            stamp: 0,
        }
    }

    /// Adds a left vertex. On failure the matching is left unchanged.
    pub(crate) fn push(&mut self, candidates: &'a [usize]) -> bool {
        let left = self.candidates.len();
        self.candidates.push(candidates);
        self.assigned.push(FREE);
        self.stamp = self.stamp.wrapping_add(1);
        if self.stamp == 0 {
            self.seen.iter_mut().for_each(|s| *s = 0);
            self.stamp = 1;
        }
        if self.augment(left) {
            true
        } else {
            self.candidates.pop();
            self.assigned.pop();
            false
        }
    }

    /// Removes the most recently pushed left vertex.
    pub(crate) fn pop(&mut self) {
        if let Some(r) = self.assigned.pop() {
            self.owner[r] = FREE;
            self.candidates.pop();
        }
    }

    fn augment(&mut self, left: usize) -> bool {
        let cands = self.candidates[left];
        for &r in cands {
            if self.seen[r] == self.stamp {
                continue;
            }
            self.seen[r] = self.stamp;
            let holder = self.owner[r];
            if holder == FREE || self.augment(holder) {
                self.owner[r] = left;
                self.assigned[left] = r;
                return true;
            }
        }
        false
    }

    /// Right vertex matched to each left vertex, in push order.
    pub(crate) fn assignment(&self) -> &[usize] {
        &self.assigned
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hall_violation_rejected() {
        let a = [0usize];
        let b = [0usize, 1];
        let c = [1usize];
        let mut m = Matching::new(2);
        assert!(m.push(&a));
        assert!(m.push(&b));
        assert_eq!(m.assignment(), &[0, 1]);
        // three left vertices on two right vertices
        assert!(!m.push(&c));
        assert_eq!(m.assignment().len(), 2);
        m.pop();
        assert!(m.push(&c));
        assert_eq!(m.assignment(), &[0, 1]);
    }

    #[test]
    fn augmenting_path_reroutes() {
        let a = [0usize, 1];
        let b = [0usize];
        let mut m = Matching::new(2);
        assert!(m.push(&a));
        assert_eq!(m.assignment(), &[0]);
        assert!(m.push(&b));
        assert_eq!(m.assignment(), &[1, 0]);
    }
}
