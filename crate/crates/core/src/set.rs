//! Word-parallel vertex sets.
//!
//! Detectors are written once against [`VertexSet`] and instantiated with a
//! single `u64` when the host has at most 64 vertices, and with [`WideSet`]
//! otherwise.

use alloc::vec;
use alloc::vec::Vec;

pub trait VertexSet: Clone + PartialEq {
    /// Empty set able to hold vertices `0..n`.
    fn empty(n: usize) -> Self;
    /// Set whose raw words are `words`, sized for `n` vertices.
    fn from_words(words: &[u64], n: usize) -> Self;
    fn insert(&mut self, v: usize);
    fn remove(&mut self, v: usize);
    fn contains(&self, v: usize) -> bool;
    fn intersect(&self, other: &Self) -> Self;
    fn difference(&self, other: &Self) -> Self;
    fn union_with(&mut self, other: &Self);
    fn is_empty(&self) -> bool;
    fn len(&self) -> usize;
    /// Smallest member.
    fn first(&self) -> Option<usize>;
    /// Members in ascending order.
    fn members(&self) -> Members<'_, Self>
    where
        Self: Sized,
    {
        Members { set: self, word: 0, current: self.word(0) }
    }
    /// Raw 64-bit word `i` (bit `j` is vertex `64 i + j`).
    fn word(&self, i: usize) -> u64;
    fn word_count(&self) -> usize;

    fn intersects(&self, other: &Self) -> bool {
        !self.intersect(other).is_empty()
    }
}

/// Ascending iterator over the members of a [`VertexSet`].
pub struct Members<'a, S> {
    set: &'a S,
    word: usize,
    current: u64,
}

impl<S: VertexSet> Iterator for Members<'_, S> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        loop {
            if self.current != 0 {
                let bit = self.current.trailing_zeros() as usize;
                self.current &= self.current - 1;
                return Some(self.word * 64 + bit);
            }
            self.word += 1;
            if self.word >= self.set.word_count() {
                return None;
            }
            self.current = self.set.word(self.word);
        }
    }
}

impl VertexSet for u64 {
    #[inline]
    fn empty(n: usize) -> Self {
        debug_assert!(n <= 64);
        0
    }
    #[inline]
    fn from_words(words: &[u64], n: usize) -> Self {
        debug_assert!(n <= 64);
        words.first().copied().unwrap_or(0)
    }
    #[inline]
    fn insert(&mut self, v: usize) {
        *self |= 1 << v;
    }
    #[inline]
    fn remove(&mut self, v: usize) {
        *self &= !(1 << v);
    }
    #[inline]
    fn contains(&self, v: usize) -> bool {
        self >> v & 1 == 1
    }
    #[inline]
    fn intersect(&self, other: &Self) -> Self {
        self & other
    }
    #[inline]
    fn difference(&self, other: &Self) -> Self {
        self & !other
    }
    #[inline]
    fn union_with(&mut self, other: &Self) {
        *self |= other;
    }
    #[inline]
    fn is_empty(&self) -> bool {
        *self == 0
    }
    #[inline]
    fn len(&self) -> usize {
        self.count_ones() as usize
    }
    #[inline]
    fn first(&self) -> Option<usize> {
        (*self != 0).then(|| self.trailing_zeros() as usize)
    }
    #[inline]
    fn word(&self, i: usize) -> u64 {
        if i == 0 {
            *self
        } else {
            0
        }
    }
    #[inline]
    fn word_count(&self) -> usize {
        1
    }
}

/// Heap-backed bitset for hosts with more than 64 vertices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WideSet(Vec<u64>);

impl VertexSet for WideSet {
    fn empty(n: usize) -> Self {
        WideSet(vec![0; n.div_ceil(64).max(1)])
    }
    fn from_words(words: &[u64], n: usize) -> Self {
        let mut w = words.to_vec();
        w.resize(n.div_ceil(64).max(1), 0);
        WideSet(w)
    }
    fn insert(&mut self, v: usize) {
        self.0[v / 64] |= 1 << (v % 64);
    }
    fn remove(&mut self, v: usize) {
        self.0[v / 64] &= !(1 << (v % 64));
    }
    fn contains(&self, v: usize) -> bool {
        self.0.get(v / 64).is_some_and(|w| w >> (v % 64) & 1 == 1)
    }
    fn intersect(&self, other: &Self) -> Self {
        WideSet(self.0.iter().zip(&other.0).map(|(a, b)| a & b).collect())
    }
    fn difference(&self, other: &Self) -> Self {
        WideSet(self.0.iter().zip(&other.0).map(|(a, b)| a & !b).collect())
    }
    fn union_with(&mut self, other: &Self) {
        for (a, b) in self.0.iter_mut().zip(&other.0) {
            *a |= b;
        }
    }
    fn is_empty(&self) -> bool {
        self.0.iter().all(|&w| w == 0)
    }
    fn len(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }
    fn first(&self) -> Option<usize> {
        self.0
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
    }
    fn word(&self, i: usize) -> u64 {
        self.0.get(i).copied().unwrap_or(0)
    }
    fn word_count(&self) -> usize {
        self.0.len()
    }
    fn intersects(&self, other: &Self) -> bool {
        self.0.iter().zip(&other.0).any(|(a, b)| a & b != 0)
    }
}

/// All vertices `0..n` as a set.
pub fn full<S: VertexSet>(n: usize) -> S {
    let mut s = S::empty(n);
    for v in 0..n {
        s.insert(v);
    }
    s
}
