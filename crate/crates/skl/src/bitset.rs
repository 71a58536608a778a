//! Word-packed bitsets used for adjacency rows and vertex sets.
//!
//! Rows are sized to the number of vertices once and never grow; all binary
//! operations are whole-word loops. Bits past `nbits` are kept zero so that
//! equality, ordering and popcounts can work directly on the words.

use std::fmt;

const WORD_BITS: usize = 64;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitSet {
    nbits: usize,
    words: Vec<u64>,
}

impl BitSet {
    pub fn new(nbits: usize) -> Self {
        BitSet {
            nbits,
            words: vec![0; nbits.div_ceil(WORD_BITS)],
        }
    }

    /// Set containing every index below `nbits`.
    pub fn full(nbits: usize) -> Self {
        let mut set = BitSet::new(nbits);
        for word in set.words.iter_mut() {
            *word = u64::MAX;
        }
        set.clear_tail();
        set
    }

    pub fn from_indices(nbits: usize, indices: &[usize]) -> Self {
        let mut set = BitSet::new(nbits);
        for &i in indices {
            set.insert(i);
        }
        set
    }

    pub fn nbits(&self) -> usize {
        self.nbits
    }

    pub fn contains(&self, i: usize) -> bool {
        debug_assert!(i < self.nbits);
        (self.words[i / WORD_BITS] >> (i % WORD_BITS)) & 1 == 1
    }

    pub fn insert(&mut self, i: usize) {
        assert!(i < self.nbits, "bit {i} out of range ({} bits)", self.nbits);
        self.words[i / WORD_BITS] |= 1 << (i % WORD_BITS);
    }

    pub fn remove(&mut self, i: usize) {
        assert!(i < self.nbits, "bit {i} out of range ({} bits)", self.nbits);
        self.words[i / WORD_BITS] &= !(1 << (i % WORD_BITS));
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Lowest set index, if any.
    pub fn first(&self) -> Option<usize> {
        for (wi, &w) in self.words.iter().enumerate() {
            if w != 0 {
                return Some(wi * WORD_BITS + w.trailing_zeros() as usize);
            }
        }
        None
    }

    pub fn union(&self, other: &BitSet) -> BitSet {
        self.zip_words(other, |a, b| a | b)
    }

    pub fn intersection(&self, other: &BitSet) -> BitSet {
        self.zip_words(other, |a, b| a & b)
    }

    /// Elements of `self` not in `other`.
    pub fn difference(&self, other: &BitSet) -> BitSet {
        self.zip_words(other, |a, b| a & !b)
    }

    pub fn intersect_with(&mut self, other: &BitSet) {
        debug_assert_eq!(self.nbits, other.nbits);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    pub fn is_disjoint(&self, other: &BitSet) -> bool {
        debug_assert_eq!(self.nbits, other.nbits);
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    pub fn is_subset(&self, other: &BitSet) -> bool {
        debug_assert_eq!(self.nbits, other.nbits);
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    pub fn intersection_count(&self, other: &BitSet) -> usize {
        debug_assert_eq!(self.nbits, other.nbits);
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    pub fn iter(&self) -> Bits<'_> {
        Bits {
            set: self,
            word_index: 0,
            current: self.words.first().copied().unwrap_or(0),
        }
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    fn zip_words(&self, other: &BitSet, f: impl Fn(u64, u64) -> u64) -> BitSet {
        debug_assert_eq!(self.nbits, other.nbits);
        BitSet {
            nbits: self.nbits,
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        }
    }

    fn clear_tail(&mut self) {
        let tail = self.nbits % WORD_BITS;
        if tail != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << tail) - 1;
            }
        }
        if self.nbits == 0 {
            self.words.clear();
        }
    }
}

pub struct Bits<'a> {
    set: &'a BitSet,
    word_index: usize,
    current: u64,
}

impl Iterator for Bits<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        while self.current == 0 {
            self.word_index += 1;
            if self.word_index >= self.set.words.len() {
                return None;
            }
            self.current = self.set.words[self.word_index];
        }
        let bit = self.current.trailing_zeros() as usize;
        self.current &= self.current - 1;
        Some(self.word_index * WORD_BITS + bit)
    }
}

impl fmt::Debug for BitSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn insert_contains_roundtrip() {
        let mut s = BitSet::new(130);
        for i in [0, 1, 63, 64, 65, 127, 128, 129] {
            assert!(!s.contains(i));
            s.insert(i);
            assert!(s.contains(i));
        }
        assert_eq!(s.count(), 8);
        s.remove(64);
        assert!(!s.contains(64));
        assert_eq!(s.count(), 7);
    }

    #[test]
    fn iter_matches_inserted() {
        let s = BitSet::from_indices(100, &[3, 64, 99, 5]);
        assert_eq!(s.to_vec(), vec![3, 5, 64, 99]);
        assert_eq!(s.first(), Some(3));
    }

    #[test]
    fn full_respects_tail() {
        let s = BitSet::full(70);
        assert_eq!(s.count(), 70);
        assert_eq!(s.iter().last(), Some(69));
    }

    #[test]
    fn set_operations() {
        let a = BitSet::from_indices(10, &[1, 2, 3]);
        let b = BitSet::from_indices(10, &[3, 4]);
        assert_eq!(a.union(&b).to_vec(), vec![1, 2, 3, 4]);
        assert_eq!(a.intersection(&b).to_vec(), vec![3]);
        assert_eq!(a.difference(&b).to_vec(), vec![1, 2]);
        assert!(!a.is_disjoint(&b));
        assert!(a.difference(&b).is_disjoint(&b));
        assert!(BitSet::from_indices(10, &[1, 3]).is_subset(&a));
        assert_eq!(a.intersection_count(&b), 1);
    }

    #[test]
    fn empty_set() {
        let s = BitSet::new(0);
        assert!(s.is_empty());
        assert_eq!(s.first(), None);
        assert_eq!(s.iter().count(), 0);
    }
}
