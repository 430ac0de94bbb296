//! Machine-word-packed vertex sets.
//!
//! All subset predicates in the graph kernel reduce to word-parallel
//! intersections of these sets, which is what keeps the eta statistic and the
//! branch-and-bound searches fast.

use std::fmt;

const WORD_BITS: usize = 64;

/// A subset of `{0, .., capacity-1}` stored as packed 64-bit words.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    nbits: usize,
    words: Vec<u64>,
}

#[inline]
fn word_count(nbits: usize) -> usize {
    nbits.div_ceil(WORD_BITS)
}

impl VertexSet {
    pub fn empty(nbits: usize) -> Self {
        VertexSet {
            nbits,
            words: vec![0; word_count(nbits)],
        }
    }

    pub fn full(nbits: usize) -> Self {
        let mut s = VertexSet {
            nbits,
            words: vec![!0u64; word_count(nbits)],
        };
        s.trim();
        s
    }

    pub fn singleton(nbits: usize, v: usize) -> Self {
        let mut s = Self::empty(nbits);
        s.insert(v);
        s
    }

    pub fn from_indices(nbits: usize, indices: &[usize]) -> Self {
        let mut s = Self::empty(nbits);
        for &v in indices {
            s.insert(v);
        }
        s
    }

    /// Zero out any bits at positions >= nbits.
    fn trim(&mut self) {
        let r = self.nbits % WORD_BITS;
        if r != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << r) - 1;
            }
        }
    }

    #[inline]
    pub fn capacity(&self) -> usize {
        self.nbits
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        debug_assert!(v < self.nbits);
        self.words[v / WORD_BITS] >> (v % WORD_BITS) & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        assert!(v < self.nbits, "vertex {v} out of range {}", self.nbits);
        self.words[v / WORD_BITS] |= 1u64 << (v % WORD_BITS);
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        debug_assert!(v < self.nbits);
        self.words[v / WORD_BITS] &= !(1u64 << (v % WORD_BITS));
    }

    pub fn union_with(&mut self, other: &VertexSet) {
        debug_assert_eq!(self.nbits, other.nbits);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn intersect_with(&mut self, other: &VertexSet) {
        debug_assert_eq!(self.nbits, other.nbits);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    /// Removes every element of `other` from `self`.
    pub fn subtract(&mut self, other: &VertexSet) {
        debug_assert_eq!(self.nbits, other.nbits);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        let mut s = self.clone();
        s.union_with(other);
        s
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        let mut s = self.clone();
        s.intersect_with(other);
        s
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        let mut s = self.clone();
        s.subtract(other);
        s
    }

    pub fn complement(&self) -> VertexSet {
        let mut s = VertexSet {
            nbits: self.nbits,
            words: self.words.iter().map(|w| !w).collect(),
        };
        s.trim();
        s
    }

    /// |self ∩ other| without allocating.
    pub fn intersection_len(&self, other: &VertexSet) -> usize {
        debug_assert_eq!(self.nbits, other.nbits);
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn first(&self) -> Option<usize> {
        for (i, &w) in self.words.iter().enumerate() {
            if w != 0 {
                return Some(i * WORD_BITS + w.trailing_zeros() as usize);
            }
        }
        None
    }

    pub fn iter(&self) -> Iter<'_> {
        Iter {
            words: &self.words,
            word_idx: 0,
            current: self.words.first().copied().unwrap_or(0),
        }
    }

    /// Elements in increasing order.
    pub fn indices(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub(crate) fn words(&self) -> &[u64] {
        &self.words
    }
}

pub struct Iter<'a> {
    words: &'a [u64],
    word_idx: usize,
    current: u64,
}

impl Iterator for Iter<'_> {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        while self.current == 0 {
            self.word_idx += 1;
            if self.word_idx >= self.words.len() {
                return None;
            }
            self.current = self.words[self.word_idx];
        }
        let bit = self.current.trailing_zeros() as usize;
        self.current &= self.current - 1;
        Some(self.word_idx * WORD_BITS + bit)
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}
