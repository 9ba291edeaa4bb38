//! Fixed-universe vertex bitsets.
//!
//! Words are stored inline for universes up to 128 vertices, which covers
//! every graph the enumerator and the atlas produce.

use std::fmt;

use smallvec::SmallVec;

pub(crate) type Words = SmallVec<[u64; 2]>;

#[inline]
pub(crate) fn words_for(n: usize) -> usize {
    n.div_ceil(64)
}

#[inline]
pub(crate) fn popcount_and(a: &[u64], b: &[u64]) -> u32 {
    a.iter().zip(b).map(|(x, y)| (x & y).count_ones()).sum()
}

#[inline]
pub(crate) fn test_bit(words: &[u64], i: usize) -> bool {
    (words[i / 64] >> (i % 64)) & 1 == 1
}

/// Iterator over set bit positions of a word slice, ascending.
pub(crate) struct BitIter<'a> {
    words: &'a [u64],
    idx: usize,
    cur: u64,
}

impl<'a> BitIter<'a> {
    pub(crate) fn new(words: &'a [u64]) -> Self {
        BitIter {
            words,
            idx: 0,
            cur: words.first().copied().unwrap_or(0),
        }
    }
}

impl Iterator for BitIter<'_> {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        loop {
            if self.cur != 0 {
                let tz = self.cur.trailing_zeros() as usize;
                self.cur &= self.cur - 1;
                return Some(self.idx * 64 + tz);
            }
            self.idx += 1;
            if self.idx >= self.words.len() {
                return None;
            }
            self.cur = self.words[self.idx];
        }
    }
}

/// A subset of `0..n` for a fixed universe size `n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    n: usize,
    bits: Words,
}

impl VertexSet {
    pub fn empty(n: usize) -> Self {
        VertexSet {
            n,
            bits: smallvec::smallvec![0; words_for(n)],
        }
    }

    pub fn full(n: usize) -> Self {
        let mut s = Self::empty(n);
        for (i, w) in s.bits.iter_mut().enumerate() {
            let lo = i * 64;
            let hi = (lo + 64).min(n);
            *w = if hi - lo == 64 {
                u64::MAX
            } else {
                (1u64 << (hi - lo)) - 1
            };
        }
        s
    }

    /// Builds a set from vertex ids; ids `>= n` are an error.
    pub fn from_vertices<I>(n: usize, vertices: I) -> crate::Result<Self>
    where
        I: IntoIterator<Item = usize>,
    {
        let mut s = Self::empty(n);
        for v in vertices {
            if v >= n {
                return Err(crate::Error::VertexOutOfRange { vertex: v, n });
            }
            s.insert(v);
        }
        Ok(s)
    }

    pub(crate) fn from_words(n: usize, words: &[u64]) -> Self {
        debug_assert_eq!(words.len(), words_for(n));
        VertexSet {
            n,
            bits: Words::from_slice(words),
        }
    }

    /// Universe size.
    pub fn universe(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        debug_assert!(v < self.n);
        self.bits[v / 64] |= 1u64 << (v % 64);
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        debug_assert!(v < self.n);
        self.bits[v / 64] &= !(1u64 << (v % 64));
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        v < self.n && test_bit(&self.bits, v)
    }

    pub fn len(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.iter().all(|&w| w == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        BitIter::new(&self.bits)
    }

    pub fn first(&self) -> Option<usize> {
        self.iter().next()
    }

    pub fn words(&self) -> &[u64] {
        &self.bits
    }

    pub(crate) fn intersect_words(&mut self, other: &[u64]) {
        for (a, b) in self.bits.iter_mut().zip(other) {
            *a &= b;
        }
    }

    pub(crate) fn subtract_words(&mut self, other: &[u64]) {
        for (a, b) in self.bits.iter_mut().zip(other) {
            *a &= !b;
        }
    }

    pub(crate) fn union_words(&mut self, other: &[u64]) {
        for (a, b) in self.bits.iter_mut().zip(other) {
            *a |= b;
        }
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        let mut s = self.clone();
        s.intersect_words(&other.bits);
        s
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        let mut s = self.clone();
        s.union_words(&other.bits);
        s
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        let mut s = self.clone();
        s.subtract_words(&other.bits);
        s
    }

    pub fn complement(&self) -> VertexSet {
        Self::full(self.n).difference(self)
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.bits
            .iter()
            .zip(other.bits.iter().chain(std::iter::repeat(&0)))
            .all(|(a, b)| a & !b == 0)
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}
