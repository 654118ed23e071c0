//! Dense fixed-capacity vertex sets.
//!
//! Vertices are 1-based labels in `1..=MAX_VERTICES`. Label `v` is stored in
//! bit `v - 1`. Every set operation is a handful of word-wise instructions,
//! and iteration is always in ascending label order.

use std::cmp::Ordering;
use std::fmt;

/// A vertex label. Labels are 1-based.
pub type Vertex = usize;

const WORDS: usize = 4;

/// Largest vertex label a [`VertexSet`] can hold.
pub const MAX_VERTICES: usize = WORDS * 64;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct VertexSet {
    words: [u64; WORDS],
}

impl VertexSet {
    pub const fn new() -> Self {
        VertexSet { words: [0; WORDS] }
    }

    /// The set `{1, ..., n}`.
    pub fn full(n: usize) -> Self {
        assert!(n <= MAX_VERTICES, "vertex count {n} exceeds {MAX_VERTICES}");
        let mut s = VertexSet::new();
        for (w, word) in s.words.iter_mut().enumerate() {
            let lo = w * 64;
            if n >= lo + 64 {
                *word = u64::MAX;
            } else if n > lo {
                *word = (1u64 << (n - lo)) - 1;
            }
        }
        s
    }

    pub fn singleton(v: Vertex) -> Self {
        let mut s = VertexSet::new();
        s.insert(v);
        s
    }

    #[inline]
    fn slot(v: Vertex) -> (usize, u64) {
        debug_assert!((1..=MAX_VERTICES).contains(&v), "vertex {v} out of range");
        let b = v - 1;
        (b / 64, 1u64 << (b % 64))
    }

    #[inline]
    pub fn insert(&mut self, v: Vertex) {
        let (w, m) = Self::slot(v);
        self.words[w] |= m;
    }

    #[inline]
    pub fn remove(&mut self, v: Vertex) {
        let (w, m) = Self::slot(v);
        self.words[w] &= !m;
    }

    #[inline]
    pub fn contains(&self, v: Vertex) -> bool {
        if v == 0 || v > MAX_VERTICES {
            return false;
        }
        let (w, m) = Self::slot(v);
        self.words[w] & m != 0
    }

    #[inline]
    pub fn with(mut self, v: Vertex) -> Self {
        self.insert(v);
        self
    }

    #[inline]
    pub fn without(mut self, v: Vertex) -> Self {
        self.remove(v);
        self
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    #[inline]
    pub fn union(&self, other: &Self) -> Self {
        let mut words = self.words;
        for (a, b) in words.iter_mut().zip(other.words.iter()) {
            *a |= *b;
        }
        VertexSet { words }
    }

    #[inline]
    pub fn intersection(&self, other: &Self) -> Self {
        let mut words = self.words;
        for (a, b) in words.iter_mut().zip(other.words.iter()) {
            *a &= *b;
        }
        VertexSet { words }
    }

    #[inline]
    pub fn difference(&self, other: &Self) -> Self {
        let mut words = self.words;
        for (a, b) in words.iter_mut().zip(other.words.iter()) {
            *a &= !*b;
        }
        VertexSet { words }
    }

    #[inline]
    pub fn is_subset(&self, other: &Self) -> bool {
        self.words
            .iter()
            .zip(other.words.iter())
            .all(|(a, b)| a & !b == 0)
    }

    #[inline]
    pub fn is_disjoint(&self, other: &Self) -> bool {
        self.words
            .iter()
            .zip(other.words.iter())
            .all(|(a, b)| a & b == 0)
    }

    #[inline]
    pub fn intersects(&self, other: &Self) -> bool {
        !self.is_disjoint(other)
    }

    /// Smallest member, if any.
    #[inline]
    pub fn first(&self) -> Option<Vertex> {
        for (w, &word) in self.words.iter().enumerate() {
            if word != 0 {
                return Some(w * 64 + word.trailing_zeros() as usize + 1);
            }
        }
        None
    }

    pub fn iter(&self) -> Iter {
        Iter {
            words: self.words,
            word: 0,
        }
    }

    pub fn to_vec(&self) -> Vec<Vertex> {
        self.iter().collect()
    }
}

impl std::ops::BitOr for VertexSet {
    type Output = VertexSet;
    fn bitor(self, rhs: Self) -> Self {
        self.union(&rhs)
    }
}

impl std::ops::BitAnd for VertexSet {
    type Output = VertexSet;
    fn bitand(self, rhs: Self) -> Self {
        self.intersection(&rhs)
    }
}

impl std::ops::Sub for VertexSet {
    type Output = VertexSet;
    fn sub(self, rhs: Self) -> Self {
        self.difference(&rhs)
    }
}

/// Ascending iterator over the members of a [`VertexSet`].
#[derive(Clone)]
pub struct Iter {
    words: [u64; WORDS],
    word: usize,
}

impl Iterator for Iter {
    type Item = Vertex;

    #[inline]
    fn next(&mut self) -> Option<Vertex> {
        while self.word < WORDS {
            let w = &mut self.words[self.word];
            if *w != 0 {
                let bit = w.trailing_zeros() as usize;
                *w &= *w - 1;
                return Some(self.word * 64 + bit + 1);
            }
            self.word += 1;
        }
        None
    }
}

impl IntoIterator for VertexSet {
    type Item = Vertex;
    type IntoIter = Iter;
    fn into_iter(self) -> Iter {
        self.iter()
    }
}

impl IntoIterator for &VertexSet {
    type Item = Vertex;
    type IntoIter = Iter;
    fn into_iter(self) -> Iter {
        self.iter()
    }
}

impl FromIterator<Vertex> for VertexSet {
    fn from_iter<I: IntoIterator<Item = Vertex>>(iter: I) -> Self {
        let mut s = VertexSet::new();
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl<const N: usize> From<[Vertex; N]> for VertexSet {
    fn from(vs: [Vertex; N]) -> Self {
        vs.into_iter().collect()
    }
}

/// Lexicographic order on the ascending member sequences, so `{1,2,4}`
/// sorts before `{1,3}` and `{1,3}` before `{2}`.
impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.iter().cmp(other.iter())
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Space-separated ascending members, e.g. `1 2 3`. The empty set renders as
/// an empty string.
impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for v in self.iter() {
            if !first {
                f.write_str(" ")?;
            }
            write!(f, "{v}")?;
            first = false;
        }
        Ok(())
    }
}
