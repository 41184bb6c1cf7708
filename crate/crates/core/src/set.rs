//! Bit-vector subsets of a ring's element indices.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

const WORD: usize = 64;

/// A subset of `{0, .., universe-1}` stored as a bit vector.
///
/// Sets are ordered by the integer value of the bit vector (bit `i` has
/// weight `2^i`), which is the canonical order for ideal lists.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ElementSet {
    universe: usize,
    words: Vec<u64>,
}

impl ElementSet {
    pub fn empty(universe: usize) -> Self {
        Self {
            universe,
            words: vec![0; universe.div_ceil(WORD)],
        }
    }

    /// `{0}`.
    pub fn zero(universe: usize) -> Self {
        let mut s = Self::empty(universe);
        if universe > 0 {
            s.insert(0);
        }
        s
    }

    pub fn full(universe: usize) -> Self {
        let mut s = Self::empty(universe);
        for (i, w) in s.words.iter_mut().enumerate() {
            let lo = i * WORD;
            let bits = (universe - lo).min(WORD);
            *w = if bits == WORD {
                u64::MAX
            } else {
                (1u64 << bits) - 1
            };
        }
        s
    }

    /// Panics if an index is outside the universe.
    pub fn from_indices<I: IntoIterator<Item = usize>>(universe: usize, items: I) -> Self {
        let mut s = Self::empty(universe);
        for i in items {
            s.insert(i);
        }
        s
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    #[inline]
    pub fn contains(&self, i: usize) -> bool {
        i < self.universe && self.words[i / WORD] >> (i % WORD) & 1 == 1
    }

    /// Returns `true` when `i` was not already present.
    #[inline]
    pub fn insert(&mut self, i: usize) -> bool {
        assert!(
            i < self.universe,
            "index {i} outside universe {}",
            self.universe
        );
        let w = &mut self.words[i / WORD];
        let mask = 1u64 << (i % WORD);
        let fresh = *w & mask == 0;
        *w |= mask;
        fresh
    }

    pub fn remove(&mut self, i: usize) {
        if i < self.universe {
            self.words[i / WORD] &= !(1u64 << (i % WORD));
        }
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn is_full(&self) -> bool {
        self.count() == self.universe
    }

    /// Members in ascending order.
    pub fn iter(&self) -> Iter<'_> {
        Iter {
            words: &self.words,
            word: 0,
            current: self.words.first().copied().unwrap_or(0),
        }
    }

    pub fn first(&self) -> Option<usize> {
        self.iter().next()
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.check_universe(other);
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    pub fn union(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a | b)
    }

    pub fn intersection(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a & b)
    }

    pub fn difference(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a & !b)
    }

    pub fn union_with(&mut self, other: &Self) {
        self.check_universe(other);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    fn zip_with(&self, other: &Self, f: impl Fn(u64, u64) -> u64) -> Self {
        self.check_universe(other);
        Self {
            universe: self.universe,
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        }
    }

    #[inline]
    fn check_universe(&self, other: &Self) {
        assert_eq!(
            self.universe, other.universe,
            "element sets over different rings"
        );
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl Ord for ElementSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.universe.cmp(&other.universe).then_with(|| {
            for (a, b) in self.words.iter().rev().zip(other.words.iter().rev()) {
                match a.cmp(b) {
                    Ordering::Equal => continue,
                    o => return o,
                }
            }
            Ordering::Equal
        })
    }
}

impl PartialOrd for ElementSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, i) in self.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{i}")?;
        }
        f.write_str("}")
    }
}

pub struct Iter<'a> {
    words: &'a [u64],
    word: usize,
    current: u64,
}

impl Iterator for Iter<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        loop {
            if self.current != 0 {
                let bit = self.current.trailing_zeros() as usize;
                self.current &= self.current - 1;
                return Some(self.word * WORD + bit);
            }
            self.word += 1;
            self.current = *self.words.get(self.word)?;
        }
    }
}

impl<'a> IntoIterator for &'a ElementSet {
    type Item = usize;
    type IntoIter = Iter<'a>;

    fn into_iter(self) -> Iter<'a> {
        self.iter()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn full_and_zero() {
        assert_eq!(ElementSet::full(70).count(), 70);
        assert_eq!(ElementSet::full(64).count(), 64);
        assert_eq!(ElementSet::zero(5).to_vec(), vec![0]);
        assert!(ElementSet::empty(0).is_empty());
    }

    #[test]
    fn order_is_numeric_value() {
        let a = ElementSet::from_indices(4, [0, 1]); // 3
        let b = ElementSet::from_indices(4, [0, 3]); // 9
        let c = ElementSet::from_indices(4, [2]); // 4
        assert!(a < c && c < b);
        let hi = ElementSet::from_indices(130, [129]);
        let lo = ElementSet::from_indices(130, [0, 1, 2, 64]);
        assert!(lo < hi);
    }

    proptest! {
        #[test]
        fn set_algebra_matches_bool_vectors(
            a in proptest::collection::vec(any::<bool>(), 0..150),
            seed in proptest::collection::vec(any::<bool>(), 150),
        ) {
            let n = a.len();
            let b = &seed[..n];
            let sa = ElementSet::from_indices(n, (0..n).filter(|&i| a[i]));
            let sb = ElementSet::from_indices(n, (0..n).filter(|&i| b[i]));
            for i in 0..n {
                prop_assert_eq!(sa.union(&sb).contains(i), a[i] || b[i]);
                prop_assert_eq!(sa.intersection(&sb).contains(i), a[i] && b[i]);
                prop_assert_eq!(sa.difference(&sb).contains(i), a[i] && !b[i]);
            }
            let subset = (0..n).all(|i| !a[i] || b[i]);
            prop_assert_eq!(sa.is_subset(&sb), subset);
            prop_assert_eq!(sa.iter().count(), sa.count());
        }
    }
}
