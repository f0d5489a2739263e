//! Fixed-width bit vectors over a universe of group elements or graph vertices.

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;

/// A subset of a fixed universe `[0, universe_size)`, packed into 64-bit words.
///
/// Word-parallel union/intersection is the inner loop of the domination solver,
/// so all set algebra stays on whole words.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SubsetMask {
    universe: usize,
    words: Vec<u64>,
}

#[inline]
fn word_count(universe: usize) -> usize {
    universe.div_ceil(64)
}

impl SubsetMask {
    pub fn empty(universe: usize) -> Self {
        SubsetMask {
            universe,
            words: vec![0; word_count(universe)],
        }
    }

    pub fn full(universe: usize) -> Self {
        let mut m = SubsetMask {
            universe,
            words: vec![!0u64; word_count(universe)],
        };
        m.trim();
        m
    }

    pub fn singleton(universe: usize, index: usize) -> Self {
        let mut m = Self::empty(universe);
        m.insert(index);
        m
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(universe: usize, indices: I) -> Self {
        let mut m = Self::empty(universe);
        for i in indices {
            m.insert(i);
        }
        m
    }

    /// Clears any bits at positions >= universe (upper tail of the last word).
    fn trim(&mut self) {
        let extra = self.words.len() * 64 - self.universe;
        if extra > 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= !0u64 >> extra;
            }
        }
    }

    pub fn universe_size(&self) -> usize {
        self.universe
    }

    #[inline]
    pub fn contains(&self, index: usize) -> bool {
        debug_assert!(index < self.universe);
        (self.words[index / 64] >> (index % 64)) & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, index: usize) {
        assert!(index < self.universe, "index {index} out of range {}", self.universe);
        self.words[index / 64] |= 1 << (index % 64);
    }

    #[inline]
    pub fn remove(&mut self, index: usize) {
        assert!(index < self.universe);
        self.words[index / 64] &= !(1 << (index % 64));
    }

    /// Number of members (popcount).
    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn union_with(&mut self, other: &SubsetMask) {
        debug_assert_eq!(self.universe, other.universe);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn intersect_with(&mut self, other: &SubsetMask) {
        debug_assert_eq!(self.universe, other.universe);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    pub fn subtract(&mut self, other: &SubsetMask) {
        debug_assert_eq!(self.universe, other.universe);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
    }

    pub fn complement(&self) -> SubsetMask {
        let mut m = SubsetMask {
            universe: self.universe,
            words: self.words.iter().map(|w| !w).collect(),
        };
        m.trim();
        m
    }

    pub fn is_subset_of(&self, other: &SubsetMask) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn is_disjoint(&self, other: &SubsetMask) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    pub fn intersects(&self, other: &SubsetMask) -> bool {
        !self.is_disjoint(other)
    }

    /// |self ∩ other|
    pub fn intersection_len(&self, other: &SubsetMask) -> usize {
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    /// |self \ other|
    pub fn difference_len(&self, other: &SubsetMask) -> usize {
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & !b).count_ones() as usize)
            .sum()
    }

    pub fn first(&self) -> Option<usize> {
        for (wi, &w) in self.words.iter().enumerate() {
            if w != 0 {
                return Some(wi * 64 + w.trailing_zeros() as usize);
            }
        }
        None
    }

    pub fn iter(&self) -> MaskIter<'_> {
        MaskIter {
            mask: self,
            word_index: 0,
            current: self.words.first().copied().unwrap_or(0),
        }
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

pub struct MaskIter<'a> {
    mask: &'a SubsetMask,
    word_index: usize,
    current: u64,
}

impl Iterator for MaskIter<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        while self.current == 0 {
            self.word_index += 1;
            if self.word_index >= self.mask.words.len() {
                return None;
            }
            self.current = self.mask.words[self.word_index];
        }
        let bit = self.current.trailing_zeros() as usize;
        self.current &= self.current - 1;
        Some(self.word_index * 64 + bit)
    }
}

impl fmt::Debug for SubsetMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SubsetMask({}; ", self.universe)?;
        f.debug_set().entries(self.iter()).finish()?;
        write!(f, ")")
    }
}

#[derive(Serialize, Deserialize)]
struct MaskRepr {
    universe_size: usize,
    members: Vec<usize>,
}

impl Serialize for SubsetMask {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        MaskRepr {
            universe_size: self.universe,
            members: self.to_vec(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for SubsetMask {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let repr = MaskRepr::deserialize(deserializer)?;
        if let Some(&bad) = repr.members.iter().find(|&&m| m >= repr.universe_size) {
            return Err(D::Error::custom(format!(
                "member {bad} outside universe {}",
                repr.universe_size
            )));
        }
        Ok(SubsetMask::from_indices(repr.universe_size, repr.members))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn basic_ops() {
        let mut m = SubsetMask::empty(100);
        assert!(m.is_empty());
        m.insert(0);
        m.insert(63);
        m.insert(64);
        m.insert(99);
        assert_eq!(m.len(), 4);
        assert_eq!(m.to_vec(), vec![0, 63, 64, 99]);
        m.remove(63);
        assert!(!m.contains(63));
        assert_eq!(m.first(), Some(0));
        assert_eq!(m.complement().len(), 97);
    }

    #[test]
    fn full_mask_trims_tail() {
        let m = SubsetMask::full(70);
        assert_eq!(m.len(), 70);
        assert_eq!(m.complement().len(), 0);
    }

    #[test]
    fn empty_universe() {
        let m = SubsetMask::empty(0);
        assert!(m.is_empty());
        assert_eq!(m.iter().count(), 0);
        assert_eq!(SubsetMask::full(0).len(), 0);
    }

    proptest! {
        #[test]
        fn set_algebra_matches_naive(
            universe in 1usize..200,
            xs in prop::collection::vec(0usize..200, 0..50),
            ys in prop::collection::vec(0usize..200, 0..50),
        ) {
            use std::collections::BTreeSet;
            let xs: BTreeSet<usize> = xs.into_iter().map(|v| v % universe).collect();
            let ys: BTreeSet<usize> = ys.into_iter().map(|v| v % universe).collect();
            let a = SubsetMask::from_indices(universe, xs.iter().copied());
            let b = SubsetMask::from_indices(universe, ys.iter().copied());

            let mut u = a.clone();
            u.union_with(&b);
            prop_assert_eq!(u.to_vec(), xs.union(&ys).copied().collect::<Vec<_>>());

            let mut i = a.clone();
            i.intersect_with(&b);
            prop_assert_eq!(i.to_vec(), xs.intersection(&ys).copied().collect::<Vec<_>>());
            prop_assert_eq!(a.intersection_len(&b), xs.intersection(&ys).count());
            prop_assert_eq!(a.difference_len(&b), xs.difference(&ys).count());
            prop_assert_eq!(a.is_subset_of(&b), xs.is_subset(&ys));
            prop_assert_eq!(a.is_disjoint(&b), xs.is_disjoint(&ys));
        }

        #[test]
        fn serde_roundtrip(universe in 1usize..100, xs in prop::collection::vec(0usize..100, 0..30)) {
            let m = SubsetMask::from_indices(universe, xs.into_iter().map(|v| v % universe));
            let json = serde_json::to_string(&m).unwrap();
            let back: SubsetMask = serde_json::from_str(&json).unwrap();
            prop_assert_eq!(m, back);
        }
    }
}
