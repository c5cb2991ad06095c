//! Fixed-universe vertex sets backed by 64-bit words.
//!
//! Sets over at most 64 vertices live inline in a single word; larger
//! universes spill to the heap.

use core::fmt;

use smallvec::{smallvec, SmallVec};

const WORD: usize = 64;

type Words = SmallVec<[u64; 1]>;

fn words_for(universe: usize) -> usize {
    universe.div_ceil(WORD)
}

/// A set of vertex indices drawn from `0..universe`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet {
    universe: usize,
    words: Words,
}

impl VertexSet {
    /// The empty set over `0..universe`.
    pub fn new(universe: usize) -> Self {
        VertexSet {
            universe,
            words: smallvec![0; words_for(universe)],
        }
    }

    /// Every vertex of `0..universe`.
    pub fn full(universe: usize) -> Self {
        let mut set = VertexSet::new(universe);
        for w in set.words.iter_mut() {
            *w = !0;
        }
        set.trim();
        set
    }

    pub fn singleton(universe: usize, v: usize) -> Self {
        let mut set = VertexSet::new(universe);
        set.insert(v);
        set
    }

    pub fn from_vertices<I: IntoIterator<Item = usize>>(universe: usize, vertices: I) -> Self {
        let mut set = VertexSet::new(universe);
        for v in vertices {
            set.insert(v);
        }
        set
    }

    /// Vertices `lo+1 .. universe`.
    pub fn above(universe: usize, lo: usize) -> Self {
        VertexSet::from_vertices(universe, lo.saturating_add(1)..universe)
    }

    fn trim(&mut self) {
        let rem = self.universe % WORD;
        if rem != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
    }

    #[inline]
    pub fn universe(&self) -> usize {
        self.universe
    }

    #[inline]
    fn check(&self, v: usize) {
        assert!(
            v < self.universe,
            "vertex {v} outside universe of size {}",
            self.universe
        );
    }

    #[inline]
    pub fn insert(&mut self, v: usize) -> bool {
        self.check(v);
        let (w, b) = (v / WORD, v % WORD);
        let fresh = self.words[w] & (1 << b) == 0;
        self.words[w] |= 1 << b;
        fresh
    }

    #[inline]
    pub fn remove(&mut self, v: usize) -> bool {
        self.check(v);
        let (w, b) = (v / WORD, v % WORD);
        let present = self.words[w] & (1 << b) != 0;
        self.words[w] &= !(1 << b);
        present
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        v < self.universe && self.words[v / WORD] & (1 << (v % WORD)) != 0
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Smallest member, if any.
    pub fn first(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| i * WORD + w.trailing_zeros() as usize)
    }

    /// Removes and returns the smallest member.
    pub fn pop_first(&mut self) -> Option<usize> {
        for (i, w) in self.words.iter_mut().enumerate() {
            if *w != 0 {
                let b = w.trailing_zeros() as usize;
                *w &= *w - 1;
                return Some(i * WORD + b);
            }
        }
        None
    }

    pub fn iter(&self) -> Iter<'_> {
        Iter {
            words: &self.words,
            index: 0,
            current: self.words.first().copied().unwrap_or(0),
        }
    }

    fn same_universe(&self, other: &VertexSet) {
        assert_eq!(self.universe, other.universe, "vertex sets over different universes");
    }

    pub fn union_with(&mut self, other: &VertexSet) {
        self.same_universe(other);
        for (a, b) in self.words.iter_mut().zip(other.words.iter()) {
            *a |= b;
        }
    }

    pub fn intersect_with(&mut self, other: &VertexSet) {
        self.same_universe(other);
        for (a, b) in self.words.iter_mut().zip(other.words.iter()) {
            *a &= b;
        }
    }

    pub fn difference_with(&mut self, other: &VertexSet) {
        self.same_universe(other);
        for (a, b) in self.words.iter_mut().zip(other.words.iter()) {
            *a &= !b;
        }
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        let mut out = self.clone();
        out.union_with(other);
        out
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        let mut out = self.clone();
        out.intersect_with(other);
        out
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        let mut out = self.clone();
        out.difference_with(other);
        out
    }

    /// Complement within the universe.
    pub fn complement(&self) -> VertexSet {
        VertexSet::full(self.universe).difference(self)
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.same_universe(other);
        self.words.iter().zip(other.words.iter()).all(|(a, b)| a & !b == 0)
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.same_universe(other);
        self.words.iter().zip(other.words.iter()).all(|(a, b)| a & b == 0)
    }

    pub fn intersects(&self, other: &VertexSet) -> bool {
        !self.is_disjoint(other)
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = usize;
    type IntoIter = Iter<'a>;

    fn into_iter(self) -> Iter<'a> {
        self.iter()
    }
}

/// Ascending iterator over the members of a [`VertexSet`].
pub struct Iter<'a> {
    words: &'a [u64],
    index: usize,
    current: u64,
}

impl Iterator for Iter<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        loop {
            if self.current != 0 {
                let b = self.current.trailing_zeros() as usize;
                self.current &= self.current - 1;
                return Some(self.index * WORD + b);
            }
            self.index += 1;
            self.current = *self.words.get(self.index)?;
        }
    }
}

#[cfg(feature = "serde")]
impl serde::Serialize for VertexSet {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::collections::BTreeSet;
    use std::vec::Vec;

    #[test]
    fn full_respects_universe() {
        assert_eq!(VertexSet::full(0).len(), 0);
        assert_eq!(VertexSet::full(5).len(), 5);
        assert_eq!(VertexSet::full(64).len(), 64);
        assert_eq!(VertexSet::full(130).len(), 130);
        assert!(!VertexSet::full(5).contains(5));
    }

    #[test]
    fn above_excludes_prefix() {
        let s = VertexSet::above(6, 2);
        assert_eq!(s.iter().collect::<Vec<_>>(), [3, 4, 5]);
        assert!(VertexSet::above(3, 2).is_empty());
        assert!(VertexSet::above(0, 0).is_empty());
    }

    #[test]
    #[should_panic(expected = "outside universe")]
    fn insert_out_of_range_panics() {
        VertexSet::new(3).insert(3);
    }

    fn arb_members(universe: usize) -> impl Strategy<Value = BTreeSet<usize>> {
        proptest::collection::btree_set(0..universe, 0..universe)
    }

    proptest! {
        #[test]
        fn matches_btreeset_model(
            (universe, ma, mb) in (1usize..200).prop_flat_map(|u| (Just(u), arb_members(u), arb_members(u))),
        ) {
            let a = VertexSet::from_vertices(universe, ma.iter().copied());
            let b = VertexSet::from_vertices(universe, mb.iter().copied());
            prop_assert_eq!(a.iter().collect::<BTreeSet<_>>(), ma.clone());
            prop_assert_eq!(a.len(), ma.len());
            prop_assert_eq!(a.union(&b).iter().collect::<BTreeSet<_>>(), ma.union(&mb).copied().collect::<BTreeSet<_>>());
            prop_assert_eq!(a.intersection(&b).iter().collect::<BTreeSet<_>>(), ma.intersection(&mb).copied().collect::<BTreeSet<_>>());
            prop_assert_eq!(a.difference(&b).iter().collect::<BTreeSet<_>>(), ma.difference(&mb).copied().collect::<BTreeSet<_>>());
            prop_assert_eq!(a.is_subset(&b), ma.is_subset(&mb));
            prop_assert_eq!(a.is_disjoint(&b), ma.is_disjoint(&mb));
            prop_assert_eq!(a.first(), ma.iter().next().copied());
            prop_assert_eq!(a.complement().len(), universe - ma.len());
        }

        #[test]
        fn pop_first_drains_in_order(members in arb_members(100)) {
            let mut s = VertexSet::from_vertices(100, members.iter().copied());
            let mut drained = Vec::new();
            while let Some(v) = s.pop_first() {
                drained.push(v);
            }
            prop_assert_eq!(drained, members.into_iter().collect::<Vec<_>>());
        }
    }
}
