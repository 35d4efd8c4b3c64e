//! Dense bitsets over the element indices of one group.

use std::cmp::Ordering;

/// Subset of `0..universe` element indices, packed 64 per word.
///
/// The `Ord` instance compares the sorted index sequences lexicographically,
/// so "smallest set" has a stable meaning independent of how a set was built.
/// All binary operations require both operands to share a universe.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ElemSet {
    universe: u32,
    words: Box<[u64]>,
}

impl ElemSet {
    pub fn empty(universe: usize) -> ElemSet {
        ElemSet {
            universe: universe as u32,
            words: vec![0u64; universe.div_ceil(64)].into_boxed_slice(),
        }
    }

    pub fn singleton(universe: usize, index: u16) -> ElemSet {
        let mut s = ElemSet::empty(universe);
        s.insert(index);
        s
    }

    pub fn full(universe: usize) -> ElemSet {
        let mut s = ElemSet::empty(universe);
        for w in s.words.iter_mut() {
            *w = u64::MAX;
        }
        s.clear_tail();
        s
    }

    pub fn from_indices<I: IntoIterator<Item = u16>>(universe: usize, indices: I) -> ElemSet {
        let mut s = ElemSet::empty(universe);
        for i in indices {
            s.insert(i);
        }
        s
    }

    fn clear_tail(&mut self) {
        let used = self.universe as usize % 64;
        if used != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << used) - 1;
            }
        }
    }

    pub fn universe(&self) -> usize {
        self.universe as usize
    }

    /// Number of members.
    pub fn count(&self) -> u32 {
        self.words.iter().map(|w| w.count_ones()).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn contains(&self, index: u16) -> bool {
        let i = index as usize;
        debug_assert!(i < self.universe as usize);
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    /// Inserts, reporting whether the member is new.
    pub fn insert(&mut self, index: u16) -> bool {
        let i = index as usize;
        debug_assert!(i < self.universe as usize);
        let word = &mut self.words[i / 64];
        let bit = 1u64 << (i % 64);
        let fresh = *word & bit == 0;
        *word |= bit;
        fresh
    }

    pub fn remove(&mut self, index: u16) {
        let i = index as usize;
        debug_assert!(i < self.universe as usize);
        self.words[i / 64] &= !(1u64 << (i % 64));
    }

    pub fn union_with(&mut self, other: &ElemSet) {
        debug_assert_eq!(self.universe, other.universe);
        for (a, b) in self.words.iter_mut().zip(other.words.iter()) {
            *a |= b;
        }
    }

    pub fn intersect_with(&mut self, other: &ElemSet) {
        debug_assert_eq!(self.universe, other.universe);
        for (a, b) in self.words.iter_mut().zip(other.words.iter()) {
            *a &= b;
        }
    }

    pub fn union(&self, other: &ElemSet) -> ElemSet {
        let mut out = self.clone();
        out.union_with(other);
        out
    }

    pub fn intersection(&self, other: &ElemSet) -> ElemSet {
        let mut out = self.clone();
        out.intersect_with(other);
        out
    }

    /// Size of the intersection without materializing it.
    pub fn intersection_count(&self, other: &ElemSet) -> u32 {
        debug_assert_eq!(self.universe, other.universe);
        self.words
            .iter()
            .zip(other.words.iter())
            .map(|(a, b)| (a & b).count_ones())
            .sum()
    }

    pub fn is_subset_of(&self, other: &ElemSet) -> bool {
        debug_assert_eq!(self.universe, other.universe);
        self.words
            .iter()
            .zip(other.words.iter())
            .all(|(a, b)| a & !b == 0)
    }

    /// Least member, if any.
    pub fn first(&self) -> Option<u16> {
        for (wi, &w) in self.words.iter().enumerate() {
            if w != 0 {
                return Some((wi * 64 + w.trailing_zeros() as usize) as u16);
            }
        }
        None
    }

    /// Members in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = u16> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let base = wi * 64;
            BitIter { word: w, base }
        })
    }

    pub fn to_vec(&self) -> Vec<u16> {
        self.iter().collect()
    }
}

struct BitIter {
    word: u64,
    base: usize,
}

impl Iterator for BitIter {
    type Item = u16;

    fn next(&mut self) -> Option<u16> {
        if self.word == 0 {
            return None;
        }
        let bit = self.word.trailing_zeros() as usize;
        self.word &= self.word - 1;
        Some((self.base + bit) as u16)
    }
}

impl Ord for ElemSet {
    /// Lexicographic on the ascending member lists. The set owning the first
    /// differing position has the smaller member there, hence is smaller,
    /// unless the other set has no members from that position on; then the
    /// other set is a proper prefix and is smaller.
    fn cmp(&self, other: &ElemSet) -> Ordering {
        debug_assert_eq!(self.universe, other.universe);
        for (w, (&a, &b)) in self.words.iter().zip(other.words.iter()).enumerate() {
            if a == b {
                continue;
            }
            let low = (a ^ b).trailing_zeros();
            let self_owns = a >> low & 1 == 1;
            let other_has_tail = if self_owns {
                b >> low != 0 || other.words[w + 1..].iter().any(|&v| v != 0)
            } else {
                a >> low != 0 || self.words[w + 1..].iter().any(|&v| v != 0)
            };
            return match (self_owns, other_has_tail) {
                (true, true) | (false, false) => Ordering::Less,
                (true, false) | (false, true) => Ordering::Greater,
            };
        }
        Ordering::Equal
    }
}

impl PartialOrd for ElemSet {
    fn partial_cmp(&self, other: &ElemSet) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl std::fmt::Debug for ElemSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}
