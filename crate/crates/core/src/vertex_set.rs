//! Finite vertex sets packed into a single machine word.
//!
//! Every object in this crate lives on at most [`MAX_VERTICES`] labelled
//! vertices, so a set of vertices is a `u64` bitmask. Ordering is
//! lexicographic on the ascending element lists, which is the canonical
//! order used for edges, facets, and faces throughout.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// Largest number of distinct vertex labels a set can hold.
pub const MAX_VERTICES: usize = 64;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub const fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    /// `{0, 1, ..., n-1}`.
    pub fn range(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices { n });
        }
        Ok(VertexSet(if n == MAX_VERTICES { u64::MAX } else { (1u64 << n) - 1 }))
    }

    pub fn singleton(v: usize) -> Result<Self> {
        if v >= MAX_VERTICES {
            return Err(Error::TooManyVertices { n: v + 1 });
        }
        Ok(VertexSet(1u64 << v))
    }

    /// Builds a set from arbitrary labels, rejecting labels that do not fit.
    pub fn try_from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Result<Self> {
        let mut bits = 0u64;
        for v in iter {
            if v >= MAX_VERTICES {
                return Err(Error::TooManyVertices { n: v + 1 });
            }
            bits |= 1u64 << v;
        }
        Ok(VertexSet(bits))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, v: usize) -> bool {
        v < MAX_VERTICES && self.0 >> v & 1 == 1
    }

    #[must_use]
    pub fn with(self, v: usize) -> Self {
        debug_assert!(v < MAX_VERTICES);
        VertexSet(self.0 | 1u64 << v)
    }

    #[must_use]
    pub fn without(self, v: usize) -> Self {
        if v >= MAX_VERTICES {
            return self;
        }
        VertexSet(self.0 & !(1u64 << v))
    }

    #[must_use]
    pub fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    #[must_use]
    pub fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    #[must_use]
    pub fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: Self) -> bool {
        self.0 & other.0 == 0
    }

    pub fn min(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn max(self) -> Option<usize> {
        (self.0 != 0).then(|| 63 - self.0.leading_zeros() as usize)
    }

    /// One past the largest member, i.e. the smallest `n` with `self ⊆ [n]`.
    pub fn label_bound(self) -> usize {
        self.max().map_or(0, |m| m + 1)
    }

    pub fn iter(self) -> Members {
        Members(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Position of `v` among the members in ascending order.
    pub fn rank_of(self, v: usize) -> usize {
        (self.0 & ((1u64 << v) - 1)).count_ones() as usize
    }

    /// All `k`-element subsets, in increasing order of their images under
    /// the compression of `self` onto `0..len`.
    pub fn subsets_of_size(self, k: usize) -> Combinations {
        Combinations::new(self, k)
    }

    /// All subsets (including `∅` and `self`) in increasing bitmask order.
    pub fn subsets(self) -> Submasks {
        Submasks { ground: self.0, next: Some(0) }
    }

    /// Maps bit `i` of `index` to the `i`-th smallest member of `self`.
    pub fn deposit(self, index: u64) -> Self {
        let mut out = 0u64;
        let mut rest = self.0;
        let mut idx = index;
        while idx != 0 && rest != 0 {
            let low = rest & rest.wrapping_neg();
            if idx & 1 == 1 {
                out |= low;
            }
            rest &= rest - 1;
            idx >>= 1;
        }
        VertexSet(out)
    }
}

impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> Ordering {
        if self.0 == other.0 {
            return Ordering::Equal;
        }
        let diff = self.0 ^ other.0;
        let low = diff & diff.wrapping_neg();
        // Both lists agree below `low`. Whichever set owns `low` is smaller
        // unless the other set has nothing left beyond it (a proper prefix).
        let above = !(low | (low - 1));
        let (owner, other_bits) = if self.0 & low != 0 { (Ordering::Less, other.0) } else { (Ordering::Greater, self.0) };
        if other_bits & above == 0 {
            owner.reverse()
        } else {
            owner
        }
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

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = Members;

    fn into_iter(self) -> Members {
        self.iter()
    }
}

/// Panics on labels `>= MAX_VERTICES`; use [`VertexSet::try_from_iter`] for
/// untrusted input.
impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        VertexSet::try_from_iter(iter).expect("vertex label out of range")
    }
}

#[derive(Clone, Debug)]
pub struct Members(u64);

impl Iterator for Members {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Members {}

/// k-subsets of a ground set via Gosper's hack on the compressed index space.
#[derive(Clone, Debug)]
pub struct Combinations {
    ground: VertexSet,
    width: usize,
    current: Option<u64>,
}

impl Combinations {
    fn new(ground: VertexSet, k: usize) -> Self {
        let width = ground.len();
        let current = if k > width {
            None
        } else if k == 0 {
            Some(0)
        } else {
            Some(if k == 64 { u64::MAX } else { (1u64 << k) - 1 })
        };
        Combinations { ground, width, current }
    }
}

impl Iterator for Combinations {
    type Item = VertexSet;

    fn next(&mut self) -> Option<VertexSet> {
        let cur = self.current?;
        let out = self.ground.deposit(cur);
        self.current = if cur == 0 {
            None
        } else {
            let low = cur & cur.wrapping_neg();
            let ripple = cur.wrapping_add(low);
            if ripple == 0 {
                None
            } else {
                let next = (((ripple ^ cur) >> 2) / low) | ripple;
                (self.width == 64 || next >> self.width == 0).then_some(next)
            }
        };
        Some(out)
    }
}

#[derive(Clone, Debug)]
pub struct Submasks {
    ground: u64,
    next: Option<u64>,
}

impl Iterator for Submasks {
    type Item = VertexSet;

    fn next(&mut self) -> Option<VertexSet> {
        let cur = self.next?;
        self.next = if cur == self.ground { None } else { Some((cur | !self.ground).wrapping_add(1) & self.ground) };
        Some(VertexSet(cur))
    }
}

/// Binomial coefficient, saturating at `u64::MAX`.
pub fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
        if acc > u64::MAX as u128 {
            return u64::MAX;
        }
    }
    acc as u64
}

/// Drops every set that is contained in another one; returns the rest sorted.
pub fn maximal_sets(mut sets: Vec<VertexSet>) -> Vec<VertexSet> {
    // Larger sets first so that a candidate only needs checking against
    // the survivors kept so far.
    sets.sort_unstable_by(|a, b| b.len().cmp(&a.len()).then(a.cmp(b)));
    sets.dedup();
    let mut kept: Vec<VertexSet> = Vec::with_capacity(sets.len());
    for s in sets {
        if !kept.iter().any(|k| s.is_subset(*k)) {
            kept.push(s);
        }
    }
    kept.sort_unstable();
    kept
}

/// Drops every set that contains another one; returns the rest sorted.
pub fn minimal_sets(mut sets: Vec<VertexSet>) -> Vec<VertexSet> {
    sets.sort_unstable_by(|a, b| a.len().cmp(&b.len()).then(a.cmp(b)));
    sets.dedup();
    let mut kept: Vec<VertexSet> = Vec::with_capacity(sets.len());
    for s in sets {
        if !kept.iter().any(|k| k.is_subset(s)) {
            kept.push(s);
        }
    }
    kept.sort_unstable();
    kept
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn set(v: &[usize]) -> VertexSet {
        v.iter().copied().collect()
    }

    #[test]
    fn lexicographic_order_matches_sorted_lists() {
        let mut sets: Vec<VertexSet> = (0u64..64).map(VertexSet::from_bits).collect();
        sets.sort();
        let lists: Vec<Vec<usize>> = sets.iter().map(|s| s.to_vec()).collect();
        let mut sorted = lists.clone();
        sorted.sort();
        assert_eq!(lists, sorted);
    }

    #[test]
    fn combinations_count_and_distinct() {
        let g = set(&[1, 3, 4, 7, 9]);
        for k in 0..=6 {
            let all: Vec<_> = g.subsets_of_size(k).collect();
            assert_eq!(all.len() as u64, binomial(5, k));
            assert!(all.iter().all(|s| s.len() == k && s.is_subset(g)));
            let mut dedup = all.clone();
            dedup.sort();
            dedup.dedup();
            assert_eq!(dedup.len(), all.len());
        }
    }

    #[test]
    fn full_word_edge_cases() {
        let full = VertexSet::range(64).unwrap();
        assert_eq!(full.len(), 64);
        assert_eq!(full.subsets_of_size(64).count(), 1);
        assert_eq!(full.subsets_of_size(63).count(), 64);
        assert!(VertexSet::range(65).is_err());
        assert!(VertexSet::singleton(64).is_err());
    }

    #[test]
    fn submasks_are_increasing() {
        let g = set(&[0, 2, 5]);
        let subs: Vec<u64> = g.subsets().map(|s| s.bits()).collect();
        assert_eq!(subs, vec![0, 1, 4, 5, 32, 33, 36, 37]);
    }

    #[test]
    fn maximal_and_minimal() {
        let sets = vec![set(&[0, 1]), set(&[0]), set(&[0, 1, 2]), set(&[3])];
        assert_eq!(maximal_sets(sets.clone()), vec![set(&[0, 1, 2]), set(&[3])]);
        assert_eq!(minimal_sets(sets), vec![set(&[0]), set(&[3])]);
    }

    proptest! {
        #[test]
        fn order_is_list_order(a in any::<u64>(), b in any::<u64>()) {
            let (x, y) = (VertexSet::from_bits(a), VertexSet::from_bits(b));
            prop_assert_eq!(x.cmp(&y), x.to_vec().cmp(&y.to_vec()));
        }

        #[test]
        fn deposit_is_subset(g in any::<u64>(), i in any::<u64>()) {
            let g = VertexSet::from_bits(g);
            let d = g.deposit(i & ((1u64 << g.len().min(63)) - 1));
            prop_assert!(d.is_subset(g));
        }
    }
}
