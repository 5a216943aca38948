//! Small vertex sets as one-word bit masks.
//!
//! Everything in this crate lives on vertex set `{0, .., n-1}` with `n <= 64`,
//! so a subset of vertices (a graph neighborhood, a face of a complex, a
//! facet) is a single `u64`.

use std::fmt;
use std::ops::{BitAnd, BitAndAssign, BitOr, BitOrAssign, Sub, SubAssign};

/// A subset of `{0, .., 63}` stored as a bit mask.
///
/// Bit `v` set means vertex `v` is in the set. The empty set is a valid
/// value (it is the empty face of a complex, for instance).
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    /// The full set `{0, .., n-1}`.
    pub fn full(n: usize) -> VertexSet {
        assert!(n <= 64, "vertex sets hold at most 64 vertices");
        if n == 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(v: usize) -> VertexSet {
        assert!(v < 64, "vertex index out of range");
        VertexSet(1u64 << v)
    }

    pub fn from_bits(bits: u64) -> VertexSet {
        VertexSet(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn contains(self, v: usize) -> bool {
        v < 64 && self.0 >> v & 1 == 1
    }

    #[must_use]
    pub fn with(self, v: usize) -> VertexSet {
        self | VertexSet::singleton(v)
    }

    #[must_use]
    pub fn without(self, v: usize) -> VertexSet {
        self - VertexSet::singleton(v)
    }

    /// Number of vertices in the set.
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    /// Smallest vertex, if any.
    pub fn first(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    /// Complement within `{0, .., n-1}`.
    #[must_use]
    pub fn complement_in(self, n: usize) -> VertexSet {
        VertexSet(!self.0) & VertexSet::full(n)
    }

    /// Vertices in ascending order.
    pub fn iter(self) -> Members {
        Members(self.0)
    }

    /// All `2^len` subsets of this set. The set itself comes first and the
    /// empty set last (descending mask order).
    pub fn subsets(self) -> Subsets {
        Subsets {
            mask: self.0,
            cur: self.0,
            done: false,
        }
    }

    /// All `k`-element subsets of `{0, .., n-1}` in ascending mask order.
    pub fn k_subsets(n: usize, k: usize) -> KSubsets {
        assert!(n < 64, "k_subsets supports n < 64");
        let remaining = binomial(n, k);
        let cur = if k == 0 { 0 } else { (1u64 << k) - 1 };
        KSubsets { cur, remaining }
    }
}

/// Binomial coefficient, saturating at `u64::MAX` (plenty for n < 64).
pub fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u64 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u64 / (i + 1) as u64;
    }
    acc
}

impl BitOr for VertexSet {
    type Output = VertexSet;
    fn bitor(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 | rhs.0)
    }
}

impl BitOrAssign for VertexSet {
    fn bitor_assign(&mut self, rhs: VertexSet) {
        self.0 |= rhs.0;
    }
}

impl BitAnd for VertexSet {
    type Output = VertexSet;
    fn bitand(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 & rhs.0)
    }
}

impl BitAndAssign for VertexSet {
    fn bitand_assign(&mut self, rhs: VertexSet) {
        self.0 &= rhs.0;
    }
}

/// Set difference.
impl Sub for VertexSet {
    type Output = VertexSet;
    fn sub(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 & !rhs.0)
    }
}

impl SubAssign for VertexSet {
    fn sub_assign(&mut self, rhs: VertexSet) {
        self.0 &= !rhs.0;
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> VertexSet {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s |= VertexSet::singleton(v);
        }
        s
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = Members;
    fn into_iter(self) -> Members {
        self.iter()
    }
}

#[derive(Clone)]
pub struct Members(u64);

impl Iterator for Members {
    type Item = usize;
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let v = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(v)
        }
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let c = self.0.count_ones() as usize;
        (c, Some(c))
    }
}

impl ExactSizeIterator for Members {}

#[derive(Clone)]
pub struct Subsets {
    mask: u64,
    cur: u64,
    done: bool,
}

impl Iterator for Subsets {
    type Item = VertexSet;
    fn next(&mut self) -> Option<VertexSet> {
        if self.done {
            return None;
        }
        let out = VertexSet(self.cur);
        if self.cur == 0 {
            self.done = true;
        } else {
            self.cur = (self.cur - 1) & self.mask;
        }
        Some(out)
    }
}

#[derive(Clone)]
pub struct KSubsets {
    cur: u64,
    remaining: u64,
}

impl Iterator for KSubsets {
    type Item = VertexSet;
    fn next(&mut self) -> Option<VertexSet> {
        if self.remaining == 0 {
            return None;
        }
        let out = VertexSet(self.cur);
        self.remaining -= 1;
        if self.remaining > 0 {
            // Gosper's hack: next mask with the same popcount.
            let c = self.cur & self.cur.wrapping_neg();
            let r = self.cur + c;
            self.cur = (((self.cur ^ r) >> 2) / c) | r;
        }
        Some(out)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        (self.remaining as usize, Some(self.remaining as usize))
    }
}

impl ExactSizeIterator for KSubsets {}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn membership_and_len() {
        let s: VertexSet = [0, 2, 5].into_iter().collect();
        assert!(s.contains(0) && s.contains(2) && s.contains(5));
        assert!(!s.contains(1));
        assert_eq!(s.len(), 3);
        assert_eq!(s.iter().collect::<Vec<_>>(), vec![0, 2, 5]);
        assert_eq!(s.to_string(), "{0,2,5}");
    }

    #[test]
    fn subset_enumeration_counts() {
        let s: VertexSet = [1, 3, 4].into_iter().collect();
        let subs: Vec<_> = s.subsets().collect();
        assert_eq!(subs.len(), 8);
        assert_eq!(subs[0], s);
        assert_eq!(*subs.last().unwrap(), VertexSet::EMPTY);
        assert!(subs.iter().all(|t| t.is_subset(s)));
    }

    #[test]
    fn k_subsets_are_sorted_and_complete() {
        let all: Vec<_> = VertexSet::k_subsets(6, 3).collect();
        assert_eq!(all.len(), 20);
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        assert!(all.iter().all(|s| s.len() == 3 && s.is_subset(VertexSet::full(6))));
        assert_eq!(VertexSet::k_subsets(5, 0).count(), 1);
        assert_eq!(VertexSet::k_subsets(4, 5).count(), 0);
    }

    #[test]
    fn complement_and_difference() {
        let s: VertexSet = [0, 1].into_iter().collect();
        assert_eq!(s.complement_in(4), [2, 3].into_iter().collect());
        let t: VertexSet = [1, 2].into_iter().collect();
        assert_eq!(s - t, VertexSet::singleton(0));
    }

    #[test]
    fn binomial_small_values() {
        assert_eq!(binomial(6, 3), 20);
        assert_eq!(binomial(15, 0), 1);
        assert_eq!(binomial(4, 2), 6);
        assert_eq!(binomial(3, 5), 0);
    }
}
