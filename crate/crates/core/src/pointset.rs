//! Small bitset over a ground set of labeled points `0..n`.
//!
//! Everything in this crate works on ground sets of at most
//! [`PointSet::MAX_POINTS`] points, which comfortably covers the exhaustive
//! and randomized sweeps the rest of the crate performs.

use std::fmt;
use std::ops::{BitAnd, BitOr, BitOrAssign, Sub};

/// A set of points drawn from `0..128`, stored as a bit mask.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct PointSet(u128);

impl PointSet {
    /// Largest ground set representable.
    pub const MAX_POINTS: usize = 128;

    pub const EMPTY: PointSet = PointSet(0);

    pub fn singleton(p: usize) -> Self {
        debug_assert!(p < Self::MAX_POINTS);
        PointSet(1u128 << p)
    }

    /// The full set `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= Self::MAX_POINTS);
        if n == Self::MAX_POINTS {
            PointSet(u128::MAX)
        } else {
            PointSet((1u128 << n) - 1)
        }
    }

    pub fn contains(self, p: usize) -> bool {
        p < Self::MAX_POINTS && self.0 >> p & 1 == 1
    }

    pub fn insert(&mut self, p: usize) {
        debug_assert!(p < Self::MAX_POINTS);
        self.0 |= 1u128 << p;
    }

    pub fn remove(&mut self, p: usize) {
        if p < Self::MAX_POINTS {
            self.0 &= !(1u128 << p);
        }
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_subset(self, other: PointSet) -> bool {
        self.0 & !other.0 == 0
    }

    /// Complement within the ground set `{0, .., n-1}`.
    pub fn complement(self, n: usize) -> PointSet {
        PointSet(!self.0 & Self::full(n).0)
    }

    /// Smallest element, if any.
    pub fn first(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    pub fn iter(self) -> Points {
        Points(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl FromIterator<usize> for PointSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = PointSet::EMPTY;
        for p in iter {
            s.insert(p);
        }
        s
    }
}

impl BitOr for PointSet {
    type Output = PointSet;
    fn bitor(self, rhs: PointSet) -> PointSet {
        PointSet(self.0 | rhs.0)
    }
}

impl BitOrAssign for PointSet {
    fn bitor_assign(&mut self, rhs: PointSet) {
        self.0 |= rhs.0;
    }
}

impl BitAnd for PointSet {
    type Output = PointSet;
    fn bitand(self, rhs: PointSet) -> PointSet {
        PointSet(self.0 & rhs.0)
    }
}

impl Sub for PointSet {
    type Output = PointSet;
    fn sub(self, rhs: PointSet) -> PointSet {
        PointSet(self.0 & !rhs.0)
    }
}

/// Iterator over the elements of a [`PointSet`] in increasing order.
pub struct Points(u128);

impl Iterator for Points {
    type Item = usize;
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let p = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(p)
        }
    }
}

impl fmt::Debug for PointSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_ops() {
        let mut s: PointSet = [0, 2, 5].into_iter().collect();
        assert_eq!(s.len(), 3);
        assert!(s.contains(2));
        assert!(!s.contains(1));
        s.insert(1);
        s.remove(5);
        assert_eq!(s.to_vec(), vec![0, 1, 2]);
        assert_eq!(s.first(), Some(0));
        assert!(s.is_subset(PointSet::full(4)));
        assert_eq!(s.complement(4).to_vec(), vec![3]);
    }

    #[test]
    fn full_at_max_width() {
        let f = PointSet::full(PointSet::MAX_POINTS);
        assert_eq!(f.len(), 128);
        assert!(f.contains(127));
    }

    #[test]
    fn set_algebra() {
        let a: PointSet = [0, 1].into_iter().collect();
        let b: PointSet = [1, 2].into_iter().collect();
        assert_eq!((a | b).to_vec(), vec![0, 1, 2]);
        assert_eq!((a & b).to_vec(), vec![1]);
        assert_eq!((a - b).to_vec(), vec![0]);
        assert!(PointSet::EMPTY.is_empty());
    }
}
