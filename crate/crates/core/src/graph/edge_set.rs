use std::cmp::Ordering;
use std::fmt;

use super::EdgeId;

/// A set of edge ids backed by a 128-bit mask.
///
/// Ordering is lexicographic on the sorted id lists, so `{0, 5} < {1}` and
/// `{1} < {1, 2}`.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct EdgeSet(u128);

impl EdgeSet {
    pub const CAPACITY: usize = 128;

    pub const fn empty() -> Self {
        EdgeSet(0)
    }

    /// `{0, 1, ..., m - 1}`.
    pub fn full(m: usize) -> Self {
        assert!(m <= Self::CAPACITY);
        if m == Self::CAPACITY {
            EdgeSet(u128::MAX)
        } else {
            EdgeSet((1u128 << m) - 1)
        }
    }

    pub const fn from_bits(bits: u128) -> Self {
        EdgeSet(bits)
    }

    pub const fn bits(self) -> u128 {
        self.0
    }

    pub fn contains(self, e: EdgeId) -> bool {
        e < Self::CAPACITY && self.0 >> e & 1 == 1
    }

    pub fn insert(&mut self, e: EdgeId) {
        assert!(e < Self::CAPACITY, "edge id {e} exceeds EdgeSet capacity");
        self.0 |= 1 << e;
    }

    pub fn remove(&mut self, e: EdgeId) {
        if e < Self::CAPACITY {
            self.0 &= !(1 << e);
        }
    }

    pub fn with(mut self, e: EdgeId) -> Self {
        self.insert(e);
        self
    }

    pub fn without(mut self, e: EdgeId) -> Self {
        self.remove(e);
        self
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: Self) -> Self {
        EdgeSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        EdgeSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        EdgeSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    /// Ids in ascending order.
    pub fn iter(self) -> impl Iterator<Item = EdgeId> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let e = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(e)
            }
        })
    }

    pub fn to_vec(self) -> Vec<EdgeId> {
        self.iter().collect()
    }
}

impl FromIterator<EdgeId> for EdgeSet {
    fn from_iter<I: IntoIterator<Item = EdgeId>>(iter: I) -> Self {
        let mut s = EdgeSet::empty();
        for e in iter {
            s.insert(e);
        }
        s
    }
}

impl Ord for EdgeSet {
    fn cmp(&self, other: &Self) -> Ordering {
        let diff = self.0 ^ other.0;
        if diff == 0 {
            return Ordering::Equal;
        }
        let d = diff.trailing_zeros();
        // The sets agree below `d`; exactly one of them contains `d`.
        let above = |x: u128| if d >= 127 { 0 } else { x >> (d + 1) };
        if self.0 >> d & 1 == 1 {
            // other continues with something larger than d, or stops here
            if above(other.0) != 0 {
                Ordering::Less
            } else {
                Ordering::Greater
            }
        } else if above(self.0) != 0 {
            Ordering::Greater
        } else {
            Ordering::Less
        }
    }
}

impl PartialOrd for EdgeSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for EdgeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn basic_ops() {
        let s: EdgeSet = [3, 1, 7].into_iter().collect();
        assert_eq!(s.to_vec(), vec![1, 3, 7]);
        assert_eq!(s.len(), 3);
        assert!(s.contains(3) && !s.contains(2));
        assert_eq!(s.without(3).with(127).to_vec(), vec![1, 7, 127]);
        assert_eq!(EdgeSet::full(4).to_vec(), vec![0, 1, 2, 3]);
    }

    proptest! {
        #[test]
        fn order_matches_sorted_vectors(a in proptest::collection::btree_set(0usize..128, 0..8),
                                        b in proptest::collection::btree_set(0usize..128, 0..8)) {
            let sa: EdgeSet = a.iter().copied().collect();
            let sb: EdgeSet = b.iter().copied().collect();
            let va: Vec<_> = a.into_iter().collect();
            let vb: Vec<_> = b.into_iter().collect();
            prop_assert_eq!(sa.cmp(&sb), va.cmp(&vb));
        }
    }
}
