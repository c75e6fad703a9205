//! Fixed-width bit sets over edge and vertex indices.

use std::cmp::Ordering;
use std::fmt;

/// Maximum number of edges a graph may have.
pub const MAX_EDGES: usize = 128;
/// Maximum number of vertices a graph may have.
pub const MAX_VERTICES: usize = 64;

/// A set of edge indices, bit `i` set iff edge `i` is a member.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct EdgeSet(pub u128);

impl EdgeSet {
    pub const EMPTY: EdgeSet = EdgeSet(0);

    pub fn from_indices<I: IntoIterator<Item = usize>>(indices: I) -> Self {
        let mut s = EdgeSet::EMPTY;
        for i in indices {
            s.insert(i);
        }
        s
    }

    #[inline]
    pub fn contains(self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, i: usize) {
        self.0 |= 1u128 << i;
    }

    #[inline]
    pub fn toggle(&mut self, i: usize) {
        self.0 ^= 1u128 << i;
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// Symmetric difference, i.e. addition over GF(2).
    #[inline]
    pub fn xor(self, other: EdgeSet) -> EdgeSet {
        EdgeSet(self.0 ^ other.0)
    }

    #[inline]
    pub fn and(self, other: EdgeSet) -> EdgeSet {
        EdgeSet(self.0 & other.0)
    }

    /// Parity of `|self ∩ other|`.
    #[inline]
    pub fn odd_overlap(self, other: EdgeSet) -> bool {
        (self.0 & other.0).count_ones() & 1 == 1
    }

    pub fn lowest(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn iter(self) -> EdgeSetIter {
        EdgeSetIter(self.0)
    }

    /// Lexicographic order of the bit vectors `(b_0, b_1, ...)` with `0 < 1`.
    pub fn cmp_bitwise(self, other: EdgeSet) -> Ordering {
        self.0.reverse_bits().cmp(&other.0.reverse_bits())
    }

    /// Lexicographic order of the sorted member lists, a proper prefix being smaller.
    pub fn cmp_members(self, other: EdgeSet) -> Ordering {
        let diff = self.0 ^ other.0;
        if diff == 0 {
            return Ordering::Equal;
        }
        let i = diff.trailing_zeros();
        let (with, without) = if self.contains(i as usize) {
            (Ordering::Less, Ordering::Greater)
        } else {
            (Ordering::Greater, Ordering::Less)
        };
        // Below `i` both lists agree. The set holding `i` is smaller unless the
        // other one has run out of members, in which case it is a prefix.
        let other_rest = if self.contains(i as usize) {
            other.0
        } else {
            self.0
        } >> i;
        if other_rest == 0 {
            without
        } else {
            with
        }
    }
}

impl fmt::Debug for EdgeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl FromIterator<usize> for EdgeSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        EdgeSet::from_indices(iter)
    }
}

pub struct EdgeSetIter(u128);

impl Iterator for EdgeSetIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i)
    }
}

/// A set of vertices, bit `v` set iff vertex `v` is a member.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(pub u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn from_vertices<I: IntoIterator<Item = usize>>(vertices: I) -> Self {
        VertexSet(vertices.into_iter().fold(0u64, |acc, v| acc | 1 << v))
    }

    #[inline]
    pub fn contains(self, v: usize) -> bool {
        self.0 >> v & 1 == 1
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut rest = self.0;
        std::iter::from_fn(move || {
            if rest == 0 {
                return None;
            }
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            Some(v)
        })
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}
