//! Fixed-width subsets of a small ground set `{0, .., n-1}`.

use std::fmt;
use std::ops::{BitAnd, BitOr, Not, Sub};

/// Largest supported ground-set size.
pub const MAX_GROUND: usize = 16;

/// A subset of the ground set, stored as a bit mask (bit `e` set iff `e` is a member).
///
/// The ground-set size is carried by the matroid the subset is used with; use
/// [`Subset::fits`] to check that every member is below a given `n`.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subset(u32);

impl Subset {
    pub const EMPTY: Subset = Subset(0);

    #[inline]
    pub const fn from_bits(bits: u32) -> Self {
        Subset(bits)
    }

    #[inline]
    pub const fn bits(self) -> u32 {
        self.0
    }

    /// The whole ground set `{0, .., n-1}`.
    #[inline]
    pub const fn full(n: usize) -> Self {
        if n >= 32 {
            Subset(u32::MAX)
        } else {
            Subset((1u32 << n) - 1)
        }
    }

    #[inline]
    pub const fn singleton(e: usize) -> Self {
        Subset(1 << e)
    }

    pub fn from_elements<I: IntoIterator<Item = usize>>(elements: I) -> Self {
        let mut bits = 0u32;
        for e in elements {
            assert!(e < 32, "element index {e} out of range");
            bits |= 1 << e;
        }
        Subset(bits)
    }

    #[inline]
    pub const fn contains(self, e: usize) -> bool {
        e < 32 && self.0 & (1 << e) != 0
    }

    #[inline]
    #[must_use]
    pub const fn with(self, e: usize) -> Self {
        Subset(self.0 | (1 << e))
    }

    #[inline]
    #[must_use]
    pub const fn without(self, e: usize) -> Self {
        Subset(self.0 & !(1 << e))
    }

    #[inline]
    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub const fn union(self, other: Subset) -> Self {
        Subset(self.0 | other.0)
    }

    #[inline]
    pub const fn intersection(self, other: Subset) -> Self {
        Subset(self.0 & other.0)
    }

    #[inline]
    pub const fn difference(self, other: Subset) -> Self {
        Subset(self.0 & !other.0)
    }

    /// Complement relative to `{0, .., n-1}`.
    #[inline]
    pub const fn complement(self, n: usize) -> Self {
        Subset(!self.0 & Subset::full(n).0)
    }

    #[inline]
    pub const fn is_subset(self, other: Subset) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub const fn is_disjoint(self, other: Subset) -> bool {
        self.0 & other.0 == 0
    }

    /// True iff every member is `< n`.
    #[inline]
    pub const fn fits(self, n: usize) -> bool {
        self.is_subset(Subset::full(n))
    }

    /// Smallest member.
    #[inline]
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    /// Members in increasing order.
    #[inline]
    pub fn iter(self) -> Elements {
        Elements(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// All subsets of `self` (including `EMPTY` and `self`), in increasing bit order.
    pub fn subsets(self) -> Submasks {
        Submasks {
            mask: self.0,
            next: Some(0),
        }
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, e) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "}}")
    }
}

impl BitOr for Subset {
    type Output = Subset;
    fn bitor(self, rhs: Subset) -> Subset {
        self.union(rhs)
    }
}

impl BitAnd for Subset {
    type Output = Subset;
    fn bitand(self, rhs: Subset) -> Subset {
        self.intersection(rhs)
    }
}

impl Sub for Subset {
    type Output = Subset;
    fn sub(self, rhs: Subset) -> Subset {
        self.difference(rhs)
    }
}

impl Not for Subset {
    type Output = Subset;
    /// Complement within the full 32-bit universe; prefer [`Subset::complement`].
    fn not(self) -> Subset {
        Subset(!self.0)
    }
}

impl FromIterator<usize> for Subset {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        Subset::from_elements(iter)
    }
}

impl IntoIterator for Subset {
    type Item = usize;
    type IntoIter = Elements;
    fn into_iter(self) -> Elements {
        self.iter()
    }
}

#[derive(Clone, Debug)]
pub struct Elements(u32);

impl Iterator for Elements {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let e = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(e)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let k = self.0.count_ones() as usize;
        (k, Some(k))
    }
}

impl ExactSizeIterator for Elements {}

#[derive(Clone, Debug)]
pub struct Submasks {
    mask: u32,
    next: Option<u32>,
}

impl Iterator for Submasks {
    type Item = Subset;

    fn next(&mut self) -> Option<Subset> {
        let cur = self.next?;
        self.next = if cur == self.mask {
            None
        } else {
            Some((cur.wrapping_sub(self.mask)) & self.mask)
        };
        Some(Subset(cur))
    }
}

/// All `k`-element subsets of `{0, .., n-1}` in increasing bit order (Gosper's hack).
pub fn k_subsets(n: usize, k: usize) -> KSubsets {
    let next = if k > n {
        None
    } else if k == 0 {
        Some(0)
    } else {
        Some((1u32 << k) - 1)
    };
    KSubsets {
        limit: 1u64 << n,
        next,
    }
}

#[derive(Clone, Debug)]
pub struct KSubsets {
    limit: u64,
    next: Option<u32>,
}

impl Iterator for KSubsets {
    type Item = Subset;

    fn next(&mut self) -> Option<Subset> {
        let cur = self.next?;
        self.next = if cur == 0 {
            None
        } else {
            let c = cur & cur.wrapping_neg();
            let r = cur as u64 + c as u64;
            let nxt = (((r as u32 ^ cur) >> 2) / c) | r as u32;
            (r < self.limit && (nxt as u64) < self.limit).then_some(nxt)
        };
        Some(Subset(cur))
    }
}

/// `k`-element subsets of an arbitrary subset `within`, as subsets of the same ground set.
pub fn k_subsets_of(within: Subset, k: usize) -> impl Iterator<Item = Subset> {
    let elems = within.to_vec();
    k_subsets(elems.len(), k).map(move |c| expand(c, &elems))
}

/// Map a compact subset (bit `i` = `elems[i]`) back onto the ground set.
#[inline]
pub fn expand(compact: Subset, elems: &[usize]) -> Subset {
    let mut out = 0u32;
    for i in compact.iter() {
        out |= 1 << elems[i];
    }
    Subset(out)
}

/// Map a subset of `elems` to its compact form (bit `i` iff `elems[i]` is a member).
#[inline]
pub fn compress(s: Subset, elems: &[usize]) -> Subset {
    let mut out = 0u32;
    for (i, &e) in elems.iter().enumerate() {
        if s.contains(e) {
            out |= 1 << i;
        }
    }
    Subset(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k_subsets_counts() {
        for n in 0..=10 {
            for k in 0..=n + 1 {
                let all: Vec<_> = k_subsets(n, k).collect();
                let expect = (0u32..1 << n)
                    .filter(|m| m.count_ones() as usize == k)
                    .count();
                assert_eq!(all.len(), expect, "n={n} k={k}");
                assert!(all.windows(2).all(|w| w[0] < w[1]));
                assert!(all.iter().all(|s| s.len() == k && s.fits(n)));
            }
        }
    }

    #[test]
    fn k_subsets_at_full_width() {
        assert_eq!(k_subsets(16, 16).count(), 1);
        assert_eq!(k_subsets(16, 8).count(), 12870);
    }

    #[test]
    fn submasks_cover_everything() {
        let s = Subset::from_elements([1, 4, 5]);
        let subs: Vec<_> = s.subsets().collect();
        assert_eq!(subs.len(), 8);
        assert!(subs.iter().all(|t| t.is_subset(s)));
        assert_eq!(Subset::EMPTY.subsets().count(), 1);
    }

    #[test]
    fn compress_expand_inverse() {
        let elems = [0, 3, 7, 9];
        for c in 0u32..16 {
            let c = Subset::from_bits(c);
            assert_eq!(compress(expand(c, &elems), &elems), c);
        }
    }

    #[test]
    fn display() {
        assert_eq!(Subset::from_elements([2, 0, 5]).to_string(), "{0,2,5}");
        assert_eq!(Subset::EMPTY.to_string(), "{}");
    }
}
