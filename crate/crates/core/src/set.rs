//! Element subsets as single-word bit masks.

use std::fmt;

/// A subset of the ground set `{0, .., m-1}` packed into a `u32`.
///
/// The owning matroid's size `m` is not stored here; operations that need it
/// (complement, validity checks) take it as an argument. Masks are ordered by
/// their integer value, which is the lexicographic order used for all
/// deterministic listings in this crate.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct ElementSet(u32);

impl ElementSet {
    pub const EMPTY: ElementSet = ElementSet(0);

    #[inline]
    pub fn from_bits(bits: u32) -> Self {
        ElementSet(bits)
    }

    #[inline]
    pub fn bits(self) -> u32 {
        self.0
    }

    /// The full ground set `{0, .., m-1}`.
    #[inline]
    pub fn full(m: usize) -> Self {
        debug_assert!(m <= crate::MAX_ELEMENTS);
        ElementSet(((1u64 << m) - 1) as u32)
    }

    #[inline]
    pub fn singleton(e: usize) -> Self {
        ElementSet(1 << e)
    }

    pub fn from_elements<I: IntoIterator<Item = usize>>(elements: I) -> Self {
        let mut bits = 0u32;
        for e in elements {
            bits |= 1 << e;
        }
        ElementSet(bits)
    }

    #[inline]
    pub fn contains(self, e: usize) -> bool {
        self.0 >> e & 1 == 1
    }

    #[inline]
    pub fn with(self, e: usize) -> Self {
        ElementSet(self.0 | 1 << e)
    }

    #[inline]
    pub fn without(self, e: usize) -> Self {
        ElementSet(self.0 & !(1 << e))
    }

    #[inline]
    pub fn union(self, other: Self) -> Self {
        ElementSet(self.0 | other.0)
    }

    #[inline]
    pub fn intersect(self, other: Self) -> Self {
        ElementSet(self.0 & other.0)
    }

    #[inline]
    pub fn minus(self, other: Self) -> Self {
        ElementSet(self.0 & !other.0)
    }

    /// Complement within the ground set `{0, .., m-1}`.
    #[inline]
    pub fn complement(self, m: usize) -> Self {
        ElementSet(Self::full(m).0 & !self.0)
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn is_subset_of(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub fn intersects(self, other: Self) -> bool {
        self.0 & other.0 != 0
    }

    #[inline]
    pub fn min_element(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    /// Elements in ascending order.
    pub fn iter(self) -> Elements {
        Elements(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl FromIterator<usize> for ElementSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        Self::from_elements(iter)
    }
}

fn fmt_as_set(set: ElementSet, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    write!(f, "{{")?;
    let mut first = true;
    for e in set.iter() {
        if !first {
            write!(f, ",")?;
        }
        write!(f, "{e}")?;
        first = false;
    }
    write!(f, "}}")
}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_as_set(*self, f)
    }
}

impl fmt::Display for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_as_set(*self, f)
    }
}

pub struct Elements(u32);

impl Iterator for Elements {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let e = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(e)
        }
    }
}

/// All subsets of `mask`, in carry-rippler order (empty set first, `mask`
/// last). Visits 2^|mask| masks.
pub fn subsets_of(mask: ElementSet) -> Subsets {
    Subsets {
        universe: mask.bits(),
        current: 0,
        done: false,
    }
}

pub struct Subsets {
    universe: u32,
    current: u32,
    done: bool,
}

impl Iterator for Subsets {
    type Item = ElementSet;

    #[inline]
    fn next(&mut self) -> Option<ElementSet> {
        if self.done {
            return None;
        }
        let out = self.current;
        self.current = self.current.wrapping_sub(self.universe) & self.universe;
        self.done = self.current == 0;
        Some(ElementSet(out))
    }
}

/// All size-`k` subsets of `mask`, ascending as masks.
pub fn subsets_of_size(mask: ElementSet, k: usize) -> SizedSubsets {
    let positions: Vec<u8> = mask.iter().map(|e| e as u8).collect();
    let done = k > positions.len();
    SizedSubsets {
        indices: (0..k as u8).collect(),
        positions,
        done,
    }
}

pub struct SizedSubsets {
    positions: Vec<u8>,
    indices: Vec<u8>,
    done: bool,
}

impl Iterator for SizedSubsets {
    type Item = ElementSet;

    fn next(&mut self) -> Option<ElementSet> {
        if self.done {
            return None;
        }
        let mut bits = 0u32;
        for &i in &self.indices {
            bits |= 1 << self.positions[i as usize];
        }
        // advance the index combination
        let n = self.positions.len();
        let k = self.indices.len();
        if k == 0 {
            self.done = true;
        } else {
            let mut i = k;
            loop {
                if i == 0 {
                    self.done = true;
                    break;
                }
                i -= 1;
                if (self.indices[i] as usize) < n - (k - i) {
                    self.indices[i] += 1;
                    for j in i + 1..k {
                        self.indices[j] = self.indices[j - 1] + 1;
                    }
                    break;
                }
            }
        }
        Some(ElementSet(bits))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn set_algebra_closed_over_ground_set() {
        let m = 7;
        let a = ElementSet::from_elements([0, 2, 5]);
        let b = ElementSet::from_elements([2, 3]);
        let full = ElementSet::full(m);
        assert!(a.union(b).is_subset_of(full));
        assert!(a.intersect(b).is_subset_of(full));
        assert!(a.minus(b).is_subset_of(full));
        assert!(a.complement(m).is_subset_of(full));
        assert_eq!(a.complement(m).complement(m), a);
        assert_eq!(a.union(b).len(), 4);
        assert_eq!(a.intersect(b), ElementSet::singleton(2));
    }

    #[test]
    fn subset_iterators() {
        let mask = ElementSet::from_elements([1, 3, 4]);
        let all: Vec<_> = subsets_of(mask).collect();
        assert_eq!(all.len(), 8);
        assert_eq!(all[0], ElementSet::EMPTY);
        assert_eq!(*all.last().unwrap(), mask);

        let pairs: Vec<_> = subsets_of_size(mask, 2).collect();
        assert_eq!(pairs.len(), 3);
        assert!(pairs.windows(2).all(|w| w[0] < w[1]));
        for p in pairs {
            assert_eq!(p.len(), 2);
            assert!(p.is_subset_of(mask));
        }
        assert_eq!(subsets_of_size(mask, 0).count(), 1);
        assert_eq!(subsets_of_size(mask, 4).count(), 0);
    }

    #[test]
    fn display_lists_elements() {
        let a = ElementSet::from_elements([0, 2, 5]);
        assert_eq!(format!("{a}"), "{0,2,5}");
        assert_eq!(format!("{}", ElementSet::EMPTY), "{}");
    }
}
