//! Subsets of `[n] = {1, ..., n}` for `n <= 8`, stored as bitmasks.

use std::cmp::Ordering;
use std::fmt;
use std::sync::OnceLock;

/// Largest ground set supported by [`SubsetIndex`].
pub const MAX_N: usize = 8;

/// A subset `I` of `[n]`, bit `i - 1` set iff `i` is in `I`.
///
/// The ordering is by cardinality first, then lexicographic on the sorted
/// element sequence, so `{} < {1} < {2} < {1,2} < {1,3} < {2,3} < {1,2,3}`.
#[derive(Copy, Clone, PartialEq, Eq, Hash, Default)]
pub struct SubsetIndex(pub u8);

fn rank_tables() -> &'static ([u8; 256], [u8; 256]) {
    static TABLES: OnceLock<([u8; 256], [u8; 256])> = OnceLock::new();
    TABLES.get_or_init(|| {
        let mut all: Vec<u8> = (0..=255u8).collect();
        all.sort_by(|a, b| cmp_subsets(*a, *b));
        let mut rank = [0u8; 256];
        let mut unrank = [0u8; 256];
        for (r, m) in all.into_iter().enumerate() {
            rank[m as usize] = r as u8;
            unrank[r] = m;
        }
        (rank, unrank)
    })
}

fn cmp_subsets(a: u8, b: u8) -> Ordering {
    a.count_ones().cmp(&b.count_ones()).then_with(|| {
        let ea = SubsetIndex(a).elements();
        let eb = SubsetIndex(b).elements();
        ea.cmp(&eb)
    })
}

impl SubsetIndex {
    pub const EMPTY: SubsetIndex = SubsetIndex(0);

    pub fn from_elements<I: IntoIterator<Item = usize>>(elems: I) -> Self {
        let mut m = 0u8;
        for e in elems {
            assert!((1..=MAX_N).contains(&e), "subset element {e} out of range");
            m |= 1 << (e - 1);
        }
        SubsetIndex(m)
    }

    /// The full set `[n]`.
    pub fn full(n: usize) -> Self {
        assert!(n <= MAX_N);
        SubsetIndex(((1u16 << n) - 1) as u8)
    }

    pub fn singleton(i: usize) -> Self {
        Self::from_elements([i])
    }

    pub fn mask(self) -> u8 {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, i: usize) -> bool {
        i >= 1 && i <= MAX_N && self.0 & (1 << (i - 1)) != 0
    }

    pub fn insert(self, i: usize) -> Self {
        SubsetIndex(self.0 | (1 << (i - 1)))
    }

    pub fn remove(self, i: usize) -> Self {
        SubsetIndex(self.0 & !(1 << (i - 1)))
    }

    pub fn union(self, o: Self) -> Self {
        SubsetIndex(self.0 | o.0)
    }

    pub fn intersection(self, o: Self) -> Self {
        SubsetIndex(self.0 & o.0)
    }

    pub fn difference(self, o: Self) -> Self {
        SubsetIndex(self.0 & !o.0)
    }

    pub fn is_subset_of(self, o: Self) -> bool {
        self.0 & !o.0 == 0
    }

    /// Smallest element, if any.
    pub fn min_element(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize + 1)
    }

    /// Elements in increasing order (1-based).
    pub fn elements(self) -> Vec<usize> {
        (1..=MAX_N).filter(|&i| self.contains(i)).collect()
    }

    /// Position in the global (cardinality, lexicographic) order over all
    /// subsets of `[8]`. Restricted to subsets of `[n]` this is the canonical
    /// order as well.
    pub fn rank(self) -> u8 {
        rank_tables().0[self.0 as usize]
    }

    pub fn from_rank(r: u8) -> Self {
        SubsetIndex(rank_tables().1[r as usize])
    }

    /// All `2^n` subsets of `[n]` in canonical order.
    pub fn all(n: usize) -> Vec<SubsetIndex> {
        assert!(n <= MAX_N);
        let mut v: Vec<SubsetIndex> = (0..(1u16 << n)).map(|m| SubsetIndex(m as u8)).collect();
        v.sort();
        v
    }

    /// All subsets of `self` (including empty and `self`), in canonical order.
    pub fn subsets(self) -> Vec<SubsetIndex> {
        let mut out = Vec::new();
        let mut s = self.0;
        loop {
            out.push(SubsetIndex(s));
            if s == 0 {
                break;
            }
            s = (s - 1) & self.0;
        }
        out.sort();
        out
    }

    /// Image under a permutation of `[n]` given as `perm[i-1] = sigma(i)`.
    pub fn permute(self, perm: &[usize]) -> Self {
        SubsetIndex::from_elements(self.elements().into_iter().map(|i| perm[i - 1]))
    }

    /// Digits of the elements, e.g. `"134"`; empty string for the empty set.
    pub fn digits(self) -> String {
        self.elements().iter().map(|e| char::from(b'0' + *e as u8)).collect()
    }

    /// Parses a digit string such as `"134"` (empty string is the empty set).
    pub fn parse_digits(s: &str) -> Option<Self> {
        let mut m = 0u8;
        for ch in s.chars() {
            let d = ch.to_digit(10)? as usize;
            if !(1..=MAX_N).contains(&d) || m & (1 << (d - 1)) != 0 {
                return None;
            }
            m |= 1 << (d - 1);
        }
        Some(SubsetIndex(m))
    }
}

impl Ord for SubsetIndex {
    fn cmp(&self, other: &Self) -> Ordering {
        self.rank().cmp(&other.rank())
    }
}

impl PartialOrd for SubsetIndex {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for SubsetIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.digits())
    }
}

impl fmt::Display for SubsetIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            write!(f, "{{}}")
        } else {
            write!(f, "{}", self.digits())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_order_small() {
        let names: Vec<String> = SubsetIndex::all(3).into_iter().map(|s| s.digits()).collect();
        assert_eq!(names, ["", "1", "2", "3", "12", "13", "23", "123"]);
    }

    #[test]
    fn rank_roundtrip() {
        for m in 0..=255u8 {
            let s = SubsetIndex(m);
            assert_eq!(SubsetIndex::from_rank(s.rank()), s);
        }
    }

    #[test]
    fn subsets_of_pair() {
        let s = SubsetIndex::from_elements([2, 4]);
        let subs: Vec<String> = s.subsets().into_iter().map(|x| x.digits()).collect();
        assert_eq!(subs, ["", "2", "4", "24"]);
    }

    #[test]
    fn permute_transposition() {
        let s = SubsetIndex::from_elements([1, 3, 4]);
        assert_eq!(s.permute(&[2, 1, 3, 4]).digits(), "234");
    }
}
