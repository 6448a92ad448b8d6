//! Fixed-capacity bitsets backing point sets, block sets, and vertex sets.
//!
//! Every set knows its capacity in bits; binary operations require equal
//! capacities. Bits above the capacity are kept at zero so that equality and
//! hashing can work on the raw words.

/// A set of indices `0..capacity`, stored as 64-bit words.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitSet {
    nbits: usize,
    words: Vec<u64>,
}

#[inline]
fn word_count(nbits: usize) -> usize {
    nbits.div_ceil(64)
}

impl BitSet {
    /// Empty set with room for `nbits` indices.
    pub fn new(nbits: usize) -> Self {
        BitSet {
            nbits,
            words: vec![0; word_count(nbits)],
        }
    }

    /// Set containing every index in `0..nbits`.
    pub fn full(nbits: usize) -> Self {
        let mut s = BitSet {
            nbits,
            words: vec![!0u64; word_count(nbits)],
        };
        s.mask_tail();
        s
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(nbits: usize, indices: I) -> Self {
        let mut s = BitSet::new(nbits);
        for i in indices {
            s.insert(i);
        }
        s
    }

    fn mask_tail(&mut self) {
        let extra = self.words.len() * 64 - self.nbits;
        if extra > 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= !0u64 >> extra;
            }
        }
    }

    pub fn capacity(&self) -> usize {
        self.nbits
    }

    #[inline]
    pub fn insert(&mut self, i: usize) {
        assert!(i < self.nbits, "index {i} out of capacity {}", self.nbits);
        self.words[i / 64] |= 1u64 << (i % 64);
    }

    #[inline]
    pub fn remove(&mut self, i: usize) {
        assert!(i < self.nbits, "index {i} out of capacity {}", self.nbits);
        self.words[i / 64] &= !(1u64 << (i % 64));
    }

    #[inline]
    pub fn contains(&self, i: usize) -> bool {
        i < self.nbits && self.words[i / 64] & (1u64 << (i % 64)) != 0
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    fn assert_same_capacity(&self, other: &BitSet) {
        assert_eq!(
            self.nbits, other.nbits,
            "bitset capacity mismatch: {} vs {}",
            self.nbits, other.nbits
        );
    }

    pub fn union_with(&mut self, other: &BitSet) {
        self.assert_same_capacity(other);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn intersect_with(&mut self, other: &BitSet) {
        self.assert_same_capacity(other);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    pub fn difference_with(&mut self, other: &BitSet) {
        self.assert_same_capacity(other);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
    }

    pub fn union(&self, other: &BitSet) -> BitSet {
        let mut s = self.clone();
        s.union_with(other);
        s
    }

    pub fn intersection(&self, other: &BitSet) -> BitSet {
        let mut s = self.clone();
        s.intersect_with(other);
        s
    }

    pub fn difference(&self, other: &BitSet) -> BitSet {
        let mut s = self.clone();
        s.difference_with(other);
        s
    }

    /// Complement within the capacity.
    pub fn complement(&self) -> BitSet {
        let mut s = BitSet {
            nbits: self.nbits,
            words: self.words.iter().map(|w| !w).collect(),
        };
        s.mask_tail();
        s
    }

    /// `|self & other|` without allocating.
    pub fn intersection_count(&self, other: &BitSet) -> usize {
        self.assert_same_capacity(other);
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    pub fn intersects(&self, other: &BitSet) -> bool {
        self.assert_same_capacity(other);
        self.words.iter().zip(&other.words).any(|(a, b)| a & b != 0)
    }

    /// `(self & mask) ∩ other != ∅` without allocating.
    pub fn masked_intersects(&self, mask: &BitSet, other: &BitSet) -> bool {
        self.assert_same_capacity(mask);
        self.assert_same_capacity(other);
        self.words
            .iter()
            .zip(&mask.words)
            .zip(&other.words)
            .any(|((a, m), o)| a & m & o != 0)
    }

    /// `dst |= self & mask` without allocating.
    pub fn masked_union_into(&self, mask: &BitSet, dst: &mut BitSet) {
        self.assert_same_capacity(mask);
        self.assert_same_capacity(dst);
        for ((a, m), d) in self.words.iter().zip(&mask.words).zip(&mut dst.words) {
            *d |= a & m;
        }
    }

    pub fn is_subset(&self, other: &BitSet) -> bool {
        self.assert_same_capacity(other);
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn first_one(&self) -> Option<usize> {
        for (wi, &w) in self.words.iter().enumerate() {
            if w != 0 {
                return Some(wi * 64 + w.trailing_zeros() as usize);
            }
        }
        None
    }

    pub fn iter_ones(&self) -> Ones<'_> {
        Ones {
            words: &self.words,
            word_index: 0,
            current: self.words.first().copied().unwrap_or(0),
        }
    }

    pub fn indices(&self) -> Vec<usize> {
        self.iter_ones().collect()
    }
}

/// Iterator over set indices in increasing order.
pub struct Ones<'a> {
    words: &'a [u64],
    word_index: usize,
    current: u64,
}

impl Iterator for Ones<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        while self.current == 0 {
            self.word_index += 1;
            if self.word_index >= self.words.len() {
                return None;
            }
            self.current = self.words[self.word_index];
        }
        let bit = self.current.trailing_zeros() as usize;
        self.current &= self.current - 1;
        Some(self.word_index * 64 + bit)
    }
}

impl Ord for BitSet {
    /// Lexicographic order on the increasing index sequences, so `{0,3} < {1,2}`.
    /// Blocks of a design are kept sorted under this order.
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.iter_ones()
            .cmp(other.iter_ones())
            .then(self.nbits.cmp(&other.nbits))
    }
}

impl PartialOrd for BitSet {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl std::fmt::Debug for BitSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_set().entries(self.iter_ones()).finish()
    }
}

/// Calls `f` on every `k`-subset of `0..n`, in lexicographic order.
///
/// Used by exhaustive oracles and bound checks; deliberately simple.
pub fn for_each_combination<F: FnMut(&[usize])>(n: usize, k: usize, f: &mut F) {
    fn rec<F: FnMut(&[usize])>(n: usize, k: usize, start: usize, buf: &mut Vec<usize>, f: &mut F) {
        if buf.len() == k {
            f(buf);
            return;
        }
        let remaining = k - buf.len();
        for i in start..=n.saturating_sub(remaining) {
            buf.push(i);
            rec(n, k, i + 1, buf, f);
            buf.pop();
        }
    }
    if k > n {
        return;
    }
    let mut buf = Vec::with_capacity(k);
    rec(n, k, 0, &mut buf, f);
}

/// Number of `k`-subsets of an `n`-set, saturating at `u64::MAX`.
pub fn binomial(n: u64, k: u64) -> u64 {
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

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn insert_remove_contains() {
        let mut s = BitSet::new(70);
        s.insert(0);
        s.insert(65);
        assert!(s.contains(0) && s.contains(65) && !s.contains(64));
        s.remove(65);
        assert!(!s.contains(65));
        assert_eq!(s.count_ones(), 1);
    }

    #[test]
    fn full_masks_tail() {
        let s = BitSet::full(70);
        assert_eq!(s.count_ones(), 70);
        assert_eq!(s.complement().count_ones(), 0);
    }

    #[test]
    fn set_algebra() {
        let a = BitSet::from_indices(10, [0, 1, 3]);
        let b = BitSet::from_indices(10, [1, 2, 3]);
        assert_eq!(a.intersection(&b).indices(), vec![1, 3]);
        assert_eq!(a.union(&b).indices(), vec![0, 1, 2, 3]);
        assert_eq!(a.difference(&b).indices(), vec![0]);
        assert_eq!(a.intersection_count(&b), 2);
        assert!(a.intersects(&b));
        assert!(a.intersection(&b).is_subset(&a));
    }

    #[test]
    fn lexicographic_order_on_index_sequences() {
        let lo = BitSet::from_indices(4, [0, 3]);
        let hi = BitSet::from_indices(4, [1, 2]);
        assert!(lo < hi, "{{0,3}} sorts before {{1,2}}");
        let prefix = BitSet::from_indices(4, [0]);
        assert!(prefix < lo, "a strict prefix sorts first");
    }

    #[test]
    fn combinations_count() {
        let mut count = 0u64;
        for_each_combination(7, 3, &mut |c| {
            assert!(c.windows(2).all(|w| w[0] < w[1]));
            count += 1;
        });
        assert_eq!(count, binomial(7, 3));
        assert_eq!(binomial(7, 3), 35);
    }
}
