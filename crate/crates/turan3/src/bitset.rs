//! Fixed-width bitsets used as vertex sets and adjacency rows.
//!
//! `Bits<1>` covers graphs on up to 64 vertices and is the workhorse;
//! `Bits<4>` covers up to 256 vertices for cold paths (large formula checks).

/// A set of small nonnegative integers stored in `W` machine words.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Bits<const W: usize>(pub [u64; W]);

impl<const W: usize> Default for Bits<W> {
    fn default() -> Self {
        Self::empty()
    }
}

impl<const W: usize> Bits<W> {
    /// Largest element count this width can represent.
    pub const CAPACITY: usize = 64 * W;

    pub fn empty() -> Self {
        Bits([0; W])
    }

    /// The set {0, 1, ..., n-1}.
    pub fn all_below(n: usize) -> Self {
        debug_assert!(n <= Self::CAPACITY);
        let mut out = Self::empty();
        for i in 0..W {
            let lo = i * 64;
            if n >= lo + 64 {
                out.0[i] = !0;
            } else if n > lo {
                out.0[i] = (1u64 << (n - lo)) - 1;
            }
        }
        out
    }

    pub fn singleton(v: usize) -> Self {
        let mut out = Self::empty();
        out.insert(v);
        out
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        debug_assert!(v < Self::CAPACITY);
        self.0[v / 64] >> (v % 64) & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        debug_assert!(v < Self::CAPACITY);
        self.0[v / 64] |= 1 << (v % 64);
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        debug_assert!(v < Self::CAPACITY);
        self.0[v / 64] &= !(1 << (v % 64));
    }

    #[inline]
    pub fn count(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.0.iter().all(|&w| w == 0)
    }

    #[inline]
    pub fn and(&self, other: &Self) -> Self {
        let mut out = *self;
        for i in 0..W {
            out.0[i] &= other.0[i];
        }
        out
    }

    #[inline]
    pub fn or(&self, other: &Self) -> Self {
        let mut out = *self;
        for i in 0..W {
            out.0[i] |= other.0[i];
        }
        out
    }

    /// Set difference `self \ other`.
    #[inline]
    pub fn minus(&self, other: &Self) -> Self {
        let mut out = *self;
        for i in 0..W {
            out.0[i] &= !other.0[i];
        }
        out
    }

    #[inline]
    pub fn intersects(&self, other: &Self) -> bool {
        (0..W).any(|i| self.0[i] & other.0[i] != 0)
    }

    #[inline]
    pub fn is_subset_of(&self, other: &Self) -> bool {
        (0..W).all(|i| self.0[i] & !other.0[i] == 0)
    }

    /// Smallest element, if any.
    pub fn first(&self) -> Option<usize> {
        for i in 0..W {
            if self.0[i] != 0 {
                return Some(i * 64 + self.0[i].trailing_zeros() as usize);
            }
        }
        None
    }

    /// Number of elements strictly below `v`.
    pub fn count_below(&self, v: usize) -> usize {
        let mut c = 0;
        let word = v / 64;
        for i in 0..word.min(W) {
            c += self.0[i].count_ones() as usize;
        }
        if word < W && v % 64 > 0 {
            c += (self.0[word] & ((1u64 << (v % 64)) - 1)).count_ones() as usize;
        }
        c
    }

    pub fn iter(&self) -> BitsIter<W> {
        BitsIter { words: self.0, base: 0, idx: 0 }
    }
}

impl<const W: usize> std::fmt::Debug for Bits<W> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

pub struct BitsIter<const W: usize> {
    words: [u64; W],
    base: usize,
    idx: usize,
}

impl<const W: usize> Iterator for BitsIter<W> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        while self.idx < W {
            let w = self.words[self.idx];
            if w != 0 {
                let bit = w.trailing_zeros() as usize;
                self.words[self.idx] &= w - 1;
                return Some(self.base + bit);
            }
            self.idx += 1;
            self.base += 64;
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn insert_contains_remove() {
        let mut b: Bits<1> = Bits::empty();
        assert!(b.is_empty());
        b.insert(0);
        b.insert(5);
        b.insert(63);
        assert!(b.contains(5) && b.contains(63) && !b.contains(4));
        assert_eq!(b.count(), 3);
        b.remove(5);
        assert!(!b.contains(5));
        assert_eq!(b.iter().collect::<Vec<_>>(), vec![0, 63]);
    }

    #[test]
    fn multiword() {
        let mut b: Bits<4> = Bits::empty();
        b.insert(70);
        b.insert(200);
        assert_eq!(b.count(), 2);
        assert_eq!(b.first(), Some(70));
        assert_eq!(b.iter().collect::<Vec<_>>(), vec![70, 200]);
        let full: Bits<4> = Bits::all_below(130);
        assert_eq!(full.count(), 130);
        assert!(full.contains(129) && !full.contains(130));
    }

    #[test]
    fn set_algebra() {
        let a: Bits<1> = Bits::all_below(6);
        let b: Bits<1> = Bits::singleton(4).or(&Bits::singleton(9));
        assert_eq!(a.and(&b).iter().collect::<Vec<_>>(), vec![4]);
        assert_eq!(a.minus(&b).count(), 5);
        assert!(a.intersects(&b));
        assert!(Bits::<1>::singleton(3).is_subset_of(&a));
        assert_eq!(a.count_below(4), 4);
        assert_eq!(a.count_below(100), 6);
    }
}
