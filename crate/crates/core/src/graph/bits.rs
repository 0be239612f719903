//! Fixed-width 512-bit vertex sets used as adjacency rows.

pub const MAX_VERTICES: usize = 512;
const WORDS: usize = MAX_VERTICES / 64;

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Bits([u64; WORDS]);

impl Bits {
    pub const EMPTY: Bits = Bits([0; WORDS]);

    #[inline]
    pub fn contains(&self, i: usize) -> bool {
        self.0[i >> 6] >> (i & 63) & 1 != 0
    }

    #[inline]
    pub fn insert(&mut self, i: usize) {
        self.0[i >> 6] |= 1 << (i & 63);
    }

    #[inline]
    pub fn remove(&mut self, i: usize) {
        self.0[i >> 6] &= !(1 << (i & 63));
    }

    #[inline]
    pub fn count(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.0.iter().all(|&w| w == 0)
    }

    pub fn is_subset_of(&self, other: &Bits) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a & !b == 0)
    }

    #[inline]
    pub fn and_assign(&mut self, other: &Bits) {
        for (a, b) in self.0.iter_mut().zip(other.0.iter()) {
            *a &= b;
        }
    }

    #[inline]
    pub fn andnot_assign(&mut self, other: &Bits) {
        for (a, b) in self.0.iter_mut().zip(other.0.iter()) {
            *a &= !b;
        }
    }

    #[inline]
    pub fn or_assign(&mut self, other: &Bits) {
        for (a, b) in self.0.iter_mut().zip(other.0.iter()) {
            *a |= b;
        }
    }

    /// All vertices with id strictly greater than `i`, intersected in place.
    pub fn keep_above(&mut self, i: usize) {
        let word = i >> 6;
        for w in 0..word {
            self.0[w] = 0;
        }
        let shift = (i & 63) + 1;
        if shift < 64 {
            self.0[word] &= !0u64 << shift;
        } else {
            self.0[word] = 0;
        }
    }

    /// Set the lowest `n` bits.
    pub fn all_below(n: usize) -> Bits {
        let mut b = Bits::EMPTY;
        let full = n >> 6;
        for w in 0..full {
            b.0[w] = !0;
        }
        let rem = n & 63;
        if rem != 0 {
            b.0[full] = (1u64 << rem) - 1;
        }
        b
    }

    pub fn iter(&self) -> BitIter<'_> {
        BitIter {
            bits: self,
            word: 0,
            cur: self.0[0],
        }
    }
}

pub struct BitIter<'a> {
    bits: &'a Bits,
    word: usize,
    cur: u64,
}

impl Iterator for BitIter<'_> {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        while self.cur == 0 {
            self.word += 1;
            if self.word >= WORDS {
                return None;
            }
            self.cur = self.bits.0[self.word];
        }
        let tz = self.cur.trailing_zeros() as usize;
        self.cur &= self.cur - 1;
        Some(self.word * 64 + tz)
    }
}

impl std::fmt::Debug for Bits {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}
