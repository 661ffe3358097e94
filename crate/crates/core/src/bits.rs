//! Fixed-length bit vectors over GF(2).

use std::fmt;

const WORD_BITS: usize = 64;

/// A fixed-length vector over GF(2), packed into 64-bit words.
///
/// Bits past `len` in the last word are always zero, so equality and
/// hashing can compare words directly.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct BitVec {
    len: usize,
    words: Vec<u64>,
}

/// A subset of `{0, .., n-1}`, stored as its indicator vector.
pub type VertexSet = BitVec;

impl BitVec {
    pub fn zeros(len: usize) -> Self {
        Self {
            len,
            words: vec![0; len.div_ceil(WORD_BITS)],
        }
    }

    pub fn from_indices(len: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        let mut v = Self::zeros(len);
        for i in indices {
            v.set(i, true);
        }
        v
    }

    /// Builds a vector from the low `len` bits of `mask`.
    pub fn from_mask(len: usize, mask: u64) -> Self {
        assert!(len <= WORD_BITS, "from_mask supports at most 64 bits");
        let mut v = Self::zeros(len);
        if len > 0 {
            v.words[0] = mask & low_mask(len);
        }
        v
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.len, "bit index {i} out of range for length {}", self.len);
        (self.words[i / WORD_BITS] >> (i % WORD_BITS)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, value: bool) {
        assert!(i < self.len, "bit index {i} out of range for length {}", self.len);
        let bit = 1u64 << (i % WORD_BITS);
        if value {
            self.words[i / WORD_BITS] |= bit;
        } else {
            self.words[i / WORD_BITS] &= !bit;
        }
    }

    #[inline]
    pub fn flip(&mut self, i: usize) {
        assert!(i < self.len, "bit index {i} out of range for length {}", self.len);
        self.words[i / WORD_BITS] ^= 1u64 << (i % WORD_BITS);
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn none(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Parity of the number of set bits.
    pub fn parity(&self) -> bool {
        self.words.iter().fold(0u32, |acc, w| acc ^ w.count_ones()) & 1 == 1
    }

    /// Parity of `|self ∩ other|`, i.e. the GF(2) dot product.
    pub fn dot(&self, other: &BitVec) -> bool {
        assert_eq!(self.len, other.len, "length mismatch");
        self.words
            .iter()
            .zip(&other.words)
            .fold(0u32, |acc, (a, b)| acc ^ (a & b).count_ones())
            & 1
            == 1
    }

    pub fn xor_assign(&mut self, other: &BitVec) {
        assert_eq!(self.len, other.len, "length mismatch");
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    pub fn and(&self, other: &BitVec) -> BitVec {
        assert_eq!(self.len, other.len, "length mismatch");
        BitVec {
            len: self.len,
            words: self.words.iter().zip(&other.words).map(|(a, b)| a & b).collect(),
        }
    }

    pub fn and_not(&self, other: &BitVec) -> BitVec {
        assert_eq!(self.len, other.len, "length mismatch");
        BitVec {
            len: self.len,
            words: self.words.iter().zip(&other.words).map(|(a, b)| a & !b).collect(),
        }
    }

    pub fn is_disjoint(&self, other: &BitVec) -> bool {
        self.and(other).none()
    }

    /// Low 64 bits as an integer mask. Only meaningful for `len <= 64`.
    pub fn to_mask(&self) -> u64 {
        assert!(self.len <= WORD_BITS, "to_mask supports at most 64 bits");
        self.words.first().copied().unwrap_or(0)
    }

    /// Indices of the set bits, ascending.
    pub fn ones(&self) -> Ones<'_> {
        Ones {
            words: &self.words,
            word_idx: 0,
            current: self.words.first().copied().unwrap_or(0),
        }
    }

    /// Returns a copy resized to `len`, dropping or zero-filling as needed.
    pub fn resized(&self, len: usize) -> BitVec {
        let mut out = BitVec::zeros(len);
        for i in self.ones().take_while(|&i| i < len) {
            out.set(i, true);
        }
        out
    }

    /// Returns a copy of `self` embedded at `offset` inside a vector of length `len`.
    pub fn shifted_into(&self, len: usize, offset: usize) -> BitVec {
        assert!(offset + self.len <= len, "shifted vector does not fit");
        BitVec::from_indices(len, self.ones().map(|i| i + offset))
    }
}

#[inline]
fn low_mask(len: usize) -> u64 {
    if len >= WORD_BITS {
        u64::MAX
    } else {
        (1u64 << len) - 1
    }
}

pub struct Ones<'a> {
    words: &'a [u64],
    word_idx: usize,
    current: u64,
}

impl Iterator for Ones<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        loop {
            if self.current != 0 {
                let tz = self.current.trailing_zeros() as usize;
                self.current &= self.current - 1;
                return Some(self.word_idx * WORD_BITS + tz);
            }
            self.word_idx += 1;
            self.current = *self.words.get(self.word_idx)?;
        }
    }
}

impl fmt::Debug for BitVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.ones()).finish()
    }
}
