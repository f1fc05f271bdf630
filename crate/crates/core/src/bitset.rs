use alloc::vec;
use alloc::vec::Vec;

/// Fixed-length set of integers `0..len`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct BitSet {
    words: Vec<u64>,
    len: usize,
}

impl BitSet {
    pub fn new(len: usize) -> Self {
        BitSet {
            words: vec![0; len.div_ceil(64)],
            len,
        }
    }

    #[inline]
    pub fn insert(&mut self, i: usize) {
        if i < self.len {
            self.words[i / 64] |= 1 << (i % 64);
        }
    }

    #[inline]
    pub fn contains(&self, i: usize) -> bool {
        i < self.len && self.words[i / 64] >> (i % 64) & 1 == 1
    }

    /// `self |= other << shift`, truncated to `len`.
    pub fn or_shifted(&mut self, other: &BitSet, shift: usize) {
        let (word_shift, bit_shift) = (shift / 64, shift % 64);
        let n = self.words.len();
        if word_shift >= n {
            return;
        }
        for i in (word_shift..n).rev() {
            let src = i - word_shift;
            let mut w = other.words.get(src).copied().unwrap_or(0) << bit_shift;
            if bit_shift != 0 && src > 0 {
                w |= other.words.get(src - 1).copied().unwrap_or(0) >> (64 - bit_shift);
            }
            self.words[i] |= w;
        }
        self.clear_tail();
    }

    /// The sumset `{x + v : x in self, v in values}`.
    pub fn sumset(&self, values: &[usize]) -> BitSet {
        let mut out = BitSet::new(self.len);
        for &v in values {
            out.or_shifted(self, v);
        }
        out
    }

    /// Smallest `i` in `from..len` not in the set.
    pub fn first_missing_from(&self, from: usize) -> Option<usize> {
        (from..self.len).find(|&i| !self.contains(i))
    }

    fn clear_tail(&mut self) {
        let extra = self.words.len() * 64 - self.len;
        if extra > 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= u64::MAX >> extra;
            }
        }
    }
}
