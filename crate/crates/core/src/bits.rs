//! Packed bit strings.
//!
//! Used for self-delimiting history encodings and for the reference
//! machine's input and program tapes. Bits are stored LSB-first in
//! 64-bit words; unused high bits of the last word are kept zero so
//! that `Eq` and `Hash` can be derived.

use std::fmt;

#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitString {
    len: usize,
    words: Vec<u64>,
}

impl BitString {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_capacity(bits: usize) -> Self {
        Self {
            len: 0,
            words: Vec::with_capacity(bits.div_ceil(64)),
        }
    }

    /// Parses a string of '0'/'1' characters.
    pub fn parse(s: &str) -> Option<Self> {
        let mut out = Self::with_capacity(s.len());
        for c in s.chars() {
            match c {
                '0' => out.push(false),
                '1' => out.push(true),
                _ => return None,
            }
        }
        Some(out)
    }

    pub fn from_bits(bits: &[bool]) -> Self {
        let mut out = Self::with_capacity(bits.len());
        for &b in bits {
            out.push(b);
        }
        out
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn get(&self, i: usize) -> Option<bool> {
        if i >= self.len {
            return None;
        }
        Some(self.words[i / 64] >> (i % 64) & 1 == 1)
    }

    /// Panicking accessor for hot loops.
    #[inline]
    pub fn bit(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    #[inline]
    pub fn push(&mut self, b: bool) {
        let (w, o) = (self.len / 64, self.len % 64);
        if w == self.words.len() {
            self.words.push(0);
        }
        if b {
            self.words[w] |= 1 << o;
        }
        self.len += 1;
    }

    pub fn extend(&mut self, other: &BitString) {
        for i in 0..other.len {
            self.push(other.bit(i));
        }
    }

    pub fn concat(&self, other: &BitString) -> BitString {
        let mut out = self.clone();
        out.extend(other);
        out
    }

    pub fn truncate(&mut self, len: usize) {
        if len >= self.len {
            return;
        }
        self.len = len;
        self.words.truncate(len.div_ceil(64));
        // Re-zero the tail so Eq/Hash stay structural.
        if len % 64 != 0 {
            let last = self.words.len() - 1;
            self.words[last] &= (1u64 << (len % 64)) - 1;
        }
    }

    pub fn is_prefix_of(&self, other: &BitString) -> bool {
        if self.len > other.len {
            return false;
        }
        (0..self.len).all(|i| self.bit(i) == other.bit(i))
    }

    pub fn prefix(&self, len: usize) -> BitString {
        let mut out = self.clone();
        out.truncate(len);
        out
    }

    pub fn iter(&self) -> impl Iterator<Item = bool> + '_ {
        (0..self.len).map(move |i| self.bit(i))
    }
}

impl fmt::Display for BitString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in self.iter() {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for BitString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "b\"{self}\"")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn push_get_roundtrip() {
        let mut s = BitString::new();
        let pattern = [true, false, false, true, true, false, true];
        for &b in &pattern {
            s.push(b);
        }
        assert_eq!(s.len(), 7);
        for (i, &b) in pattern.iter().enumerate() {
            assert_eq!(s.get(i), Some(b));
        }
        assert_eq!(s.get(7), None);
        assert_eq!(s.to_string(), "1001101");
    }

    #[test]
    fn parse_and_prefix() {
        let a = BitString::parse("10110").unwrap();
        let b = BitString::parse("101").unwrap();
        assert!(b.is_prefix_of(&a));
        assert!(!a.is_prefix_of(&b));
        assert!(BitString::new().is_prefix_of(&a));
        assert_eq!(a.prefix(3), b);
    }

    #[test]
    fn truncate_rezeros_tail() {
        let mut a = BitString::parse("1111").unwrap();
        a.truncate(2);
        let b = BitString::parse("11").unwrap();
        assert_eq!(a, b);
        // Hash equality is structural: re-extend and compare.
        a.push(true);
        assert_eq!(a.to_string(), "111");
    }

    #[test]
    fn concat_lengths_cross_word_boundary() {
        let mut long = BitString::new();
        for i in 0..100 {
            long.push(i % 3 == 0);
        }
        let tail = BitString::parse("110").unwrap();
        let joined = long.concat(&tail);
        assert_eq!(joined.len(), 103);
        assert!(long.is_prefix_of(&joined));
        assert_eq!(joined.bit(100), true);
        assert_eq!(joined.bit(102), false);
    }
}
