//! Words in the free monoid on the generators.
//!
//! A word is a finite sequence of generator indices.  The derived `Ord` is
//! the structural order (length, then lexicographic on indices); it is used
//! for deterministic storage only.  Comparisons that matter mathematically go
//! through [`crate::order::MonomialOrder`].

use std::fmt;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Word(Vec<u32>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn gen(i: usize) -> Self {
        Word(vec![i as u32])
    }

    pub fn from_letters(letters: Vec<u32>) -> Self {
        Word(letters)
    }

    pub fn letters(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.0.len() + other.0.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn pow(&self, k: u32) -> Word {
        let mut v = Vec::with_capacity(self.0.len() * k as usize);
        for _ in 0..k {
            v.extend_from_slice(&self.0);
        }
        Word(v)
    }

    pub fn slice(&self, from: usize, to: usize) -> Word {
        Word(self.0[from..to].to_vec())
    }

    pub fn reversed(&self) -> Word {
        let mut v = self.0.clone();
        v.reverse();
        Word(v)
    }

    /// Applies a generator renumbering letter by letter.
    pub fn map_letters(&self, f: impl Fn(u32) -> u32) -> Word {
        Word(self.0.iter().map(|&l| f(l)).collect())
    }

    /// Leftmost position where `pattern` occurs as a contiguous subword.
    pub fn find(&self, pattern: &Word) -> Option<usize> {
        if pattern.is_empty() {
            return Some(0);
        }
        if pattern.len() > self.len() {
            return None;
        }
        (0..=self.len() - pattern.len()).find(|&i| self.0[i..i + pattern.len()] == pattern.0[..])
    }

    pub fn ends_with(&self, suffix: &Word) -> bool {
        suffix.len() <= self.len() && self.0[self.len() - suffix.len()..] == suffix.0[..]
    }

    /// Replaces the occurrence of `pattern` at position `at` by `replacement`.
    pub fn splice(&self, at: usize, pattern_len: usize, replacement: &Word) -> Word {
        let mut v = Vec::with_capacity(self.0.len() - pattern_len + replacement.len());
        v.extend_from_slice(&self.0[..at]);
        v.extend_from_slice(&replacement.0);
        v.extend_from_slice(&self.0[at + pattern_len..]);
        Word(v)
    }

    /// Lengths `o` such that the last `o` letters of `self` equal the first
    /// `o` letters of `other`, with `o` a proper overlap of both words.
    pub fn proper_overlaps(&self, other: &Word) -> Vec<usize> {
        let max = self.len().min(other.len()).saturating_sub(1);
        (1..=max)
            .filter(|&o| self.0[self.len() - o..] == other.0[..o])
            .collect()
    }

    pub fn weighted_degree(&self, weights: &[u32]) -> u64 {
        self.0.iter().map(|&l| weights[l as usize] as u64).sum()
    }

    /// Number of letters whose weight is zero; bounded separately by the cap
    /// so that degree strata stay finite-dimensional after truncation.
    pub fn zero_weight_count(&self, weights: &[u32]) -> u64 {
        self.0.iter().filter(|&&l| weights[l as usize] == 0).count() as u64
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.len().cmp(&other.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Words print as index sequences; name-aware printing lives with the
/// presentation, which knows the generator names.
impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self.0.iter().map(|l| format!("g{l}")).collect();
        write!(f, "{}", parts.join("."))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(letters: &[u32]) -> Word {
        Word::from_letters(letters.to_vec())
    }

    #[test]
    fn find_and_splice() {
        let u = w(&[1, 0, 0, 1]);
        assert_eq!(u.find(&w(&[0, 0])), Some(1));
        assert_eq!(u.find(&w(&[1, 1])), None);
        assert_eq!(u.splice(1, 2, &w(&[2])), w(&[1, 2, 1]));
    }

    #[test]
    fn overlaps() {
        // yx against itself: no proper overlap.
        assert!(w(&[1, 0]).proper_overlaps(&w(&[1, 0])).is_empty());
        // hf against fe overlap in the single letter f.
        assert_eq!(w(&[2, 1]).proper_overlaps(&w(&[1, 0])), vec![1]);
        // aba against aba overlaps in a.
        assert_eq!(w(&[0, 1, 0]).proper_overlaps(&w(&[0, 1, 0])), vec![1]);
    }

    #[test]
    fn structural_order_is_length_then_lex() {
        assert!(w(&[1]) < w(&[0, 0]));
        assert!(w(&[0, 1]) < w(&[1, 0]));
    }

    #[test]
    fn weighted_degree_counts() {
        let weights = [0, 1];
        let u = w(&[0, 0, 1]);
        assert_eq!(u.weighted_degree(&weights), 1);
        assert_eq!(u.zero_weight_count(&weights), 2);
    }
}
