use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::{Error, Result};

/// A word `z_{k_1}⋯z_{k_r}` with every letter `k_i >= 1`; the empty word is
/// the unit `1`.
///
/// Words are ordered by weight, then depth, then letters lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Word(Vec<u32>);

impl Word {
    pub fn new<I: IntoIterator<Item = u32>>(letters: I) -> Result<Self> {
        let letters: Vec<u32> = letters.into_iter().collect();
        if letters.contains(&0) {
            return Err(Error::InvalidArgument("word letters must be positive"));
        }
        Ok(Self(letters))
    }

    pub(crate) fn from_vec_unchecked(letters: Vec<u32>) -> Self {
        debug_assert!(!letters.contains(&0));
        Self(letters)
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    /// `z_k`.
    pub fn letter(k: u32) -> Self {
        assert!(k >= 1, "letters are positive");
        Self(alloc::vec![k])
    }

    /// `z_1^m`.
    pub fn z1_power(m: usize) -> Self {
        Self(alloc::vec![1; m])
    }

    pub fn letters(&self) -> &[u32] {
        &self.0
    }

    pub fn depth(&self) -> usize {
        self.0.len()
    }

    pub fn weight(&self) -> u64 {
        self.0.iter().map(|&k| u64::from(k)).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn first(&self) -> Option<u32> {
        self.0.first().copied()
    }

    /// The word without its first letter.
    pub fn tail(&self) -> Word {
        Self(self.0.get(1..).unwrap_or(&[]).to_vec())
    }

    /// The empty word or a word with leading letter `>= 2`.
    pub fn is_admissible(&self) -> bool {
        self.first().map_or(true, |k| k >= 2)
    }

    /// `z_k · self`.
    pub fn prepend(&self, k: u32) -> Word {
        assert!(k >= 1, "letters are positive");
        let mut v = Vec::with_capacity(self.0.len() + 1);
        v.push(k);
        v.extend_from_slice(&self.0);
        Self(v)
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Self(v)
    }

    /// All words of the given weight (compositions), in canonical order.
    pub fn all_of_weight(weight: u32) -> Vec<Word> {
        fn rec(rem: u32, prefix: &mut Vec<u32>, out: &mut Vec<Word>) {
            if rem == 0 {
                out.push(Word(prefix.clone()));
                return;
            }
            for k in 1..=rem {
                prefix.push(k);
                rec(rem - k, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        rec(weight, &mut Vec::new(), &mut out);
        out.sort();
        out
    }

    /// All non-empty words with weight in `1..=max_weight`, in canonical order.
    pub fn all_up_to_weight(max_weight: u32) -> Vec<Word> {
        (1..=max_weight).flat_map(Self::all_of_weight).collect()
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight()
            .cmp(&other.weight())
            .then(self.depth().cmp(&other.depth()))
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
