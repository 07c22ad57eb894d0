use alloc::collections::btree_map::{self, BTreeMap};
use core::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;

use super::Word;
use crate::scalar::{HbarPolynomial, Rational};

/// A finite `ℚ[ħ]`-linear combination of words. Zero coefficients are never
/// stored; iteration follows the canonical word order.
#[derive(Clone, Debug, PartialEq, Eq, Default, Hash)]
pub struct WordSum {
    terms: BTreeMap<Word, HbarPolynomial>,
}

impl WordSum {
    pub fn zero() -> Self {
        Self::default()
    }

    /// The empty word with coefficient 1.
    pub fn one() -> Self {
        Self::from_word(Word::empty())
    }

    pub fn from_word(w: Word) -> Self {
        Self::monomial(w, HbarPolynomial::one())
    }

    /// `z_k`.
    pub fn letter(k: u32) -> Self {
        Self::from_word(Word::letter(k))
    }

    pub fn monomial(w: Word, c: HbarPolynomial) -> Self {
        let mut s = Self::zero();
        s.add_term(w, c);
        s
    }

    pub fn from_terms<I: IntoIterator<Item = (Word, HbarPolynomial)>>(terms: I) -> Self {
        let mut s = Self::zero();
        for (w, c) in terms {
            s.add_term(w, c);
        }
        s
    }

    /// Adds `c · w`, pruning the entry if it cancels.
    pub fn add_term(&mut self, w: Word, c: HbarPolynomial) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + &c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    /// Adds `c · x` in place.
    pub fn add_scaled(&mut self, x: &WordSum, c: &HbarPolynomial) {
        for (w, a) in x.terms() {
            let coeff = if c.is_one() { a.clone() } else { a * c };
            self.add_term(w.clone(), coeff);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &HbarPolynomial)> + '_ {
        self.terms.iter()
    }

    pub fn words(&self) -> impl Iterator<Item = &Word> + '_ {
        self.terms.keys()
    }

    pub fn coeff(&self, w: &Word) -> HbarPolynomial {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn constant_term(&self) -> HbarPolynomial {
        self.coeff(&Word::empty())
    }

    pub fn has_constant_term(&self) -> bool {
        self.terms.contains_key(&Word::empty())
    }

    /// The sum with its constant term removed.
    pub fn without_constant(&self) -> Self {
        let mut s = self.clone();
        s.terms.remove(&Word::empty());
        s
    }

    /// Every word has depth one, i.e. the sum lies in `𝔷`.
    pub fn is_depth_one(&self) -> bool {
        self.terms.keys().all(|w| w.depth() == 1)
    }

    /// Every word is empty or starts with a letter `>= 2`, i.e. the sum lies in `𝔥⁰`.
    pub fn is_admissible(&self) -> bool {
        self.terms.keys().all(Word::is_admissible)
    }

    pub fn max_weight(&self) -> u64 {
        self.terms.keys().map(Word::weight).max().unwrap_or(0)
    }

    pub fn scale(&self, c: &HbarPolynomial) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self::from_terms(self.terms().map(|(w, a)| (w.clone(), a * c)))
    }

    pub fn scale_rational(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self::from_terms(self.terms().map(|(w, a)| (w.clone(), a.scale(c))))
    }

    /// `z_k · self` (left concatenation by a letter).
    pub fn prepend(&self, k: u32) -> Self {
        Self {
            terms: self.terms.iter().map(|(w, c)| (w.prepend(k), c.clone())).collect(),
        }
    }

    /// Noncommutative (concatenation) product.
    pub fn concat(&self, other: &WordSum) -> Self {
        let mut out = Self::zero();
        for (a, ca) in self.terms() {
            for (b, cb) in other.terms() {
                out.add_term(a.concat(b), ca * cb);
            }
        }
        out
    }

    /// Applies a linear map defined on words.
    pub fn map_words<F: FnMut(&Word) -> WordSum>(&self, mut f: F) -> Self {
        let mut out = Self::zero();
        for (w, c) in self.terms() {
            out.add_scaled(&f(w), c);
        }
        out
    }

    pub fn into_terms(self) -> impl Iterator<Item = (Word, HbarPolynomial)> {
        self.terms.into_iter()
    }
}

impl From<Word> for WordSum {
    fn from(w: Word) -> Self {
        Self::from_word(w)
    }
}

impl FromIterator<(Word, HbarPolynomial)> for WordSum {
    fn from_iter<I: IntoIterator<Item = (Word, HbarPolynomial)>>(iter: I) -> Self {
        Self::from_terms(iter)
    }
}

impl Add<&WordSum> for &WordSum {
    type Output = WordSum;
    fn add(self, rhs: &WordSum) -> WordSum {
        let mut out = self.clone();
        out.add_scaled(rhs, &HbarPolynomial::one());
        out
    }
}

impl Add for WordSum {
    type Output = WordSum;
    fn add(self, rhs: WordSum) -> WordSum {
        &self + &rhs
    }
}

impl Sub<&WordSum> for &WordSum {
    type Output = WordSum;
    fn sub(self, rhs: &WordSum) -> WordSum {
        let mut out = self.clone();
        out.add_scaled(rhs, &HbarPolynomial::from_int(-1));
        out
    }
}

impl Sub for WordSum {
    type Output = WordSum;
    fn sub(self, rhs: WordSum) -> WordSum {
        &self - &rhs
    }
}

impl Neg for &WordSum {
    type Output = WordSum;
    fn neg(self) -> WordSum {
        WordSum { terms: self.terms.iter().map(|(w, c)| (w.clone(), -c)).collect() }
    }
}

impl Neg for WordSum {
    type Output = WordSum;
    fn neg(self) -> WordSum {
        -&self
    }
}

impl Mul<&WordSum> for &WordSum {
    type Output = WordSum;
    fn mul(self, rhs: &WordSum) -> WordSum {
        self.concat(rhs)
    }
}

impl Zero for WordSum {
    fn zero() -> Self {
        Self::zero()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}
