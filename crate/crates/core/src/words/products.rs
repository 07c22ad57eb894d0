use alloc::vec::Vec;

use super::{Word, WordSum};
use crate::scalar::HbarPolynomial;
use crate::{Error, Result};

/// How two first letters `z_i`, `z_j` merge in a quasi-shuffle product.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Merge {
    /// `z_i ∘₋ z_j = -z_{i+j} + ħ z_{i+j-1}`
    Minus,
    /// `z_i ∘₊ z_j = z_{i+j} + ħ z_{i+j-1}`
    Plus,
    /// `-z_{i+j}`
    Bar,
    /// `z_{i+j}` (the `ħ = 0` limit of `∘₊`)
    Harmonic,
}

impl Merge {
    fn letters(self, i: u32, j: u32) -> Vec<(u32, HbarPolynomial)> {
        let s = i + j;
        match self {
            Self::Minus => alloc::vec![(s, HbarPolynomial::from_int(-1)), (s - 1, HbarPolynomial::hbar())],
            Self::Plus => alloc::vec![(s, HbarPolynomial::one()), (s - 1, HbarPolynomial::hbar())],
            Self::Bar => alloc::vec![(s, HbarPolynomial::from_int(-1))],
            Self::Harmonic => alloc::vec![(s, HbarPolynomial::one())],
        }
    }
}

/// Product of two words by dynamic programming over suffix pairs: entry
/// `(a, b)` holds `u[a..] ⋄ v[b..]`.
fn word_product(rule: Merge, u: &Word, v: &Word) -> WordSum {
    let (x, y) = (u.letters(), v.letters());
    let (lx, ly) = (x.len(), y.len());
    let width = ly + 1;
    let mut table: Vec<WordSum> = alloc::vec![WordSum::zero(); (lx + 1) * width];
    let suffix = |s: &[u32]| WordSum::from_word(Word::from_vec_unchecked(s.to_vec()));
    for a in (0..=lx).rev() {
        for b in (0..=ly).rev() {
            let entry = if a == lx {
                suffix(&y[b..])
            } else if b == ly {
                suffix(&x[a..])
            } else {
                let (i, j) = (x[a], y[b]);
                let mut acc = table[(a + 1) * width + b].prepend(i);
                acc.add_scaled(&table[a * width + b + 1].prepend(j), &HbarPolynomial::one());
                let inner = &table[(a + 1) * width + b + 1];
                for (k, c) in rule.letters(i, j) {
                    acc.add_scaled(&inner.prepend(k), &c);
                }
                acc
            };
            table[a * width + b] = entry;
        }
    }
    table.swap_remove(0)
}

fn quasi_shuffle(rule: Merge, x: &WordSum, y: &WordSum) -> WordSum {
    let mut out = WordSum::zero();
    for (u, cu) in x.terms() {
        for (v, cv) in y.terms() {
            out.add_scaled(&word_product(rule, u, v), &(cu * cv));
        }
    }
    out
}

/// The product `*₋`, modeling multiplication of the sums `S`.
pub fn stuffle_minus(x: &WordSum, y: &WordSum) -> WordSum {
    quasi_shuffle(Merge::Minus, x, y)
}

/// The product `*₊`, modeling multiplication of the sums `A`.
pub fn stuffle_plus(x: &WordSum, y: &WordSum) -> WordSum {
    quasi_shuffle(Merge::Plus, x, y)
}

/// The `ħ`-free product `⊼` with merge term `-z_{i+j}`.
pub fn stuffle_bar(x: &WordSum, y: &WordSum) -> WordSum {
    quasi_shuffle(Merge::Bar, x, y)
}

/// The harmonic product `*₊|_{ħ=0}` with merge term `+z_{i+j}`.
pub fn stuffle_harmonic(x: &WordSum, y: &WordSum) -> WordSum {
    quasi_shuffle(Merge::Harmonic, x, y)
}

/// Which product replaces `*₊` in the `ħ`-free circled product `⊛`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum CircledastVariant {
    /// `*₊` at `ħ = 0`, the harmonic product. `⊛_q` degenerates to this.
    #[default]
    PlusHbarZero,
    /// `⊼`.
    Bar,
}

fn circled(rule: Merge, x: &WordSum, y: &WordSum, op: &'static str) -> Result<WordSum> {
    if x.has_constant_term() || y.has_constant_term() {
        return Err(Error::ConstantTerm { op });
    }
    let mut out = WordSum::zero();
    for (u, cu) in x.terms() {
        for (v, cv) in y.terms() {
            let i = u.letters()[0];
            let j = v.letters()[0];
            let rest = word_product(rule, &u.tail(), &v.tail());
            out.add_scaled(&rest.prepend(i + j), &(cu * cv));
        }
    }
    Ok(out)
}

/// `(z_i w₁) ⊛_q (z_j w₂) = z_{i+j} (w₁ *₊ w₂)` on `𝔥¹_{>0}`.
pub fn circledast_q(x: &WordSum, y: &WordSum) -> Result<WordSum> {
    circled(Merge::Plus, x, y, "circledast_q")
}

/// The `ħ`-free analogue of [`circledast_q`].
pub fn circledast(x: &WordSum, y: &WordSum, variant: CircledastVariant) -> Result<WordSum> {
    let rule = match variant {
        CircledastVariant::PlusHbarZero => Merge::Harmonic,
        CircledastVariant::Bar => Merge::Bar,
    };
    circled(rule, x, y, "circledast")
}
