use super::{Word, WordSum};
use crate::scalar::HbarPolynomial;
use crate::{Error, Result};

/// `z_i ∘ w`: adds `i` to the first letter of every word, kills constants.
///
/// `i = 0` is the convention `z_0 ∘ w = w` on `𝔥¹_{>0}` and `z_0 ∘ c = 0`
/// on constants.
pub fn circ(i: u32, w: &WordSum) -> WordSum {
    WordSum::from_terms(w.terms().filter_map(|(word, c)| {
        let first = word.first()?;
        let mut letters = word.letters().to_vec();
        letters[0] = first + i;
        Some((Word::from_vec_unchecked(letters), c.clone()))
    }))
}

/// `z_i ∘₊ w = (z_i + ħ z_{i-1}) ∘ w`.
pub fn circ_plus(i: u32, w: &WordSum) -> WordSum {
    assert!(i >= 1, "∘₊ is defined for letters z_i with i >= 1");
    let mut out = circ(i, w);
    out.add_scaled(&circ(i - 1, w), &HbarPolynomial::hbar());
    out
}

/// `z_i ∘₋ w = (-z_i + ħ z_{i-1}) ∘ w`.
pub fn circ_minus(i: u32, w: &WordSum) -> WordSum {
    assert!(i >= 1, "∘₋ is defined for letters z_i with i >= 1");
    let mut out = -circ(i, w);
    out.add_scaled(&circ(i - 1, w), &HbarPolynomial::hbar());
    out
}

/// Which `𝔷`-action to extend linearly in [`act`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Action {
    Circ,
    CircPlus,
    CircMinus,
}

/// `a ⋄ w` for `a ∈ 𝔷`, extending the chosen action linearly in `a`.
pub fn act(action: Action, a: &WordSum, w: &WordSum) -> Result<WordSum> {
    if !a.is_depth_one() {
        return Err(Error::NotDepthOne { op: "the z-action" });
    }
    let mut out = WordSum::zero();
    for (letter, c) in a.terms() {
        let i = letter.letters()[0];
        let part = match action {
            Action::Circ => circ(i, w),
            Action::CircPlus => circ_plus(i, w),
            Action::CircMinus => circ_minus(i, w),
        };
        out.add_scaled(&part, c);
    }
    Ok(out)
}
