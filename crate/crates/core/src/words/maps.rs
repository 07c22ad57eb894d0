use alloc::vec::Vec;

use num_traits::{One, Zero};

use super::{circ, circ_plus, stuffle_plus, Word, WordSum};
use crate::scalar::{HbarPolynomial, Rational};
use crate::{Error, Result};

fn phi_word(w: &Word) -> Word {
    let letters = w.letters();
    let total: u32 = letters.iter().sum();
    let mut partial = Vec::with_capacity(letters.len());
    let mut acc = 0;
    for &k in &letters[..letters.len() - 1] {
        acc += k;
        partial.push(acc);
    }
    let mut out = Vec::new();
    let mut prev = 0;
    for p in 1..=total {
        if partial.binary_search(&p).is_err() {
            out.push(p - prev);
            prev = p;
        }
    }
    Word::from_vec_unchecked(out)
}

/// The duality involution `φ` on `𝔥¹_{>0}`.
///
/// For `u = z_{k_1}⋯z_{k_r}` of weight `n`, the complement of the partial
/// sums `{k_1, k_1+k_2, …}` (last one excluded) inside `{1, …, n}` lists the
/// partial sums of `φ(u)`.
pub fn phi(w: &WordSum) -> Result<WordSum> {
    if w.has_constant_term() {
        return Err(Error::ConstantTerm { op: "phi" });
    }
    Ok(w.map_words(|u| WordSum::from_word(phi_word(u))))
}

/// Maps `D` with `D(1) = 1`, `D(z_i w) = z_i D(w) + sign · step(i, D(w))`,
/// evaluated right to left along each word.
fn derivation_like<F>(w: &WordSum, sign: i64, step: F) -> WordSum
where
    F: Fn(u32, &WordSum) -> WordSum,
{
    let coeff = HbarPolynomial::from_int(sign);
    w.map_words(|u| {
        let mut acc = WordSum::one();
        for &k in u.letters().iter().rev() {
            let mut next = acc.prepend(k);
            next.add_scaled(&step(k, &acc), &coeff);
            acc = next;
        }
        acc
    })
}

/// `d_q(z_i w) = z_i d_q(w) + z_i ∘₊ d_q(w)`, `d_q(1) = 1`.
pub fn d_q(w: &WordSum) -> WordSum {
    derivation_like(w, 1, circ_plus)
}

/// `d_q⁻¹(z_i w) = z_i d_q⁻¹(w) - z_i ∘₊ d_q⁻¹(w)`.
pub fn d_q_inv(w: &WordSum) -> WordSum {
    derivation_like(w, -1, circ_plus)
}

/// `d(z_i w) = z_i d(w) + z_i ∘ d(w)`, the `ħ = 0` limit of `d_q`.
pub fn d(w: &WordSum) -> WordSum {
    derivation_like(w, 1, circ)
}

/// `ξ_i = Σ_{k=0}^{i-1} C(i-1, k) (-ħ)^{i-1-k} z_{k+1}`.
pub fn xi(i: u32) -> WordSum {
    assert!(i >= 1, "ξ_i is defined for i >= 1");
    let n = i - 1;
    let mut binom = Rational::one();
    let mut out = WordSum::zero();
    for k in 0..=n {
        let e = n - k;
        let sign = if e % 2 == 0 { Rational::one() } else { -Rational::one() };
        out.add_term(
            Word::letter(k + 1),
            HbarPolynomial::monomial(&binom * sign, e as usize),
        );
        binom = binom * Rational::from_integer((n - k).into()) / Rational::from_integer((k + 1).into());
    }
    out
}

/// `Ψ = φ d_q⁻¹ d φ`, computed by `Ψ(z_{k_1}⋯z_{k_r}) = ξ_{k_1}⋯ξ_{k_r}`.
/// `Ψ(1) = 1`.
pub fn psi(w: &WordSum) -> WordSum {
    w.map_words(|u| {
        u.letters()
            .iter()
            .fold(WordSum::one(), |acc, &k| acc.concat(&xi(k)))
    })
}

/// `Ψ` as the literal composite `φ ∘ d_q⁻¹ ∘ d ∘ φ`, constants fixed.
pub fn psi_composite(w: &WordSum) -> Result<WordSum> {
    let mut out = phi(&d_q_inv(&d(&phi(&w.without_constant())?)))?;
    out.add_term(Word::empty(), w.constant_term());
    Ok(out)
}

/// `(z_i w') △ w'' = z_i (w' *₊ w'')` for non-constant first argument.
pub fn triangle(x: &WordSum, y: &WordSum) -> Result<WordSum> {
    if x.has_constant_term() {
        return Err(Error::ConstantTerm { op: "triangle" });
    }
    let mut out = WordSum::zero();
    for (u, c) in x.terms() {
        let rest = stuffle_plus(&WordSum::from_word(u.tail()), y);
        out.add_scaled(&rest.prepend(u.letters()[0]), c);
    }
    Ok(out)
}

/// Substitutes `ħ = 0` in every coefficient.
pub fn set_hbar_zero(w: &WordSum) -> WordSum {
    WordSum::from_terms(w.terms().filter_map(|(u, c)| {
        let c0 = c.at_zero();
        (!c0.is_zero()).then(|| (u.clone(), HbarPolynomial::constant(c0)))
    }))
}
