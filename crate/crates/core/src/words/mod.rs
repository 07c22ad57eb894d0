//! The free noncommutative algebra `𝔥¹` over `ℚ[ħ]` on letters `z_1, z_2, …`.
//!
//! A [`Word`] `z_{k_1}⋯z_{k_r}` is written `[k_1,…,k_r]`; a [`WordSum`] is a
//! finite `ℚ[ħ]`-linear combination of words. `𝔥¹_{>0}` is the submodule of
//! sums without constant term and `𝔷` the submodule spanned by single
//! letters.

mod action;
mod maps;
mod products;
mod sum;
pub(crate) mod text;
mod word;

pub use action::{act, circ, circ_minus, circ_plus, Action};
pub use maps::{d, d_q, d_q_inv, phi, psi, psi_composite, set_hbar_zero, triangle, xi};
pub use products::{
    circledast, circledast_q, stuffle_bar, stuffle_harmonic, stuffle_minus, stuffle_plus,
    CircledastVariant,
};
pub use sum::WordSum;
pub use word::Word;
