//! Exact machinery for q-analogues of multiple zeta values.
//!
//! The crate is layered bottom-up:
//!
//! - [`scalar`]: rationals, polynomials and rational functions in `q`,
//!   truncated power series, and polynomials in the deformation parameter `ħ`.
//! - [`words`]: the free noncommutative algebra on letters `z_1, z_2, …` over
//!   `ℚ[ħ]`, its quasi-shuffle products, the duality involution and the
//!   maps `d_q`, `d`, `Ψ`.
//! - [`harmonic`]: finite multiple harmonic q-series attached to words and
//!   the q-difference operator `∇_q`.
//! - [`newton`]: q-Newton interpolation series and their products.
//! - [`zeta`]: truncated q-zeta values and the quadratic/linear relations
//!   they satisfy.
//!
//! Everything here is pure and allocation-only; IO, JSON and the command line
//! live in the companion `qmzv` crate.

#![no_std]

extern crate alloc;

mod error;
pub mod harmonic;
pub mod newton;
pub mod scalar;
pub mod words;
pub mod zeta;

pub use error::{Error, Result};
pub use harmonic::{SequenceFn, SumKind};
pub use newton::NewtonExpansion;
pub use scalar::{
    HbarPolynomial, PolyQ, Rational, RationalFunction, TruncatedSeries, Valuation,
};
pub use words::{CircledastVariant, Word, WordSum};
pub use zeta::{Relation, RelationReport, RelationVariant, ZetaContext};

/// Default q-adic precision for truncated values.
pub const DEFAULT_PRECISION: usize = 40;
