use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;

use super::{HbarPolynomial, PolyQ, RationalFunction, TruncatedSeries};
use crate::{Error, Result};

/// The q-integer `[n] = 1 + q + … + q^{n-1}`; `[0] = 0`.
pub fn q_integer(n: usize) -> PolyQ {
    PolyQ::from_integers(vec![1; n])
}

/// `(x)_n = ∏_{j=0}^{n-1} (1 - x q^j)`.
pub fn q_shifted_factorial(x: &RationalFunction, n: usize) -> RationalFunction {
    let one = RationalFunction::one();
    (0..n).fold(RationalFunction::one(), |acc, j| {
        let term = &one - &x.mul_poly(&PolyQ::one().shift(j));
        &acc * &term
    })
}

/// `(q)_n = (1 - q)(1 - q^2)⋯(1 - q^n)`, built in factored form.
pub fn q_pochhammer(n: usize) -> PolyQ {
    (1..=n).fold(PolyQ::one(), |acc, j| {
        let mut c = vec![BigInt::from(0); j + 1];
        c[0] = 1.into();
        c[j] = (-1).into();
        &acc * &PolyQ::from_integers(c)
    })
}

/// Gaussian binomial `[n, k]_q`, via `[n,k] = [n-1,k-1] + q^k [n-1,k]`.
pub fn q_binomial(n: usize, k: usize) -> Result<PolyQ> {
    if k > n {
        return Err(Error::OutOfRange { n, k });
    }
    // row[k] holds [m, k] for the current m.
    let mut row: Vec<PolyQ> = vec![PolyQ::one()];
    for m in 1..=n {
        let mut next = Vec::with_capacity(m + 1);
        next.push(PolyQ::one());
        for j in 1..m {
            next.push(&row[j - 1] + &row[j].shift(j));
        }
        next.push(PolyQ::one());
        row = next;
    }
    Ok(row.swap_remove(k))
}

/// Power-series expansion of `f` at `q = 0` through `q^{precision-1}`.
pub fn series_expand(f: &RationalFunction, precision: usize) -> Result<TruncatedSeries> {
    f.series(precision)
}

/// Substitutes `ħ ↦ 1 - q`.
pub fn hbar_eval(c: &HbarPolynomial) -> PolyQ {
    c.eval_q()
}
