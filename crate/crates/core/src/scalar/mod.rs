//! Exact scalars: `ℚ`, `ℚ[q]`, `ℚ(q)`, `ℚ[[q]]/(q^P)` and `ℚ[ħ]`.

mod cyclotomic;
mod hbar;
mod poly;
mod qcomb;
mod ratfunc;
mod series;

pub use cyclotomic::{cyclotomic, divisors};
pub use hbar::HbarPolynomial;
pub use poly::PolyQ;
pub use qcomb::{hbar_eval, q_binomial, q_integer, q_pochhammer, q_shifted_factorial, series_expand};
pub use ratfunc::RationalFunction;
pub use series::{TruncatedSeries, Valuation};

use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Arbitrary-precision rational number.
pub type Rational = num_rational::BigRational;

pub(crate) fn rational(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Writes `Σ c_e x^e` in ascending order, e.g. `1 - 2q + 3/2q^2`.
pub(crate) fn write_terms<I>(f: &mut fmt::Formatter<'_>, terms: I, var: &str) -> fmt::Result
where
    I: IntoIterator<Item = (usize, Rational)>,
{
    let mut first = true;
    for (exp, c) in terms {
        if c.is_zero() {
            continue;
        }
        let negative = c.is_negative();
        let mag = c.abs();
        if first {
            if negative {
                f.write_str("-")?;
            }
        } else {
            f.write_str(if negative { " - " } else { " + " })?;
        }
        first = false;
        if exp == 0 {
            write!(f, "{mag}")?;
            continue;
        }
        if !mag.is_one() {
            write!(f, "{mag}")?;
        }
        f.write_str(var)?;
        if exp > 1 {
            write!(f, "^{exp}")?;
        }
    }
    if first {
        f.write_str("0")?;
    }
    Ok(())
}
