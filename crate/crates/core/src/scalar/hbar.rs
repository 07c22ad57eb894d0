use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::{write_terms, PolyQ, Rational};

/// Polynomial in the deformation parameter `ħ` over `ℚ`; the coefficient
/// ring of the word algebra.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct HbarPolynomial {
    coeffs: Vec<Rational>,
}

impl HbarPolynomial {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    pub fn from_int(c: i64) -> Self {
        Self::constant(super::rational(c))
    }

    /// `c ħ^k`.
    pub fn monomial(c: Rational, k: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    /// The variable `ħ`.
    pub fn hbar() -> Self {
        Self::monomial(Rational::one(), 1)
    }

    pub fn from_integers<I: IntoIterator<Item = i64>>(coeffs: I) -> Self {
        Self::new(coeffs.into_iter().map(super::rational).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn coefficients(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Single nonzero term `(c, k)`.
    pub fn as_monomial(&self) -> Option<(&Rational, usize)> {
        let mut it = self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero());
        let (k, c) = it.next()?;
        it.next().is_none().then_some((c, k))
    }

    /// Value at `ħ = 0`.
    pub fn at_zero(&self) -> Rational {
        self.coeff(0)
    }

    /// Substitutes `ħ ↦ 1 - q`.
    pub fn eval_q(&self) -> PolyQ {
        let one_minus_q = PolyQ::from_integers([1, -1]);
        self.coeffs.iter().rev().fold(PolyQ::zero(), |acc, c| {
            &(&acc * &one_minus_q) + &PolyQ::constant(c.clone())
        })
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| &acc * self)
    }

    fn add_signed(&self, other: &Self, negate: bool) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new(
            (0..n)
                .map(|i| {
                    let (a, b) = (self.coeff(i), other.coeff(i));
                    if negate {
                        a - b
                    } else {
                        a + b
                    }
                })
                .collect(),
        )
    }

    fn mul_impl(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }
}

impl From<i64> for HbarPolynomial {
    fn from(c: i64) -> Self {
        Self::from_int(c)
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $body:expr) => {
        impl $tr<&HbarPolynomial> for &HbarPolynomial {
            type Output = HbarPolynomial;
            fn $method(self, rhs: &HbarPolynomial) -> HbarPolynomial {
                $body(self, rhs)
            }
        }
        impl $tr<HbarPolynomial> for HbarPolynomial {
            type Output = HbarPolynomial;
            fn $method(self, rhs: HbarPolynomial) -> HbarPolynomial {
                $body(&self, &rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a: &HbarPolynomial, b| a.add_signed(b, false));
forward_binop!(Sub, sub, |a: &HbarPolynomial, b| a.add_signed(b, true));
forward_binop!(Mul, mul, |a: &HbarPolynomial, b| a.mul_impl(b));

impl Neg for &HbarPolynomial {
    type Output = HbarPolynomial;
    fn neg(self) -> HbarPolynomial {
        HbarPolynomial { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Neg for HbarPolynomial {
    type Output = HbarPolynomial;
    fn neg(self) -> HbarPolynomial {
        -&self
    }
}

impl fmt::Display for HbarPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, self.coeffs.iter().cloned().enumerate(), "h")
    }
}
