use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{write_terms, PolyQ, Rational};
use crate::{Error, Result};

/// Order of vanishing at `q = 0` as far as a truncation can tell.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Valuation {
    /// First nonzero coefficient.
    Exact(usize),
    /// Every stored coefficient vanishes; the value is `0 mod q^P`.
    AtLeast(usize),
}

impl Valuation {
    /// A lower bound usable in comparisons.
    pub fn lower_bound(self) -> usize {
        match self {
            Self::Exact(v) | Self::AtLeast(v) => v,
        }
    }

    pub fn is_at_least(self, n: usize) -> bool {
        self.lower_bound() >= n
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Exact(v) => write!(f, "{v}"),
            Self::AtLeast(p) => write!(f, "≥{p}"),
        }
    }
}

/// Element of `ℚ[[q]] / (q^P)`.
///
/// Coefficients of `q^0 … q^{P-1}` are stored as integer numerators over a
/// shared positive denominator (1 for every q-zeta value). Binary operations
/// take the smaller of the two precisions.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TruncatedSeries {
    precision: usize,
    coeffs: Vec<BigInt>,
    den: BigInt,
}

impl TruncatedSeries {
    fn from_parts(precision: usize, mut coeffs: Vec<BigInt>, mut den: BigInt) -> Self {
        coeffs.resize(precision, BigInt::zero());
        if den.is_negative() {
            den = -den;
            coeffs.iter_mut().for_each(|c| *c = -&*c);
        }
        if !den.is_one() {
            let mut g = den.clone();
            for c in &coeffs {
                if g.is_one() {
                    break;
                }
                g = g.gcd(c);
            }
            if g.is_zero() {
                g = den.clone();
            }
            if !g.is_one() {
                coeffs.iter_mut().for_each(|c| *c /= &g);
                den /= &g;
            }
        }
        Self { precision, coeffs, den }
    }

    pub fn zero(precision: usize) -> Self {
        Self { precision, coeffs: vec![BigInt::zero(); precision], den: BigInt::one() }
    }

    pub fn one(precision: usize) -> Self {
        Self::from_poly(&PolyQ::one(), precision)
    }

    pub fn from_poly(p: &PolyQ, precision: usize) -> Self {
        let (nums, den) = p.integer_parts();
        let take = nums.len().min(precision);
        Self::from_parts(precision, nums[..take].to_vec(), den.clone())
    }

    pub fn from_rationals(coeffs: &[Rational], precision: usize) -> Self {
        let take = &coeffs[..coeffs.len().min(precision)];
        Self::from_poly(&PolyQ::from_rationals(take), precision)
    }

    pub fn precision(&self) -> usize {
        self.precision
    }

    pub fn coeff(&self, exp: usize) -> Rational {
        assert!(exp < self.precision, "coefficient beyond precision");
        Rational::new(self.coeffs[exp].clone(), self.den.clone())
    }

    pub fn coefficients(&self) -> Vec<Rational> {
        (0..self.precision).map(|i| self.coeff(i)).collect()
    }

    /// The stored coefficients as a polynomial of degree `< P`.
    pub fn to_poly(&self) -> PolyQ {
        PolyQ::from_parts(self.coeffs.clone(), self.den.clone())
    }

    pub fn valuation(&self) -> Valuation {
        match self.coeffs.iter().position(|c| !c.is_zero()) {
            Some(v) => Valuation::Exact(v),
            None => Valuation::AtLeast(self.precision),
        }
    }

    /// All stored coefficients vanish.
    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn truncate(&self, precision: usize) -> Self {
        assert!(precision <= self.precision, "cannot raise precision");
        Self::from_parts(precision, self.coeffs[..precision].to_vec(), self.den.clone())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::from_parts(
            self.precision,
            self.coeffs.iter().map(|x| x * c.numer()).collect(),
            &self.den * c.denom(),
        )
    }

    /// Multiplication by `q^e`.
    pub fn shift(&self, e: usize) -> Self {
        let p = self.precision;
        let mut coeffs = vec![BigInt::zero(); e.min(p)];
        coeffs.extend_from_slice(&self.coeffs[..p - e.min(p)]);
        Self::from_parts(p, coeffs, self.den.clone())
    }

    /// Multiplicative inverse; requires a nonzero constant term.
    pub fn inverse(&self) -> Result<Self> {
        let p = self.precision;
        if p == 0 {
            return Ok(self.clone());
        }
        if self.coeffs[0].is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.den.is_one() && self.coeffs[0].abs().is_one() {
            // Unit constant term: stays in ℤ[[q]].
            let a = &self.coeffs;
            let sign = a[0].clone();
            let mut b: Vec<BigInt> = Vec::with_capacity(p);
            b.push(sign.clone());
            for n in 1..p {
                let mut acc = BigInt::zero();
                for k in 1..=n {
                    if !a[k].is_zero() {
                        acc += &a[k] * &b[n - k];
                    }
                }
                b.push(-acc * &sign);
            }
            return Ok(Self { precision: p, coeffs: b, den: BigInt::one() });
        }
        let a = self.coefficients();
        let a0_inv = a[0].recip();
        let mut b: Vec<Rational> = Vec::with_capacity(p);
        b.push(a0_inv.clone());
        for n in 1..p {
            let mut acc = Rational::zero();
            for k in 1..=n {
                if !a[k].is_zero() {
                    acc += &a[k] * &b[n - k];
                }
            }
            b.push(-acc * &a0_inv);
        }
        Ok(Self::from_rationals(&b, p))
    }

    fn add_signed(&self, other: &Self, negate: bool) -> Self {
        let p = self.precision.min(other.precision);
        let (fa, fb, den) = if self.den == other.den {
            (BigInt::one(), BigInt::one(), self.den.clone())
        } else {
            let l = self.den.lcm(&other.den);
            (&l / &self.den, &l / &other.den, l)
        };
        let coeffs = (0..p)
            .map(|i| {
                let x = &self.coeffs[i] * &fa;
                let y = &other.coeffs[i] * &fb;
                if negate {
                    x - y
                } else {
                    x + y
                }
            })
            .collect();
        Self::from_parts(p, coeffs, den)
    }

    fn mul_impl(&self, other: &Self) -> Self {
        let p = self.precision.min(other.precision);
        let mut out = vec![BigInt::zero(); p];
        for (i, x) in self.coeffs[..p].iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in other.coeffs[..p - i].iter().enumerate() {
                if !y.is_zero() {
                    out[i + j] += x * y;
                }
            }
        }
        Self::from_parts(p, out, &self.den * &other.den)
    }

    /// Multiplies by a polynomial, keeping this precision.
    pub fn mul_poly(&self, poly: &PolyQ) -> Self {
        self * &Self::from_poly(poly, self.precision)
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $body:expr) => {
        impl $tr<&TruncatedSeries> for &TruncatedSeries {
            type Output = TruncatedSeries;
            fn $method(self, rhs: &TruncatedSeries) -> TruncatedSeries {
                $body(self, rhs)
            }
        }
        impl $tr<TruncatedSeries> for TruncatedSeries {
            type Output = TruncatedSeries;
            fn $method(self, rhs: TruncatedSeries) -> TruncatedSeries {
                $body(&self, &rhs)
            }
        }
        impl $tr<&TruncatedSeries> for TruncatedSeries {
            type Output = TruncatedSeries;
            fn $method(self, rhs: &TruncatedSeries) -> TruncatedSeries {
                $body(&self, rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a: &TruncatedSeries, b| a.add_signed(b, false));
forward_binop!(Sub, sub, |a: &TruncatedSeries, b| a.add_signed(b, true));
forward_binop!(Mul, mul, |a: &TruncatedSeries, b| a.mul_impl(b));

impl Neg for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn neg(self) -> TruncatedSeries {
        TruncatedSeries {
            precision: self.precision,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
            den: self.den.clone(),
        }
    }
}

impl Neg for TruncatedSeries {
    type Output = TruncatedSeries;
    fn neg(self) -> TruncatedSeries {
        -&self
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "O(q^{})", self.precision);
        }
        write_terms(f, self.coefficients().into_iter().enumerate(), "q")?;
        write!(f, " + O(q^{})", self.precision)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn inverse_of_one_plus_q() {
        let s = TruncatedSeries::from_poly(&PolyQ::from_integers([1, 1]), 5).inverse().unwrap();
        assert_eq!(s.to_poly(), PolyQ::from_integers([1, -1, 1, -1, 1]));
        let z = TruncatedSeries::from_poly(&PolyQ::q(), 5);
        assert_eq!(z.inverse(), Err(Error::DivisionByZero));
    }

    #[test]
    fn valuation_reports() {
        let s = TruncatedSeries::from_poly(&PolyQ::from_integers([0, 0, 1, 1]), 10);
        assert_eq!(s.valuation(), Valuation::Exact(2));
        assert_eq!(TruncatedSeries::zero(10).valuation(), Valuation::AtLeast(10));
        let t = TruncatedSeries::from_poly(&PolyQ::from_integers([3, 1]), 10);
        assert_eq!(t.valuation(), Valuation::Exact(0));
        assert_eq!(Valuation::AtLeast(30).to_string(), "≥30");
    }

    #[test]
    fn shift_drops_the_overflow() {
        let s = TruncatedSeries::from_poly(&PolyQ::from_integers([1, 2, 3]), 4);
        assert_eq!(s.shift(2).to_poly(), PolyQ::from_integers([0, 0, 1, 2]));
        assert!(s.shift(9).is_zero());
        assert_eq!(s.shift(0), s);
    }

    #[test]
    fn precision_is_the_minimum() {
        let a = TruncatedSeries::one(3);
        let b = TruncatedSeries::one(7);
        assert_eq!((&a + &b).precision(), 3);
        assert_eq!((&a * &b).precision(), 3);
        let high = TruncatedSeries::from_poly(&PolyQ::from_integers([0, 0, 0, 5]), 7);
        assert!(high.truncate(3).is_zero());
    }

    #[test]
    fn display_with_tail_marker() {
        let s = TruncatedSeries::from_poly(&PolyQ::from_integers([0, 1, 1, -1, 2]), 5);
        assert_eq!(s.to_string(), "q + q^2 - q^3 + 2q^4 + O(q^5)");
        assert_eq!(TruncatedSeries::one(3).to_string(), "1 + O(q^3)");
        assert_eq!(TruncatedSeries::zero(4).to_string(), "O(q^4)");
    }

    #[test]
    fn rational_coefficients_survive() {
        let half = Rational::new(1.into(), 2.into());
        let s = TruncatedSeries::from_rationals(&[half.clone(), Rational::one()], 3);
        let t = &s * &s;
        assert_eq!(t.coeff(0), Rational::new(1.into(), 4.into()));
        assert_eq!(t.coeff(1), Rational::one());
        assert_eq!(t.coeff(2), Rational::one());
    }
}
