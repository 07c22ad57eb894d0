use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{write_terms, Rational};

/// Polynomial in `q` over `ℚ`.
///
/// Stored as integer numerators over one shared positive denominator, with
/// `gcd(content, den) = 1` and trailing zeros removed, so structural equality
/// is value equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PolyQ {
    coeffs: Vec<BigInt>,
    den: BigInt,
}

impl PolyQ {
    pub(crate) fn from_parts(mut coeffs: Vec<BigInt>, mut den: BigInt) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            return Self::zero();
        }
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
            if !g.is_one() {
                coeffs.iter_mut().for_each(|c| *c /= &g);
                den /= &g;
            }
        }
        Self { coeffs, den }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new(), den: BigInt::one() }
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(c: i64) -> Self {
        Self::from_parts(vec![BigInt::from(c)], BigInt::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(c, 0)
    }

    /// The variable `q`.
    pub fn q() -> Self {
        Self::monomial(Rational::one(), 1)
    }

    pub fn monomial(c: Rational, exp: usize) -> Self {
        let (n, d) = c.into();
        let mut coeffs = vec![BigInt::zero(); exp + 1];
        coeffs[exp] = n;
        Self::from_parts(coeffs, d)
    }

    pub fn from_integers<T: Into<BigInt>, I: IntoIterator<Item = T>>(coeffs: I) -> Self {
        Self::from_parts(coeffs.into_iter().map(Into::into).collect(), BigInt::one())
    }

    pub fn from_rationals(coeffs: &[Rational]) -> Self {
        let den = coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let nums = coeffs
            .iter()
            .map(|c| c.numer() * (&den / c.denom()))
            .collect();
        Self::from_parts(nums, den)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one() && self.den.is_one()
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, exp: usize) -> Rational {
        match self.coeffs.get(exp) {
            Some(c) => Rational::new(c.clone(), self.den.clone()),
            None => Rational::zero(),
        }
    }

    pub fn coefficients(&self) -> Vec<Rational> {
        (0..self.coeffs.len()).map(|i| self.coeff(i)).collect()
    }

    /// Integer numerators and the shared denominator.
    pub fn integer_parts(&self) -> (&[BigInt], &BigInt) {
        (&self.coeffs, &self.den)
    }

    pub fn constant_term(&self) -> Rational {
        self.coeff(0)
    }

    /// Exponent of the lowest nonzero term.
    pub fn low_order(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() || k == 0 {
            return self.clone();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs, den: self.den.clone() }
    }

    /// Divides by `q^k`; the low `k` coefficients must vanish.
    pub(crate) fn unshift(&self, k: usize) -> Self {
        debug_assert!(self.low_order().map_or(true, |l| l >= k));
        if self.is_zero() {
            return Self::zero();
        }
        Self { coeffs: self.coeffs[k..].to_vec(), den: self.den.clone() }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let coeffs = self.coeffs.iter().map(|x| x * c.numer()).collect();
        Self::from_parts(coeffs, &self.den * c.denom())
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Keeps only the terms of degree `< len`.
    pub fn truncate(&self, len: usize) -> Self {
        if self.coeffs.len() <= len {
            return self.clone();
        }
        Self::from_parts(self.coeffs[..len].to_vec(), self.den.clone())
    }

    /// Exact quotient by an integer polynomial whose leading coefficient is
    /// `±1`; `None` when the division leaves a remainder.
    pub(crate) fn div_exact_unit(&self, divisor: &PolyQ) -> Option<Self> {
        debug_assert!(divisor.den.is_one());
        let dv = &divisor.coeffs;
        let dlen = dv.len();
        assert!(dlen > 0, "division by zero polynomial");
        let lead = &dv[dlen - 1];
        debug_assert!(lead.abs().is_one());
        if self.is_zero() {
            return Some(Self::zero());
        }
        if self.coeffs.len() < dlen {
            return None;
        }
        let mut rem = self.coeffs.clone();
        let qlen = rem.len() - dlen + 1;
        let mut quot = vec![BigInt::zero(); qlen];
        for i in (0..qlen).rev() {
            let top = &rem[i + dlen - 1];
            if top.is_zero() {
                continue;
            }
            let t = if lead.is_positive() { top.clone() } else { -top };
            for (j, d) in dv.iter().enumerate() {
                if !d.is_zero() {
                    rem[i + j] -= &t * d;
                }
            }
            quot[i] = t;
        }
        if rem[..dlen - 1].iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(Self::from_parts(quot, self.den.clone()))
    }

    /// Euclidean division over `ℚ`.
    pub fn div_rem(&self, divisor: &PolyQ) -> (Self, Self) {
        assert!(!divisor.is_zero(), "division by zero polynomial");
        let dlen = divisor.coeffs.len();
        if self.coeffs.len() < dlen {
            return (Self::zero(), self.clone());
        }
        let d = divisor.coefficients();
        let lead = d[dlen - 1].clone();
        let mut rem = self.coefficients();
        let qlen = rem.len() - dlen + 1;
        let mut quot = vec![Rational::zero(); qlen];
        for i in (0..qlen).rev() {
            let t = &rem[i + dlen - 1] / &lead;
            if t.is_zero() {
                continue;
            }
            for (j, dj) in d.iter().enumerate() {
                rem[i + j] -= &t * dj;
            }
            quot[i] = t;
        }
        rem.truncate(dlen - 1);
        (Self::from_rationals(&quot), Self::from_rationals(&rem))
    }

    /// Integer primitive part with positive leading coefficient.
    pub(crate) fn primitive(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let g = self.coeffs.iter().fold(BigInt::zero(), |g, c| g.gcd(c));
        let sign = if self.coeffs.last().unwrap().is_negative() { -1 } else { 1 };
        let g = g * sign;
        Self {
            coeffs: self.coeffs.iter().map(|c| c / &g).collect(),
            den: BigInt::one(),
        }
    }

    /// Greatest common divisor, normalized to a primitive integer polynomial
    /// with positive leading coefficient.
    pub fn gcd(&self, other: &PolyQ) -> Self {
        let mut a = self.primitive();
        let mut b = other.primitive();
        if a.degree() < b.degree() {
            core::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b).primitive();
            a = b;
            b = r;
        }
        a
    }

    // Pseudo-remainder of integer polynomials.
    fn pseudo_rem(&self, divisor: &PolyQ) -> Self {
        let dv = &divisor.coeffs;
        let dlen = dv.len();
        let lead = &dv[dlen - 1];
        let mut rem = self.coeffs.clone();
        while rem.len() >= dlen {
            let top = rem.last().unwrap().clone();
            let shift = rem.len() - dlen;
            for c in rem.iter_mut() {
                *c *= lead;
            }
            for (j, d) in dv.iter().enumerate() {
                rem[shift + j] -= &top * d;
            }
            rem.pop();
            while rem.last().is_some_and(Zero::is_zero) {
                rem.pop();
            }
        }
        Self::from_parts(rem, BigInt::one())
    }

    /// Evaluates at a rational point.
    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + Rational::from_integer(c.clone()))
            / Rational::from_integer(self.den.clone())
    }

    fn add_signed(&self, other: &PolyQ, negate: bool) -> Self {
        let (a, b) = (&self.coeffs, &other.coeffs);
        let n = a.len().max(b.len());
        let mut out = Vec::with_capacity(n);
        if self.den == other.den {
            for i in 0..n {
                let x = a.get(i).cloned().unwrap_or_default();
                let y = b.get(i).cloned().unwrap_or_default();
                out.push(if negate { x - y } else { x + y });
            }
            return Self::from_parts(out, self.den.clone());
        }
        let l = self.den.lcm(&other.den);
        let fa = &l / &self.den;
        let fb = &l / &other.den;
        for i in 0..n {
            let x = a.get(i).map(|c| c * &fa).unwrap_or_default();
            let y = b.get(i).map(|c| c * &fb).unwrap_or_default();
            out.push(if negate { x - y } else { x + y });
        }
        Self::from_parts(out, l)
    }

    fn mul_impl(&self, other: &PolyQ) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let (a, b) = (&self.coeffs, &other.coeffs);
        let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if !y.is_zero() {
                    out[i + j] += x * y;
                }
            }
        }
        let den = &self.den * &other.den;
        if den.is_one() {
            Self { coeffs: out, den }
        } else {
            Self::from_parts(out, den)
        }
    }
}

impl Default for PolyQ {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<i64> for PolyQ {
    fn from(c: i64) -> Self {
        Self::from_int(c)
    }
}

impl From<Rational> for PolyQ {
    fn from(c: Rational) -> Self {
        Self::constant(c)
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $body:expr) => {
        impl $tr<&PolyQ> for &PolyQ {
            type Output = PolyQ;
            fn $method(self, rhs: &PolyQ) -> PolyQ {
                $body(self, rhs)
            }
        }
        impl $tr<PolyQ> for PolyQ {
            type Output = PolyQ;
            fn $method(self, rhs: PolyQ) -> PolyQ {
                $body(&self, &rhs)
            }
        }
        impl $tr<&PolyQ> for PolyQ {
            type Output = PolyQ;
            fn $method(self, rhs: &PolyQ) -> PolyQ {
                $body(&self, rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a: &PolyQ, b: &PolyQ| a.add_signed(b, false));
forward_binop!(Sub, sub, |a: &PolyQ, b: &PolyQ| a.add_signed(b, true));
forward_binop!(Mul, mul, |a: &PolyQ, b: &PolyQ| a.mul_impl(b));

impl Neg for &PolyQ {
    type Output = PolyQ;
    fn neg(self) -> PolyQ {
        PolyQ {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
            den: self.den.clone(),
        }
    }
}

impl Neg for PolyQ {
    type Output = PolyQ;
    fn neg(self) -> PolyQ {
        -&self
    }
}

impl fmt::Display for PolyQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, self.coefficients().into_iter().enumerate(), "q")
    }
}
