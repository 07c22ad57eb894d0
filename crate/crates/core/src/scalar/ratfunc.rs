use alloc::collections::BTreeMap;
use core::fmt;
use core::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::{cyclotomic, divisors, PolyQ, Rational, TruncatedSeries};
use crate::{Error, Result};

/// Rational function in `q` over `ℚ`.
///
/// The denominator is kept factored as `q^a · ∏ Φ_d^{e_d} · r`, where `Φ_d`
/// are the cyclotomic factors of `1 - q^n` (constant term 1) and `r` is a
/// residual polynomial with constant term 1 coprime to `q`. Every denominator
/// the harmonic sums produce is a product of q-integers, so `r` stays 1 in
/// practice and sums need no polynomial gcd: the common denominator is a
/// max over exponents and cancellation is trial division by the `Φ_d`
/// already present.
///
/// Values are kept reduced (numerator coprime to denominator). Negative
/// powers of `q` are allowed; only [`series`](Self::series) requires
/// `a = 0`.
#[derive(Clone, Debug)]
pub struct RationalFunction {
    num: PolyQ,
    q_pow: usize,
    cyclo: BTreeMap<u32, u32>,
    rest: PolyQ,
}

fn totient(n: u32) -> u32 {
    divisors(n).into_iter().filter(|&d| gcd_u32(d, n) == 1).count() as u32
}

fn gcd_u32(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd_u32(b, a % b)
    }
}

fn cyclo_product<'a, I: IntoIterator<Item = (&'a u32, u32)>>(factors: I) -> PolyQ {
    let mut acc = PolyQ::one();
    for (&d, e) in factors {
        if e > 0 {
            acc = &acc * &cyclotomic(d).pow(e);
        }
    }
    acc
}

impl RationalFunction {
    pub fn zero() -> Self {
        Self::from_poly(PolyQ::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(PolyQ::one())
    }

    pub fn from_int(c: i64) -> Self {
        Self::from_poly(PolyQ::from_int(c))
    }

    pub fn from_rational(c: Rational) -> Self {
        Self::from_poly(PolyQ::constant(c))
    }

    pub fn from_poly(num: PolyQ) -> Self {
        Self { num, q_pow: 0, cyclo: BTreeMap::new(), rest: PolyQ::one() }
    }

    /// `q^e` for any integer `e`.
    pub fn q_power(e: i64) -> Self {
        if e >= 0 {
            Self::from_poly(PolyQ::one().shift(e as usize))
        } else {
            Self { num: PolyQ::one(), q_pow: e.unsigned_abs() as usize, cyclo: BTreeMap::new(), rest: PolyQ::one() }
        }
    }

    /// `num / (q^q_pow · ∏ Φ_d^e)`.
    pub fn with_cyclotomic_denominator<I>(num: PolyQ, q_pow: usize, factors: I) -> Self
    where
        I: IntoIterator<Item = (u32, u32)>,
    {
        let mut cyclo = BTreeMap::new();
        for (d, e) in factors {
            if e > 0 {
                *cyclo.entry(d).or_insert(0) += e;
            }
        }
        Self { num, q_pow, cyclo, rest: PolyQ::one() }.reduce()
    }

    /// `num / [m]^k` with `[m]` the q-integer; `m >= 1`.
    pub fn over_q_integer_pow(num: PolyQ, m: u32, k: u32) -> Self {
        assert!(m >= 1, "[0] = 0 is not invertible");
        Self::with_cyclotomic_denominator(
            num,
            0,
            divisors(m).into_iter().filter(|&d| d > 1).map(|d| (d, k)),
        )
    }

    /// `num / (1 - q^j)`; `j >= 1`.
    pub fn over_one_minus_q_pow(num: PolyQ, j: u32) -> Self {
        assert!(j >= 1);
        Self::with_cyclotomic_denominator(num, 0, divisors(j).into_iter().map(|d| (d, 1)))
    }

    pub fn numer(&self) -> &PolyQ {
        &self.num
    }

    /// The denominator as an expanded polynomial.
    pub fn denom(&self) -> PolyQ {
        let mut d = cyclo_product(self.cyclo.iter().map(|(d, &e)| (d, e)));
        if !self.rest.is_one() {
            d = &d * &self.rest;
        }
        d.shift(self.q_pow)
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den_is_one()
    }

    fn den_is_one(&self) -> bool {
        self.q_pow == 0 && self.cyclo.is_empty() && self.rest.is_one()
    }

    /// The polynomial this function equals, if any.
    pub fn as_poly(&self) -> Option<&PolyQ> {
        self.den_is_one().then_some(&self.num)
    }

    /// True when the denominator does not vanish at `q = 0`.
    pub fn is_regular(&self) -> bool {
        self.q_pow == 0
    }

    /// Exact order of vanishing at `q = 0`, negative for poles; `None` for zero.
    pub fn valuation(&self) -> Option<i64> {
        let low = self.num.low_order()?;
        Some(low as i64 - self.q_pow as i64)
    }

    /// Power-series expansion at `q = 0` modulo `q^precision`.
    pub fn series(&self, precision: usize) -> Result<TruncatedSeries> {
        if !self.is_regular() {
            return Err(Error::NotRegular);
        }
        let num = TruncatedSeries::from_poly(&self.num, precision);
        if self.den_is_one() {
            return Ok(num);
        }
        let mut den = TruncatedSeries::one(precision);
        for (&d, &e) in &self.cyclo {
            let f = TruncatedSeries::from_poly(&cyclotomic(d), precision);
            for _ in 0..e {
                den = &den * &f;
            }
        }
        if !self.rest.is_one() {
            den = &den * &TruncatedSeries::from_poly(&self.rest, precision);
        }
        Ok(&num * &den.inverse()?)
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let low = self.num.low_order().unwrap();
        let mut p = self.num.unshift(low);
        let c0 = p.constant_term();
        p = p.scale(&c0.recip());
        let mut cyclo = BTreeMap::new();
        let bound = p.degree().unwrap_or(0) as u32;
        let mut d = 1;
        while p.degree().unwrap_or(0) > 0 && d <= 4 * bound + 2 {
            if totient(d) <= p.degree().unwrap() as u32 {
                let c = cyclotomic(d);
                while let Some(quot) = p.div_exact_unit(&c) {
                    p = quot;
                    *cyclo.entry(d).or_insert(0) += 1;
                }
            }
            d += 1;
        }
        let num = self.denom().scale(&c0.recip());
        Ok(Self { num, q_pow: low, cyclo, rest: p }.reduce())
    }

    pub fn pow(&self, e: i32) -> Result<Self> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut acc = Self::one();
        for _ in 0..e.unsigned_abs() {
            acc = &acc * &base;
        }
        Ok(acc)
    }

    fn reduce(mut self) -> Self {
        if self.num.is_zero() {
            return Self::zero();
        }
        if self.q_pow > 0 {
            let k = self.num.low_order().unwrap().min(self.q_pow);
            if k > 0 {
                self.num = self.num.unshift(k);
                self.q_pow -= k;
            }
        }
        for (&d, e) in self.cyclo.iter_mut() {
            let c = cyclotomic(d);
            while *e > 0 {
                match self.num.div_exact_unit(&c) {
                    Some(n) => {
                        self.num = n;
                        *e -= 1;
                    }
                    None => break,
                }
            }
        }
        self.cyclo.retain(|_, e| *e > 0);
        if !self.rest.is_one() {
            let g = self.num.gcd(&self.rest);
            if g.degree().unwrap_or(0) > 0 {
                self.num = self.num.div_rem(&g).0;
                self.rest = self.rest.div_rem(&g).0;
            }
            let c0 = self.rest.constant_term();
            if !c0.is_one() {
                let inv = c0.recip();
                self.rest = self.rest.scale(&inv);
                self.num = self.num.scale(&inv);
            }
        }
        self
    }

    fn add_signed(&self, other: &Self, negate: bool) -> Self {
        if other.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return if negate { -other } else { other.clone() };
        }
        let q_pow = self.q_pow.max(other.q_pow);
        let mut cyclo = self.cyclo.clone();
        for (&d, &e) in &other.cyclo {
            let slot = cyclo.entry(d).or_insert(0);
            *slot = (*slot).max(e);
        }
        let (rest_a, rest_b, rest) = if self.rest == other.rest {
            (PolyQ::one(), PolyQ::one(), self.rest.clone())
        } else if self.rest.is_one() {
            (other.rest.clone(), PolyQ::one(), other.rest.clone())
        } else if other.rest.is_one() {
            (PolyQ::one(), self.rest.clone(), self.rest.clone())
        } else {
            (other.rest.clone(), self.rest.clone(), &self.rest * &other.rest)
        };
        let mult = |x: &Self, r: PolyQ| -> PolyQ {
            let c = cyclo_product(
                cyclo.iter().map(|(d, &e)| (d, e - x.cyclo.get(d).copied().unwrap_or(0))),
            );
            (&c * &r).shift(q_pow - x.q_pow)
        };
        let a = &self.num * &mult(self, rest_a);
        let b = &other.num * &mult(other, rest_b);
        let num = if negate { a - b } else { a + b };
        Self { num, q_pow, cyclo, rest }.reduce()
    }

    fn mul_impl(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut cyclo = self.cyclo.clone();
        for (&d, &e) in &other.cyclo {
            *cyclo.entry(d).or_insert(0) += e;
        }
        let rest = if other.rest.is_one() {
            self.rest.clone()
        } else if self.rest.is_one() {
            other.rest.clone()
        } else {
            &self.rest * &other.rest
        };
        Self {
            num: &self.num * &other.num,
            q_pow: self.q_pow + other.q_pow,
            cyclo,
            rest,
        }
        .reduce()
    }

    /// Multiplies by a polynomial.
    pub fn mul_poly(&self, p: &PolyQ) -> Self {
        if p.is_one() {
            return self.clone();
        }
        Self { num: &self.num * p, ..self.clone() }.reduce()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { num: self.num.scale(c), ..self.clone() }
    }
}

impl PartialEq for RationalFunction {
    fn eq(&self, other: &Self) -> bool {
        if self.rest.is_one() && other.rest.is_one() {
            return self.q_pow == other.q_pow && self.cyclo == other.cyclo && self.num == other.num;
        }
        &self.num * &other.denom() == &other.num * &self.denom()
    }
}

impl Eq for RationalFunction {}

impl Default for RationalFunction {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<PolyQ> for RationalFunction {
    fn from(p: PolyQ) -> Self {
        Self::from_poly(p)
    }
}

impl From<i64> for RationalFunction {
    fn from(c: i64) -> Self {
        Self::from_int(c)
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $body:expr) => {
        impl $tr<&RationalFunction> for &RationalFunction {
            type Output = RationalFunction;
            fn $method(self, rhs: &RationalFunction) -> RationalFunction {
                $body(self, rhs)
            }
        }
        impl $tr<RationalFunction> for RationalFunction {
            type Output = RationalFunction;
            fn $method(self, rhs: RationalFunction) -> RationalFunction {
                $body(&self, &rhs)
            }
        }
        impl $tr<&RationalFunction> for RationalFunction {
            type Output = RationalFunction;
            fn $method(self, rhs: &RationalFunction) -> RationalFunction {
                $body(&self, rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a: &RationalFunction, b| a.add_signed(b, false));
forward_binop!(Sub, sub, |a: &RationalFunction, b| a.add_signed(b, true));
forward_binop!(Mul, mul, |a: &RationalFunction, b| a.mul_impl(b));
forward_binop!(Div, div, |a: &RationalFunction, b: &RationalFunction| {
    a * &b.inv().expect("division by zero rational function")
});

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction { num: -&self.num, ..self.clone() }
    }
}

impl Neg for RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction { num: -self.num, ..self }
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den_is_one() {
            return write!(f, "{}", self.num);
        }
        write!(f, "({})/({})", self.num, self.denom())
    }
}
