//! q-Newton series `f_c(z) = Σ_n c(n) B_n(z)` with the basis
//! `B_n(z) = z^n (z^{-1})_n / (q)_n = ∏_{j=1}^n (z - q^{j-1}) / (1 - q^j)`.
//!
//! `f_c` is never built as a bivariate series. It is represented by its
//! expansion at `z = 1` in powers of `X = (z - 1)/(1 - q)`, whose
//! coefficients are `c(0)` and `Σ_{n ≥ 1} c(n) a_{z_1^m}(n-1)`. The sums
//! over `n` are cut at the q-adic precision, which is sound when
//! `v(c(n)) ≥ n`; that condition is checked for every term computed.

use alloc::vec::Vec;

use crate::harmonic::{nabla_weights, SequenceFn, SeriesTables};
use crate::scalar::{q_binomial, PolyQ, RationalFunction, TruncatedSeries};
use crate::words::{Word, WordSum};
use crate::{Error, Result};

fn q_pow(e: i64) -> RationalFunction {
    RationalFunction::q_power(e)
}

/// `B_n(z)` at `z = zval`; `B_0 = 1`.
pub fn b_at(n: usize, zval: &RationalFunction) -> RationalFunction {
    (1..=n).fold(RationalFunction::one(), |acc, j| {
        let num = zval - &q_pow(j as i64 - 1);
        &acc * &(&RationalFunction::over_one_minus_q_pow(PolyQ::one(), j as u32) * &num)
    })
}

/// Both sides of the interpolation formula
/// `Σ_{n=0}^m ∇(b)(l+n) B_n(q^m) = q^{-lm} Σ_{j=0}^l q^j (q^{-l})_j/(q)_j b(j+m)`.
pub fn interpolation_sides(b: &SequenceFn, m: usize, l: usize) -> (RationalFunction, RationalFunction) {
    let values = b.values(l + m);
    let zm = q_pow(m as i64);
    let lhs = (0..=m).fold(RationalFunction::zero(), |acc, n| {
        let nabla = crate::harmonic::nabla_from_values(&values, l + n);
        &acc + &(&nabla * &b_at(n, &zm))
    });
    let rhs = nabla_weights(l)
        .iter()
        .enumerate()
        .fold(RationalFunction::zero(), |acc, (j, wt)| &acc + &(wt * &values[j + m]));
    (lhs, &rhs * &q_pow(-((l * m) as i64)))
}

pub fn interpolation_check(b: &SequenceFn, m: usize, l: usize) -> bool {
    let (lhs, rhs) = interpolation_sides(b, m, l);
    lhs == rhs
}

/// `(x)_n` for a rational-function argument.
fn shifted(x: &RationalFunction, n: usize) -> RationalFunction {
    crate::scalar::q_shifted_factorial(x, n)
}

/// `(1/(q)_j) Σ_{n=0}^m q^{mn} (q^{-m})_n (t q^{-n})_j / (q)_n`.
///
/// Equals 0 for `j < m` and `(q^{-1} t)^m (t)_{j-m} / (q)_{j-m}` otherwise.
pub fn key_sum_lhs(m: usize, j: usize, t: &RationalFunction) -> RationalFunction {
    let q = q_pow(1);
    let qm = q_pow(-(m as i64));
    let sum = (0..=m).fold(RationalFunction::zero(), |acc, n| {
        let tn = t * &q_pow(-(n as i64));
        let term = &(&shifted(&qm, n) * &shifted(&tn, j)) / &shifted(&q, n);
        &acc + &(&term * &q_pow((m * n) as i64))
    });
    &sum / &shifted(&q, j)
}

/// Coefficients of `X^0, …, X^M` in the expansion of `f_c` at `z = 1`,
/// each modulo `q^P`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NewtonExpansion {
    coefficients: Vec<TruncatedSeries>,
    precision: usize,
}

impl NewtonExpansion {
    pub fn new(coefficients: Vec<TruncatedSeries>) -> Self {
        let precision = coefficients.iter().map(TruncatedSeries::precision).min().unwrap_or(0);
        let coefficients = coefficients.iter().map(|c| c.truncate(precision)).collect();
        Self { coefficients, precision }
    }

    pub fn coefficients(&self) -> &[TruncatedSeries] {
        &self.coefficients
    }

    pub fn coefficient(&self, m: usize) -> &TruncatedSeries {
        &self.coefficients[m]
    }

    /// The highest power `M` of `X` kept.
    pub fn order(&self) -> usize {
        self.coefficients.len().saturating_sub(1)
    }

    pub fn precision(&self) -> usize {
        self.precision
    }

    /// Product of the two expansions as power series in `X`, through the
    /// smaller order.
    pub fn cauchy_product(&self, other: &NewtonExpansion) -> NewtonExpansion {
        let order = self.order().min(other.order());
        let p = self.precision.min(other.precision);
        let coefficients = (0..=order)
            .map(|m| {
                (0..=m).fold(TruncatedSeries::zero(p), |acc, i| {
                    &acc + &(&self.coefficients[i] * &other.coefficients[m - i])
                })
            })
            .collect();
        NewtonExpansion { coefficients, precision: p }
    }
}

/// Expands `f_c` at `z = 1` through `X^order`, modulo `q^precision`, using
/// `c(0), …, c(terms)`.
///
/// Fails with [`Error::ConvergenceViolated`] if some computed `c(n)` has
/// valuation below `n`. Terms with `n ≥ precision` vanish modulo
/// `q^precision` and are only checked.
pub fn newton_expand(
    c: &SequenceFn,
    order: usize,
    precision: usize,
    terms: usize,
) -> Result<NewtonExpansion> {
    if order == 0 || precision == 0 || terms == 0 {
        return Err(Error::InvalidArgument("order, precision and terms must be positive"));
    }
    let mut tables = SeriesTables::new(precision);
    let powers: Vec<WordSum> = (1..=order).map(|m| WordSum::from_word(Word::z1_power(m))).collect();
    let mut coefficients = Vec::with_capacity(order + 1);
    coefficients.push(c.eval(0).series(precision)?);
    coefficients.resize(order + 1, TruncatedSeries::zero(precision));
    for n in 1..=terms {
        let value = c.eval(n);
        if let Some(v) = value.valuation() {
            if v < n as i64 {
                return Err(Error::ConvergenceViolated { n, valuation: v.max(0) as usize });
            }
        }
        if n >= precision || value.is_zero() {
            continue;
        }
        let series = value.series(precision)?;
        for (m, word) in powers.iter().enumerate() {
            let a = tables.a_value(word, n - 1)?;
            coefficients[m + 1] = &coefficients[m + 1] + &(&series * &a);
        }
    }
    Ok(NewtonExpansion { coefficients, precision })
}

/// Both sides of
/// `B_n(z) = y^n Σ_{j=0}^n (y^{-1})_{n-j}/(q)_{n-j} · B_j(y^{-1} z)`.
pub fn b_connect_sides(
    n: usize,
    yval: &RationalFunction,
    zval: &RationalFunction,
) -> Result<(RationalFunction, RationalFunction)> {
    let y_inv = yval.inv()?;
    let z_over_y = &y_inv * zval;
    let q = q_pow(1);
    let sum = (0..=n).fold(RationalFunction::zero(), |acc, j| {
        let coeff = &shifted(&y_inv, n - j) / &shifted(&q, n - j);
        &acc + &(&coeff * &b_at(j, &z_over_y))
    });
    Ok((b_at(n, zval), &yval.pow(n as i32)? * &sum))
}

pub fn b_connect_check(n: usize, yval: &RationalFunction, zval: &RationalFunction) -> Result<bool> {
    let (lhs, rhs) = b_connect_sides(n, yval, zval)?;
    Ok(lhs == rhs)
}

/// The coefficients of `f_{c_1} f_{c_2}`:
/// `c_3(n) = Σ_{k=0}^n [n,k]_q c_1(k) Σ_{j=0}^k c_2(n-k+j) B_j(q^k)`.
pub fn newton_product_c3(c1: &SequenceFn, c2: &SequenceFn) -> SequenceFn {
    let (c1, c2) = (c1.clone(), c2.clone());
    SequenceFn::new(move |n| {
        let mut acc = RationalFunction::zero();
        for k in 0..=n {
            let a = c1.eval(k);
            if a.is_zero() {
                continue;
            }
            let qk = q_pow(k as i64);
            let inner = (0..=k).fold(RationalFunction::zero(), |s, j| {
                let b = c2.eval(n - k + j);
                if b.is_zero() {
                    s
                } else {
                    &s + &(&b * &b_at(j, &qk))
                }
            });
            let binom = q_binomial(n, k).expect("k <= n");
            acc = &acc + &(&a * &inner).mul_poly(&binom);
        }
        acc
    })
}
