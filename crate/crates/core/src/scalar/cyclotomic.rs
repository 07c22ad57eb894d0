use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::Zero;

use super::PolyQ;

pub fn divisors(n: u32) -> Vec<u32> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

fn mobius(mut n: u32) -> i8 {
    let mut sign = 1;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return 0;
            }
            sign = -sign;
        }
        p += 1;
    }
    if n > 1 {
        sign = -sign;
    }
    sign
}

fn one_minus_q_pow(e: u32) -> PolyQ {
    let mut c = vec![BigInt::zero(); e as usize + 1];
    c[0] = 1.into();
    c[e as usize] = (-1).into();
    PolyQ::from_integers(c)
}

/// Irreducible factor `Φ_d` of `1 - q^n`, normalized to constant term 1.
///
/// For `d = 1` this is `1 - q`; for `d >= 2` it is the usual cyclotomic
/// polynomial. `∏_{d | n} cyclotomic(d) = 1 - q^n`.
pub fn cyclotomic(d: u32) -> PolyQ {
    assert!(d >= 1);
    if d == 1 {
        return one_minus_q_pow(1);
    }
    let mut num = PolyQ::one();
    let mut den = PolyQ::one();
    for e in divisors(d) {
        match mobius(d / e) {
            1 => num = &num * &one_minus_q_pow(e),
            -1 => den = &den * &one_minus_q_pow(e),
            _ => {}
        }
    }
    num.div_exact_unit(&den).expect("cyclotomic quotient is exact")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cyclotomics() {
        assert_eq!(cyclotomic(1), PolyQ::from_integers([1, -1]));
        assert_eq!(cyclotomic(2), PolyQ::from_integers([1, 1]));
        assert_eq!(cyclotomic(6), PolyQ::from_integers([1, -1, 1]));
        assert_eq!(cyclotomic(12), PolyQ::from_integers([1, 0, -1, 0, 1]));
    }

    #[test]
    fn product_over_divisors() {
        for n in 1..=30 {
            let prod = divisors(n).into_iter().fold(PolyQ::one(), |acc, d| &acc * &cyclotomic(d));
            assert_eq!(prod, one_minus_q_pow(n), "n = {n}");
        }
    }

    #[test]
    fn divisor_lists() {
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(divisors(1), vec![1]);
        assert_eq!(divisors(49), vec![1, 7, 49]);
    }
}
