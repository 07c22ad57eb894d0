//! Verification suites behind `qmzv verify`. Each suite expands into cases
//! that are checked independently, in parallel, and reported in a fixed order.

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rayon::prelude::*;
use serde::Serialize;

use qmzv_core::harmonic::{a_values, nabla_from_values, s_values, values};
use qmzv_core::newton::{interpolation_check, newton_product_c3};
use qmzv_core::scalar::{q_integer, series_expand};
use qmzv_core::words::{
    act, circ, circ_plus, circledast, circledast_q, d, d_q, phi, psi, psi_composite,
    set_hbar_zero, stuffle_bar, stuffle_minus, stuffle_plus, triangle, xi, Action,
};
use qmzv_core::{
    HbarPolynomial, PolyQ, RationalFunction, Result, SequenceFn, SumKind, Word, WordSum,
    ZetaContext,
};

use crate::{driver, CliError, RunConfig};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Suite {
    Duality,
    Products,
    Star,
    SaProduct,
    Interpolation,
    Newton,
    Psi,
    HbarDegeneration,
    Relations,
    Series,
}

impl Suite {
    pub const ALL: [Suite; 10] = [
        Suite::Duality,
        Suite::Products,
        Suite::Star,
        Suite::SaProduct,
        Suite::Interpolation,
        Suite::Newton,
        Suite::Psi,
        Suite::HbarDegeneration,
        Suite::Relations,
        Suite::Series,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Duality => "duality",
            Suite::Products => "products",
            Suite::Star => "star",
            Suite::SaProduct => "sa-product",
            Suite::Interpolation => "interpolation",
            Suite::Newton => "newton",
            Suite::Psi => "psi",
            Suite::HbarDegeneration => "hbar-degeneration",
            Suite::Relations => "relations",
            Suite::Series => "series",
        }
    }

    pub fn from_name(s: &str) -> Option<Suite> {
        Suite::ALL.into_iter().find(|x| x.name() == s)
    }
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct Case {
    pub suite: &'static str,
    pub case: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

type Check = Box<dyn Fn() -> Result<Option<String>> + Send + Sync>;

fn check(cond: bool, what: impl FnOnce() -> String) -> Option<String> {
    (!cond).then(what)
}

fn sum(u: &Word) -> WordSum {
    WordSum::from_word(u.clone())
}

fn pairs(max_total: u32) -> Vec<(Word, Word)> {
    let ws = Word::all_up_to_weight(max_total.saturating_sub(1));
    let mut out = Vec::new();
    for u in &ws {
        for v in &ws {
            if u.weight() + v.weight() <= u64::from(max_total) {
                out.push((u.clone(), v.clone()));
            }
        }
    }
    out
}

fn first_failure(checks: impl IntoIterator<Item = Option<String>>) -> Option<String> {
    checks.into_iter().flatten().next()
}

/// Runs one suite. Errors are configuration problems; failing identities
/// come back as cases with `passed == false`.
pub fn run(suite: Suite, cfg: &RunConfig) -> Result<Vec<Case>, CliError> {
    cfg.validate()?;
    if suite == Suite::Relations {
        return Ok(driver::relation_reports(cfg)?
            .iter()
            .map(|r| {
                let rel = &r.relation;
                Case {
                    suite: suite.name(),
                    case: format!("{} {} n={}", rel.w1, rel.w2, rel.n),
                    passed: r.holds(),
                    detail: Some(match &r.outcome {
                        Ok(v) => format!("residual valuation {v}"),
                        Err(e) => e.to_string(),
                    }),
                }
            })
            .collect());
    }
    let cases = build(suite, cfg);
    cfg.install(|| {
        cases
            .into_par_iter()
            .map(|(case, f)| {
                let (passed, detail) = match f() {
                    Ok(None) => (true, None),
                    Ok(Some(why)) => (false, Some(why)),
                    Err(e) => (false, Some(e.to_string())),
                };
                Case { suite: suite.name(), case, passed, detail }
            })
            .collect()
    })
}

fn build(suite: Suite, cfg: &RunConfig) -> Vec<(String, Check)> {
    let (max_w, max_n, p) = (cfg.max_weight, cfg.max_n, cfg.precision);
    let mut out: Vec<(String, Check)> = Vec::new();
    let mut push = |name: String, f: Check| out.push((name, f));
    match suite {
        Suite::Duality => {
            for u in Word::all_up_to_weight(max_w) {
                push(u.to_string(), Box::new(move || {
                    let s = values(SumKind::S, &sum(&u), max_n);
                    let dual = s_values(&phi(&sum(&u))?, max_n - 1)?;
                    Ok(first_failure((0..=max_n).map(|n| {
                        let rhs = if n == 0 { RationalFunction::zero() } else { -&dual[n - 1] };
                        check(nabla_from_values(&s, n) == rhs, || format!("fails at n = {n}"))
                    })))
                }));
            }
        }
        Suite::Products => {
            for (u, v) in pairs(max_w) {
                push(format!("{u} {v}"), Box::new(move || {
                    let (x, y) = (sum(&u), sum(&v));
                    let prod = |kind, xy: &WordSum| {
                        let (a, b) = (values(kind, &x, max_n), values(kind, &y, max_n));
                        let c = values(kind, xy, max_n);
                        (0..=max_n).find(|&n| &a[n] * &b[n] != c[n])
                    };
                    Ok(first_failure([
                        prod(SumKind::S, &stuffle_minus(&x, &y)).map(|n| format!("S fails at n = {n}")),
                        prod(SumKind::A, &stuffle_plus(&x, &y)).map(|n| format!("A fails at n = {n}")),
                    ]))
                }));
            }
        }
        Suite::Star => {
            for u in Word::all_up_to_weight(max_w) {
                push(u.to_string(), Box::new(move || {
                    let w = sum(&u);
                    let mut fails = vec![check(
                        values(SumKind::AStar, &w, max_n) == values(SumKind::A, &d_q(&w), max_n),
                        || "A-star differs from A of d_q".into(),
                    )];
                    if u.is_admissible() {
                        let mut ctx = ZetaContext::new(p);
                        let (lhs, rhs) = (ctx.zeta_star(&w)?, ctx.zeta(&d_q(&w))?);
                        fails.push(check(lhs == rhs, || format!("zeta-star differs mod q^{p}")));
                    }
                    Ok(first_failure(fails))
                }));
            }
        }
        Suite::SaProduct => {
            for (u, v) in pairs(max_w) {
                push(format!("{u} {v}"), Box::new(move || {
                    let (x, y) = (sum(&u), sum(&v));
                    let (s, a) = (s_values(&x, max_n)?, a_values(&y, max_n)?);
                    let sa = a_values(&circledast_q(&d_q(&x), &y)?, max_n)?;
                    let (ax, big_a) = (a_values(&x, max_n)?, values(SumKind::A, &y, max_n));
                    let tri = a_values(&triangle(&x, &y)?, max_n)?;
                    Ok(first_failure((0..=max_n).flat_map(|n| {
                        [
                            check(&s[n] * &a[n] == sa[n], || format!("s a fails at n = {n}")),
                            check(&ax[n] * &big_a[n] == tri[n], || format!("a A fails at n = {n}")),
                        ]
                    })))
                }));
            }
            for i in 1..=max_w {
                let mut tails = vec![Word::empty()];
                tails.extend(Word::all_up_to_weight(max_w - i));
                for u in tails {
                    push(format!("shift z_{i} {u}"), Box::new(move || {
                        let w = sum(&u);
                        let big_a = values(SumKind::A, &w, max_n + 1);
                        let a = a_values(&(&w.prepend(i) + &circ_plus(i, &w)), max_n)?;
                        Ok(first_failure((0..=max_n).map(|n| {
                            let head = RationalFunction::over_q_integer_pow(
                                PolyQ::one().shift((i as usize - 1) * (n + 1)),
                                (n + 1) as u32,
                                i,
                            );
                            check(&head * &big_a[n + 1] == a[n], || format!("fails at n = {n}"))
                        })))
                    }));
                }
            }
        }
        Suite::Interpolation => {
            for u in Word::all_up_to_weight(max_w) {
                push(u.to_string(), Box::new(move || {
                    let b = SequenceFn::harmonic(SumKind::S, sum(&u)).memoize(max_n + 3);
                    Ok(first_failure((0..=max_n).flat_map(|m| {
                        let b = &b;
                        (0..=3).map(move |l| {
                            check(interpolation_check(b, m, l), || format!("fails at m = {m}, l = {l}"))
                        })
                    })))
                }));
            }
        }
        Suite::Newton => {
            for (u, v) in pairs(max_w) {
                push(format!("{u} {v}"), Box::new(move || {
                    let b1 = SequenceFn::harmonic(SumKind::S, sum(&u)).memoize(max_n);
                    let b2 = SequenceFn::harmonic(SumKind::S, sum(&v)).memoize(max_n);
                    let c3 = newton_product_c3(&b1.nabla().memoize(max_n), &b2.nabla().memoize(max_n));
                    let prod = b1.mul(&b2).values(max_n);
                    Ok(first_failure((0..=max_n).map(|n| {
                        check(nabla_from_values(&prod, n) == c3.eval(n), || format!("fails at n = {n}"))
                    })))
                }));
            }
        }
        Suite::Psi => {
            for u in Word::all_up_to_weight(max_w) {
                push(u.to_string(), Box::new(move || {
                    let x = sum(&u);
                    Ok(check(psi_composite(&x)? == psi(&x), || "xi recursion differs from composite".into()))
                }));
            }
            for (u, v) in pairs(max_w) {
                push(format!("{u} {v}"), Box::new(move || {
                    let (x, y) = (sum(&u), sum(&v));
                    Ok(check(stuffle_minus(&psi(&x), &psi(&y)) == psi(&stuffle_bar(&x, &y)), || {
                        "does not intertwine the products".into()
                    }))
                }));
            }
            for i in 1..max_w.max(2) * 2 {
                push(format!("xi_{i}"), Box::new(move || {
                    let x = xi(i);
                    let mut next = circ(1, &x);
                    next.add_scaled(&circ(0, &x), &HbarPolynomial::from_integers([0, -1]));
                    let mut fails = vec![check(next == xi(i + 1), || "letter recursion fails".into())];
                    for j in 1..=i {
                        let lhs = act(Action::CircMinus, &xi(i), &xi(j))?;
                        fails.push(check(lhs == -xi(i + j), || format!("xi_{i} o- xi_{j} fails")));
                    }
                    Ok(first_failure(fails))
                }));
            }
        }
        Suite::HbarDegeneration => {
            let variant = cfg.circledast_variant;
            for u in Word::all_up_to_weight(max_w) {
                push(u.to_string(), Box::new(move || {
                    let x = sum(&u);
                    Ok(check(set_hbar_zero(&d_q(&x)) == d(&set_hbar_zero(&x)), || "d_q limit".into()))
                }));
            }
            for (u, v) in pairs(max_w) {
                push(format!("{u} {v}"), Box::new(move || {
                    let (x, y) = (sum(&u), sum(&v));
                    let limit = set_hbar_zero(&circledast_q(&x, &y)?);
                    Ok(first_failure([
                        check(set_hbar_zero(&stuffle_minus(&x, &y)) == stuffle_bar(&x, &y), || {
                            "stuffle limit".into()
                        }),
                        check(limit == circledast(&x, &y, variant)?, || {
                            format!("circledast limit is {limit}")
                        }),
                    ]))
                }));
            }
        }
        Suite::Series => {
            let mut rng = StdRng::seed_from_u64(cfg.seed);
            for k in 0..64 {
                let (a, b) = (random_ratfunc(&mut rng), random_ratfunc(&mut rng));
                push(format!("sample {k}"), Box::new(move || {
                    let (sa, sb) = (series_expand(&a, p)?, series_expand(&b, p)?);
                    Ok(first_failure([
                        check(series_expand(&(&a + &b), p)? == &sa + &sb, || format!("sum of {a} and {b}")),
                        check(series_expand(&(&a * &b), p)? == &sa * &sb, || format!("product of {a} and {b}")),
                    ]))
                }));
            }
        }
        Suite::Relations => unreachable!("handled by the driver"),
    }
    out
}

/// A random element of `ℚ[q]` divided by a few `[m]`.
fn random_ratfunc(rng: &mut StdRng) -> RationalFunction {
    let len = rng.gen_range(1..6);
    let num: Vec<i64> = (0..len).map(|_| rng.gen_range(-5..=5)).collect();
    let mut f = RationalFunction::from_poly(PolyQ::from_integers(num));
    for _ in 0..rng.gen_range(0..3) {
        f = &f / &RationalFunction::from_poly(q_integer(rng.gen_range(1..7)));
    }
    f
}
