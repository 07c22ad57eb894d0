//! End-to-end acceptance checks. Runs without the libtest harness and prints
//! one PASS/FAIL line per criterion; exits nonzero if any fails.

use std::collections::HashSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use qmzv_core::harmonic::{
    a_values, nabla_from_values, s_values, values, SequenceFn, SumKind,
};
use qmzv_core::newton::{
    interpolation_sides, key_sum_lhs, newton_expand, newton_product_c3,
};
use qmzv_core::scalar::{q_shifted_factorial, RationalFunction};
use qmzv_core::words::{
    act, circ, circ_plus, circledast, circledast_q, d, d_q, phi, psi, psi_composite,
    set_hbar_zero, stuffle_bar, stuffle_minus, stuffle_plus, triangle, xi, Action,
    CircledastVariant,
};
use qmzv_core::zeta::{Relation, RelationVariant, ZetaContext};
use qmzv_core::{HbarPolynomial, TruncatedSeries, Valuation, Word, WordSum};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn sum(u: &Word) -> WordSum {
    WordSum::from_word(u.clone())
}

fn words(max_weight: u32) -> Vec<Word> {
    Word::all_up_to_weight(max_weight)
}

fn words_with_empty(max_weight: u32) -> Vec<Word> {
    let mut v = vec![Word::empty()];
    v.extend(words(max_weight));
    v
}

fn pairs(max_total: u32) -> Vec<(Word, Word)> {
    let ws = words(max_total.saturating_sub(1));
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

fn q_pow(e: i64) -> RationalFunction {
    RationalFunction::q_power(e)
}

fn criterion_1() -> Outcome {
    let mut checks = 0;
    for u in words(5) {
        let w = sum(&u);
        let s = values(SumKind::S, &w, 8);
        ensure(nabla_from_values(&s, 0).is_zero(), || format!("nabla S_{u}(0) != 0"))?;
        let dual = s_values(&phi(&w).unwrap(), 7).unwrap();
        for n in 1..=8 {
            ensure(nabla_from_values(&s, n) == -&dual[n - 1], || format!("{u}, n = {n}"))?;
            checks += 1;
        }
    }
    Ok(format!("{checks} exact identities"))
}

fn criterion_2() -> Outcome {
    let mut checks = 0;
    for (u, v) in pairs(5) {
        let (x, y) = (sum(&u), sum(&v));
        let (sx, sy) = (values(SumKind::S, &x, 8), values(SumKind::S, &y, 8));
        let sxy = values(SumKind::S, &stuffle_minus(&x, &y), 8);
        let (ax, ay) = (values(SumKind::A, &x, 8), values(SumKind::A, &y, 8));
        let axy = values(SumKind::A, &stuffle_plus(&x, &y), 8);
        for n in 0..=8 {
            ensure(&sx[n] * &sy[n] == sxy[n], || format!("S: {u}, {v}, n = {n}"))?;
            ensure(&ax[n] * &ay[n] == axy[n], || format!("A: {u}, {v}, n = {n}"))?;
            checks += 2;
        }
    }
    Ok(format!("{checks} exact identities"))
}

fn star_zeta_words() -> Vec<Word> {
    words(5).into_iter().filter(Word::is_admissible).collect()
}

fn criterion_3() -> Outcome {
    for u in words(5) {
        let w = sum(&u);
        ensure(values(SumKind::AStar, &w, 8) == values(SumKind::A, &d_q(&w), 8), || {
            format!("A-star vs A(d_q): {u}")
        })?;
    }
    let mut ctx = ZetaContext::new(30);
    let admissible = star_zeta_words();
    for u in &admissible {
        let w = sum(u);
        let lhs = ctx.zeta_star(&w).map_err(|e| e.to_string())?;
        let rhs = ctx.zeta(&d_q(&w)).map_err(|e| e.to_string())?;
        ensure(lhs == rhs, || format!("zeta-star vs zeta(d_q): {u}"))?;
    }
    Ok(format!("{} words exact, {} admissible words mod q^30", words(5).len(), admissible.len()))
}

fn criterion_4() -> Outcome {
    let mut checks = 0;
    for (u, v) in pairs(5) {
        let (x, y) = (sum(&u), sum(&v));
        let s = s_values(&x, 6).unwrap();
        let a = a_values(&y, 6).unwrap();
        let rhs = a_values(&circledast_q(&d_q(&x), &y).unwrap(), 6).unwrap();
        let big_a = values(SumKind::A, &y, 6);
        let tri = a_values(&triangle(&x, &y).unwrap(), 6).unwrap();
        let ax = a_values(&x, 6).unwrap();
        for n in 0..=6 {
            ensure(&s[n] * &a[n] == rhs[n], || format!("s*a: {u}, {v}, n = {n}"))?;
            ensure(&ax[n] * &big_a[n] == tri[n], || format!("a*A: {u}, {v}, n = {n}"))?;
            checks += 2;
        }
    }
    for i in 1..=4u32 {
        for u in words_with_empty(4) {
            if u64::from(i) + u.weight() > 6 {
                continue;
            }
            let w = sum(&u);
            let arg = &w.prepend(i) + &circ_plus(i, &w);
            let big_a = values(SumKind::A, &w, 7);
            let a = a_values(&arg, 6).unwrap();
            for n in 0..=6 {
                let m = (n + 1) as u32;
                let head = RationalFunction::over_q_integer_pow(
                    qmzv_core::PolyQ::one().shift((i as usize - 1) * (n + 1)),
                    m,
                    i,
                );
                ensure(&head * &big_a[n + 1] == a[n], || format!("A-to-a: i = {i}, {u}, n = {n}"))?;
                checks += 1;
            }
        }
    }
    for i in 1..=3u32 {
        for j in 1..=3u32 {
            for u in words_with_empty(3) {
                for v in words_with_empty(3) {
                    let lhs = triangle(&d_q(&sum(&u).prepend(i + j)), &sum(&v)).unwrap();
                    let rhs =
                        circledast_q(&d_q(&sum(&u).prepend(i)), &sum(&v).prepend(j)).unwrap();
                    ensure(lhs == rhs, || format!("triangle identity: i = {i}, j = {j}, {u}, {v}"))?;
                    checks += 1;
                }
            }
        }
    }
    Ok(format!("{checks} exact identities"))
}

fn criterion_5() -> Outcome {
    let mut checks = 0;
    for u in words(4) {
        let b = SequenceFn::harmonic(SumKind::S, sum(&u)).memoize(9);
        for m in 0..=6 {
            for l in 0..=3 {
                let (lhs, rhs) = interpolation_sides(&b, m, l);
                ensure(lhs == rhs, || format!("interpolation: {u}, m = {m}, l = {l}"))?;
                checks += 1;
            }
        }
    }
    let q = q_pow(1);
    for l in 0..=3 {
        let t = q_pow(-l);
        for m in 0..=6usize {
            for j in 0..=6usize {
                let lhs = key_sum_lhs(m, j, &t);
                let rhs = if j < m {
                    RationalFunction::zero()
                } else {
                    let head = (&t * &q_pow(-1)).pow(m as i32).unwrap();
                    &head * &(&q_shifted_factorial(&t, j - m) / &q_shifted_factorial(&q, j - m))
                };
                ensure(lhs == rhs, || format!("key sum: m = {m}, j = {j}, l = {l}"))?;
                checks += 1;
            }
        }
    }
    Ok(format!("{checks} exact identities"))
}

fn criterion_6() -> Outcome {
    let mut checks = 0;
    let ws = words(3);
    for u in &ws {
        let b1 = SequenceFn::harmonic(SumKind::S, sum(u)).memoize(6);
        let c1 = b1.nabla().memoize(6);
        for v in &ws {
            let b2 = SequenceFn::harmonic(SumKind::S, sum(v)).memoize(6);
            let c2 = b2.nabla().memoize(6);
            let c3 = newton_product_c3(&c1, &c2);
            let product = b1.mul(&b2).memoize(6);
            let vals = product.values(6);
            for n in 0..=6 {
                ensure(nabla_from_values(&vals, n) == c3.eval(n), || format!("{u}, {v}, n = {n}"))?;
                checks += 1;
            }
        }
    }
    let (order, p) = (4, 25);
    let cauchy_pairs = [("[1]", "[1]"), ("[1]", "[2]"), ("[2]", "[1,1]")];
    for (x, y) in cauchy_pairs {
        let c1 = SequenceFn::harmonic(SumKind::S, x.parse().unwrap()).nabla().memoize(p);
        let c2 = SequenceFn::harmonic(SumKind::S, y.parse().unwrap()).nabla().memoize(p);
        let c3 = newton_product_c3(&c1, &c2).memoize(p);
        let e1 = newton_expand(&c1, order, p, p).map_err(|e| e.to_string())?;
        let e2 = newton_expand(&c2, order, p, p).map_err(|e| e.to_string())?;
        let e3 = newton_expand(&c3, order, p, p).map_err(|e| e.to_string())?;
        ensure(e1.cauchy_product(&e2) == e3, || format!("Cauchy product: {x}, {y}"))?;
    }
    Ok(format!("{checks} exact identities, {} expansions to order {order} mod q^{p}", cauchy_pairs.len()))
}

fn relation_cases() -> Vec<(Word, Word, usize, RelationVariant)> {
    let mut out = Vec::new();
    for (u, v) in pairs(5) {
        for n in 1..=3 {
            for variant in [RelationVariant::Modified, RelationVariant::QDeformed] {
                out.push((u.clone(), v.clone(), n, variant));
            }
        }
    }
    out
}

fn criterion_7() -> Outcome {
    let p = 30;
    let mut ctx = ZetaContext::new(p);
    let cases = relation_cases();
    for (u, v, n, variant) in &cases {
        let (x, y) = (sum(u), sum(v));
        let residual = match variant {
            RelationVariant::Modified => ctx.kawashima_modified(&x, &y, *n),
            RelationVariant::QDeformed => ctx.kawashima_q(&x, &y, *n),
        }
        .map_err(|e| format!("{u}, {v}, n = {n}: {e}"))?;
        ensure(residual.valuation() == Valuation::AtLeast(p), || {
            format!("{variant:?} {u}, {v}, n = {n}: valuation {}", residual.valuation())
        })?;
    }
    Ok(format!("{} residuals vanish mod q^{p}; both paths agree", cases.len()))
}

fn flagship_arguments() -> (WordSum, WordSum, WordSum) {
    let linear: WordSum = "[3] - [2,1]".parse().unwrap();
    let two: WordSum = "[2]".parse().unwrap();
    let rhs: WordSum = "2[2,1,1] + [2,2] + h[2,1] - [3,1]".parse().unwrap();
    (linear, two, rhs)
}

fn criterion_8() -> Outcome {
    let (linear, two, rhs) = flagship_arguments();
    let start = Instant::now();
    let r = ZetaContext::new(40).zeta(&linear).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    ensure(r.valuation() == Valuation::AtLeast(40), || format!("valuation {}", r.valuation()))?;
    ensure(elapsed <= Duration::from_secs(1), || format!("took {elapsed:?}"))?;
    let mut ctx = ZetaContext::new(30);
    let z2 = ctx.zeta(&two).unwrap();
    let second = &(&z2 * &z2) - &ctx.zeta(&rhs).unwrap();
    ensure(second.valuation() == Valuation::AtLeast(30), || {
        format!("second-order valuation {}", second.valuation())
    })?;
    Ok(format!("linear instance in {:.3} s", elapsed.as_secs_f64()))
}

fn criterion_9() -> Outcome {
    let mut checks = 0;
    for u in words(5) {
        let x = sum(&u);
        ensure(set_hbar_zero(&d_q(&x)) == d(&set_hbar_zero(&x)), || format!("d_q: {u}"))?;
        checks += 1;
    }
    for (u, v) in pairs(5) {
        let (x, y) = (sum(&u), sum(&v));
        ensure(set_hbar_zero(&stuffle_minus(&x, &y)) == stuffle_bar(&x, &y), || format!("*-: {u}, {v}"))?;
        let lhs = set_hbar_zero(&circledast_q(&x, &y).unwrap());
        let rhs = circledast(&x, &y, CircledastVariant::PlusHbarZero).unwrap();
        ensure(lhs == rhs, || format!("circledast: {u}, {v}"))?;
        checks += 2;
    }
    Ok(format!("{checks} exact identities"))
}

fn criterion_10() -> Outcome {
    let mut checks = 0;
    for u in words(5) {
        let x = sum(&u);
        ensure(psi_composite(&x).unwrap() == psi(&x), || format!("psi routes: {u}"))?;
        checks += 1;
    }
    for i in 1..=4u32 {
        for u in words_with_empty(4) {
            let w = sum(&u);
            let inner = psi_composite(&w).unwrap();
            let lhs = psi_composite(&w.prepend(i)).unwrap();
            ensure(lhs == xi(i).concat(&inner), || format!("xi recursion: i = {i}, {u}"))?;
            if i == 1 {
                ensure(lhs == inner.prepend(1), || format!("z_1 prefix: {u}"))?;
            }
            checks += 1;
        }
    }
    for (u, v) in pairs(5) {
        let (x, y) = (sum(&u), sum(&v));
        ensure(stuffle_minus(&psi(&x), &psi(&y)) == psi(&stuffle_bar(&x, &y)), || {
            format!("intertwining: {u}, {v}")
        })?;
        checks += 1;
    }
    for i in 1..8u32 {
        for j in 1..=(8 - i) {
            let lhs = act(Action::CircMinus, &xi(i), &xi(j)).unwrap();
            ensure(lhs == -xi(i + j), || format!("xi_{i} o- xi_{j}"))?;
            checks += 1;
        }
    }
    for i in 1..=7u32 {
        let x = xi(i);
        let mut lhs = circ(1, &x);
        lhs.add_scaled(&circ(0, &x), &HbarPolynomial::from_integers([0, -1]));
        ensure(lhs == xi(i + 1), || format!("(z_1 - h z_0) o xi_{i}"))?;
        checks += 1;
    }
    Ok(format!("{checks} exact identities"))
}

fn criterion_11() -> Outcome {
    let mut args: HashSet<WordSum> = HashSet::new();
    for (u, v, n, variant) in relation_cases() {
        let rel = Relation::new(&u, &v, n, variant).map_err(|e| e.to_string())?;
        args.extend(rel.zeta_arguments().cloned());
    }
    let star: Vec<WordSum> = star_zeta_words().iter().map(sum).collect();
    args.extend(star.iter().map(d_q));
    let check = |args: &[&WordSum], stars: &[&WordSum], p: usize| -> Result<usize, String> {
        let (mut lo, mut hi) = (ZetaContext::new(p), ZetaContext::new(p + 10));
        for w in args {
            let a: TruncatedSeries = lo.zeta(w).map_err(|e| e.to_string())?;
            let b = hi.zeta(w).map_err(|e| e.to_string())?.truncate(p);
            ensure(a == b, || format!("zeta({w}) at P = {p}"))?;
        }
        for w in stars {
            let a = lo.zeta_star(w).map_err(|e| e.to_string())?;
            let b = hi.zeta_star(w).map_err(|e| e.to_string())?.truncate(p);
            ensure(a == b, || format!("zeta-star({w}) at P = {p}"))?;
        }
        Ok(args.len() + stars.len())
    };
    let at_30 = check(&args.iter().collect::<Vec<_>>(), &star.iter().collect::<Vec<_>>(), 30)?;
    let (linear, two, rhs) = flagship_arguments();
    let at_40 = check(&[&linear], &[], 40)?;
    let extra = check(&[&two, &rhs], &[], 30)?;
    Ok(format!("{} values recomputed at P + 10", at_30 + at_40 + extra))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 11] = [
        ("duality of nabla_q(S_w) and s", criterion_1),
        ("product theorems for S and A", criterion_2),
        ("star reduction", criterion_3),
        ("s*a product, A-to-a shift, triangle identity", criterion_4),
        ("interpolation and key sum", criterion_5),
        ("Newton multiplication", criterion_6),
        ("quadratic relations at P = 30", criterion_7),
        ("flagship instances", criterion_8),
        ("hbar -> 0 degeneration", criterion_9),
        ("Psi machinery", criterion_10),
        ("truncation soundness at P + 10", criterion_11),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(run))
            .unwrap_or_else(|_| Err("panicked".to_string()));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS {:>2}  {name}: {detail} [{secs:.2} s]", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2}  {name}: {why} [{secs:.2} s]", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
