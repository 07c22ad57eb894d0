//! Truncated q-zeta values and the quadratic relations among them.
//!
//! `ζ_q(z_{k_1}⋯z_{k_r}) = Σ_{m_1 > ⋯ > m_r > 0} ∏ q^{(k_i-1) m_i} / [m_i]^{k_i}`
//! for admissible words (`k_1 ≥ 2`), extended linearly with `ħ ↦ 1 - q`;
//! `ζ★_q` uses weak inequalities. Both are the limits of `A_w(n)` and
//! `A★_w(n)`; the `m_1` term has valuation at least `m_1`, so modulo `q^P`
//! the outer index stops at `P - 1`.

use alloc::vec::Vec;

use crate::harmonic::{SeriesTables, SumKind};
use crate::scalar::{TruncatedSeries, Valuation};
use crate::words::{
    circ, circledast_q, d, d_q, phi, psi, stuffle_bar, stuffle_minus, Word, WordSum,
};
use crate::{Error, Result};

/// A precision together with the series tables shared by every value
/// computed at that precision. Not shared between threads.
#[derive(Clone, Debug)]
pub struct ZetaContext {
    tables: SeriesTables,
}

fn check_admissible(w: &WordSum) -> Result<()> {
    match w.words().find(|u| !u.is_admissible()) {
        Some(u) => Err(Error::NonAdmissible { word: u.clone() }),
        None => Ok(()),
    }
}

fn z1_power(m: usize) -> WordSum {
    WordSum::from_word(Word::z1_power(m))
}

impl ZetaContext {
    pub fn new(precision: usize) -> Self {
        assert!(precision >= 1, "precision must be positive");
        Self { tables: SeriesTables::new(precision) }
    }

    pub fn precision(&self) -> usize {
        self.tables.precision()
    }

    pub fn tables(&mut self) -> &mut SeriesTables {
        &mut self.tables
    }

    fn limit(&mut self, kind: SumKind, w: &WordSum) -> Result<TruncatedSeries> {
        check_admissible(w)?;
        let p = self.precision();
        Ok(self.tables.value(kind, w, p - 1))
    }

    /// `ζ_q(w) mod q^P`.
    pub fn zeta(&mut self, w: &WordSum) -> Result<TruncatedSeries> {
        self.limit(SumKind::A, w)
    }

    /// `ζ★_q(w) mod q^P`.
    pub fn zeta_star(&mut self, w: &WordSum) -> Result<TruncatedSeries> {
        self.limit(SumKind::AStar, w)
    }

    /// `-ζ_q(d_q(φ(w)) ⊛_q z_1^m)`, the coefficient of `X^m` in the
    /// expansion of `Σ_n ∇_q(S_w)(n) B_n(z)` at `z = 1`.
    pub fn f_expansion_coeff(&mut self, w: &WordSum, m: usize) -> Result<TruncatedSeries> {
        let arg = circledast_q(&d_q(&phi(w)?), &z1_power(m))?;
        Ok(-self.zeta(&arg)?)
    }

    /// The same coefficient as the direct sum `-Σ_{n ≥ 1} s_{φ(w)}(n-1) a_{z_1^m}(n-1)`.
    pub fn f_expansion_direct(&mut self, w: &WordSum, m: usize) -> Result<TruncatedSeries> {
        let dual = phi(w)?;
        let power = z1_power(m);
        let p = self.precision();
        let mut acc = TruncatedSeries::zero(p);
        for n in 1..p {
            let s = self.tables.s_value(&dual, n - 1)?;
            let a = self.tables.a_value(&power, n - 1)?;
            acc = &acc - &(&s * &a);
        }
        Ok(acc)
    }

    /// `ζ_q` of the linear argument plus `Σ ζ_q(left) ζ_q(right)`.
    pub fn residual(&mut self, relation: &Relation) -> Result<TruncatedSeries> {
        self.residual_of(&relation.linear_arg, &relation.quadratic_terms)
    }

    /// Left-hand side of the q-deformed relation for `w_1, w_2`, order `n`.
    pub fn kawashima_q(&mut self, w1: &WordSum, w2: &WordSum, n: usize) -> Result<TruncatedSeries> {
        let (linear_arg, quadratic_terms) = arguments(w1, w2, n, RelationVariant::QDeformed)?;
        self.residual_of(&linear_arg, &quadratic_terms)
    }

    /// Left-hand side of the modified relation. Also evaluates the
    /// q-deformed relation at `Ψ(w_1), Ψ(w_2)`, which must agree
    /// coefficient by coefficient.
    pub fn kawashima_modified(
        &mut self,
        w1: &WordSum,
        w2: &WordSum,
        n: usize,
    ) -> Result<TruncatedSeries> {
        let (linear_arg, quadratic_terms) = arguments(w1, w2, n, RelationVariant::Modified)?;
        let direct = self.residual_of(&linear_arg, &quadratic_terms)?;
        let via_psi = self.kawashima_q(&psi(w1), &psi(w2), n)?;
        if direct != via_psi {
            return Err(Error::PathMismatch { what: "modified relation vs. q-deformed relation at Psi" });
        }
        Ok(direct)
    }

    fn residual_of(&mut self, linear: &WordSum, quadratic: &[QuadraticTerm]) -> Result<TruncatedSeries> {
        let mut acc = self.zeta(linear)?;
        for t in quadratic {
            acc = &acc + &(&self.zeta(&t.left)? * &self.zeta(&t.right)?);
        }
        Ok(acc)
    }
}

/// `ζ_q(w) mod q^P` with a fresh context.
pub fn zeta_q(w: &WordSum, precision: usize) -> Result<TruncatedSeries> {
    ZetaContext::new(precision).zeta(w)
}

/// `ζ★_q(w) mod q^P` with a fresh context.
pub fn zeta_star_q(w: &WordSum, precision: usize) -> Result<TruncatedSeries> {
    ZetaContext::new(precision).zeta_star(w)
}

/// Which family a [`Relation`] belongs to.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RelationVariant {
    /// Arguments built from `⊼` and `d`.
    #[default]
    Modified,
    /// Arguments built from `*₋` and `d_q`.
    QDeformed,
}

/// One product `ζ_q(left) ζ_q(right)` with `left` of order `k` and `right`
/// of order `l`, `k + l = n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadraticTerm {
    pub k: usize,
    pub l: usize,
    pub left: WordSum,
    pub right: WordSum,
}

/// `ζ_q(linear_arg) + Σ_{k+l=n} ζ_q(left) ζ_q(right) = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    pub w1: Word,
    pub w2: Word,
    pub n: usize,
    pub variant: RelationVariant,
    pub linear_arg: WordSum,
    pub quadratic_terms: Vec<QuadraticTerm>,
}

impl Relation {
    pub fn new(w1: &Word, w2: &Word, n: usize, variant: RelationVariant) -> Result<Self> {
        let (x, y) = (WordSum::from_word(w1.clone()), WordSum::from_word(w2.clone()));
        let (linear_arg, quadratic_terms) = arguments(&x, &y, n, variant)?;
        Ok(Self { w1: w1.clone(), w2: w2.clone(), n, variant, linear_arg, quadratic_terms })
    }

    /// Every word sum fed to `ζ_q`.
    pub fn zeta_arguments(&self) -> impl Iterator<Item = &WordSum> + '_ {
        core::iter::once(&self.linear_arg)
            .chain(self.quadratic_terms.iter().flat_map(|t| [&t.left, &t.right]))
    }
}

fn arguments(
    w1: &WordSum,
    w2: &WordSum,
    n: usize,
    variant: RelationVariant,
) -> Result<(WordSum, Vec<QuadraticTerm>)> {
    if n == 0 {
        return Err(Error::InvalidArgument("relation order n must be at least 1"));
    }
    let (product, lift): (WordSum, fn(&WordSum) -> WordSum) = match variant {
        RelationVariant::QDeformed => (stuffle_minus(w1, w2), d_q),
        RelationVariant::Modified => (stuffle_bar(w1, w2), d),
    };
    let linear = circledast_q(&lift(&phi(&product)?), &z1_power(n))?;
    let (l1, l2) = (lift(&phi(w1)?), lift(&phi(w2)?));
    let mut terms = Vec::new();
    for k in 1..n {
        let l = n - k;
        terms.push(QuadraticTerm {
            k,
            l,
            left: circledast_q(&l1, &z1_power(k))?,
            right: circledast_q(&l2, &z1_power(l))?,
        });
    }
    // `⊛_q z_1^m` puts a letter ≥ 2 in front of every word.
    assert!(linear.is_admissible(), "generated non-admissible argument {linear}");
    for t in &terms {
        assert!(t.left.is_admissible() && t.right.is_admissible(), "generated non-admissible argument");
    }
    Ok((linear, terms))
}

/// `z_1 ∘ d(φ(w_1 ⊼ w_2))`, whose `ζ_q` vanishes (the `n = 1` relation).
pub fn linear_relation_arg(w1: &WordSum, w2: &WordSum) -> Result<WordSum> {
    Ok(circ(1, &d(&phi(&stuffle_bar(w1, w2))?)))
}

/// `z_1 ∘ φ(w_1 *₋ w_2)`, whose `ζ★_q` vanishes.
pub fn star_relation_arg(w1: &WordSum, w2: &WordSum) -> Result<WordSum> {
    Ok(circ(1, &phi(&stuffle_minus(w1, w2))?))
}

/// All `(w_1, w_2, n)` with `weight(w_1) + weight(w_2) ≤ max_total_weight`,
/// both words non-empty and `1 ≤ n ≤ max_n`, ordered by total weight, total
/// depth, then `w_1`, `w_2`, `n`.
pub fn relation_instances(max_total_weight: u32, max_n: usize) -> Vec<(Word, Word, usize)> {
    let words = Word::all_up_to_weight(max_total_weight.saturating_sub(1));
    let mut out = Vec::new();
    for u in &words {
        for v in &words {
            if u.weight() + v.weight() > u64::from(max_total_weight) {
                continue;
            }
            for n in 1..=max_n {
                out.push((u.clone(), v.clone(), n));
            }
        }
    }
    out.sort_by(|(a, b, n), (c, e, m)| {
        let key = |x: &Word, y: &Word| (x.weight() + y.weight(), x.depth() + y.depth());
        key(a, b).cmp(&key(c, e)).then_with(|| (a, b, n).cmp(&(c, e, m)))
    });
    out
}

/// A relation with the valuation of its truncated residual, or the error
/// that stopped its evaluation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationReport {
    pub relation: Relation,
    pub precision: usize,
    pub outcome: Result<Valuation>,
}

impl RelationReport {
    /// The residual vanishes through `q^{P-1}`.
    pub fn holds(&self) -> bool {
        matches!(self.outcome, Ok(v) if v.is_at_least(self.precision))
    }
}

/// Builds and evaluates one relation. For the modified variant the residual
/// is computed along both paths, and disagreement is reported as an error.
pub fn evaluate_relation(
    ctx: &mut ZetaContext,
    w1: &Word,
    w2: &Word,
    n: usize,
    variant: RelationVariant,
) -> Result<RelationReport> {
    let relation = Relation::new(w1, w2, n, variant)?;
    let (x, y) = (WordSum::from_word(w1.clone()), WordSum::from_word(w2.clone()));
    let outcome = match variant {
        RelationVariant::Modified => ctx.kawashima_modified(&x, &y, n),
        RelationVariant::QDeformed => ctx.residual(&relation),
    }
    .map(|r| r.valuation());
    Ok(RelationReport { relation, precision: ctx.precision(), outcome })
}

/// Serial enumeration over [`relation_instances`].
pub fn enumerate_relations(
    max_total_weight: u32,
    max_n: usize,
    precision: usize,
    variant: RelationVariant,
) -> Vec<RelationReport> {
    let mut ctx = ZetaContext::new(precision);
    relation_instances(max_total_weight, max_n)
        .iter()
        .map(|(u, v, n)| {
            evaluate_relation(&mut ctx, u, v, *n, variant).expect("instances are well formed")
        })
        .collect()
}
