//! JSON documents. Coefficients are written as polynomials in `q`, with `ħ`
//! already replaced by `1 - q`.

use serde::Serialize;

use qmzv_core::scalar::hbar_eval;
use qmzv_core::{RelationReport, RelationVariant, TruncatedSeries, WordSum};

#[derive(Debug, Serialize, PartialEq, Eq)]
pub struct Term {
    pub word: String,
    pub coeff: String,
}

#[derive(Debug, Serialize, PartialEq, Eq)]
pub struct Quadratic {
    pub k: usize,
    pub l: usize,
    pub left: Vec<Term>,
    pub right: Vec<Term>,
}

#[derive(Debug, Serialize, PartialEq, Eq)]
pub struct RelationDoc {
    pub w1: String,
    pub w2: String,
    pub n: usize,
    pub variant: &'static str,
    pub linear_arg: Vec<Term>,
    pub quadratic_terms: Vec<Quadratic>,
    pub precision: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub residual_valuation: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

#[derive(Debug, Serialize, PartialEq, Eq)]
pub struct SeriesDoc {
    pub argument: String,
    pub star: bool,
    pub precision: usize,
    pub coefficients: Vec<String>,
    pub series: String,
}

pub fn variant_name(v: RelationVariant) -> &'static str {
    match v {
        RelationVariant::Modified => "modified",
        RelationVariant::QDeformed => "q-deformed",
    }
}

pub fn terms(w: &WordSum) -> Vec<Term> {
    w.terms().map(|(u, c)| Term { word: u.to_string(), coeff: hbar_eval(c).to_string() }).collect()
}

impl From<&RelationReport> for RelationDoc {
    fn from(r: &RelationReport) -> Self {
        let rel = &r.relation;
        let (residual_valuation, error) = match &r.outcome {
            Ok(v) => (Some(v.to_string()), None),
            Err(e) => (None, Some(e.to_string())),
        };
        Self {
            w1: rel.w1.to_string(),
            w2: rel.w2.to_string(),
            n: rel.n,
            variant: variant_name(rel.variant),
            linear_arg: terms(&rel.linear_arg),
            quadratic_terms: rel
                .quadratic_terms
                .iter()
                .map(|t| Quadratic { k: t.k, l: t.l, left: terms(&t.left), right: terms(&t.right) })
                .collect(),
            precision: r.precision,
            residual_valuation,
            error,
        }
    }
}

impl SeriesDoc {
    pub fn new(argument: &WordSum, star: bool, s: &TruncatedSeries) -> Self {
        Self {
            argument: argument.to_string(),
            star,
            precision: s.precision(),
            coefficients: s.coefficients().iter().map(ToString::to_string).collect(),
            series: s.to_string(),
        }
    }
}
