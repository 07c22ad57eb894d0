use alloc::string::String;
use core::fmt;

use crate::words::Word;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq)]
#[non_exhaustive]
pub enum Error {
    /// `q_binomial(n, k)` with `k > n`.
    OutOfRange { n: usize, k: usize },
    /// Series expansion of a rational function whose denominator vanishes at `q = 0`.
    NotRegular,
    /// Division by the zero rational function or inversion of a series with zero constant term.
    DivisionByZero,
    /// An operation defined only on `𝔥¹_{>0}` received a constant term.
    ConstantTerm { op: &'static str },
    /// An operand that must lie in `𝔷` (depth-one words only) did not.
    NotDepthOne { op: &'static str },
    /// A zeta argument contains a word with leading letter 1.
    NonAdmissible { word: Word },
    /// `v(c(n)) >= n` failed for a computed Newton coefficient.
    ConvergenceViolated { n: usize, valuation: usize },
    /// Two computation routes that must agree did not.
    PathMismatch { what: &'static str },
    Parse { pos: usize, msg: String },
    InvalidArgument(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::OutOfRange { n, k } => write!(f, "out of range: k = {k} exceeds n = {n}"),
            Self::NotRegular => write!(f, "not q-adically regular"),
            Self::DivisionByZero => write!(f, "division by zero"),
            Self::ConstantTerm { op } => write!(f, "{op} requires non-constant argument"),
            Self::NotDepthOne { op } => write!(f, "{op} requires an element of depth one"),
            Self::NonAdmissible { word } => write!(f, "non-admissible argument {word}"),
            Self::ConvergenceViolated { n, valuation } => write!(
                f,
                "convergence condition violated at n = {n} (valuation {valuation})"
            ),
            Self::PathMismatch { what } => write!(f, "computation paths disagree: {what}"),
            Self::Parse { pos, msg } => write!(f, "parse error at {pos}: {msg}"),
            Self::InvalidArgument(msg) => write!(f, "invalid argument: {msg}"),
        }
    }
}

impl core::error::Error for Error {}
