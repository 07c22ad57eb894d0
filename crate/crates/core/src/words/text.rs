//! Text syntax: words as `[3,1]` (`[]` for the empty word) and word sums as
//! `2[1,1] - [2] + h[1]` or `(1 - h)[2]`, with `h` standing for `ħ`.
//! Printing and parsing round-trip exactly.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{Word, WordSum};
use crate::scalar::{HbarPolynomial, Rational};
use crate::{Error, Result};

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, k) in self.letters().iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{k}")?;
        }
        f.write_str("]")
    }
}

impl fmt::Display for WordSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (w, c)) in self.terms().enumerate() {
            let (negative, body) = match c.as_monomial() {
                Some((a, k)) => {
                    let mag = a.abs();
                    let mut s = if mag.is_one() && k > 0 || mag.is_one() && k == 0 {
                        String::new()
                    } else {
                        mag.to_string()
                    };
                    if k == 1 {
                        s.push('h');
                    } else if k > 1 {
                        s.push_str(&format!("h^{k}"));
                    }
                    (a.is_negative(), s)
                }
                None => (false, format!("({c})")),
            };
            match (i, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            write!(f, "{body}{w}")?;
        }
        Ok(())
    }
}

struct Parser<'a> {
    chars: Vec<char>,
    pos: usize,
    _src: &'a str,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Self {
        Self { chars: src.chars().collect(), pos: 0, _src: src }
    }

    fn err<T>(&self, msg: &str) -> Result<T> {
        Err(Error::Parse { pos: self.pos, msg: msg.to_string() })
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn at_end(&mut self) -> bool {
        self.skip_ws();
        self.pos == self.chars.len()
    }

    fn digits(&mut self) -> Option<BigInt> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return None;
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        s.parse().ok()
    }

    fn number(&mut self) -> Result<Option<Rational>> {
        let Some(n) = self.digits() else { return Ok(None) };
        if self.eat('/') {
            let Some(d) = self.digits() else { return self.err("expected denominator") };
            if d.is_zero() {
                return self.err("zero denominator");
            }
            return Ok(Some(Rational::new(n, d)));
        }
        Ok(Some(Rational::from_integer(n)))
    }

    fn hbar_power(&mut self) -> Result<Option<usize>> {
        if !(self.eat('h') || self.eat('ħ')) {
            return Ok(None);
        }
        if self.eat('^') {
            let Some(e) = self.digits() else { return self.err("expected exponent") };
            let e: usize = match e.try_into() {
                Ok(e) => e,
                Err(_) => return self.err("exponent too large"),
            };
            return Ok(Some(e));
        }
        Ok(Some(1))
    }

    // number? ('h' ('^' digits)?)?, at least one part when `required`.
    fn monomial(&mut self, required: bool) -> Result<HbarPolynomial> {
        let c = self.number()?;
        let k = self.hbar_power()?;
        if required && c.is_none() && k.is_none() {
            return self.err("expected coefficient");
        }
        Ok(HbarPolynomial::monomial(c.unwrap_or_else(Rational::one), k.unwrap_or(0)))
    }

    fn sign(&mut self) -> Option<bool> {
        if self.eat('+') {
            Some(false)
        } else if self.eat('-') || self.eat('−') {
            Some(true)
        } else {
            None
        }
    }

    fn hbar_poly(&mut self) -> Result<HbarPolynomial> {
        self.skip_ws();
        let negative = self.sign() == Some(true);
        self.skip_ws();
        let mut acc = self.monomial(true)?;
        if negative {
            acc = -acc;
        }
        loop {
            self.skip_ws();
            let Some(neg) = self.sign() else { break };
            self.skip_ws();
            let m = self.monomial(true)?;
            acc = if neg { acc - m } else { acc + m };
        }
        Ok(acc)
    }

    fn word(&mut self) -> Result<Word> {
        self.skip_ws();
        if !self.eat('[') {
            return self.err("expected '['");
        }
        let mut letters = Vec::new();
        self.skip_ws();
        if !self.eat(']') {
            loop {
                self.skip_ws();
                let Some(k) = self.digits() else { return self.err("expected letter") };
                let k: u32 = match k.try_into() {
                    Ok(k) if k >= 1 => k,
                    _ => return self.err("letters must be positive integers"),
                };
                letters.push(k);
                self.skip_ws();
                if self.eat(']') {
                    break;
                }
                if !self.eat(',') {
                    return self.err("expected ',' or ']'");
                }
            }
        }
        Ok(Word::from_vec_unchecked(letters))
    }

    fn term(&mut self) -> Result<(Word, HbarPolynomial)> {
        self.skip_ws();
        let c = if self.eat('(') {
            let c = self.hbar_poly()?;
            self.skip_ws();
            if !self.eat(')') {
                return self.err("expected ')'");
            }
            c
        } else {
            self.monomial(false)?
        };
        self.skip_ws();
        let _ = self.eat('*') || self.eat('·');
        let w = self.word()?;
        Ok((w, c))
    }

    fn word_sum(&mut self) -> Result<WordSum> {
        self.skip_ws();
        if self.peek() == Some('0') && {
            let save = self.pos;
            self.pos += 1;
            let end = self.at_end();
            self.pos = save;
            end
        } {
            return Ok(WordSum::zero());
        }
        let mut out = WordSum::zero();
        let mut first = true;
        while !self.at_end() {
            let negative = match self.sign() {
                Some(neg) => neg,
                None if first => false,
                None => return self.err("expected '+' or '-'"),
            };
            first = false;
            let (w, c) = self.term()?;
            out.add_term(w, if negative { -c } else { c });
        }
        if first {
            return self.err("empty input");
        }
        Ok(out)
    }
}

impl FromStr for Word {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let mut p = Parser::new(s);
        let w = p.word()?;
        if !p.at_end() {
            return p.err("trailing input");
        }
        Ok(w)
    }
}

impl FromStr for WordSum {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Parser::new(s).word_sum()
    }
}

#[cfg(test)]
pub(crate) fn ws(s: &str) -> WordSum {
    s.parse().unwrap_or_else(|e| panic!("bad word sum {s:?}: {e}"))
}
