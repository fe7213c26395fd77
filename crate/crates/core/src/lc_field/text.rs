//! Text form of field elements: `3 - 2*eps^(1/2) + eps + 0.5*eps^(-1)`.
//!
//! Terms are written in ascending exponent order; the exponent-0 term is a
//! bare number and `ε` is spelled `eps`.

use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Zero};

use super::{FieldConfig, LcNumber, Rational, Term};
use crate::math;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("ParseError: invalid field literal at column {column}: {message}")]
pub struct ParseLcError {
    pub column: usize,
    pub message: &'static str,
}

fn write_exponent(f: &mut fmt::Formatter<'_>, exp: Rational) -> fmt::Result {
    if exp.is_one() {
        f.write_str("eps")
    } else if exp.is_integer() && *exp.numer() > 1 {
        write!(f, "eps^{}", exp.numer())
    } else if exp.is_integer() {
        write!(f, "eps^({})", exp.numer())
    } else {
        write!(f, "eps^({}/{})", exp.numer(), exp.denom())
    }
}

/// Shortest round-trip rendering, in exponent form for very small or very
/// large magnitudes.
pub(crate) struct Num(pub f64);

impl fmt::Display for Num {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let m = math::abs(self.0);
        if m != 0.0 && !(1e-5..1e16).contains(&m) {
            write!(f, "{:e}", self.0)
        } else {
            write!(f, "{}", self.0)
        }
    }
}

impl fmt::Display for LcNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, t) in self.terms.iter().enumerate() {
            let mag = math::abs(t.coef);
            if i == 0 {
                if t.coef < 0.0 {
                    f.write_str("-")?;
                }
            } else if t.coef < 0.0 {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            if t.exp.is_zero() {
                write!(f, "{}", Num(mag))?;
            } else {
                if mag != 1.0 {
                    write!(f, "{}*", Num(mag))?;
                }
                write_exponent(f, t.exp)?;
            }
        }
        Ok(())
    }
}

struct Cursor<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn err(&self, message: &'static str) -> ParseLcError {
        ParseLcError {
            column: self.pos + 1,
            message,
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn number(&mut self) -> Result<f64, ParseLcError> {
        self.skip_ws();
        let start = self.pos;
        let s = self.src;
        let mut i = self.pos;
        while i < s.len() && (s[i].is_ascii_digit() || s[i] == b'.') {
            i += 1;
        }
        if i == start {
            return Err(self.err("expected a number"));
        }
        if i < s.len() && (s[i] == b'e' || s[i] == b'E') {
            let mut j = i + 1;
            if j < s.len() && (s[j] == b'+' || s[j] == b'-') {
                j += 1;
            }
            let digits = j;
            while j < s.len() && s[j].is_ascii_digit() {
                j += 1;
            }
            if j > digits {
                i = j;
            }
        }
        let text = core::str::from_utf8(&s[start..i]).map_err(|_| self.err("invalid utf-8"))?;
        self.pos = i;
        text.parse::<f64>().map_err(|_| ParseLcError {
            column: start + 1,
            message: "malformed number",
        })
    }

    fn integer(&mut self) -> Result<i64, ParseLcError> {
        self.skip_ws();
        let neg = self.eat(b'-');
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected an integer"));
        }
        let text = core::str::from_utf8(&self.src[start..self.pos]).map_err(|_| self.err("invalid utf-8"))?;
        let v: i64 = text.parse().map_err(|_| ParseLcError {
            column: start + 1,
            message: "integer out of range",
        })?;
        Ok(if neg { -v } else { v })
    }

    fn keyword_eps(&mut self) -> bool {
        self.skip_ws();
        if self.src[self.pos..].starts_with(b"eps") {
            let after = self.src.get(self.pos + 3);
            if !matches!(after, Some(c) if c.is_ascii_alphanumeric() || *c == b'_') {
                self.pos += 3;
                return true;
            }
        }
        false
    }

    fn exponent(&mut self) -> Result<Rational, ParseLcError> {
        if !self.eat(b'^') {
            return Ok(Rational::one());
        }
        if self.eat(b'(') {
            let p = self.integer()?;
            let q = if self.eat(b'/') { self.integer()? } else { 1 };
            if q <= 0 {
                return Err(self.err("exponent denominator must be positive"));
            }
            if !self.eat(b')') {
                return Err(self.err("expected ')'"));
            }
            Ok(Rational::new(p, q))
        } else {
            Ok(Rational::from_integer(self.integer()?))
        }
    }

    fn term(&mut self, sign: f64) -> Result<Term, ParseLcError> {
        if self.keyword_eps() {
            return Ok(Term::new(self.exponent()?, sign));
        }
        let c = self.number()?;
        if self.eat(b'*') {
            if !self.keyword_eps() {
                return Err(self.err("expected 'eps'"));
            }
            return Ok(Term::new(self.exponent()?, sign * c));
        }
        if self.keyword_eps() {
            return Ok(Term::new(self.exponent()?, sign * c));
        }
        Ok(Term::new(Rational::zero(), sign * c))
    }
}

impl LcNumber {
    /// Parses the text form produced by `Display`.
    pub fn parse(src: &str, config: FieldConfig) -> Result<LcNumber, ParseLcError> {
        let mut cur = Cursor {
            src: src.as_bytes(),
            pos: 0,
        };
        let mut terms = Vec::new();
        let mut sign = if cur.eat(b'-') {
            -1.0
        } else {
            cur.eat(b'+');
            1.0
        };
        loop {
            terms.push(cur.term(sign)?);
            match cur.peek() {
                None => break,
                Some(b'+') => {
                    cur.pos += 1;
                    sign = 1.0;
                }
                Some(b'-') => {
                    cur.pos += 1;
                    sign = -1.0;
                }
                Some(_) => return Err(cur.err("unexpected character")),
            }
        }
        Ok(LcNumber::from_terms(terms, config))
    }
}
