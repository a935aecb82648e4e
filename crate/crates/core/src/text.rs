//! A small parser for sums of products such as `3*x1^2*x2 - a1*x2^4 + a2`.
//!
//! The grammar is shared by every polynomial type in the crate; each caller
//! decides which identifiers it accepts.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// One parsed term: an integer coefficient and `(identifier, exponent)` factors.
pub(crate) type RawTerm = (BigInt, Vec<(String, u32)>);

pub(crate) fn parse_sum(input: &str) -> Result<Vec<RawTerm>> {
    let mut p = Parser { src: input.as_bytes(), pos: 0, input };
    let terms = p.sum()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(terms)
}

/// Splits `a12` into `("a", 12)`.
pub(crate) fn indexed_name(ident: &str) -> Option<(&str, usize)> {
    let split = ident.find(|c: char| c.is_ascii_digit())?;
    let (name, index) = ident.split_at(split);
    if name.is_empty() {
        return None;
    }
    index.parse().ok().map(|i| (name, i))
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    input: &'a str,
}

impl Parser<'_> {
    fn error(&self, what: &str) -> Error {
        Error::Parse(format!("{what} at offset {} in {:?}", self.pos, self.input))
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

    fn sum(&mut self) -> Result<Vec<RawTerm>> {
        let mut out = Vec::new();
        let mut negate = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                true
            }
            Some(b'+') => {
                self.pos += 1;
                false
            }
            None => return Err(self.error("empty expression")),
            _ => false,
        };
        loop {
            let (mut c, factors) = self.product()?;
            if negate {
                c = -c;
            }
            out.push((c, factors));
            match self.peek() {
                Some(b'+') => negate = false,
                Some(b'-') => negate = true,
                _ => break,
            }
            self.pos += 1;
        }
        Ok(out)
    }

    fn product(&mut self) -> Result<RawTerm> {
        let mut coeff = BigInt::one();
        let mut factors = Vec::new();
        loop {
            match self.peek() {
                Some(c) if c.is_ascii_digit() => {
                    let n = self.integer()?;
                    coeff *= n;
                }
                Some(c) if c.is_ascii_alphabetic() => {
                    let start = self.pos;
                    while self.pos < self.src.len() && self.src[self.pos].is_ascii_alphanumeric() {
                        self.pos += 1;
                    }
                    let ident = self.input[start..self.pos].to_string();
                    let exp = if self.peek() == Some(b'^') {
                        self.pos += 1;
                        self.skip_ws();
                        let e = self.integer()?;
                        u32::try_from(e).map_err(|_| self.error("exponent out of range"))?
                    } else {
                        1
                    };
                    factors.push((ident, exp));
                }
                _ => return Err(self.error("expected a number or an identifier")),
            }
            if self.peek() == Some(b'*') {
                self.pos += 1;
            } else {
                break;
            }
        }
        Ok((coeff, factors))
    }

    fn integer(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected digits"));
        }
        let digits = &self.input[start..self.pos];
        let value: BigInt = digits.parse().map_err(|_| self.error("bad integer"))?;
        debug_assert!(!value.is_zero() || digits.chars().all(|c| c == '0'));
        Ok(value)
    }
}

/// Appends ` + body` / ` - body` (or a leading `body` / `-body`) to `out`.
pub(crate) fn push_signed(out: &mut String, negative: bool, body: &str) {
    match (out.is_empty(), negative) {
        (true, false) => {}
        (true, true) => out.push('-'),
        (false, false) => out.push_str(" + "),
        (false, true) => out.push_str(" - "),
    }
    out.push_str(body);
}
