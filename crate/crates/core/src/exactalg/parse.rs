//! Recursive-descent parser for the polynomial text format.
//!
//! Grammar (whitespace ignored):
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '/') unary)*
//! unary  := '-' unary | power
//! power  := atom ('^' '-'? digits)?
//! atom   := digits | 'q' | 'x' digits | 'x' | '(' expr ')'
//! ```
//!
//! A bare `x` means `x1` and is accepted only for one-variable input.
//! Division is allowed only by a single term.

use alloc::format;
use alloc::string::ToString;
use core::str::FromStr;

use num_bigint::BigInt;

use super::laurent::LaurentPoly;
use super::ratfunc::RatFunc;
use crate::error::{Error, Result};
use crate::field::Rational;

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    nvars: usize,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, msg: &str) -> Result<T> {
        Err(Error::Parse(format!("{msg} at byte {}", self.pos)))
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

    fn digits(&mut self) -> Option<&'a str> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        (self.pos > start).then(|| core::str::from_utf8(&self.src[start..self.pos]).unwrap())
    }

    fn expr(&mut self) -> Result<LaurentPoly> {
        let mut acc = self.term()?;
        loop {
            if self.eat(b'+') {
                acc = acc.add(&self.term()?);
            } else if self.eat(b'-') {
                acc = acc.sub(&self.term()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<LaurentPoly> {
        let mut acc = self.unary()?;
        loop {
            if self.eat(b'*') {
                acc = acc.mul(&self.unary()?);
            } else if self.eat(b'/') {
                let d = self.unary()?;
                match d.monomial_inverse() {
                    Some(inv) => acc = acc.mul(&inv),
                    None => return self.err("division by a non-monomial or zero"),
                }
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<LaurentPoly> {
        if self.eat(b'-') {
            Ok(self.unary()?.neg())
        } else {
            self.power()
        }
    }

    fn power(&mut self) -> Result<LaurentPoly> {
        let base = self.atom()?;
        if !self.eat(b'^') {
            return Ok(base);
        }
        let negative = self.eat(b'-');
        self.skip_ws();
        let Some(ds) = self.digits() else { return self.err("expected exponent") };
        let Ok(k) = ds.parse::<u32>() else { return self.err("exponent too large") };
        if !negative {
            return Ok(base.pow(k));
        }
        match base.monomial_inverse() {
            Some(inv) => Ok(inv.pow(k)),
            None => self.err("negative power of a non-monomial"),
        }
    }

    fn atom(&mut self) -> Result<LaurentPoly> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat(b')') {
                    return self.err("expected ')'");
                }
                Ok(e)
            }
            Some(b'q') => {
                self.pos += 1;
                Ok(LaurentPoly::constant(self.nvars, RatFunc::q()))
            }
            Some(b'x') => {
                self.pos += 1;
                let k = match self.digits() {
                    Some(ds) => ds.parse::<usize>().map_err(|_| Error::Parse("bad variable index".to_string()))?,
                    None if self.nvars == 1 => 1,
                    None => return self.err("bare 'x' needs a one-variable context"),
                };
                if k == 0 || k > self.nvars {
                    return self.err(&format!("variable x{k} outside 1..={}", self.nvars));
                }
                Ok(LaurentPoly::var(self.nvars, k, 1))
            }
            Some(c) if c.is_ascii_digit() => {
                let ds = self.digits().unwrap();
                let n: BigInt = ds.parse().map_err(|_| Error::Parse("bad integer".to_string()))?;
                Ok(LaurentPoly::constant(self.nvars, RatFunc::constant(Rational::from_integer(n))))
            }
            Some(c) => self.err(&format!("unexpected '{}'", c as char)),
            None => self.err("unexpected end of input"),
        }
    }
}

/// Parse a Laurent polynomial in `nvars` variables, e.g. `"(q-1)*x1*x2^-1 + q"`.
pub fn parse_laurent(s: &str, nvars: usize) -> Result<LaurentPoly> {
    let mut p = Parser { src: s.as_bytes(), pos: 0, nvars };
    let out = p.expr()?;
    if p.peek().is_some() {
        return p.err("trailing input");
    }
    Ok(out)
}

/// Parse a scalar such as `"(q^2-1)/(q+1)"`.
pub fn parse_ratfunc(s: &str) -> Result<RatFunc> {
    let f = parse_laurent(s, 0)?;
    Ok(f.coeff(&[]))
}

impl FromStr for RatFunc {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_ratfunc(s)
    }
}
