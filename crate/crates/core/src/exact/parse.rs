//! Parser for rational expressions in one variable.
//!
//! Accepts the canonical output grammar and the looser forms that appear in
//! hand-written tables: `t^-3*(t^9 - 1)`, `2t^2`, `(t^6-1)/(t^3-1)`, `-t`.

use num_bigint::BigInt;
use num_rational::BigRational;

use super::laurent::LaurentPoly;
use super::ratfun::RationalFunction;
use crate::error::{Error, Result};

type Rf = RationalFunction<BigRational>;

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    var: u8,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse { pos: self.pos, msg: msg.into() })
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

    fn expr(&mut self) -> Result<Rf> {
        let mut acc = if self.eat(b'-') {
            -self.term()?
        } else {
            self.eat(b'+');
            self.term()?
        };
        loop {
            if self.eat(b'+') {
                acc = &acc + &self.term()?;
            } else if self.eat(b'-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Rf> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    acc = &acc * &self.unary()?;
                }
                Some(b'/') => {
                    self.pos += 1;
                    let d = self.unary()?;
                    acc = acc.try_div(&d)?;
                }
                Some(c) if c == self.var || c == b'(' || c.is_ascii_digit() => {
                    acc = &acc * &self.power()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<Rf> {
        if self.eat(b'-') {
            Ok(-self.unary()?)
        } else {
            self.power()
        }
    }

    fn power(&mut self) -> Result<Rf> {
        let base = self.atom()?;
        if !self.eat(b'^') {
            return Ok(base);
        }
        let neg = self.eat(b'-');
        let e = self.integer()?;
        let e: u32 = e.try_into().map_err(|_| Error::Parse { pos: self.pos, msg: "exponent too large".into() })?;
        let mut p = Rf::one();
        for _ in 0..e {
            p = &p * &base;
        }
        if neg {
            p.inv()
        } else {
            Ok(p)
        }
    }

    fn integer(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected integer");
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(s.parse().expect("digits parse"))
    }

    fn atom(&mut self) -> Result<Rf> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat(b')') {
                    return self.err("expected ')'");
                }
                Ok(e)
            }
            Some(c) if c == self.var => {
                self.pos += 1;
                Ok(Rf::from_laurent(LaurentPoly::t_pow(1)))
            }
            Some(c) if c.is_ascii_digit() => {
                let v = self.integer()?;
                Ok(Rf::from_laurent(LaurentPoly::constant(BigRational::from_integer(v))))
            }
            Some(c) => self.err(format!("unexpected '{}'", c as char)),
            None => self.err("unexpected end of input"),
        }
    }
}

/// Parses a rational expression in the variable `var`.
pub fn parse_ratfunc_in(s: &str, var: char) -> Result<Rf> {
    if !var.is_ascii_alphabetic() {
        return Err(Error::InvalidInput(format!("bad variable name {var:?}")));
    }
    let mut p = Parser { src: s.as_bytes(), pos: 0, var: var as u8 };
    let v = p.expr()?;
    if p.peek().is_some() {
        return p.err("trailing input");
    }
    Ok(v)
}

pub fn parse_ratfunc(s: &str) -> Result<Rf> {
    parse_ratfunc_in(s, 't')
}

/// Parses an expression that must simplify to a Laurent polynomial in `t`.
pub fn parse_laurent(s: &str) -> Result<LaurentPoly<BigRational>> {
    parse_ratfunc(s)?.try_to_laurent()
}
