//! Parser for the plain-text polynomial syntax.
//!
//! ```text
//! expr    := ["+"|"-"] term (("+"|"-") term)*
//! term    := power (("*" power) | ("/" divisor))*
//! power   := atom ["^" INT]
//! atom    := INT | "x" | "y" | NAME | "(" expr ")"
//! divisor := INT | "y" ["^" INT]
//! ```
//!
//! `NAME` is a single lowercase letter bound to an integer by the caller
//! (for example `k`). Spaces are ignored.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::poly::LaurentPoly;
use crate::error::{Error, Result};

/// Parses `src` with no parameter bindings.
pub fn parse_poly(src: &str) -> Result<LaurentPoly> {
    parse_poly_with(src, &[])
}

/// Parses `src`, substituting integers for the named single-letter
/// parameters.
pub fn parse_poly_with(src: &str, bindings: &[(char, i64)]) -> Result<LaurentPoly> {
    let mut p = Parser {
        src: src.as_bytes(),
        pos: 0,
        bindings,
    };
    let out = p.expr()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(Error::parse(p.pos, "unexpected trailing input"));
    }
    Ok(out)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    bindings: &'a [(char, i64)],
}

impl Parser<'_> {
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

    fn int(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(Error::parse(start, "expected an integer"));
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(text.parse().expect("digits parse"))
    }

    fn small_int(&mut self) -> Result<u32> {
        let at = self.pos;
        let v = self.int()?;
        u32::try_from(v).map_err(|_| Error::parse(at, "exponent too large"))
    }

    fn expr(&mut self) -> Result<LaurentPoly> {
        let mut acc = if self.eat(b'-') {
            -self.term()?
        } else {
            self.eat(b'+');
            self.term()?
        };
        loop {
            if self.eat(b'+') {
                acc += self.term()?;
            } else if self.eat(b'-') {
                acc -= &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<LaurentPoly> {
        let mut acc = self.power()?;
        loop {
            if self.eat(b'*') {
                acc = &acc * &self.power()?;
            } else if self.eat(b'/') {
                match self.peek() {
                    Some(b'y') => {
                        self.pos += 1;
                        let e = if self.eat(b'^') { self.small_int()? } else { 1 };
                        let e = i32::try_from(e)
                            .map_err(|_| Error::parse(self.pos, "exponent too large"))?;
                        acc = acc.shift(0, -e);
                    }
                    Some(c) if c.is_ascii_digit() => {
                        let at = self.pos;
                        let d = self.int()?;
                        if d.is_zero() {
                            return Err(Error::parse(at, "division by zero"));
                        }
                        acc = acc.scale(&BigRational::new(1.into(), d));
                    }
                    _ => {
                        return Err(Error::parse(
                            self.pos,
                            "only integers and powers of y may divide",
                        ))
                    }
                }
            } else {
                return Ok(acc);
            }
        }
    }

    fn power(&mut self) -> Result<LaurentPoly> {
        let base = self.atom()?;
        if self.eat(b'^') {
            let e = self.small_int()?;
            Ok(base.pow(e))
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<LaurentPoly> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(b')') {
                    return Err(Error::parse(self.pos, "expected ')'"));
                }
                Ok(inner)
            }
            Some(b'x') => {
                self.pos += 1;
                Ok(LaurentPoly::x())
            }
            Some(b'y') => {
                self.pos += 1;
                Ok(LaurentPoly::y())
            }
            Some(c) if c.is_ascii_digit() => Ok(LaurentPoly::from(self.int()?)),
            Some(c) if c.is_ascii_lowercase() => {
                let name = c as char;
                match self.bindings.iter().find(|(n, _)| *n == name) {
                    Some(&(_, v)) => {
                        self.pos += 1;
                        Ok(LaurentPoly::from(v))
                    }
                    None => Err(Error::parse(self.pos, format!("unbound name '{name}'"))),
                }
            }
            Some(_) => Err(Error::parse(self.pos, "unexpected character")),
            None => Err(Error::parse(self.pos, "unexpected end of input")),
        }
    }
}
