//! The text grammar for elements and tensors.
//!
//! Atoms: `1`, `z<i>` (the Milnor generators), `xi<i>` (their antipodes,
//! expanded on parsing), `x[<n>]` (cells), `z[<s>]` (the regular-sequence
//! generators), `a[<k>,<s>]`, `Q[i1,...,ik](expr)` (operations, evaluated
//! right to left), `N[<m>]`, and — when a resolver is supplied — named
//! elements `X[<r>,<s>]`. Products use `*`, sums `+`, exponents `^`, and a
//! pure tensor is written `left | right`. Whitespace is ignored.
//!
//! Printing is canonical (generators sorted, terms sorted), so
//! `parse(print(e)) = e`, and printing a parsed canonical form is the
//! identity on text.

use crate::dyerlashof::{n_poly, q_apply};
use crate::f2poly::{GeneratorId, Poly, Tensor2};
use crate::steenrod::xi;
use crate::{Error, Result};

/// Resolves a named element `X[<family>,<s>]`.
pub type Resolver<'a> = dyn Fn(&str, u32) -> Result<Poly> + 'a;

/// JSON form of a monomial: a list of `[generator, exponent]` pairs, the
/// generators as strings of this grammar.
pub fn monomial_json(m: &crate::f2poly::Monomial) -> serde_json::Value {
    serde_json::Value::Array(
        m.factors()
            .map(|(g, e)| serde_json::json!([g.to_string(), e]))
            .collect(),
    )
}

/// JSON form of a polynomial: a list of monomials.
pub fn poly_json(p: &Poly) -> serde_json::Value {
    serde_json::Value::Array(p.terms().map(monomial_json).collect())
}

/// JSON form of a tensor: a list of `[left, right]` monomial pairs.
pub fn tensor2_json(t: &Tensor2) -> serde_json::Value {
    serde_json::Value::Array(
        t.terms()
            .map(|(l, r)| serde_json::json!([monomial_json(l), monomial_json(r)]))
            .collect(),
    )
}

/// Parses an element with no named-element resolver.
pub fn parse(text: &str) -> Result<Poly> {
    parse_with(text, None)
}

/// Parses an element, resolving `X[...]` atoms through `resolver`.
pub fn parse_with(text: &str, resolver: Option<&Resolver>) -> Result<Poly> {
    let mut p = Parser::new(text, resolver);
    let poly = p.poly()?;
    p.finish()?;
    Ok(poly)
}

/// Parses a sum of pure tensors `l | r`.
pub fn parse_tensor2(text: &str) -> Result<Tensor2> {
    parse_tensor2_with(text, None)
}

pub fn parse_tensor2_with(text: &str, resolver: Option<&Resolver>) -> Result<Tensor2> {
    let mut p = Parser::new(text, resolver);
    let t = p.tensor()?;
    p.finish()?;
    Ok(t)
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
    resolver: Option<&'a Resolver<'a>>,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str, resolver: Option<&'a Resolver<'a>>) -> Self {
        Parser {
            bytes: text.as_bytes(),
            pos: 0,
            resolver,
        }
    }

    fn error(&self, msg: impl Into<String>) -> Error {
        Error::Syntax {
            offset: self.pos,
            msg: msg.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(format!("expected '{}'", c as char)))
        }
    }

    fn finish(&mut self) -> Result<()> {
        self.skip_ws();
        if self.pos < self.bytes.len() {
            Err(self.error("unexpected trailing input"))
        } else {
            Ok(())
        }
    }

    fn number_u32(&mut self) -> Result<u32> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected a number"));
        }
        std::str::from_utf8(&self.bytes[start..self.pos])
            .unwrap()
            .parse()
            .map_err(|_| self.error("number out of range"))
    }

    fn number_i64(&mut self) -> Result<i64> {
        self.skip_ws();
        let neg = self.eat(b'-');
        let v = self.number_u32()? as i64;
        Ok(if neg { -v } else { v })
    }

    fn tensor(&mut self) -> Result<Tensor2> {
        if self.peek() == Some(b'0') {
            self.pos += 1;
            return Ok(Tensor2::zero());
        }
        let mut out = Tensor2::zero();
        loop {
            let left = self.term()?;
            self.expect(b'|')?;
            let right = self.term()?;
            out.add_assign(&Tensor2::of(&left, &right));
            if !self.eat(b'+') {
                break;
            }
        }
        Ok(out)
    }

    fn poly(&mut self) -> Result<Poly> {
        let mut out = self.term()?;
        while self.eat(b'+') {
            out.add_assign(&self.term()?);
        }
        Ok(out)
    }

    fn term(&mut self) -> Result<Poly> {
        let mut out = self.atom_pow()?;
        while self.eat(b'*') {
            out = out.mul(&self.atom_pow()?);
        }
        Ok(out)
    }

    fn atom_pow(&mut self) -> Result<Poly> {
        let base = self.atom()?;
        if self.eat(b'^') {
            let e = self.number_u32()?;
            Ok(base.pow(e))
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<Poly> {
        match self.peek() {
            Some(b'0') => {
                self.pos += 1;
                Ok(Poly::zero())
            }
            Some(b'1') => {
                self.pos += 1;
                Ok(Poly::one())
            }
            Some(b'(') => {
                self.pos += 1;
                let inner = self.poly()?;
                self.expect(b')')?;
                Ok(inner)
            }
            Some(b'z') => {
                self.pos += 1;
                if self.eat(b'[') {
                    let s = self.number_u32()?;
                    self.expect(b']')?;
                    if s == 0 {
                        return Err(self.error("z[s] needs s >= 1"));
                    }
                    Ok(Poly::generator(GeneratorId::zgen(s)))
                } else {
                    let i = self.number_u32()?;
                    if i == 0 {
                        return Err(self.error("z<i> needs i >= 1"));
                    }
                    Ok(Poly::generator(GeneratorId::zeta(i)))
                }
            }
            Some(b'x') => {
                self.pos += 1;
                if self.eat(b'[') {
                    let n = self.number_u32()?;
                    self.expect(b']')?;
                    Ok(Poly::generator(GeneratorId::cell(n)))
                } else if self.eat(b'i') {
                    let i = self.number_u32()?;
                    if i == 0 {
                        return Err(self.error("xi<i> needs i >= 1"));
                    }
                    Ok(xi(i))
                } else {
                    Err(self.error("expected x[<n>] or xi<i>"))
                }
            }
            Some(b'a') => {
                self.pos += 1;
                self.expect(b'[')?;
                let k = self.number_u32()?;
                self.expect(b',')?;
                let s = self.number_u32()?;
                self.expect(b']')?;
                if k % 2 == 0 {
                    return Err(self.error("a[k,s] needs odd k"));
                }
                Ok(Poly::generator(GeneratorId::bo(k, s)))
            }
            Some(b'N') => {
                self.pos += 1;
                self.expect(b'[')?;
                let m = self.number_i64()?;
                self.expect(b']')?;
                Ok(n_poly(m))
            }
            Some(b'Q') => {
                self.pos += 1;
                self.expect(b'[')?;
                let mut word = vec![self.number_u32()?];
                while self.eat(b',') {
                    word.push(self.number_u32()?);
                }
                self.expect(b']')?;
                self.expect(b'(')?;
                let inner = self.poly()?;
                self.expect(b')')?;
                let mut value = inner;
                for &i in word.iter().rev() {
                    value = q_apply(i as i64, &value)?;
                }
                Ok(value)
            }
            Some(b'X') => {
                self.pos += 1;
                self.expect(b'[')?;
                self.skip_ws();
                let family = match self.bytes.get(self.pos) {
                    Some(c @ (b'1' | b'2' | b'3' | b'c')) => {
                        self.pos += 1;
                        (*c as char).to_string()
                    }
                    _ => return Err(self.error("expected a family 1, 2, 3 or c")),
                };
                self.expect(b',')?;
                let s = self.number_u32()?;
                self.expect(b']')?;
                match self.resolver {
                    Some(r) => r(&family, s),
                    None => Err(Error::UnknownGenerator(format!("X[{family},{s}]"))),
                }
            }
            Some(c) => Err(self.error(format!("unexpected character '{}'", c as char))),
            None => Err(self.error("unexpected end of input")),
        }
    }
}
