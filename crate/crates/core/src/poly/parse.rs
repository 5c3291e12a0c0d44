//! Text parser for polynomials.
//!
//! Grammar (explicit `*` required):
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '/') unary)*
//! unary  := '-' unary | power
//! power  := atom ('^' integer)?
//! atom   := integer | identifier | '(' expr ')'
//! ```
//!
//! Division is only allowed by nonzero constants.

use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;

use super::field::Coeff;
use super::polynomial::{Poly, Ring};
use super::PolyError;

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Op(char),
}

fn tokenize(s: &str) -> Result<Vec<(usize, Tok)>, PolyError> {
    let chars: Vec<char> = s.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let text: String = chars[start..i].iter().collect();
            out.push((start, Tok::Num(text.parse().expect("digits"))));
        } else if c.is_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_' || chars[i] == '\'') {
                i += 1;
            }
            out.push((start, Tok::Ident(chars[start..i].iter().collect())));
        } else if "+-*/^()".contains(c) {
            out.push((i, Tok::Op(c)));
            i += 1;
        } else {
            return Err(PolyError::Parse { pos: i, msg: format!("unexpected character '{c}'") });
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    ring: &'a Arc<Ring>,
    end: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn here(&self) -> usize {
        self.toks.get(self.pos).map(|(p, _)| *p).unwrap_or(self.end)
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T, PolyError> {
        Err(PolyError::Parse { pos: self.here(), msg: msg.into() })
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Op(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Poly, PolyError> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                acc = &acc + &self.term()?;
            } else if self.eat('-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Poly, PolyError> {
        let mut acc = self.unary()?;
        loop {
            if self.eat('*') {
                acc = &acc * &self.unary()?;
            } else if self.eat('/') {
                let at = self.here();
                let d = self.unary()?;
                if !d.is_constant() || d.is_zero() {
                    return Err(PolyError::Parse { pos: at, msg: "division by a non-constant or zero".into() });
                }
                let inv = d.constant_term().inv().expect("nonzero");
                acc = acc.scale(&inv);
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<Poly, PolyError> {
        if self.eat('-') {
            return Ok(self.unary()?.neg());
        }
        if self.eat('+') {
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<Poly, PolyError> {
        let base = self.atom()?;
        if self.eat('^') {
            match self.peek().cloned() {
                Some(Tok::Num(n)) => {
                    self.pos += 1;
                    let e: u32 = n.try_into().map_err(|_| PolyError::Parse { pos: self.here(), msg: "exponent too large".into() })?;
                    Ok(base.pow(e))
                }
                _ => self.err("expected a non-negative integer exponent"),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<Poly, PolyError> {
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                let q = BigRational::from_integer(n);
                Ok(Poly::constant(self.ring, Coeff::from_rational(self.ring.field(), &q)?))
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                match self.ring.index_of(&name) {
                    Some(i) => Ok(Poly::var(self.ring, i)),
                    None => Err(PolyError::UnknownVariable(name)),
                }
            }
            Some(Tok::Op('(')) => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(')') {
                    return self.err("expected ')'");
                }
                Ok(inner)
            }
            Some(t) => self.err(format!("unexpected token {t:?}")),
            None => self.err("unexpected end of input"),
        }
    }
}

/// Parses `text` as a polynomial in `ring`.
pub fn parse_poly(ring: &Arc<Ring>, text: &str) -> Result<Poly, PolyError> {
    let toks = tokenize(text)?;
    if toks.is_empty() {
        return Err(PolyError::Parse { pos: 0, msg: "empty expression".into() });
    }
    let mut p = Parser { toks, pos: 0, ring, end: text.len() };
    let out = p.expr()?;
    if p.pos != p.toks.len() {
        return p.err("trailing input");
    }
    Ok(out)
}

/// Identifiers occurring in `text`, in order of first appearance.
pub fn identifiers(text: &str) -> Result<Vec<String>, PolyError> {
    let mut out: Vec<String> = Vec::new();
    for (_, t) in tokenize(text)? {
        if let Tok::Ident(s) = t {
            if !out.contains(&s) {
                out.push(s);
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Field;

    #[test]
    fn weighted_example() {
        let r = Ring::new(["p3", "t1", "p4", "u2"], Field::Rational);
        let f = parse_poly(&r, "p3^2 + t1*p4^2 + p4*u2").unwrap();
        assert_eq!(f.len(), 3);
        let wd = f.weighted_degree(&[7, 2, 6, 8]);
        assert_eq!(wd.degree, Some(14));
        assert!(wd.homogeneous);
    }

    #[test]
    fn zero_forms() {
        let r = Ring::new(["x"], Field::Rational);
        assert!(parse_poly(&r, "0").unwrap().is_zero());
        assert!(parse_poly(&r, "x - x").unwrap().is_zero());
    }

    #[test]
    fn errors() {
        let r = Ring::new(["x"], Field::Rational);
        assert!(matches!(parse_poly(&r, "x + y"), Err(PolyError::UnknownVariable(_))));
        assert!(parse_poly(&r, "x +").is_err());
        assert!(parse_poly(&r, "x/x").is_err());
        assert!(parse_poly(&r, "(x").is_err());
        assert!(parse_poly(&r, "x^-1").is_err());
    }

    #[test]
    fn rationals_and_fields() {
        let r = Ring::new(["x"], Field::Rational);
        assert_eq!(parse_poly(&r, "x/2 + 3/4").unwrap().to_string(), "1/2*x + 3/4");
        let r7 = Ring::new(["x"], Field::Prime(7));
        assert_eq!(parse_poly(&r7, "x/2").unwrap().to_string(), "-3*x");
        assert!(parse_poly(&r7, "x/7").is_err());
    }
}
