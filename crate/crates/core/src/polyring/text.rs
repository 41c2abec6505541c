//! Polynomial text: parsing and canonical formatting.
//!
//! Grammar: identifiers, nonnegative integer literals, `+ - * / ^`, and
//! parentheses. Multiplication is always explicit. Division is only
//! allowed by nonzero constants, so `3/4*x` is a rational coefficient.

use std::fmt;

use super::poly::Polynomial;
use super::ring::Ring;
use crate::arith::{IBig, RBig};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(IBig),
    Ident(String),
    Op(char),
}

fn tokenize(text: &str) -> Result<Vec<(Tok, usize)>> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        if c.is_ascii_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            let n: IBig = text[start..i].parse().map_err(|_| Error::Parse { position: start, message: "bad integer".into() })?;
            out.push((Tok::Num(n), start));
        } else if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                i += 1;
            }
            out.push((Tok::Ident(text[start..i].to_string()), start));
        } else if "+-*/^()".contains(c) {
            out.push((Tok::Op(c), i));
            i += 1;
        } else {
            return Err(Error::Parse { position: i, message: format!("unexpected character '{c}'") });
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    end: usize,
    ring: &'a Ring,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.0)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map(|t| t.1).unwrap_or(self.end)
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Parse { position: self.offset(), message: message.into() })
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut acc = self.term()?;
        while let Some(Tok::Op(c @ ('+' | '-'))) = self.peek() {
            let c = *c;
            self.pos += 1;
            let rhs = self.term()?;
            acc = if c == '+' { &acc + &rhs } else { &acc - &rhs };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(Tok::Op('*')) => {
                    self.pos += 1;
                    let rhs = self.unary()?;
                    acc = acc.checked_mul(&rhs)?;
                }
                Some(Tok::Op('/')) => {
                    self.pos += 1;
                    let at = self.offset();
                    let rhs = self.unary()?;
                    match rhs.constant_value() {
                        Some(c) if !c.is_zero() => acc = acc.scale(&(RBig::ONE / c)),
                        Some(_) => return Err(Error::Parse { position: at, message: "division by zero".into() }),
                        None => return Err(Error::Parse { position: at, message: "division by a nonconstant".into() }),
                    }
                }
                Some(Tok::Num(_) | Tok::Ident(_) | Tok::Op('(')) => {
                    return self.err("implicit multiplication is not allowed; use '*'");
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<Polynomial> {
        match self.peek() {
            Some(Tok::Op('-')) => {
                self.pos += 1;
                Ok(-self.unary()?)
            }
            Some(Tok::Op('+')) => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Polynomial> {
        let base = self.atom()?;
        if let Some(Tok::Op('^')) = self.peek() {
            self.pos += 1;
            let at = self.offset();
            match self.peek().cloned() {
                Some(Tok::Num(n)) => {
                    self.pos += 1;
                    let k: u32 = u32::try_from(&n).map_err(|_| Error::Parse { position: at, message: "exponent too large".into() })?;
                    if k > u16::MAX as u32 {
                        return Err(Error::Parse { position: at, message: "exponent too large".into() });
                    }
                    base.pow(k)
                }
                _ => self.err("expected a nonnegative integer exponent"),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<Polynomial> {
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                Ok(Polynomial::constant(self.ring, RBig::from(n)))
            }
            Some(Tok::Ident(name)) => match self.ring.index_of(&name) {
                Some(i) => {
                    self.pos += 1;
                    Ok(Polynomial::var(self.ring, i))
                }
                None => self.err(format!("unknown variable '{name}'")),
            },
            Some(Tok::Op('(')) => {
                self.pos += 1;
                let inner = self.expr()?;
                match self.peek() {
                    Some(Tok::Op(')')) => {
                        self.pos += 1;
                        Ok(inner)
                    }
                    _ => self.err("expected ')'"),
                }
            }
            Some(t) => self.err(format!("unexpected token {t:?}")),
            None => self.err("unexpected end of input"),
        }
    }
}

/// Parses a polynomial over `ring`; the result uses the default order.
pub fn parse(text: &str, ring: &Ring) -> Result<Polynomial> {
    let toks = tokenize(text)?;
    let mut p = Parser { toks, pos: 0, end: text.len(), ring };
    if p.peek().is_none() {
        return p.err("empty polynomial");
    }
    let out = p.expr()?;
    if p.peek().is_some() {
        return p.err("trailing input");
    }
    Ok(out)
}

/// Canonical text: integer coefficients with content 1, positive leading
/// coefficient, terms descending in the polynomial's order.
pub fn format(p: &Polynomial) -> String {
    p.canonical().to_string()
}

fn write_monomial(f: &mut fmt::Formatter<'_>, ring: &Ring, e: &[u16], mut first: bool) -> fmt::Result {
    for (i, &k) in e.iter().enumerate() {
        if k == 0 {
            continue;
        }
        if !first {
            f.write_str("*")?;
        }
        first = false;
        f.write_str(ring.var_name(i))?;
        if k > 1 {
            write!(f, "^{k}")?;
        }
    }
    Ok(())
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (c, e)) in self.terms().enumerate() {
            let neg = crate::arith::rational_is_negative(c);
            let abs = if neg { -c } else { c.clone() };
            if neg {
                f.write_str("-")?;
            } else if i > 0 {
                f.write_str("+")?;
            }
            let constant = e.iter().all(|&k| k == 0);
            if constant {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write_monomial(f, self.ring(), e, true)?;
            } else {
                write!(f, "{abs}")?;
                write_monomial(f, self.ring(), e, false)?;
            }
        }
        Ok(())
    }
}
