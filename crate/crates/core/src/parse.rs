//! Polynomial string syntax: `^` for powers, explicit `*`, and `/` only between
//! integer literals (`3*x^2*y - 1/2`).

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt::Write;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::ring::{Coeff, Poly, Ring};

pub(crate) fn format_coeff(c: &Coeff) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        alloc::format!("{}/{}", c.numer(), c.denom())
    }
}

pub(crate) fn format_poly(ring: &Ring, p: &Poly) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (i, (m, c)) in p.terms().iter().enumerate() {
        let negative = c.is_negative();
        let abs = c.abs();
        if i == 0 {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        let mut factors: Vec<String> = Vec::new();
        for (v, &e) in ring.vars().iter().zip(m.exponents()) {
            match e {
                0 => {}
                1 => factors.push(v.clone()),
                e => factors.push(alloc::format!("{v}^{e}")),
            }
        }
        if factors.is_empty() {
            out.push_str(&format_coeff(&abs));
        } else {
            if !abs.is_one() {
                let _ = write!(out, "{}*", format_coeff(&abs));
            }
            out.push_str(&factors.join("*"));
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

struct Parser<'a> {
    ring: &'a Ring,
    input: &'a str,
    toks: Vec<(usize, Tok)>,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err(&self, position: usize, message: &str) -> Error {
        Error::Parse {
            input: self.input.to_string(),
            position,
            message: message.to_string(),
        }
    }

    fn here(&self) -> usize {
        self.toks
            .get(self.pos)
            .map(|(p, _)| *p)
            .unwrap_or(self.input.len())
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(_, t)| t.clone());
        self.pos += 1;
        t
    }

    fn expr(&mut self) -> Result<Poly> {
        let mut acc = match self.peek() {
            Some(Tok::Minus) => {
                self.pos += 1;
                let t = self.term()?;
                self.ring.neg(&t)
            }
            Some(Tok::Plus) => {
                self.pos += 1;
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = self.ring.add(&acc, &t);
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = self.ring.sub(&acc, &t);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Poly> {
        let mut acc = self.factor()?;
        while self.peek() == Some(&Tok::Star) {
            self.pos += 1;
            let f = self.factor()?;
            acc = self.ring.mul(&acc, &f);
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Poly> {
        if self.peek() == Some(&Tok::Minus) {
            self.pos += 1;
            let f = self.factor()?;
            return Ok(self.ring.neg(&f));
        }
        let base = self.atom()?;
        if self.peek() == Some(&Tok::Caret) {
            self.pos += 1;
            let at = self.here();
            match self.next() {
                Some(Tok::Num(n)) => {
                    let e = u32::try_from(n).map_err(|_| self.err(at, "exponent too large"))?;
                    return Ok(self.ring.pow(&base, e));
                }
                _ => return Err(self.err(at, "expected a non-negative integer exponent")),
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Poly> {
        let at = self.here();
        match self.next() {
            Some(Tok::Num(n)) => {
                let mut value = BigRational::from_integer(n);
                if self.peek() == Some(&Tok::Slash) {
                    self.pos += 1;
                    let dat = self.here();
                    match self.next() {
                        Some(Tok::Num(d)) if !d.is_zero() => {
                            value /= BigRational::from_integer(d);
                        }
                        _ => return Err(self.err(dat, "expected a nonzero integer denominator")),
                    }
                }
                let c = self
                    .ring
                    .base()
                    .coerce(&value)
                    .ok_or_else(|| self.err(at, "coefficient has no image in the base ring"))?;
                Ok(self.ring.from_coeff(c))
            }
            Some(Tok::Ident(name)) => self
                .ring
                .var_named(&name)
                .ok_or_else(|| self.err(at, &alloc::format!("unknown variable {name:?}"))),
            Some(Tok::LParen) => {
                let inner = self.expr()?;
                let close = self.here();
                match self.next() {
                    Some(Tok::RParen) => Ok(inner),
                    _ => Err(self.err(close, "expected ')'")),
                }
            }
            _ => Err(self.err(at, "expected a number, variable or '('")),
        }
    }
}

fn tokenize(s: &str) -> Result<Vec<(usize, Tok)>> {
    let bytes = s.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        let start = i;
        let tok = match c {
            ' ' | '\t' | '\n' | '\r' => {
                i += 1;
                continue;
            }
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            '0'..='9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                out.push((start, Tok::Num(s[start..i].parse().unwrap())));
                continue;
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push((start, Tok::Ident(s[start..i].to_string())));
                continue;
            }
            _ => {
                return Err(Error::Parse {
                    input: s.to_string(),
                    position: start,
                    message: alloc::format!("unexpected character {c:?}"),
                })
            }
        };
        i += 1;
        out.push((start, tok));
    }
    Ok(out)
}

pub(crate) fn parse_poly(ring: &Ring, s: &str) -> Result<Poly> {
    let toks = tokenize(s)?;
    let mut p = Parser {
        ring,
        input: s,
        toks,
        pos: 0,
    };
    if p.toks.is_empty() {
        return Err(p.err(0, "empty expression"));
    }
    let value = p.expr()?;
    if p.pos < p.toks.len() {
        return Err(p.err(p.here(), "trailing input"));
    }
    Ok(value)
}
