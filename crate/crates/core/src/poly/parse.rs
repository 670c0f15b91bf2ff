//! Expression parser: rationals, declared variables, `+ - * ^` and
//! parentheses. Multiplication must be explicit.

use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use thiserror::Error;

use super::{CoeffDomain, MPoly, VarSpec};

pub const MAX_EXPONENT: u64 = 1 << 31;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("unknown variable `{name}` at position {pos}")]
    UnknownVariable { pos: usize, name: String },
    #[error("exponent too large at position {pos}")]
    ExponentOverflow { pos: usize },
    #[error("division by zero at position {pos}")]
    ZeroDenominator { pos: usize },
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

fn lex(text: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let chars: Vec<(usize, char)> = text.char_indices().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let (pos, c) = chars[i];
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        let simple = match c {
            '+' => Some(Tok::Plus),
            '-' | '−' => Some(Tok::Minus),
            '*' => Some(Tok::Star),
            '/' => Some(Tok::Slash),
            '^' => Some(Tok::Caret),
            '(' => Some(Tok::LParen),
            ')' => Some(Tok::RParen),
            _ => None,
        };
        if let Some(t) = simple {
            out.push((pos, t));
            i += 1;
            continue;
        }
        if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].1.is_ascii_digit() {
                i += 1;
            }
            let s: String = chars[start..i].iter().map(|x| x.1).collect();
            out.push((pos, Tok::Num(s.parse().expect("digits"))));
            continue;
        }
        if c.is_alphabetic() {
            let start = i;
            while i < chars.len() && (chars[i].1.is_alphanumeric() || chars[i].1 == '_') {
                i += 1;
            }
            let s: String = chars[start..i].iter().map(|x| x.1).collect();
            out.push((pos, Tok::Ident(s)));
            continue;
        }
        return Err(ParseError::Syntax { pos, msg: format!("unexpected character `{c}`") });
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(usize, Tok)>,
    i: usize,
    end: usize,
    spec: &'a Arc<VarSpec>,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.i).map(|t| &t.1)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.i).map(|t| t.0).unwrap_or(self.end)
    }

    fn err(&self, msg: &str) -> ParseError {
        ParseError::Syntax { pos: self.pos(), msg: msg.to_string() }
    }

    fn expr(&mut self) -> Result<MPoly, ParseError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.i += 1;
                    acc = &acc + &self.term()?;
                }
                Some(Tok::Minus) => {
                    self.i += 1;
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<MPoly, ParseError> {
        let mut acc = self.unary()?;
        while let Some(Tok::Star) = self.peek() {
            self.i += 1;
            acc = &acc * &self.unary()?;
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<MPoly, ParseError> {
        match self.peek() {
            Some(Tok::Minus) => {
                self.i += 1;
                Ok(-self.unary()?)
            }
            Some(Tok::Plus) => {
                self.i += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<MPoly, ParseError> {
        let base = self.atom()?;
        if let Some(Tok::Caret) = self.peek() {
            self.i += 1;
            let pos = self.pos();
            match self.peek().cloned() {
                Some(Tok::Num(n)) => {
                    self.i += 1;
                    let k: u64 = n.try_into().map_err(|_| ParseError::ExponentOverflow { pos })?;
                    if k > MAX_EXPONENT {
                        return Err(ParseError::ExponentOverflow { pos });
                    }
                    if k >= u32::MAX as u64 {
                        return Err(ParseError::ExponentOverflow { pos });
                    }
                    Ok(base.pow(k as u32))
                }
                _ => Err(self.err("expected a nonnegative integer exponent")),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<MPoly, ParseError> {
        let pos = self.pos();
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.i += 1;
                if let Some(Tok::Slash) = self.peek() {
                    self.i += 1;
                    let dpos = self.pos();
                    match self.peek().cloned() {
                        Some(Tok::Num(d)) => {
                            self.i += 1;
                            if d.is_zero() {
                                return Err(ParseError::ZeroDenominator { pos: dpos });
                            }
                            Ok(MPoly::constant(self.spec, BigRational::new(n, d)))
                        }
                        _ => Err(self.err("expected an integer denominator")),
                    }
                } else {
                    Ok(MPoly::from_int(self.spec, n))
                }
            }
            Some(Tok::Ident(name)) => {
                self.i += 1;
                match self.spec.find_var(&name) {
                    Some(v) => Ok(MPoly::var(self.spec, v)),
                    None => Err(ParseError::UnknownVariable { pos, name }),
                }
            }
            Some(Tok::LParen) => {
                self.i += 1;
                let e = self.expr()?;
                match self.peek() {
                    Some(Tok::RParen) => {
                        self.i += 1;
                        Ok(e)
                    }
                    _ => Err(self.err("expected `)`")),
                }
            }
            Some(_) => Err(self.err("unexpected token")),
            None => Err(self.err("unexpected end of input")),
        }
    }
}

/// Parses `text` against `spec`. The result has integer domain when every
/// coefficient is integral.
pub fn parse_poly(text: &str, spec: &Arc<VarSpec>) -> Result<MPoly, ParseError> {
    let toks = lex(text)?;
    let mut p = Parser { toks, i: 0, end: text.len(), spec };
    if p.toks.is_empty() {
        return Err(ParseError::Syntax { pos: 0, msg: "empty expression".into() });
    }
    let e = p.expr()?;
    if p.i < p.toks.len() {
        return Err(p.err("unexpected token (multiplication must be explicit)"));
    }
    Ok(if e.has_integer_coeffs() {
        e.to_integer().expect("integral")
    } else {
        e.to_rational().with_domain(CoeffDomain::Rational)
    })
}
