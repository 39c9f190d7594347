//! Precedence-climbing parser for closed-form `f(x, y)`.
//!
//! Precedence, loosest first: `+ -` (left), `* /` (left), unary `-`,
//! `^` (right, integer-literal exponents only). Implicit multiplication is
//! not supported. A literal `p/q` written without spaces is a single
//! rational token.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use crate::algebra::{format_rational, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Func {
    Exp,
    Log,
}

impl Func {
    fn name(self) -> &'static str {
        match self {
            Func::Exp => "exp",
            Func::Log => "log",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Expr {
    X,
    Y,
    Lit(Rational),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, i64),
    Call(Func, Box<Expr>),
}

/// Syntax error at a byte offset of the source.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("syntax error at byte {offset}: found {found}, expected one of: {}", expected.join(", "))]
pub struct ParseError {
    pub offset: usize,
    pub found: String,
    pub expected: Vec<String>,
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(Rational),
    Ident(String),
    Sym(char),
    End,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Num(q) => write!(f, "number `{}`", format_rational(q)),
            Tok::Ident(s) => write!(f, "identifier `{s}`"),
            Tok::Sym(c) => write!(f, "`{c}`"),
            Tok::End => write!(f, "end of input"),
        }
    }
}

fn lex(src: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        if c.is_ascii_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            let numer: BigInt = src[start..i].parse().expect("digits");
            let mut value = Rational::from_integer(numer.clone());
            if i + 1 < bytes.len() && bytes[i] == b'/' && bytes[i + 1].is_ascii_digit() {
                let dstart = i + 1;
                i = dstart;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let denom: BigInt = src[dstart..i].parse().expect("digits");
                if denom.is_zero() {
                    return Err(ParseError {
                        offset: dstart,
                        found: "zero denominator".into(),
                        expected: vec!["nonzero denominator".into()],
                    });
                }
                value = Rational::new(numer, denom);
            }
            out.push((start, Tok::Num(value)));
        } else if c.is_ascii_alphabetic() {
            let start = i;
            while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                i += 1;
            }
            out.push((start, Tok::Ident(src[start..i].to_string())));
        } else if b"+-*/^()".contains(&c) {
            out.push((i, Tok::Sym(c as char)));
            i += 1;
        } else {
            let ch = src[i..].chars().next().expect("in bounds");
            return Err(ParseError {
                offset: i,
                found: format!("character `{ch}`"),
                expected: vec!["operator".into(), "operand".into()],
            });
        }
    }
    out.push((src.len(), Tok::End));
    Ok(out)
}

const OPERAND: [&str; 6] = ["number", "`x`", "`y`", "`exp`", "`log`", "`(`"];

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].1
    }

    fn offset(&self) -> usize {
        self.toks[self.pos].0
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].1.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn error(&self, expected: &[&str]) -> ParseError {
        ParseError {
            offset: self.offset(),
            found: self.peek().to_string(),
            expected: expected.iter().map(|s| s.to_string()).collect(),
        }
    }

    fn expect_sym(&mut self, c: char) -> Result<(), ParseError> {
        if *self.peek() == Tok::Sym(c) {
            self.bump();
            Ok(())
        } else {
            Err(self.error(&[&format!("`{c}`")]))
        }
    }

    fn binary_op(&self) -> Option<(char, u8)> {
        match self.peek() {
            Tok::Sym(c @ ('+' | '-')) => Some((*c, 1)),
            Tok::Sym(c @ ('*' | '/')) => Some((*c, 2)),
            _ => None,
        }
    }

    fn expr(&mut self, min_prec: u8) -> Result<Expr, ParseError> {
        let mut lhs = self.unary()?;
        while let Some((op, prec)) = self.binary_op() {
            if prec < min_prec {
                break;
            }
            self.bump();
            let rhs = Box::new(self.expr(prec + 1)?);
            let l = Box::new(lhs);
            lhs = match op {
                '+' => Expr::Add(l, rhs),
                '-' => Expr::Sub(l, rhs),
                '*' => Expr::Mul(l, rhs),
                _ => Expr::Div(l, rhs),
            };
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Expr, ParseError> {
        if *self.peek() == Tok::Sym('-') {
            self.bump();
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr, ParseError> {
        let base = self.primary()?;
        if *self.peek() == Tok::Sym('^') {
            self.bump();
            let e = self.exponent()?;
            return Ok(Expr::Pow(Box::new(base), e));
        }
        Ok(base)
    }

    /// Optionally signed integer literal; `a^b^c` folds `b^c` first.
    fn exponent(&mut self) -> Result<i64, ParseError> {
        let negative = if *self.peek() == Tok::Sym('-') {
            self.bump();
            true
        } else {
            false
        };
        let offset = self.offset();
        let value = match self.peek() {
            Tok::Num(q) if q.is_integer() => q
                .to_integer()
                .to_i64()
                .ok_or_else(|| self.error(&["integer exponent within range"]))?,
            _ => return Err(self.error(&["integer literal", "`-`"])),
        };
        self.bump();
        let mut value = value;
        if *self.peek() == Tok::Sym('^') {
            self.bump();
            let outer = self.exponent()?;
            value = u32::try_from(outer)
                .ok()
                .and_then(|p| value.checked_pow(p))
                .ok_or(ParseError {
                    offset,
                    found: "exponent tower".into(),
                    expected: vec!["integer exponent within range".into()],
                })?;
        }
        Ok(if negative { -value } else { value })
    }

    fn primary(&mut self) -> Result<Expr, ParseError> {
        match self.peek().clone() {
            Tok::Num(q) => {
                self.bump();
                Ok(Expr::Lit(q))
            }
            Tok::Sym('(') => {
                self.bump();
                let e = self.expr(0)?;
                self.expect_sym(')')?;
                Ok(e)
            }
            Tok::Ident(name) => {
                let func = match name.as_str() {
                    "x" => {
                        self.bump();
                        return Ok(Expr::X);
                    }
                    "y" => {
                        self.bump();
                        return Ok(Expr::Y);
                    }
                    "exp" => Func::Exp,
                    "log" => Func::Log,
                    _ => return Err(self.error(&OPERAND)),
                };
                self.bump();
                self.expect_sym('(')?;
                let arg = self.expr(0)?;
                self.expect_sym(')')?;
                Ok(Expr::Call(func, Box::new(arg)))
            }
            _ => Err(self.error(&OPERAND)),
        }
    }
}

pub fn parse(src: &str) -> Result<Expr, ParseError> {
    let mut p = Parser { toks: lex(src)?, pos: 0 };
    let e = p.expr(0)?;
    if *p.peek() != Tok::End {
        return Err(p.error(&["operator", "end of input"]));
    }
    Ok(e)
}

/// Fully parenthesized rendering; parses back to the same tree.
impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::X => write!(f, "x"),
            Expr::Y => write!(f, "y"),
            Expr::Lit(q) if q < &Rational::zero() => write!(f, "(-{})", format_rational(&-q)),
            Expr::Lit(q) => write!(f, "{}", format_rational(q)),
            Expr::Neg(e) => write!(f, "(-{e})"),
            Expr::Add(a, b) => write!(f, "({a} + {b})"),
            Expr::Sub(a, b) => write!(f, "({a} - {b})"),
            Expr::Mul(a, b) => write!(f, "({a} * {b})"),
            Expr::Div(a, b) => write!(f, "({a} / {b})"),
            Expr::Pow(a, e) => write!(f, "({a}^{e})"),
            Expr::Call(func, a) => write!(f, "{}({a})", func.name()),
        }
    }
}
