//! Text form of algebra elements.
//!
//! ```text
//! expr   := term (('+'|'-') term)*
//! term   := factor ('*' factor)*
//! factor := atom ['^' int]
//! atom   := symbol | rational | '(' expr ')'
//! rational := int ['/' int]
//! int    := ['-'] digits
//! ```
//!
//! Symbols are `tau x y z dtau dx dy dz hbar i`. Whitespace is ignored
//! between tokens. The AST keeps grouping and literal spelling, so printing a
//! parsed canonical string gives the string back.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::{GaussRational, Scalar};
use crate::central::CentralPoly;
use crate::weyl::{normalize, FreeElement, Generator, WeylElement};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Symbol {
    Gen(Generator),
    Hbar,
    I,
    /// Quantum radius; only accepted by [`parse_central`].
    R,
}

impl Symbol {
    pub fn from_name(s: &str) -> Option<Self> {
        match s {
            "hbar" => Some(Self::Hbar),
            "i" => Some(Self::I),
            _ => Generator::from_name(s).map(Self::Gen),
        }
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Gen(g) => write!(f, "{g}"),
            Self::Hbar => f.write_str("hbar"),
            Self::I => f.write_str("i"),
            Self::R => f.write_str("r"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    /// First term and the signed rest; `rest` is never empty.
    Sum(Box<Expr>, Vec<(Sign, Expr)>),
    /// At least two factors.
    Product(Vec<Expr>),
    Power(Box<Expr>, BigInt),
    Symbol(Symbol),
    Rational(BigInt, Option<BigInt>),
    Group(Box<Expr>),
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Sum(first, rest) => {
                write!(f, "{first}")?;
                for (s, t) in rest {
                    let op = if *s == Sign::Plus { "+" } else { "-" };
                    write!(f, " {op} {t}")?;
                }
                Ok(())
            }
            Expr::Product(fs) => {
                for (k, x) in fs.iter().enumerate() {
                    if k > 0 {
                        f.write_str("*")?;
                    }
                    write!(f, "{x}")?;
                }
                Ok(())
            }
            Expr::Power(b, e) => write!(f, "{b}^{e}"),
            Expr::Symbol(s) => write!(f, "{s}"),
            Expr::Rational(n, None) => write!(f, "{n}"),
            Expr::Rational(n, Some(d)) => write!(f, "{n}/{d}"),
            Expr::Group(e) => write!(f, "({e})"),
        }
    }
}

impl FromStr for Expr {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse(s)
    }
}

pub fn parse(text: &str) -> Result<Expr> {
    parse_with(text, false)
}

/// Central functions of `(tau, r)`: the same grammar with `r` added.
pub fn parse_central(text: &str) -> Result<CentralPoly> {
    parse_with(text, true)?.eval_central()
}

fn parse_with(text: &str, allow_r: bool) -> Result<Expr> {
    let mut p = Parser {
        chars: text.chars().collect(),
        pos: 0,
        allow_r,
    };
    let e = p.expr()?;
    p.skip_ws();
    if p.pos < p.chars.len() {
        return Err(p.error(format!("unexpected '{}'", p.chars[p.pos])));
    }
    Ok(e)
}

/// Parse and normal-order with the word rewriter.
pub fn parse_element(text: &str) -> Result<WeylElement> {
    Ok(normalize(&parse(text)?.to_free()?))
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
    allow_r: bool,
}

impl Parser {
    fn error(&self, msg: String) -> Error {
        self.error_at(self.pos, msg)
    }

    fn error_at(&self, pos: usize, msg: String) -> Error {
        let before = &self.chars[..pos.min(self.chars.len())];
        let line = 1 + before.iter().filter(|c| **c == '\n').count();
        let col = 1 + before.iter().rev().take_while(|c| **c != '\n').count();
        Error::Parse { line, col, msg }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<Expr> {
        let first = self.term()?;
        let mut rest = Vec::new();
        while let Some(c @ ('+' | '-')) = self.peek() {
            self.pos += 1;
            let s = if c == '+' { Sign::Plus } else { Sign::Minus };
            rest.push((s, self.term()?));
        }
        Ok(if rest.is_empty() {
            first
        } else {
            Expr::Sum(Box::new(first), rest)
        })
    }

    fn term(&mut self) -> Result<Expr> {
        let mut fs = vec![self.factor()?];
        while self.peek() == Some('*') {
            self.pos += 1;
            fs.push(self.factor()?);
        }
        Ok(if fs.len() == 1 {
            fs.pop().unwrap()
        } else {
            Expr::Product(fs)
        })
    }

    fn factor(&mut self) -> Result<Expr> {
        let a = self.atom()?;
        if self.peek() == Some('^') {
            self.pos += 1;
            let e = self.int()?;
            return Ok(Expr::Power(Box::new(a), e));
        }
        Ok(a)
    }

    fn atom(&mut self) -> Result<Expr> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(')') {
                    return Err(self.error("expected ')'".into()));
                }
                self.pos += 1;
                Ok(Expr::Group(Box::new(e)))
            }
            Some(c) if c == '-' || c.is_ascii_digit() => {
                let n = self.int()?;
                if self.peek() == Some('/') {
                    self.pos += 1;
                    let at = self.pos;
                    let d = self.int()?;
                    if d.is_zero() {
                        return Err(self.error_at(at, "zero denominator".into()));
                    }
                    return Ok(Expr::Rational(n, Some(d)));
                }
                Ok(Expr::Rational(n, None))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                while self.pos < self.chars.len() && self.chars[self.pos].is_ascii_alphanumeric() {
                    self.pos += 1;
                }
                let name: String = self.chars[start..self.pos].iter().collect();
                let sym = match name.as_str() {
                    "r" if self.allow_r => Some(Symbol::R),
                    _ => Symbol::from_name(&name),
                };
                sym.map(Expr::Symbol)
                    .ok_or_else(|| self.error_at(start, format!("unknown symbol '{name}'")))
            }
            Some(c) => Err(self.error(format!("expected a symbol, number or '(', found '{c}'"))),
            None => Err(self.error("unexpected end of input".into())),
        }
    }

    fn int(&mut self) -> Result<BigInt> {
        let mut neg = false;
        if self.peek() == Some('-') {
            neg = true;
            self.pos += 1;
        }
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.chars.len() && self.chars[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected an integer".into()));
        }
        let digits: String = self.chars[start..self.pos].iter().collect();
        let n: BigInt = digits.parse().expect("ascii digits");
        Ok(if neg { -n } else { n })
    }
}

fn exponent(e: &BigInt) -> Result<i32> {
    e.try_into()
        .map_err(|_| Error::Invalid(format!("exponent {e} too large")))
}

fn rational(n: &BigInt, d: &Option<BigInt>) -> Scalar {
    let d = d.clone().unwrap_or_else(BigInt::one);
    Scalar::constant(GaussRational::new(
        BigRational::new(n.clone(), d),
        BigRational::zero(),
    ))
}

fn as_scalar(w: &WeylElement) -> Option<Scalar> {
    w.terms()
        .all(|(m, _)| m.is_one())
        .then(|| w.constant_term())
}

impl Expr {
    /// Evaluates in the algebra; negative powers need an invertible scalar.
    pub fn eval(&self) -> Result<WeylElement> {
        Ok(match self {
            Expr::Sum(first, rest) => {
                let mut acc = first.eval()?;
                for (s, t) in rest {
                    let v = t.eval()?;
                    acc = if *s == Sign::Plus { &acc + &v } else { &acc - &v };
                }
                acc
            }
            Expr::Product(fs) => {
                let mut acc = WeylElement::one();
                for x in fs {
                    acc = &acc * &x.eval()?;
                }
                acc
            }
            Expr::Power(b, e) => {
                let base = b.eval()?;
                let k = exponent(e)?;
                if k >= 0 {
                    base.pow(k as u32)
                } else {
                    let s = as_scalar(&base)
                        .and_then(|s| s.inv_monomial())
                        .ok_or_else(|| {
                            Error::Invalid(format!("negative power of non-invertible {b}"))
                        })?;
                    WeylElement::scalar(s.pow((-k) as u32))
                }
            }
            Expr::Symbol(Symbol::Gen(g)) => WeylElement::gen(*g),
            Expr::Symbol(Symbol::Hbar) => WeylElement::scalar(Scalar::hbar()),
            Expr::Symbol(Symbol::I) => WeylElement::scalar(Scalar::i()),
            Expr::Symbol(Symbol::R) => {
                return Err(Error::Invalid("r is not an algebra generator".into()))
            }
            Expr::Rational(n, d) => WeylElement::scalar(rational(n, d)),
            Expr::Group(e) => e.eval()?,
        })
    }

    /// Sum of words, multiplied out but not reordered.
    pub fn to_free(&self) -> Result<FreeElement> {
        Ok(match self {
            Expr::Sum(first, rest) => {
                let mut acc = first.to_free()?;
                for (s, t) in rest {
                    let v = t.to_free()?;
                    acc = match s {
                        Sign::Plus => acc.add(&v),
                        Sign::Minus => acc.add(&v.scale(&Scalar::int(-1))),
                    };
                }
                acc
            }
            Expr::Product(fs) => {
                let mut acc = FreeElement::scalar(Scalar::one());
                for x in fs {
                    acc = acc.concat(&x.to_free()?);
                }
                acc
            }
            Expr::Power(b, e) => {
                let k = exponent(e)?;
                let base = b.to_free()?;
                if k >= 0 {
                    let mut acc = FreeElement::scalar(Scalar::one());
                    for _ in 0..k {
                        acc = acc.concat(&base);
                    }
                    acc
                } else {
                    FreeElement::from_element(&self.eval()?)
                }
            }
            Expr::Symbol(Symbol::Gen(g)) => FreeElement::word(&[*g]),
            Expr::Group(e) => e.to_free()?,
            _ => FreeElement::from_element(&self.eval()?),
        })
    }

    /// Evaluates as a function of `tau` and `r`.
    pub fn eval_central(&self) -> Result<CentralPoly> {
        Ok(match self {
            Expr::Sum(first, rest) => {
                let mut acc = first.eval_central()?;
                for (s, t) in rest {
                    let v = t.eval_central()?;
                    acc = if *s == Sign::Plus { acc.add(&v) } else { acc.sub(&v) };
                }
                acc
            }
            Expr::Product(fs) => {
                let mut acc = CentralPoly::one();
                for x in fs {
                    acc = acc.mul(&x.eval_central()?);
                }
                acc
            }
            Expr::Power(b, e) => {
                let k = exponent(e)?;
                match (b.as_ref(), k) {
                    (_, k) if k >= 0 => b.eval_central()?.pow(k as u32),
                    (Expr::Symbol(Symbol::R), k) => CentralPoly::r_pow(k),
                    _ => {
                        let s = as_scalar(&b.eval()?)
                            .and_then(|s| s.inv_monomial())
                            .ok_or_else(|| {
                                Error::Invalid(format!("negative power of non-invertible {b}"))
                            })?;
                        CentralPoly::constant(s.pow((-k) as u32))
                    }
                }
            }
            Expr::Symbol(Symbol::Gen(Generator::Tau)) => CentralPoly::tau(),
            Expr::Symbol(Symbol::R) => CentralPoly::r(),
            Expr::Symbol(Symbol::Gen(g)) => {
                return Err(Error::Invalid(format!("{g} is not central")))
            }
            Expr::Group(e) => e.eval_central()?,
            _ => CentralPoly::constant(
                as_scalar(&self.eval()?).expect("literal or constant symbol"),
            ),
        })
    }
}
