//! Recursive-descent parser for ring-element expressions: integer
//! literals, variables, + - * / ^ and parentheses. Precedence is the
//! usual one (^ binds tightest, then * and /, then unary minus within a
//! product, then + and -). Exponents must be nonnegative integers.

use divforge_core::quadratic::{QuadElement, QuadRing};
use divforge_core::rings::{GcdDomain, UniPoly};
use num_bigint::BigInt;
use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Int(BigInt),
    Var(String),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExprError {
    Syntax { offset: usize, message: String },
    UnknownVariable(String),
    NegativeExponent { offset: usize },
    NotDivisible,
    DivisionByZero,
}

impl fmt::Display for ExprError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExprError::Syntax { offset, message } => {
                write!(f, "syntax error at byte {offset}: {message}")
            }
            ExprError::UnknownVariable(name) => write!(f, "unknown variable `{name}`"),
            ExprError::NegativeExponent { offset } => {
                write!(f, "negative exponent at byte {offset}")
            }
            ExprError::NotDivisible => write!(f, "division is not exact in this ring"),
            ExprError::DivisionByZero => write!(f, "division by zero"),
        }
    }
}

impl std::error::Error for ExprError {}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn lex(src: &str) -> Result<Vec<(usize, Tok)>, ExprError> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        match c {
            ' ' | '\t' => i += 1,
            '+' => {
                out.push((i, Tok::Plus));
                i += 1;
            }
            '-' => {
                out.push((i, Tok::Minus));
                i += 1;
            }
            '*' => {
                out.push((i, Tok::Star));
                i += 1;
            }
            '/' => {
                out.push((i, Tok::Slash));
                i += 1;
            }
            '^' => {
                out.push((i, Tok::Caret));
                i += 1;
            }
            '(' => {
                out.push((i, Tok::LParen));
                i += 1;
            }
            ')' => {
                out.push((i, Tok::RParen));
                i += 1;
            }
            '0'..='9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let n: BigInt = src[start..i].parse().expect("digits");
                out.push((start, Tok::Int(n)));
            }
            'a'..='z' | 'A'..='Z' | '_' => {
                let start = i;
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push((start, Tok::Ident(src[start..i].to_string())));
            }
            other => {
                return Err(ExprError::Syntax {
                    offset: i,
                    message: format!("unexpected character `{other}`"),
                })
            }
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(o, _)| *o)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(_, t)| t.clone());
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, want: Tok, what: &str) -> Result<(), ExprError> {
        if self.peek() == Some(&want) {
            self.pos += 1;
            Ok(())
        } else {
            Err(ExprError::Syntax {
                offset: self.offset(),
                message: format!("expected {what}"),
            })
        }
    }

    fn expr(&mut self) -> Result<Expr, ExprError> {
        let mut lhs = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<Expr, ExprError> {
        let mut lhs = self.unary()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.pos += 1;
                    lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?));
                }
                Some(Tok::Slash) => {
                    self.pos += 1;
                    lhs = Expr::Div(Box::new(lhs), Box::new(self.unary()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn unary(&mut self) -> Result<Expr, ExprError> {
        if self.peek() == Some(&Tok::Minus) {
            self.pos += 1;
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr, ExprError> {
        let base = self.atom()?;
        if self.peek() == Some(&Tok::Caret) {
            self.pos += 1;
            let off = self.offset();
            match self.bump() {
                Some(Tok::Int(n)) => {
                    let e: u32 = n.try_into().map_err(|_| ExprError::Syntax {
                        offset: off,
                        message: "exponent too large".into(),
                    })?;
                    return Ok(Expr::Pow(Box::new(base), e));
                }
                Some(Tok::Minus) => return Err(ExprError::NegativeExponent { offset: off }),
                _ => {
                    return Err(ExprError::Syntax {
                        offset: off,
                        message: "expected a nonnegative integer exponent".into(),
                    })
                }
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Expr, ExprError> {
        let off = self.offset();
        match self.bump() {
            Some(Tok::Int(n)) => Ok(Expr::Int(n)),
            Some(Tok::Ident(name)) => Ok(Expr::Var(name)),
            Some(Tok::LParen) => {
                let inner = self.expr()?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(inner)
            }
            other => Err(ExprError::Syntax {
                offset: off,
                message: match other {
                    Some(_) => "expected a value".into(),
                    None => "unexpected end of input".into(),
                },
            }),
        }
    }
}

pub fn parse(src: &str) -> Result<Expr, ExprError> {
    let toks = lex(src)?;
    let mut p = Parser {
        toks,
        pos: 0,
        end: src.len(),
    };
    let e = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(ExprError::Syntax {
            offset: p.offset(),
            message: "trailing input".into(),
        });
    }
    Ok(e)
}

/// Evaluates an expression in a GCD-domain instance; variables resolve
/// through the given lookup.
pub fn eval<A: GcdDomain>(
    ring: &A,
    lookup: &dyn Fn(&str) -> Option<A::Elem>,
    e: &Expr,
) -> Result<A::Elem, ExprError> {
    match e {
        Expr::Int(n) => Ok(ring.from_int(n)),
        Expr::Var(name) => lookup(name).ok_or_else(|| ExprError::UnknownVariable(name.clone())),
        Expr::Neg(x) => Ok(ring.neg(&eval(ring, lookup, x)?)),
        Expr::Add(x, y) => Ok(ring.add(&eval(ring, lookup, x)?, &eval(ring, lookup, y)?)),
        Expr::Sub(x, y) => Ok(ring.sub(&eval(ring, lookup, x)?, &eval(ring, lookup, y)?)),
        Expr::Mul(x, y) => Ok(ring.mul(&eval(ring, lookup, x)?, &eval(ring, lookup, y)?)),
        Expr::Div(x, y) => {
            let num = eval(ring, lookup, x)?;
            let den = eval(ring, lookup, y)?;
            if ring.is_zero(&den) {
                return Err(ExprError::DivisionByZero);
            }
            ring.exact_div(&num, &den).ok_or(ExprError::NotDivisible)
        }
        Expr::Pow(x, e) => Ok(ring.pow(&eval(ring, lookup, x)?, *e)),
    }
}

/// Evaluates an expression as an element of a quadratic ring; `w` is the
/// generator.
pub fn eval_quad(ring: &QuadRing, e: &Expr) -> Result<QuadElement, ExprError> {
    match e {
        Expr::Int(n) => Ok(QuadElement::new(n.clone(), 0.into())),
        Expr::Var(name) if name == "w" => Ok(ring.omega()),
        Expr::Var(name) => Err(ExprError::UnknownVariable(name.clone())),
        Expr::Neg(x) => Ok(ring.neg(&eval_quad(ring, x)?)),
        Expr::Add(x, y) => Ok(ring.add(&eval_quad(ring, x)?, &eval_quad(ring, y)?)),
        Expr::Sub(x, y) => Ok(ring.sub(&eval_quad(ring, x)?, &eval_quad(ring, y)?)),
        Expr::Mul(x, y) => Ok(ring.mul(&eval_quad(ring, x)?, &eval_quad(ring, y)?)),
        Expr::Div(x, y) => {
            let num = eval_quad(ring, x)?;
            let den = eval_quad(ring, y)?;
            if den.is_zero() {
                return Err(ExprError::DivisionByZero);
            }
            ring.exact_div(&num, &den).ok_or(ExprError::NotDivisible)
        }
        Expr::Pow(x, e) => Ok(ring.pow(&eval_quad(ring, x)?, *e)),
    }
}

/// Evaluates an expression as a polynomial in `X` over a GCD-domain
/// instance (for the A[X] verbs). Other variables resolve to constants
/// through the lookup; division is allowed by constants only.
pub fn eval_unipoly<A: GcdDomain>(
    ring: &A,
    lookup: &dyn Fn(&str) -> Option<A::Elem>,
    e: &Expr,
) -> Result<UniPoly<A::Elem>, ExprError> {
    match e {
        Expr::Int(n) => Ok(UniPoly::constant(ring, ring.from_int(n))),
        Expr::Var(name) if name == "X" => {
            Ok(UniPoly::from_coeffs(ring, vec![ring.zero(), ring.one()]))
        }
        Expr::Var(name) => lookup(name)
            .map(|c| UniPoly::constant(ring, c))
            .ok_or_else(|| ExprError::UnknownVariable(name.clone())),
        Expr::Neg(x) => Ok(eval_unipoly(ring, lookup, x)?.neg(ring)),
        Expr::Add(x, y) => {
            Ok(eval_unipoly(ring, lookup, x)?.add(ring, &eval_unipoly(ring, lookup, y)?))
        }
        Expr::Sub(x, y) => {
            Ok(eval_unipoly(ring, lookup, x)?.sub(ring, &eval_unipoly(ring, lookup, y)?))
        }
        Expr::Mul(x, y) => {
            Ok(eval_unipoly(ring, lookup, x)?.mul(ring, &eval_unipoly(ring, lookup, y)?))
        }
        Expr::Div(x, y) => {
            let num = eval_unipoly(ring, lookup, x)?;
            let den = eval_unipoly(ring, lookup, y)?;
            let c = match den.degree() {
                None => return Err(ExprError::DivisionByZero),
                Some(0) => den.coeffs()[0].clone(),
                Some(_) => return Err(ExprError::NotDivisible),
            };
            let coeffs: Option<Vec<A::Elem>> =
                num.coeffs().iter().map(|a| ring.exact_div(a, &c)).collect();
            coeffs
                .map(|cs| UniPoly::from_coeffs(ring, cs))
                .ok_or(ExprError::NotDivisible)
        }
        Expr::Pow(x, e) => {
            let base = eval_unipoly(ring, lookup, x)?;
            let mut acc = UniPoly::constant(ring, ring.one());
            for _ in 0..*e {
                acc = acc.mul(ring, &base);
            }
            Ok(acc)
        }
    }
}
