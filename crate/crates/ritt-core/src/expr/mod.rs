//! Expression grammar shared by the CLI and the JSON formats.
//!
//! Terms: rationals `p/q`, roots of unity `zeta<k>^<j>`, the variable `z`,
//! operators `+ - * / ^` (integer exponents, negative allowed), builders
//! `T(n)`, `D(n)`, `pow(n)`, and right-associative composition `@`.
//! All numbers are exact; nothing here ever touches floating point.

use crate::error::{Error, Result};
use crate::num::{Cyclo, Rat};
use crate::poly::{chebyshev, laurent_d, Laurent, Poly, RatFunc};
use num_bigint::BigInt;
use std::fmt;
use std::str::FromStr;

#[derive(Clone, Debug, PartialEq)]
pub enum Expr {
    Num(Rat),
    Zeta { k: u32, j: i64 },
    Var,
    Cheb(u32),
    DLaurent(u32),
    PowMap(u32),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, i64),
    Compose(Box<Expr>, Box<Expr>),
}

/// A parsed expression elaborates to exactly one of these.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum FuncVal {
    Poly(Poly),
    Laurent(Laurent),
    Rat(RatFunc),
}

impl FuncVal {
    pub fn to_ratfunc(&self) -> RatFunc {
        match self {
            FuncVal::Poly(p) => RatFunc::from_poly(p.clone()),
            FuncVal::Laurent(l) => RatFunc::from_laurent(l),
            FuncVal::Rat(r) => r.clone(),
        }
    }

    pub fn classify(f: RatFunc) -> FuncVal {
        if let Some(p) = f.as_poly() {
            FuncVal::Poly(p)
        } else if let Some(l) = f.as_laurent() {
            FuncVal::Laurent(l)
        } else {
            FuncVal::Rat(f)
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    At,
    LParen,
    RParen,
    Comma,
}

struct Lexer {
    toks: Vec<(Tok, usize)>, // token and starting column (1-based)
}

fn lex(src: &str) -> Result<Lexer> {
    let mut toks = Vec::new();
    let chars: Vec<char> = src.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let col = i + 1;
        let ch = chars[i];
        match ch {
            ' ' | '\t' | '\n' | '\r' => {
                i += 1;
            }
            '+' => {
                toks.push((Tok::Plus, col));
                i += 1;
            }
            '-' => {
                toks.push((Tok::Minus, col));
                i += 1;
            }
            '*' => {
                toks.push((Tok::Star, col));
                i += 1;
            }
            '/' => {
                toks.push((Tok::Slash, col));
                i += 1;
            }
            '^' => {
                toks.push((Tok::Caret, col));
                i += 1;
            }
            '@' => {
                toks.push((Tok::At, col));
                i += 1;
            }
            '(' => {
                toks.push((Tok::LParen, col));
                i += 1;
            }
            ')' => {
                toks.push((Tok::RParen, col));
                i += 1;
            }
            ',' => {
                toks.push((Tok::Comma, col));
                i += 1;
            }
            '0'..='9' => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let s: String = chars[start..i].iter().collect();
                toks.push((Tok::Int(BigInt::from_str(&s).unwrap()), col));
            }
            'a'..='z' | 'A'..='Z' => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_alphanumeric() {
                    i += 1;
                }
                let s: String = chars[start..i].iter().collect();
                toks.push((Tok::Ident(s), col));
            }
            _ => {
                return Err(Error::Parse {
                    line: 1,
                    col,
                    msg: format!("unexpected character `{ch}`"),
                })
            }
        }
    }
    Ok(Lexer { toks })
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    end_col: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn col(&self) -> usize {
        self.toks
            .get(self.pos)
            .map(|&(_, c)| c)
            .unwrap_or(self.end_col)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(t, _)| t.clone());
        self.pos += 1;
        t
    }

    fn err(&self, msg: impl Into<String>) -> Error {
        Error::Parse {
            line: 1,
            col: self.col(),
            msg: msg.into(),
        }
    }

    fn expect(&mut self, t: Tok, what: &str) -> Result<()> {
        if self.peek() == Some(&t) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.err(format!("expected {what}")))
        }
    }

    // compose := additive ('@' compose)?   (right-associative)
    fn compose(&mut self) -> Result<Expr> {
        let lhs = self.additive()?;
        if self.peek() == Some(&Tok::At) {
            self.pos += 1;
            let rhs = self.compose()?;
            return Ok(Expr::Compose(Box::new(lhs), Box::new(rhs)));
        }
        Ok(lhs)
    }

    fn additive(&mut self) -> Result<Expr> {
        let mut acc = self.multiplicative()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    let rhs = self.multiplicative()?;
                    acc = Expr::Add(Box::new(acc), Box::new(rhs));
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    let rhs = self.multiplicative()?;
                    acc = Expr::Sub(Box::new(acc), Box::new(rhs));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn multiplicative(&mut self) -> Result<Expr> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.pos += 1;
                    let rhs = self.unary()?;
                    acc = Expr::Mul(Box::new(acc), Box::new(rhs));
                }
                Some(Tok::Slash) => {
                    self.pos += 1;
                    let rhs = self.unary()?;
                    acc = Expr::Div(Box::new(acc), Box::new(rhs));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<Expr> {
        if self.peek() == Some(&Tok::Minus) {
            self.pos += 1;
            let e = self.unary()?;
            return Ok(Expr::Neg(Box::new(e)));
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr> {
        let base = self.atom()?;
        if self.peek() == Some(&Tok::Caret) {
            self.pos += 1;
            let e = self.signed_int()?;
            return Ok(Expr::Pow(Box::new(base), e));
        }
        Ok(base)
    }

    fn signed_int(&mut self) -> Result<i64> {
        let mut neg = false;
        let mut parens = false;
        if self.peek() == Some(&Tok::LParen) {
            self.pos += 1;
            parens = true;
        }
        if self.peek() == Some(&Tok::Minus) {
            self.pos += 1;
            neg = true;
        }
        let v = match self.bump() {
            Some(Tok::Int(n)) => {
                i64::from_str(&n.to_string()).map_err(|_| self.err("exponent too large"))?
            }
            _ => return Err(self.err("expected integer exponent")),
        };
        if parens {
            self.expect(Tok::RParen, "`)` after exponent")?;
        }
        Ok(if neg { -v } else { v })
    }

    fn uint_arg(&mut self, what: &str) -> Result<u32> {
        self.expect(Tok::LParen, "`(`")?;
        let v = match self.bump() {
            Some(Tok::Int(n)) => {
                u32::from_str(&n.to_string()).map_err(|_| self.err(format!("{what} too large")))?
            }
            _ => return Err(self.err(format!("expected integer argument to {what}"))),
        };
        self.expect(Tok::RParen, "`)`")?;
        Ok(v)
    }

    fn atom(&mut self) -> Result<Expr> {
        match self.peek().cloned() {
            Some(Tok::Int(n)) => {
                self.pos += 1;
                Ok(Expr::Num(Rat::new(n, BigInt::from(1)).unwrap()))
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let e = self.compose()?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(e)
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                match name.as_str() {
                    "z" => Ok(Expr::Var),
                    "T" => Ok(Expr::Cheb(self.uint_arg("T")?)),
                    "D" => Ok(Expr::DLaurent(self.uint_arg("D")?)),
                    "pow" => Ok(Expr::PowMap(self.uint_arg("pow")?)),
                    _ if name.starts_with("zeta") => {
                        let k: u32 = name[4..]
                            .parse()
                            .map_err(|_| self.err("malformed zeta conductor"))?;
                        if k == 0 {
                            return Err(self.err("zeta conductor must be positive"));
                        }
                        let j = if self.peek() == Some(&Tok::Caret) {
                            self.pos += 1;
                            self.signed_int()?
                        } else {
                            1
                        };
                        Ok(Expr::Zeta { k, j })
                    }
                    _ => Err(self.err(format!("unknown identifier `{name}`"))),
                }
            }
            _ => Err(self.err("expected expression")),
        }
    }
}

pub fn parse(src: &str) -> Result<Expr> {
    let lx = lex(src)?;
    let end_col = src.chars().count() + 1;
    let mut p = Parser {
        toks: lx.toks,
        pos: 0,
        end_col,
    };
    let e = p.compose()?;
    if p.pos != p.toks.len() {
        return Err(p.err("trailing input"));
    }
    Ok(e)
}

/// Elaborate an AST to an exact rational function.
pub fn elaborate(e: &Expr) -> Result<RatFunc> {
    match e {
        Expr::Num(r) => Ok(RatFunc::constant(Cyclo::from_rat(r.clone()))),
        Expr::Zeta { k, j } => Ok(RatFunc::constant(Cyclo::root_of_unity(*k, *j))),
        Expr::Var => Ok(RatFunc::var()),
        Expr::Cheb(n) => Ok(RatFunc::from_poly(chebyshev(*n))),
        Expr::DLaurent(n) => {
            if *n == 0 {
                return Err(Error::domain("D(0) is not defined"));
            }
            Ok(RatFunc::from_laurent(&laurent_d(*n)))
        }
        Expr::PowMap(n) => Ok(RatFunc::from_poly(Poly::monomial(
            Cyclo::one(),
            *n as usize,
        ))),
        Expr::Neg(x) => Ok(elaborate(x)?.neg()),
        Expr::Add(a, b) => Ok(elaborate(a)?.add(&elaborate(b)?)),
        Expr::Sub(a, b) => Ok(elaborate(a)?.sub(&elaborate(b)?)),
        Expr::Mul(a, b) => Ok(elaborate(a)?.mul(&elaborate(b)?)),
        Expr::Div(a, b) => elaborate(a)?.div(&elaborate(b)?),
        Expr::Pow(a, e) => elaborate(a)?.pow(*e),
        Expr::Compose(f, g) => {
            let fv = elaborate(f)?;
            let gv = elaborate(g)?;
            if gv.is_constant() && !fv.is_constant() {
                return Err(Error::domain("composition with constant inner function"));
            }
            fv.compose(&gv)
        }
    }
}

pub fn parse_func(src: &str) -> Result<FuncVal> {
    Ok(FuncVal::classify(elaborate(&parse(src)?)?))
}

pub fn parse_ratfunc(src: &str) -> Result<RatFunc> {
    elaborate(&parse(src)?)
}

pub fn parse_poly(src: &str) -> Result<Poly> {
    match parse_func(src)? {
        FuncVal::Poly(p) => Ok(p),
        _ => Err(Error::domain("expression is not a polynomial")),
    }
}

pub fn parse_laurent(src: &str) -> Result<Laurent> {
    match parse_func(src)? {
        FuncVal::Poly(p) => Ok(Laurent::from_poly(&p)),
        FuncVal::Laurent(l) => Ok(l),
        _ => Err(Error::domain("expression is not a Laurent polynomial")),
    }
}

pub fn parse_scalar(src: &str) -> Result<Cyclo> {
    let f = parse_ratfunc(src)?;
    if !f.is_constant() {
        return Err(Error::domain("expression is not a scalar"));
    }
    match f.eval_proj(&crate::poly::ProjValue::Finite(Cyclo::zero())) {
        crate::poly::ProjValue::Finite(c) => Ok(c),
        crate::poly::ProjValue::Inf => Err(Error::DivisionByZero),
    }
}

fn print_coeff_times(c: &Cyclo, mon: &str, lead: bool, out: &mut String) {
    use fmt::Write;
    let s = c.to_string();
    let simple = c.as_rat().is_some() || !(s.contains('+') || s.contains('-'));
    if mon.is_empty() {
        if !lead && !s.starts_with('-') {
            out.push('+');
        }
        if simple {
            write!(out, "{s}").unwrap();
        } else {
            if !lead {
                // sign already emitted
            }
            write!(out, "({s})").unwrap();
        }
        return;
    }
    if simple {
        if c.is_one() {
            if !lead {
                out.push('+');
            }
            write!(out, "{mon}").unwrap();
            return;
        }
        if *c == Cyclo::from_int(-1) {
            write!(out, "-{mon}").unwrap();
            return;
        }
        if !lead && !s.starts_with('-') {
            out.push('+');
        }
        write!(out, "{s}*{mon}").unwrap();
    } else {
        if !lead {
            out.push('+');
        }
        write!(out, "({s})*{mon}").unwrap();
    }
}

pub fn print_poly(p: &Poly) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    let mut lead = true;
    for i in (0..=p.degree()).rev() {
        let c = p.coeff(i);
        if c.is_zero() {
            continue;
        }
        let mon = match i {
            0 => String::new(),
            1 => "z".to_string(),
            _ => format!("z^{i}"),
        };
        print_coeff_times(&c, &mon, lead, &mut out);
        lead = false;
    }
    out
}

pub fn print_laurent(l: &Laurent) -> String {
    if l.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    let mut lead = true;
    let mut exps = l.support();
    exps.reverse();
    for e in exps {
        let c = l.coeff(e);
        let mon = match e {
            0 => String::new(),
            1 => "z".to_string(),
            _ => format!("z^{e}"),
        };
        print_coeff_times(&c, &mon, lead, &mut out);
        lead = false;
    }
    out
}

pub fn print_ratfunc(f: &RatFunc) -> String {
    if let Some(p) = f.as_poly() {
        return print_poly(&p);
    }
    if let Some(l) = f.as_laurent() {
        return print_laurent(&l);
    }
    format!("({})/({})", print_poly(f.num()), print_poly(f.den()))
}

pub fn print_func(v: &FuncVal) -> String {
    match v {
        FuncVal::Poly(p) => print_poly(p),
        FuncVal::Laurent(l) => print_laurent(l),
        FuncVal::Rat(r) => print_ratfunc(r),
    }
}

pub fn print_cyclo(c: &Cyclo) -> String {
    c.to_string()
}
