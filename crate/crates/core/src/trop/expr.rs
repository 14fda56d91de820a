//! Subtraction-free rational expressions.
//!
//! Grammar: `expr := term ('+' term)*`, `term := factor (('*'|'/') factor)*`,
//! `factor := base ('^' int)?`, `base := int | ident | '(' expr ')'`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ExprError {
    #[error("subtraction is not allowed (position {0})")]
    SubtractionForbidden(usize),
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("variable `{0}` is unassigned")]
    Unassigned(String),
    #[error("division by zero while evaluating")]
    DivisionByZero,
    #[error("line {line}: {msg}")]
    File { line: usize, msg: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum PosExpr {
    Const(BigUint),
    Var(String),
    Add(Box<PosExpr>, Box<PosExpr>),
    Mul(Box<PosExpr>, Box<PosExpr>),
    Div(Box<PosExpr>, Box<PosExpr>),
    Pow(Box<PosExpr>, u32),
}

impl PosExpr {
    pub fn var(name: &str) -> Self {
        PosExpr::Var(name.to_string())
    }

    pub fn constant(k: u64) -> Self {
        assert!(k > 0, "constants are positive");
        PosExpr::Const(BigUint::from(k))
    }

    pub fn add(a: PosExpr, b: PosExpr) -> Self {
        PosExpr::Add(Box::new(a), Box::new(b))
    }

    pub fn mul(a: PosExpr, b: PosExpr) -> Self {
        PosExpr::Mul(Box::new(a), Box::new(b))
    }

    pub fn div(a: PosExpr, b: PosExpr) -> Self {
        PosExpr::Div(Box::new(a), Box::new(b))
    }

    pub fn pow(a: PosExpr, k: u32) -> Self {
        PosExpr::Pow(Box::new(a), k)
    }

    pub fn variables(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_vars(&mut out);
        out
    }

    fn collect_vars(&self, out: &mut BTreeSet<String>) {
        match self {
            PosExpr::Const(_) => {}
            PosExpr::Var(v) => {
                out.insert(v.clone());
            }
            PosExpr::Add(a, b) | PosExpr::Mul(a, b) | PosExpr::Div(a, b) => {
                a.collect_vars(out);
                b.collect_vars(out);
            }
            PosExpr::Pow(a, _) => a.collect_vars(out),
        }
    }

    /// Top-level summands, flattening left-nested sums.
    pub fn summands(&self) -> Vec<&PosExpr> {
        match self {
            PosExpr::Add(a, b) => {
                let mut v = a.summands();
                v.extend(b.summands());
                v
            }
            e => vec![e],
        }
    }

    /// Replaces variables that name an entry of `defs` by that entry.
    pub fn substitute(&self, defs: &BTreeMap<String, PosExpr>) -> PosExpr {
        match self {
            PosExpr::Var(v) => defs.get(v).cloned().unwrap_or_else(|| self.clone()),
            PosExpr::Const(_) => self.clone(),
            PosExpr::Add(a, b) => PosExpr::add(a.substitute(defs), b.substitute(defs)),
            PosExpr::Mul(a, b) => PosExpr::mul(a.substitute(defs), b.substitute(defs)),
            PosExpr::Div(a, b) => PosExpr::div(a.substitute(defs), b.substitute(defs)),
            PosExpr::Pow(a, k) => PosExpr::pow(a.substitute(defs), *k),
        }
    }

    pub fn eval<F>(&self, env: &F) -> Result<BigRational, ExprError>
    where
        F: Fn(&str) -> Option<BigRational>,
    {
        Ok(match self {
            PosExpr::Const(k) => BigRational::from_integer(BigInt::from(k.clone())),
            PosExpr::Var(v) => env(v).ok_or_else(|| ExprError::Unassigned(v.clone()))?,
            PosExpr::Add(a, b) => a.eval(env)? + b.eval(env)?,
            PosExpr::Mul(a, b) => a.eval(env)? * b.eval(env)?,
            PosExpr::Div(a, b) => {
                let d = b.eval(env)?;
                if d.is_zero() {
                    return Err(ExprError::DivisionByZero);
                }
                a.eval(env)? / d
            }
            PosExpr::Pow(a, k) => {
                let base = a.eval(env)?;
                let mut acc = BigRational::one();
                for _ in 0..*k {
                    acc *= &base;
                }
                acc
            }
        })
    }

    pub fn eval_map(&self, env: &BTreeMap<String, BigRational>) -> Result<BigRational, ExprError> {
        self.eval(&|v: &str| env.get(v).cloned())
    }

    fn prec(&self) -> u8 {
        match self {
            PosExpr::Add(..) => 1,
            PosExpr::Mul(..) | PosExpr::Div(..) => 2,
            PosExpr::Pow(..) => 3,
            _ => 4,
        }
    }
}

impl fmt::Display for PosExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let wrap = |e: &PosExpr, min: u8, f: &mut fmt::Formatter<'_>| {
            if e.prec() < min {
                write!(f, "({e})")
            } else {
                write!(f, "{e}")
            }
        };
        match self {
            PosExpr::Const(k) => write!(f, "{k}"),
            PosExpr::Var(v) => write!(f, "{v}"),
            PosExpr::Add(a, b) => {
                wrap(a, 1, f)?;
                write!(f, " + ")?;
                wrap(b, 2, f)
            }
            PosExpr::Mul(a, b) => {
                wrap(a, 2, f)?;
                write!(f, "*")?;
                wrap(b, 3, f)
            }
            PosExpr::Div(a, b) => {
                wrap(a, 2, f)?;
                write!(f, "/")?;
                wrap(b, 3, f)
            }
            PosExpr::Pow(a, k) => {
                wrap(a, 4, f)?;
                write!(f, "^{k}")
            }
        }
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T, ExprError> {
        Err(ExprError::Parse { pos: self.pos, msg: msg.into() })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<PosExpr, ExprError> {
        let mut acc = self.term()?;
        while self.peek() == Some(b'+') {
            self.pos += 1;
            acc = PosExpr::add(acc, self.term()?);
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<PosExpr, ExprError> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    acc = PosExpr::mul(acc, self.factor()?);
                }
                Some(b'/') => {
                    self.pos += 1;
                    acc = PosExpr::div(acc, self.factor()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<PosExpr, ExprError> {
        let base = self.base()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let start = self.pos;
            while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                self.pos += 1;
            }
            if start == self.pos {
                return self.err("expected an integer exponent");
            }
            let text = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
            let k: u32 = text.parse().map_err(|_| ExprError::Parse { pos: start, msg: "exponent too large".into() })?;
            return Ok(PosExpr::pow(base, k));
        }
        Ok(base)
    }

    fn base(&mut self) -> Result<PosExpr, ExprError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(b')') {
                    return self.err("expected `)`");
                }
                self.pos += 1;
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                let text = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                let k: BigUint = text.parse().unwrap();
                if k.is_zero() {
                    return Err(ExprError::Parse { pos: start, msg: "constants must be positive".into() });
                }
                Ok(PosExpr::Const(k))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self.pos < self.src.len() && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_') {
                    self.pos += 1;
                }
                Ok(PosExpr::Var(std::str::from_utf8(&self.src[start..self.pos]).unwrap().to_string()))
            }
            Some(_) => self.err("unexpected character"),
            None => self.err("unexpected end of input"),
        }
    }
}

pub fn parse(text: &str) -> Result<PosExpr, ExprError> {
    if let Some((pos, _)) = text.char_indices().find(|&(_, c)| c == '-' || c == '\u{2212}') {
        return Err(ExprError::SubtractionForbidden(pos));
    }
    if let Some((pos, _)) = text.char_indices().find(|&(_, c)| !c.is_ascii()) {
        return Err(ExprError::Parse { pos, msg: "non-ASCII character".into() });
    }
    let mut p = Parser { src: text.as_bytes(), pos: 0 };
    let e = p.expr()?;
    if p.peek().is_some() {
        return p.err("trailing input");
    }
    Ok(e)
}

/// Parses either a bare expression (named `expr`) or `name = expr` definitions.
/// Lines without `=` continue the previous definition; `#` starts a comment.
/// A name used inside a later definition is replaced by its expression.
pub fn parse_named(text: &str) -> Result<Vec<(String, PosExpr)>, ExprError> {
    let body: Vec<(usize, &str)> = text
        .lines()
        .enumerate()
        .map(|(k, l)| (k + 1, l.split('#').next().unwrap_or("")))
        .filter(|(_, l)| !l.trim().is_empty())
        .collect();
    if !body.iter().any(|(_, l)| l.contains('=')) {
        let joined: Vec<&str> = body.iter().map(|(_, l)| *l).collect();
        return Ok(vec![("expr".to_string(), parse(&joined.join(" "))?)]);
    }
    let mut raw: Vec<(usize, String, String)> = Vec::new();
    for (line, l) in body {
        if let Some((name, rhs)) = l.split_once('=') {
            let name = name.trim();
            if name.is_empty() || !name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_') {
                return Err(ExprError::File { line, msg: format!("bad name `{name}`") });
            }
            raw.push((line, name.to_string(), rhs.to_string()));
        } else if let Some(last) = raw.last_mut() {
            last.2.push(' ');
            last.2.push_str(l);
        } else {
            return Err(ExprError::File { line, msg: "continuation before any definition".into() });
        }
    }
    let mut defs: BTreeMap<String, PosExpr> = BTreeMap::new();
    let mut out = Vec::new();
    for (line, name, rhs) in raw {
        let e = parse(&rhs).map_err(|e| ExprError::File { line, msg: e.to_string() })?.substitute(&defs);
        defs.insert(name.clone(), e.clone());
        out.push((name, e));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_shapes() {
        let e = parse("c*x0/x1").unwrap();
        assert_eq!(e, PosExpr::div(PosExpr::mul(PosExpr::var("c"), PosExpr::var("x0")), PosExpr::var("x1")));
        let s = parse("x0/x1 + x0*x2/(x1^2*x3)").unwrap();
        assert_eq!(s.summands().len(), 2);
        assert_eq!(parse("x0 - x1"), Err(ExprError::SubtractionForbidden(3)));
        assert_eq!(parse("x0^-1"), Err(ExprError::SubtractionForbidden(3)));
        assert!(matches!(parse("x0 + "), Err(ExprError::Parse { pos: 5, .. })));
        assert!(matches!(parse("(x0"), Err(ExprError::Parse { .. })));
        assert!(matches!(parse("0*x1"), Err(ExprError::Parse { pos: 0, .. })));
        assert!(matches!(parse("x1 x2"), Err(ExprError::Parse { pos: 3, .. })));
    }

    #[test]
    fn display_round_trip() {
        for s in ["c*x0/x1", "x0/x1 + x0*x2/(x1^2*x3)", "(a + b)^3/(c*(d + 2))", "a/(b/c)", "a/b/c"] {
            let e = parse(s).unwrap();
            assert_eq!(parse(&e.to_string()).unwrap(), e, "{s}");
        }
    }

    #[test]
    fn evaluation() {
        let e = parse("(x + 1)^2/(3*y)").unwrap();
        let v = e
            .eval(&|n: &str| match n {
                "x" => Some(BigRational::from_integer(2.into())),
                "y" => Some(BigRational::new(1.into(), 2.into())),
                _ => None,
            })
            .unwrap();
        assert_eq!(v, BigRational::from_integer(6.into()));
        assert_eq!(parse("z").unwrap().eval(&|_: &str| None), Err(ExprError::Unassigned("z".into())));
    }

    #[test]
    fn named_definitions() {
        let defs = parse_named("# demo\nA = x + y\nB = A*\n  z\n").unwrap();
        assert_eq!(defs.len(), 2);
        assert_eq!(defs[1].1, parse("(x + y)*z").unwrap());
        let single = parse_named("x*y\n").unwrap();
        assert_eq!(single[0].0, "expr");
    }
}
