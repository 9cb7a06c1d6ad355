//! Expression grammar shared by equation input and solution output.
//!
//! ```text
//! equation := sum ('=' sum)?
//! sum      := product (('+' | '-') product)*
//! product  := unary (('*' | '/') unary)*
//! unary    := ('-' | '+') unary | power
//! power    := atom ('^' unary)?
//! atom     := number | 'x' | 'y' '\''* | func '(' sum (',' 'x')? ')' | '(' sum ')'
//! func     := 'exp' | 'ln' | 'sqrt' | 'int'
//! ```

use std::fmt;

use kovacic::{Error, OdeInput, Rational, RationalFunction, Result, SurdNumber};
use num_bigint::BigInt;
use num_traits::{One, Zero};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Func {
    Exp,
    Ln,
    Sqrt,
    /// `int(f, x)`.
    Int,
}

impl Func {
    fn name(&self) -> &'static str {
        match self {
            Func::Exp => "exp",
            Func::Ln => "ln",
            Func::Sqrt => "sqrt",
            Func::Int => "int",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Num(Rational),
    X,
    /// `y`, `y'`, `y''` by derivative order.
    Y(u8),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, Box<Expr>),
    Call(Func, Box<Expr>),
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Num(q) => write!(f, "{q}"),
            Expr::X => write!(f, "x"),
            Expr::Y(k) => write!(f, "y{}", "'".repeat(*k as usize)),
            Expr::Neg(a) => write!(f, "(-{a})"),
            Expr::Add(a, b) => write!(f, "({a} + {b})"),
            Expr::Sub(a, b) => write!(f, "({a} - {b})"),
            Expr::Mul(a, b) => write!(f, "({a}*{b})"),
            Expr::Div(a, b) => write!(f, "({a}/{b})"),
            Expr::Pow(a, b) => write!(f, "({a}^{b})"),
            Expr::Call(Func::Int, a) => write!(f, "int({a}, x)"),
            Expr::Call(func, a) => write!(f, "{}({a})", func.name()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Num(Rational),
    Ident(String),
    Y(u8),
    Op(char),
}

fn parse_err(pos: usize, message: impl Into<String>) -> Error {
    Error::Parse { pos, message: message.into() }
}

fn tokenize(src: &str) -> Result<Vec<(usize, Tok)>> {
    let chars: Vec<(usize, char)> = src.char_indices().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let (pos, c) = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() || c == '.' {
            let start = i;
            while i < chars.len() && (chars[i].1.is_ascii_digit() || chars[i].1 == '.') {
                i += 1;
            }
            let text: String = chars[start..i].iter().map(|(_, c)| c).collect();
            out.push((pos, Tok::Num(parse_number(&text).ok_or_else(|| parse_err(pos, format!("bad number `{text}`")))?)));
        } else if c.is_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].1.is_alphanumeric() || chars[i].1 == '_') {
                i += 1;
            }
            let name: String = chars[start..i].iter().map(|(_, c)| c).collect();
            if name == "y" {
                let mut primes = 0u8;
                while i < chars.len() && chars[i].1 == '\'' {
                    primes += 1;
                    i += 1;
                }
                if primes > 2 {
                    return Err(parse_err(pos, "derivatives above the second are not allowed"));
                }
                out.push((pos, Tok::Y(primes)));
            } else {
                out.push((pos, Tok::Ident(name)));
            }
        } else if "+-*/^(),=".contains(c) {
            out.push((pos, Tok::Op(c)));
            i += 1;
        } else {
            return Err(parse_err(pos, format!("unexpected character `{c}`")));
        }
    }
    Ok(out)
}

fn parse_number(text: &str) -> Option<Rational> {
    match text.split_once('.') {
        None => text.parse::<BigInt>().ok().map(Rational::from_integer),
        Some((int, frac)) => {
            if frac.contains('.') || (int.is_empty() && frac.is_empty()) {
                return None;
            }
            let digits = format!("{int}{frac}");
            let n = digits.parse::<BigInt>().ok()?;
            Some(Rational::new(n, BigInt::from(10).pow(frac.len() as u32)))
        }
    }
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    at: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|(_, t)| t)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.at).map_or(self.end, |(p, _)| *p)
    }

    fn eat(&mut self, op: char) -> bool {
        if self.peek() == Some(&Tok::Op(op)) {
            self.at += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, op: char) -> Result<()> {
        if self.eat(op) {
            Ok(())
        } else {
            Err(parse_err(self.pos(), format!("expected `{op}`")))
        }
    }

    fn sum(&mut self) -> Result<Expr> {
        let mut acc = self.product()?;
        loop {
            if self.eat('+') {
                acc = Expr::Add(Box::new(acc), Box::new(self.product()?));
            } else if self.eat('-') {
                acc = Expr::Sub(Box::new(acc), Box::new(self.product()?));
            } else {
                return Ok(acc);
            }
        }
    }

    fn product(&mut self) -> Result<Expr> {
        let mut acc = self.unary()?;
        loop {
            if self.eat('*') {
                acc = Expr::Mul(Box::new(acc), Box::new(self.unary()?));
            } else if self.eat('/') {
                acc = Expr::Div(Box::new(acc), Box::new(self.unary()?));
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<Expr> {
        if self.eat('-') {
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        if self.eat('+') {
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr> {
        let base = self.atom()?;
        if self.eat('^') {
            return Ok(Expr::Pow(Box::new(base), Box::new(self.unary()?)));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Expr> {
        let pos = self.pos();
        let Some((_, tok)) = self.toks.get(self.at).cloned() else {
            return Err(parse_err(pos, "unexpected end of input"));
        };
        self.at += 1;
        match tok {
            Tok::Num(q) => Ok(Expr::Num(q)),
            Tok::Y(k) => Ok(Expr::Y(k)),
            Tok::Op('(') => {
                let e = self.sum()?;
                self.expect(')')?;
                Ok(e)
            }
            Tok::Op(c) => Err(parse_err(pos, format!("unexpected `{c}`"))),
            Tok::Ident(name) => {
                let func = match name.as_str() {
                    "x" => return Ok(Expr::X),
                    "exp" => Func::Exp,
                    "ln" | "log" => Func::Ln,
                    "sqrt" => Func::Sqrt,
                    "int" => Func::Int,
                    _ => return Err(Error::SymbolicCoefficients(name)),
                };
                self.expect('(')?;
                let arg = self.sum()?;
                if func == Func::Int {
                    self.expect(',')?;
                    let var_pos = self.pos();
                    if self.atom()? != Expr::X {
                        return Err(parse_err(var_pos, "integration variable must be x"));
                    }
                }
                self.expect(')')?;
                Ok(Expr::Call(func, Box::new(arg)))
            }
        }
    }
}

fn parse_with_equals(src: &str) -> Result<(Expr, Option<Expr>)> {
    let toks = tokenize(src)?;
    let mut p = Parser { toks, at: 0, end: src.len() };
    let lhs = p.sum()?;
    let rhs = if p.eat('=') { Some(p.sum()?) } else { None };
    if p.at < p.toks.len() {
        return Err(parse_err(p.pos(), "unexpected trailing input"));
    }
    Ok((lhs, rhs))
}

/// Parses an expression without `=`.
pub fn parse_expr(src: &str) -> Result<Expr> {
    match parse_with_equals(src)? {
        (e, None) => Ok(e),
        (_, Some(_)) => Err(parse_err(src.find('=').unwrap_or(0), "`=` is not allowed here")),
    }
}

/// `y`-linear form: coefficients of `y`, `y'`, `y''` and the free term.
struct Linear {
    y: [RationalFunction; 3],
    free: RationalFunction,
}

impl Linear {
    fn free(f: RationalFunction) -> Self {
        Linear { y: [RationalFunction::zero(), RationalFunction::zero(), RationalFunction::zero()], free: f }
    }

    fn has_y(&self) -> bool {
        self.y.iter().any(|c| !c.is_zero())
    }

    fn map(self, g: impl Fn(&RationalFunction) -> RationalFunction) -> Self {
        Linear { y: [g(&self.y[0]), g(&self.y[1]), g(&self.y[2])], free: g(&self.free) }
    }

    fn zip(self, other: Linear, g: impl Fn(&RationalFunction, &RationalFunction) -> RationalFunction) -> Self {
        Linear {
            y: [g(&self.y[0], &other.y[0]), g(&self.y[1], &other.y[1]), g(&self.y[2], &other.y[2])],
            free: g(&self.free, &other.free),
        }
    }
}

fn linearize(e: &Expr) -> Result<Linear> {
    Ok(match e {
        Expr::Num(q) => Linear::free(RationalFunction::constant(SurdNumber::from_rational(q.clone()))),
        Expr::X => Linear::free(RationalFunction::x()),
        Expr::Y(k) => {
            let mut l = Linear::free(RationalFunction::zero());
            l.y[*k as usize] = RationalFunction::one();
            l
        }
        Expr::Neg(a) => linearize(a)?.map(|f| -f),
        Expr::Add(a, b) => linearize(a)?.zip(linearize(b)?, |f, g| f + g),
        Expr::Sub(a, b) => linearize(a)?.zip(linearize(b)?, |f, g| f - g),
        Expr::Mul(a, b) => {
            let (la, lb) = (linearize(a)?, linearize(b)?);
            match (la.has_y(), lb.has_y()) {
                (true, true) => return Err(Error::InvalidInput(format!("`{e}` is not linear in y"))),
                (true, false) => la.map(|f| f * &lb.free),
                _ => lb.map(|f| f * &la.free),
            }
        }
        Expr::Div(a, b) => {
            let (la, lb) = (linearize(a)?, linearize(b)?);
            if lb.has_y() {
                return Err(Error::InvalidInput(format!("`{e}` divides by y")));
            }
            let inv = lb.free.inv()?;
            la.map(|f| f * &inv)
        }
        Expr::Pow(a, b) => {
            let (la, lb) = (linearize(a)?, linearize(b)?);
            if la.has_y() || lb.has_y() {
                return Err(Error::InvalidInput(format!("`{e}` is not linear in y")));
            }
            let k = lb
                .free
                .as_constant()
                .and_then(|c| c.to_i64())
                .and_then(|k| i32::try_from(k).ok())
                .ok_or_else(|| Error::InvalidInput(format!("exponent in `{e}` must be an integer")))?;
            Linear::free(la.free.powi(k)?)
        }
        Expr::Call(func, _) => {
            return Err(Error::InvalidInput(format!("`{}` is not allowed in a coefficient", func.name())));
        }
    })
}

/// Parses `A*y'' + B*y' + C*y = 0` (or the bare left side) into exact
/// coefficients.
pub fn parse_ode(src: &str) -> Result<OdeInput> {
    let (lhs, rhs) = parse_with_equals(src)?;
    let e = match rhs {
        Some(r) => Expr::Sub(Box::new(lhs), Box::new(r)),
        None => lhs,
    };
    let lin = linearize(&e)?;
    if !lin.free.is_zero() {
        return Err(Error::InvalidInput("the equation is not homogeneous in y".into()));
    }
    let [c, b, a] = lin.y;
    OdeInput::new(a, b, c)
}

/// `OdeInput` in the input grammar.
pub fn format_ode(ode: &OdeInput) -> String {
    ode.to_string()
}
