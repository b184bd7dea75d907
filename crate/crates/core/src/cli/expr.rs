//! Expression syntax: parser, canonical printer and conversion to exact values.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use crate::algebra::{MPoly, RatFun, Rational, Var};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BinOp {
    Add,
    Sub,
    Mul,
    Div,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Func {
    Ln,
    Sqrt,
    Exp,
}

impl Func {
    fn name(self) -> &'static str {
        match self {
            Func::Ln => "ln",
            Func::Sqrt => "sqrt",
            Func::Exp => "exp",
        }
    }

    fn from_name(s: &str) -> Option<Func> {
        match s {
            "ln" => Some(Func::Ln),
            "sqrt" => Some(Func::Sqrt),
            "exp" => Some(Func::Exp),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Expr {
    Num(BigInt),
    Sym(Var),
    Neg(Box<Expr>),
    Bin(BinOp, Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, i64),
    Call(Func, Box<Expr>),
}

impl Expr {
    fn prec(&self) -> u8 {
        match self {
            Expr::Bin(BinOp::Add | BinOp::Sub, ..) => 1,
            Expr::Bin(BinOp::Mul | BinOp::Div, ..) => 2,
            Expr::Neg(_) => 3,
            Expr::Pow(..) => 4,
            _ => 5,
        }
    }

    /// Exact value; fails on `ln`, `sqrt`, `exp`.
    pub fn to_ratfun(&self) -> Result<RatFun> {
        Ok(match self {
            Expr::Num(n) => RatFun::constant(Rational::from_integer(n.clone())),
            Expr::Sym(v) => RatFun::var(*v),
            Expr::Neg(x) => -x.to_ratfun()?,
            Expr::Bin(op, a, b) => {
                let (a, b) = (a.to_ratfun()?, b.to_ratfun()?);
                match op {
                    BinOp::Add => &a + &b,
                    BinOp::Sub => &a - &b,
                    BinOp::Mul => &a * &b,
                    BinOp::Div => a.try_div(&b)?,
                }
            }
            Expr::Pow(x, n) => {
                let x = x.to_ratfun()?;
                if *n < 0 && x.is_zero() {
                    return Err(Error::ZeroDenominator);
                }
                x.pow(i32::try_from(*n).map_err(|_| Error::Invalid("exponent too large".into()))?)
            }
            Expr::Call(f, _) => {
                return Err(Error::Invalid(format!("{} is not a rational function", f.name())))
            }
        })
    }

    pub fn to_poly(&self) -> Result<MPoly> {
        let r = self.to_ratfun()?;
        if !r.is_poly() {
            return Err(Error::Invalid(format!("{} is not a polynomial", self)));
        }
        Ok(r.num().clone())
    }

    pub fn to_rational(&self) -> Result<Rational> {
        self.to_ratfun()?
            .constant_value()
            .ok_or_else(|| Error::Invalid(format!("{} is not a number", self)))
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let wrap = |f: &mut fmt::Formatter<'_>, e: &Expr, paren: bool| {
            if paren {
                write!(f, "({})", e)
            } else {
                write!(f, "{}", e)
            }
        };
        match self {
            Expr::Num(n) => write!(f, "{}", n),
            Expr::Sym(v) => f.write_str(v.name()),
            Expr::Neg(x) => {
                f.write_str("-")?;
                wrap(f, x, x.prec() < 3)
            }
            Expr::Bin(op, a, b) => {
                let p = self.prec();
                wrap(f, a, a.prec() < p)?;
                f.write_str(match op {
                    BinOp::Add => "+",
                    BinOp::Sub => "-",
                    BinOp::Mul => "*",
                    BinOp::Div => "/",
                })?;
                wrap(f, b, b.prec() <= p)
            }
            Expr::Pow(x, n) => {
                wrap(f, x, x.prec() < 5)?;
                write!(f, "^{}", n)
            }
            Expr::Call(func, x) => write!(f, "{}({})", func.name(), x),
        }
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn err(&self, expected: &str) -> Error {
        Error::Syntax { offset: self.pos, expected: expected.to_string() }
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.err(&format!("'{}'", c as char)))
        }
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut lhs = self.term()?;
        loop {
            let op = match self.peek() {
                Some(b'+') => BinOp::Add,
                Some(b'-') => BinOp::Sub,
                _ => return Ok(lhs),
            };
            self.pos += 1;
            let rhs = self.term()?;
            lhs = Expr::Bin(op, Box::new(lhs), Box::new(rhs));
        }
    }

    fn term(&mut self) -> Result<Expr> {
        let mut lhs = self.unary()?;
        loop {
            let op = match self.peek() {
                Some(b'*') => BinOp::Mul,
                Some(b'/') => BinOp::Div,
                _ => return Ok(lhs),
            };
            self.pos += 1;
            let rhs = self.unary()?;
            lhs = Expr::Bin(op, Box::new(lhs), Box::new(rhs));
        }
    }

    fn unary(&mut self) -> Result<Expr> {
        if self.peek() == Some(b'-') {
            self.pos += 1;
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr> {
        let base = self.atom()?;
        if self.peek() != Some(b'^') {
            return Ok(base);
        }
        self.pos += 1;
        let neg = if self.peek() == Some(b'-') {
            self.pos += 1;
            true
        } else {
            false
        };
        let n = self.integer().ok_or_else(|| self.err("integer exponent"))?;
        let n = n.to_i64().ok_or_else(|| self.err("small exponent"))?;
        Ok(Expr::Pow(Box::new(base), if neg { -n } else { n }))
    }

    fn integer(&mut self) -> Option<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return None;
        }
        std::str::from_utf8(&self.src[start..self.pos]).ok()?.parse().ok()
    }

    fn atom(&mut self) -> Result<Expr> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(b')')?;
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => Ok(Expr::Num(self.integer().unwrap())),
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                while self.pos < self.src.len() && self.src[self.pos].is_ascii_alphanumeric() {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                if let Some(func) = Func::from_name(name) {
                    self.expect(b'(')?;
                    let e = self.expr()?;
                    self.expect(b')')?;
                    return Ok(Expr::Call(func, Box::new(e)));
                }
                match Var::from_name(name) {
                    Some(v) => Ok(Expr::Sym(v)),
                    None => {
                        self.pos = start;
                        Err(self.err("symbol z, E, nu, a, b, c, d or t"))
                    }
                }
            }
            _ => Err(self.err("number, symbol or '('")),
        }
    }
}

pub fn parse_expr(text: &str) -> Result<Expr> {
    let mut p = Parser { src: text.as_bytes(), pos: 0 };
    let e = p.expr()?;
    if p.peek().is_some() {
        return Err(p.err("operator or end of input"));
    }
    Ok(e)
}

pub fn parse_ratfun(text: &str) -> Result<RatFun> {
    parse_expr(text)?.to_ratfun()
}

pub fn parse_rational(text: &str) -> Result<Rational> {
    parse_expr(text)?.to_rational()
}

/// `"p/q"` with an explicit denominator.
pub fn rational_string(x: &Rational) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

pub fn parse_rational_string(s: &str) -> Result<Rational> {
    let (p, q) = s.split_once('/').ok_or_else(|| Error::Invalid(format!("expected p/q, got {}", s)))?;
    let p: BigInt = p.parse().map_err(|_| Error::Invalid(format!("bad integer {}", p)))?;
    let q: BigInt = q.parse().map_err(|_| Error::Invalid(format!("bad integer {}", q)))?;
    if q.is_zero() {
        return Err(Error::ZeroDenominator);
    }
    Ok(Rational::new(p, q))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quartic_is_five_terms() {
        let e = parse_expr("z^4+a*z^3+b*z^2+c*z+d").unwrap();
        let mut n = 1;
        let mut cur = &e;
        while let Expr::Bin(BinOp::Add, l, _) = cur {
            n += 1;
            cur = l;
        }
        assert_eq!(n, 5);
    }

    #[test]
    fn functions_parse() {
        let e = parse_expr("sqrt(z)*(a+z^2+b*ln(z))").unwrap();
        assert!(matches!(e, Expr::Bin(BinOp::Mul, ref l, _) if matches!(**l, Expr::Call(Func::Sqrt, _))));
        assert_eq!(e.to_string(), "sqrt(z)*(a+z^2+b*ln(z))");
    }

    #[test]
    fn double_caret_offset() {
        match parse_expr("z^^2") {
            Err(Error::Syntax { offset, .. }) => assert_eq!(offset, 2),
            other => panic!("{:?}", other),
        }
    }

    #[test]
    fn precedence() {
        assert_eq!(parse_ratfun("-z^2").unwrap(), -RatFun::z().pow(2));
        assert_eq!(parse_ratfun("1-2-3").unwrap(), RatFun::int(-4));
        assert_eq!(parse_ratfun("8/4/2").unwrap(), RatFun::int(1));
        assert_eq!(parse_expr("a-(b-c)").unwrap().to_string(), "a-(b-c)");
        assert_eq!(parse_expr("(-z)^2").unwrap().to_string(), "(-z)^2");
    }
}
