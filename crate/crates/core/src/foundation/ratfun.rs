//! Rational functions num/den over Q in x1..xn, kept in canonical form:
//! gcd(num, den) = 1 and den monic under grlex (so its leading
//! coefficient is positive). Equality is therefore structural.

use super::poly::{gcd, Poly};
use super::rational::{parse_rational, Rational};
use crate::error::{Error, Result};
use num_traits::{One, Zero};
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RatFun {
    num: Poly,
    den: Poly,
}

impl Default for RatFun {
    fn default() -> Self {
        RatFun::zero()
    }
}

impl From<Poly> for RatFun {
    fn from(p: Poly) -> Self {
        RatFun {
            num: p,
            den: Poly::one(),
        }
    }
}

impl From<Rational> for RatFun {
    fn from(c: Rational) -> Self {
        RatFun::from(Poly::constant(c))
    }
}

impl RatFun {
    pub fn new(num: Poly, den: Poly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalized(num, den))
    }

    fn normalized(num: Poly, den: Poly) -> Self {
        if num.is_zero() {
            return RatFun::zero();
        }
        if let Some(c) = den.constant_value() {
            return RatFun {
                num: num.scale(&c.recip()),
                den: Poly::one(),
            };
        }
        let g = gcd(&num, &den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (
                num.div_exact(&g).expect("gcd divides"),
                den.div_exact(&g).expect("gcd divides"),
            )
        };
        let lc = den.leading_coeff().recip();
        RatFun {
            num: num.scale(&lc),
            den: den.scale(&lc),
        }
    }

    pub fn zero() -> Self {
        RatFun {
            num: Poly::zero(),
            den: Poly::one(),
        }
    }

    pub fn one() -> Self {
        RatFun::from(Poly::one())
    }

    pub fn constant(c: Rational) -> Self {
        RatFun::from(c)
    }

    pub fn int(n: i64) -> Self {
        RatFun::from(super::rational::rat(n))
    }

    /// The coordinate function x_{i+1}.
    pub fn var(i: usize) -> Self {
        RatFun::from(Poly::var(i))
    }

    pub fn numer(&self) -> &Poly {
        &self.num
    }

    pub fn denom(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.den.is_one() && self.num.is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_constant()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn constant_value(&self) -> Option<Rational> {
        if self.den.is_one() {
            self.num.constant_value()
        } else {
            None
        }
    }

    pub fn nvars(&self) -> usize {
        self.num.nvars().max(self.den.nvars())
    }

    pub fn recip(&self) -> Result<RatFun> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalized(self.den.clone(), self.num.clone()))
    }

    pub fn scale(&self, c: &Rational) -> RatFun {
        if c.is_zero() {
            return RatFun::zero();
        }
        RatFun {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    pub fn pow(&self, e: u32) -> RatFun {
        RatFun {
            num: self.num.pow(e),
            den: self.den.pow(e),
        }
    }

    /// Formal partial derivative in x_{i+1} (quotient rule).
    pub fn derivative(&self, i: usize) -> RatFun {
        if self.den.is_one() {
            return RatFun::from(self.num.derivative(i));
        }
        let n = &(&self.num.derivative(i) * &self.den) - &(&self.num * &self.den.derivative(i));
        Self::normalized(n, self.den.pow(2))
    }

    /// Value at `point`; fails if the point is a pole or too short.
    pub fn eval(&self, point: &[Rational]) -> Result<Rational> {
        if point.len() < self.nvars() {
            return Err(Error::Dimension(format!(
                "point has {} coordinates, function uses {}",
                point.len(),
                self.nvars()
            )));
        }
        let d = self.den.eval(point);
        if d.is_zero() {
            return Err(Error::Invalid("point outside domain (denominator vanishes)".into()));
        }
        Ok(self.num.eval(point) / d)
    }

    /// Substitutes polynomial images for the variables.
    pub fn compose(&self, images: &[Poly]) -> Result<RatFun> {
        RatFun::new(self.num.compose(images), self.den.compose(images))
    }

    pub fn parse(s: &str) -> Result<RatFun> {
        Parser::new(s)?.parse_all(None)
    }

    /// Parses and rejects variables beyond x_n.
    pub fn parse_in(s: &str, n: usize) -> Result<RatFun> {
        Parser::new(s)?.parse_all(Some(n))
    }
}

impl Add for &RatFun {
    type Output = RatFun;
    fn add(self, rhs: &RatFun) -> RatFun {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            return RatFun::normalized(&self.num + &rhs.num, self.den.clone());
        }
        let n = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        RatFun::normalized(n, &self.den * &rhs.den)
    }
}

impl Sub for &RatFun {
    type Output = RatFun;
    fn sub(self, rhs: &RatFun) -> RatFun {
        self + &(-rhs)
    }
}

impl Mul for &RatFun {
    type Output = RatFun;
    fn mul(self, rhs: &RatFun) -> RatFun {
        if self.is_zero() || rhs.is_zero() {
            return RatFun::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return RatFun::from(&self.num * &rhs.num);
        }
        RatFun::normalized(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Div for &RatFun {
    type Output = RatFun;
    /// Panics on division by the zero function; use `recip` to handle it.
    fn div(self, rhs: &RatFun) -> RatFun {
        self * &rhs.recip().expect("division by zero rational function")
    }
}

impl Neg for &RatFun {
    type Output = RatFun;
    fn neg(self) -> RatFun {
        RatFun {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

macro_rules! owned_ops {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for RatFun {
            type Output = RatFun;
            fn $m(self, rhs: RatFun) -> RatFun { (&self).$m(&rhs) }
        }
        impl $tr<&RatFun> for RatFun {
            type Output = RatFun;
            fn $m(self, rhs: &RatFun) -> RatFun { (&self).$m(rhs) }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul, Div div);

impl Neg for RatFun {
    type Output = RatFun;
    fn neg(self) -> RatFun {
        -&self
    }
}

impl fmt::Display for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        let wrap = |p: &Poly| {
            if p.num_terms() > 1 {
                format!("({p})")
            } else {
                p.to_string()
            }
        };
        write!(f, "{}/{}", wrap(&self.num), wrap(&self.den))
    }
}

impl serde::Serialize for RatFun {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> serde::Deserialize<'de> for RatFun {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        RatFun::parse(&s).map_err(serde::de::Error::custom)
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(String),
    Var(usize),
    Op(char),
}

struct Parser {
    toks: Vec<Tok>,
    pos: usize,
    src: String,
}

impl Parser {
    fn new(s: &str) -> Result<Self> {
        let mut toks = Vec::new();
        let cs: Vec<char> = s.chars().collect();
        let mut i = 0;
        while i < cs.len() {
            let ch = cs[i];
            if ch.is_whitespace() {
                i += 1;
            } else if ch.is_ascii_digit() {
                let st = i;
                while i < cs.len() && cs[i].is_ascii_digit() {
                    i += 1;
                }
                toks.push(Tok::Num(cs[st..i].iter().collect()));
            } else if ch == 'x' {
                i += 1;
                let st = i;
                while i < cs.len() && cs[i].is_ascii_digit() {
                    i += 1;
                }
                let idx: usize = cs[st..i]
                    .iter()
                    .collect::<String>()
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad variable in {s:?}")))?;
                if idx == 0 {
                    return Err(Error::Parse(format!("variables start at x1 in {s:?}")));
                }
                toks.push(Tok::Var(idx - 1));
            } else if "+-*/^()".contains(ch) {
                toks.push(Tok::Op(ch));
                i += 1;
            } else if ch == '\u{2212}' {
                toks.push(Tok::Op('-'));
                i += 1;
            } else {
                return Err(Error::Parse(format!("unexpected character {ch:?} in {s:?}")));
            }
        }
        Ok(Parser {
            toks,
            pos: 0,
            src: s.to_string(),
        })
    }

    fn err(&self, what: &str) -> Error {
        Error::Parse(format!("{what} in {:?}", self.src))
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Op(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn parse_all(mut self, n: Option<usize>) -> Result<RatFun> {
        if self.toks.is_empty() {
            return Err(self.err("empty expression"));
        }
        if let Some(n) = n {
            if let Some(Tok::Var(i)) = self.toks.iter().find(|t| matches!(t, Tok::Var(i) if *i >= n)) {
                return Err(Error::Parse(format!(
                    "variable x{} out of range 1..{} in {:?}",
                    i + 1,
                    n,
                    self.src
                )));
            }
        }
        let v = self.expr()?;
        if self.pos != self.toks.len() {
            return Err(self.err("trailing input"));
        }
        Ok(v)
    }

    fn expr(&mut self) -> Result<RatFun> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                acc = &acc + &self.term()?;
            } else if self.eat('-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<RatFun> {
        let mut acc = self.unary()?;
        loop {
            if self.eat('*') {
                acc = &acc * &self.unary()?;
            } else if self.eat('/') {
                let d = self.unary()?;
                acc = &acc * &d.recip().map_err(|_| self.err("division by zero"))?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<RatFun> {
        if self.eat('-') {
            return Ok(-&self.unary()?);
        }
        if self.eat('+') {
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<RatFun> {
        let base = self.atom()?;
        if !self.eat('^') {
            return Ok(base);
        }
        let neg = self.eat('-');
        let e: u32 = match self.peek().cloned() {
            Some(Tok::Num(s)) => {
                self.pos += 1;
                s.parse().map_err(|_| self.err("exponent too large"))?
            }
            _ => return Err(self.err("expected integer exponent")),
        };
        let p = base.pow(e);
        if neg {
            p.recip().map_err(|_| self.err("zero to a negative power"))
        } else {
            Ok(p)
        }
    }

    fn atom(&mut self) -> Result<RatFun> {
        match self.peek().cloned() {
            Some(Tok::Num(s)) => {
                self.pos += 1;
                Ok(RatFun::constant(parse_rational(&s)?))
            }
            Some(Tok::Var(i)) => {
                self.pos += 1;
                Ok(RatFun::var(i))
            }
            Some(Tok::Op('(')) => {
                self.pos += 1;
                let v = self.expr()?;
                if !self.eat(')') {
                    return Err(self.err("missing ')'"));
                }
                Ok(v)
            }
            _ => Err(self.err("unexpected token")),
        }
    }
}

/// Minimal field interface shared by exact rationals and rational
/// functions, used by the generic matrix routines.
pub trait Field: Clone + PartialEq + fmt::Debug + Zero + One {
    fn plus(&self, o: &Self) -> Self;
    fn minus(&self, o: &Self) -> Self;
    fn times(&self, o: &Self) -> Self;
    fn negated(&self) -> Self;
    /// Multiplicative inverse; callers guarantee `self != 0`.
    fn inverse(&self) -> Self;
}

impl Field for Rational {
    fn plus(&self, o: &Self) -> Self {
        self + o
    }
    fn minus(&self, o: &Self) -> Self {
        self - o
    }
    fn times(&self, o: &Self) -> Self {
        self * o
    }
    fn negated(&self) -> Self {
        -self
    }
    fn inverse(&self) -> Self {
        self.recip()
    }
}

impl Zero for RatFun {
    fn zero() -> Self {
        RatFun::zero()
    }
    fn is_zero(&self) -> bool {
        RatFun::is_zero(self)
    }
}

impl One for RatFun {
    fn one() -> Self {
        RatFun::one()
    }
}

impl Field for RatFun {
    fn plus(&self, o: &Self) -> Self {
        self + o
    }
    fn minus(&self, o: &Self) -> Self {
        self - o
    }
    fn times(&self, o: &Self) -> Self {
        self * o
    }
    fn negated(&self) -> Self {
        -self
    }
    fn inverse(&self) -> Self {
        self.recip().expect("inverse of zero")
    }
}
