use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_traits::{One, Signed, Zero};

use super::{parse_rational, Rational};
use crate::error::{Error, Result};

/// Exponent vector, ordered graded-lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    fn div(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A named, ordered variable set. Polynomials from different rings never mix.
#[derive(Debug, Clone)]
pub struct PolyRing(Arc<Vec<String>>);

impl PartialEq for PolyRing {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}

impl Eq for PolyRing {}

impl PolyRing {
    pub fn new<I, S>(names: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        for (k, n) in names.iter().enumerate() {
            assert!(
                !names[..k].contains(n),
                "duplicate variable name {n:?}"
            );
        }
        PolyRing(Arc::new(names))
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn names(&self) -> &[String] {
        &self.0
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.0.iter().position(|n| n == name)
    }

    pub fn zero(&self) -> MultiPoly {
        MultiPoly {
            ring: self.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(&self, q: Rational) -> MultiPoly {
        let mut p = self.zero();
        if !q.is_zero() {
            p.terms.insert(Monomial::one(self.nvars()), q);
        }
        p
    }

    pub fn one(&self) -> MultiPoly {
        self.constant(Rational::one())
    }

    pub fn var_at(&self, index: usize) -> MultiPoly {
        let mut exps = vec![0; self.nvars()];
        exps[index] = 1;
        let mut p = self.zero();
        p.terms.insert(Monomial(exps), Rational::one());
        p
    }

    pub fn var(&self, name: &str) -> Result<MultiPoly> {
        self.index_of(name)
            .map(|i| self.var_at(i))
            .ok_or_else(|| Error::Parse(format!("unknown variable {name:?}")))
    }

    /// Parses sums of products of rationals, variables, powers and
    /// parenthesized subexpressions, e.g. `"n14 - n13*n34 - n12*n24"`.
    pub fn parse(&self, text: &str) -> Result<MultiPoly> {
        let tokens = tokenize(text)?;
        let mut parser = Parser {
            ring: self,
            tokens,
            pos: 0,
        };
        let p = parser.expr()?;
        if parser.pos != parser.tokens.len() {
            return Err(Error::Parse(format!("trailing input in {text:?}")));
        }
        Ok(p)
    }
}

/// Sparse polynomial with rational coefficients; zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq)]
pub struct MultiPoly {
    ring: PolyRing,
    terms: BTreeMap<Monomial, Rational>,
}

impl MultiPoly {
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    /// Terms in descending monomial order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter().rev()
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.last_key_value()
    }

    pub fn constant_value(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => {
                let (m, c) = self.terms.first_key_value()?;
                (m.degree() == 0).then(|| c.clone())
            }
            _ => None,
        }
    }

    fn same_ring(&self, other: &MultiPoly) -> Result<()> {
        if self.ring == other.ring {
            Ok(())
        } else {
            Err(Error::VariableSetMismatch)
        }
    }

    fn add_term(terms: &mut BTreeMap<Monomial, Rational>, m: Monomial, c: Rational) {
        use std::collections::btree_map::Entry;
        match terms.entry(m) {
            Entry::Vacant(v) => {
                if !c.is_zero() {
                    v.insert(c);
                }
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn checked_add(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.same_ring(other)?;
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            Self::add_term(&mut terms, m.clone(), c.clone());
        }
        Ok(MultiPoly {
            ring: self.ring.clone(),
            terms,
        })
    }

    pub fn checked_sub(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.same_ring(other)?;
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            Self::add_term(&mut terms, m.clone(), -c.clone());
        }
        Ok(MultiPoly {
            ring: self.ring.clone(),
            terms,
        })
    }

    pub fn checked_mul(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.same_ring(other)?;
        let mut terms = BTreeMap::new();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                Self::add_term(&mut terms, m1.mul(m2), c1 * c2);
            }
        }
        Ok(MultiPoly {
            ring: self.ring.clone(),
            terms,
        })
    }

    pub fn negated(&self) -> MultiPoly {
        MultiPoly {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect(),
        }
    }

    pub fn scaled(&self, q: &Rational) -> MultiPoly {
        if q.is_zero() {
            return self.ring.zero();
        }
        MultiPoly {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c * q)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> MultiPoly {
        (0..e).fold(self.ring.one(), |acc, _| &acc * self)
    }

    /// Returns `s` with `self = divisor · s`, or `InexactDivision` carrying the
    /// remainder reached when the leading term stopped being divisible.
    pub fn exact_div(&self, divisor: &MultiPoly) -> Result<MultiPoly> {
        self.same_ring(divisor)?;
        let (lead_m, lead_c) = divisor
            .terms
            .last_key_value()
            .map(|(m, c)| (m.clone(), c.clone()))
            .ok_or(Error::DivisionByZeroPoly)?;
        let mut rem = self.terms.clone();
        let mut quotient = BTreeMap::new();
        while let Some((m, c)) = rem.last_key_value() {
            if !lead_m.divides(m) {
                let witness = MultiPoly {
                    ring: self.ring.clone(),
                    terms: rem,
                };
                return Err(Error::InexactDivision {
                    remainder: witness.to_string(),
                });
            }
            let qm = m.div(&lead_m);
            let qc = c / &lead_c;
            for (dm, dc) in &divisor.terms {
                Self::add_term(&mut rem, dm.mul(&qm), -(dc * &qc));
            }
            quotient.insert(qm, qc);
        }
        Ok(MultiPoly {
            ring: self.ring.clone(),
            terms: quotient,
        })
    }

    /// Evaluates at a rational point given in variable order.
    pub fn eval(&self, point: &[Rational]) -> Rational {
        assert_eq!(point.len(), self.ring.nvars(), "point has wrong dimension");
        let mut total = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(m.exponents()) {
                for _ in 0..e {
                    t *= x;
                }
            }
            total += t;
        }
        total
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms().enumerate() {
            let negative = c.is_negative();
            if k == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if negative { " - " } else { " + " })?;
            }
            let abs = c.abs();
            let mut factors: Vec<String> = Vec::new();
            if !abs.is_one() || m.degree() == 0 {
                factors.push(abs.to_string());
            }
            for (name, &e) in self.ring.names().iter().zip(m.exponents()) {
                match e {
                    0 => {}
                    1 => factors.push(name.clone()),
                    e => factors.push(format!("{name}^{e}")),
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

impl super::Ring for MultiPoly {
    type Ctx = PolyRing;

    fn zero(ctx: &PolyRing) -> Self {
        ctx.zero()
    }

    fn one(ctx: &PolyRing) -> Self {
        ctx.one()
    }

    fn from_rational(ctx: &PolyRing, q: &Rational) -> Self {
        ctx.constant(q.clone())
    }

    fn ctx(&self) -> PolyRing {
        self.ring.clone()
    }

    fn is_zero(&self) -> bool {
        MultiPoly::is_zero(self)
    }

    fn is_one(&self) -> bool {
        self.constant_value().is_some_and(|c| One::is_one(&c))
    }

    fn add(&self, other: &Self) -> Self {
        self.checked_add(other).expect("polynomials from different rings")
    }

    fn sub(&self, other: &Self) -> Self {
        self.checked_sub(other).expect("polynomials from different rings")
    }

    fn mul(&self, other: &Self) -> Self {
        self.checked_mul(other).expect("polynomials from different rings")
    }

    fn neg(&self) -> Self {
        self.negated()
    }

    fn scale(&self, q: &Rational) -> Self {
        self.scaled(q)
    }

    fn exact_div(&self, other: &Self) -> Result<Self> {
        MultiPoly::exact_div(self, other)
    }
}

// Operator forms panic on mismatched rings; use the `checked_*` methods to
// handle that case.
macro_rules! poly_binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl $tr<&MultiPoly> for &MultiPoly {
            type Output = MultiPoly;
            fn $method(self, rhs: &MultiPoly) -> MultiPoly {
                self.$checked(rhs).expect("polynomials from different rings")
            }
        }

        impl $tr<MultiPoly> for MultiPoly {
            type Output = MultiPoly;
            fn $method(self, rhs: MultiPoly) -> MultiPoly {
                self.$checked(&rhs).expect("polynomials from different rings")
            }
        }
    };
}

poly_binop!(Add, add, checked_add);
poly_binop!(Sub, sub, checked_sub);
poly_binop!(Mul, mul, checked_mul);

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        self.negated()
    }
}

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        self.negated()
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Num(String),
    Ident(String),
    Op(char),
}

fn tokenize(text: &str) -> Result<Vec<Token>> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            out.push(Token::Num(chars[start..i].iter().collect()));
        } else if c.is_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push(Token::Ident(chars[start..i].iter().collect()));
        } else if "+-*/^()".contains(c) {
            out.push(Token::Op(c));
            i += 1;
        } else {
            return Err(Error::Parse(format!("unexpected character {c:?}")));
        }
    }
    Ok(out)
}

struct Parser<'a> {
    ring: &'a PolyRing,
    tokens: Vec<Token>,
    pos: usize,
}

impl Parser<'_> {
    fn peek_op(&self) -> Option<char> {
        match self.tokens.get(self.pos) {
            Some(Token::Op(c)) => Some(*c),
            _ => None,
        }
    }

    fn expr(&mut self) -> Result<MultiPoly> {
        let mut acc = match self.peek_op() {
            Some('-') => {
                self.pos += 1;
                -self.term()?
            }
            Some('+') => {
                self.pos += 1;
                self.term()?
            }
            _ => self.term()?,
        };
        while let Some(op @ ('+' | '-')) = self.peek_op() {
            self.pos += 1;
            let t = self.term()?;
            acc = if op == '+' { &acc + &t } else { &acc - &t };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<MultiPoly> {
        let mut acc = self.power()?;
        while self.peek_op() == Some('*') {
            self.pos += 1;
            acc = &acc * &self.power()?;
        }
        Ok(acc)
    }

    fn power(&mut self) -> Result<MultiPoly> {
        let base = self.atom()?;
        if self.peek_op() == Some('^') {
            self.pos += 1;
            match self.tokens.get(self.pos) {
                Some(Token::Num(n)) => {
                    let e: u32 = n
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad exponent {n}")))?;
                    self.pos += 1;
                    return Ok(base.pow(e));
                }
                _ => return Err(Error::Parse("expected exponent after '^'".into())),
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<MultiPoly> {
        match self.tokens.get(self.pos).cloned() {
            Some(Token::Num(n)) => {
                self.pos += 1;
                if self.peek_op() == Some('/') {
                    if let Some(Token::Num(d)) = self.tokens.get(self.pos + 1).cloned() {
                        self.pos += 2;
                        return Ok(self.ring.constant(parse_rational(&format!("{n}/{d}"))?));
                    }
                }
                Ok(self.ring.constant(parse_rational(&n)?))
            }
            Some(Token::Ident(name)) => {
                self.pos += 1;
                self.ring.var(&name)
            }
            Some(Token::Op('(')) => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek_op() != Some(')') {
                    return Err(Error::Parse("missing ')'".into()));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(Token::Op('-')) => {
                self.pos += 1;
                Ok(-self.power()?)
            }
            other => Err(Error::Parse(format!("unexpected token {other:?}"))),
        }
    }
}
