//! Ring expressions: `Z4`, `GF(9)`, `Z2[x]/(x^2 + 1)`, `0 * Z2[x]/(x^2)`.
//!
//! ```text
//! expr    := atom ('*' atom)*              left-associative product
//! atom    := primary ('[x]/(' poly ')')*
//! primary := 'Z' nat | 'GF(' nat ')' | '0' | '(' expr ')'
//! poly    := ['+'|'-'] term (('+'|'-') term)*
//! term    := nat | [nat] 'x' ['^' nat]
//! ```
//!
//! Whitespace is ignored everywhere. `*` is the product; `x` only ever
//! names the indeterminate.

use std::fmt;

use finring_core::construct::format_poly;
use finring_core::{
    build_cyclic, build_gf, build_poly_quotient, direct_product, prime_power, zero_ring,
    FiniteRing,
};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RingExpr {
    Cyclic(usize),
    GaloisField(u64),
    /// Modulus coefficients, lowest degree first, trimmed and monic.
    PolyQuotient(Box<RingExpr>, Vec<i64>),
    Product(Box<RingExpr>, Box<RingExpr>),
    ZeroRing,
}

impl RingExpr {
    pub fn product(a: RingExpr, b: RingExpr) -> Self {
        RingExpr::Product(Box::new(a), Box::new(b))
    }

    pub fn quotient(base: RingExpr, poly: Vec<i64>) -> Self {
        RingExpr::PolyQuotient(Box::new(base), poly)
    }

    /// Builds the ring, labelled with the canonical spelling of `self`.
    pub fn build(&self) -> finring_core::Result<FiniteRing> {
        let ring = match self {
            RingExpr::Cyclic(n) => build_cyclic(*n)?,
            RingExpr::GaloisField(q) => build_gf(*q)?,
            RingExpr::ZeroRing => zero_ring(),
            RingExpr::PolyQuotient(base, poly) => build_poly_quotient(&base.build()?, poly)?,
            RingExpr::Product(a, b) => {
                let (a, b) = (a.build()?, b.build()?);
                let n = a.order().saturating_mul(b.order());
                if n > finring_core::ring::MAX_ORDER {
                    return Err(finring_core::Error::TooLarge(n, finring_core::ring::MAX_ORDER));
                }
                direct_product(&a, &b)
            }
        };
        Ok(ring.with_label(self.to_string()))
    }
}

impl fmt::Display for RingExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingExpr::Cyclic(n) => write!(f, "Z{n}"),
            RingExpr::GaloisField(q) => write!(f, "GF({q})"),
            RingExpr::ZeroRing => f.write_str("0"),
            RingExpr::PolyQuotient(base, poly) => {
                if matches!(**base, RingExpr::Product(..)) {
                    write!(f, "({base})")?;
                } else {
                    write!(f, "{base}")?;
                }
                write!(f, "[x]/({})", format_poly(poly))
            }
            RingExpr::Product(a, b) => {
                if matches!(**b, RingExpr::Product(..)) {
                    write!(f, "{a} * ({b})")
                } else {
                    write!(f, "{a} * {b}")
                }
            }
        }
    }
}

/// `position` counts characters from 0, including whitespace.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("parse error at position {position}: {message}")]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

impl ParseError {
    /// The error with the input and a caret under the offending column.
    pub fn render(&self, input: &str) -> String {
        format!("{self}\n  {input}\n  {}^", " ".repeat(self.position))
    }
}

pub fn parse_ring_spec(text: &str) -> Result<RingExpr, ParseError> {
    let mut p = Parser {
        chars: text
            .chars()
            .enumerate()
            .filter(|(_, c)| !c.is_whitespace())
            .collect(),
        pos: 0,
        end: text.chars().count(),
        depth: 0,
    };
    let expr = p.expr()?;
    match p.peek() {
        None => Ok(expr),
        Some(c) => Err(p.error(format!("unexpected '{c}'"))),
    }
}

impl std::str::FromStr for RingExpr {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_ring_spec(s)
    }
}

struct Parser {
    chars: Vec<(usize, char)>,
    pos: usize,
    end: usize,
    depth: usize,
}

impl Parser {
    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    fn column(&self) -> usize {
        self.chars.get(self.pos).map_or(self.end, |&(i, _)| i)
    }

    fn error(&self, message: impl Into<String>) -> ParseError {
        self.error_at(self.column(), message)
    }

    fn error_at(&self, position: usize, message: impl Into<String>) -> ParseError {
        ParseError {
            position,
            message: message.into(),
        }
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), ParseError> {
        if self.eat(c) {
            return Ok(());
        }
        match self.peek() {
            Some(got) => Err(self.error(format!("expected '{c}', found '{got}'"))),
            None => Err(self.error(format!("expected '{c}', found end of input"))),
        }
    }

    fn expr(&mut self) -> Result<RingExpr, ParseError> {
        let mut left = self.atom()?;
        while self.eat('*') {
            let right = self.atom()?;
            left = RingExpr::product(left, right);
        }
        Ok(left)
    }

    fn atom(&mut self) -> Result<RingExpr, ParseError> {
        let mut base = self.primary()?;
        while self.peek() == Some('[') {
            let start = self.column();
            for c in ['[', 'x', ']', '/', '('] {
                self.expect(c)?;
            }
            let poly = self.poly(start)?;
            self.expect(')')?;
            base = RingExpr::quotient(base, poly);
        }
        Ok(base)
    }

    fn primary(&mut self) -> Result<RingExpr, ParseError> {
        let start = self.column();
        match self.peek() {
            Some('Z') => {
                self.pos += 1;
                let n = self.nat()?;
                if n == 0 {
                    return Err(self.error_at(start, "Z0 is not a finite ring"));
                }
                usize::try_from(n)
                    .map(RingExpr::Cyclic)
                    .map_err(|_| self.error_at(start, "order too large"))
            }
            Some('G') => {
                self.pos += 1;
                self.expect('F')?;
                self.expect('(')?;
                let q_at = self.column();
                let q = self.nat()?;
                if prime_power(q).is_none() {
                    return Err(self.error_at(q_at, format!("GF({q}): {q} is not a prime power")));
                }
                self.expect(')')?;
                Ok(RingExpr::GaloisField(q))
            }
            Some('0') => {
                self.pos += 1;
                if self.peek().is_some_and(|c| c.is_ascii_digit()) {
                    return Err(self.error_at(start, "the zero ring is written '0'"));
                }
                Ok(RingExpr::ZeroRing)
            }
            Some('(') => {
                const MAX_DEPTH: usize = 128;
                if self.depth == MAX_DEPTH {
                    return Err(self.error("parentheses nested too deeply"));
                }
                self.pos += 1;
                self.depth += 1;
                let inner = self.expr()?;
                self.depth -= 1;
                self.expect(')')?;
                Ok(inner)
            }
            Some(c) => Err(self.error(format!(
                "expected a ring ('Zn', 'GF(q)', '0' or '('), found '{c}'"
            ))),
            None => Err(self.error("expected a ring, found end of input")),
        }
    }

    fn nat(&mut self) -> Result<u64, ParseError> {
        let start = self.column();
        let mut value: u64 = 0;
        let mut digits = 0;
        while let Some(d) = self.peek().and_then(|c| c.to_digit(10)) {
            value = value
                .checked_mul(10)
                .and_then(|v| v.checked_add(d as u64))
                .ok_or_else(|| self.error_at(start, "number too large"))?;
            self.pos += 1;
            digits += 1;
        }
        if digits == 0 {
            return Err(self.error("expected a number"));
        }
        Ok(value)
    }

    /// Reads a polynomial and returns its coefficients, lowest degree
    /// first. Like terms are combined; the result must be monic.
    fn poly(&mut self, start: usize) -> Result<Vec<i64>, ParseError> {
        const MAX_DEGREE: u64 = 64;
        let mut coeffs: Vec<i64> = Vec::new();
        let mut first = true;
        loop {
            let sign = if self.eat('-') {
                -1
            } else if self.eat('+') || first {
                1
            } else {
                break;
            };
            first = false;
            let term_at = self.column();
            let has_coeff = self.peek().is_some_and(|c| c.is_ascii_digit());
            let c = if has_coeff { self.nat()? } else { 1 };
            let degree = if self.eat('x') {
                if self.eat('^') {
                    self.nat()?
                } else {
                    1
                }
            } else if has_coeff {
                0
            } else {
                return Err(self.error("expected a polynomial term"));
            };
            if degree > MAX_DEGREE {
                return Err(self.error_at(term_at, format!("degree above {MAX_DEGREE}")));
            }
            let c = i64::try_from(c)
                .ok()
                .and_then(|c| c.checked_mul(sign))
                .ok_or_else(|| self.error_at(term_at, "coefficient too large"))?;
            let d = degree as usize;
            if coeffs.len() <= d {
                coeffs.resize(d + 1, 0);
            }
            coeffs[d] = coeffs[d]
                .checked_add(c)
                .ok_or_else(|| self.error_at(term_at, "coefficient too large"))?;
        }
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        match coeffs.last() {
            Some(1) if coeffs.len() >= 2 => Ok(coeffs),
            Some(_) if coeffs.len() >= 2 => Err(self.error_at(
                start,
                format!("modulus {} is not monic", format_poly(&coeffs)),
            )),
            _ => Err(self.error_at(start, "modulus must have degree at least 1")),
        }
    }
}
