//! Canonical text form and JSON form of [`MultiPoly`].
//!
//! Text: terms in descending graded-lex order, e.g. `3/5*q0^2 - 8/5*q0*q1 + 2`.
//! JSON: `[{"exponents": {"q0": 2}, "coeff": "3/5"}, ...]`, in the same order.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::monomial::{Monomial, Var};
use super::multipoly::MultiPoly;
use crate::error::Error;
use crate::rational::{parse_rational, Rational};

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms().rev().enumerate() {
            let negative = c.is_negative();
            match (i, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mag = c.abs();
            if m.is_one() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{mag}*{m}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiPoly({self})")
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Num(String),
    Ident(String),
    Op(char),
}

fn tokenize(s: &str) -> Result<Vec<Token>, Error> {
    let chars: Vec<char> = s.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() || c == '.' {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_digit() || chars[i] == '.') {
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
            return Err(Error::Parse(format!("unexpected character `{c}`")));
        }
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn eat(&mut self, op: char) -> bool {
        if self.peek() == Some(&Token::Op(op)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<MultiPoly, Error> {
        let mut acc = MultiPoly::zero();
        let mut negative = if self.eat('-') {
            true
        } else {
            self.eat('+');
            false
        };
        loop {
            let t = self.term()?;
            acc = if negative { &acc - &t } else { &acc + &t };
            if self.eat('+') {
                negative = false;
            } else if self.eat('-') {
                negative = true;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<MultiPoly, Error> {
        let mut acc = self.power()?;
        loop {
            if self.eat('*') {
                acc = &acc * &self.power()?;
            } else if self.eat('/') {
                let d = self.power()?;
                let d = d
                    .as_constant()
                    .filter(|c| !c.is_zero())
                    .ok_or_else(|| Error::Parse("division by a non-constant or zero".into()))?;
                acc = acc.scale(&d.recip());
            } else {
                return Ok(acc);
            }
        }
    }

    fn power(&mut self) -> Result<MultiPoly, Error> {
        let base = self.atom()?;
        if self.eat('^') {
            match self.tokens.get(self.pos).cloned() {
                Some(Token::Num(n)) => {
                    self.pos += 1;
                    let e: u32 = n
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad exponent `{n}`")))?;
                    Ok(base.pow(e))
                }
                other => Err(Error::Parse(format!("expected exponent, found {other:?}"))),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<MultiPoly, Error> {
        match self.tokens.get(self.pos).cloned() {
            Some(Token::Num(n)) => {
                self.pos += 1;
                Ok(MultiPoly::constant(parse_rational(&n)?))
            }
            Some(Token::Ident(name)) => {
                self.pos += 1;
                Ok(MultiPoly::var(&name))
            }
            Some(Token::Op('(')) => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(')') {
                    return Err(Error::Parse("missing `)`".into()));
                }
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

impl FromStr for MultiPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let mut parser = Parser {
            tokens: tokenize(s)?,
            pos: 0,
        };
        let p = parser.expr()?;
        if parser.pos != parser.tokens.len() {
            return Err(Error::Parse(format!("trailing input in `{s}`")));
        }
        Ok(p)
    }
}

#[derive(Serialize, Deserialize)]
struct JsonTerm {
    exponents: BTreeMap<String, u32>,
    coeff: String,
}

impl Serialize for MultiPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let terms: Vec<JsonTerm> = self
            .terms()
            .rev()
            .map(|(m, c)| JsonTerm {
                exponents: m
                    .factors()
                    .iter()
                    .map(|(v, e)| (v.name().to_string(), *e))
                    .collect(),
                coeff: c.to_string(),
            })
            .collect();
        terms.serialize(serializer)
    }
}

/// Term list, or the text form for hand-written input.
#[derive(Deserialize)]
#[serde(untagged)]
enum JsonPoly {
    Terms(Vec<JsonTerm>),
    Text(String),
}

impl<'de> Deserialize<'de> for MultiPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let terms = match JsonPoly::deserialize(deserializer)? {
            JsonPoly::Terms(t) => t,
            JsonPoly::Text(s) => return s.parse().map_err(serde::de::Error::custom),
        };
        let mut p = MultiPoly::zero();
        for t in terms {
            let c: Rational = parse_rational(&t.coeff).map_err(serde::de::Error::custom)?;
            let m = Monomial::from_factors(t.exponents.iter().map(|(v, e)| (Var::new(v), *e)));
            p.add_term(m, c);
        }
        Ok(p)
    }
}
