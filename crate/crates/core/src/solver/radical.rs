//! Radical expressions over the rationals and their numeric evaluation.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::hp::{hp_rational, HpComplex};
use crate::rational::{parse_rational, Rational};

/// Nested arithmetic over rationals with principal square and cube roots.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RadicalExpr {
    Rational(#[serde(with = "rational_text")] Rational),
    Add(Box<RadicalExpr>, Box<RadicalExpr>),
    Sub(Box<RadicalExpr>, Box<RadicalExpr>),
    Mul(Box<RadicalExpr>, Box<RadicalExpr>),
    Div(Box<RadicalExpr>, Box<RadicalExpr>),
    Neg(Box<RadicalExpr>),
    Sqrt(Box<RadicalExpr>),
    Cbrt(Box<RadicalExpr>),
}

mod rational_text {
    use super::*;

    pub fn serialize<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&r.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let text = String::deserialize(d)?;
        parse_rational(&text).map_err(serde::de::Error::custom)
    }
}

fn exact_root(n: &BigInt, k: u32) -> Option<BigInt> {
    let r = if k == 2 {
        if n.is_negative() {
            return None;
        }
        n.sqrt()
    } else {
        n.cbrt()
    };
    (num_traits::pow(r.clone(), k as usize) == *n).then_some(r)
}

fn exact_rational_root(r: &Rational, k: u32) -> Option<Rational> {
    Some(Rational::new(exact_root(r.numer(), k)?, exact_root(r.denom(), k)?))
}

// Folding constructors, not operator impls: they take ownership and simplify.
#[allow(clippy::should_implement_trait)]
impl RadicalExpr {
    pub fn rat(r: Rational) -> Self {
        RadicalExpr::Rational(r)
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        match self {
            RadicalExpr::Rational(r) => Some(r),
            _ => None,
        }
    }

    pub fn add(a: Self, b: Self) -> Self {
        match (a.as_rational(), b.as_rational()) {
            (Some(x), Some(y)) => RadicalExpr::rat(x + y),
            (Some(x), _) if x.is_zero() => b,
            (_, Some(y)) if y.is_zero() => a,
            _ => RadicalExpr::Add(Box::new(a), Box::new(b)),
        }
    }

    pub fn sub(a: Self, b: Self) -> Self {
        match (a.as_rational(), b.as_rational()) {
            (Some(x), Some(y)) => RadicalExpr::rat(x - y),
            (Some(x), _) if x.is_zero() => RadicalExpr::neg(b),
            (_, Some(y)) if y.is_zero() => a,
            _ => RadicalExpr::Sub(Box::new(a), Box::new(b)),
        }
    }

    pub fn mul(a: Self, b: Self) -> Self {
        match (a.as_rational(), b.as_rational()) {
            (Some(x), Some(y)) => RadicalExpr::rat(x * y),
            (Some(x), _) if x.is_zero() => a,
            (_, Some(y)) if y.is_zero() => b,
            (Some(x), _) if x.is_one() => b,
            (_, Some(y)) if y.is_one() => a,
            _ => RadicalExpr::Mul(Box::new(a), Box::new(b)),
        }
    }

    pub fn div(a: Self, b: Self) -> Self {
        match (a.as_rational(), b.as_rational()) {
            (Some(x), Some(y)) if !y.is_zero() => RadicalExpr::rat(x / y),
            (_, Some(y)) if y.is_one() => a,
            _ => RadicalExpr::Div(Box::new(a), Box::new(b)),
        }
    }

    pub fn neg(a: Self) -> Self {
        match a {
            RadicalExpr::Rational(r) => RadicalExpr::rat(-r),
            RadicalExpr::Neg(inner) => *inner,
            other => RadicalExpr::Neg(Box::new(other)),
        }
    }

    pub fn sqrt(a: Self) -> Self {
        if let Some(r) = a.as_rational().and_then(|r| exact_rational_root(r, 2)) {
            return RadicalExpr::rat(r);
        }
        RadicalExpr::Sqrt(Box::new(a))
    }

    pub fn cbrt(a: Self) -> Self {
        if let Some(r) = a.as_rational().and_then(|r| exact_rational_root(r, 3)) {
            return RadicalExpr::rat(r);
        }
        RadicalExpr::Cbrt(Box::new(a))
    }

    /// Complex value computed with `digits` significant decimal digits.
    pub fn eval(&self, digits: usize) -> HpComplex {
        match self {
            RadicalExpr::Rational(r) => HpComplex::real(hp_rational(r, digits)),
            RadicalExpr::Add(a, b) => a.eval(digits).add(&b.eval(digits)),
            RadicalExpr::Sub(a, b) => a.eval(digits).sub(&b.eval(digits)),
            RadicalExpr::Mul(a, b) => a.eval(digits).mul(&b.eval(digits)),
            RadicalExpr::Div(a, b) => a.eval(digits).div(&b.eval(digits)),
            RadicalExpr::Neg(a) => a.eval(digits).neg(),
            RadicalExpr::Sqrt(a) => a.eval(digits).sqrt(),
            RadicalExpr::Cbrt(a) => a.eval(digits).cbrt(),
        }
    }

    /// Value accurate to about `digits` digits; evaluation carries guard
    /// digits to absorb cancellation inside nested radicals.
    pub fn evaluate(&self, digits: usize) -> HpComplex {
        self.eval(digits + 20)
    }

    pub fn node_count(&self) -> usize {
        match self {
            RadicalExpr::Rational(_) => 1,
            RadicalExpr::Add(a, b)
            | RadicalExpr::Sub(a, b)
            | RadicalExpr::Mul(a, b)
            | RadicalExpr::Div(a, b) => 1 + a.node_count() + b.node_count(),
            RadicalExpr::Neg(a) | RadicalExpr::Sqrt(a) | RadicalExpr::Cbrt(a) => 1 + a.node_count(),
        }
    }

    fn precedence(&self) -> u8 {
        match self {
            RadicalExpr::Rational(r) if r.is_negative() => 1,
            RadicalExpr::Rational(r) if !r.denom().is_one() => 2,
            RadicalExpr::Add(..) | RadicalExpr::Sub(..) | RadicalExpr::Neg(_) => 1,
            RadicalExpr::Mul(..) | RadicalExpr::Div(..) => 2,
            _ => 3,
        }
    }

    fn write_operand(&self, f: &mut fmt::Formatter<'_>, min: u8) -> fmt::Result {
        if self.precedence() < min {
            write!(f, "({self})")
        } else {
            write!(f, "{self}")
        }
    }
}

impl fmt::Display for RadicalExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RadicalExpr::Rational(r) => write!(f, "{r}"),
            RadicalExpr::Add(a, b) => {
                a.write_operand(f, 1)?;
                f.write_str(" + ")?;
                b.write_operand(f, 2)
            }
            RadicalExpr::Sub(a, b) => {
                a.write_operand(f, 1)?;
                f.write_str(" - ")?;
                b.write_operand(f, 2)
            }
            RadicalExpr::Mul(a, b) => {
                a.write_operand(f, 2)?;
                f.write_str("*")?;
                b.write_operand(f, 3)
            }
            RadicalExpr::Div(a, b) => {
                a.write_operand(f, 2)?;
                f.write_str("/")?;
                b.write_operand(f, 3)
            }
            RadicalExpr::Neg(a) => {
                f.write_str("-")?;
                a.write_operand(f, 2)
            }
            RadicalExpr::Sqrt(a) => write!(f, "sqrt({a})"),
            RadicalExpr::Cbrt(a) => write!(f, "cbrt({a})"),
        }
    }
}
