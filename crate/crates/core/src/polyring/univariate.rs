//! Dense univariate polynomials over the rationals, with exact interpolation
//! and Sturm-sequence real root isolation.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::monomial::{Monomial, Var};
use super::multipoly::MultiPoly;
use crate::error::{Error, Result};
use crate::rational::{int, to_f64, Rational};

/// Coefficients in ascending degree; the last stored coefficient is nonzero.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct UnivariatePoly {
    var: Var,
    coeffs: Vec<Rational>,
}

impl UnivariatePoly {
    pub fn new(var: Var, mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UnivariatePoly { var, coeffs }
    }

    pub fn zero(var: Var) -> Self {
        UnivariatePoly::new(var, Vec::new())
    }

    pub fn constant(var: Var, c: Rational) -> Self {
        UnivariatePoly::new(var, vec![c])
    }

    /// `x - r`.
    pub fn linear_root(var: Var, r: Rational) -> Self {
        UnivariatePoly::new(var, vec![-r, Rational::one()])
    }

    pub fn var(&self) -> &Var {
        &self.var
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn renamed(&self, var: Var) -> Self {
        UnivariatePoly {
            var,
            coeffs: self.coeffs.clone(),
        }
    }

    pub fn from_multipoly(p: &MultiPoly, var: &Var) -> Result<Self> {
        let mut coeffs = Vec::new();
        for (m, c) in p.terms() {
            let e = m.exponent(var) as usize;
            if m.degree() as usize != e {
                return Err(Error::InvalidSystem(format!(
                    "`{p}` is not univariate in {var}"
                )));
            }
            if coeffs.len() <= e {
                coeffs.resize(e + 1, Rational::zero());
            }
            coeffs[e] = c.clone();
        }
        Ok(UnivariatePoly::new(var.clone(), coeffs))
    }

    pub fn to_multipoly(&self) -> MultiPoly {
        MultiPoly::from_terms(self.coeffs.iter().enumerate().map(|(k, c)| {
            (
                Monomial::from_factors([(self.var.clone(), k as u32)]),
                c.clone(),
            )
        }))
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * x + to_f64(c))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        UnivariatePoly::new(self.var.clone(), self.coeffs.iter().map(|k| k * c).collect())
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            Some(l) => self.scale(&l.recip()),
            None => self.clone(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        UnivariatePoly::new(
            self.var.clone(),
            (0..n).map(|k| self.coeff(k) + other.coeff(k)).collect(),
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&int(-1)))
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return UnivariatePoly::zero(self.var.clone());
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UnivariatePoly::new(self.var.clone(), out)
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(UnivariatePoly::constant(self.var.clone(), int(1)), |acc, _| {
            acc.mul(self)
        })
    }

    pub fn derivative(&self) -> Self {
        UnivariatePoly::new(
            self.var.clone(),
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * int(k as i64))
                .collect(),
        )
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        let dl = d.leading().expect("division by zero polynomial");
        let dd = d.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (UnivariatePoly::zero(self.var.clone()), self.clone());
        }
        let mut quot = vec![Rational::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dd] / dl;
            if !c.is_zero() {
                for (j, dc) in d.coeffs.iter().enumerate() {
                    rem[k + j] -= &c * dc;
                }
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        (
            UnivariatePoly::new(self.var.clone(), quot),
            UnivariatePoly::new(self.var.clone(), rem),
        )
    }

    pub fn exact_div(&self, d: &Self) -> Result<Self> {
        if d.is_zero() {
            return Err(Error::NotDivisible);
        }
        let (q, r) = self.div_rem(d);
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::NotDivisible)
        }
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Product of the distinct irreducible factors, monic.
    pub fn square_free(&self) -> Self {
        let g = self.gcd(&self.derivative());
        if g.degree().unwrap_or(0) == 0 {
            return self.monic();
        }
        self.exact_div(&g).expect("gcd divides").monic()
    }

    /// `Some(λ)` when `self == λ·other` with `λ ≠ 0`.
    pub fn proportionality(&self, other: &Self) -> Option<Rational> {
        if self.degree() != other.degree() || self.is_zero() {
            return None;
        }
        let lambda = self.leading()? / other.leading()?;
        let matches = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .all(|(a, b)| *a == b * &lambda);
        matches.then_some(lambda)
    }

    /// True when only even powers appear.
    pub fn is_even(&self) -> bool {
        self.coeffs
            .iter()
            .enumerate()
            .all(|(k, c)| k % 2 == 0 || c.is_zero())
    }

    /// For an even polynomial `p(x) = h(x²)`, returns `h` in `var`.
    pub fn even_part(&self, var: Var) -> Result<Self> {
        if !self.is_even() {
            return Err(Error::NotEven);
        }
        Ok(UnivariatePoly::new(
            var,
            self.coeffs.iter().step_by(2).cloned().collect(),
        ))
    }

    /// Exact interpolant of minimal degree through `points` (distinct
    /// abscissae), via Newton divided differences.
    pub fn interpolate(var: Var, points: &[(Rational, Rational)]) -> Self {
        let n = points.len();
        let xs: Vec<&Rational> = points.iter().map(|(x, _)| x).collect();
        let mut dd: Vec<Rational> = points.iter().map(|(_, y)| y.clone()).collect();
        for level in 1..n {
            for i in (level..n).rev() {
                dd[i] = (&dd[i] - &dd[i - 1]) / (xs[i] - xs[i - level]);
            }
        }
        // Horner on the Newton form.
        let mut acc = UnivariatePoly::zero(var.clone());
        for i in (0..n).rev() {
            acc = acc
                .mul(&UnivariatePoly::linear_root(var.clone(), xs[i].clone()))
                .add(&UnivariatePoly::constant(var.clone(), dd[i].clone()));
        }
        acc
    }

    /// Disjoint intervals `(lo, hi]` each holding exactly one distinct real
    /// root, in increasing order.
    pub fn isolate_real_roots(&self) -> Vec<(Rational, Rational)> {
        if self.degree().unwrap_or(0) == 0 {
            return Vec::new();
        }
        let sf = self.square_free();
        let chain = sturm_chain(&sf);
        let lead = sf.leading().unwrap().abs();
        let bound = sf
            .coeffs
            .iter()
            .map(|c| c.abs() / &lead)
            .fold(Rational::zero(), |m, c| if c > m { c } else { m })
            + int(1);
        let mut out = Vec::new();
        let mut stack = vec![(-bound.clone(), bound)];
        while let Some((lo, hi)) = stack.pop() {
            let count = sign_variations(&chain, &lo) - sign_variations(&chain, &hi);
            match count {
                0 => {}
                1 => out.push((lo, hi)),
                _ => {
                    let mid = (&lo + &hi) / int(2);
                    stack.push((lo, mid.clone()));
                    stack.push((mid, hi));
                }
            }
        }
        out.sort_by(|a, b| a.0.cmp(&b.0));
        out
    }

    /// Distinct real roots, each bracketed to width at most `width`.
    pub fn real_roots(&self, width: &Rational) -> Vec<Rational> {
        let sf = self.square_free();
        self.isolate_real_roots()
            .into_iter()
            .map(|(lo, hi)| refine_root(&sf, lo, hi, width))
            .collect()
    }

    pub fn real_roots_f64(&self) -> Vec<f64> {
        let width = Rational::new(BigInt::one(), BigInt::one() << 80u32);
        self.real_roots(&width).iter().map(to_f64).collect()
    }
}

fn sturm_chain(p: &UnivariatePoly) -> Vec<UnivariatePoly> {
    let positive_normalize = |q: UnivariatePoly| -> UnivariatePoly {
        match q.leading() {
            Some(l) => {
                let s = l.abs().recip();
                q.scale(&s)
            }
            None => q,
        }
    };
    let mut chain = vec![p.clone(), positive_normalize(p.derivative())];
    loop {
        let n = chain.len();
        if chain[n - 1].is_zero() {
            chain.pop();
            break;
        }
        let (_, r) = chain[n - 2].div_rem(&chain[n - 1]);
        if r.is_zero() {
            break;
        }
        chain.push(positive_normalize(r.scale(&int(-1))));
    }
    chain
}

fn sign_variations(chain: &[UnivariatePoly], x: &Rational) -> i64 {
    let mut count = 0;
    let mut last = 0i8;
    for p in chain {
        let v = p.eval(x);
        let s = if v.is_positive() {
            1
        } else if v.is_negative() {
            -1
        } else {
            0
        };
        if s != 0 {
            if last != 0 && s != last {
                count += 1;
            }
            last = s;
        }
    }
    count
}

/// Bisection on a sign change of the square-free `p` inside `(lo, hi]`.
fn refine_root(p: &UnivariatePoly, mut lo: Rational, mut hi: Rational, width: &Rational) -> Rational {
    let sign = |x: &Rational| {
        let v = p.eval(x);
        if v.is_positive() {
            1
        } else if v.is_negative() {
            -1
        } else {
            0
        }
    };
    if sign(&hi) == 0 {
        return hi;
    }
    let s_hi = sign(&hi);
    while &hi - &lo > *width {
        let mid = (&lo + &hi) / int(2);
        match sign(&mid) {
            0 => return mid,
            s if s == s_hi => hi = mid,
            _ => lo = mid,
        }
    }
    (lo + hi) / int(2)
}

impl fmt::Display for UnivariatePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.to_multipoly(), f)
    }
}

impl fmt::Debug for UnivariatePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UnivariatePoly({self})")
    }
}

/// JSON form: `{"unknown": "q0", "coeffs": ["c0", "c1", ...]}`, ascending.
#[derive(Serialize, Deserialize)]
struct UnivariateJson {
    unknown: String,
    coeffs: Vec<String>,
}

impl Serialize for UnivariatePoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        UnivariateJson {
            unknown: self.var.name().to_string(),
            coeffs: self.coeffs.iter().map(ToString::to_string).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for UnivariatePoly {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = UnivariateJson::deserialize(d)?;
        let coeffs = j
            .coeffs
            .iter()
            .map(|c| crate::rational::parse_rational(c))
            .collect::<Result<Vec<_>>>()
            .map_err(serde::de::Error::custom)?;
        Ok(UnivariatePoly::new(Var::new(&j.unknown), coeffs))
    }
}
