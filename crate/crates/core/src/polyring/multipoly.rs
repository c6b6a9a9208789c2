use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::monomial::{Monomial, MonomialIdeal, Var};
use crate::error::{Error, Result};
use crate::rational::{to_f64, Rational};

/// Sparse multivariate polynomial over the rationals. Terms are keyed by
/// monomial in graded-lex order; zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct MultiPoly {
    terms: BTreeMap<Monomial, Rational>,
}

impl MultiPoly {
    pub fn zero() -> Self {
        MultiPoly::default()
    }

    pub fn one() -> Self {
        MultiPoly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        MultiPoly::term(c, Monomial::one())
    }

    pub fn var(name: &str) -> Self {
        MultiPoly::term(Rational::one(), Monomial::var(Var::new(name)))
    }

    pub fn from_var(v: &Var) -> Self {
        MultiPoly::term(Rational::one(), Monomial::var(v.clone()))
    }

    pub fn term(c: Rational, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        MultiPoly { terms }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, Rational)>) -> Self {
        let mut p = MultiPoly::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    /// The constant value, if the polynomial has no unknowns.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&Monomial::one()).cloned(),
            _ => None,
        }
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    /// Unknowns that occur, in the global order.
    pub fn unknowns(&self) -> Vec<Var> {
        let set: BTreeSet<Var> = self
            .terms
            .keys()
            .flat_map(|m| m.factors().iter().map(|(v, _)| v.clone()))
            .collect();
        set.into_iter().collect()
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// Total degree in the given unknowns only; zero polynomial gives 0.
    pub fn degree_in(&self, vars: &[Var]) -> u32 {
        self.terms
            .keys()
            .map(|m| m.degree_in(vars))
            .max()
            .unwrap_or(0)
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &Rational) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero();
        }
        MultiPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, k)| (m.clone(), k * c))
                .collect(),
        }
    }

    pub fn mul_monomial(&self, mono: &Monomial) -> MultiPoly {
        MultiPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, k)| (m.mul(mono), k.clone()))
                .collect(),
        }
    }

    /// Product with every term lying in `ideal` dropped.
    pub fn mul_truncated(&self, other: &MultiPoly, ideal: Option<&MonomialIdeal>) -> MultiPoly {
        let mut acc: HashMap<Monomial, Rational> = HashMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m = ma.mul(mb);
                if ideal.is_some_and(|i| i.contains(&m)) {
                    continue;
                }
                let c = ca * cb;
                *acc.entry(m).or_insert_with(Rational::zero) += c;
            }
        }
        MultiPoly {
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    /// Drops every term lying in `ideal`.
    pub fn reduce_modulo(&self, ideal: &MonomialIdeal) -> MultiPoly {
        MultiPoly {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| !ideal.contains(m))
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, n: u32) -> MultiPoly {
        let mut result = MultiPoly::one();
        for _ in 0..n {
            result = &result * self;
        }
        result
    }

    /// Image under the substitution homomorphism `v -> bindings[v]`.
    /// Unknowns without a binding are left alone.
    pub fn substitute(&self, bindings: &HashMap<Var, MultiPoly>) -> MultiPoly {
        let mut powers: HashMap<(Var, u32), MultiPoly> = HashMap::new();
        let mut out = MultiPoly::zero();
        for (m, c) in &self.terms {
            let mut kept = Vec::new();
            let mut product = MultiPoly::constant(c.clone());
            for (v, e) in m.factors() {
                match bindings.get(v) {
                    Some(image) => {
                        let p = powers
                            .entry((v.clone(), *e))
                            .or_insert_with(|| image.pow(*e));
                        product = &product * &*p;
                    }
                    None => kept.push((v.clone(), *e)),
                }
            }
            let product = product.mul_monomial(&Monomial::from_factors(kept));
            out = &out + &product;
        }
        out
    }

    /// Substitutes rational values for some unknowns.
    pub fn substitute_values(&self, values: &HashMap<Var, Rational>) -> MultiPoly {
        let bindings = values
            .iter()
            .map(|(v, r)| (v.clone(), MultiPoly::constant(r.clone())))
            .collect();
        self.substitute(&bindings)
    }

    /// Renames unknowns.
    pub fn rename(&self, map: &HashMap<Var, Var>) -> MultiPoly {
        MultiPoly::from_terms(self.terms.iter().map(|(m, c)| {
            let mono = Monomial::from_factors(
                m.factors()
                    .iter()
                    .map(|(v, e)| (map.get(v).unwrap_or(v).clone(), *e)),
            );
            (mono, c.clone())
        }))
    }

    /// Exact evaluation; every unknown must be bound.
    pub fn eval_rational(&self, values: &HashMap<Var, Rational>) -> Result<Rational> {
        let mut total = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (v, e) in m.factors() {
                let x = values
                    .get(v)
                    .ok_or_else(|| Error::UnboundParameter(v.to_string()))?;
                t *= num_traits::pow(x.clone(), *e as usize);
            }
            total += t;
        }
        Ok(total)
    }

    /// Floating evaluation; every unknown must be bound.
    pub fn eval_f64(&self, values: &HashMap<Var, f64>) -> Result<f64> {
        let mut total = 0.0;
        for (m, c) in &self.terms {
            let mut t = to_f64(c);
            for (v, e) in m.factors() {
                let x = values
                    .get(v)
                    .ok_or_else(|| Error::UnboundParameter(v.to_string()))?;
                t *= x.powi(*e as i32);
            }
            total += t;
        }
        Ok(total)
    }

    pub fn derivative(&self, v: &Var) -> MultiPoly {
        MultiPoly::from_terms(self.terms.iter().filter_map(|(m, c)| {
            let e = m.exponent(v);
            (e > 0).then(|| {
                let rest = Monomial::from_factors(
                    m.factors()
                        .iter()
                        .map(|(w, k)| (w.clone(), if w == v { k - 1 } else { *k })),
                );
                (rest, c * Rational::from_integer(e.into()))
            })
        }))
    }

    /// Groups terms by their monomial in `vars`; each value is the
    /// coefficient polynomial in the remaining unknowns.
    pub fn coefficients_in(&self, vars: &[Var]) -> BTreeMap<Monomial, MultiPoly> {
        let mut out: BTreeMap<Monomial, MultiPoly> = BTreeMap::new();
        for (m, c) in &self.terms {
            let (inside, outside) = m.split(vars);
            out.entry(inside).or_default().add_term(outside, c.clone());
        }
        out
    }

    /// Coefficient of monomial `m` (in `vars`) as a polynomial in the rest.
    pub fn coefficient_in(&self, vars: &[Var], m: &Monomial) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (mono, c) in &self.terms {
            let (inside, outside) = mono.split(vars);
            if &inside == m {
                out.add_term(outside, c.clone());
            }
        }
        out
    }

    /// `q` with `q * d == self`, by multivariate division in graded-lex
    /// order. Fails with [`Error::NotDivisible`] on a nonzero remainder.
    pub fn exact_quotient(&self, d: &MultiPoly) -> Result<MultiPoly> {
        let (lead_m, lead_c) = d.leading_term().ok_or(Error::NotDivisible)?;
        let mut rest = self.clone();
        let mut quotient = MultiPoly::zero();
        while let Some((m, c)) = rest.leading_term() {
            let qm = lead_m.quotient_of(m).ok_or(Error::NotDivisible)?;
            let qc = c / lead_c;
            rest = &rest - &d.mul_monomial(&qm).scale(&qc);
            quotient.add_term(qm, qc);
        }
        Ok(quotient)
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        self.mul_truncated(rhs, None)
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr for MultiPoly {
            type Output = MultiPoly;
            fn $f(self, rhs: MultiPoly) -> MultiPoly {
                (&self).$f(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        -&self
    }
}

impl From<Rational> for MultiPoly {
    fn from(c: Rational) -> Self {
        MultiPoly::constant(c)
    }
}
