use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

/// Unknowns with a fixed position in the global variable order. Any other
/// name sorts after these, alphabetically.
const FIXED_ORDER: [&str; 13] = [
    "q0", "q1", "q2", "q3", "x1", "x2", "x3", "y1", "y2", "y3", "a", "b", "c",
];

/// A named unknown. Cheap to clone.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Var(Arc<str>);

impl Var {
    pub fn new(name: &str) -> Self {
        Var(Arc::from(name))
    }

    pub fn name(&self) -> &str {
        &self.0
    }

    fn rank(&self) -> usize {
        FIXED_ORDER
            .iter()
            .position(|n| *n == &*self.0)
            .unwrap_or(FIXED_ORDER.len())
    }
}

impl From<&str> for Var {
    fn from(name: &str) -> Self {
        Var::new(name)
    }
}

impl Ord for Var {
    fn cmp(&self, other: &Self) -> Ordering {
        self.rank()
            .cmp(&other.rank())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Var {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// Power product of unknowns. Factors are kept sorted by [`Var`] order and
/// zero exponents are never stored.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial(Vec<(Var, u32)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(v: Var) -> Self {
        Monomial(vec![(v, 1)])
    }

    pub fn from_factors(factors: impl IntoIterator<Item = (Var, u32)>) -> Self {
        let mut out: Vec<(Var, u32)> = Vec::new();
        for (v, e) in factors {
            if e == 0 {
                continue;
            }
            match out.binary_search_by(|(w, _)| w.cmp(&v)) {
                Ok(i) => out[i].1 += e,
                Err(i) => out.insert(i, (v, e)),
            }
        }
        Monomial(out)
    }

    pub fn factors(&self) -> &[(Var, u32)] {
        &self.0
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|(_, e)| e).sum()
    }

    pub fn exponent(&self, v: &Var) -> u32 {
        self.0
            .binary_search_by(|(w, _)| w.cmp(v))
            .map(|i| self.0[i].1)
            .unwrap_or(0)
    }

    /// Total degree restricted to `vars`.
    pub fn degree_in(&self, vars: &[Var]) -> u32 {
        self.0
            .iter()
            .filter(|(v, _)| vars.contains(v))
            .map(|(_, e)| e)
            .sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((a[i].0.clone(), a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial(out)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().all(|(v, e)| other.exponent(v) >= *e)
    }

    /// `other / self`, if `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        Some(Monomial(
            other
                .0
                .iter()
                .filter_map(|(v, e)| {
                    let rest = e - self.exponent(v);
                    (rest > 0).then(|| (v.clone(), rest))
                })
                .collect(),
        ))
    }

    /// Splits into the part in `vars` and the remaining cofactor.
    pub fn split(&self, vars: &[Var]) -> (Monomial, Monomial) {
        let (inside, outside): (Vec<_>, Vec<_>) =
            self.0.iter().cloned().partition(|(v, _)| vars.contains(v));
        (Monomial(inside), Monomial(outside))
    }

    /// Lexicographic comparison on the fixed variable order, earliest
    /// variable most significant.
    fn lex_cmp(&self, other: &Monomial) -> Ordering {
        let (a, b) = (&self.0, &other.0);
        let (mut i, mut j) = (0, 0);
        loop {
            match (a.get(i), b.get(j)) {
                (None, None) => return Ordering::Equal,
                (Some(_), None) => return Ordering::Greater,
                (None, Some(_)) => return Ordering::Less,
                (Some((va, ea)), Some((vb, eb))) => match va.cmp(vb) {
                    Ordering::Less => return Ordering::Greater,
                    Ordering::Greater => return Ordering::Less,
                    Ordering::Equal => {
                        if ea != eb {
                            return ea.cmp(eb);
                        }
                        i += 1;
                        j += 1;
                    }
                },
            }
        }
    }
}

/// Graded lexicographic order.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.lex_cmp(other))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (i, (v, e)) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str("*")?;
            }
            if *e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

/// Ideal generated by monomials; membership is divisibility by a generator.
#[derive(Clone, Debug, Default)]
pub struct MonomialIdeal {
    generators: Vec<Monomial>,
}

impl MonomialIdeal {
    pub fn new(generators: Vec<Monomial>) -> Self {
        MonomialIdeal { generators }
    }

    /// All monomials of total degree two in `vars`.
    pub fn quadratic_in(vars: &[Var]) -> Self {
        let mut generators = Vec::new();
        for (i, a) in vars.iter().enumerate() {
            for b in &vars[i..] {
                generators.push(Monomial::from_factors([(a.clone(), 1), (b.clone(), 1)]));
            }
        }
        MonomialIdeal { generators }
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.generators
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.generators.iter().any(|g| g.divides(m))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(f: &[(&str, u32)]) -> Monomial {
        Monomial::from_factors(f.iter().map(|(v, e)| (Var::new(v), *e)))
    }

    #[test]
    fn variable_order_is_fixed_then_alphabetical() {
        let mut vs: Vec<Var> = ["c", "A1", "q3", "x1", "q0", "B1", "y2"]
            .iter()
            .map(|s| Var::new(s))
            .collect();
        vs.sort();
        let names: Vec<_> = vs.iter().map(Var::name).collect();
        assert_eq!(names, ["q0", "q3", "x1", "y2", "c", "A1", "B1"]);
    }

    #[test]
    fn grlex_order() {
        assert!(m(&[("q0", 2)]) > m(&[("q0", 1), ("q1", 1)]));
        assert!(m(&[("q0", 1), ("q1", 1)]) > m(&[("q1", 2)]));
        assert!(m(&[("q3", 3)]) > m(&[("q0", 2)]));
        assert!(m(&[("q0", 1)]) > Monomial::one());
    }

    #[test]
    fn zero_exponents_dropped() {
        assert_eq!(m(&[("x1", 0), ("x2", 1)]), m(&[("x2", 1)]));
        assert_eq!(m(&[("x1", 1), ("x1", 2)]).degree(), 3);
    }

    #[test]
    fn divisibility_and_quotient() {
        let a = m(&[("x1", 1)]);
        let b = m(&[("x1", 2), ("y1", 1)]);
        assert!(a.divides(&b));
        assert_eq!(a.quotient_of(&b).unwrap(), m(&[("x1", 1), ("y1", 1)]));
        assert!(b.quotient_of(&a).is_none());
    }

    #[test]
    fn quadratic_ideal_membership() {
        let vars = [Var::new("a"), Var::new("b"), Var::new("c")];
        let ideal = MonomialIdeal::quadratic_in(&vars);
        assert_eq!(ideal.generators().len(), 6);
        assert!(ideal.contains(&m(&[("a", 1), ("b", 1), ("x1", 3)])));
        assert!(ideal.contains(&m(&[("c", 2)])));
        assert!(!ideal.contains(&m(&[("a", 1), ("x1", 3)])));
    }
}
