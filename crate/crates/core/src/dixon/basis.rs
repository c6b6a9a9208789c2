use crate::polyring::{Monomial, Var};

const EXPONENTS: [[u32; 3]; 20] = [
    [3, 0, 0],
    [2, 1, 0],
    [2, 0, 1],
    [1, 2, 0],
    [1, 1, 1],
    [1, 0, 2],
    [0, 3, 0],
    [0, 2, 1],
    [0, 1, 2],
    [0, 0, 3],
    [2, 0, 0],
    [1, 1, 0],
    [1, 0, 1],
    [0, 2, 0],
    [0, 1, 1],
    [0, 0, 2],
    [1, 0, 0],
    [0, 1, 0],
    [0, 0, 1],
    [0, 0, 0],
];

/// The twenty monomials of degree at most three in three unknowns, cubics
/// first and the constant last. Column order of the Dixon matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct CubicBasis {
    vars: [Var; 3],
    monomials: Vec<Monomial>,
}

impl CubicBasis {
    pub fn new(vars: [Var; 3]) -> Self {
        let monomials = EXPONENTS
            .iter()
            .map(|e| Monomial::from_factors(vars.iter().cloned().zip(e.iter().copied())))
            .collect();
        CubicBasis { vars, monomials }
    }

    pub fn vars(&self) -> &[Var; 3] {
        &self.vars
    }

    pub fn monomials(&self) -> &[Monomial] {
        &self.monomials
    }

    pub fn exponents(k: usize) -> [u32; 3] {
        EXPONENTS[k]
    }

    pub fn index_of(&self, m: &Monomial) -> Option<usize> {
        self.monomials.iter().position(|b| b == m)
    }

    /// The basis evaluated at a point.
    pub fn evaluate(&self, x: [f64; 3]) -> [f64; 20] {
        let mut out = [0.0; 20];
        for (o, e) in out.iter_mut().zip(EXPONENTS.iter()) {
            *o = x[0].powi(e[0] as i32) * x[1].powi(e[1] as i32) * x[2].powi(e[2] as i32);
        }
        out
    }
}
