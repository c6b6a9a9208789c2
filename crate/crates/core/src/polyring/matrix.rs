use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::monomial::MonomialIdeal;
use super::multipoly::MultiPoly;
use crate::error::{Error, Result};
use crate::rational::{denominator_lcm, Rational};

/// Dense matrix of polynomials.
#[derive(Clone, Debug, PartialEq)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<MultiPoly>,
}

impl PolyMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        PolyMatrix {
            rows,
            cols,
            entries: vec![MultiPoly::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = PolyMatrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, MultiPoly::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<MultiPoly>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::InvalidSystem("ragged matrix rows".into()));
        }
        Ok(PolyMatrix {
            rows: r,
            cols: c,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &MultiPoly {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, p: MultiPoly) {
        self.entries[i * self.cols + j] = p;
    }

    pub fn row(&self, i: usize) -> &[MultiPoly] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn map(&self, f: impl Fn(&MultiPoly) -> MultiPoly) -> PolyMatrix {
        PolyMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    /// `self * v` for a column vector of polynomials.
    pub fn apply(&self, v: &[MultiPoly]) -> Vec<MultiPoly> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(MultiPoly::zero(), |acc, (a, b)| &acc + &(a * b))
            })
            .collect()
    }

    /// Constant entries as a rational matrix, if every entry is constant.
    pub fn to_rational(&self) -> Option<RationalMatrix> {
        let entries = self
            .entries
            .iter()
            .map(MultiPoly::as_constant)
            .collect::<Option<Vec<_>>>()?;
        Some(RationalMatrix {
            rows: self.rows,
            cols: self.cols,
            entries,
        })
    }

    /// Exact determinant. Constant matrices go through Bareiss elimination;
    /// anything else through memoized expansion by minors. With a
    /// truncation ideal, products landing in the ideal are dropped as the
    /// expansion proceeds, which yields the determinant reduced modulo it.
    pub fn determinant(&self, truncation: Option<&MonomialIdeal>) -> Result<MultiPoly> {
        self.check_square()?;
        if truncation.is_none() {
            if let Some(r) = self.to_rational() {
                return Ok(MultiPoly::constant(r.determinant()?));
            }
        }
        self.determinant_by_minors(truncation)
    }

    pub fn determinant_by_minors(&self, truncation: Option<&MonomialIdeal>) -> Result<MultiPoly> {
        self.check_square()?;
        assert!(self.rows <= 64, "minor expansion limited to 64 columns");
        let mut memo = HashMap::new();
        Ok(self.minor(0, &mut memo, truncation))
    }

    fn check_square(&self) -> Result<()> {
        if self.rows != self.cols {
            return Err(Error::NonSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        Ok(())
    }

    /// Determinant of the trailing rows restricted to columns outside `used`.
    fn minor(
        &self,
        used: u64,
        memo: &mut HashMap<u64, MultiPoly>,
        ideal: Option<&MonomialIdeal>,
    ) -> MultiPoly {
        let row = used.count_ones() as usize;
        if row == self.rows {
            return MultiPoly::one();
        }
        if let Some(hit) = memo.get(&used) {
            return hit.clone();
        }
        let mut acc = MultiPoly::zero();
        let mut position = 0;
        for col in 0..self.cols {
            if used & (1 << col) != 0 {
                continue;
            }
            let entry = self.get(row, col);
            if !entry.is_zero() {
                let sub = self.minor(used | (1 << col), memo, ideal);
                if !sub.is_zero() {
                    let term = entry.mul_truncated(&sub, ideal);
                    acc = if position % 2 == 0 {
                        &acc + &term
                    } else {
                        &acc - &term
                    };
                }
            }
            position += 1;
        }
        memo.insert(used, acc.clone());
        acc
    }
}

/// Dense matrix of rationals.
#[derive(Clone, Debug, PartialEq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl RationalMatrix {
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::InvalidSystem("ragged matrix rows".into()));
        }
        Ok(RationalMatrix {
            rows: r,
            cols: c,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.entries[i * self.cols + j]
    }

    /// Fraction-free Bareiss elimination after clearing each row's
    /// denominators.
    pub fn determinant(&self) -> Result<Rational> {
        if self.rows != self.cols {
            return Err(Error::NonSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        if n == 0 {
            return Ok(Rational::one());
        }
        let mut scale = BigInt::one();
        let mut m: Vec<Vec<BigInt>> = Vec::with_capacity(n);
        for i in 0..n {
            let row = &self.entries[i * n..(i + 1) * n];
            let l = denominator_lcm(row);
            m.push(
                row.iter()
                    .map(|r| r.numer() * (&l / r.denom()))
                    .collect(),
            );
            scale *= l;
        }
        let det = bareiss(&mut m);
        Ok(Rational::new(det, scale))
    }
}

/// Determinant of an integer matrix; destroys its argument.
pub fn bareiss(m: &mut [Vec<BigInt>]) -> BigInt {
    let n = m.len();
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(k, i);
                    negate = !negate;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&m[i][j] * &m[k][k] - &m[i][k] * &m[k][j]) / &prev;
                m[i][j] = v;
            }
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if negate {
        -det
    } else {
        det
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::Var;
    use crate::rational::{int, ratio};

    fn p(s: &str) -> MultiPoly {
        s.parse().unwrap()
    }

    #[test]
    fn two_by_two_symbolic() {
        let m = PolyMatrix::from_rows(vec![vec![p("x1"), p("1")], vec![p("1"), p("x1")]]).unwrap();
        assert_eq!(m.determinant(None).unwrap(), p("x1^2 - 1"));
    }

    #[test]
    fn identity_twenty() {
        let m = PolyMatrix::identity(20);
        assert_eq!(m.determinant(None).unwrap(), MultiPoly::one());
        assert_eq!(m.determinant_by_minors(None).unwrap(), MultiPoly::one());
    }

    #[test]
    fn non_square_rejected() {
        let m = PolyMatrix::zeros(2, 3);
        assert_eq!(
            m.determinant(None),
            Err(Error::NonSquare { rows: 2, cols: 3 })
        );
    }

    #[test]
    fn bareiss_handles_pivoting_and_fractions() {
        let m = RationalMatrix::from_rows(vec![
            vec![int(0), int(2), int(1)],
            vec![ratio(1, 2), int(1), int(0)],
            vec![int(3), ratio(-1, 3), int(4)],
        ])
        .unwrap();
        // cofactor expansion by hand: 0*(4) - 2*(2 - 0) + 1*(-1/6 - 3) = -4 - 19/6
        assert_eq!(m.determinant().unwrap(), ratio(-43, 6));
        let singular =
            RationalMatrix::from_rows(vec![vec![int(1), int(2)], vec![int(2), int(4)]]).unwrap();
        assert_eq!(singular.determinant().unwrap(), int(0));
    }

    #[test]
    fn truncated_determinant_matches_reduction() {
        let vars = [Var::new("a"), Var::new("b"), Var::new("c")];
        let ideal = MonomialIdeal::quadratic_in(&vars);
        let m = PolyMatrix::from_rows(vec![
            vec![p("a + x1"), p("b"), p("1")],
            vec![p("c - 2"), p("a*x1 + 1"), p("b + c")],
            vec![p("3"), p("x2"), p("a - b + 1/2")],
        ])
        .unwrap();
        let full = m.determinant(None).unwrap();
        let truncated = m.determinant(Some(&ideal)).unwrap();
        assert_eq!(truncated, full.reduce_modulo(&ideal));
    }
}
