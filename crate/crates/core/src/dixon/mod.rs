//! Dixon resultant elimination of three unknowns from four quadrics.

mod basis;
mod system;

use std::collections::HashMap;

use nalgebra::DMatrix;
use rayon::prelude::*;

pub use basis::CubicBasis;
pub use system::QuadricSystem;

use crate::error::{Error, Result};
use crate::polyring::{Monomial, MonomialIdeal, MultiPoly, PolyMatrix, UnivariatePoly, Var};
use crate::rational::{int, Rational};

/// Where a row of the Dixon matrix comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RowSource {
    /// `f_i` itself (0-based `i`).
    Quadric(usize),
    /// `x_j * f_i`.
    Shifted { var: usize, quadric: usize },
    /// A coefficient of the Dixon polynomial, by exponents of the auxiliaries.
    Psi([u32; 3]),
}

/// The four coefficients of the truncated Dixon polynomial:
/// `psi000 + psi100*a + psi010*b + psi001*c`.
#[derive(Clone, Debug, PartialEq)]
pub struct PsiSet {
    pub psi000: MultiPoly,
    pub psi100: MultiPoly,
    pub psi010: MultiPoly,
    pub psi001: MultiPoly,
}

impl PsiSet {
    pub fn as_array(&self) -> [&MultiPoly; 4] {
        [&self.psi000, &self.psi100, &self.psi010, &self.psi001]
    }
}

#[derive(Clone, Debug)]
pub struct DixonMatrix {
    pub matrix: PolyMatrix,
    pub rows: Vec<MultiPoly>,
    pub provenance: Vec<RowSource>,
    pub basis: CubicBasis,
    pub retained: Option<Var>,
}

fn check_fresh(sys: &QuadricSystem, names: &[Var]) -> Result<()> {
    for p in &sys.polys {
        for v in p.unknowns() {
            if names.contains(&v) {
                return Err(Error::InvalidSystem(format!(
                    "auxiliary unknown `{v}` already occurs in the system"
                )));
            }
        }
    }
    Ok(())
}

fn build_u_with(sys: &QuadricSystem, aux: &[Var; 3]) -> Result<PolyMatrix> {
    check_fresh(sys, aux)?;
    let x = &sys.eliminated;
    let rows = sys
        .polys
        .iter()
        .map(|f| {
            let mut stages = vec![f.clone()];
            for j in 0..3 {
                let mut sub = HashMap::new();
                sub.insert(x[j].clone(), MultiPoly::from_var(&aux[j]));
                let next = stages[j].substitute(&sub);
                stages.push(next);
            }
            let mut row = Vec::with_capacity(4);
            for j in 0..3 {
                let diff = &stages[j] - &stages[j + 1];
                let den = &MultiPoly::from_var(&x[j]) - &MultiPoly::from_var(&aux[j]);
                row.push(diff.exact_quotient(&den)?);
            }
            row.push(stages[3].clone());
            Ok(row)
        })
        .collect::<Result<Vec<_>>>()?;
    PolyMatrix::from_rows(rows)
}

/// The 4x4 matrix of divided differences whose determinant is the Dixon
/// polynomial, with auxiliary unknowns `y1, y2, y3`. Column four holds
/// `f_i(y1, y2, y3)`.
pub fn build_u(sys: &QuadricSystem) -> Result<PolyMatrix> {
    build_u_with(&sys.bound(), &[Var::new("y1"), Var::new("y2"), Var::new("y3")])
}

/// The constant and linear coefficients of the Dixon polynomial in the
/// auxiliaries `a, b, c`, computed modulo all their quadratic monomials.
pub fn extract_psi(sys: &QuadricSystem) -> Result<PsiSet> {
    let sys = &sys.bound();
    let aux = [Var::new("a"), Var::new("b"), Var::new("c")];
    let u = build_u_with(sys, &aux)?;
    let ideal = MonomialIdeal::quadratic_in(&aux);
    let delta = u.determinant(Some(&ideal))?;
    let coeffs = delta.coefficients_in(&aux);
    let pick = |m: Monomial| coeffs.get(&m).cloned().unwrap_or_else(MultiPoly::zero);
    Ok(PsiSet {
        psi000: pick(Monomial::one()),
        psi100: pick(Monomial::var(aux[0].clone())),
        psi010: pick(Monomial::var(aux[1].clone())),
        psi001: pick(Monomial::var(aux[2].clone())),
    })
}

/// Rows `f1..f4`, `x_j*f_i` for `j = 1..3`, `i = 1..4`, then the four
/// coefficients from [`extract_psi`]; columns indexed by [`CubicBasis`].
pub fn build_dixon_matrix(sys: &QuadricSystem) -> Result<DixonMatrix> {
    let sys = &sys.bound();
    let basis = CubicBasis::new(sys.eliminated.clone());
    let mut rows = Vec::with_capacity(20);
    let mut provenance = Vec::with_capacity(20);
    for (i, f) in sys.polys.iter().enumerate() {
        rows.push(f.clone());
        provenance.push(RowSource::Quadric(i));
    }
    for (j, xj) in sys.eliminated.iter().enumerate() {
        let m = Monomial::var(xj.clone());
        for (i, f) in sys.polys.iter().enumerate() {
            rows.push(f.mul_monomial(&m));
            provenance.push(RowSource::Shifted { var: j, quadric: i });
        }
    }
    let psi = extract_psi(sys)?;
    for (p, e) in psi
        .as_array()
        .into_iter()
        .zip([[0, 0, 0], [1, 0, 0], [0, 1, 0], [0, 0, 1]])
    {
        rows.push(p.clone());
        provenance.push(RowSource::Psi(e));
    }
    let mut matrix = PolyMatrix::zeros(20, 20);
    for (r, g) in rows.iter().enumerate() {
        for (m, coeff) in g.coefficients_in(&sys.eliminated) {
            let c = basis.index_of(&m).ok_or_else(|| {
                Error::InvalidSystem(format!("row {} has monomial `{m}` outside the cubic basis", r + 1))
            })?;
            matrix.set(r, c, coeff);
        }
    }
    Ok(DixonMatrix {
        matrix,
        rows,
        provenance,
        basis,
        retained: sys.retained.clone(),
    })
}

impl DixonMatrix {
    /// Entries as univariate polynomials in the retained unknown.
    pub fn univariate_entries(&self) -> Result<Vec<Vec<UnivariatePoly>>> {
        let t = self
            .retained
            .clone()
            .ok_or_else(|| Error::InvalidSystem("no retained unknown".into()))?;
        (0..20)
            .map(|i| {
                (0..20)
                    .map(|j| {
                        let e = self.matrix.get(i, j);
                        if let Some(v) = e.unknowns().into_iter().find(|v| *v != t) {
                            return Err(Error::UnboundParameter(v.name().to_string()));
                        }
                        UnivariatePoly::from_multipoly(e, &t)
                    })
                    .collect()
            })
            .collect()
    }

    /// The matrix at `retained = value`, each row scaled to unit max-norm.
    pub fn numeric(&self, value: f64) -> Result<DMatrix<f64>> {
        let mut env = HashMap::new();
        if let Some(t) = &self.retained {
            env.insert(t.clone(), value);
        }
        let mut m = DMatrix::zeros(20, 20);
        for i in 0..20 {
            for j in 0..20 {
                m[(i, j)] = self.matrix.get(i, j).eval_f64(&env)?;
            }
            let norm = m.row(i).amax();
            if norm > 0.0 {
                m.row_mut(i).scale_mut(1.0 / norm);
            }
        }
        Ok(m)
    }

    /// Ratio of smallest to largest singular value of [`Self::numeric`].
    pub fn singular_ratio(&self, value: f64) -> Result<f64> {
        let s = self.numeric(value)?.singular_values();
        let max = s.max();
        Ok(if max > 0.0 { s.min() / max } else { 0.0 })
    }
}

const SINGULAR_TOL: f64 = 1e-8;

/// Coordinates of the eliminated unknowns read off the null vector of the
/// numeric Dixon matrix at `retained = value`. `None` when the matrix is
/// nonsingular or the null vector has a vanishing constant entry.
pub fn kernel_coordinates(d: &DixonMatrix, value: f64) -> Result<Option<[f64; 3]>> {
    let svd = d.numeric(value)?.svd(false, true);
    let s = &svd.singular_values;
    let max = s.max();
    if max == 0.0 {
        return Err(Error::AmbiguousKernel(20));
    }
    let small: Vec<usize> = (0..s.len()).filter(|&k| s[k] < SINGULAR_TOL * max).collect();
    match small.len() {
        0 => Ok(None),
        1 => {
            let v_t = svd.v_t.expect("requested V");
            let v = v_t.row(small[0]);
            if v[19].abs() < SINGULAR_TOL {
                return Ok(None);
            }
            Ok(Some([v[16] / v[19], v[17] / v[19], v[18] / v[19]]))
        }
        n => Err(Error::AmbiguousKernel(n)),
    }
}

/// Exact determinant of the Dixon matrix as a polynomial in the retained
/// unknown, by exact evaluation at integer points and interpolation.
pub fn dixon_determinant(sys: &QuadricSystem) -> Result<UnivariatePoly> {
    let bound_sys = sys.bound();
    if let Some(p) = bound_sys.free_parameters().first() {
        return Err(Error::UnboundParameter(p.name().to_string()));
    }
    let t = bound_sys
        .retained
        .clone()
        .ok_or_else(|| Error::InvalidSystem("no retained unknown".into()))?;
    let d = build_dixon_matrix(&bound_sys)?;
    let entries = d.univariate_entries()?;
    let degree_bound: usize = entries
        .iter()
        .map(|row| row.iter().filter_map(UnivariatePoly::degree).max().unwrap_or(0))
        .sum();
    let half = degree_bound.max(40).div_ceil(2) as i64;
    let abscissae: Vec<i64> = (-half..=half).chain([half + 1]).collect();
    let values = abscissae
        .par_iter()
        .map(|&k| {
            let x = int(k);
            let rows: Vec<Vec<Rational>> = entries
                .iter()
                .map(|row| row.iter().map(|e| e.eval(&x)).collect())
                .collect();
            Ok((x, crate::polyring::RationalMatrix::from_rows(rows)?.determinant()?))
        })
        .collect::<Result<Vec<_>>>()?;
    let (check, fit) = values.split_last().expect("nonempty");
    let det = UnivariatePoly::interpolate(t, fit);
    if det.eval(&check.0) != check.1 {
        return Err(Error::InvalidSystem("interpolation check failed".into()));
    }
    if det.is_zero() {
        return Err(Error::DegenerateSystem);
    }
    Ok(det)
}
