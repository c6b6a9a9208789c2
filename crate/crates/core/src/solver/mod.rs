//! Forward displacement solving: determinant, extraneous factor removal,
//! the octic in radicals, coordinate recovery and verification.

mod hp;
mod octic;
mod radical;
mod report;

use std::sync::OnceLock;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

pub use hp::{hp_format, hp_rational, hp_to_f64, HpComplex};
pub use octic::{quartic_roots, simplest_between, solve_even_octic, solve_even_octic_detailed, OcticRoots, RadicalRoot, VALUE_DIGITS};
pub use radical::RadicalExpr;
pub use report::{solve_fdp, solve_fdp_with, CrossCheck, Diagnostics, FdpReport, Parameters};

use crate::dixon::{build_dixon_matrix, dixon_determinant, kernel_coordinates, QuadricSystem};
use crate::error::{Error, Result};
use crate::polyring::{UnivariatePoly, Var};
use crate::rational::int;
use crate::spm::{
    extraneous_set_f64, is_extraneous, quaternion_to_rotation, symmetry_orbit, Quaternion,
    QuadricForms, RotationMatrix, QUATERNION_VARS,
};

pub const RESIDUAL_TOL: f64 = 1e-9;
pub const EXTRANEOUS_TOL: f64 = 1e-6;
pub const DEDUP_TOL: f64 = 1e-9;
const POLISH_ITERS: usize = 5;

/// `(2x - 1)^4 (2x + 1)^4` in `var`.
pub fn extraneous_factor(var: Var) -> UnivariatePoly {
    UnivariatePoly::new(var, vec![int(-1), int(0), int(4)]).pow(4)
}

/// Exact quotient of `p` by `(2x - 1)^4 (2x + 1)^4`.
pub fn strip_extraneous_factor(p: &UnivariatePoly) -> Result<UnivariatePoly> {
    p.exact_div(&extraneous_factor(p.var().clone()))
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Solution {
    pub q: [f64; 4],
    pub rotation: [[f64; 3]; 3],
    pub residuals: [f64; 4],
    pub extraneous: bool,
}

impl Solution {
    fn new(q: [f64; 4], forms: &QuadricForms, extraneous: bool) -> Result<Self> {
        let rotation: RotationMatrix = quaternion_to_rotation(&Quaternion(q))?;
        Ok(Solution {
            q,
            rotation: rotation.0,
            residuals: forms.eval(&q),
            extraneous,
        })
    }

    pub fn max_residual(&self) -> f64 {
        self.residuals.iter().fold(0.0, |m, x| m.max(x.abs()))
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SolutionSet {
    pub solutions: Vec<Solution>,
    pub extraneous_removed: usize,
    /// Index of the solution whose orbit opens the list.
    pub orbit_representative: Option<usize>,
    /// Roots whose kernel did not yield coordinates and went through the
    /// per-coordinate fallback.
    pub fallback_roots: usize,
}

impl SolutionSet {
    pub fn non_extraneous(&self) -> impl Iterator<Item = &Solution> {
        self.solutions.iter().filter(|s| !s.extraneous)
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct AssembleOptions {
    pub include_extraneous: bool,
}

fn dist(a: &[f64; 4], b: &[f64; 4]) -> f64 {
    a.iter().zip(b).fold(0.0, |m, (x, y)| m.max((x - y).abs()))
}

fn quaternion_slots(sys: &QuadricSystem) -> Result<[usize; 4]> {
    let slot = |v: &Var| {
        QUATERNION_VARS
            .iter()
            .position(|n| *n == v.name())
            .ok_or_else(|| Error::InvalidSystem(format!("`{v}` is not a quaternion coordinate")))
    };
    let r = sys
        .retained
        .as_ref()
        .ok_or_else(|| Error::InvalidSystem("no retained unknown".into()))?;
    Ok([
        slot(r)?,
        slot(&sys.eliminated[0])?,
        slot(&sys.eliminated[1])?,
        slot(&sys.eliminated[2])?,
    ])
}

pub fn assemble_solutions(sys: &QuadricSystem, roots: &[RadicalRoot]) -> Result<SolutionSet> {
    assemble_solutions_with(sys, roots, AssembleOptions::default())
}

/// Recovers full quaternions from values of the retained coordinate: the
/// kernel of the numeric Dixon matrix when it is one-dimensional, otherwise
/// every combination of real roots of the determinants retaining each other
/// coordinate. Candidates are Newton-polished, verified, stripped of the
/// extraneous points, completed under the symmetry orbit and deduplicated.
pub fn assemble_solutions_with(
    sys: &QuadricSystem,
    roots: &[RadicalRoot],
    opts: AssembleOptions,
) -> Result<SolutionSet> {
    let bound = sys.bound();
    let slots = quaternion_slots(&bound)?;
    let forms = QuadricForms::from_system(&bound)?;
    let dixon = build_dixon_matrix(&bound)?;
    let per_coordinate: OnceLock<Vec<Vec<f64>>> = OnceLock::new();
    let coordinate_roots = || {
        per_coordinate.get_or_init(|| {
            bound
                .eliminated
                .iter()
                .map(|v| {
                    bound
                        .with_retained(v)
                        .and_then(|s| dixon_determinant(&s))
                        .map(|d| d.real_roots_f64())
                        .unwrap_or_default()
                })
                .collect()
        })
    };
    let place = |r: f64, xi: [f64; 3]| {
        let mut q = [0.0; 4];
        q[slots[0]] = r;
        for j in 0..3 {
            q[slots[j + 1]] = xi[j];
        }
        q
    };
    let verify = |q: [f64; 4]| {
        let p = forms.newton(&q, POLISH_ITERS);
        (forms.max_residual(&p) <= RESIDUAL_TOL).then_some(p)
    };

    let per_root: Vec<(Vec<[f64; 4]>, bool)> = roots
        .par_iter()
        .map(|root| {
            let r = root.value_f64();
            if let Ok(Some(xi)) = kernel_coordinates(&dixon, r) {
                if let Some(p) = verify(place(r, xi)) {
                    return (vec![p], false);
                }
            }
            let sets = coordinate_roots();
            let mut found = Vec::new();
            for &a in &sets[0] {
                for &b in &sets[1] {
                    for &c in &sets[2] {
                        let q = place(r, [a, b, c]);
                        if forms.max_residual(&q) <= 1e-6 {
                            if let Some(p) = verify(q) {
                                found.push(p);
                            }
                        }
                    }
                }
            }
            (found, true)
        })
        .collect();
    let fallback_roots = per_root.iter().filter(|(_, fb)| *fb).count();

    let mut extraneous_removed = 0;
    let mut pool: Vec<[f64; 4]> = Vec::new();
    let push = |pool: &mut Vec<[f64; 4]>, q: [f64; 4]| {
        if !pool.iter().any(|p| dist(p, &q) < DEDUP_TOL) {
            pool.push(q);
        }
    };
    for q in per_root.into_iter().flat_map(|(v, _)| v) {
        if is_extraneous(&q, EXTRANEOUS_TOL) {
            extraneous_removed += 1;
            continue;
        }
        push(&mut pool, q);
    }
    let seeds = pool.clone();
    for s in &seeds {
        for member in symmetry_orbit(s) {
            if pool.iter().any(|p| dist(p, &member) < DEDUP_TOL) {
                continue;
            }
            if let Some(p) = verify(member) {
                if !is_extraneous(&p, EXTRANEOUS_TOL) {
                    push(&mut pool, p);
                }
            }
        }
    }

    // Order by orbits, each opened by its smallest positive leading coordinate.
    let mut ordered: Vec<[f64; 4]> = Vec::with_capacity(pool.len());
    while !pool.is_empty() {
        let key = |q: &[f64; 4]| (q[0] <= 0.0, q[0].abs());
        let rep = (0..pool.len())
            .min_by(|&i, &j| key(&pool[i]).partial_cmp(&key(&pool[j])).expect("finite"))
            .expect("nonempty");
        let rep = pool[rep];
        for member in symmetry_orbit(&rep) {
            if let Some(k) = pool.iter().position(|p| dist(p, &member) < DEDUP_TOL) {
                ordered.push(pool.swap_remove(k));
            }
        }
    }
    if ordered.is_empty() {
        return Err(Error::NoRealSolutions);
    }
    let mut solutions = ordered
        .into_iter()
        .map(|q| Solution::new(q, &forms, false))
        .collect::<Result<Vec<_>>>()?;
    if opts.include_extraneous {
        for rho in extraneous_set_f64() {
            if forms.max_residual(&rho) <= RESIDUAL_TOL {
                solutions.push(Solution::new(rho, &forms, true)?);
            }
        }
    }
    Ok(SolutionSet {
        solutions,
        extraneous_removed,
        orbit_representative: Some(0),
        fallback_roots,
    })
}
