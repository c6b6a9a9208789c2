//! Brute-force ground truth for quaternion quadric systems: damped Newton
//! from a dense grid of seeds on the unit 3-sphere. Shares nothing with the
//! elimination pipeline beyond polynomial evaluation.

use std::collections::HashMap;
use std::f64::consts::PI;

use nalgebra::{Matrix4, Vector4};
use num_traits::Zero;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::dixon::QuadricSystem;
use crate::error::{Error, Result};
use crate::polyring::{MultiPoly, Var};
use crate::rational::{to_f64, Rational};

const COORDS: [&str; 4] = ["q0", "q1", "q2", "q3"];

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct OracleConfig {
    /// Grid points per hyperspherical angle.
    pub grid_resolution: usize,
    pub newton_iters: usize,
    pub residual_tol: f64,
    pub dedup_tol: f64,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            grid_resolution: 24,
            newton_iters: 50,
            residual_tol: 1e-12,
            dedup_tol: 1e-8,
        }
    }
}

impl OracleConfig {
    pub fn validate(&self) -> Result<()> {
        if self.grid_resolution < 8 {
            return Err(Error::InvalidConfig("grid_resolution must be at least 8".into()));
        }
        if !(self.residual_tol > 0.0 && self.dedup_tol > 0.0) {
            return Err(Error::InvalidConfig("tolerances must be positive".into()));
        }
        Ok(())
    }
}

/// Dense `(A, b, c)` per equation, `f = q.A.q + b.q + c`.
struct Dense {
    a: [Matrix4<f64>; 4],
    b: [Vector4<f64>; 4],
    c: [f64; 4],
}

impl Dense {
    fn new(sys: &QuadricSystem) -> Result<Self> {
        let bound = sys.bound();
        let mut d = Dense {
            a: [Matrix4::zeros(); 4],
            b: [Vector4::zeros(); 4],
            c: [0.0; 4],
        };
        for (i, f) in bound.polys.iter().enumerate() {
            for (m, coeff) in f.terms() {
                let mut idx = Vec::new();
                for (v, e) in m.factors() {
                    let k = COORDS
                        .iter()
                        .position(|n| *n == v.name())
                        .ok_or_else(|| Error::UnboundParameter(v.name().to_string()))?;
                    for _ in 0..*e {
                        idx.push(k);
                    }
                }
                let c = to_f64(coeff);
                match idx[..] {
                    [] => d.c[i] += c,
                    [k] => d.b[i][k] += c,
                    [k, l] => {
                        d.a[i][(k, l)] += c / 2.0;
                        d.a[i][(l, k)] += c / 2.0;
                    }
                    _ => return Err(Error::InvalidSystem(format!("f{} is not quadratic", i + 1))),
                }
            }
        }
        Ok(d)
    }

    fn f(&self, x: &Vector4<f64>) -> Vector4<f64> {
        Vector4::from_fn(|i, _| x.dot(&(self.a[i] * x)) + self.b[i].dot(x) + self.c[i])
    }

    fn jacobian(&self, x: &Vector4<f64>) -> Matrix4<f64> {
        let mut j = Matrix4::zeros();
        for i in 0..4 {
            j.set_row(i, &(2.0 * self.a[i] * x + self.b[i]).transpose());
        }
        j
    }

    fn newton(&self, seed: Vector4<f64>, iters: usize) -> Vector4<f64> {
        let mut x = seed;
        let mut fx = self.f(&x);
        for _ in 0..iters {
            let norm = fx.amax();
            if norm < 1e-15 {
                break;
            }
            let Some(step) = self.jacobian(&x).lu().solve(&fx) else {
                break;
            };
            let mut scale = 1.0;
            let mut accepted = false;
            for _ in 0..12 {
                let trial = x - scale * step;
                let ft = self.f(&trial);
                if ft.amax() < norm {
                    x = trial;
                    fx = ft;
                    accepted = true;
                    break;
                }
                scale *= 0.5;
            }
            if !accepted {
                break;
            }
        }
        x
    }
}

fn seed(n: usize, i: usize, j: usize, k: usize) -> Vector4<f64> {
    let psi = (i as f64 + 0.5) * PI / n as f64;
    let theta = (j as f64 + 0.5) * PI / n as f64;
    let phi = (k as f64 + 0.5) * 2.0 * PI / n as f64;
    Vector4::new(
        psi.cos(),
        psi.sin() * theta.cos(),
        psi.sin() * theta.sin() * phi.cos(),
        psi.sin() * theta.sin() * phi.sin(),
    )
}

/// All real solutions found from the seed grid, extraneous ones included,
/// sorted lexicographically in decreasing order.
pub fn oracle_solve(sys: &QuadricSystem, cfg: &OracleConfig) -> Result<Vec<[f64; 4]>> {
    cfg.validate()?;
    let dense = Dense::new(sys)?;
    let n = cfg.grid_resolution;
    let hits: Vec<[f64; 4]> = (0..n * n * n)
        .into_par_iter()
        .filter_map(|s| {
            let x = dense.newton(seed(n, s / (n * n), (s / n) % n, s % n), cfg.newton_iters);
            (dense.f(&x).amax() <= cfg.residual_tol).then(|| x.into())
        })
        .collect();
    let mut out: Vec<[f64; 4]> = Vec::new();
    for h in hits {
        let close = |p: &[f64; 4]| p.iter().zip(&h).all(|(a, b)| (a - b).abs() < cfg.dedup_tol);
        if !out.iter().any(close) {
            out.push(h);
        }
    }
    out.sort_by(|a, b| b.partial_cmp(a).expect("finite"));
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ResidualReport {
    pub residuals: [f64; 4],
    pub max: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ExactResidualReport {
    pub residuals: [Rational; 4],
    pub max: Rational,
}

fn point_env<T: Clone>(q: &[T; 4]) -> HashMap<Var, T> {
    COORDS.iter().map(|n| Var::new(n)).zip(q.iter().cloned()).collect()
}

fn bound_polys(sys: &QuadricSystem) -> [MultiPoly; 4] {
    sys.bound().polys
}

/// `f_1..f_4` at `q` in floating point.
pub fn verify_point(sys: &QuadricSystem, q: &[f64; 4]) -> Result<ResidualReport> {
    let env = point_env(q);
    let polys = bound_polys(sys);
    let mut residuals = [0.0; 4];
    for (r, f) in residuals.iter_mut().zip(&polys) {
        *r = f.eval_f64(&env)?;
    }
    let max = residuals.iter().fold(0.0, |m: f64, x| m.max(x.abs()));
    Ok(ResidualReport { residuals, max })
}

/// `f_1..f_4` at a rational `q`, exactly.
pub fn verify_point_exact(sys: &QuadricSystem, q: &[Rational; 4]) -> Result<ExactResidualReport> {
    let env = point_env(q);
    let polys = bound_polys(sys);
    let mut residuals: [Rational; 4] = std::array::from_fn(|_| Rational::zero());
    for (r, f) in residuals.iter_mut().zip(&polys) {
        *r = f.eval_rational(&env)?;
    }
    let max = residuals
        .iter()
        .map(|r| if r < &Rational::zero() { -r.clone() } else { r.clone() })
        .fold(Rational::zero(), |m, x| if x > m { x } else { m });
    Ok(ExactResidualReport { residuals, max })
}
