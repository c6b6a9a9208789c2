use serde::{Deserialize, Serialize};

use super::{
    assemble_solutions_with, solve_even_octic_detailed, strip_extraneous_factor, AssembleOptions,
    RadicalRoot, Solution, SolutionSet,
};
use crate::dixon::{dixon_determinant, QuadricSystem};
use crate::error::{Error, Result};
use crate::spm::{build_3rrrr_system, closed_form_g, MotorAngles, QuadricForms};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Parameters {
    pub theta_rad: [f64; 3],
    /// Exact `[sin, cos]` per leg, as `"n/d"` text.
    pub sin_cos: [[String; 2]; 3],
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CrossCheck {
    pub agrees: bool,
    /// Determinant-derived octic divided by the closed form.
    pub scale: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Diagnostics {
    pub determinant_degree: usize,
    pub cross_check: CrossCheck,
    pub real_roots: usize,
    pub complex_t_roots: usize,
    pub negative_t_roots: usize,
    pub repeated_roots: bool,
    pub extraneous_removed: usize,
    pub fallback_roots: usize,
    pub orbit_representative: Option<usize>,
}

/// Everything computed by one forward displacement solve.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FdpReport {
    pub parameters: Parameters,
    /// Ascending coefficients of the Dixon determinant in `q0`.
    pub determinant_coeffs: Vec<String>,
    /// Ascending coefficients of the octic left after the extraneous factor.
    #[serde(rename = "G_coeffs")]
    pub g_coeffs: Vec<String>,
    pub roots: Vec<RadicalRoot>,
    pub solutions: Vec<Solution>,
    pub diagnostics: Diagnostics,
}

impl FdpReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }
}

const SNAP_TOL: f64 = 1e-13;

/// Every coordinate of a solution is a root of the same octic (the four
/// determinants agree after renaming), so polished coordinates are replaced by
/// the correctly rounded value of the high-precision root they sit on.
fn snap_to_roots(mut set: SolutionSet, roots: &[RadicalRoot], sys: &QuadricSystem) -> Result<SolutionSet> {
    let forms = QuadricForms::from_system(&sys.bound())?;
    let values: Vec<f64> = roots.iter().map(RadicalRoot::value_f64).collect();
    for s in set.solutions.iter_mut().filter(|s| !s.extraneous) {
        let mut q = s.q;
        for x in &mut q {
            if let Some(v) = values.iter().find(|v| (**v - *x).abs() < SNAP_TOL) {
                *x = *v;
            }
        }
        if forms.max_residual(&q) <= s.max_residual().max(1e-12) {
            *s = Solution::new(q, &forms, false)?;
        }
    }
    Ok(set)
}

pub fn solve_fdp(m: &MotorAngles) -> Result<FdpReport> {
    solve_fdp_with(m, AssembleOptions::default())
}

/// Builds the three-leg system, eliminates `q1, q2, q3`, removes the
/// extraneous factor, checks the octic against its closed form, solves it
/// in radicals and recovers the quaternions.
pub fn solve_fdp_with(m: &MotorAngles, opts: AssembleOptions) -> Result<FdpReport> {
    let sys = build_3rrrr_system(m);
    let det = dixon_determinant(&sys)?;
    let g = strip_extraneous_factor(&det)?;
    let closed = closed_form_g(m);
    let scale = g.proportionality(&closed).ok_or(Error::CrossCheckMismatch)?;
    let octic = solve_even_octic_detailed(&g)?;
    let set = match assemble_solutions_with(&sys, &octic.roots, opts) {
        Ok(set) => Some(snap_to_roots(set, &octic.roots, &sys)?),
        Err(Error::NoRealSolutions) => None,
        Err(e) => return Err(e),
    };
    let text = |p: &crate::polyring::UnivariatePoly| p.coeffs().iter().map(|c| c.to_string()).collect();
    let pairs = m.sin_cos();
    Ok(FdpReport {
        parameters: Parameters {
            theta_rad: m.theta,
            sin_cos: pairs.map(|(a, b)| [a.to_string(), b.to_string()]),
        },
        determinant_coeffs: text(&det),
        g_coeffs: text(&g),
        diagnostics: Diagnostics {
            determinant_degree: det.degree().unwrap_or(0),
            cross_check: CrossCheck {
                agrees: true,
                scale: scale.to_string(),
            },
            real_roots: octic.roots.len(),
            complex_t_roots: octic.complex_t,
            negative_t_roots: octic.negative_t,
            repeated_roots: octic.repeated,
            extraneous_removed: set.as_ref().map_or(0, |s| s.extraneous_removed),
            fallback_roots: set.as_ref().map_or(0, |s| s.fallback_roots),
            orbit_representative: set.as_ref().and_then(|s| s.orbit_representative),
        },
        roots: octic.roots,
        solutions: set.map(|s| s.solutions).unwrap_or_default(),
    })
}
