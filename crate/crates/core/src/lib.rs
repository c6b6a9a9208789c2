//! Exact Dixon-resultant elimination for systems of four quadrics, and a
//! forward displacement solver for spherical parallel manipulators built on
//! it.

pub mod dixon;
pub mod error;
pub mod oracle;
pub mod polyring;
pub mod rational;
pub mod solver;
pub mod spm;

pub use dixon::{build_dixon_matrix, build_u, dixon_determinant, extract_psi, kernel_coordinates, CubicBasis, DixonMatrix, PsiSet, QuadricSystem, RowSource};
pub use error::{Error, Result};
pub use polyring::{Monomial, MonomialIdeal, MultiPoly, PolyMatrix, UnivariatePoly, Var};
pub use rational::Rational;
pub use oracle::{oracle_solve, verify_point, OracleConfig};
pub use solver::{solve_fdp, FdpReport, RadicalExpr, RadicalRoot, Solution};
pub use spm::{build_3rrrr_system, MotorAngles, Quaternion, RotationMatrix};
