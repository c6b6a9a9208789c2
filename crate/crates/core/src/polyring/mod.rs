//! Exact polynomial arithmetic over the rationals.

mod matrix;
mod monomial;
mod multipoly;
mod text;
mod univariate;

pub use matrix::{bareiss, PolyMatrix, RationalMatrix};
pub use monomial::{Monomial, MonomialIdeal, Var};
pub use multipoly::MultiPoly;
pub use univariate::UnivariatePoly;
