use nalgebra::{Matrix4, Vector4};

use super::QUATERNION_VARS;
use crate::dixon::QuadricSystem;
use crate::error::{Error, Result};
use crate::rational::to_f64;

/// `f(q) = q^T A q + b^T q + c` in double precision.
#[derive(Clone, Debug, PartialEq)]
pub struct QuadraticForm {
    pub a: Matrix4<f64>,
    pub b: Vector4<f64>,
    pub c: f64,
}

impl QuadraticForm {
    pub fn eval(&self, q: &Vector4<f64>) -> f64 {
        q.dot(&(self.a * q)) + self.b.dot(q) + self.c
    }

    pub fn gradient(&self, q: &Vector4<f64>) -> Vector4<f64> {
        (self.a + self.a.transpose()) * q + self.b
    }
}

/// The four quadrics of a quaternion system as numeric forms.
#[derive(Clone, Debug, PartialEq)]
pub struct QuadricForms(pub [QuadraticForm; 4]);

impl QuadricForms {
    pub fn from_system(sys: &QuadricSystem) -> Result<Self> {
        let bound = sys.bound();
        let mut forms = Vec::with_capacity(4);
        for f in &bound.polys {
            let mut form = QuadraticForm {
                a: Matrix4::zeros(),
                b: Vector4::zeros(),
                c: 0.0,
            };
            for (m, coeff) in f.terms() {
                let mut idx = Vec::new();
                for (v, e) in m.factors() {
                    let k = QUATERNION_VARS
                        .iter()
                        .position(|n| *n == v.name())
                        .ok_or_else(|| Error::UnboundParameter(v.name().to_string()))?;
                    idx.extend(std::iter::repeat_n(k, *e as usize));
                }
                let c = to_f64(coeff);
                match idx.as_slice() {
                    [] => form.c += c,
                    [i] => form.b[*i] += c,
                    [i, j] => form.a[(*i, *j)] += c,
                    _ => {
                        return Err(Error::InvalidSystem(format!(
                            "`{f}` is not quadratic in the quaternion coordinates"
                        )))
                    }
                }
            }
            forms.push(form);
        }
        Ok(QuadricForms(forms.try_into().expect("four forms")))
    }

    pub fn eval(&self, q: &[f64; 4]) -> [f64; 4] {
        let v = Vector4::from(*q);
        self.0.each_ref().map(|f| f.eval(&v))
    }

    pub fn max_residual(&self, q: &[f64; 4]) -> f64 {
        self.eval(q).iter().fold(0.0, |m, x| m.max(x.abs()))
    }

    /// Plain Newton steps; stops early on a singular Jacobian.
    pub fn newton(&self, q: &[f64; 4], iters: usize) -> [f64; 4] {
        let mut x = Vector4::from(*q);
        for _ in 0..iters {
            let f = Vector4::from(self.0.each_ref().map(|g| g.eval(&x)));
            let mut j = Matrix4::zeros();
            for (r, g) in self.0.iter().enumerate() {
                j.set_row(r, &g.gradient(&x).transpose());
            }
            match j.lu().solve(&f) {
                Some(step) if step.iter().all(|s| s.is_finite()) => x -= step,
                _ => break,
            }
        }
        x.into()
    }
}
