//! Spherical parallel manipulator kinematics: quadric systems from leg
//! conditions or motor angles, quaternion rotations, and the symmetry of the
//! solution set.

mod closed_form;
mod forms;
mod orbit;

use std::collections::{BTreeMap, HashMap};

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

pub use closed_form::{closed_form_g, GCoefficients};
pub use forms::{QuadraticForm, QuadricForms};
pub use orbit::{extraneous_set, extraneous_set_f64, is_extraneous, symmetry_orbit};

use crate::dixon::QuadricSystem;
use crate::error::{Error, Result};
use crate::polyring::{MultiPoly, Var};
use crate::rational::{int, parse_rational, rationalize, to_f64, Rational};

pub const QUATERNION_VARS: [&str; 4] = ["q0", "q1", "q2", "q3"];

pub fn quaternion_vars() -> [Var; 4] {
    QUATERNION_VARS.map(Var::new)
}

/// `w^T * Q(q) * nu = c` for one leg.
#[derive(Clone, Debug, PartialEq)]
pub struct LegCondition {
    pub w: [Rational; 3],
    pub nu: [Rational; 3],
    pub c: Rational,
}

impl LegCondition {
    pub fn new(w: [Rational; 3], nu: [Rational; 3], c: Rational) -> Result<Self> {
        if w.iter().all(Zero::is_zero) || nu.iter().all(Zero::is_zero) {
            return Err(Error::InvalidSystem("leg direction vectors must be nonzero".into()));
        }
        Ok(LegCondition { w, nu, c })
    }
}

#[derive(Serialize, Deserialize)]
struct LegJson {
    w: [String; 3],
    nu: [String; 3],
    #[serde(default = "zero_string")]
    c: String,
}

fn zero_string() -> String {
    "0".into()
}

impl Serialize for LegCondition {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        LegJson {
            w: self.w.clone().map(|r| r.to_string()),
            nu: self.nu.clone().map(|r| r.to_string()),
            c: self.c.to_string(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for LegCondition {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let j = LegJson::deserialize(d)?;
        let parse3 = |v: &[String; 3]| -> Result<[Rational; 3]> {
            Ok([parse_rational(&v[0])?, parse_rational(&v[1])?, parse_rational(&v[2])?])
        };
        let w = parse3(&j.w).map_err(D::Error::custom)?;
        let nu = parse3(&j.nu).map_err(D::Error::custom)?;
        let c = parse_rational(&j.c).map_err(D::Error::custom)?;
        LegCondition::new(w, nu, c).map_err(D::Error::custom)
    }
}

/// Actuated joint angles of the three legs. When `exact` is present its
/// `(sin, cos)` pairs are used verbatim by the exact pipeline.
#[derive(Clone, Debug, PartialEq)]
pub struct MotorAngles {
    pub theta: [f64; 3],
    pub exact: Option<[(Rational, Rational); 3]>,
}

impl MotorAngles {
    pub fn from_theta(theta: [f64; 3]) -> Result<Self> {
        if theta.iter().any(|t| !t.is_finite()) {
            return Err(Error::Parse("motor angles must be finite".into()));
        }
        Ok(MotorAngles { theta, exact: None })
    }

    pub fn from_sin_cos(pairs: [(Rational, Rational); 3]) -> Result<Self> {
        for (a, b) in &pairs {
            if a * a + b * b != Rational::one() {
                return Err(Error::InvalidSystem(format!(
                    "sin/cos pair ({a}, {b}) does not satisfy A^2 + B^2 = 1"
                )));
            }
        }
        let theta = pairs
            .clone()
            .map(|(a, b)| to_f64(&a).atan2(to_f64(&b)));
        Ok(MotorAngles {
            theta,
            exact: Some(pairs),
        })
    }

    /// Exact `(A_i, B_i) = (sin, cos)`; from the angles when no pairs are
    /// stored, via a rational tangent half-angle so `A^2 + B^2 = 1` holds.
    pub fn sin_cos(&self) -> [(Rational, Rational); 3] {
        match &self.exact {
            Some(p) => p.clone(),
            None => self.theta.map(half_angle_pair),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("serializable")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }
}

fn half_angle_pair(theta: f64) -> (Rational, Rational) {
    let half = theta / 2.0;
    let (s, c) = half.sin_cos();
    if s.abs() <= c.abs() {
        let t = rationalize(s / c, 1e-15);
        let den = int(1) + &t * &t;
        ((int(2) * &t) / &den, (int(1) - &t * &t) / den)
    } else {
        let u = rationalize(c / s, 1e-15);
        let den = &u * &u + int(1);
        ((int(2) * &u) / &den, (&u * &u - int(1)) / den)
    }
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum RationalJson {
    Text(String),
    Pair([i64; 2]),
    Int(i64),
}

impl RationalJson {
    fn value(&self) -> Result<Rational> {
        match self {
            RationalJson::Text(s) => parse_rational(s),
            RationalJson::Pair([_, 0]) => Err(Error::Parse("zero denominator".into())),
            RationalJson::Pair([n, d]) => Ok(Rational::new((*n).into(), (*d).into())),
            RationalJson::Int(n) => Ok(int(*n)),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct MotorJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    theta_rad: Option<[f64; 3]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    exact: Option<[[RationalJson; 2]; 3]>,
}

impl Serialize for MotorAngles {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        MotorJson {
            theta_rad: Some(self.theta),
            exact: self.exact.as_ref().map(|p| {
                p.clone().map(|(a, b)| {
                    [RationalJson::Text(a.to_string()), RationalJson::Text(b.to_string())]
                })
            }),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for MotorAngles {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let j = MotorJson::deserialize(d)?;
        match (j.exact, j.theta_rad) {
            (Some(pairs), _) => {
                let mut out = Vec::with_capacity(3);
                for [a, b] in &pairs {
                    out.push((
                        a.value().map_err(D::Error::custom)?,
                        b.value().map_err(D::Error::custom)?,
                    ));
                }
                let pairs: [(Rational, Rational); 3] = out.try_into().expect("three pairs");
                MotorAngles::from_sin_cos(pairs).map_err(D::Error::custom)
            }
            (None, Some(theta)) => MotorAngles::from_theta(theta).map_err(D::Error::custom),
            (None, None) => Err(D::Error::custom("expected `theta_rad` or `exact`")),
        }
    }
}

/// Unit quaternion `q0 + q1 e1 + q2 e2 + q3 e3` as a 4-tuple.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Quaternion(pub [f64; 4]);

impl Quaternion {
    pub fn norm(&self) -> f64 {
        self.0.iter().map(|x| x * x).sum::<f64>().sqrt()
    }

    pub fn neg(&self) -> Quaternion {
        Quaternion(self.0.map(|x| -x))
    }

    /// Max-norm distance.
    pub fn distance(&self, other: &Quaternion) -> f64 {
        self.0
            .iter()
            .zip(other.0)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }

    pub fn from_exact(q: &[Rational; 4]) -> Quaternion {
        Quaternion(q.clone().map(|r| to_f64(&r)))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct RotationMatrix(pub [[f64; 3]; 3]);

impl RotationMatrix {
    /// `max |(Q^T Q - I)_ij|`.
    pub fn orthogonality_error(&self) -> f64 {
        let m = &self.0;
        let mut err: f64 = 0.0;
        for i in 0..3 {
            for j in 0..3 {
                let dot: f64 = (0..3).map(|k| m[k][i] * m[k][j]).sum();
                let target = if i == j { 1.0 } else { 0.0 };
                err = err.max((dot - target).abs());
            }
        }
        err
    }

    pub fn determinant(&self) -> f64 {
        let m = &self.0;
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    }
}

fn rotation_entries<T>(q: &[T; 4]) -> [[T; 3]; 3]
where
    T: Clone
        + std::ops::Add<Output = T>
        + std::ops::Sub<Output = T>
        + std::ops::Mul<Output = T>,
{
    let [a, b, c, d] = q.clone();
    let two = |x: T| x.clone() + x;
    let sq = |x: &T| x.clone() * x.clone();
    [
        [
            sq(&a) + sq(&b) - sq(&c) - sq(&d),
            two(b.clone() * c.clone() - a.clone() * d.clone()),
            two(a.clone() * c.clone() + b.clone() * d.clone()),
        ],
        [
            two(b.clone() * c.clone() + a.clone() * d.clone()),
            sq(&a) - sq(&b) + sq(&c) - sq(&d),
            two(c.clone() * d.clone() - a.clone() * b.clone()),
        ],
        [
            two(b.clone() * d.clone() - a.clone() * c.clone()),
            two(a.clone() * b.clone() + c.clone() * d.clone()),
            sq(&a) - sq(&b) - sq(&c) + sq(&d),
        ],
    ]
}

/// The rotation matrix with quadratic-form entries in `q0..q3`.
pub fn rotation_matrix_poly() -> [[MultiPoly; 3]; 3] {
    rotation_entries(&quaternion_vars().map(|v| MultiPoly::from_var(&v)))
}

/// Rotation for a quaternion within `1e-6` of unit norm; normalized first.
pub fn quaternion_to_rotation(q: &Quaternion) -> Result<RotationMatrix> {
    let n = q.norm();
    if n.is_nan() || (n - 1.0).abs() > 1e-6 {
        return Err(Error::NotUnit(n));
    }
    Ok(RotationMatrix(rotation_entries(&q.0.map(|x| x / n))))
}

fn wqnu(w: &[MultiPoly; 3], nu: &[MultiPoly; 3]) -> MultiPoly {
    let q = rotation_matrix_poly();
    let mut acc = MultiPoly::zero();
    for i in 0..3 {
        for j in 0..3 {
            acc = &acc + &(&(&w[i] * &q[i][j]) * &nu[j]);
        }
    }
    acc
}

fn unit_norm() -> MultiPoly {
    quaternion_vars()
        .iter()
        .fold(MultiPoly::constant(int(-1)), |acc, v| {
            &acc + &MultiPoly::from_var(v).pow(2)
        })
}

/// `f_i = w_i^T Q(q) nu_i - c_i` for the three legs and `f4 = |q|^2 - 1`,
/// eliminating `q1, q2, q3`.
pub fn build_generic_system(legs: &[LegCondition; 3]) -> QuadricSystem {
    let lift = |v: &[Rational; 3]| v.clone().map(MultiPoly::constant);
    let f = |l: &LegCondition| &wqnu(&lift(&l.w), &lift(&l.nu)) - &MultiPoly::constant(l.c.clone());
    QuadricSystem::quaternion([f(&legs[0]), f(&legs[1]), f(&legs[2]), unit_norm()])
        .expect("quaternion quadrics are valid")
}

pub const ANGLE_PARAMETERS: [&str; 6] = ["A1", "B1", "A2", "B2", "A3", "B3"];

/// The three-leg system with symbolic `A_i = sin(theta_i)`, `B_i = cos(theta_i)`:
/// `w = (0, B1, A1), (B2, A2, 0), (A3, 0, B3)` against `nu = e3, e2, e1`.
pub fn symbolic_3rrrr_system() -> QuadricSystem {
    let p = ANGLE_PARAMETERS.map(MultiPoly::var);
    let zero = MultiPoly::zero;
    let one = || MultiPoly::constant(int(1));
    let w = [
        [zero(), p[1].clone(), p[0].clone()],
        [p[3].clone(), p[2].clone(), zero()],
        [p[4].clone(), zero(), p[5].clone()],
    ];
    let nu = [
        [zero(), zero(), one()],
        [zero(), one(), zero()],
        [one(), zero(), zero()],
    ];
    let polys = [
        wqnu(&w[0], &nu[0]),
        wqnu(&w[1], &nu[1]),
        wqnu(&w[2], &nu[2]),
        unit_norm(),
    ];
    let v = quaternion_vars();
    QuadricSystem::new(
        polys,
        [v[1].clone(), v[2].clone(), v[3].clone()],
        Some(v[0].clone()),
        ANGLE_PARAMETERS.iter().map(|s| Var::new(s)).collect(),
    )
    .expect("valid system")
}

/// The three-leg system with its angle parameters bound exactly.
pub fn build_3rrrr_system(m: &MotorAngles) -> QuadricSystem {
    let pairs = m.sin_cos();
    let mut bindings = BTreeMap::new();
    for (i, (a, b)) in pairs.into_iter().enumerate() {
        bindings.insert(Var::new(ANGLE_PARAMETERS[2 * i]), a);
        bindings.insert(Var::new(ANGLE_PARAMETERS[2 * i + 1]), b);
    }
    symbolic_3rrrr_system()
        .with_bindings(bindings)
        .expect("bindings match parameters")
}

/// Legs equivalent to [`build_3rrrr_system`], for the generic builder.
pub fn legs_3rrrr(m: &MotorAngles) -> [LegCondition; 3] {
    let [(a1, b1), (a2, b2), (a3, b3)] = m.sin_cos();
    let z = Rational::zero;
    let e = |k: usize| {
        let mut v = [z(), z(), z()];
        v[k] = Rational::one();
        v
    };
    [
        LegCondition { w: [z(), b1, a1], nu: e(2), c: z() },
        LegCondition { w: [b2, a2, z()], nu: e(1), c: z() },
        LegCondition { w: [a3, z(), b3], nu: e(0), c: z() },
    ]
}

/// `f_i(q)` in floats, parameters taken from the system's bindings.
pub fn residuals(sys: &QuadricSystem, q: &[f64; 4]) -> Result<[f64; 4]> {
    let bound = sys.bound();
    let mut env: HashMap<Var, f64> = HashMap::new();
    for v in bound.unknowns() {
        let k = QUATERNION_VARS
            .iter()
            .position(|n| *n == v.name())
            .ok_or_else(|| Error::InvalidSystem(format!("`{v}` is not a quaternion coordinate")))?;
        env.insert(v, q[k]);
    }
    let mut out = [0.0; 4];
    for (o, f) in out.iter_mut().zip(&bound.polys) {
        *o = f.eval_f64(&env)?;
    }
    Ok(out)
}

pub fn max_abs(v: &[f64]) -> f64 {
    v.iter().fold(0.0, |m, x| m.max(x.abs()))
}

/// Exact `f_i(q)`.
pub fn residuals_exact(sys: &QuadricSystem, q: &[Rational; 4]) -> Result<[Rational; 4]> {
    let bound = sys.bound();
    let env: HashMap<Var, Rational> = quaternion_vars().into_iter().zip(q.clone()).collect();
    let mut out: [Rational; 4] = std::array::from_fn(|_| Rational::zero());
    for (o, f) in out.iter_mut().zip(&bound.polys) {
        *o = f.eval_rational(&env)?;
    }
    Ok(out)
}

pub fn max_abs_exact(v: &[Rational]) -> Rational {
    v.iter()
        .map(Signed::abs)
        .fold(Rational::zero(), |m, x| if x > m { x } else { m })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    fn p(s: &str) -> MultiPoly {
        s.parse().unwrap()
    }

    fn case_study() -> MotorAngles {
        MotorAngles::from_sin_cos([
            (ratio(3, 5), ratio(4, 5)),
            (ratio(5, 13), ratio(12, 13)),
            (ratio(7, 25), ratio(24, 25)),
        ])
        .unwrap()
    }

    #[test]
    fn symbolic_system_matches_displayed_first_equation() {
        let sys = symbolic_3rrrr_system();
        assert_eq!(
            sys.polys[0],
            p("A1*(q0^2 - q1^2 - q2^2 + q3^2) + 2*B1*(q2*q3 - q0*q1)")
        );
        assert_eq!(sys.polys[3], p("q0^2 + q1^2 + q2^2 + q3^2 - 1"));
    }

    #[test]
    fn exact_pairs_bind() {
        let sys = build_3rrrr_system(&case_study()).bound();
        assert_eq!(
            sys.polys[0],
            p("3/5*(q0^2 - q1^2 - q2^2 + q3^2) + 8/5*(q2*q3 - q0*q1)")
        );
        let generic = build_generic_system(&legs_3rrrr(&case_study()));
        assert_eq!(generic.polys, sys.polys);
    }

    #[test]
    fn right_angles_drop_cosine_terms() {
        let m = MotorAngles::from_theta([std::f64::consts::FRAC_PI_2; 3]).unwrap();
        for (a, b) in m.sin_cos() {
            assert_eq!(a, int(1));
            assert_eq!(b, int(0));
        }
        let sys = build_3rrrr_system(&m).bound();
        assert_eq!(sys.polys[0], p("q0^2 - q1^2 - q2^2 + q3^2"));
    }

    #[test]
    fn half_angle_pairs_are_exact_and_close() {
        for theta in [0.0, 0.3, -1.2, 2.9, std::f64::consts::PI, -3.0] {
            let m = MotorAngles::from_theta([theta, theta, theta]).unwrap();
            for (a, b) in m.sin_cos() {
                assert_eq!(&a * &a + &b * &b, int(1));
                assert!((to_f64(&a) - theta.sin()).abs() < 1e-14);
                assert!((to_f64(&b) - theta.cos()).abs() < 1e-14);
            }
        }
    }

    #[test]
    fn generic_leg_hand_expansion() {
        let leg = LegCondition::new(
            [int(1), int(0), int(0)],
            [int(1), int(0), int(0)],
            int(1),
        )
        .unwrap();
        let sys = build_generic_system(&[leg.clone(), leg.clone(), leg]);
        assert_eq!(sys.polys[0], p("q0^2 + q1^2 - q2^2 - q3^2 - 1"));
        assert!(LegCondition::new([int(0), int(0), int(0)], [int(1), int(0), int(0)], int(0)).is_err());
    }

    #[test]
    fn rotation_examples() {
        let id = quaternion_to_rotation(&Quaternion([1.0, 0.0, 0.0, 0.0])).unwrap();
        assert_eq!(id.0, [[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]]);
        let h = std::f64::consts::FRAC_1_SQRT_2;
        let rx = quaternion_to_rotation(&Quaternion([h, h, 0.0, 0.0])).unwrap();
        let expect = [[1.0, 0.0, 0.0], [0.0, 0.0, -1.0], [0.0, 1.0, 0.0]];
        for i in 0..3 {
            for j in 0..3 {
                assert!((rx.0[i][j] - expect[i][j]).abs() < 1e-15);
            }
        }
        assert!(matches!(
            quaternion_to_rotation(&Quaternion([1.1, 0.0, 0.0, 0.0])),
            Err(Error::NotUnit(_))
        ));
    }

    #[test]
    fn motor_json_forms() {
        let m = MotorAngles::from_json(r#"{"exact": [["3/5", "4/5"], [[5, 13], [12, 13]], ["7/25", "24/25"]]}"#)
            .unwrap();
        assert_eq!(m, case_study());
        assert_eq!(MotorAngles::from_json(&m.to_json()).unwrap(), m);
        let t = MotorAngles::from_json(r#"{"theta_rad": [0.1, 0.2, 0.3]}"#).unwrap();
        assert_eq!(t.theta, [0.1, 0.2, 0.3]);
        assert!(MotorAngles::from_json(r#"{"exact": [["1", "1"], ["1", "0"], ["1", "0"]]}"#).is_err());
        assert!(MotorAngles::from_json("{}").is_err());
    }

    #[test]
    fn leg_json_round_trip() {
        let leg = legs_3rrrr(&case_study())[0].clone();
        let text = serde_json::to_string(&leg).unwrap();
        assert_eq!(serde_json::from_str::<LegCondition>(&text).unwrap(), leg);
    }

    #[test]
    fn identity_residual_on_third_leg() {
        let sys = build_3rrrr_system(&case_study());
        let r = residuals_exact(&sys, &[int(1), int(0), int(0), int(0)]).unwrap();
        assert_eq!(r[2], ratio(7, 25));
    }
}
