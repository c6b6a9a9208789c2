//! Closed form of the even octic left after removing the extraneous factor
//! from the Dixon determinant of the three-leg system.

use num_traits::Zero;

use super::MotorAngles;
use crate::polyring::{UnivariatePoly, Var};
use crate::rational::{int, Rational};

/// Exponents of `[A1, B1, A2, B2, A3, B3]`.
type Term = (i64, [u32; 6]);

const W1: [Term; 24] = [
    (3, [4, 0, 4, 0, 4, 0]),
    (2, [2, 2, 4, 0, 4, 0]),
    (2, [4, 0, 2, 2, 4, 0]),
    (5, [2, 2, 2, 2, 4, 0]),
    (3, [0, 4, 2, 2, 4, 0]),
    (2, [1, 3, 3, 1, 3, 1]),
    (2, [3, 1, 1, 3, 3, 1]),
    (3, [4, 0, 0, 4, 2, 2]),
    (2, [1, 3, 1, 3, 3, 1]),
    (2, [4, 0, 4, 0, 2, 2]),
    (5, [2, 2, 4, 0, 2, 2]),
    (5, [4, 0, 2, 2, 2, 2]),
    (9, [2, 2, 2, 2, 2, 2]),
    (5, [0, 4, 2, 2, 2, 2]),
    (5, [2, 2, 0, 4, 2, 2]),
    (2, [0, 4, 0, 4, 2, 2]),
    (2, [3, 1, 3, 1, 1, 3]),
    (2, [1, 3, 3, 1, 1, 3]),
    (2, [3, 1, 1, 3, 1, 3]),
    (6, [1, 3, 1, 3, 1, 3]),
    (3, [2, 2, 4, 0, 0, 4]),
    (5, [2, 2, 2, 2, 0, 4]),
    (2, [0, 4, 2, 2, 0, 4]),
    (2, [2, 2, 0, 4, 0, 4]),
];

const W2: [Term; 18] = [
    (1, [4, 0, 4, 0, 4, 0]),
    (1, [2, 2, 2, 2, 4, 0]),
    (1, [0, 4, 2, 2, 4, 0]),
    (-2, [3, 1, 3, 1, 3, 1]),
    (2, [1, 3, 3, 1, 3, 1]),
    (2, [3, 1, 1, 3, 3, 1]),
    (2, [1, 3, 1, 3, 3, 1]),
    (1, [2, 2, 4, 0, 2, 2]),
    (1, [4, 0, 2, 2, 2, 2]),
    (7, [2, 2, 2, 2, 2, 2]),
    (1, [0, 4, 2, 2, 2, 2]),
    (1, [4, 0, 0, 4, 2, 2]),
    (1, [2, 2, 0, 4, 2, 2]),
    (2, [3, 1, 3, 1, 1, 3]),
    (2, [1, 3, 3, 1, 1, 3]),
    (2, [3, 1, 1, 3, 1, 3]),
    (1, [2, 2, 4, 0, 0, 4]),
    (1, [2, 2, 2, 2, 0, 4]),
];

const W3: [Term; 19] = [
    (-1, [4, 0, 4, 0, 4, 0]),
    (1, [2, 2, 2, 2, 4, 0]),
    (1, [0, 4, 2, 2, 4, 0]),
    (4, [3, 1, 3, 1, 3, 1]),
    (2, [1, 3, 3, 1, 3, 1]),
    (2, [3, 1, 1, 3, 3, 1]),
    (1, [4, 0, 0, 4, 2, 2]),
    (2, [1, 3, 1, 3, 3, 1]),
    (1, [2, 2, 4, 0, 2, 2]),
    (1, [4, 0, 2, 2, 2, 2]),
    (1, [2, 2, 2, 2, 2, 2]),
    (1, [0, 4, 2, 2, 2, 2]),
    (1, [2, 2, 0, 4, 2, 2]),
    (2, [3, 1, 3, 1, 1, 3]),
    (2, [1, 3, 3, 1, 1, 3]),
    (2, [3, 1, 1, 3, 1, 3]),
    (2, [1, 3, 1, 3, 1, 3]),
    (1, [2, 2, 4, 0, 0, 4]),
    (1, [2, 2, 2, 2, 0, 4]),
];

#[derive(Clone, Debug, PartialEq)]
pub struct GCoefficients {
    pub w: Rational,
    pub w1: Rational,
    pub w2: Rational,
    pub w3: Rational,
}

fn sum_terms(terms: &[Term], x: &[Rational; 6]) -> Rational {
    terms.iter().fold(Rational::zero(), |acc, (c, e)| {
        let mut t = int(*c);
        for (base, k) in x.iter().zip(e) {
            t *= num_traits::pow(base.clone(), *k as usize);
        }
        acc + t
    })
}

impl GCoefficients {
    pub fn from_pairs(pairs: &[(Rational, Rational); 3]) -> Self {
        let [(a1, b1), (a2, b2), (a3, b3)] = pairs.clone();
        let sq = |r: &Rational| r * r;
        let w = (sq(&a2) * sq(&a3) + sq(&a2) * sq(&b3) + sq(&b2) * sq(&b3))
            * (sq(&a1) * sq(&a3) + sq(&b1) * sq(&a3) + sq(&b1) * sq(&b3))
            * (sq(&a1) * sq(&a2) + sq(&a1) * sq(&b2) + sq(&b1) * sq(&b2));
        let x = [a1, b1, a2, b2, a3, b3];
        GCoefficients {
            w,
            w1: sum_terms(&W1, &x),
            w2: sum_terms(&W2, &x),
            w3: sum_terms(&W3, &x),
        }
    }

    /// `-2^24 w^2 q^8 + 2^24 w^2 q^6 - 2^21 w w1 q^4 + 2^20 w w2 q^2 - 2^16 w3^2`.
    pub fn polynomial(&self, var: Var) -> UnivariatePoly {
        let p = |k: u32| Rational::from_integer(num_bigint::BigInt::from(1u64 << k));
        let w2 = &self.w * &self.w;
        let z = Rational::zero;
        UnivariatePoly::new(
            var,
            vec![
                -p(16) * &self.w3 * &self.w3,
                z(),
                p(20) * &self.w * &self.w2,
                z(),
                -p(21) * &self.w * &self.w1,
                z(),
                p(24) * &w2,
                z(),
                -p(24) * w2,
            ],
        )
    }
}

/// The closed-form even octic in `q0`.
pub fn closed_form_g(m: &MotorAngles) -> UnivariatePoly {
    GCoefficients::from_pairs(&m.sin_cos()).polynomial(Var::new("q0"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    #[test]
    fn case_study_octic() {
        let m = MotorAngles::from_sin_cos([
            (ratio(3, 5), ratio(4, 5)),
            (ratio(5, 13), ratio(12, 13)),
            (ratio(7, 25), ratio(24, 25)),
        ])
        .unwrap();
        let g = closed_form_g(&m).monic();
        assert!(g.is_even());
        // Monic form from an independent symbolic expansion.
        let lead = Rational::new(
            "1959037319869333855033600".parse().unwrap(),
            1.into(),
        );
        let expect = [
            "523667599221062083225",
            "0",
            "-24532763428207774205840",
            "0",
            "374326578687183533655392",
            "0",
            "-1959037319869333855033600",
            "0",
            "1959037319869333855033600",
        ];
        for (k, e) in expect.iter().enumerate() {
            let c = Rational::new(e.parse().unwrap(), 1.into()) / &lead;
            assert_eq!(g.coeff(k), c, "coefficient {k}");
        }
    }

    #[test]
    fn right_angles() {
        let one = (int(1), int(0));
        let c = GCoefficients::from_pairs(&[one.clone(), one.clone(), one]);
        assert_eq!(c.w, int(1));
        assert_eq!(c.w1, int(3));
        assert_eq!(c.w2, int(1));
        assert_eq!(c.w3, int(-1));
    }
}
