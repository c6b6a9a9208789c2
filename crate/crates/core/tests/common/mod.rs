#![allow(dead_code)]

use quatdix::dixon::QuadricSystem;
use quatdix::polyring::{Monomial, MultiPoly, Var};
use quatdix::rational::{int, ratio};
use quatdix::spm::MotorAngles;
use quatdix::Rational;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn case_study() -> MotorAngles {
    MotorAngles::from_sin_cos([
        (ratio(3, 5), ratio(4, 5)),
        (ratio(5, 13), ratio(12, 13)),
        (ratio(7, 25), ratio(24, 25)),
    ])
    .unwrap()
}

/// Rational point on the unit circle from a random nonzero half-angle tangent.
pub fn random_sin_cos(rng: &mut impl Rng) -> (Rational, Rational) {
    let mut p = 0;
    while p == 0 {
        p = rng.gen_range(-15i64..=15);
    }
    let q = rng.gen_range(1i64..=15);
    let t = ratio(p, q);
    let one = int(1);
    let den = &one + &t * &t;
    (int(2) * &t / &den, (&one - &t * &t) / den)
}

pub fn random_angles(rng: &mut impl Rng) -> MotorAngles {
    MotorAngles::from_sin_cos([random_sin_cos(rng), random_sin_cos(rng), random_sin_cos(rng)]).unwrap()
}

fn small_rational(rng: &mut impl Rng) -> Rational {
    ratio(rng.gen_range(-4i64..=4), rng.gen_range(1i64..=3))
}

/// Four dense quadrics in `q0..q3` with small integer coefficients, each
/// shifted by a constant so that all vanish at a random rational point.
pub fn planted_system(rng: &mut impl Rng) -> (QuadricSystem, [Rational; 4]) {
    let vars: Vec<Var> = ["q0", "q1", "q2", "q3"].iter().map(|n| Var::new(n)).collect();
    let root: [Rational; 4] = std::array::from_fn(|_| small_rational(rng));
    let mut monomials = vec![Monomial::one()];
    for i in 0..4 {
        monomials.push(Monomial::var(vars[i].clone()));
        for j in i..4 {
            monomials.push(Monomial::var(vars[i].clone()).mul(&Monomial::var(vars[j].clone())));
        }
    }
    let env = vars.iter().cloned().zip(root.iter().cloned()).collect();
    let polys = std::array::from_fn(|_| {
        let mut f = MultiPoly::zero();
        for m in &monomials[1..] {
            f.add_term(m.clone(), int(rng.gen_range(-5i64..=5)));
        }
        let v = f.eval_rational(&env).unwrap();
        f.add_term(Monomial::one(), -v);
        f
    });
    (QuadricSystem::quaternion(polys).unwrap(), root)
}

pub fn dist(a: &[f64; 4], b: &[f64; 4]) -> f64 {
    a.iter().zip(b).fold(0.0, |m, (x, y)| m.max((x - y).abs()))
}

/// Symmetric Hausdorff distance under the max-norm; infinite when exactly
/// one side is empty.
pub fn hausdorff(a: &[[f64; 4]], b: &[[f64; 4]]) -> f64 {
    if a.is_empty() && b.is_empty() {
        return 0.0;
    }
    let one_way = |x: &[[f64; 4]], y: &[[f64; 4]]| {
        x.iter()
            .map(|p| y.iter().map(|q| dist(p, q)).fold(f64::INFINITY, f64::min))
            .fold(0.0, f64::max)
    };
    one_way(a, b).max(one_way(b, a))
}
