use std::collections::HashMap;

use proptest::prelude::*;
use quatdix::polyring::{Monomial, MultiPoly, UnivariatePoly, Var};
use quatdix::rational::{parse_rational, ratio};
use quatdix::Rational;

const NAMES: [&str; 4] = ["x1", "x2", "q0", "a"];

fn rational() -> impl Strategy<Value = Rational> {
    (-20i64..=20, 1i64..=9).prop_map(|(n, d)| ratio(n, d))
}

fn monomial() -> impl Strategy<Value = Monomial> {
    prop::collection::vec(0u32..=2, 4).prop_map(|e| {
        Monomial::from_factors(NAMES.iter().zip(e).map(|(n, k)| (Var::new(n), k)))
    })
}

fn poly() -> impl Strategy<Value = MultiPoly> {
    prop::collection::vec((monomial(), rational()), 0..6).prop_map(MultiPoly::from_terms)
}

fn nonzero_poly() -> impl Strategy<Value = MultiPoly> {
    poly().prop_filter("nonzero", |p| !p.is_zero())
}

fn univariate() -> impl Strategy<Value = UnivariatePoly> {
    prop::collection::vec(rational(), 0..7).prop_map(|c| UnivariatePoly::new(Var::new("t"), c))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn addition_is_commutative_and_associative(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn multiplication_distributes(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &MultiPoly::one(), a.clone());
    }

    #[test]
    fn product_divides_back(a in poly(), d in nonzero_poly()) {
        let p = &a * &d;
        prop_assert_eq!(p.exact_quotient(&d).unwrap(), a);
    }

    #[test]
    fn text_is_canonical(a in poly()) {
        let text = a.to_string();
        let back: MultiPoly = text.parse().unwrap();
        prop_assert_eq!(&back, &a);
        prop_assert_eq!(back.to_string(), text);
    }

    #[test]
    fn json_round_trip(a in poly()) {
        let json = serde_json::to_string(&a).unwrap();
        prop_assert_eq!(serde_json::from_str::<MultiPoly>(&json).unwrap(), a);
    }

    #[test]
    fn evaluation_is_a_ring_map(a in poly(), b in poly(), vals in prop::collection::vec(rational(), 4)) {
        let env: HashMap<Var, Rational> = NAMES.iter().map(|n| Var::new(n)).zip(vals).collect();
        let ea = a.eval_rational(&env).unwrap();
        let eb = b.eval_rational(&env).unwrap();
        prop_assert_eq!((&a * &b).eval_rational(&env).unwrap(), &ea * &eb);
        prop_assert_eq!((&a + &b).eval_rational(&env).unwrap(), ea + eb);
    }

    #[test]
    fn rationals_stay_reduced(a in rational(), b in rational()) {
        let s = &a * &b + &a;
        prop_assert!(s.denom() > &0.into());
        prop_assert_eq!(parse_rational(&s.to_string()).unwrap(), s);
    }

    #[test]
    fn division_with_remainder(a in univariate(), d in univariate()) {
        prop_assume!(!d.is_zero());
        let (q, r) = a.div_rem(&d);
        prop_assert_eq!(q.mul(&d).add(&r), a);
        prop_assert!(r.is_zero() || r.degree() < d.degree());
    }

    #[test]
    fn gcd_divides_both(a in univariate(), b in univariate(), c in univariate()) {
        prop_assume!(!c.is_zero() && !a.is_zero() && !b.is_zero());
        let g = a.mul(&c).gcd(&b.mul(&c));
        prop_assert!(a.mul(&c).exact_div(&g).is_ok());
        prop_assert!(b.mul(&c).exact_div(&g).is_ok());
        prop_assert!(g.exact_div(&c).is_ok());
    }

    #[test]
    fn proportionality_finds_the_scale(a in univariate(), s in rational()) {
        prop_assume!(!a.is_zero() && s != ratio(0, 1));
        prop_assert_eq!(a.scale(&s).proportionality(&a), Some(s));
    }

    #[test]
    fn interpolation_through_samples(a in univariate()) {
        let pts: Vec<(Rational, Rational)> = (-3..=3).map(|k| (ratio(k, 1), a.eval(&ratio(k, 1)))).collect();
        prop_assert_eq!(UnivariatePoly::interpolate(Var::new("t"), &pts), a);
    }

    #[test]
    fn planted_roots_are_isolated(roots in prop::collection::btree_set(-12i64..=12, 1..5)) {
        let t = Var::new("t");
        let p = roots.iter().fold(UnivariatePoly::constant(t.clone(), ratio(1, 1)), |acc, &r| {
            acc.mul(&UnivariatePoly::linear_root(t.clone(), ratio(r, 3)))
        });
        let found = p.real_roots_f64();
        prop_assert_eq!(found.len(), roots.len());
        for (f, r) in found.iter().zip(&roots) {
            prop_assert!((f - *r as f64 / 3.0).abs() < 1e-12);
        }
    }
}
