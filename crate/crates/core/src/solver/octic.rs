//! Even octics in radicals: the substitution `t = q0^2` leaves a quartic,
//! solved by Ferrari's resolvent cubic and Cardano's formula.

use dashu_float::DBig;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::hp::{hp_abs, hp_format, hp_int, hp_rational, hp_to_f64, HpComplex};
use super::radical::RadicalExpr;
use crate::error::{Error, Result};
use crate::polyring::{UnivariatePoly, Var};
use crate::rational::{int, Rational};

/// Digits carried by root values.
pub const VALUE_DIGITS: usize = 60;
const CLUSTER_TOL: &str = "1e-20";
const IMAG_TOL: &str = "1e-40";

/// A real root with its radical expression.
#[derive(Clone, Debug, PartialEq)]
pub struct RadicalRoot {
    pub value: DBig,
    pub expression: RadicalExpr,
    pub multiplicity: usize,
}

impl RadicalRoot {
    pub fn value_f64(&self) -> f64 {
        hp_to_f64(&self.value)
    }

    /// `|expression - value|` with the expression evaluated at `digits`
    /// significant digits throughout.
    pub fn deviation(&self, digits: usize) -> f64 {
        let v = self.expression.eval(digits);
        let d = (&v.re - &self.value).with_precision(digits).value();
        hp_to_f64(&hp_abs(&d)).max(hp_to_f64(&hp_abs(&v.im)))
    }
}

#[derive(Serialize, Deserialize)]
struct RootJson {
    value: String,
    radical_expr: RadicalExpr,
    #[serde(default = "one")]
    multiplicity: usize,
}

fn one() -> usize {
    1
}

impl Serialize for RadicalRoot {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        RootJson {
            value: hp_format(&self.value, VALUE_DIGITS),
            radical_expr: self.expression.clone(),
            multiplicity: self.multiplicity,
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for RadicalRoot {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use std::str::FromStr;
        let j = RootJson::deserialize(d)?;
        let value = DBig::from_str(&j.value)
            .map_err(|e| serde::de::Error::custom(format!("{e:?}")))?
            .with_precision(VALUE_DIGITS)
            .value();
        Ok(RadicalRoot {
            value,
            expression: j.radical_expr,
            multiplicity: j.multiplicity,
        })
    }
}

/// Roots of an even octic, with the accounting of the quartic in `t`.
#[derive(Clone, Debug, PartialEq)]
pub struct OcticRoots {
    /// Real roots, in decreasing order.
    pub roots: Vec<RadicalRoot>,
    /// Quartic roots with nonzero imaginary part, with multiplicity.
    pub complex_t: usize,
    /// Real negative quartic roots, with multiplicity.
    pub negative_t: usize,
    /// Whether some quartic root is repeated.
    pub repeated: bool,
}

/// Real roots of an even degree-8 polynomial, each with a radical
/// expression; complex roots are only counted.
pub fn solve_even_octic(g: &UnivariatePoly) -> Result<Vec<RadicalRoot>> {
    Ok(solve_even_octic_detailed(g)?.roots)
}

pub fn solve_even_octic_detailed(g: &UnivariatePoly) -> Result<OcticRoots> {
    let deg = g.degree().unwrap_or(0);
    if deg != 8 {
        return Err(Error::WrongDegree {
            expected: 8,
            found: deg,
        });
    }
    let quartic = g.even_part(Var::new("t"))?;
    let c: [Rational; 5] = std::array::from_fn(|k| quartic.coeff(k));
    let exprs = quartic_roots(&c);
    let work = VALUE_DIGITS + 30;
    let values: Vec<HpComplex> = exprs.iter().map(|e| e.eval(work)).collect();

    let cluster_tol = parse(CLUSTER_TOL);
    let imag_tol = parse(IMAG_TOL);
    let mut clusters: Vec<(usize, Vec<usize>)> = Vec::new();
    for i in 0..4 {
        match clusters
            .iter_mut()
            .find(|(rep, _)| values[*rep].sub(&values[i]).norm() < cluster_tol)
        {
            Some((_, members)) => members.push(i),
            None => clusters.push((i, vec![i])),
        }
    }
    let mut out = OcticRoots {
        roots: Vec::new(),
        complex_t: 0,
        negative_t: 0,
        repeated: clusters.len() < 4,
    };
    for (rep, members) in &clusters {
        let mult = members.len();
        let mut t = mean(members.iter().map(|&i| &values[i]), work);
        if hp_abs(&t.im) > imag_tol {
            out.complex_t += mult;
            continue;
        }
        let mut re = t.re.clone();
        if mult == 1 {
            re = newton_polish(&quartic, re, work);
        }
        t.re = re;
        if t.re < DBig::ZERO {
            if t.re > -imag_tol.clone() {
                t.re = hp_int(0, work);
            } else {
                out.negative_t += mult;
                continue;
            }
        }
        let sqrt_expr = RadicalExpr::sqrt(exprs[*rep].clone());
        let value = HpComplex::real(t.re.clone()).sqrt().re.with_precision(VALUE_DIGITS).value();
        out.roots.push(RadicalRoot {
            value: value.clone(),
            expression: sqrt_expr.clone(),
            multiplicity: mult,
        });
        if !value.repr().is_zero() {
            out.roots.push(RadicalRoot {
                value: -value,
                expression: RadicalExpr::neg(sqrt_expr),
                multiplicity: mult,
            });
        } else {
            out.roots.last_mut().expect("just pushed").multiplicity *= 2;
        }
    }
    out.roots
        .sort_by(|a, b| b.value.partial_cmp(&a.value).expect("ordered"));
    Ok(out)
}

fn parse(s: &str) -> DBig {
    use std::str::FromStr;
    DBig::from_str(s).expect("constant")
}

fn mean<'a>(vals: impl Iterator<Item = &'a HpComplex>, digits: usize) -> HpComplex {
    let mut acc = HpComplex::zero(digits);
    let mut n = 0;
    for v in vals {
        acc = acc.add(v);
        n += 1;
    }
    let d = HpComplex::real(hp_int(n, digits));
    acc.div(&d)
}

fn newton_polish(p: &UnivariatePoly, mut x: DBig, digits: usize) -> DBig {
    let c: Vec<DBig> = p.coeffs().iter().map(|r| hp_rational(r, digits)).collect();
    let dc: Vec<DBig> = p.derivative().coeffs().iter().map(|r| hp_rational(r, digits)).collect();
    let horner = |cs: &[DBig], x: &DBig| {
        cs.iter()
            .rev()
            .fold(hp_int(0, digits), |acc, k| acc * x + k)
    };
    for _ in 0..3 {
        let d = horner(&dc, &x);
        if d.repr().is_zero() {
            break;
        }
        x = &x - horner(&c, &x) / d;
    }
    x
}

/// The four roots of `c0 + c1 t + c2 t^2 + c3 t^3 + c4 t^4` (`c4 != 0`).
pub fn quartic_roots(c: &[Rational; 5]) -> [RadicalExpr; 4] {
    assert!(!c[4].is_zero(), "leading coefficient vanishes");
    let a = &c[3] / &c[4];
    let b = &c[2] / &c[4];
    let cc = &c[1] / &c[4];
    let d = &c[0] / &c[4];
    let a2 = &a * &a;
    // Depressed quartic u^4 + p u^2 + q u + r with t = u - a/4.
    let p = &b - int(3) * &a2 / int(8);
    let q = &cc - &a * &b / int(2) + &a2 * &a / int(8);
    let r = &d - &a * &cc / int(4) + &a2 * &b / int(16) - int(3) * &a2 * &a2 / int(256);
    let shift = RadicalExpr::rat(-&a / int(4));
    let rat = RadicalExpr::rat;
    let us: [RadicalExpr; 4] = if q.is_zero() {
        let disc = RadicalExpr::sqrt(rat(&p * &p - int(4) * &r));
        let half_neg_p = rat(-&p / int(2));
        let s1 = RadicalExpr::add(half_neg_p.clone(), RadicalExpr::div(disc.clone(), rat(int(2))));
        let s2 = RadicalExpr::sub(half_neg_p, RadicalExpr::div(disc, rat(int(2))));
        let r1 = RadicalExpr::sqrt(s1);
        let r2 = RadicalExpr::sqrt(s2);
        [
            r1.clone(),
            RadicalExpr::neg(r1),
            r2.clone(),
            RadicalExpr::neg(r2),
        ]
    } else {
        let m = resolvent_root(&p, &q, &r);
        let s = RadicalExpr::sqrt(RadicalExpr::mul(rat(int(2)), m.clone()));
        let base = RadicalExpr::sub(
            RadicalExpr::mul(rat(int(-2)), m),
            rat(int(2) * &p),
        );
        let q_over_s = RadicalExpr::div(rat(int(2) * &q), s.clone());
        let d1 = RadicalExpr::sqrt(RadicalExpr::sub(base.clone(), q_over_s.clone()));
        let d2 = RadicalExpr::sqrt(RadicalExpr::add(base, q_over_s));
        let half = |e: RadicalExpr| RadicalExpr::div(e, rat(int(2)));
        let neg_s = RadicalExpr::neg(s.clone());
        [
            half(RadicalExpr::add(s.clone(), d1.clone())),
            half(RadicalExpr::sub(s, d1)),
            half(RadicalExpr::add(neg_s.clone(), d2.clone())),
            half(RadicalExpr::sub(neg_s, d2)),
        ]
    };
    us.map(|u| RadicalExpr::add(u, shift.clone()))
}

/// A nonzero root `m` of `8m^3 + 8p m^2 + (2p^2 - 8r) m - q^2`; rational
/// when one exists, otherwise Cardano's formula.
fn resolvent_root(p: &Rational, q: &Rational, r: &Rational) -> RadicalExpr {
    let cubic = UnivariatePoly::new(
        Var::new("m"),
        vec![-(q * q), int(2) * p * p - int(8) * r, int(8) * p, int(8)],
    );
    let width = Rational::new(BigInt::one(), BigInt::one() << 256u32);
    for (lo, hi) in cubic.isolate_real_roots() {
        let mut lo = lo;
        let mut hi = hi;
        while &hi - &lo > width {
            let mid = (&lo + &hi) / int(2);
            let (slo, smid) = (cubic.eval(&lo).signum(), cubic.eval(&mid).signum());
            if smid.is_zero() {
                lo = mid.clone();
                hi = mid;
                break;
            }
            if slo == smid {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        let guess = simplest_between(&lo, &hi);
        if cubic.eval(&guess).is_zero() && !guess.is_zero() {
            return RadicalExpr::rat(guess);
        }
    }
    // m = y - p/3 with y^3 + P y + Q = 0.
    let cap_p = -(p * p) / int(12) - r;
    let cap_q = -(p * p * p) / int(108) + p * r / int(3) - q * q / int(8);
    let rat = RadicalExpr::rat;
    let y = if cap_p.is_zero() {
        RadicalExpr::cbrt(rat(-cap_q))
    } else {
        let delta = &cap_q * &cap_q / int(4) + &cap_p * &cap_p * &cap_p / int(27);
        let c = RadicalExpr::cbrt(RadicalExpr::add(
            rat(-&cap_q / int(2)),
            RadicalExpr::sqrt(rat(delta)),
        ));
        RadicalExpr::sub(
            c.clone(),
            RadicalExpr::div(rat(cap_p.clone()), RadicalExpr::mul(rat(int(3)), c)),
        )
    };
    RadicalExpr::sub(y, rat(p / int(3)))
}

/// The rational with least denominator in `[lo, hi]`.
pub fn simplest_between(lo: &Rational, hi: &Rational) -> Rational {
    if lo > hi {
        return simplest_between(hi, lo);
    }
    if !lo.is_positive() && !hi.is_negative() {
        return Rational::zero();
    }
    if hi.is_negative() {
        return -simplest_between(&-hi, &-lo);
    }
    let fl = lo.floor();
    if &fl == lo {
        return fl;
    }
    let next = &fl + Rational::one();
    if &next <= hi {
        return next;
    }
    let inner = simplest_between(&(hi - &fl).recip(), &(lo - &fl).recip());
    fl + inner.recip()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    fn t() -> Var {
        Var::new("q0")
    }

    fn from_t_roots(roots: &[Rational]) -> UnivariatePoly {
        // prod (q0^2 - r)
        roots.iter().fold(UnivariatePoly::constant(t(), int(1)), |acc, r| {
            acc.mul(&UnivariatePoly::new(t(), vec![-r.clone(), int(0), int(1)]))
        })
    }

    #[test]
    fn simplest_rational() {
        assert_eq!(simplest_between(&ratio(3, 10), &ratio(4, 10)), ratio(1, 3));
        assert_eq!(simplest_between(&ratio(-7, 5), &ratio(-6, 5)), ratio(-4, 3));
        assert_eq!(simplest_between(&ratio(-1, 2), &ratio(1, 2)), int(0));
        assert_eq!(simplest_between(&ratio(22, 7), &ratio(22, 7)), ratio(22, 7));
    }

    #[test]
    fn quadruple_quarter() {
        let g = from_t_roots(&[ratio(1, 4), ratio(1, 4), ratio(1, 4), ratio(1, 4)]);
        let out = solve_even_octic_detailed(&g).unwrap();
        assert_eq!(out.roots.len(), 2);
        assert!((out.roots[0].value_f64() - 0.5).abs() < 1e-30);
        assert!((out.roots[1].value_f64() + 0.5).abs() < 1e-30);
        assert_eq!(out.roots[0].multiplicity, 4);
        assert!(out.repeated);
    }

    #[test]
    fn planted_rational_roots() {
        let planted = [ratio(1, 9), ratio(2, 7), ratio(5, 3), ratio(-1, 2)];
        let out = solve_even_octic_detailed(&from_t_roots(&planted)).unwrap();
        assert_eq!(out.negative_t, 1);
        assert_eq!(out.roots.len(), 6);
        for root in &out.roots {
            let v2 = &root.value * &root.value;
            let best = planted
                .iter()
                .map(|r| hp_to_f64(&hp_abs(&(&v2 - hp_rational(r, VALUE_DIGITS)))))
                .fold(f64::INFINITY, f64::min);
            assert!(best < 1e-40, "{best}");
            assert!(root.deviation(30) < 1e-25);
        }
    }

    #[test]
    fn casus_irreducibilis_and_complex_pair() {
        // t^4 - 3t^3 + t^2 + 2t - 1/3 has no rational resolvent root.
        let q = UnivariatePoly::new(t(), vec![ratio(-1, 3), int(0), int(2), int(0), int(1), int(0), int(-3), int(0), int(1)]);
        let out = solve_even_octic_detailed(&q).unwrap();
        for root in &out.roots {
            assert!(root.deviation(30) < 1e-25);
            assert!(q.eval_f64(root.value_f64()).abs() < 1e-10);
        }
        // (t^2 + 1)(t - 1)(t - 4) -> q0 in {±1, ±2}, two complex t.
        let c = UnivariatePoly::new(t(), vec![int(4), int(0), int(-5), int(0), int(5), int(0), int(-5), int(0), int(1)]);
        let out = solve_even_octic_detailed(&c).unwrap();
        assert_eq!(out.complex_t, 2);
        let vals: Vec<f64> = out.roots.iter().map(RadicalRoot::value_f64).collect();
        assert_eq!(vals.len(), 4);
        for (v, e) in vals.iter().zip([2.0, 1.0, -1.0, -2.0]) {
            assert!((v - e).abs() < 1e-30);
        }
    }

    #[test]
    fn shape_errors() {
        let odd = UnivariatePoly::new(t(), vec![int(0), int(1), int(0), int(0), int(0), int(0), int(0), int(0), int(1)]);
        assert_eq!(solve_even_octic(&odd), Err(Error::NotEven));
        let sextic = from_t_roots(&[int(1), int(2), int(3)]);
        assert_eq!(
            solve_even_octic(&sextic),
            Err(Error::WrongDegree { expected: 8, found: 6 })
        );
    }

    #[test]
    fn root_json_round_trip() {
        let g = from_t_roots(&[ratio(1, 9), ratio(2, 7), ratio(5, 3), int(3)]);
        let out = solve_even_octic(&g).unwrap();
        let text = serde_json::to_string(&out).unwrap();
        let back: Vec<RadicalRoot> = serde_json::from_str(&text).unwrap();
        assert_eq!(back, out);
    }
}
