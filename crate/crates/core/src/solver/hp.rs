//! Decimal high-precision reals and complex numbers.

use std::str::FromStr;

use dashu_float::ops::{Abs, SquareRoot};
use dashu_float::DBig;
use dashu_int::IBig;
use num_complex::Complex64;

use crate::rational::Rational;

pub fn hp_int(n: i64, digits: usize) -> DBig {
    DBig::from(IBig::from(n)).with_precision(digits).value()
}

pub fn hp_rational(r: &Rational, digits: usize) -> DBig {
    let n = IBig::from_str(&r.numer().to_string()).expect("integer text");
    let d = IBig::from_str(&r.denom().to_string()).expect("integer text");
    DBig::from(n).with_precision(digits).value() / DBig::from(d).with_precision(digits).value()
}

pub fn hp_f64(x: f64, digits: usize) -> DBig {
    DBig::from_str(&format!("{x:e}"))
        .expect("float text")
        .with_precision(digits)
        .value()
}

pub fn hp_to_f64(x: &DBig) -> f64 {
    x.to_f64().value()
}

pub fn hp_abs(x: &DBig) -> DBig {
    x.clone().abs()
}

/// Significant-digit rendering in scientific notation.
pub fn hp_format(x: &DBig, digits: usize) -> String {
    let r = x.clone().with_precision(digits).value();
    format!("{r:e}")
}

#[derive(Clone, Debug)]
pub struct HpComplex {
    pub re: DBig,
    pub im: DBig,
}

impl HpComplex {
    pub fn real(re: DBig) -> Self {
        let p = re.precision();
        HpComplex {
            re,
            im: DBig::ZERO.with_precision(p).value(),
        }
    }

    pub fn zero(digits: usize) -> Self {
        HpComplex::real(hp_int(0, digits))
    }

    pub fn add(&self, o: &Self) -> Self {
        HpComplex {
            re: &self.re + &o.re,
            im: &self.im + &o.im,
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        HpComplex {
            re: &self.re - &o.re,
            im: &self.im - &o.im,
        }
    }

    pub fn neg(&self) -> Self {
        HpComplex {
            re: -&self.re,
            im: -&self.im,
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        HpComplex {
            re: &self.re * &o.re - &self.im * &o.im,
            im: &self.re * &o.im + &self.im * &o.re,
        }
    }

    pub fn div(&self, o: &Self) -> Self {
        let den = &o.re * &o.re + &o.im * &o.im;
        HpComplex {
            re: (&self.re * &o.re + &self.im * &o.im) / &den,
            im: (&self.im * &o.re - &self.re * &o.im) / &den,
        }
    }

    pub fn norm(&self) -> DBig {
        (&self.re * &self.re + &self.im * &self.im).sqrt()
    }

    pub fn is_zero(&self) -> bool {
        self.re.repr().is_zero() && self.im.repr().is_zero()
    }

    /// Principal square root.
    pub fn sqrt(&self) -> Self {
        let zero = DBig::ZERO;
        if self.im.repr().is_zero() {
            return if self.re >= zero {
                HpComplex {
                    re: self.re.sqrt(),
                    im: self.im.clone(),
                }
            } else {
                HpComplex {
                    re: self.im.clone(),
                    im: (-&self.re).sqrt(),
                }
            };
        }
        let n = self.norm();
        let two = hp_int(2, self.re.precision());
        let nonneg = |x: DBig| if x < zero { hp_int(0, x.precision()) } else { x };
        let re = nonneg((&n + &self.re) / &two).sqrt();
        let im = nonneg((&n - &self.re) / &two).sqrt();
        HpComplex {
            re,
            im: if self.im < zero { -im } else { im },
        }
    }

    /// Principal cube root, by Newton's method from a double-precision seed.
    pub fn cbrt(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let digits = self.re.precision().max(self.im.precision());
        let seed = Complex64::new(hp_to_f64(&self.re), hp_to_f64(&self.im)).cbrt();
        let mut w = HpComplex {
            re: hp_f64(seed.re, digits),
            im: hp_f64(seed.im, digits),
        };
        let three = HpComplex::real(hp_int(3, digits));
        // Quadratic convergence from ~15 digits.
        let rounds = 4 + (digits / 15).ilog2() as usize;
        for _ in 0..rounds {
            let w2 = w.mul(&w);
            let step = w2.mul(&w).sub(self).div(&three.mul(&w2));
            w = w.sub(&step);
        }
        w
    }

    pub fn to_complex64(&self) -> Complex64 {
        Complex64::new(hp_to_f64(&self.re), hp_to_f64(&self.im))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sqrt_of_negative_and_complex() {
        let z = HpComplex::real(hp_int(-4, 40)).sqrt();
        assert!(hp_to_f64(&z.re).abs() < 1e-30);
        assert!((hp_to_f64(&z.im) - 2.0).abs() < 1e-15);
        let w = HpComplex {
            re: hp_int(3, 40),
            im: hp_int(-4, 40),
        }
        .sqrt();
        // (2 - i)^2 = 3 - 4i
        assert!((hp_to_f64(&w.re) - 2.0).abs() < 1e-15);
        assert!((hp_to_f64(&w.im) + 1.0).abs() < 1e-15);
    }

    #[test]
    fn cube_root_high_precision() {
        let z = HpComplex::real(hp_int(2, 60));
        let c = z.cbrt();
        let back = c.mul(&c).mul(&c).sub(&z);
        assert!(hp_abs(&back.re) < DBig::from_str("1e-55").unwrap());
        assert!(hp_abs(&back.im) < DBig::from_str("1e-55").unwrap());
        let z = HpComplex {
            re: hp_int(-1, 60),
            im: hp_int(1, 60),
        };
        let c = z.cbrt();
        let back = c.mul(&c).mul(&c).sub(&z);
        assert!(hp_abs(&back.norm()) < DBig::from_str("1e-55").unwrap());
    }

    #[test]
    fn rational_conversion() {
        let third = hp_rational(&Rational::new(1.into(), 3.into()), 40);
        assert!(hp_format(&third, 10).starts_with("3.333333333"));
    }
}
