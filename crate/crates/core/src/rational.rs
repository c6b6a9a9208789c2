//! Exact rational scalars and conversions to and from text and floats.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational, always stored in lowest terms with a
/// positive denominator.
pub type Rational = BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `"n"`, `"n/d"` or a plain decimal such as `"-0.25"` / `"1e-3"`.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let s = text.trim();
    if s.is_empty() {
        return Err(Error::Parse("empty rational".into()));
    }
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad numerator in `{s}`")))?;
        let d: BigInt = d
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad denominator in `{s}`")))?;
        if d.is_zero() {
            return Err(Error::Parse(format!("zero denominator in `{s}`")));
        }
        return Ok(Rational::new(n, d));
    }
    parse_decimal(s)
}

fn parse_decimal(s: &str) -> Result<Rational> {
    let bad = || Error::Parse(format!("bad number `{s}`"));
    let (mantissa, exponent) = match s.find(['e', 'E']) {
        Some(i) => (&s[..i], s[i + 1..].parse::<i32>().map_err(|_| bad())?),
        None => (s, 0),
    };
    let (negative, digits) = match mantissa.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (whole, frac) = digits.split_once('.').unwrap_or((digits, ""));
    if whole.is_empty() && frac.is_empty() {
        return Err(bad());
    }
    if !whole.chars().chain(frac.chars()).all(|c| c.is_ascii_digit()) {
        return Err(bad());
    }
    let all: BigInt = format!("{whole}{frac}0").parse::<BigInt>().map_err(|_| bad())? / 10;
    let scale = exponent - frac.len() as i32;
    let ten = BigInt::from(10);
    let mut value = Rational::from_integer(all);
    if scale >= 0 {
        value *= Rational::from_integer(num_traits::pow(ten, scale as usize));
    } else {
        value /= Rational::from_integer(num_traits::pow(ten, (-scale) as usize));
    }
    Ok(if negative { -value } else { value })
}

pub fn to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or_else(|| {
        // Out of f64 range; saturate with the right sign.
        if r.is_negative() {
            f64::NEG_INFINITY
        } else {
            f64::INFINITY
        }
    })
}

/// Simplest rational within `tol` of `x`, via continued-fraction convergents.
pub fn rationalize(x: f64, tol: f64) -> Rational {
    assert!(x.is_finite(), "cannot rationalize {x}");
    let target = Rational::from_float(x).expect("finite float");
    let tol = Rational::from_float(tol.abs()).unwrap_or_else(Rational::zero);
    let (mut h0, mut h1) = (BigInt::zero(), BigInt::one());
    let (mut k0, mut k1) = (BigInt::one(), BigInt::zero());
    let mut rest = target.clone();
    loop {
        let a = rest.floor().to_integer();
        let h2 = &a * &h1 + &h0;
        let k2 = &a * &k1 + &k0;
        let approx = Rational::new(h2.clone(), k2.clone());
        if (&approx - &target).abs() <= tol || approx == target {
            return approx;
        }
        let frac = &rest - Rational::from_integer(a);
        if frac.is_zero() {
            return approx;
        }
        rest = frac.recip();
        (h0, h1) = (h1, h2);
        (k0, k1) = (k1, k2);
    }
}

/// Least common multiple of the denominators.
pub fn denominator_lcm<'a>(values: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    use num_integer::Integer;
    values
        .into_iter()
        .fold(BigInt::one(), |acc, r| acc.lcm(r.denom()))
}
