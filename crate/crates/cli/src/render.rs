use serde::Serialize;

use quatdix::polyring::UnivariatePoly;
use quatdix::solver::{hp_format, FdpReport, RadicalRoot};
use quatdix::spm::is_extraneous;

/// Scientific text `d.ddde±x` rewritten with exactly `digits` significant
/// digits, positional unless the magnitude is very large or very small.
fn positional(sci: &str, digits: u32) -> String {
    let (mantissa, exp) = sci.split_once(['e', 'E']).unwrap_or((sci, "0"));
    let exp: i32 = exp.parse().unwrap_or(0);
    let (sign, mantissa) = match mantissa.strip_prefix('-') {
        Some(m) => ("-", m),
        None => ("", mantissa),
    };
    let mut ds: String = mantissa.chars().filter(char::is_ascii_digit).collect();
    while ds.len() < digits as usize {
        ds.push('0');
    }
    ds.truncate(digits as usize);
    if exp < -4 || exp >= digits as i32 {
        let (head, tail) = ds.split_at(1);
        let dot = if tail.is_empty() { "" } else { "." };
        return format!("{sign}{head}{dot}{tail}e{exp}");
    }
    if exp < 0 {
        format!("{sign}0.{}{ds}", "0".repeat((-exp - 1) as usize))
    } else {
        let (int, frac) = ds.split_at(exp as usize + 1);
        let dot = if frac.is_empty() { "" } else { "." };
        format!("{sign}{int}{dot}{frac}")
    }
}

pub fn fmt_sig(x: f64, digits: u32) -> String {
    if !x.is_finite() {
        return x.to_string();
    }
    if x == 0.0 {
        return "0".into();
    }
    positional(&format!("{:.*e}", digits.saturating_sub(1) as usize, x), digits)
}

/// A coordinate sitting on a root is printed from the root's
/// high-precision digits.
pub fn fmt_coord(x: f64, roots: &[RadicalRoot], digits: u32) -> String {
    match roots.iter().find(|r| r.value_f64() == x) {
        Some(r) if x != 0.0 => positional(&hp_format(&r.value, digits as usize), digits),
        _ => fmt_sig(x, digits),
    }
}

/// `x` rounded to `digits` significant digits.
pub fn round(x: f64, digits: u32) -> f64 {
    fmt_sig(x, digits).parse().unwrap_or(x)
}

pub fn round_report(mut r: FdpReport, digits: u32) -> FdpReport {
    r.parameters.theta_rad = r.parameters.theta_rad.map(|x| round(x, digits));
    let roots = r.roots.clone();
    for s in &mut r.solutions {
        s.q = s.q.map(|x| fmt_coord(x, &roots, digits).parse().unwrap_or(x));
        s.rotation = s.rotation.map(|row| row.map(|x| round(x, digits)));
        s.residuals = s.residuals.map(|x| round(x, digits));
    }
    r
}

fn row(values: &[f64], digits: u32) -> String {
    values.iter().map(|x| format!("{:>24}", fmt_sig(*x, digits))).collect::<Vec<_>>().join(" ")
}

pub fn report_text(r: &FdpReport, digits: u32) -> String {
    let d = &r.diagnostics;
    let mut out = String::new();
    out += &format!("theta (rad): {}\n", row(&r.parameters.theta_rad, digits));
    for (i, [a, b]) in r.parameters.sin_cos.iter().enumerate() {
        out += &format!("leg {}: sin = {a}, cos = {b}\n", i + 1);
    }
    out += &format!(
        "determinant degree {}, octic matches closed form (scale {})\n",
        d.determinant_degree, d.cross_check.scale
    );
    out += &format!(
        "real roots {}, complex t-roots {}, negative t-roots {}, extraneous removed {}\n",
        d.real_roots, d.complex_t_roots, d.negative_t_roots, d.extraneous_removed
    );
    out += "\nroots in q0:\n";
    for root in &r.roots {
        out += &format!("  {}\n", positional(&hp_format(&root.value, digits as usize), digits));
    }
    let kept = r.solutions.iter().filter(|s| !s.extraneous).count();
    out += &format!("\n{kept} solutions:\n");
    out += &format!("   # {:>24} {:>24} {:>24} {:>24} {:>24}\n", "q0", "q1", "q2", "q3", "max |f|");
    for (i, s) in r.solutions.iter().enumerate() {
        let tag = if s.extraneous { "  extraneous" } else { "" };
        let q: Vec<String> = s.q.iter().map(|x| format!("{:>24}", fmt_coord(*x, &r.roots, digits))).collect();
        out += &format!("{:>4} {} {:>24}{tag}\n", i + 1, q.join(" "), fmt_sig(s.max_residual(), 3));
    }
    out
}

#[derive(Serialize)]
pub struct Determinant {
    pub retained: String,
    pub degree: Option<usize>,
    /// Ascending, exact.
    pub coeffs: Vec<String>,
}

impl Determinant {
    pub fn new(p: &UnivariatePoly) -> Self {
        Determinant {
            retained: p.var().name().to_string(),
            degree: p.degree(),
            coeffs: p.coeffs().iter().map(|c| c.to_string()).collect(),
        }
    }
}

pub fn determinant_text(d: &Determinant) -> String {
    let mut out = match d.degree {
        Some(n) => format!("degree {n} in {}\n", d.retained),
        None => format!("identically zero in {}\n", d.retained),
    };
    for (k, c) in d.coeffs.iter().enumerate() {
        out += &format!("{}^{k}: {c}\n", d.retained);
    }
    out
}

#[derive(Serialize)]
pub struct Verification {
    pub point: [f64; 4],
    pub residuals: [f64; 4],
    pub exact_residuals: [String; 4],
    pub max_residual: f64,
    pub extraneous: bool,
}

pub fn verification_text(v: &Verification, digits: u32) -> String {
    let mut out = format!("point: {}\n", row(&v.point, digits));
    for (i, (r, e)) in v.residuals.iter().zip(&v.exact_residuals).enumerate() {
        out += &format!("f{} = {} (exact {e})\n", i + 1, fmt_sig(*r, digits));
    }
    out += &format!("max residual: {}\n", fmt_sig(v.max_residual, digits));
    if v.extraneous {
        out += "extraneous point\n";
    }
    out
}

#[derive(Serialize)]
pub struct OraclePoint {
    pub q: [f64; 4],
    pub extraneous: bool,
}

#[derive(Serialize)]
pub struct OracleView {
    pub count: usize,
    pub points: Vec<OraclePoint>,
}

impl OracleView {
    pub fn new(points: &[[f64; 4]], digits: u32) -> Self {
        OracleView {
            count: points.len(),
            points: points
                .iter()
                .map(|q| OraclePoint { q: q.map(|x| round(x, digits)), extraneous: is_extraneous(q, 1e-6) })
                .collect(),
        }
    }
}

pub fn oracle_text(v: &OracleView, digits: u32) -> String {
    let mut out = format!("{} points\n", v.count);
    for p in &v.points {
        let tag = if p.extraneous { "  extraneous" } else { "" };
        out += &format!("{}{tag}\n", row(&p.q, digits));
    }
    out
}
