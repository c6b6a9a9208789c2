mod args;
mod render;

use std::fs;
use std::io::Write;
use std::path::Path;
use std::process::ExitCode;

use clap::Parser;
use quatdix::dixon::{dixon_determinant, QuadricSystem};
use quatdix::oracle::{oracle_solve, verify_point_exact, OracleConfig};
use quatdix::polyring::Var;
use quatdix::rational::{parse_rational, to_f64};
use quatdix::solver::{solve_fdp_with, AssembleOptions};
use quatdix::spm::{build_3rrrr_system, is_extraneous, MotorAngles};
use quatdix::{Error, Rational};

use args::{AngleSource, Cli, Command, Format, SystemSource};

/// A failure with its exit status and stable diagnostic code.
struct Failure {
    code: &'static str,
    message: String,
    status: u8,
}

impl Failure {
    fn input(message: impl Into<String>) -> Self {
        Failure { code: "bad_input", message: message.into(), status: 1 }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match &e {
            Error::DegenerateSystem => "degenerate_system",
            Error::Parse(_) => "parse",
            Error::InvalidSystem(_) => "invalid_system",
            Error::UnboundParameter(_) => "unbound_parameter",
            Error::NotDivisible => "not_divisible",
            Error::NonSquare { .. } => "non_square",
            Error::AmbiguousKernel(_) => "ambiguous_kernel",
            Error::NotUnit(_) => "not_unit",
            Error::NotEven => "not_even",
            Error::WrongDegree { .. } => "wrong_degree",
            Error::NoRealSolutions => "no_real_solutions",
            Error::CrossCheckMismatch => "cross_check_mismatch",
            Error::InvalidConfig(_) => "invalid_config",
        };
        let status = if e == Error::DegenerateSystem { 2 } else { 1 };
        Failure { code, message: e.to_string(), status }
    }
}

type Run = Result<String, Failure>;

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::input(format!("{}: {e}", path.display())))
}

fn parse_list(text: &str, n: usize, what: &str) -> Result<Vec<Rational>, Failure> {
    let items: Vec<&str> = text.split(',').collect();
    if items.len() != n {
        return Err(Failure::input(format!("{what} needs {n} comma-separated values, got `{text}`")));
    }
    items.iter().map(|s| parse_rational(s).map_err(Failure::from)).collect()
}

fn motor_angles(theta: &Option<String>, sincos: &Option<Vec<String>>, input: &Option<std::path::PathBuf>) -> Result<Option<MotorAngles>, Failure> {
    if let Some(t) = theta {
        let v = t
            .split(',')
            .map(|s| s.trim().parse::<f64>().map_err(|_| Failure::input(format!("bad angle `{s}`"))))
            .collect::<Result<Vec<_>, _>>()?;
        let v: [f64; 3] = v.try_into().map_err(|_| Failure::input("--theta needs three angles"))?;
        return Ok(Some(MotorAngles::from_theta(v)?));
    }
    if let Some(pairs) = sincos {
        let mut out = Vec::new();
        for p in pairs {
            let v = parse_list(p, 2, "--sincos pair")?;
            out.push((v[0].clone(), v[1].clone()));
        }
        let out: [(Rational, Rational); 3] = out.try_into().map_err(|_| Failure::input("--sincos needs three pairs"))?;
        return Ok(Some(MotorAngles::from_sin_cos(out)?));
    }
    if let Some(path) = input {
        return Ok(Some(MotorAngles::from_json(&read(path)?)?));
    }
    Ok(None)
}

fn angles(src: &AngleSource) -> Result<MotorAngles, Failure> {
    motor_angles(&src.theta, &src.sincos, &src.input)?.ok_or_else(|| Failure::input("no input source"))
}

fn system(src: &SystemSource) -> Result<QuadricSystem, Failure> {
    if let Some(path) = &src.system {
        return Ok(QuadricSystem::from_json(&read(path)?)?);
    }
    let m = motor_angles(&src.theta, &src.sincos, &src.input)?.ok_or_else(|| Failure::input("no input source"))?;
    Ok(build_3rrrr_system(&m))
}

fn emit<T: serde::Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("serializable")
}

fn run(cli: &Cli) -> Run {
    match &cli.command {
        Command::Solve { angles: src, out, include_extraneous } => {
            let m = angles(src)?;
            let report = solve_fdp_with(&m, AssembleOptions { include_extraneous: *include_extraneous })?;
            let report = render::round_report(report, out.precision);
            Ok(match out.format {
                Format::Json => report.to_json(),
                Format::Text => render::report_text(&report, out.precision),
            })
        }
        Command::DixonDet { input, out, retain } => {
            let mut sys = system(input)?;
            if let Some(v) = retain {
                sys = sys.with_retained(&Var::new(v))?;
            }
            let det = dixon_determinant(&sys)?;
            let view = render::Determinant::new(&det);
            Ok(match out.format {
                Format::Json => emit(&view),
                Format::Text => render::determinant_text(&view),
            })
        }
        Command::Verify { input, out, point } => {
            let sys = system(input)?;
            let exact: [Rational; 4] = parse_list(point, 4, "--point")?.try_into().expect("four values");
            let rep = verify_point_exact(&sys, &exact)?;
            let q = exact.clone().map(|x| to_f64(&x));
            let view = render::Verification {
                point: q.map(|x| render::round(x, out.precision)),
                residuals: rep.residuals.clone().map(|r| render::round(to_f64(&r), out.precision)),
                exact_residuals: rep.residuals.map(|r| r.to_string()),
                max_residual: render::round(to_f64(&rep.max), out.precision),
                extraneous: is_extraneous(&q, 1e-12),
            };
            Ok(match out.format {
                Format::Json => emit(&view),
                Format::Text => render::verification_text(&view, out.precision),
            })
        }
        Command::Oracle { input, out, grid } => {
            let sys = system(input)?;
            let cfg = OracleConfig { grid_resolution: *grid, ..OracleConfig::default() };
            let points = oracle_solve(&sys, &cfg)?;
            let view = render::OracleView::new(&points, out.precision);
            Ok(match out.format {
                Format::Json => emit(&view),
                Format::Text => render::oracle_text(&view, out.precision),
            })
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            print!("{e}");
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let text = e.render().to_string();
            let mut lines = text.lines();
            let first = lines.next().unwrap_or("").trim_start_matches("error: ");
            eprintln!("error[bad_arguments]: {first}");
            for line in lines {
                eprintln!("{line}");
            }
            return ExitCode::from(1);
        }
    };
    match run(&cli) {
        Ok(text) => {
            // A closed pipe on stdout is not an error worth reporting.
            let _ = writeln!(std::io::stdout().lock(), "{}", text.trim_end());
            ExitCode::SUCCESS
        }
        Err(f) => {
            eprintln!("error[{}]: {}", f.code, f.message);
            ExitCode::from(f.status)
        }
    }
}
