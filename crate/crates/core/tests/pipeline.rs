mod common;

use std::collections::HashMap;

use quatdix::dixon::{build_dixon_matrix, dixon_determinant, extract_psi, kernel_coordinates, QuadricSystem};
use quatdix::oracle::{oracle_solve, verify_point, verify_point_exact, OracleConfig};
use quatdix::polyring::Var;
use quatdix::rational::{int, ratio};
use quatdix::solver::{
    assemble_solutions, hp_rational, solve_fdp, solve_fdp_with, AssembleOptions, FdpReport, RadicalExpr,
    RadicalRoot, VALUE_DIGITS,
};
use quatdix::spm::{
    build_3rrrr_system, build_generic_system, extraneous_set, is_extraneous, legs_3rrrr, quaternion_to_rotation,
    quaternion_vars, symmetry_orbit, LegCondition, MotorAngles, Quaternion,
};
use quatdix::Rational;

use common::{case_study, dist, hausdorff, random_angles, rng};

const R: [f64; 4] = [
    0.22420547189459831634,
    0.24102325734564694455,
    0.87935205040860456901,
    0.34406346396151611679,
];

fn first_solution() -> [f64; 4] {
    [R[0], R[1], -R[2], -R[3]]
}

fn env(q: &[f64; 4]) -> HashMap<Var, f64> {
    quaternion_vars().into_iter().zip(q.iter().copied()).collect()
}

#[test]
fn kernel_reads_off_the_case_study_solution() {
    let d = build_dixon_matrix(&build_3rrrr_system(&case_study())).unwrap();
    let xi = kernel_coordinates(&d, R[0]).unwrap().unwrap();
    let want = [R[1], -R[2], -R[3]];
    for (a, b) in xi.iter().zip(&want) {
        assert!((a - b).abs() < 1e-9, "{xi:?}");
    }
    assert_eq!(kernel_coordinates(&d, 0.9).unwrap(), None);
}

#[test]
fn psi_vanish_at_the_case_study_solution() {
    let psi = extract_psi(&build_3rrrr_system(&case_study())).unwrap();
    let e = env(&first_solution());
    for p in psi.as_array() {
        assert!(p.eval_f64(&e).unwrap().abs() < 1e-10);
        assert!(p.degree_in(&quaternion_vars()[1..]) <= 3);
    }
}

#[test]
fn determinant_vanishes_at_oracle_solutions() {
    let mut r = rng(11);
    for _ in 0..5 {
        let sys = build_3rrrr_system(&random_angles(&mut r));
        let det = dixon_determinant(&sys).unwrap().monic();
        for q in oracle_solve(&sys, &OracleConfig::default()).unwrap() {
            let scale: f64 = det.coeffs().iter().map(|c| quatdix::rational::to_f64(c).abs()).sum();
            assert!(det.eval_f64(q[0]).abs() / scale < 1e-9, "{q:?}");
        }
    }
}

#[test]
fn oracle_on_the_case_study() {
    let sys = build_3rrrr_system(&case_study());
    let cfg = OracleConfig::default();
    let found = oracle_solve(&sys, &cfg).unwrap();
    assert_eq!(found.len(), 16);
    assert_eq!(found.iter().filter(|q| is_extraneous(q, 1e-9)).count(), 8);
    for q in &found {
        assert!(verify_point(&sys, q).unwrap().max <= cfg.residual_tol);
        let neg = q.map(|x| -x);
        assert!(found.iter().any(|p| dist(p, &neg) < 1e-9));
        for member in symmetry_orbit(q) {
            assert!(found.iter().any(|p| dist(p, &member) < 1e-9));
        }
    }
}

#[test]
fn point_verification_examples() {
    let sys = build_3rrrr_system(&case_study());
    let half = ratio(1, 2);
    let rho = [half.clone(), half.clone(), half.clone(), half];
    assert_eq!(verify_point_exact(&sys, &rho).unwrap().max, int(0));
    let id = [int(1), int(0), int(0), int(0)];
    assert_eq!(verify_point_exact(&sys, &id).unwrap().residuals[2], ratio(7, 25));
    assert!(verify_point(&sys, &first_solution()).unwrap().max <= 1e-12);
}

#[test]
fn solutions_satisfy_leg_conditions_and_unit_norm() {
    let m = case_study();
    let legs = legs_3rrrr(&m);
    let report = solve_fdp(&m).unwrap();
    for s in &report.solutions {
        let norm: f64 = s.q.iter().map(|x| x * x).sum();
        assert!((norm - 1.0).abs() <= 1e-9);
        let q = quaternion_to_rotation(&Quaternion(s.q)).unwrap();
        assert!(q.orthogonality_error() <= 1e-12);
        for leg in &legs {
            let w = leg.w.clone().map(|x| quatdix::rational::to_f64(&x));
            let nu = leg.nu.clone().map(|x| quatdix::rational::to_f64(&x));
            let mut v = 0.0;
            for i in 0..3 {
                for j in 0..3 {
                    v += w[i] * q.0[i][j] * nu[j];
                }
            }
            assert!((v - quatdix::rational::to_f64(&leg.c)).abs() <= 1e-12);
        }
        for member in symmetry_orbit(&s.q) {
            assert!(report.solutions.iter().any(|p| dist(&p.q, &member) < 1e-9));
        }
    }
}

#[test]
fn extraneous_points_can_be_kept() {
    let report = solve_fdp_with(&case_study(), AssembleOptions { include_extraneous: true }).unwrap();
    assert_eq!(report.solutions.len(), 16);
    let flagged: Vec<_> = report.solutions.iter().filter(|s| s.extraneous).collect();
    assert_eq!(flagged.len(), 8);
    assert!(flagged.iter().all(|s| is_extraneous(&s.q, 1e-12) && s.max_residual() <= 1e-15));
    assert_eq!(report.diagnostics.determinant_degree, 16);
    assert!(report.diagnostics.cross_check.agrees);
}

#[test]
fn report_json_round_trip() {
    let report = solve_fdp(&case_study()).unwrap();
    let back = FdpReport::from_json(&report.to_json()).unwrap();
    assert_eq!(back.to_json(), report.to_json());
    assert_eq!(back.solutions, report.solutions);
    assert_eq!(back.g_coeffs, report.g_coeffs);
}

#[test]
fn system_json_round_trip() {
    let sys = build_3rrrr_system(&case_study());
    let back = QuadricSystem::from_json(&sys.to_json()).unwrap();
    assert_eq!(back, sys);
    assert_eq!(dixon_determinant(&back).unwrap(), dixon_determinant(&sys).unwrap());
}

#[test]
fn right_angles_match_the_oracle() {
    let m = MotorAngles::from_sin_cos([(int(1), int(0)), (int(1), int(0)), (int(1), int(0))]).unwrap();
    let report = solve_fdp(&m).unwrap();
    let ours: Vec<[f64; 4]> = report.solutions.iter().map(|s| s.q).collect();
    let oracle: Vec<[f64; 4]> = oracle_solve(&build_3rrrr_system(&m), &OracleConfig::default())
        .unwrap()
        .into_iter()
        .filter(|q| !is_extraneous(q, 1e-6))
        .collect();
    assert_eq!(ours.len(), oracle.len());
    assert!(hausdorff(&ours, &oracle) < 1e-8);
}

#[test]
fn planted_identity_through_the_generic_builder() {
    let m = MotorAngles::from_sin_cos([
        (ratio(3, 5), ratio(4, 5)),
        (ratio(8, 17), ratio(15, 17)),
        (ratio(-20, 29), ratio(21, 29)),
    ])
    .unwrap();
    let legs = legs_3rrrr(&m).map(|l| {
        let c: Rational = l.w.iter().zip(&l.nu).map(|(a, b)| a * b).sum();
        LegCondition::new(l.w, l.nu, c).unwrap()
    });
    let sys = build_generic_system(&legs);
    let det = dixon_determinant(&sys).unwrap();
    assert_eq!(det.eval(&int(1)), int(0));
    assert_eq!(det.eval(&int(-1)), int(0));
    let roots: Vec<RadicalRoot> = [1, -1]
        .iter()
        .map(|&v| RadicalRoot {
            value: hp_rational(&int(v), VALUE_DIGITS),
            expression: RadicalExpr::rat(int(v)),
            multiplicity: 1,
        })
        .collect();
    let set = assemble_solutions(&sys, &roots).unwrap();
    for want in [[1.0, 0.0, 0.0, 0.0], [-1.0, 0.0, 0.0, 0.0]] {
        assert!(set.solutions.iter().any(|s| dist(&s.q, &want) < 1e-12));
    }
    assert!(set.solutions.iter().all(|s| s.max_residual() <= 1e-9));
    assert!(extraneous_set().iter().all(|rho| verify_point_exact(&sys, rho).unwrap().max != int(0)));
}
