use quatdix::dixon::dixon_determinant;
use quatdix::spm::build_3rrrr_system;
use quatdix_bench::{case_study, wide_angles};

#[test]
fn benchmark_inputs_have_full_degree() {
    for m in [case_study(), wide_angles()] {
        let det = dixon_determinant(&build_3rrrr_system(&m)).unwrap();
        assert_eq!(det.degree(), Some(16));
    }
}
