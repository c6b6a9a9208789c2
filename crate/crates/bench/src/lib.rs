//! Fixed inputs shared by the benchmarks.

use quatdix::rational::ratio;
use quatdix::spm::MotorAngles;

pub fn case_study() -> MotorAngles {
    MotorAngles::from_sin_cos([
        (ratio(3, 5), ratio(4, 5)),
        (ratio(5, 13), ratio(12, 13)),
        (ratio(7, 25), ratio(24, 25)),
    ])
    .expect("points on the unit circle")
}

/// Angles whose exact sine/cosine have larger denominators.
pub fn wide_angles() -> MotorAngles {
    MotorAngles::from_theta([0.731, -1.902, 2.417]).expect("finite")
}
