use std::ops::Neg;

use crate::rational::{ratio, Rational};

/// The eight tuples generated from a solution `s`: `s`,
/// `(s1, -s0, -s3, s2)`, `(s2, s3, -s0, -s1)`, `(s3, -s2, s1, -s0)`, then
/// the negations of those four.
pub fn symmetry_orbit<T>(s: &[T; 4]) -> [[T; 4]; 8]
where
    T: Clone + Neg<Output = T>,
{
    let [a, b, c, d] = s.clone();
    let base = [
        [a.clone(), b.clone(), c.clone(), d.clone()],
        [b.clone(), -a.clone(), -d.clone(), c.clone()],
        [c.clone(), d.clone(), -a.clone(), -b.clone()],
        [d, -c, b, -a],
    ];
    std::array::from_fn(|k| {
        let t = base[k % 4].clone();
        if k < 4 {
            t
        } else {
            t.map(|x| -x)
        }
    })
}

/// The eight points with all coordinates `±1/2` that solve every system of
/// the three-leg family regardless of the angles.
pub fn extraneous_set() -> [[Rational; 4]; 8] {
    let h = || ratio(1, 2);
    symmetry_orbit(&[h(), h(), h(), h()])
}

pub fn extraneous_set_f64() -> [[f64; 4]; 8] {
    symmetry_orbit(&[0.5; 4])
}

/// Within max-norm `tol` of one of the extraneous points.
pub fn is_extraneous(q: &[f64; 4], tol: f64) -> bool {
    extraneous_set_f64().iter().any(|r| {
        r.iter()
            .zip(q)
            .all(|(a, b)| (a - b).abs() < tol)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orbit_of_identity() {
        let o = symmetry_orbit(&[1.0, 0.0, 0.0, 0.0]);
        assert_eq!(o[0], [1.0, 0.0, 0.0, 0.0]);
        assert_eq!(o[1], [0.0, -1.0, 0.0, 0.0]);
        assert_eq!(o[2], [0.0, 0.0, -1.0, 0.0]);
        assert_eq!(o[3], [0.0, 0.0, 0.0, -1.0]);
        assert_eq!(o[4], [-1.0, 0.0, 0.0, 0.0]);
    }

    #[test]
    fn extraneous_points() {
        let e = extraneous_set();
        let h = ratio(1, 2);
        assert_eq!(e[0], [h.clone(), h.clone(), h.clone(), h.clone()]);
        assert_eq!(e[1], [h.clone(), -h.clone(), -h.clone(), h.clone()]);
        assert_eq!(e[2], [h.clone(), h.clone(), -h.clone(), -h.clone()]);
        assert_eq!(e[3], [h.clone(), -h.clone(), h.clone(), -h.clone()]);
        for i in 0..8 {
            for j in 0..i {
                assert_ne!(e[i], e[j]);
            }
            // Closed under the orbit map.
            for member in symmetry_orbit(&e[i]) {
                assert!(e.contains(&member));
            }
        }
        assert!(is_extraneous(&[-0.5, -0.5, 0.5, 0.5], 1e-6));
        assert!(!is_extraneous(&[0.5, 0.5, 0.5, 0.49], 1e-6));
    }
}
