//! Period lattice of `R_β` for real `β > 1`.
//!
//! With three real roots the lattice is rectangular: one real half-period
//! `ω1` and one purely imaginary half-period `ω2 = i·omega2_im`, both given
//! by arithmetic-geometric means of the root gaps.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::params::CurveParams;

pub const AGM_MAX_ITER: usize = 64;

/// Iterates `(a, b) -> ((a+b)/2, √(ab))`, returning every pair including
/// the starting one. Stops once `|a − b| ≤ 4·ε·a`.
pub fn agm_sequence(a: f64, b: f64) -> Result<Vec<(f64, f64)>> {
    if !(a.is_finite() && b.is_finite() && a > 0.0 && b > 0.0) {
        return Err(Error::NonPositiveAgm(a, b));
    }
    let (mut a, mut b) = if a >= b { (a, b) } else { (b, a) };
    let mut steps = vec![(a, b)];
    for _ in 0..AGM_MAX_ITER {
        if (a - b).abs() <= 4.0 * f64::EPSILON * a {
            return Ok(steps);
        }
        let next = (0.5 * (a + b), (a * b).sqrt());
        (a, b) = next;
        steps.push(next);
    }
    Err(Error::AgmNoConvergence(AGM_MAX_ITER))
}

pub fn agm(a: f64, b: f64) -> Result<f64> {
    let steps = agm_sequence(a, b)?;
    let (a, b) = steps[steps.len() - 1];
    Ok(0.5 * (a + b))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Lattice {
    pub omega1: f64,
    pub omega2_im: f64,
}

impl Lattice {
    #[inline]
    pub fn omega2(&self) -> Complex64 {
        Complex64::new(0.0, self.omega2_im)
    }

    /// Shortest nonzero lattice vector length, `min(2ω1, 2·omega2_im)`.
    pub fn min_period(&self) -> f64 {
        2.0 * self.omega1.min(self.omega2_im)
    }

    /// Grid node `(m, n)` of the full-period rectangle cut 8×8:
    /// `z = (m·ω1 + n·ω2)/4`.
    pub fn eighth_node(&self, m: usize, n: usize) -> Complex64 {
        Complex64::new(m as f64 * self.omega1 / 4.0, n as f64 * self.omega2_im / 4.0)
    }
}

pub fn compute_lattice(params: &CurveParams) -> Result<Lattice> {
    let (e13, e12, e23) = params.root_gaps();
    let s13 = e13.sqrt();
    let omega1 = PI / (2.0 * agm(s13, e12.sqrt())?);
    let omega2_im = PI / (2.0 * agm(s13, e23.sqrt())?);
    Ok(Lattice { omega1, omega2_im })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::params::{derive_params, Beta};
    use proptest::prelude::*;

    // Plain fixed-count iteration, no early exit.
    fn agm_reference(mut a: f64, mut b: f64) -> f64 {
        for _ in 0..40 {
            (a, b) = (0.5 * (a + b), (a * b).sqrt());
        }
        a
    }

    // Midpoint rule for ∫_0^∞ du/√((u²+p)(u²+q)) after u = tan θ; the
    // integrand is smooth and even at both ends, so convergence is geometric.
    fn gap_integral(p: f64, q: f64) -> f64 {
        let n = 4000;
        let h = 0.5 * PI / n as f64;
        (0..n)
            .map(|k| {
                let t = (k as f64 + 0.5) * h;
                let (s, c) = (t.sin().powi(2), t.cos().powi(2));
                1.0 / ((s + p * c) * (s + q * c)).sqrt()
            })
            .sum::<f64>()
            * h
    }

    #[test]
    fn agm_known_values() {
        assert_eq!(agm(2.5, 2.5).unwrap(), 2.5);
        let v = agm(1.0, 2.0).unwrap();
        assert!((v - agm_reference(1.0, 2.0)).abs() < 1e-15);
        // mpmath: agm(1, 2) = 1.456791031046906869...
        assert!((v - 1.456_791_031_046_907).abs() < 1e-15);
        assert_eq!(agm(1.0, 2.0).unwrap(), agm(2.0, 1.0).unwrap());
    }

    #[test]
    fn agm_rejects_non_positive() {
        assert_eq!(agm(0.0, 1.0), Err(Error::NonPositiveAgm(0.0, 1.0)));
        assert!(agm(-1.0, 1.0).is_err());
        assert!(agm(1.0, f64::NAN).is_err());
    }

    #[test]
    fn golden_square_real_half_period() {
        let p = derive_params(Beta::golden_square());
        let b = p.beta;
        // mpmath, 25 digits
        assert!((agm(b.sqrt(), 1.0 / b.sqrt()).unwrap() - 1.058_193_968_940_013).abs() < 1e-14);
        let l = compute_lattice(&p).unwrap();
        assert!((l.omega1 - 1.484_412_473_422_386_5).abs() < 1e-14);
    }

    #[test]
    fn half_periods_match_quadrature() {
        for b in [1.2, 3.0, 10.0] {
            let p = derive_params(Beta::new(b).unwrap());
            let l = compute_lattice(&p).unwrap();
            // ω1 = ∫_{e1}^∞ dt/√cubic, t = e1 + u²
            let w1 = gap_integral(p.e1 - p.e2, p.e1 - p.e3);
            // omega2_im = ∫_{-∞}^{e3} dt/√|cubic|, t = e3 − u²
            let w2 = gap_integral(p.e1 - p.e3, p.e2 - p.e3);
            assert!((l.omega1 - w1).abs() < 1e-12 * w1, "beta {b}: {} vs {w1}", l.omega1);
            assert!((l.omega2_im - w2).abs() < 1e-12 * w2, "beta {b}: {} vs {w2}", l.omega2_im);
        }
        let p = derive_params(Beta::new(3.0).unwrap());
        let l = compute_lattice(&p).unwrap();
        let expected = PI / (2.0 * agm(3f64.sqrt(), (8.0f64 / 3.0).sqrt()).unwrap());
        assert!((l.omega2_im - expected).abs() < 1e-15);
        // mpmath
        assert!((l.omega2_im - 0.933_798_667_196_669_3).abs() < 1e-14);
    }

    #[test]
    fn eighth_nodes() {
        let l = Lattice { omega1: 2.0, omega2_im: 3.0 };
        assert_eq!(l.eighth_node(4, 0), Complex64::new(2.0, 0.0));
        assert_eq!(l.eighth_node(4, 4), Complex64::new(2.0, 3.0));
        assert_eq!(l.eighth_node(8, 8), Complex64::new(4.0, 6.0));
        assert_eq!(l.min_period(), 4.0);
    }

    proptest! {
        #[test]
        fn agm_sandwich(a in 1e-3f64..1e3, b in 1e-3f64..1e3) {
            let steps = agm_sequence(a, b).unwrap();
            for w in steps.windows(2) {
                let ((a0, b0), (a1, b1)) = (w[0], w[1]);
                prop_assert!(b0 <= b1 * (1.0 + 1e-15));
                prop_assert!(b1 <= a1 * (1.0 + 1e-15));
                prop_assert!(a1 <= a0 * (1.0 + 1e-15));
            }
        }

        #[test]
        fn agm_homogeneous(a in 1e-2f64..1e2, b in 1e-2f64..1e2, k in 1e-2f64..1e2) {
            let lhs = agm(k * a, k * b).unwrap();
            let rhs = k * agm(a, b).unwrap();
            prop_assert!((lhs - rhs).abs() <= 1e-14 * rhs);
        }

        #[test]
        fn agm_symmetric(a in 1e-3f64..1e3, b in 1e-3f64..1e3) {
            prop_assert_eq!(agm(a, b).unwrap(), agm(b, a).unwrap());
        }
    }
}
