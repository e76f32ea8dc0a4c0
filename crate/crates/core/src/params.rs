//! Scalar constants of the curve `R'² = 4R(R+β)(R+1/β)`.
//!
//! Everything is derived from the single real parameter `β > 1`. The
//! Weierstrass function of the same lattice is `℘ = R + α` and its cubic
//! roots are `e1 = α`, `e2 = α − 1/β`, `e3 = α − β`.

use serde::Serialize;

use crate::error::{Error, Result};

/// Below this the `1/√(β−1)` factors in the order-8 closed forms lose
/// most of their digits. Construction still succeeds; callers may warn.
pub const NEAR_ONE_FLOOR: f64 = 1.0 + 1e-6;

/// A real parameter strictly greater than one.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Serialize)]
#[serde(transparent)]
pub struct Beta(f64);

impl Beta {
    pub fn new(value: f64) -> Result<Self> {
        if value.is_finite() && value > 1.0 {
            Ok(Beta(value))
        } else {
            Err(Error::InvalidBeta(value))
        }
    }

    /// `β = (3+√5)/2`, the value for which `α = 1`.
    pub fn golden_square() -> Self {
        Beta((3.0 + 5f64.sqrt()) / 2.0)
    }

    #[inline]
    pub fn value(self) -> f64 {
        self.0
    }

    pub fn is_near_one(self) -> bool {
        self.0 < NEAR_ONE_FLOOR
    }
}

impl TryFrom<f64> for Beta {
    type Error = Error;

    fn try_from(value: f64) -> Result<Self> {
        Beta::new(value)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CurveParams {
    pub beta: f64,
    /// `(β + 1/β)/3`, the shift between `℘` and `R`.
    pub alpha: f64,
    /// `β − 1/β`; also the square root of the discriminant of `x(x+β)(x+1/β)`.
    pub d: f64,
    /// `√(β/d)`.
    pub delta: f64,
    pub e1: f64,
    pub e2: f64,
    pub e3: f64,
    pub g2: f64,
    pub g3: f64,
    pub discriminant_sqrt: f64,
}

impl CurveParams {
    pub fn new(beta: Beta) -> Self {
        derive_params(beta)
    }

    #[inline]
    pub fn beta(&self) -> Beta {
        Beta(self.beta)
    }

    /// `(e1 − e3, e1 − e2, e2 − e3) = (β, 1/β, d)` without cancellation.
    pub fn root_gaps(&self) -> (f64, f64, f64) {
        (self.beta, 1.0 / self.beta, self.d)
    }

    /// Right-hand side `4x³ − g2·x − g3` of the ℘ equation.
    pub fn weierstrass_cubic(&self, x: f64) -> f64 {
        4.0 * x * x * x - self.g2 * x - self.g3
    }

    /// Radius `β/δ` of the circle centred at `−β` on which the half-rectangle
    /// centres land.
    pub fn red_radius(&self) -> f64 {
        self.beta / self.delta
    }
}

pub fn derive_params(beta: Beta) -> CurveParams {
    let b = beta.value();
    let inv = 1.0 / b;
    let alpha = (b + inv) / 3.0;
    let d = b - inv;
    let delta = (b / d).sqrt();
    let (e1, e2) = (alpha, alpha - inv);
    // α − β, written so the three roots sum to zero in floating point.
    let e3 = -(e1 + e2);
    let g2 = -4.0 * (e1 * e2 + e1 * e3 + e2 * e3);
    let g3 = 4.0 * e1 * e2 * e3;
    CurveParams { beta: b, alpha, d, delta, e1, e2, e3, g2, g3, discriminant_sqrt: d }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol * b.abs().max(1.0)
    }

    #[test]
    fn rejects_beta_at_or_below_one() {
        assert_eq!(Beta::new(1.0), Err(Error::InvalidBeta(1.0)));
        assert!(Beta::new(0.5).is_err());
        assert!(Beta::new(-3.0).is_err());
        assert!(Beta::new(f64::NAN).is_err());
        assert!(Beta::new(f64::INFINITY).is_err());
        assert!(Beta::new(1.0 + f64::EPSILON).is_ok());
    }

    #[test]
    fn beta_three() {
        let p = derive_params(Beta::new(3.0).unwrap());
        assert!(close(p.d, 8.0 / 3.0, 1e-15));
        assert!(close(p.delta, 3.0 / (2.0 * 2f64.sqrt()), 1e-15));
        assert!(close(p.e1, 10.0 / 9.0, 1e-15));
        assert!(close(p.e2, 7.0 / 9.0, 1e-15));
        assert!(close(p.e3, -17.0 / 9.0, 1e-15));
        assert!((p.e1 + p.e2 + p.e3).abs() < 1e-14);
    }

    #[test]
    fn smallest_root_matches_alpha_minus_beta() {
        for b in [1.2, 3.0, 10.0, 49.147673399] {
            let p = derive_params(Beta::new(b).unwrap());
            assert!(close(p.e3, p.alpha - b, 1e-15));
        }
    }

    #[test]
    fn golden_square_has_unit_alpha() {
        let p = derive_params(Beta::golden_square());
        assert!((p.alpha - 1.0).abs() < 1e-15);
        assert!((p.d - 5f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn near_one_flag() {
        assert!(Beta::new(1.0 + 1e-7).unwrap().is_near_one());
        assert!(!Beta::new(1.2).unwrap().is_near_one());
    }

    proptest! {
        #[test]
        fn roots_ordered_and_centred(b in 1.0001f64..50.0) {
            let p = derive_params(Beta::new(b).unwrap());
            prop_assert!(p.e1 > p.e2 && p.e2 > p.e3);
            prop_assert!((p.e1 + p.e2 + p.e3).abs() <= 1e-14);
            prop_assert_eq!(p.alpha, (b + 1.0 / b) / 3.0);
        }

        #[test]
        fn invariants_reproduce_the_cubic(b in 1.0001f64..50.0) {
            let p = derive_params(Beta::new(b).unwrap());
            let scale = 4.0 * b.powi(3) + p.g2.abs() * b + p.g3.abs();
            for e in [p.e1, p.e2, p.e3] {
                prop_assert!(p.weierstrass_cubic(e).abs() <= 1e-12 * scale);
            }
        }

        #[test]
        fn delta_identities(b in 1.0001f64..50.0) {
            let p = derive_params(Beta::new(b).unwrap());
            prop_assert!(close(p.delta * p.delta * p.d, b, 1e-14));
            let r = p.red_radius();
            prop_assert!(((r * r + 1.0) - b * b).abs() <= 1e-12 * b * b);
        }
    }
}
