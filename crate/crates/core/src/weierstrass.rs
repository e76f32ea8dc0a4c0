//! Numeric evaluation of `℘`, `℘'`, `R = ℘ − α` and `(R'/R)²` on the
//! rectangular lattice.
//!
//! The argument is first reduced to the cell around the origin. Small
//! arguments go straight to the Laurent series at the origin; larger ones
//! are halved until they fit inside the series radius and then doubled
//! back with the tangent-line duplication formula, carrying `℘` and `℘'`
//! together.

use num_complex::Complex64;
use serde::ser::{Serialize, SerializeStruct, Serializer};

use crate::error::{Error, Result};
use crate::lattice::{compute_lattice, Lattice};
use crate::params::{Beta, CurveParams};

/// Fraction of the shortest period inside which the Laurent series is used.
pub const SERIES_RADIUS_FRACTION: f64 = 0.4;
/// Fraction of the shortest period inside which an argument is a pole.
pub const POLE_RADIUS_FRACTION: f64 = 1e-12;
const SERIES_TOL: f64 = 1e-18;
const MAX_TERMS: usize = 200;

/// A value of `R` (or `℘`) at a point: finite, or the double pole at a
/// lattice point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum NodeValue {
    Finite(Complex64),
    Pole,
}

impl NodeValue {
    pub fn finite(self) -> Option<Complex64> {
        match self {
            NodeValue::Finite(v) => Some(v),
            NodeValue::Pole => None,
        }
    }

    pub fn is_pole(self) -> bool {
        matches!(self, NodeValue::Pole)
    }

    pub fn conj(self) -> Self {
        match self {
            NodeValue::Finite(v) => NodeValue::Finite(v.conj()),
            NodeValue::Pole => NodeValue::Pole,
        }
    }

    pub fn map(self, f: impl FnOnce(Complex64) -> Complex64) -> Self {
        match self {
            NodeValue::Finite(v) => NodeValue::Finite(f(v)),
            NodeValue::Pole => NodeValue::Pole,
        }
    }
}

impl From<Complex64> for NodeValue {
    fn from(v: Complex64) -> Self {
        NodeValue::Finite(v)
    }
}

impl Serialize for NodeValue {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            NodeValue::Finite(v) => {
                let mut s = serializer.serialize_struct("Complex", 2)?;
                s.serialize_field("re", &v.re)?;
                s.serialize_field("im", &v.im)?;
                s.end()
            }
            NodeValue::Pole => serializer.serialize_str("pole"),
        }
    }
}

fn check_finite(z: Complex64) -> Result<()> {
    if z.re.is_finite() && z.im.is_finite() {
        Ok(())
    } else {
        Err(Error::NonFinite)
    }
}

/// Nearest integer, with exact halves rounded toward zero.
fn round_toward_origin(x: f64) -> f64 {
    let t = x.trunc();
    if (x - t).abs() == 0.5 {
        t
    } else {
        x.round()
    }
}

/// `R_β` together with the Weierstrass function of its lattice.
#[derive(Debug, Clone)]
pub struct EssentialFunction {
    params: CurveParams,
    lattice: Lattice,
    series_radius: f64,
    pole_radius: f64,
    /// `c_k · r0^(2k)` for k = 2.., where `℘(z) = 1/z² + Σ c_k z^(2k−2)`.
    scaled_coeffs: Vec<f64>,
}

impl EssentialFunction {
    pub fn new(params: &CurveParams, lattice: &Lattice) -> Result<Self> {
        Beta::new(params.beta)?;
        let expected = compute_lattice(params)?;
        let rel = |a: f64, b: f64| (a - b).abs() <= 1e-12 * b.abs();
        if !(rel(lattice.omega1, expected.omega1) && rel(lattice.omega2_im, expected.omega2_im)) {
            return Err(Error::InconsistentLattice);
        }
        let min_period = lattice.min_period();
        let series_radius = SERIES_RADIUS_FRACTION * min_period;
        Ok(EssentialFunction {
            params: *params,
            lattice: *lattice,
            series_radius,
            pole_radius: POLE_RADIUS_FRACTION * min_period,
            scaled_coeffs: laurent_coefficients(params.g2, params.g3, series_radius),
        })
    }

    pub fn from_beta(beta: Beta) -> Result<Self> {
        let params = CurveParams::new(beta);
        let lattice = compute_lattice(&params)?;
        Self::new(&params, &lattice)
    }

    pub fn params(&self) -> &CurveParams {
        &self.params
    }

    pub fn lattice(&self) -> &Lattice {
        &self.lattice
    }

    /// Translate `z` by the nearest lattice vector.
    pub fn reduce(&self, z: Complex64) -> Complex64 {
        let p1 = 2.0 * self.lattice.omega1;
        let p2 = 2.0 * self.lattice.omega2_im;
        let k1 = round_toward_origin(z.re / p1);
        let k2 = round_toward_origin(z.im / p2);
        Complex64::new(z.re - k1 * p1, z.im - k2 * p2)
    }

    fn at_half_period(&self, reduced: Complex64) -> bool {
        let (w1, w2) = (self.lattice.omega1, self.lattice.omega2_im);
        let near = |a: f64, b: f64| (a - b).abs() < self.pole_radius;
        let re_half = near(reduced.re.abs(), w1);
        let im_half = near(reduced.im.abs(), w2);
        let re_zero = near(reduced.re, 0.0);
        let im_zero = near(reduced.im, 0.0);
        (re_half && (im_zero || im_half)) || (re_zero && im_half)
    }

    /// `(℘(z), ℘'(z))`, or `None` at a lattice point.
    pub fn wp_pair(&self, z: Complex64) -> Result<Option<(Complex64, Complex64)>> {
        check_finite(z)?;
        let z = self.reduce(z);
        if z.norm() < self.pole_radius {
            return Ok(None);
        }
        let mut halvings = 0;
        let mut u = z;
        while u.norm() > self.series_radius {
            u *= 0.5;
            halvings += 1;
        }
        let (mut p, mut dp) = self.series(u);
        let g2 = self.params.g2;
        for _ in 0..halvings {
            let slope = (6.0 * p * p - 0.5 * g2) / dp;
            let doubled = -2.0 * p + 0.25 * slope * slope;
            dp = -(slope * (doubled - p) + dp);
            p = doubled;
        }
        if self.at_half_period(z) {
            dp = Complex64::new(0.0, 0.0);
        }
        Ok(Some((p, dp)))
    }

    fn series(&self, z: Complex64) -> (Complex64, Complex64) {
        let r0 = self.series_radius;
        let w = z / r0;
        let w2 = w * w;
        let mut p = w2.inv();
        let mut dp = -2.0 * p / w;
        // w^(2k−2) and w^(2k−3), starting at k = 2
        let mut pow_even = w2;
        let mut pow_odd = w;
        for (i, &a) in self.scaled_coeffs.iter().enumerate() {
            let k = (i + 2) as f64;
            let term = a * pow_even;
            p += term;
            dp += (2.0 * k - 2.0) * a * pow_odd;
            if term.norm() < SERIES_TOL * p.norm() && i > 1 {
                break;
            }
            pow_even *= w2;
            pow_odd *= w2;
        }
        (p / (r0 * r0), dp / (r0 * r0 * r0))
    }

    pub fn wp(&self, z: Complex64) -> Result<NodeValue> {
        Ok(match self.wp_pair(z)? {
            Some((p, _)) => NodeValue::Finite(p),
            None => NodeValue::Pole,
        })
    }

    pub fn wp_prime(&self, z: Complex64) -> Result<NodeValue> {
        Ok(match self.wp_pair(z)? {
            Some((_, dp)) => NodeValue::Finite(dp),
            None => NodeValue::Pole,
        })
    }

    /// `R(z) = ℘(z) − α`.
    pub fn r(&self, z: Complex64) -> Result<NodeValue> {
        Ok(self.wp(z)?.map(|p| p - self.params.alpha))
    }

    /// `(R(z), R'(z))`, or `None` at a lattice point.
    pub fn r_pair(&self, z: Complex64) -> Result<Option<(Complex64, Complex64)>> {
        Ok(self.wp_pair(z)?.map(|(p, dp)| (p - self.params.alpha, dp)))
    }

    /// `(R'(z)/R(z))²`. Rejects poles and zeros of `R`.
    pub fn log_deriv_sq(&self, z: Complex64) -> Result<Complex64> {
        let (r, dr) = self.r_pair(z)?.ok_or(Error::ZeroOrPole)?;
        if r.norm() <= 1e-12 * self.params.beta {
            return Err(Error::ZeroOrPole);
        }
        let q = dr / r;
        Ok(q * q)
    }
}

/// Scaled Laurent coefficients `a_k = c_k·r0^(2k)`, which obey the same
/// convolution recurrence as `c_k` but stay bounded.
fn laurent_coefficients(g2: f64, g3: f64, r0: f64) -> Vec<f64> {
    let r2 = r0 * r0;
    let mut a = vec![0.0; MAX_TERMS + 1];
    a[2] = g2 * r2 * r2 / 20.0;
    a[3] = g3 * r2 * r2 * r2 / 28.0;
    for k in 4..=MAX_TERMS {
        let conv: f64 = (2..=k - 2).map(|m| a[m] * a[k - m]).sum();
        a[k] = 3.0 * conv / ((2 * k + 1) as f64 * (k - 3) as f64);
    }
    a.split_off(2)
}

pub fn wp(z: Complex64, lattice: &Lattice, params: &CurveParams) -> Result<NodeValue> {
    EssentialFunction::new(params, lattice)?.wp(z)
}

pub fn wp_prime(z: Complex64, lattice: &Lattice, params: &CurveParams) -> Result<NodeValue> {
    EssentialFunction::new(params, lattice)?.wp_prime(z)
}

pub fn essential_r(z: Complex64, lattice: &Lattice, params: &CurveParams) -> Result<NodeValue> {
    EssentialFunction::new(params, lattice)?.r(z)
}

pub fn log_deriv_sq(z: Complex64, lattice: &Lattice, params: &CurveParams) -> Result<Complex64> {
    EssentialFunction::new(params, lattice)?.log_deriv_sq(z)
}
