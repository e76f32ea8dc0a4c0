//! Slow, independent evaluation of `℘` straight from its defining lattice
//! sum. Used only to check the fast evaluator.
//!
//! The square-shell sum `1/z² + Σ [1/(z−w)² − 1/w²]` truncated at shell `N`
//! misses `Σ_{|w|>N} (3z²/w⁴ + 5z⁴/w⁶ + …)`. The odd powers cancel shell by
//! shell but the `z²` term decays only like `1/N²`, so [`wp_lattice_sum_oracle`]
//! adds it back using `G4 = Σ' w⁻⁴` obtained from exact row sums.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::lattice::Lattice;

pub const MIN_CUTOFF: usize = 10;

struct ShellSums {
    wp: Complex64,
    inv4: Complex64,
}

fn shell_sums(z: Complex64, lattice: &Lattice, cutoff: usize) -> ShellSums {
    let (a, b) = (2.0 * lattice.omega1, 2.0 * lattice.omega2_im);
    let mut wp = z.inv() * z.inv();
    let mut inv4 = Complex64::new(0.0, 0.0);
    let mut add = |m: i64, n: i64| {
        let w = Complex64::new(m as f64 * a, n as f64 * b);
        let iw = w.inv();
        let iz = (z - w).inv();
        wp += iz * iz - iw * iw;
        let iw2 = iw * iw;
        inv4 += iw2 * iw2;
    };
    for k in 1..=cutoff as i64 {
        for j in -k..=k {
            add(j, k);
            add(j, -k);
        }
        for j in -k + 1..k {
            add(k, j);
            add(-k, j);
        }
    }
    ShellSums { wp, inv4 }
}

/// `Σ' w⁻⁴` over the whole lattice, summing each horizontal row exactly:
/// `Σ_m (m + x)⁻⁴ = π⁴ (csc⁴ πx − ⅔ csc² πx)`.
pub fn eisenstein_g4(lattice: &Lattice) -> f64 {
    let a = 2.0 * lattice.omega1;
    let a4 = a.powi(4);
    let zeta4 = PI.powi(4) / 90.0;
    let mut total = 2.0 * zeta4 / a4;
    for n in 1.. {
        // x = i·n·omega2_im/omega1, sin(πx) = i·sinh(π n omega2_im/omega1)
        let s = Complex64::new(0.0, (PI * n as f64 * lattice.omega2_im / lattice.omega1).sinh());
        let s2 = (s * s).inv();
        let row = PI.powi(4) * (s2 * s2 - 2.0 / 3.0 * s2) / a4;
        total += 2.0 * row.re;
        if row.norm() < 1e-20 * total.abs() || n > 200 {
            break;
        }
    }
    total
}

/// Truncated shell sum with no tail correction.
pub fn lattice_sum_plain(z: Complex64, lattice: &Lattice, cutoff: usize) -> Result<Complex64> {
    if cutoff < MIN_CUTOFF {
        return Err(Error::InvalidCutoff(cutoff));
    }
    if !(z.re.is_finite() && z.im.is_finite()) {
        return Err(Error::NonFinite);
    }
    Ok(shell_sums(z, lattice, cutoff).wp)
}

/// Shell sum through `cutoff` plus the `3z²·Σ_{|w|>cutoff} w⁻⁴` tail.
pub fn wp_lattice_sum_oracle(z: Complex64, lattice: &Lattice, cutoff: usize) -> Result<Complex64> {
    if cutoff < MIN_CUTOFF {
        return Err(Error::InvalidCutoff(cutoff));
    }
    if !(z.re.is_finite() && z.im.is_finite()) {
        return Err(Error::NonFinite);
    }
    let sums = shell_sums(z, lattice, cutoff);
    let tail = eisenstein_g4(lattice) - sums.inv4;
    Ok(sums.wp + 3.0 * z * z * tail)
}
