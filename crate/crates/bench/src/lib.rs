//! Shared inputs for the benchmarks.

use eighth_core::{Complex64, Lattice};

/// `n × n` points on a regular grid strictly inside the period rectangle.
pub fn interior_points(lattice: &Lattice, n: usize) -> Vec<Complex64> {
    let step = |k: usize| (k as f64 + 0.5) / n as f64;
    (0..n)
        .flat_map(|i| {
            (0..n).map(move |j| {
                Complex64::new(2.0 * lattice.omega1 * step(i), 2.0 * lattice.omega2_im * step(j))
            })
        })
        .collect()
}
