pub mod closed_forms;
pub mod error;
pub mod figure;
pub mod lattice;
pub mod lattice_sum;
pub mod params;
pub mod verify;
pub mod weierstrass;

pub use closed_forms::{build_catalog, grid_table, tribonacci_b, ClosedFormTable, RadicalCatalog};
pub use error::{Error, Result};
pub use figure::{figure_data, render_figure, FigureConfig, FigureData, Viewport};
pub use lattice::{agm, compute_lattice, Lattice};
pub use lattice_sum::wp_lattice_sum_oracle;
pub use num_complex::Complex64;
pub use params::{derive_params, Beta, CurveParams};
pub use verify::{
    half_argument_oracle, standard_betas, sweep, sweep_betas, verify, verify_claims, verify_grid,
    SweepReport, Verdict, VerificationReport,
};
pub use weierstrass::{EssentialFunction, NodeValue};
