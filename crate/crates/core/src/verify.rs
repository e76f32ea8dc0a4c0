//! Cross-checks of the Λ/8 closed forms.
//!
//! Three independent sources of node values are compared:
//! the radical table, the Laurent/duplication evaluator, and a bisection
//! oracle that halves the exact half-period values twice. The oracle only
//! consults the evaluator through a coarse probe to pick among the four
//! discrete halving candidates.

use num_complex::Complex64;
use serde::Serialize;

use crate::closed_forms::{build_catalog, table_from_catalog, ClosedFormTable, GRID};
use crate::error::Result;
use crate::lattice::{compute_lattice, Lattice};
use crate::params::{Beta, CurveParams};
use crate::weierstrass::{EssentialFunction, NodeValue};

pub const DEFAULT_TOL: f64 = 1e-9;
pub const CONJUGATE_TOL: f64 = 1e-10;
pub const AXIS_ORACLE_TOL: f64 = 1e-9;
pub const TRIPLE_TOL: f64 = 1e-8;
pub const LOG_DERIV_TOL: f64 = 1e-9;
pub const CIRCLE_TOL: f64 = 1e-10;
pub const ORTHOGONALITY_TOL: f64 = 1e-12;
pub const INVERSION_TOL: f64 = 1e-6;
/// Resolution of the evaluator probe used for branch selection.
pub const PROBE_RESOLUTION: f64 = 1e-3;
/// Candidates closer than this (scaled) are the same value.
pub const CANDIDATE_MERGE: f64 = 1e-6;

/// The four centres of the half-period rectangles, as grid nodes.
pub const HALF_RECTANGLE_CENTRES: [(usize, usize); 4] = [(2, 2), (6, 2), (2, 6), (6, 6)];
/// Nodes where `R = 1`, respectively `R = −1`.
pub const PLUS_ONE_NODES: [(usize, usize); 4] = [(2, 0), (6, 0), (2, 8), (6, 8)];
pub const MINUS_ONE_NODES: [(usize, usize); 2] = [(2, 4), (6, 4)];

/// `{1.2, 1.5, (3+√5)/2, b − 0.05, b, b + 0.05, 3, 10}`.
pub fn standard_betas() -> Vec<f64> {
    let b = crate::closed_forms::tribonacci_b();
    vec![1.2, 1.5, Beta::golden_square().value(), b - 0.05, b, b + 0.05, 3.0, 10.0]
}

/// `|a − b| / max(1, |b|)`.
pub fn scaled_err(a: Complex64, b: Complex64) -> f64 {
    (a - b).norm() / b.norm().max(1.0)
}

fn node_errors(closed: NodeValue, numeric: NodeValue) -> (Option<f64>, Option<f64>) {
    match (closed, numeric) {
        (NodeValue::Pole, NodeValue::Pole) => (Some(0.0), Some(0.0)),
        (NodeValue::Finite(c), NodeValue::Finite(v)) => {
            let abs = (c - v).norm();
            (Some(abs), Some(abs / c.norm().max(1.0)))
        }
        _ => (None, None),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

impl Verdict {
    pub fn from_bool(pass: bool) -> Self {
        if pass {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }

    pub fn is_pass(self) -> bool {
        self == Verdict::Pass
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct NodeCheck {
    pub m: usize,
    pub n: usize,
    pub symbol: String,
    pub closed: NodeValue,
    pub numeric: NodeValue,
    /// `None` when one side is a pole and the other is not.
    pub abs_err: Option<f64>,
    pub rel_err: Option<f64>,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PropertyResult {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

impl PropertyResult {
    fn new(name: impl Into<String>, pass: bool, detail: impl Into<String>) -> Self {
        PropertyResult { name: name.into(), pass, detail: detail.into() }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub schema: u32,
    pub beta: f64,
    pub tol: f64,
    pub per_node: Vec<NodeCheck>,
    pub property_results: Vec<PropertyResult>,
    pub orientation_flipped: bool,
    pub verdict: Verdict,
}

impl VerificationReport {
    fn refresh_verdict(&mut self) {
        let ok = self.per_node.iter().all(|c| c.pass) && self.property_results.iter().all(|p| p.pass);
        self.verdict = Verdict::from_bool(ok);
    }

    pub fn max_rel_err(&self) -> f64 {
        self.per_node.iter().map(|c| c.rel_err.unwrap_or(f64::INFINITY)).fold(0.0, f64::max)
    }

    pub fn failures(&self) -> Vec<String> {
        let nodes =
            self.per_node.iter().filter(|c| !c.pass).map(|c| format!("node ({},{}) {}", c.m, c.n, c.symbol));
        let props = self.property_results.iter().filter(|p| !p.pass).map(|p| p.name.clone());
        nodes.chain(props).collect()
    }

    pub fn property(&self, name: &str) -> Option<&PropertyResult> {
        self.property_results.iter().find(|p| p.name == name)
    }
}

/// Outcome of the bisection oracle at one node.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum OracleNode {
    Resolved(NodeValue),
    /// Two distinct halving candidates were equally compatible with the probe.
    Inconclusive,
}

impl OracleNode {
    pub fn value(self) -> Option<NodeValue> {
        match self {
            OracleNode::Resolved(v) => Some(v),
            OracleNode::Inconclusive => None,
        }
    }
}

/// Oracle values indexed `[n][m]`.
#[derive(Debug, Clone, PartialEq)]
pub struct OracleGrid {
    pub nodes: [[OracleNode; GRID]; GRID],
}

impl OracleGrid {
    pub fn get(&self, m: usize, n: usize) -> OracleNode {
        self.nodes[n][m]
    }
}

/// The four values `R(z/2 + ω)`, `ω ∈ {0, ω1, ω2, ω1+ω2}`, given `R(z)`.
///
/// With `a = √R`, `b = √(R+β)`, `c = √(R+1/β)` the candidates are
/// `R + ab + bc + ca` under the four sign patterns of `(a, b, c)` modulo an
/// overall sign.
pub fn halving_candidates(r: Complex64, beta: f64) -> [Complex64; 4] {
    let a = r.sqrt();
    let b = (r + beta).sqrt();
    let c = (r + 1.0 / beta).sqrt();
    let (ab, bc, ca) = (a * b, b * c, c * a);
    [r + ab + bc + ca, r - ab + bc - ca, r - ab - bc + ca, r + ab - bc - ca]
}

fn half_lattice_value(p: usize, q: usize, beta: f64) -> NodeValue {
    let real = |x: f64| NodeValue::Finite(Complex64::new(x, 0.0));
    match (p % 2, q % 2) {
        (0, 0) => NodeValue::Pole,
        (1, 0) => real(0.0),
        (0, 1) => real(-beta),
        _ => real(-1.0 / beta),
    }
}

/// Rounds both components to a grid of `resolution · max(1, |v|)`.
fn coarse(v: Complex64, resolution: f64) -> Complex64 {
    let step = resolution * v.norm().max(1.0);
    Complex64::new((v.re / step).round() * step, (v.im / step).round() * step)
}

/// Picks the candidate nearest the probe. Inconclusive when a second,
/// genuinely different candidate is within the probe's own uncertainty of
/// being just as close.
fn select_branch(candidates: &[Complex64; 4], probe: Complex64) -> Option<Complex64> {
    let scale = probe.norm().max(1.0);
    let mut ranked: Vec<(f64, Complex64)> = candidates.iter().map(|&c| ((c - probe).norm(), c)).collect();
    ranked.sort_by(|x, y| x.0.total_cmp(&y.0));
    let (best_d, best) = ranked[0];
    let rival = ranked[1..].iter().find(|(_, c)| (c - best).norm() > CANDIDATE_MERGE * scale);
    match rival {
        Some(&(d, _)) if d <= best_d + 2.0 * PROBE_RESOLUTION * scale => None,
        _ => Some(best),
    }
}

fn halve_with_probe(parent: OracleNode, z: Complex64, f: &EssentialFunction) -> Result<OracleNode> {
    let beta = f.params().beta;
    let Some(NodeValue::Finite(r)) = parent.value() else {
        return Ok(OracleNode::Inconclusive);
    };
    let probe = match f.r(z)? {
        NodeValue::Finite(v) => coarse(v, PROBE_RESOLUTION),
        NodeValue::Pole => return Ok(OracleNode::Inconclusive),
    };
    Ok(match select_branch(&halving_candidates(r, beta), probe) {
        Some(v) => OracleNode::Resolved(NodeValue::Finite(v)),
        None => OracleNode::Inconclusive,
    })
}

/// Values at every Λ/8 node from the exact half-period values by two
/// rounds of point halving.
pub fn half_argument_oracle(params: &CurveParams, lattice: &Lattice) -> Result<OracleGrid> {
    let f = EssentialFunction::new(params, lattice)?;
    oracle_with(&f)
}

fn oracle_with(f: &EssentialFunction) -> Result<OracleGrid> {
    let beta = f.params().beta;
    let lattice = *f.lattice();
    let quarter_point = |p: usize, q: usize| 2.0 * lattice.eighth_node(p, q);

    let mut quarter = [[OracleNode::Inconclusive; 4]; 4];
    for (q, row) in quarter.iter_mut().enumerate() {
        for (p, slot) in row.iter_mut().enumerate() {
            *slot = if p % 2 == 0 && q % 2 == 0 {
                OracleNode::Resolved(half_lattice_value(p / 2, q / 2, beta))
            } else {
                let parent = OracleNode::Resolved(half_lattice_value(p, q, beta));
                halve_with_probe(parent, quarter_point(p, q), f)?
            };
        }
    }

    let mut nodes = [[OracleNode::Inconclusive; GRID]; GRID];
    for (n, row) in nodes.iter_mut().enumerate() {
        for (m, slot) in row.iter_mut().enumerate() {
            *slot = if m % 4 == 0 && n % 4 == 0 {
                OracleNode::Resolved(half_lattice_value(m / 4, n / 4, beta))
            } else if m % 2 == 0 && n % 2 == 0 {
                quarter[(n / 2) % 4][(m / 2) % 4]
            } else {
                halve_with_probe(quarter[n % 4][m % 4], lattice.eighth_node(m, n), f)?
            };
        }
    }
    Ok(OracleGrid { nodes })
}

fn numeric_grid(f: &EssentialFunction) -> Result<[[NodeValue; GRID]; GRID]> {
    let mut grid = [[NodeValue::Pole; GRID]; GRID];
    for (n, row) in grid.iter_mut().enumerate() {
        for (m, slot) in row.iter_mut().enumerate() {
            *slot = f.r(f.lattice().eighth_node(m, n))?;
        }
    }
    Ok(grid)
}

/// Whether row 1 of the numeric grid matches the table only after
/// reindexing rows `n → 8 − n`.
fn detect_flip(table: &ClosedFormTable, numeric: &[[NodeValue; GRID]; GRID], tol: f64) -> bool {
    let fits = |row: usize| {
        (0..GRID).all(|m| {
            let (_, rel) = node_errors(table.get(m, row).value, numeric[1][m]);
            rel.is_some_and(|e| e <= tol)
        })
    };
    !fits(1) && fits(7)
}

/// Compare every table entry against the evaluator and the bisection
/// oracle.
pub fn verify_grid(beta: Beta, tol: f64) -> Result<VerificationReport> {
    let f = EssentialFunction::from_beta(beta)?;
    verify_grid_with(&f, tol)
}

#[allow(clippy::needless_range_loop)] // grid loops compare row n with row 8 - n
fn verify_grid_with(f: &EssentialFunction, tol: f64) -> Result<VerificationReport> {
    let params = *f.params();
    let table = table_from_catalog(&build_catalog(&params)?);
    let numeric = numeric_grid(f)?;
    let flipped = detect_flip(&table, &numeric, tol);
    let row_of = |n: usize| if flipped { 8 - n } else { n };

    let mut per_node = Vec::with_capacity(GRID * GRID);
    for n in 0..GRID {
        for m in 0..GRID {
            let entry = table.get(m, row_of(n));
            let (abs_err, rel_err) = node_errors(entry.value, numeric[n][m]);
            per_node.push(NodeCheck {
                m,
                n,
                symbol: entry.symbol.to_string(),
                closed: entry.value,
                numeric: numeric[n][m],
                abs_err,
                rel_err,
                pass: rel_err.is_some_and(|e| e <= tol),
            });
        }
    }

    let mut props = Vec::new();
    let corners = [(0, 0), (8, 0), (0, 8), (8, 8)];
    let corner_poles =
        corners.iter().all(|&(m, n)| numeric[n][m].is_pole() && table.get(m, n).value.is_pole());
    props.push(PropertyResult::new(
        "corners_are_poles",
        corner_poles,
        "closed form and evaluator both give a pole at the four corners",
    ));

    let mut conj_worst = 0.0f64;
    for n in 0..GRID {
        for m in 0..GRID {
            if let (NodeValue::Finite(a), NodeValue::Finite(b)) = (numeric[n][m], numeric[8 - n][m]) {
                conj_worst = conj_worst.max(scaled_err(a, b.conj()));
            }
        }
    }
    props.push(PropertyResult::new(
        "conjugate_nodes",
        conj_worst <= CONJUGATE_TOL,
        format!("max |R(m,n) - conj R(m,8-n)| scaled = {conj_worst:.3e}"),
    ));

    let oracle = oracle_with(f)?;
    props.extend(oracle_properties(&table, &numeric, &oracle, row_of));

    let mut report = VerificationReport {
        schema: 1,
        beta: params.beta,
        tol,
        per_node,
        property_results: props,
        orientation_flipped: flipped,
        verdict: Verdict::Fail,
    };
    report.refresh_verdict();
    Ok(report)
}

#[allow(clippy::needless_range_loop)] // grid loops compare row n with row 8 - n
fn oracle_properties(
    table: &ClosedFormTable,
    numeric: &[[NodeValue; GRID]; GRID],
    oracle: &OracleGrid,
    row_of: impl Fn(usize) -> usize,
) -> Vec<PropertyResult> {
    let mut inconclusive = Vec::new();
    let mut axis_worst = 0.0f64;
    let mut triple_worst = 0.0f64;
    let mut pole_mismatch = Vec::new();
    for n in 0..GRID {
        for m in 0..GRID {
            let closed = table.get(m, row_of(n)).value;
            let Some(orc) = oracle.get(m, n).value() else {
                inconclusive.push(format!("({m},{n})"));
                continue;
            };
            match (closed, numeric[n][m], orc) {
                (NodeValue::Finite(c), NodeValue::Finite(v), NodeValue::Finite(o)) => {
                    let worst = scaled_err(c, v).max(scaled_err(o, c)).max(scaled_err(o, v));
                    triple_worst = triple_worst.max(worst);
                    if n == 0 || n == 8 || m == 0 || m == 8 {
                        axis_worst = axis_worst.max(scaled_err(o, c));
                    }
                }
                (NodeValue::Pole, NodeValue::Pole, NodeValue::Pole) => {}
                _ => pole_mismatch.push(format!("({m},{n})")),
            }
        }
    }
    vec![
        PropertyResult::new(
            "half_argument_oracle_conclusive",
            inconclusive.is_empty(),
            if inconclusive.is_empty() {
                "branch selected unambiguously at every node".to_string()
            } else {
                format!("ambiguous branch at {}", inconclusive.join(" "))
            },
        ),
        PropertyResult::new(
            "half_argument_oracle_axes",
            axis_worst <= AXIS_ORACLE_TOL && inconclusive.is_empty(),
            format!("max scaled |oracle - closed| on axis nodes = {axis_worst:.3e}"),
        ),
        PropertyResult::new(
            "triple_source_agreement",
            triple_worst <= TRIPLE_TOL && inconclusive.is_empty() && pole_mismatch.is_empty(),
            if pole_mismatch.is_empty() {
                format!("max pairwise scaled difference = {triple_worst:.3e}")
            } else {
                format!("pole classification differs at {}", pole_mismatch.join(" "))
            },
        ),
    ]
}

/// Circle inversion `w ↦ c + r²/conj(w − c)`.
pub fn invert_in_circle(w: Complex64, centre: Complex64, radius: f64) -> Complex64 {
    centre + radius * radius / (w - centre).conj()
}

/// The geometric statements about the half-rectangle centres, the two
/// circles, and the points where `R = ±1`.
pub fn verify_claims(beta: Beta) -> Result<Vec<PropertyResult>> {
    let f = EssentialFunction::from_beta(beta)?;
    claims_with(&f)
}

#[allow(clippy::needless_range_loop)] // grid loops compare row n with row 8 - n
fn claims_with(f: &EssentialFunction) -> Result<Vec<PropertyResult>> {
    let p = *f.params();
    let l = *f.lattice();
    let b = p.beta;
    let four_d = 4.0 * p.d;
    let red_radius = b / p.delta;
    let mut out = Vec::new();

    // (a) + (e)
    let mut details = Vec::new();
    let mut all_centres = true;
    let mut ratio = f64::NAN;
    for &(m, n) in &HALF_RECTANGLE_CENTRES {
        let q = f.log_deriv_sq(l.eighth_node(m, n))?;
        let err = (q - four_d).norm() / four_d;
        all_centres &= err <= LOG_DERIV_TOL;
        if (m, n) == (2, 2) {
            ratio = q.re / p.d;
        }
        details.push(format!("({m},{n}): {:.12}{:+.3e}i rel {err:.2e}", q.re, q.im));
    }
    out.push(PropertyResult::new(
        "log_derivative_at_centres",
        all_centres,
        format!("(R'/R)^2 vs 4d = {four_d:.12}; {}", details.join("; ")),
    ));
    out.push(PropertyResult::new(
        "log_derivative_over_discriminant_root",
        (ratio - 4.0).abs() <= 4.0 * LOG_DERIV_TOL,
        format!("(R'/R)^2 / d at (2,2) = {ratio:.12}"),
    ));

    // (b)
    let mut worst_unit = 0.0f64;
    let mut worst_red = 0.0f64;
    let mut pairing = Vec::new();
    for &(m, n) in &HALF_RECTANGLE_CENTRES {
        let v = f.r(l.eighth_node(m, n))?.finite().expect("centres are not poles");
        worst_unit = worst_unit.max((v.norm() - 1.0).abs());
        worst_red = worst_red.max(((v + b).norm() - red_radius).abs());
        let side = if v.im > 0.0 { "upper" } else { "lower" };
        pairing.push(format!("({m},{n})->{side}"));
    }
    out.push(PropertyResult::new(
        "centres_on_both_circles",
        worst_unit <= CIRCLE_TOL && worst_red <= CIRCLE_TOL,
        format!(
            "max ||v|-1| = {worst_unit:.2e}, max ||v+beta|-beta/delta| = {worst_red:.2e}; intersection used: {}",
            pairing.join(" ")
        ),
    ));

    // (c)
    let lhs = red_radius * red_radius + 1.0;
    let orth = (lhs - b * b).abs() / (b * b);
    out.push(PropertyResult::new(
        "circles_orthogonal",
        orth <= ORTHOGONALITY_TOL,
        format!("(beta/delta)^2 + 1 = {lhs:.15}, beta^2 = {:.15}, rel {orth:.2e}", b * b),
    ));

    // (d)
    let mut plus = Vec::new();
    let mut minus = Vec::new();
    for n in 0..GRID {
        for m in 0..GRID {
            if let NodeValue::Finite(v) = f.r(l.eighth_node(m, n))? {
                if (v - 1.0).norm() <= DEFAULT_TOL {
                    plus.push((m, n));
                }
                if (v + 1.0).norm() <= DEFAULT_TOL {
                    minus.push((m, n));
                }
            }
        }
    }
    let same = |found: &[(usize, usize)], want: &[(usize, usize)]| {
        let mut a = found.to_vec();
        let mut b = want.to_vec();
        a.sort();
        b.sort();
        a == b
    };
    out.push(PropertyResult::new(
        "unit_values_at_order_four_points",
        same(&plus, &PLUS_ONE_NODES) && same(&minus, &MINUS_ONE_NODES),
        format!("R = +1 at {plus:?}; R = -1 at {minus:?}"),
    ));

    // Inversion: reflecting z across Im z = omega2_im/2 (resp. Re z = ω1/2)
    // corresponds to inverting R(z) in the red (resp. blue) circle.
    let red_centre = Complex64::new(-b, 0.0);
    let origin = Complex64::new(0.0, 0.0);
    let mut worst_red_inv = 0.0f64;
    let mut worst_blue_inv = 0.0f64;
    for k in 1..4usize {
        for j in 1..16usize {
            let y = k as f64 * l.omega2_im / 8.0;
            let x = j as f64 * l.omega1 / 8.0;
            let z = Complex64::new(x, y);
            let (Some(w), Some(w_red), Some(w_blue)) = (
                f.r(z)?.finite(),
                f.r(Complex64::new(x, l.omega2_im - y))?.finite(),
                f.r(Complex64::new(l.omega1 - x, y))?.finite(),
            ) else {
                continue;
            };
            worst_red_inv = worst_red_inv.max(scaled_err(invert_in_circle(w, red_centre, red_radius), w_red));
            worst_blue_inv = worst_blue_inv.max(scaled_err(invert_in_circle(w, origin, 1.0), w_blue));
        }
    }
    out.push(PropertyResult::new(
        "red_circle_inverts_red_lines",
        worst_red_inv <= INVERSION_TOL,
        format!("line Im z = y maps to line Im z = omega2_im - y; max scaled mismatch {worst_red_inv:.2e}"),
    ));
    out.push(PropertyResult::new(
        "blue_circle_inverts_blue_lines",
        worst_blue_inv <= INVERSION_TOL,
        format!("line Re z = x maps to line Re z = omega1 - x; max scaled mismatch {worst_blue_inv:.2e}"),
    ));
    Ok(out)
}

/// Grid verification plus every geometric claim.
pub fn verify(beta: Beta, tol: f64) -> Result<VerificationReport> {
    let f = EssentialFunction::from_beta(beta)?;
    let mut report = verify_grid_with(&f, tol)?;
    report.property_results.extend(claims_with(&f)?);
    report.refresh_verdict();
    Ok(report)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepEntry {
    pub beta: f64,
    pub verdict: Verdict,
    pub max_rel_err: f64,
    /// `(R'/R)²/d` at the centre node (2,2).
    pub centre_ratio: f64,
    pub failures: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepReport {
    pub schema: u32,
    pub tol: f64,
    pub entries: Vec<SweepEntry>,
    /// Spread of the centre ratio across the sweep; should be 4 everywhere.
    pub ratio_spread: f64,
    pub verdict: Verdict,
}

/// `steps` values of β spaced evenly over `[beta_min, beta_max]`.
pub fn sweep_betas(beta_min: Beta, beta_max: Beta, steps: usize) -> Vec<f64> {
    let (lo, hi) = (beta_min.value(), beta_max.value());
    match steps {
        0 => Vec::new(),
        1 => vec![lo],
        _ => (0..steps)
            .map(|i| if i + 1 == steps { hi } else { lo + (hi - lo) * i as f64 / (steps - 1) as f64 })
            .collect(),
    }
}

pub fn sweep(betas: &[f64], tol: f64) -> Result<SweepReport> {
    let mut entries = Vec::with_capacity(betas.len());
    for &b in betas {
        let beta = Beta::new(b)?;
        let report = verify(beta, tol)?;
        let f = EssentialFunction::from_beta(beta)?;
        let centre = f.log_deriv_sq(f.lattice().eighth_node(2, 2))?;
        entries.push(SweepEntry {
            beta: b,
            verdict: report.verdict,
            max_rel_err: report.max_rel_err(),
            centre_ratio: centre.re / f.params().d,
            failures: report.failures(),
        });
    }
    let ratios = entries.iter().map(|e| e.centre_ratio);
    let spread = ratios.clone().fold(f64::NEG_INFINITY, f64::max) - ratios.fold(f64::INFINITY, f64::min);
    let spread = if entries.is_empty() { 0.0 } else { spread };
    let ok = entries.iter().all(|e| e.verdict.is_pass()) && spread <= 4.0 * LOG_DERIV_TOL;
    Ok(SweepReport { schema: 1, tol, entries, ratio_spread: spread, verdict: Verdict::from_bool(ok) })
}

/// Convenience used by the CLI and benches: lattice for a β.
pub fn lattice_for(beta: Beta) -> Result<(CurveParams, Lattice)> {
    let p = CurveParams::new(beta);
    let l = compute_lattice(&p)?;
    Ok((p, l))
}
