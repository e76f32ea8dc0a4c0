//! Command-line front end for `eighth-core`.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or domain error.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use eighth_core::closed_forms::{build_catalog, table_from_catalog};
use eighth_core::verify::DEFAULT_TOL;
use eighth_core::{
    compute_lattice, render_figure, sweep, sweep_betas, verify, Beta, Complex64, CurveParams,
    EssentialFunction, FigureConfig, NodeValue,
};
use serde::Serialize;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const SCHEMA: u32 = 1;

#[derive(Debug, Parser)]
#[command(name = "eighth", version, about = "Values of R = wp - alpha at the eighth-period points")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Derived constants, half-periods and radicals for one beta.
    Params(BetaArgs),
    /// The 9x9 table of closed-form node values.
    Grid {
        #[command(flatten)]
        common: BetaArgs,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// wp, wp' and R at one point.
    Eval {
        #[command(flatten)]
        common: BetaArgs,
        /// Complex point written as "a+bi".
        #[arg(long, allow_hyphen_values = true)]
        z: String,
    },
    /// Check every table entry and geometric property.
    Verify {
        #[command(flatten)]
        common: BetaArgs,
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
    },
    /// Verify over an evenly spaced range of beta.
    Sweep {
        #[arg(long)]
        beta_min: f64,
        #[arg(long)]
        beta_max: f64,
        #[arg(long, default_value_t = 10)]
        steps: usize,
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Render the coordinate-line picture as SVG.
    Figure {
        /// Defaults to (3+sqrt 5)/2.
        #[arg(long)]
        beta: Option<f64>,
        #[arg(long, default_value_t = 16)]
        lines: usize,
        #[arg(long, default_value_t = 512)]
        samples: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Args)]
pub struct BetaArgs {
    #[arg(long)]
    pub beta: f64,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Domain(eighth_core::Error),
    Io(std::io::Error),
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "{m}"),
            CliError::Domain(e) => write!(f, "{e}"),
            CliError::Io(e) => write!(f, "i/o error: {e}"),
        }
    }
}

impl From<eighth_core::Error> for CliError {
    fn from(e: eighth_core::Error) -> Self {
        CliError::Domain(e)
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e)
    }
}

/// Parses `a+bi`, `a-bi`, `a`, `bi` with optional whitespace. Decimal
/// digits, `.`, signs and `i` only; no exponents, no doubled signs.
pub fn parse_complex(text: &str) -> Result<Complex64, CliError> {
    let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let bad = || CliError::Usage(format!("malformed complex literal {text:?}, expected a+bi"));
    if s.is_empty() || !s.chars().all(|c| c.is_ascii_digit() || matches!(c, '.' | '+' | '-' | 'i')) {
        return Err(bad());
    }
    let bytes = s.as_bytes();
    let sign = |b: u8| b == b'+' || b == b'-';
    if bytes.windows(2).any(|w| sign(w[0]) && sign(w[1])) || s.ends_with(['+', '-']) {
        return Err(bad());
    }
    if s.matches('i').count() > 1 || (s.contains('i') && !s.ends_with('i')) {
        return Err(bad());
    }
    s.parse::<Complex64>().map_err(|_| bad())
}

fn beta_of(value: f64) -> Result<Beta, CliError> {
    let beta = Beta::new(value)?;
    if beta.is_near_one() {
        eprintln!("warning: beta = {value} is within 1e-6 of 1; order-8 radicals lose precision");
    }
    Ok(beta)
}

fn emit(out: &Option<PathBuf>, text: &str) -> Result<(), CliError> {
    match out {
        Some(path) => fs::write(path, text)?,
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(text.as_bytes())?;
            stdout.flush()?;
        }
    }
    Ok(())
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report types serialize");
    s.push('\n');
    s
}

#[derive(Serialize)]
struct ParamsOutput<'a> {
    schema: u32,
    beta: f64,
    params: &'a CurveParams,
    lattice: &'a eighth_core::Lattice,
    radicals: &'a eighth_core::RadicalCatalog,
}

#[derive(Serialize)]
struct GridRow<'a> {
    m: usize,
    n: usize,
    symbol: String,
    value: &'a NodeValue,
}

#[derive(Serialize)]
struct GridOutput<'a> {
    schema: u32,
    beta: f64,
    entries: Vec<GridRow<'a>>,
}

#[derive(Serialize)]
struct EvalOutput {
    schema: u32,
    beta: f64,
    z: NodeValue,
    wp: NodeValue,
    wp_prime: NodeValue,
    r: NodeValue,
}

fn grid_csv(table: &eighth_core::ClosedFormTable) -> String {
    let mut s = String::from("m,n,symbol,kind,re,im\n");
    for (m, n, e) in table.iter() {
        let symbol = e.symbol.to_string();
        match e.value {
            NodeValue::Pole => s.push_str(&format!("{m},{n},{symbol},pole,,\n")),
            NodeValue::Finite(v) => s.push_str(&format!("{m},{n},{symbol},finite,{},{}\n", v.re, v.im)),
        }
    }
    s
}

/// Runs one command, returning the exit code.
pub fn execute(cli: Cli) -> Result<i32, CliError> {
    match cli.command {
        Command::Params(a) => {
            let p = CurveParams::new(beta_of(a.beta)?);
            let l = compute_lattice(&p)?;
            let c = build_catalog(&p)?;
            let out = ParamsOutput { schema: SCHEMA, beta: p.beta, params: &p, lattice: &l, radicals: &c };
            emit(&a.out, &to_json(&out))?;
            Ok(EXIT_OK)
        }
        Command::Grid { common, format } => {
            let p = CurveParams::new(beta_of(common.beta)?);
            let table = table_from_catalog(&build_catalog(&p)?);
            let text = match format {
                Format::Csv => grid_csv(&table),
                Format::Json => {
                    let entries = table
                        .iter()
                        .map(|(m, n, e)| GridRow { m, n, symbol: e.symbol.to_string(), value: &e.value })
                        .collect();
                    to_json(&GridOutput { schema: SCHEMA, beta: p.beta, entries })
                }
            };
            emit(&common.out, &text)?;
            Ok(EXIT_OK)
        }
        Command::Eval { common, z } => {
            let beta = beta_of(common.beta)?;
            let z = parse_complex(&z)?;
            let f = EssentialFunction::from_beta(beta)?;
            let out = EvalOutput {
                schema: SCHEMA,
                beta: beta.value(),
                z: NodeValue::Finite(z),
                wp: f.wp(z)?,
                wp_prime: f.wp_prime(z)?,
                r: f.r(z)?,
            };
            emit(&common.out, &to_json(&out))?;
            Ok(EXIT_OK)
        }
        Command::Verify { common, tol } => {
            check_tol(tol)?;
            let report = verify(beta_of(common.beta)?, tol)?;
            emit(&common.out, &to_json(&report))?;
            Ok(if report.verdict.is_pass() { EXIT_OK } else { EXIT_FAIL })
        }
        Command::Sweep { beta_min, beta_max, steps, tol, out } => {
            check_tol(tol)?;
            let (lo, hi) = (beta_of(beta_min)?, beta_of(beta_max)?);
            if lo.value() > hi.value() {
                return Err(CliError::Usage("--beta-min must not exceed --beta-max".into()));
            }
            if steps == 0 {
                return Err(CliError::Usage("--steps must be at least 1".into()));
            }
            let report = sweep(&sweep_betas(lo, hi, steps), tol)?;
            emit(&out, &to_json(&report))?;
            Ok(if report.verdict.is_pass() { EXIT_OK } else { EXIT_FAIL })
        }
        Command::Figure { beta, lines, samples, out } => {
            let beta = match beta {
                Some(b) => beta_of(b)?,
                None => Beta::golden_square(),
            };
            let cfg = FigureConfig {
                lines_per_axis: lines,
                samples_per_line: samples,
                ..FigureConfig::for_beta(beta)
            };
            emit(&out, &render_figure(&cfg)?)?;
            Ok(EXIT_OK)
        }
    }
}

fn check_tol(tol: f64) -> Result<(), CliError> {
    if tol.is_finite() && tol > 0.0 {
        Ok(())
    } else {
        Err(CliError::Usage(format!("--tol must be positive, got {tol}")))
    }
}

pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    match execute(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_USAGE
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complex_literals() {
        let ok =
            |s: &str, re: f64, im: f64| assert_eq!(parse_complex(s).unwrap(), Complex64::new(re, im), "{s}");
        ok("1+2i", 1.0, 2.0);
        ok(" 0.5 - 0.25 i ", 0.5, -0.25);
        ok("-3", -3.0, 0.0);
        ok("2i", 0.0, 2.0);
        ok("-i", 0.0, -1.0);
        ok("1+i", 1.0, 1.0);
        for bad in ["", "1+2j", "1e3", "1++2i", "i2", "1+2i+3i", "nan", "1+", "1.2.3", "inf"] {
            assert!(parse_complex(bad).is_err(), "{bad:?} accepted");
        }
    }

    #[test]
    fn exit_codes() {
        assert_eq!(run(["eighth", "params", "--beta", "1.0"]), EXIT_USAGE);
        assert_eq!(run(["eighth", "params"]), EXIT_USAGE);
        assert_eq!(run(["eighth", "bogus"]), EXIT_USAGE);
        assert_eq!(run(["eighth", "eval", "--beta", "3", "--z", "1+2j"]), EXIT_USAGE);
        assert_eq!(run(["eighth", "verify", "--beta", "3", "--tol", "-1"]), EXIT_USAGE);
        assert_eq!(run(["eighth", "sweep", "--beta-min", "3", "--beta-max", "2"]), EXIT_USAGE);
        assert_eq!(run(["eighth", "figure", "--lines", "1"]), EXIT_USAGE);
    }

    #[test]
    fn csv_layout() {
        let p = CurveParams::new(Beta::new(3.0).unwrap());
        let csv = grid_csv(&table_from_catalog(&build_catalog(&p).unwrap()));
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines[0], "m,n,symbol,kind,re,im");
        assert_eq!(lines.len(), 82);
        assert_eq!(lines[1], "0,0,inf,pole,,");
        assert!(lines.iter().skip(1).all(|l| l.split(',').count() == 6));
    }
}
