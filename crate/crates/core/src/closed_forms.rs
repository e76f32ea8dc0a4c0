//! Closed-form radical values of `R_β` at the nodes of `Λ/8`.
//!
//! Node `(m, n)` is the point `(m·ω1 + n·ω2)/4` with `m, n ∈ 0..=8`; row
//! `n = 0` is the real axis. Rows 5..=8 are conjugate mirrors of rows 3..=0.

use std::fmt;

use num_complex::Complex64;
use serde::ser::{Serialize, SerializeStruct, Serializer};

use crate::error::{Error, Result};
use crate::params::{Beta, CurveParams};
use crate::weierstrass::NodeValue;

pub const GRID: usize = 9;

/// Width of the band below zero that is treated as rounding noise in the
/// order-8 radicand.
pub const RADICAND_CLAMP: f64 = 1e-12;

/// The ascending sequence `1 − √(x+1) < 1 − √(1+1/x) < 1 + √(1+1/x) < 1 + √(x+1)`.
pub fn ascending_sequence(x: f64) -> Result<[f64; 4]> {
    if !(x.is_finite() && x > 1.0) {
        return Err(Error::InvalidBeta(x));
    }
    let outer = (x + 1.0).sqrt();
    let inner = (1.0 + 1.0 / x).sqrt();
    Ok([1.0 - outer, 1.0 - inner, 1.0 + inner, 1.0 + outer])
}

/// Real root of `x³ − x² − x − 1` by Cardano's formula.
pub fn tribonacci_b() -> f64 {
    let r = 3.0 * 33f64.sqrt();
    (1.0 + (19.0 - r).cbrt() + (19.0 + r).cbrt()) / 3.0
}

/// `+1` for `x ≥ 0`, `−1` otherwise.
pub fn sgn(x: f64) -> f64 {
    if x < 0.0 {
        -1.0
    } else {
        1.0
    }
}

/// `β/√(β−1) − 1/√(β+1) − √2`. Non-negative for `β > 1` with a double
/// root at the tribonacci constant.
pub fn order8_radicand(beta: f64) -> f64 {
    beta / (beta - 1.0).sqrt() - 1.0 / (beta + 1.0).sqrt() - std::f64::consts::SQRT_2
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Gamma4 {
    G41,
    G42,
    G43,
    G44,
}

impl Gamma4 {
    pub const ALL: [Gamma4; 4] = [Gamma4::G41, Gamma4::G42, Gamma4::G43, Gamma4::G44];

    pub fn index(self) -> u8 {
        match self {
            Gamma4::G41 => 41,
            Gamma4::G42 => 42,
            Gamma4::G43 => 43,
            Gamma4::G44 => 44,
        }
    }
}

impl TryFrom<u8> for Gamma4 {
    type Error = Error;

    fn try_from(which: u8) -> Result<Self> {
        match which {
            41 => Ok(Gamma4::G41),
            42 => Ok(Gamma4::G42),
            43 => Ok(Gamma4::G43),
            44 => Ok(Gamma4::G44),
            _ => Err(Error::InvalidConfig(format!("no gamma_{which}; expected 41..=44"))),
        }
    }
}

/// Radicals shared by the four order-8 values, each computed once.
#[derive(Debug, Clone, Copy)]
struct Order8Radicals {
    one_minus_inv: f64,
    sqrt_one_minus_inv_sq: f64,
    half_sqrt: f64,
    k_plus: f64,
    k_minus: f64,
    p1: f64,
    p2: f64,
    p3: f64,
    p4: f64,
    sign: f64,
}

impl Order8Radicals {
    fn new(beta: f64) -> Result<Self> {
        Beta::new(beta)?;
        let sqrt2 = std::f64::consts::SQRT_2;
        let q = (beta + 1.0).sqrt();
        let root_m1 = (beta - 1.0).sqrt();
        if root_m1 == 0.0 {
            return Err(Error::Degenerate(beta));
        }
        let t = beta / root_m1;
        let u = 1.0 / q;
        let mut f = t - u - sqrt2;
        if f < 0.0 {
            if f < -RADICAND_CLAMP {
                return Err(Error::NegativeRadicand { beta, value: f });
            }
            f = 0.0;
        }
        let r = Order8Radicals {
            one_minus_inv: 1.0 - 1.0 / beta,
            sqrt_one_minus_inv_sq: (1.0 - 1.0 / (beta * beta)).sqrt(),
            half_sqrt: ((beta + 1.0) / 2.0).sqrt(),
            k_plus: q * (q + sqrt2).sqrt() / beta,
            k_minus: q * (q - sqrt2).sqrt() / beta,
            p1: (t - u + sqrt2).sqrt(),
            p2: (t + u - sqrt2).sqrt(),
            p3: f.sqrt(),
            p4: (t + u + sqrt2).sqrt(),
            sign: sgn(beta - tribonacci_b()),
        };
        if !r.p4.is_finite() || !r.p1.is_finite() {
            return Err(Error::Degenerate(beta));
        }
        Ok(r)
    }

    fn gamma(&self, which: Gamma4) -> Complex64 {
        let a = self.one_minus_inv;
        let c = self.sqrt_one_minus_inv_sq;
        let one = Complex64::new(1.0, 0.0);
        match which {
            Gamma4::G41 => {
                let inner = Complex64::new(a + self.k_plus * self.p1, -c - self.k_plus * self.p2);
                (1.0 - self.half_sqrt) * inner - one
            }
            Gamma4::G42 => {
                let inner = Complex64::new(a - self.k_plus * self.p1, c - self.k_plus * self.p2);
                (1.0 - self.half_sqrt) * inner - one
            }
            Gamma4::G43 => {
                let x = self.sign * self.p3;
                let inner = Complex64::new(a - self.k_minus * x, -c + self.k_minus * self.p4);
                (self.half_sqrt + 1.0) * inner - one
            }
            Gamma4::G44 => {
                let x = self.sign * self.p3;
                let inner = Complex64::new(a + self.k_minus * x, c + self.k_minus * self.p4);
                (self.half_sqrt + 1.0) * inner - one
            }
        }
    }
}

pub fn gamma4(params: &CurveParams, which: Gamma4) -> Result<Complex64> {
    Ok(Order8Radicals::new(params.beta)?.gamma(which))
}

/// Every radical constant used by the Λ/8 table.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct RadicalCatalog {
    pub beta: f64,
    pub d: f64,
    pub delta: f64,
    /// `γ⁻ = 1 − 1/δ`
    pub gamma_minus_r: f64,
    /// `γ⁺ = 1 + 1/δ`
    pub gamma_plus_r: f64,
    /// `γ = 1 − iβ/δ`
    #[serde(serialize_with = "ser_complex")]
    pub gamma: Complex64,
    pub beta_seq: [f64; 4],
    pub delta_seq: [f64; 4],
    pub gamma02: f64,
    pub gamma13: f64,
    pub gamma01: f64,
    pub gamma23: f64,
    /// `(β⁻, β⁺) = 1 ∓ √(1 − 1/β)`
    pub beta_pm: [f64; 2],
    /// `(δ⁻, δ⁺) = 1 ∓ (√(1+1/β) − √(1−1/β))/√2`
    pub delta_pm: [f64; 2],
    /// `γ₀ = 1 − i√(β−1)`
    #[serde(serialize_with = "ser_complex")]
    pub gamma0: Complex64,
    /// `γ₋ = 1 − δ⁻(1 + i√(δ−1))/δ`
    #[serde(serialize_with = "ser_complex")]
    pub gamma_lo: Complex64,
    /// `γ₊ = 1 − δ⁺(1 + i√(δ−1))/δ`
    #[serde(serialize_with = "ser_complex")]
    pub gamma_hi: Complex64,
    #[serde(serialize_with = "ser_complex")]
    pub gamma41: Complex64,
    #[serde(serialize_with = "ser_complex")]
    pub gamma42: Complex64,
    #[serde(serialize_with = "ser_complex")]
    pub gamma43: Complex64,
    #[serde(serialize_with = "ser_complex")]
    pub gamma44: Complex64,
    pub b_const: f64,
}

fn ser_complex<S: Serializer>(v: &Complex64, s: S) -> std::result::Result<S::Ok, S::Error> {
    NodeValue::Finite(*v).serialize(s)
}

pub fn build_catalog(params: &CurveParams) -> Result<RadicalCatalog> {
    let beta = params.beta;
    let radicals = Order8Radicals::new(beta)?;
    let delta = params.delta;
    let beta_seq = ascending_sequence(beta)?;
    let delta_seq = ascending_sequence(delta)?;
    let [d0, d1, d2, d3] = delta_seq;
    let pair = |a: f64, b: f64| 1.0 + a * b / delta;
    let s_minus = (1.0 - 1.0 / beta).sqrt();
    let s_plus = (1.0 + 1.0 / beta).sqrt();
    let spread = (s_plus - s_minus) / std::f64::consts::SQRT_2;
    let delta_pm = [1.0 - spread, 1.0 + spread];
    let tilt = Complex64::new(1.0, (delta - 1.0).sqrt());
    let sub = |dpm: f64| Complex64::new(1.0, 0.0) - dpm * tilt / delta;

    let catalog = RadicalCatalog {
        beta,
        d: params.d,
        delta,
        gamma_minus_r: 1.0 - 1.0 / delta,
        gamma_plus_r: 1.0 + 1.0 / delta,
        gamma: Complex64::new(1.0, -beta / delta),
        beta_seq,
        delta_seq,
        gamma02: pair(d0, d2),
        gamma13: pair(d1, d3),
        gamma01: pair(d0, d1),
        gamma23: pair(d2, d3),
        beta_pm: [1.0 - s_minus, 1.0 + s_minus],
        delta_pm,
        gamma0: Complex64::new(1.0, -(beta - 1.0).sqrt()),
        gamma_lo: sub(delta_pm[0]),
        gamma_hi: sub(delta_pm[1]),
        gamma41: radicals.gamma(Gamma4::G41),
        gamma42: radicals.gamma(Gamma4::G42),
        gamma43: radicals.gamma(Gamma4::G43),
        gamma44: radicals.gamma(Gamma4::G44),
        b_const: tribonacci_b(),
    };
    catalog.check_finite()?;
    Ok(catalog)
}

impl RadicalCatalog {
    fn check_finite(&self) -> Result<()> {
        let reals = [self.gamma_minus_r, self.gamma_plus_r, self.gamma02, self.gamma13]
            .into_iter()
            .chain([self.gamma01, self.gamma23])
            .chain(self.beta_seq)
            .chain(self.delta_seq)
            .chain(self.beta_pm)
            .chain(self.delta_pm);
        let complexes = [
            self.gamma,
            self.gamma0,
            self.gamma_lo,
            self.gamma_hi,
            self.gamma41,
            self.gamma42,
            self.gamma43,
            self.gamma44,
        ];
        let ok = reals.into_iter().all(f64::is_finite)
            && complexes.iter().all(|z| z.re.is_finite() && z.im.is_finite());
        if ok {
            Ok(())
        } else {
            Err(Error::Degenerate(self.beta))
        }
    }

    pub fn gamma4(&self, which: Gamma4) -> Complex64 {
        match which {
            Gamma4::G41 => self.gamma41,
            Gamma4::G42 => self.gamma42,
            Gamma4::G43 => self.gamma43,
            Gamma4::G44 => self.gamma44,
        }
    }

    /// Every strict ordering the definitions promise, as `(name, holds)`.
    pub fn ordering_checks(&self) -> Vec<(&'static str, bool)> {
        let ascending = |v: &[f64]| v.windows(2).all(|w| w[0] < w[1]);
        vec![
            ("gamma^- < gamma^+", self.gamma_minus_r < self.gamma_plus_r),
            ("beta_0 < beta_1 < beta_2 < beta_3", ascending(&self.beta_seq)),
            ("delta_0 < delta_1 < delta_2 < delta_3", ascending(&self.delta_seq)),
            (
                "gamma_02 < gamma_13 < gamma_01 < gamma_23",
                ascending(&[self.gamma02, self.gamma13, self.gamma01, self.gamma23]),
            ),
            ("beta^- < beta^+", self.beta_pm[0] < self.beta_pm[1]),
            ("delta^- < delta^+", self.delta_pm[0] < self.delta_pm[1]),
        ]
    }
}

/// The base expressions appearing in the Λ/8 table.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Formula {
    Pole,
    Zero,
    One,
    MinusOne,
    NegBeta,
    NegInvBeta,
    /// `β_i·β_j`
    BetaProduct(u8, u8),
    /// `−β·γ⁺`
    NegBetaGammaPlusR,
    /// `−β·γ⁻`
    NegBetaGammaMinusR,
    /// `−γ/β`
    NegGammaOverBeta,
    /// `−β·γ_jk`
    NegBetaGammaPair(u8, u8),
    /// `−β·γ₊`
    NegBetaGammaHi,
    /// `−β·γ₋`
    NegBetaGammaLo,
    /// `−β⁺·γ₀`
    NegBetaPlusGamma0,
    /// `−β⁻·γ₀`
    NegBetaMinusGamma0,
    Gamma4(Gamma4),
}

impl Formula {
    pub fn is_real(self) -> bool {
        use Formula::*;
        matches!(
            self,
            Pole | Zero
                | One
                | MinusOne
                | NegBeta
                | NegInvBeta
                | BetaProduct(..)
                | NegBetaGammaPlusR
                | NegBetaGammaMinusR
                | NegBetaGammaPair(..)
        )
    }

    pub fn evaluate(self, c: &RadicalCatalog) -> NodeValue {
        use Formula::*;
        let b = c.beta;
        let real = |x: f64| NodeValue::Finite(Complex64::new(x, 0.0));
        let pair = |j: u8, k: u8| match (j, k) {
            (0, 2) => c.gamma02,
            (1, 3) => c.gamma13,
            (0, 1) => c.gamma01,
            (2, 3) => c.gamma23,
            _ => unreachable!("no gamma_{j}{k}"),
        };
        match self {
            Pole => NodeValue::Pole,
            Zero => real(0.0),
            One => real(1.0),
            MinusOne => real(-1.0),
            NegBeta => real(-b),
            NegInvBeta => real(-1.0 / b),
            BetaProduct(i, j) => real(c.beta_seq[i as usize] * c.beta_seq[j as usize]),
            NegBetaGammaPlusR => real(-b * c.gamma_plus_r),
            NegBetaGammaMinusR => real(-b * c.gamma_minus_r),
            NegGammaOverBeta => NodeValue::Finite(-c.gamma / b),
            NegBetaGammaPair(j, k) => real(-b * pair(j, k)),
            NegBetaGammaHi => NodeValue::Finite(-b * c.gamma_hi),
            NegBetaGammaLo => NodeValue::Finite(-b * c.gamma_lo),
            NegBetaPlusGamma0 => NodeValue::Finite(-c.beta_pm[1] * c.gamma0),
            NegBetaMinusGamma0 => NodeValue::Finite(-c.beta_pm[0] * c.gamma0),
            Gamma4(g) => NodeValue::Finite(c.gamma4(g)),
        }
    }

    fn write(self, f: &mut fmt::Formatter<'_>, conj: bool) -> fmt::Result {
        use Formula::*;
        let wrap = |s: &str| if conj { format!("conj({s})") } else { s.to_string() };
        match self {
            Pole => write!(f, "inf"),
            Zero => write!(f, "0"),
            One => write!(f, "1"),
            MinusOne => write!(f, "-1"),
            NegBeta => write!(f, "-beta"),
            NegInvBeta => write!(f, "-1/beta"),
            BetaProduct(i, j) => write!(f, "beta_{i}*beta_{j}"),
            NegBetaGammaPlusR => write!(f, "-beta*gamma^+"),
            NegBetaGammaMinusR => write!(f, "-beta*gamma^-"),
            NegGammaOverBeta => write!(f, "-{}/beta", wrap("gamma")),
            NegBetaGammaPair(j, k) => write!(f, "-beta*gamma_{j}{k}"),
            NegBetaGammaHi => write!(f, "-beta*{}", wrap("gamma_+")),
            NegBetaGammaLo => write!(f, "-beta*{}", wrap("gamma_-")),
            NegBetaPlusGamma0 => write!(f, "-beta^+*{}", wrap("gamma_0")),
            NegBetaMinusGamma0 => write!(f, "-beta^-*{}", wrap("gamma_0")),
            Gamma4(g) => write!(f, "{}", wrap(&format!("gamma_{}", g.index()))),
        }
    }
}

/// A table entry's symbolic identity: a base formula, possibly conjugated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Symbol {
    pub formula: Formula,
    pub conj: bool,
}

impl Symbol {
    fn plain(formula: Formula) -> Self {
        Symbol { formula, conj: false }
    }

    fn conj_of(formula: Formula) -> Self {
        Symbol { formula, conj: !formula.is_real() }
    }

    pub fn conjugated(self) -> Self {
        Symbol { formula: self.formula, conj: !self.conj && !self.formula.is_real() }
    }

    pub fn evaluate(self, c: &RadicalCatalog) -> NodeValue {
        let v = self.formula.evaluate(c);
        if self.conj {
            v.conj()
        } else {
            v
        }
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.formula.write(f, self.conj)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TableEntry {
    pub symbol: Symbol,
    pub value: NodeValue,
}

/// Rows `n = 0..=4` of the Λ/8 table, columns `m = 0..=8`.
fn lower_half_symbols() -> [[Symbol; GRID]; 5] {
    use Formula::*;
    let p = Symbol::plain;
    let c = Symbol::conj_of;
    let g4 = |g| Gamma4(g);
    [
        [
            p(Pole),
            p(BetaProduct(2, 3)),
            p(One),
            p(BetaProduct(0, 1)),
            p(Zero),
            p(BetaProduct(0, 1)),
            p(One),
            p(BetaProduct(2, 3)),
            p(Pole),
        ],
        [
            p(NegBetaGammaPair(2, 3)),
            c(g4(self::Gamma4::G44)),
            c(NegBetaGammaHi),
            c(g4(self::Gamma4::G43)),
            p(NegBetaGammaPair(0, 2)),
            p(g4(self::Gamma4::G43)),
            p(NegBetaGammaHi),
            p(g4(self::Gamma4::G44)),
            p(NegBetaGammaPair(2, 3)),
        ],
        [
            p(NegBetaGammaPlusR),
            c(NegBetaPlusGamma0),
            c(NegGammaOverBeta),
            c(NegBetaMinusGamma0),
            p(NegBetaGammaMinusR),
            p(NegBetaMinusGamma0),
            p(NegGammaOverBeta),
            p(NegBetaPlusGamma0),
            p(NegBetaGammaPlusR),
        ],
        [
            p(NegBetaGammaPair(0, 1)),
            c(g4(self::Gamma4::G41)),
            c(NegBetaGammaLo),
            c(g4(self::Gamma4::G42)),
            p(NegBetaGammaPair(1, 3)),
            p(g4(self::Gamma4::G42)),
            p(NegBetaGammaLo),
            p(g4(self::Gamma4::G41)),
            p(NegBetaGammaPair(0, 1)),
        ],
        [
            p(NegBeta),
            p(BetaProduct(0, 2)),
            p(MinusOne),
            p(BetaProduct(1, 3)),
            p(NegInvBeta),
            p(BetaProduct(1, 3)),
            p(MinusOne),
            p(BetaProduct(0, 2)),
            p(NegBeta),
        ],
    ]
}

/// Symbolic layout of the full 9×9 table, indexed `[n][m]`.
pub fn table_symbols() -> [[Symbol; GRID]; GRID] {
    let lower = lower_half_symbols();
    std::array::from_fn(|n| if n <= 4 { lower[n] } else { lower[8 - n].map(Symbol::conjugated) })
}

#[derive(Debug, Clone, PartialEq)]
pub struct ClosedFormTable {
    pub beta: f64,
    /// Indexed `[n][m]`: row `n`, column `m`.
    pub entries: [[TableEntry; GRID]; GRID],
}

impl ClosedFormTable {
    pub fn get(&self, m: usize, n: usize) -> &TableEntry {
        &self.entries[n][m]
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, usize, &TableEntry)> {
        self.entries
            .iter()
            .enumerate()
            .flat_map(|(n, row)| row.iter().enumerate().map(move |(m, e)| (m, n, e)))
    }
}

impl Serialize for TableEntry {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("TableEntry", 2)?;
        s.serialize_field("symbol", &self.symbol.to_string())?;
        s.serialize_field("value", &self.value)?;
        s.end()
    }
}

pub fn table_from_catalog(catalog: &RadicalCatalog) -> ClosedFormTable {
    let symbols = table_symbols();
    let entries = symbols.map(|row| row.map(|symbol| TableEntry { symbol, value: symbol.evaluate(catalog) }));
    ClosedFormTable { beta: catalog.beta, entries }
}

pub fn grid_table(params: &CurveParams) -> Result<ClosedFormTable> {
    Ok(table_from_catalog(&build_catalog(params)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::params::derive_params;
    use proptest::prelude::*;

    // 30-digit reference root of x³ − x² − x − 1
    const B_ROOT: f64 = 1.839_286_755_214_161_132_551_852_564_65;

    fn params(b: f64) -> CurveParams {
        derive_params(Beta::new(b).unwrap())
    }

    fn bisect_tribonacci() -> f64 {
        let (mut lo, mut hi) = (1.0f64, 2.0f64);
        let f = |x: f64| x * x * x - x * x - x - 1.0;
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if mid == lo || mid == hi {
                break;
            }
            if f(mid) < 0.0 {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        0.5 * (lo + hi)
    }

    #[test]
    fn tribonacci_constant() {
        let b = tribonacci_b();
        assert!((b - B_ROOT).abs() <= 1e-15);
        assert!((b * b * b - b * b - b - 1.0).abs() <= 1e-14);
        assert!((b - bisect_tribonacci()).abs() <= 1e-15);
    }

    #[test]
    fn sequence_at_three() {
        let s = ascending_sequence(3.0).unwrap();
        let r = 2.0 / 3f64.sqrt();
        assert_eq!(s[0], -1.0);
        assert!((s[1] - (1.0 - r)).abs() < 1e-15);
        assert!((s[2] - (1.0 + r)).abs() < 1e-15);
        assert_eq!(s[3], 3.0);
        assert!((s[0] * s[3] + 3.0).abs() < 1e-15);
        assert!(ascending_sequence(1.0).is_err());
        assert!(ascending_sequence(0.2).is_err());
    }

    #[test]
    fn catalog_at_three() {
        let c = build_catalog(&params(3.0)).unwrap();
        let r8 = 2.0 * 2f64.sqrt();
        assert!((c.gamma_plus_r - (1.0 + r8 / 3.0)).abs() < 1e-15);
        assert!((c.gamma_plus_r - 1.942_809_041_582_063_4).abs() < 1e-15);
        assert!((c.gamma - Complex64::new(1.0, -r8)).norm() < 1e-15);
        assert!((c.gamma.norm() - 3.0).abs() < 1e-15);
        assert!((c.beta_pm[0] - (1.0 - (2.0f64 / 3.0).sqrt())).abs() < 1e-15);
        assert!((c.beta_pm[0] - 0.183_503_419_072_274_4).abs() < 1e-15);
    }

    #[test]
    fn row_four_at_three() {
        let t = grid_table(&params(3.0)).unwrap();
        let r = 2.0 / 3f64.sqrt();
        let s3 = 3f64.sqrt();
        let expected = [-3.0, -(1.0 + r), -1.0, 3.0 - 2.0 * s3, -1.0 / 3.0];
        let row: Vec<f64> = (0..GRID).map(|m| t.get(m, 4).value.finite().unwrap().re).collect();
        for m in 0..5 {
            assert!((row[m] - expected[m]).abs() < 1e-14, "m={m}: {} vs {}", row[m], expected[m]);
            assert!((row[m] - row[8 - m]).abs() == 0.0);
        }
        assert!(row[..5].windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn fixed_entries() {
        let t = grid_table(&params(2.0)).unwrap();
        let val = |m, n| t.get(m, n).value;
        assert_eq!(val(4, 4), NodeValue::Finite(Complex64::new(-0.5, 0.0)));
        assert_eq!(val(2, 0), NodeValue::Finite(Complex64::new(1.0, 0.0)));
        assert_eq!(val(2, 4), NodeValue::Finite(Complex64::new(-1.0, 0.0)));
        for (m, n) in [(0, 0), (8, 0), (0, 8), (8, 8)] {
            assert!(val(m, n).is_pole());
        }
        assert_eq!(t.get(1, 1).symbol.to_string(), "conj(gamma_44)");
        assert_eq!(t.get(7, 7).symbol.to_string(), "conj(gamma_44)");
        assert_eq!(t.get(1, 7).symbol.to_string(), "gamma_44");
        assert_eq!(t.get(2, 2).symbol.to_string(), "-conj(gamma)/beta");
        assert_eq!(t.get(6, 1).symbol.to_string(), "-beta*gamma_+");
        assert_eq!(t.get(4, 5).symbol.to_string(), "-beta*gamma_13");
    }

    #[test]
    fn table_mirror_symmetries() {
        for b in [1.2, 1.839_286_759_736_968_8, 3.0, 10.0] {
            let t = grid_table(&params(b)).unwrap();
            for (m, n, e) in t.iter() {
                let Some(v) = e.value.finite() else { continue };
                let vert = t.get(m, 8 - n).value.finite().unwrap();
                let horiz = t.get(8 - m, n).value.finite().unwrap();
                assert_eq!(vert, v.conj(), "({m},{n})");
                assert_eq!(horiz, v.conj(), "({m},{n})");
            }
            for m in 0..GRID {
                if let Some(v) = t.get(m, 4).value.finite() {
                    assert_eq!(v.im, 0.0);
                }
            }
            for n in [0, 4, 8] {
                for m in [0, 2, 4, 6, 8] {
                    if let Some(v) = t.get(m, n).value.finite() {
                        assert_eq!(v.im, 0.0, "({m},{n})");
                    }
                }
            }
        }
    }

    #[test]
    fn gamma4_conjugate_pairs_are_exact() {
        // γ42 is γ41 conjugated with the √(β+1)√(√(β+1)+√2)/β term negated;
        // likewise γ44 from γ43.
        for b in [1.1, 1.5, 1.839_286_759_736_968_8, 2.5, 7.0, 30.0] {
            let r = Order8Radicals::new(b).unwrap();
            let flipped = Order8Radicals { k_plus: -r.k_plus, k_minus: -r.k_minus, ..r };
            assert_eq!(r.gamma(Gamma4::G42), flipped.gamma(Gamma4::G41).conj());
            assert_eq!(r.gamma(Gamma4::G44), flipped.gamma(Gamma4::G43).conj());
        }
    }

    #[test]
    fn gamma4_selector() {
        let p = params(2.0);
        let c = build_catalog(&p).unwrap();
        for g in Gamma4::ALL {
            assert_eq!(gamma4(&p, g).unwrap(), c.gamma4(g));
            assert_eq!(Gamma4::try_from(g.index()).unwrap(), g);
        }
        assert!(Gamma4::try_from(45).is_err());
    }

    #[test]
    fn sign_convention_at_zero() {
        assert_eq!(sgn(0.0), 1.0);
        assert_eq!(sgn(-0.0), 1.0);
        assert_eq!(sgn(-1e-300), -1.0);
    }

    #[test]
    fn rejects_low_beta() {
        let p = CurveParams { beta: 1.0, ..params(2.0) };
        assert!(build_catalog(&p).is_err());
        assert!(gamma4(&p, Gamma4::G41).is_err());
    }

    #[test]
    fn gamma43_continuous_through_b() {
        let b = tribonacci_b();
        let lo = gamma4(&params(b - 1e-3), Gamma4::G43).unwrap();
        let at = gamma4(&params(b), Gamma4::G43).unwrap();
        let hi = gamma4(&params(b + 1e-3), Gamma4::G43).unwrap();
        // a jump would show as a large departure from the chord midpoint
        assert!((at - 0.5 * (lo + hi)).norm() < 1e-6);
        assert!((lo - hi).norm() < 1e-3);
    }

    #[test]
    fn radicand_has_double_root_at_b() {
        let b = tribonacci_b();
        assert!(order8_radicand(b).abs() < 1e-14);
        for k in 1..2000 {
            let beta = 1.0 + k as f64 * 0.02;
            assert!(order8_radicand(beta) >= -1e-12, "beta {beta}");
        }
    }

    proptest! {
        #[test]
        fn sequence_symmetric_about_one(x in 1.0001f64..100.0) {
            let s = ascending_sequence(x).unwrap();
            prop_assert!((s[0] + s[3] - 2.0).abs() < 1e-13);
            prop_assert!((s[1] + s[2] - 2.0).abs() < 1e-14);
            prop_assert!(s.windows(2).all(|w| w[0] < w[1]));
        }

        #[test]
        fn orderings_hold(b in 1.01f64..50.0) {
            let c = build_catalog(&params(b)).unwrap();
            for (name, ok) in c.ordering_checks() {
                prop_assert!(ok, "{} fails at beta {}", name, b);
            }
        }

        #[test]
        fn gamma_on_circles(b in 1.01f64..50.0) {
            let c = build_catalog(&params(b)).unwrap();
            prop_assert!((c.gamma.norm() - b).abs() <= 1e-12 * b);
            let centre = -c.gamma / b;
            prop_assert!((centre.norm() - 1.0).abs() <= 1e-12);
            let red = (centre + b).norm();
            prop_assert!((red - b / c.delta).abs() <= 1e-12 * (b / c.delta));
        }
    }
}
