//! SVG picture of the period rectangle under `R`: images of horizontal
//! lines in red, vertical lines in blue, with the two circles
//! `|w + β| = β/δ` and `|w| = 1`.

use std::fmt::Write as _;

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::params::Beta;
use crate::weierstrass::{EssentialFunction, NodeValue};

pub const SVG_SIZE: u32 = 800;
pub const MIN_LINES: usize = 2;
pub const MIN_SAMPLES: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Viewport {
    pub x_min: f64,
    pub x_max: f64,
    pub y_min: f64,
    pub y_max: f64,
}

impl Viewport {
    pub fn square(half_width: f64) -> Self {
        Viewport { x_min: -half_width, x_max: half_width, y_min: -half_width, y_max: half_width }
    }

    fn is_valid(&self) -> bool {
        [self.x_min, self.x_max, self.y_min, self.y_max].iter().all(|v| v.is_finite())
            && self.x_min < self.x_max
            && self.y_min < self.y_max
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct FigureConfig {
    pub beta: Beta,
    pub lines_per_axis: usize,
    /// Number of sampling intervals; each line gets `samples_per_line + 1` points.
    pub samples_per_line: usize,
    pub viewport: Viewport,
    pub clip_radius: f64,
}

impl FigureConfig {
    /// Defaults for a given β: 16 lines, 512 intervals, `[−2β, 2β]²`, clip at `4β`.
    pub fn for_beta(beta: Beta) -> Self {
        let b = beta.value();
        FigureConfig {
            beta,
            lines_per_axis: 16,
            samples_per_line: 512,
            viewport: Viewport::square(2.0 * b),
            clip_radius: 4.0 * b,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.lines_per_axis < MIN_LINES {
            return Err(Error::InvalidConfig(format!(
                "lines_per_axis must be at least {MIN_LINES}, got {}",
                self.lines_per_axis
            )));
        }
        if self.samples_per_line < MIN_SAMPLES {
            return Err(Error::InvalidConfig(format!(
                "samples_per_line must be at least {MIN_SAMPLES}, got {}",
                self.samples_per_line
            )));
        }
        if !self.viewport.is_valid() {
            return Err(Error::InvalidConfig("viewport is empty or not finite".into()));
        }
        if !(self.clip_radius.is_finite() && self.clip_radius > 0.0) {
            return Err(Error::InvalidConfig(format!(
                "clip_radius must be positive, got {}",
                self.clip_radius
            )));
        }
        Ok(())
    }
}

impl Default for FigureConfig {
    fn default() -> Self {
        Self::for_beta(Beta::golden_square())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum LineFamily {
    /// Images of `Im z = const`.
    Red,
    /// Images of `Re z = const`.
    Blue,
}

impl LineFamily {
    fn class(self) -> &'static str {
        match self {
            LineFamily::Red => "red-line",
            LineFamily::Blue => "blue-line",
        }
    }
}

/// Image of one coordinate line, split where it passes near a pole.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ImageCurve {
    pub family: LineFamily,
    pub index: usize,
    /// The fixed coordinate of the source line.
    pub offset: f64,
    pub segments: Vec<Vec<Complex64>>,
}

impl ImageCurve {
    pub fn points(&self) -> impl Iterator<Item = &Complex64> {
        self.segments.iter().flatten()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Circle {
    pub centre: Complex64,
    pub radius: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FigureData {
    pub config: FigureConfig,
    pub red: Vec<ImageCurve>,
    pub blue: Vec<ImageCurve>,
    pub red_circle: Circle,
    pub blue_circle: Circle,
}

impl FigureData {
    /// The two points where the circles cross, upper one first.
    pub fn intersections(&self) -> [Complex64; 2] {
        let b = self.config.beta.value();
        let x = -1.0 / b;
        let y = (1.0 - x * x).sqrt();
        [Complex64::new(x, y), Complex64::new(x, -y)]
    }
}

fn trace(
    f: &EssentialFunction,
    family: LineFamily,
    index: usize,
    offset: f64,
    point: impl Fn(usize) -> Complex64,
    cfg: &FigureConfig,
) -> Result<ImageCurve> {
    let mut segments = Vec::new();
    let mut current: Vec<Complex64> = Vec::new();
    for j in 0..=cfg.samples_per_line {
        match f.r(point(j))? {
            NodeValue::Finite(w) if w.norm() <= cfg.clip_radius => current.push(w),
            _ => {
                if current.len() >= 2 {
                    segments.push(std::mem::take(&mut current));
                } else {
                    current.clear();
                }
            }
        }
    }
    if current.len() >= 2 {
        segments.push(current);
    }
    Ok(ImageCurve { family, index, offset, segments })
}

pub fn figure_data(config: &FigureConfig) -> Result<FigureData> {
    config.validate()?;
    let f = EssentialFunction::from_beta(config.beta)?;
    let p = *f.params();
    let l = *f.lattice();
    let (w, h) = (2.0 * l.omega1, 2.0 * l.omega2_im);
    let lines = config.lines_per_axis;
    let s = config.samples_per_line as f64;

    let mut red = Vec::with_capacity(lines + 1);
    let mut blue = Vec::with_capacity(lines + 1);
    for k in 0..=lines {
        let y = k as f64 * h / lines as f64;
        red.push(trace(&f, LineFamily::Red, k, y, |j| Complex64::new(j as f64 * w / s, y), config)?);
        let x = k as f64 * w / lines as f64;
        blue.push(trace(&f, LineFamily::Blue, k, x, |j| Complex64::new(x, j as f64 * h / s), config)?);
    }
    Ok(FigureData {
        config: *config,
        red,
        blue,
        red_circle: Circle { centre: Complex64::new(-p.beta, 0.0), radius: p.red_radius() },
        blue_circle: Circle { centre: Complex64::new(0.0, 0.0), radius: 1.0 },
    })
}

/// Nine significant digits, shortest form, no negative zero.
pub fn format_number(v: f64) -> String {
    let rounded: f64 = format!("{v:.8e}").parse().expect("formatted float parses");
    let mag = rounded.abs();
    if rounded == 0.0 {
        "0".to_string()
    } else if !(1e-6..1e15).contains(&mag) {
        format!("{rounded:e}")
    } else {
        format!("{rounded}")
    }
}

pub fn render_svg(data: &FigureData) -> String {
    let vp = data.config.viewport;
    let (vw, vh) = (vp.x_max - vp.x_min, vp.y_max - vp.y_min);
    let stroke = format_number(1.5 * vw.max(vh) / SVG_SIZE as f64);
    let num = format_number;

    let mut out = String::new();
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{SVG_SIZE}\" height=\"{SVG_SIZE}\" viewBox=\"{} {} {} {}\">",
        num(vp.x_min),
        num(-vp.y_max),
        num(vw),
        num(vh)
    );
    let _ = writeln!(out, "<title>R for beta = {}</title>", num(data.config.beta.value()));
    let _ = writeln!(
        out,
        "<g transform=\"scale(1,-1)\" fill=\"none\" stroke-width=\"{stroke}\" stroke-linejoin=\"round\">"
    );
    for (curves, colour) in [(&data.red, "red"), (&data.blue, "blue")] {
        for c in curves.iter() {
            let _ = writeln!(
                out,
                "<g class=\"{}\" stroke=\"{colour}\" data-index=\"{}\">",
                c.family.class(),
                c.index
            );
            for seg in &c.segments {
                out.push_str("<polyline points=\"");
                for (i, w) in seg.iter().enumerate() {
                    if i > 0 {
                        out.push(' ');
                    }
                    let _ = write!(out, "{},{}", num(w.re), num(w.im));
                }
                out.push_str("\"/>\n");
            }
            out.push_str("</g>\n");
        }
    }
    for (c, colour, class) in
        [(data.red_circle, "red", "red-circle"), (data.blue_circle, "blue", "blue-circle")]
    {
        let _ = writeln!(
            out,
            "<circle class=\"{class}\" cx=\"{}\" cy=\"{}\" r=\"{}\" stroke=\"{colour}\" stroke-dasharray=\"{} {}\"/>",
            num(c.centre.re),
            num(c.centre.im),
            num(c.radius),
            stroke,
            stroke
        );
    }
    out.push_str("</g>\n</svg>\n");
    out
}

pub fn render_figure(config: &FigureConfig) -> Result<String> {
    Ok(render_svg(&figure_data(config)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small(b: f64) -> FigureConfig {
        FigureConfig { samples_per_line: 64, ..FigureConfig::for_beta(Beta::new(b).unwrap()) }
    }

    #[test]
    fn defaults() {
        let c = FigureConfig::default();
        let b = c.beta.value();
        assert!((b - 2.618_033_988_749_895).abs() < 1e-15);
        assert_eq!((c.lines_per_axis, c.samples_per_line), (16, 512));
        assert_eq!(c.viewport, Viewport::square(2.0 * b));
        assert_eq!(c.clip_radius, 4.0 * b);
        assert!(c.validate().is_ok());
    }

    #[test]
    fn rejects_bad_config() {
        let base = FigureConfig::default();
        assert!(FigureConfig { lines_per_axis: 1, ..base }.validate().is_err());
        assert!(FigureConfig { samples_per_line: 15, ..base }.validate().is_err());
        let flat = Viewport { y_max: -base.viewport.y_max, ..base.viewport };
        assert!(FigureConfig { viewport: flat, ..base }.validate().is_err());
        assert!(FigureConfig { clip_radius: f64::NAN, ..base }.validate().is_err());
        assert!(render_figure(&FigureConfig { lines_per_axis: 0, ..base }).is_err());
    }

    #[test]
    fn number_format() {
        assert_eq!(format_number(-0.0), "0");
        assert_eq!(format_number(-1.234_567_891e-20), "-1.23456789e-20");
        assert_eq!(format_number(0.000_012_5), "0.0000125");
        assert_eq!(format_number(1.0), "1");
        assert_eq!(format_number(2.618_033_988_749_895), "2.61803399");
        assert_eq!(format_number(-123_456_789_123.0), "-123456789000");
    }

    #[test]
    fn structure() {
        let cfg = small(3.0);
        let svg = render_figure(&cfg).unwrap();
        assert_eq!(svg.matches("<g class=\"red-line\"").count(), 17);
        assert_eq!(svg.matches("<g class=\"blue-line\"").count(), 17);
        assert_eq!(svg.matches("<circle").count(), 2);
        assert!(svg.contains("width=\"800\" height=\"800\""));
        assert!(svg.contains("viewBox=\"-6 -6 12 12\""));
    }

    #[test]
    fn deterministic() {
        let cfg = small(1.7);
        assert_eq!(render_figure(&cfg).unwrap(), render_figure(&cfg).unwrap());
    }

    #[test]
    fn polylines_break_at_poles() {
        let data = figure_data(&small(3.0)).unwrap();
        // Im z = 0 runs through the poles at 0 and 2ω1.
        let clip = data.config.clip_radius;
        assert!(data.red[0].points().all(|w| w.norm() <= clip));
        let first = data.red[0].segments[0][0];
        assert!(first.norm() > 1.0);
    }

    #[test]
    fn real_axis_maps_to_reals() {
        let data = figure_data(&FigureConfig::default()).unwrap();
        for w in data.red[0].points() {
            assert!(w.im.abs() <= 1e-9 * w.norm().max(1.0), "{w}");
        }
    }

    #[test]
    fn centre_line_hits_circle_intersection() {
        let data = figure_data(&FigureConfig::default()).unwrap();
        let b = data.config.beta.value();
        let line = &data.red[data.config.lines_per_axis / 4];
        let hits = data.intersections();
        let best = line
            .points()
            .map(|w| hits.iter().map(|h| (w - h).norm()).fold(f64::INFINITY, f64::min))
            .fold(f64::INFINITY, f64::min);
        assert!(best <= 1e-6, "{best:e}");
        // the hit is the value −γ/β at (ω1+ω2)/2
        let f = EssentialFunction::from_beta(data.config.beta).unwrap();
        let centre = f.r(f.lattice().eighth_node(2, 2)).unwrap().finite().unwrap();
        assert!(line.points().any(|w| (w - centre).norm() <= 1e-6));
        assert!((centre.norm() - 1.0).abs() < 1e-10);
        assert!(((centre + b).norm() - data.red_circle.radius).abs() < 1e-10);
    }

    #[test]
    fn half_height_line_stays_on_red_circle() {
        let data = figure_data(&small(2.0)).unwrap();
        let c = data.red_circle;
        for w in data.red[4].points() {
            assert!(((w - c.centre).norm() - c.radius).abs() < 1e-9);
        }
        for w in data.blue[4].points() {
            assert!((w.norm() - 1.0).abs() < 1e-9);
        }
    }

    #[test]
    fn circles_orthogonal() {
        for b in [1.2, 2.618_033_988_749_895, 10.0] {
            let data = figure_data(&FigureConfig {
                lines_per_axis: 2,
                samples_per_line: 16,
                ..FigureConfig::for_beta(Beta::new(b).unwrap())
            })
            .unwrap();
            let (r, u) = (data.red_circle, data.blue_circle);
            let dist2 = (r.centre - u.centre).norm_sqr();
            let sum = r.radius * r.radius + u.radius * u.radius;
            assert!((dist2 - sum).abs() <= 1e-12 * dist2);
            for h in data.intersections() {
                assert!((h.norm() - 1.0).abs() < 1e-14);
                assert!(((h - r.centre).norm() - r.radius).abs() < 1e-12 * b);
            }
        }
    }
}
