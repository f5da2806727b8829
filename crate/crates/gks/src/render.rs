//! CSV and SVG output for sum grids, plus CSV exports of hypocycloid
//! boundaries and lattice point sets.

use std::collections::HashSet;
use std::fmt::Write as _;
use std::io::{self, Read, Write};

use gks_core::color::Classifier;
use gks_core::equidistribution::LatticePointSet;
use gks_core::geometry::HypocycloidRegion;
use gks_core::{ComplexValue, SumGrid};

#[derive(Debug, thiserror::Error)]
pub enum RenderError {
    #[error("i/o failure: {0}")]
    Io(#[from] io::Error),
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
    #[error("line {line}: {message}")]
    Parse { line: u64, message: String },
    #[error("nothing to plot")]
    EmptyGrid,
    #[error(transparent)]
    Core(#[from] gks_core::Error),
}

pub const CSV_HEADER: [&str; 5] = ["a", "b", "re", "im", "class"];

/// One plotted sum.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PlotPoint {
    pub a: u64,
    pub b: u64,
    pub value: ComplexValue,
    pub class: u32,
}

pub fn grid_points(grid: &SumGrid) -> Vec<PlotPoint> {
    grid.cells()
        .map(|c| PlotPoint {
            a: c.a,
            b: c.b,
            value: c.value,
            class: c.class,
        })
        .collect()
}

/// Replaces every point's class.
pub fn classify_points(points: &mut [PlotPoint], classifier: &Classifier) -> Result<(), RenderError> {
    for point in points {
        point.class = classifier.classify(point.a as i64, point.b as i64)?;
    }
    Ok(())
}

/// `x` with `digits` significant digits in the style of C's `%g`: trailing
/// zeros dropped, exponent form outside `1e-4 ≤ |x| < 10^digits`.
pub fn format_significant(x: f64, digits: usize) -> String {
    if x == 0.0 {
        return "0".into();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let digits = digits.max(1);
    let sci = format!("{:.*e}", digits - 1, x);
    let (mantissa, exp) = sci.split_once('e').expect("exponent form");
    let exp: i32 = exp.parse().expect("integer exponent");
    if exp < -4 || exp >= digits as i32 {
        let sign = if exp < 0 { '-' } else { '+' };
        format!("{}e{sign}{:02}", trim_zeros(mantissa), exp.abs())
    } else {
        trim_zeros(&format!("{:.*}", (digits as i32 - 1 - exp) as usize, x)).to_string()
    }
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

/// `x` with 12 decimals, never printing a negative zero.
pub fn format_fixed(x: f64) -> String {
    let s = format!("{x:.12}");
    if s.trim_start_matches('-').bytes().all(|c| c == b'0' || c == b'.') {
        s.trim_start_matches('-').to_string()
    } else {
        s
    }
}

/// Writes `a,b,re,im,class` rows in `(a, b)` order; returns the row count.
pub fn write_csv<W: Write>(grid: &SumGrid, out: W) -> Result<usize, RenderError> {
    write_points_csv(grid_points(grid).iter(), out)
}

pub fn write_points_csv<'a, W: Write>(
    points: impl Iterator<Item = &'a PlotPoint>,
    out: W,
) -> Result<usize, RenderError> {
    let mut writer = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(out);
    writer.write_record(CSV_HEADER)?;
    let mut rows = 0;
    for p in points {
        writer.write_record([
            p.a.to_string(),
            p.b.to_string(),
            format_significant(p.value.re, 12),
            format_significant(p.value.im, 12),
            p.class.to_string(),
        ])?;
        rows += 1;
    }
    writer.flush()?;
    Ok(rows)
}

pub fn read_csv<R: Read>(input: R) -> Result<Vec<PlotPoint>, RenderError> {
    let mut reader = csv::ReaderBuilder::new().has_headers(true).from_reader(input);
    let header = reader.headers()?.clone();
    if header.iter().ne(CSV_HEADER) {
        return Err(RenderError::Parse {
            line: 1,
            message: format!("expected header {}", CSV_HEADER.join(",")),
        });
    }
    let mut points = Vec::new();
    for record in reader.records() {
        let record = record?;
        let line = record.position().map_or(0, |p| p.line());
        let field = |i: usize| record.get(i).unwrap_or("");
        let bad = |what: &str| RenderError::Parse {
            line,
            message: format!("invalid {what}"),
        };
        points.push(PlotPoint {
            a: field(0).parse().map_err(|_| bad("a"))?,
            b: field(1).parse().map_err(|_| bad("b"))?,
            value: ComplexValue::new(
                field(2).parse().map_err(|_| bad("re"))?,
                field(3).parse().map_err(|_| bad("im"))?,
            ),
            class: field(4).parse().map_err(|_| bad("class"))?,
        });
    }
    Ok(points)
}

/// `θ, re, im` for every boundary sample.
pub fn write_boundary_csv<W: Write>(region: &HypocycloidRegion, out: W) -> Result<usize, RenderError> {
    let mut writer = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(out);
    writer.write_record(["theta", "re", "im"])?;
    let n = region.boundary().len();
    for (j, z) in region.boundary().iter().enumerate() {
        let theta = std::f64::consts::TAU * j as f64 / n as f64;
        writer.write_record([
            format_significant(theta, 12),
            format_significant(z.re, 12),
            format_significant(z.im, 12),
        ])?;
    }
    writer.flush()?;
    Ok(n)
}

/// `a, x1, …, xk`, one row per point.
pub fn write_point_set_csv<W: Write>(set: &LatticePointSet, out: W) -> Result<usize, RenderError> {
    let mut writer = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(out);
    let mut header = vec!["a".to_string()];
    header.extend((1..=set.dimension()).map(|k| format!("x{k}")));
    writer.write_record(&header)?;
    for (a, x) in set.points().enumerate() {
        let mut row = vec![a.to_string()];
        row.extend(x.iter().map(|&v| format_significant(v, 12)));
        writer.write_record(&row)?;
    }
    writer.flush()?;
    Ok(set.len())
}

/// Colors by class index; classes past the palette get evenly spread hues.
pub const PALETTE: [&str; 8] = [
    "#1f77b4", // blue
    "#d62728", // red
    "#2ca02c", // green
    "#9467bd", // purple
    "#ff7f0e", // orange
    "#17becf", // teal
    "#8c564b", // brown
    "#7f7f7f", // gray
];

pub fn class_color(class: u32) -> String {
    match PALETTE.get(class as usize) {
        Some(c) => (*c).to_string(),
        None => format!("hsl({},60%,45%)", (class as u64 * 137) % 360),
    }
}

#[derive(Debug, Clone)]
pub struct SvgOptions {
    /// Marker radius in canvas units.
    pub radius: f64,
    /// Width and height of the square canvas.
    pub canvas: u32,
    pub opacity: f64,
    pub overlay: Option<HypocycloidRegion>,
}

impl Default for SvgOptions {
    fn default() -> Self {
        Self {
            radius: 1.5,
            canvas: 800,
            opacity: 0.75,
            overlay: None,
        }
    }
}

struct Counter<W> {
    inner: W,
    bytes: u64,
}

impl<W: Write> Write for Counter<W> {
    fn write(&mut self, buf: &[u8]) -> io::Result<usize> {
        let n = self.inner.write(buf)?;
        self.bytes += n as u64;
        Ok(n)
    }

    fn flush(&mut self) -> io::Result<()> {
        self.inner.flush()
    }
}

/// Canvas coordinates in tenths of a unit.
fn tenths(x: f64) -> i64 {
    (x * 10.0).round() as i64
}

fn show_tenths(t: i64) -> String {
    let sign = if t < 0 { "-" } else { "" };
    format!("{sign}{}.{}", t.abs() / 10, t.abs() % 10)
}

/// Scatter plot of the points on the complex plane, real axis to the right
/// and imaginary axis up, over `[−R, R]²` with
/// `R = 1.05 · max(|z|, overlay radius)`. Markers are drawn by class and
/// then `(a, b)`; a marker landing on an already drawn position of the same
/// class is skipped. Returns the byte count.
pub fn render_svg<W: Write>(points: &[PlotPoint], options: &SvgOptions, out: W) -> Result<u64, RenderError> {
    if points.is_empty() {
        return Err(RenderError::EmptyGrid);
    }
    let mut extent = points.iter().map(|p| p.value.norm()).fold(0.0, f64::max);
    if let Some(region) = &options.overlay {
        extent = extent.max(region.outer_radius());
    }
    let r = if extent > 0.0 { extent * 1.05 } else { 1.0 };
    let size = options.canvas as f64;
    let scale = size / (2.0 * r);
    let to_canvas = |z: ComplexValue| (tenths((z.re + r) * scale), tenths((r - z.im) * scale));

    let mut order: Vec<&PlotPoint> = points.iter().collect();
    order.sort_by_key(|p| (p.class, p.a, p.b));

    let mut out = Counter {
        inner: io::BufWriter::new(out),
        bytes: 0,
    };
    let c = options.canvas;
    writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#)?;
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{c}" height="{c}" viewBox="0 0 {c} {c}">"#
    )?;
    writeln!(out, r#"<rect x="0" y="0" width="{c}" height="{c}" fill="white"/>"#)?;
    if let Some(region) = &options.overlay {
        let mut d = String::new();
        for (i, &z) in region.boundary().iter().enumerate() {
            let (x, y) = to_canvas(z);
            let _ = write!(d, "{}{},{} ", if i == 0 { "M" } else { "L" }, show_tenths(x), show_tenths(y));
        }
        d.push('Z');
        writeln!(out, r#"<path d="{d}" fill="none" stroke="black" stroke-width="1"/>"#)?;
    }
    let radius = format_significant(options.radius, 6);
    writeln!(out, r#"<g fill-opacity="{}" stroke="none">"#, format_significant(options.opacity, 6))?;
    let mut i = 0;
    while i < order.len() {
        let class = order[i].class;
        writeln!(out, r#"<g fill="{}">"#, class_color(class))?;
        let mut drawn = HashSet::new();
        while i < order.len() && order[i].class == class {
            let (x, y) = to_canvas(order[i].value);
            if drawn.insert((x, y)) {
                writeln!(out, r#"<circle cx="{}" cy="{}" r="{radius}"/>"#, show_tenths(x), show_tenths(y))?;
            }
            i += 1;
        }
        writeln!(out, "</g>")?;
    }
    writeln!(out, "</g>")?;
    writeln!(out, "</svg>")?;
    out.flush()?;
    Ok(out.bytes)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn significant_digits() {
        assert_eq!(format_significant(0.0, 12), "0");
        assert_eq!(format_significant(-0.0, 12), "0");
        assert_eq!(format_significant(4.0, 12), "4");
        assert_eq!(format_significant(0.381966011250105, 12), "0.38196601125");
        assert_eq!(format_significant(-1.5, 12), "-1.5");
        assert_eq!(format_significant(1.0 / 3.0, 12), "0.333333333333");
        assert_eq!(format_significant(123456.7890123456, 12), "123456.789012");
        assert_eq!(format_significant(1.234e-17, 12), "1.234e-17");
        assert_eq!(format_significant(2.5e13, 12), "2.5e+13");
        assert_eq!(format_significant(999999999999.5, 12), "1e+12");
        assert_eq!(format_significant(0.00012, 12), "0.00012");
    }

    #[test]
    fn fixed_decimals() {
        assert_eq!(format_fixed(0.381966011250105), "0.381966011250");
        assert_eq!(format_fixed(-1e-17), "0.000000000000");
        assert_eq!(format_fixed(-0.0), "0.000000000000");
        assert_eq!(format_fixed(-0.5), "-0.500000000000");
    }

    #[test]
    fn tenths_display() {
        assert_eq!(show_tenths(4000), "400.0");
        assert_eq!(show_tenths(-7), "-0.7");
        assert_eq!(show_tenths(12), "1.2");
    }

    #[test]
    fn palette_order() {
        assert_eq!(class_color(0), "#1f77b4");
        assert_eq!(class_color(3), "#9467bd");
        assert_eq!(class_color(7), "#7f7f7f");
        assert_ne!(class_color(8), class_color(9));
        assert_eq!(class_color(11), class_color(11));
    }

    #[test]
    fn single_point_is_centered() {
        let p = PlotPoint {
            a: 0,
            b: 0,
            value: ComplexValue::new(0.0, 0.0),
            class: 0,
        };
        let mut out = Vec::new();
        let bytes = render_svg(&[p], &SvgOptions::default(), &mut out).unwrap();
        assert_eq!(bytes as usize, out.len());
        let text = String::from_utf8(out).unwrap();
        assert!(text.contains(r#"<circle cx="400.0" cy="400.0""#));
        assert!(matches!(render_svg(&[], &SvgOptions::default(), Vec::new()), Err(RenderError::EmptyGrid)));
    }

    #[test]
    fn imaginary_axis_points_up() {
        let points = [
            PlotPoint { a: 0, b: 0, value: ComplexValue::new(0.0, 1.0), class: 0 },
            PlotPoint { a: 0, b: 1, value: ComplexValue::new(1.0, 0.0), class: 1 },
        ];
        let mut out = Vec::new();
        render_svg(&points, &SvgOptions::default(), &mut out).unwrap();
        let text = String::from_utf8(out).unwrap();
        // R = 1.05, scale = 800 / 2.1
        assert!(text.contains(r#"<circle cx="400.0" cy="19.0""#), "{text}");
        assert!(text.contains(r#"<circle cx="781.0" cy="400.0""#), "{text}");
    }
}
