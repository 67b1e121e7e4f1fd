//! Artifact writers: stamped CSV, JSON and minimal SVG output, all written
//! atomically (temp file + rename) so partial files never appear.

use std::fmt::Write as _;
use std::path::Path;

use crate::config::{CliError, RunConfig};

/// Artifact version recorded in every output stamp.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// Format one float with 17 significant digits (round-trips f64 exactly).
pub fn fmt_f64(x: f64) -> String {
    format!("{x:.16e}")
}

/// Write `content` to `path` atomically: the data lands in a temporary file
/// in the same directory and is renamed over the target.
pub fn atomic_write(path: &Path, content: &str) -> Result<(), CliError> {
    let dir = path.parent().filter(|p| !p.as_os_str().is_empty());
    let mut tmp = match dir {
        Some(d) => tempfile::NamedTempFile::new_in(d)?,
        None => tempfile::NamedTempFile::new_in(".")?,
    };
    std::io::Write::write_all(&mut tmp, content.as_bytes())?;
    tmp.persist(path)
        .map_err(|e| CliError::Io(e.error))?;
    Ok(())
}

/// A stamped CSV document under construction.
pub struct Csv {
    buf: String,
}

impl Csv {
    /// Start a CSV with the version/config comment stamp and the header row.
    pub fn new(config: &RunConfig, columns: &[&str]) -> Self {
        let mut buf = String::new();
        let _ = writeln!(buf, "# metaconf v{VERSION}");
        let _ = writeln!(buf, "# config = {}", config.stamp());
        let _ = writeln!(buf, "{}", columns.join(","));
        Csv { buf }
    }

    /// Append one row of floats (17 significant digits each).
    pub fn row(&mut self, values: &[f64]) {
        let cells: Vec<String> = values.iter().map(|&v| fmt_f64(v)).collect();
        let _ = writeln!(self.buf, "{}", cells.join(","));
    }

    /// The finished document.
    pub fn finish(self) -> String {
        self.buf
    }
}

/// One polyline series of an SVG plot.
pub struct Series {
    /// Legend label.
    pub label: String,
    /// Data points (x, y); non-finite points break the polyline.
    pub points: Vec<(f64, f64)>,
}

/// Minimal deterministic SVG line plot. Log axes take log10 of the data
/// before scaling; points that are non-finite (or non-positive on a log
/// axis) are dropped.
pub fn svg_plot(
    title: &str,
    series: &[Series],
    log_x: bool,
    log_y: bool,
) -> String {
    const W: f64 = 640.0;
    const H: f64 = 480.0;
    const M: f64 = 56.0; // margin
    let palette = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"];

    let map = |v: f64, log: bool| -> Option<f64> {
        if log {
            (v > 0.0 && v.is_finite()).then(|| v.log10())
        } else {
            v.is_finite().then_some(v)
        }
    };
    let mut xs = Vec::new();
    let mut ys = Vec::new();
    for s in series {
        for &(x, y) in &s.points {
            if let (Some(a), Some(b)) = (map(x, log_x), map(y, log_y)) {
                xs.push(a);
                ys.push(b);
            }
        }
    }
    let (x_lo, x_hi) = bounds(&xs);
    let (y_lo, y_hi) = bounds(&ys);
    let sx = |v: f64| M + (v - x_lo) / (x_hi - x_lo) * (W - 2.0 * M);
    let sy = |v: f64| H - M - (v - y_lo) / (y_hi - y_lo) * (H - 2.0 * M);

    let mut out = String::new();
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{W}\" height=\"{H}\" \
         viewBox=\"0 0 {W} {H}\">"
    );
    let _ = writeln!(
        out,
        "  <rect width=\"{W}\" height=\"{H}\" fill=\"white\"/>"
    );
    let _ = writeln!(
        out,
        "  <text x=\"{:.1}\" y=\"24\" font-family=\"sans-serif\" font-size=\"14\" \
         text-anchor=\"middle\">{}</text>",
        W / 2.0,
        title
    );
    // Axes box.
    let _ = writeln!(
        out,
        "  <rect x=\"{M}\" y=\"{M}\" width=\"{:.1}\" height=\"{:.1}\" fill=\"none\" \
         stroke=\"black\"/>",
        W - 2.0 * M,
        H - 2.0 * M
    );
    // Corner tick labels (enough to read off the data range).
    let label = |v: f64, log: bool| {
        if log {
            format!("1e{v:.2}")
        } else {
            format!("{v:.3}")
        }
    };
    let _ = writeln!(
        out,
        "  <text x=\"{M}\" y=\"{:.1}\" font-family=\"sans-serif\" font-size=\"11\">{}</text>",
        H - M + 16.0,
        label(x_lo, log_x)
    );
    let _ = writeln!(
        out,
        "  <text x=\"{:.1}\" y=\"{:.1}\" font-family=\"sans-serif\" font-size=\"11\" \
         text-anchor=\"end\">{}</text>",
        W - M,
        H - M + 16.0,
        label(x_hi, log_x)
    );
    let _ = writeln!(
        out,
        "  <text x=\"{:.1}\" y=\"{:.1}\" font-family=\"sans-serif\" font-size=\"11\" \
         text-anchor=\"end\">{}</text>",
        M - 4.0,
        H - M,
        label(y_lo, log_y)
    );
    let _ = writeln!(
        out,
        "  <text x=\"{:.1}\" y=\"{:.1}\" font-family=\"sans-serif\" font-size=\"11\" \
         text-anchor=\"end\">{}</text>",
        M - 4.0,
        M + 10.0,
        label(y_hi, log_y)
    );
    for (i, s) in series.iter().enumerate() {
        let color = palette[i % palette.len()];
        let mut coords = String::new();
        let mut open = false;
        for &(x, y) in &s.points {
            match (map(x, log_x), map(y, log_y)) {
                (Some(a), Some(b)) => {
                    let _ = write!(coords, "{:.2},{:.2} ", sx(a), sy(b));
                    open = true;
                }
                _ => {
                    if open {
                        flush_polyline(&mut out, &coords, color);
                        coords.clear();
                        open = false;
                    }
                }
            }
        }
        if open {
            flush_polyline(&mut out, &coords, color);
        }
        let _ = writeln!(
            out,
            "  <text x=\"{:.1}\" y=\"{:.1}\" font-family=\"sans-serif\" font-size=\"12\" \
             fill=\"{}\">{}</text>",
            W - M + 4.0,
            M + 16.0 * (i as f64 + 1.0),
            color,
            s.label
        );
    }
    let _ = writeln!(out, "</svg>");
    out
}

fn flush_polyline(out: &mut String, coords: &str, color: &str) {
    let _ = writeln!(
        out,
        "  <polyline points=\"{}\" fill=\"none\" stroke=\"{}\" stroke-width=\"1.5\"/>",
        coords.trim_end(),
        color
    );
}

fn bounds(vals: &[f64]) -> (f64, f64) {
    let lo = vals.iter().cloned().fold(f64::INFINITY, f64::min);
    let hi = vals.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    if !(lo.is_finite() && hi.is_finite()) {
        return (0.0, 1.0);
    }
    if lo == hi {
        return (lo - 0.5, hi + 0.5);
    }
    (lo, hi)
}
