//! `figure`: reproduce the published figure data sets as stamped CSV
//! (optionally with a minimal SVG rendering).
//!
//! Parameter sets are fixed to the published values; only the sampling grid
//! (where meaningful), output path and format can be adjusted.

use clap::ValueEnum;
use std::path::PathBuf;

use metaconf::corrkernels::{CorrelatorKind, Kernel, QuantumNumbers1D, QuantumNumbers2D};

use crate::config::{CliError, GridRange, OutputFormat, RunConfig};
use crate::output::{atomic_write, svg_plot, Csv, Series};
use crate::CmdOutcome;

/// The reproducible figures.
#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
pub enum FigureId {
    /// Holomorphic 1D kernel surface over (t, r) ∈ [−1,1]²: spurious
    /// singularities along μ·Δr = −t.
    Fig00a,
    /// Regularized 1D kernel surface over the same window: bounded.
    Fig00b,
    /// The t = −0.6 sections of both kernels.
    Fig00cd,
    /// 2D kernel radial sections at γ∥ = 1/4, γ⊥ = 0 (algebraic decay).
    Fig2,
    /// 2D kernel radial sections at γ∥ = 1/4, γ⊥ = 3/2 (crossover).
    Fig3,
}

impl FigureId {
    /// Stable name, also the default output stem.
    pub fn name(self) -> &'static str {
        match self {
            FigureId::Fig00a => "fig00a",
            FigureId::Fig00b => "fig00b",
            FigureId::Fig00cd => "fig00cd",
            FigureId::Fig2 => "fig2",
            FigureId::Fig3 => "fig3",
        }
    }
}

/// Quantum numbers shared by every fig00 panel.
fn fig00_qn() -> QuantumNumbers1D {
    QuantumNumbers1D {
        delta: 0.22,
        gamma: 0.33,
        mu: 1.0,
    }
}

/// The four sampled ray angles of the 2D figures, in degrees.
pub const FIG_ANGLES_DEG: [f64; 4] = [0.0, 30.0, 60.0, 90.0];

/// 2D kernel of the radial-section figures. The scaling dimension is
/// invisible at t = 1; it is pinned to the fig00 value for the stamp.
pub fn fig2d_kernel(gamma_perp: f64) -> Kernel {
    Kernel::symmetric_2d(
        CorrelatorKind::Meta2DReg,
        QuantumNumbers2D {
            delta: 0.22,
            gamma_par: 0.25,
            gamma_perp,
            mu: 1.0,
        },
    )
    .expect("valid 2D quantum numbers")
}

/// Default separation grid of the fig00cd sections.
fn section_grid() -> GridRange {
    GridRange {
        min: -1.0,
        max: 1.0,
        n: 481,
        log: false,
    }
}

/// Default log-spaced radial grid of the 2D section figures.
fn radial_grid() -> GridRange {
    GridRange {
        min: 1e-2,
        max: 1e3,
        n: 121,
        log: true,
    }
}

pub(crate) fn reject_param_flags(cfg: &RunConfig) -> Result<(), CliError> {
    let fixed = [
        ("kernel", cfg.kernel.is_some()),
        ("delta", cfg.delta.is_some()),
        ("gamma", cfg.gamma.is_some()),
        ("gamma-par", cfg.gamma_par.is_some()),
        ("gamma-perp", cfg.gamma_perp.is_some()),
        ("mu", cfg.mu.is_some()),
        ("mu2", cfg.mu2.is_some()),
        ("t", cfg.t.is_some()),
        ("r", cfg.r.is_some()),
        ("r-par", cfg.r_par.is_some()),
        ("r-perp", cfg.r_perp.is_some()),
        ("phi", cfg.phi.is_some()),
    ];
    if let Some((flag, _)) = fixed.iter().find(|(_, set)| *set) {
        return Err(CliError::Usage(format!(
            "--{flag} conflicts with the fixed published parameter set; \
             use `eval` for custom parameters"
        )));
    }
    Ok(())
}

pub fn cmd_figure(which: FigureId, cfg: &RunConfig) -> Result<CmdOutcome, CliError> {
    reject_param_flags(cfg)?;
    let format = cfg.format.unwrap_or(OutputFormat::Csv);
    if format == OutputFormat::Json {
        return Err(CliError::Usage(
            "figures emit csv (optionally with svg); use `verify` for json reports".into(),
        ));
    }
    let want_svg = format == OutputFormat::Svg;

    let (csv, svg) = match which {
        FigureId::Fig00a | FigureId::Fig00b => {
            if cfg.grid.is_some() {
                return Err(CliError::Usage(
                    "surface figures use the fixed 81×81 grid; --grid applies to \
                     fig00cd, fig2 and fig3"
                        .into(),
                ));
            }
            if want_svg {
                return Err(CliError::Usage(
                    "surface figures have no polyline rendering; request csv".into(),
                ));
            }
            (surface_csv(which, cfg)?, None)
        }
        FigureId::Fig00cd => section_output(cfg, want_svg)?,
        FigureId::Fig2 => radial_output(cfg, 0.0, want_svg)?,
        FigureId::Fig3 => radial_output(cfg, 1.5, want_svg)?,
    };

    let out = cfg
        .out
        .clone()
        .unwrap_or_else(|| PathBuf::from(format!("{}.csv", which.name())));
    atomic_write(&out, &csv)?;
    if let Some(svg_text) = svg {
        let svg_path = out.with_extension("svg");
        atomic_write(&svg_path, &svg_text)?;
    }
    Ok(CmdOutcome {
        stdout: String::new(),
        stderr: String::new(),
        exit: 0,
    })
}

/// Surface data of the fig00 panels: 81×81 points over (t, r) ∈ [−1,1]²
/// minus the t = 0 line. The holomorphic panel carries Re/Im columns (NaN on
/// the singular locus μ·Δr = −t); the regularized panel is real.
fn surface_csv(which: FigureId, cfg: &RunConfig) -> Result<String, CliError> {
    let qn = fig00_qn();
    let holo = which == FigureId::Fig00a;
    let kernel = if holo {
        Kernel::Meta1DHolo { qn1: qn, qn2: qn }
    } else {
        Kernel::Meta1DReg { qn1: qn, qn2: qn }
    };
    let columns: &[&str] = if holo {
        &["t", "r", "re", "im"]
    } else {
        &["t", "r", "c"]
    };
    let mut csv = Csv::new(cfg, columns);
    let axis: Vec<f64> = (0..81).map(|k| -1.0 + k as f64 * 0.025).collect();
    for &t in &axis {
        if t == 0.0 {
            continue;
        }
        for &r in &axis {
            let res = kernel.eval_sep1(t, r)?;
            if holo {
                csv.row(&[t, r, res.value.re, res.value.im]);
            } else {
                csv.row(&[t, r, res.value.re]);
            }
        }
    }
    Ok(csv.finish())
}

/// The t = −0.6 sections: holomorphic Re/Im (singular at r = 0.6) next to
/// the bounded regularized values.
fn section_output(
    cfg: &RunConfig,
    want_svg: bool,
) -> Result<(String, Option<String>), CliError> {
    let qn = fig00_qn();
    let holo = Kernel::Meta1DHolo { qn1: qn, qn2: qn };
    let reg = Kernel::Meta1DReg { qn1: qn, qn2: qn };
    let t = -0.6;
    let grid = cfg.grid.unwrap_or_else(section_grid);
    let mut csv = Csv::new(cfg, &["r", "holo_re", "holo_im", "reg"]);
    let mut series = [
        Series {
            label: "holo Re".into(),
            points: Vec::new(),
        },
        Series {
            label: "holo Im".into(),
            points: Vec::new(),
        },
        Series {
            label: "regularized".into(),
            points: Vec::new(),
        },
    ];
    for r in grid.points()? {
        let h = holo.eval_sep1(t, r)?;
        let b = reg.eval_sep1(t, r)?;
        csv.row(&[r, h.value.re, h.value.im, b.value.re]);
        series[0].points.push((r, h.value.re));
        series[1].points.push((r, h.value.im));
        series[2].points.push((r, b.value.re));
    }
    let svg = want_svg.then(|| {
        svg_plot(
            "1D meta-conformal correlator, t = -0.6 section",
            &series,
            false,
            false,
        )
    });
    Ok((csv.finish(), svg))
}

/// Radial sections C(r cos φ, r sin φ) of the 2D kernel at t = 1 for the
/// four published angles; log-spaced r.
fn radial_output(
    cfg: &RunConfig,
    gamma_perp: f64,
    want_svg: bool,
) -> Result<(String, Option<String>), CliError> {
    let kernel = fig2d_kernel(gamma_perp);
    let grid = cfg.grid.unwrap_or_else(radial_grid);
    let points = grid.points()?;
    let mut csv = Csv::new(cfg, &["phi_deg", "r", "c"]);
    let mut series = Vec::new();
    for phi_deg in FIG_ANGLES_DEG {
        let phi = phi_deg.to_radians();
        let mut s = Series {
            label: format!("phi = {phi_deg}°"),
            points: Vec::new(),
        };
        for &r in &points {
            let res = kernel.eval_sep2(1.0, r * phi.cos(), r * phi.sin())?;
            csv.row(&[phi_deg, r, res.value.re]);
            s.points.push((r, res.value.re));
        }
        series.push(s);
    }
    let title = format!(
        "2D meta-conformal radial sections, γ∥ = 1/4, γ⊥ = {gamma_perp}"
    );
    let svg = want_svg.then(|| svg_plot(&title, &series, grid.log, grid.log));
    Ok((csv.finish(), svg))
}
