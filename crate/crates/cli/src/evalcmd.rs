//! `eval`: single-point or grid evaluation of any kernel.

use metaconf::corrkernels::{
    CorrelatorKind, Diagnostic, EvalResult, Kernel, QuantumNumbers1D, QuantumNumbers2D,
};

use crate::config::{CliError, OutputFormat, RunConfig};
use crate::output::{atomic_write, fmt_f64, Csv};
use crate::CmdOutcome;

/// Build the kernel described by the config. `--mu2` (when given) applies to
/// the second field only, which is how mismatched-rapidity diagnostics are
/// exercised from the command line.
pub fn build_kernel(cfg: &RunConfig) -> Result<Kernel, CliError> {
    let name = cfg
        .kernel
        .as_deref()
        .ok_or_else(|| CliError::Usage("missing --kernel".into()))?;
    let kind: CorrelatorKind = name.parse()?;
    match kind.dimension() {
        1 => {
            let delta = cfg.require(cfg.delta, "delta")?;
            let gamma = cfg.require(cfg.gamma, "gamma")?;
            let mu = cfg.mu.unwrap_or(0.0);
            let qn1 = QuantumNumbers1D { delta, gamma, mu };
            let qn2 = QuantumNumbers1D {
                delta,
                gamma,
                mu: cfg.mu2.unwrap_or(mu),
            };
            Ok(match kind {
                CorrelatorKind::Ortho => Kernel::Ortho { qn: qn1 },
                CorrelatorKind::Meta1DHolo => Kernel::Meta1DHolo { qn1, qn2 },
                CorrelatorKind::Meta1DReg => Kernel::Meta1DReg { qn1, qn2 },
                CorrelatorKind::CgaNaive1D => Kernel::CgaNaive1D { qn1, qn2 },
                CorrelatorKind::CgaReg1D => Kernel::CgaReg1D {
                    qn1,
                    qn2,
                    alpha: 1.0,
                    f0: 1.0,
                },
                _ => unreachable!("dimension() == 1 covers exactly these kinds"),
            })
        }
        _ => {
            let delta = cfg.require(cfg.delta, "delta")?;
            let gamma_par = cfg.require(cfg.gamma_par, "gamma-par")?;
            let gamma_perp = cfg.require(cfg.gamma_perp, "gamma-perp")?;
            let mu = cfg.mu.unwrap_or(0.0);
            let qn1 = QuantumNumbers2D {
                delta,
                gamma_par,
                gamma_perp,
                mu,
            };
            let qn2 = QuantumNumbers2D {
                mu: cfg.mu2.unwrap_or(mu),
                ..qn1
            };
            Ok(match kind {
                CorrelatorKind::Meta2DHolo => Kernel::Meta2DHolo { qn1, qn2 },
                CorrelatorKind::Meta2DReg => Kernel::Meta2DReg { qn1, qn2 },
                CorrelatorKind::CgaNaive2D => Kernel::CgaNaive2D { qn1, qn2 },
                CorrelatorKind::CgaReg2D => Kernel::CgaReg2D {
                    qn1,
                    qn2,
                    alpha: 1.0,
                    f0: 1.0,
                },
                _ => unreachable!("dimension() == 2 covers exactly these kinds"),
            })
        }
    }
}

/// Human-readable text for a structured evaluation diagnostic.
pub fn diag_text(d: &Diagnostic) -> String {
    match d {
        Diagnostic::SelectionRule {
            quantity,
            left,
            right,
        } => format!(
            "selection rule violated: {quantity} differs between the two fields \
             ({left} vs {right}); the correlator vanishes identically"
        ),
        Diagnostic::UnboundedDirection { dr, dr_perp } => format!(
            "kernel is unbounded: it diverges along the upstream direction \
             (Δr∥, Δr⊥) ∝ ({dr}, {dr_perp})"
        ),
    }
}

struct Row {
    coords: Vec<f64>,
    result: EvalResult,
}

pub fn cmd_eval(cfg: &RunConfig) -> Result<CmdOutcome, CliError> {
    let kernel = build_kernel(cfg)?;
    let dim = kernel.kind().dimension();
    let t = cfg.require(cfg.t, "t")?;
    let phi = cfg.phi.unwrap_or(0.0).to_radians();

    let format = cfg.format.unwrap_or(OutputFormat::Csv);
    if format == OutputFormat::Svg {
        return Err(CliError::Usage(
            "eval emits csv or json; svg plots are produced by `figure`".into(),
        ));
    }

    let (columns, rows): (Vec<&str>, Vec<Row>) = match (&cfg.grid, dim) {
        (None, 1) => {
            let r = cfg.r.unwrap_or(0.0);
            let result = kernel.eval_sep1(t, r)?;
            (vec!["t", "r", "re", "im"], vec![Row {
                coords: vec![t, r],
                result,
            }])
        }
        (None, _) => {
            let (rp, rq) = match (cfg.r_par, cfg.r_perp) {
                (None, None) => {
                    let r = cfg.r.unwrap_or(0.0);
                    (r * phi.cos(), r * phi.sin())
                }
                (rp, rq) => (rp.unwrap_or(0.0), rq.unwrap_or(0.0)),
            };
            let result = kernel.eval_sep2(t, rp, rq)?;
            (vec!["t", "r_par", "r_perp", "re", "im"], vec![Row {
                coords: vec![t, rp, rq],
                result,
            }])
        }
        (Some(grid), 1) => {
            let mut rows = Vec::new();
            for r in grid.points()? {
                let result = kernel.eval_sep1(t, r)?;
                rows.push(Row {
                    coords: vec![t, r],
                    result,
                });
            }
            (vec!["t", "r", "re", "im"], rows)
        }
        (Some(grid), _) => {
            let mut rows = Vec::new();
            for r in grid.points()? {
                let (rp, rq) = (r * phi.cos(), r * phi.sin());
                let result = kernel.eval_sep2(t, rp, rq)?;
                rows.push(Row {
                    coords: vec![t, rp, rq],
                    result,
                });
            }
            (vec!["t", "r_par", "r_perp", "re", "im"], rows)
        }
    };

    let mut stderr = String::new();
    for row in &rows {
        if let Some(d) = &row.result.diagnostic {
            stderr = format!("{}\n", diag_text(d));
            break; // one structured diagnostic is enough
        }
    }

    let artifact = match format {
        OutputFormat::Csv => {
            let mut csv = Csv::new(cfg, &columns);
            for row in &rows {
                let mut vals = row.coords.clone();
                vals.push(row.result.value.re);
                vals.push(row.result.value.im);
                csv.row(&vals);
            }
            csv.finish()
        }
        OutputFormat::Json => {
            let records: Vec<serde_json::Value> = rows
                .iter()
                .map(|row| {
                    let mut obj = serde_json::Map::new();
                    for (name, v) in columns.iter().zip(
                        row.coords
                            .iter()
                            .chain([&row.result.value.re, &row.result.value.im]),
                    ) {
                        obj.insert((*name).into(), serde_json::json!(v));
                    }
                    obj.insert("is_singular".into(), serde_json::json!(row.result.is_singular));
                    obj.insert("is_real".into(), serde_json::json!(row.result.is_real));
                    serde_json::Value::Object(obj)
                })
                .collect();
            format!(
                "{}\n",
                serde_json::to_string_pretty(&serde_json::json!({
                    "config": cfg,
                    "version": crate::output::VERSION,
                    "rows": records,
                }))
                .expect("json serialization cannot fail")
            )
        }
        OutputFormat::Svg => unreachable!(),
    };

    let mut stdout = String::new();
    if rows.len() == 1 && cfg.grid.is_none() {
        // Single-point contract: the value goes to stdout.
        let res = &rows[0].result;
        if res.is_real {
            stdout = format!("{}\n", fmt_f64(res.value.re));
        } else {
            stdout = format!("{} {}\n", fmt_f64(res.value.re), fmt_f64(res.value.im));
        }
        if res.is_singular {
            stderr.push_str("evaluation point lies on the kernel's singular locus\n");
            if let Some(out) = &cfg.out {
                atomic_write(out, &artifact)?;
            }
            return Ok(CmdOutcome {
                stdout,
                stderr,
                exit: 3,
            });
        }
    }
    match &cfg.out {
        Some(out) => atomic_write(out, &artifact)?,
        None => {
            if cfg.grid.is_some() {
                stdout = artifact;
            }
        }
    }
    Ok(CmdOutcome {
        stdout,
        stderr,
        exit: 0,
    })
}
