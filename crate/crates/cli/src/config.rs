//! Run configuration: the single serializable record that fully determines
//! a command's output (the reproducibility stamp).

use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, ValueEnum};
use serde::{Deserialize, Serialize};

use metaconf::corrkernels::KernelError;

/// CLI-level error, mapped onto the documented exit codes.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    /// Usage or configuration problem (exit code 2).
    #[error("{0}")]
    Usage(String),
    /// Numeric failure, e.g. evaluation at a singular input (exit code 3).
    #[error("{0}")]
    Numeric(String),
    /// I/O failure reading a config or writing an artifact (exit code 2).
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    /// The process exit code this error maps to.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) | CliError::Io(_) => 2,
            CliError::Numeric(_) => 3,
        }
    }
}

impl From<KernelError> for CliError {
    fn from(e: KernelError) -> Self {
        match e {
            KernelError::SingularTime | KernelError::SingularSeparation => {
                CliError::Numeric(e.to_string())
            }
            other => CliError::Usage(other.to_string()),
        }
    }
}

/// Output format selector.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    /// Comma-separated values with `#`-prefixed header comments.
    Csv,
    /// Machine-readable JSON.
    Json,
    /// Minimal polyline plot (written alongside the CSV).
    Svg,
}

impl fmt::Display for OutputFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OutputFormat::Csv => "csv",
            OutputFormat::Json => "json",
            OutputFormat::Svg => "svg",
        })
    }
}

/// An evaluation grid `min:max:n[:log]`.
#[derive(Clone, Copy, PartialEq, Debug, Serialize, Deserialize)]
pub struct GridRange {
    /// Leftmost grid point.
    pub min: f64,
    /// Rightmost grid point.
    pub max: f64,
    /// Number of points (≥ 2).
    pub n: usize,
    /// Geometric instead of linear spacing (requires `0 < min < max`).
    pub log: bool,
}

impl GridRange {
    /// Materialize the grid points.
    pub fn points(&self) -> Result<Vec<f64>, CliError> {
        if self.n < 2 {
            return Err(CliError::Usage(format!(
                "grid needs at least 2 points, got {}",
                self.n
            )));
        }
        if !(self.min.is_finite() && self.max.is_finite() && self.min < self.max) {
            return Err(CliError::Usage(format!(
                "grid range [{}, {}] must be finite and increasing",
                self.min, self.max
            )));
        }
        if self.log {
            if self.min <= 0.0 {
                return Err(CliError::Usage(
                    "log grids need a positive lower endpoint".into(),
                ));
            }
            let ratio = (self.max / self.min).ln();
            Ok((0..self.n)
                .map(|k| self.min * (ratio * k as f64 / (self.n - 1) as f64).exp())
                .collect())
        } else {
            let span = self.max - self.min;
            Ok((0..self.n)
                .map(|k| self.min + span * k as f64 / (self.n - 1) as f64)
                .collect())
        }
    }
}

impl FromStr for GridRange {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parts: Vec<&str> = s.split(':').collect();
        if !(parts.len() == 3 || parts.len() == 4) {
            return Err(format!(
                "expected min:max:n[:log], got '{s}' with {} field(s)",
                parts.len()
            ));
        }
        let min: f64 = parts[0]
            .parse()
            .map_err(|e| format!("bad grid minimum '{}': {e}", parts[0]))?;
        let max: f64 = parts[1]
            .parse()
            .map_err(|e| format!("bad grid maximum '{}': {e}", parts[1]))?;
        let n: usize = parts[2]
            .parse()
            .map_err(|e| format!("bad grid size '{}': {e}", parts[2]))?;
        let log = match parts.get(3) {
            None => false,
            Some(&"log") => true,
            Some(other) => return Err(format!("unknown grid suffix '{other}' (only 'log')")),
        };
        Ok(GridRange { min, max, n, log })
    }
}

/// Shared parameter flags. Every field is optional here; requiredness is
/// decided per subcommand after merging with an optional JSON config file
/// (flags override file values).
#[derive(Args, Debug, Clone, Default)]
pub struct ParamFlags {
    /// Kernel identifier: ortho | meta1d-holo | meta1d-reg | meta2d-holo |
    /// meta2d-reg | cga-naive-1d | cga-naive-2d | cga-reg-1d | cga-reg-2d.
    #[arg(long)]
    pub kernel: Option<String>,
    /// Scaling dimension δ (first field; the second copies it).
    #[arg(long, allow_negative_numbers = true)]
    pub delta: Option<f64>,
    /// 1D rapidity γ.
    #[arg(long, allow_negative_numbers = true)]
    pub gamma: Option<f64>,
    /// 2D parallel rapidity γ∥.
    #[arg(long = "gamma-par", allow_negative_numbers = true)]
    pub gamma_par: Option<f64>,
    /// 2D transverse rapidity γ⊥.
    #[arg(long = "gamma-perp", allow_negative_numbers = true)]
    pub gamma_perp: Option<f64>,
    /// Mass μ of the first field (and of the second unless --mu2 is given).
    #[arg(long, allow_negative_numbers = true)]
    pub mu: Option<f64>,
    /// Mass μ₂ of the second field, when different from --mu.
    #[arg(long, allow_negative_numbers = true)]
    pub mu2: Option<f64>,
    /// Time difference t = t1 − t2.
    #[arg(long, allow_negative_numbers = true)]
    pub t: Option<f64>,
    /// Spatial separation Δr (1D kernels).
    #[arg(long, allow_negative_numbers = true)]
    pub r: Option<f64>,
    /// Parallel separation Δr∥ (2D kernels).
    #[arg(long = "r-par", allow_negative_numbers = true)]
    pub r_par: Option<f64>,
    /// Transverse separation Δr⊥ (2D kernels).
    #[arg(long = "r-perp", allow_negative_numbers = true)]
    pub r_perp: Option<f64>,
    /// Ray angle φ in degrees: (Δr∥, Δr⊥) = r(cos φ, sin φ).
    #[arg(long, allow_negative_numbers = true)]
    pub phi: Option<f64>,
    /// Evaluation grid min:max:n[:log] (sweeps r along the ray).
    #[arg(long, allow_hyphen_values = true)]
    pub grid: Option<GridRange>,
    /// JSON config file; explicit flags override its values.
    #[arg(long)]
    pub config: Option<PathBuf>,
    /// Output path (figures default to <figure>.csv in the working
    /// directory; eval and verify default to stdout).
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Output format (eval: csv or json; figure: csv or svg; verify: json).
    #[arg(long)]
    pub format: Option<OutputFormat>,
    /// Tolerance override for verification suites.
    #[arg(long, allow_negative_numbers = true)]
    pub tol: Option<f64>,
}

/// The resolved, fully serializable run configuration. Identical configs
/// produce byte-identical outputs.
#[derive(Debug, Clone, Default, Serialize, Deserialize)]
#[serde(default)]
pub struct RunConfig {
    /// Subcommand, including the figure or suite selector
    /// (e.g. `figure:fig2`).
    pub subcommand: String,
    pub kernel: Option<String>,
    pub delta: Option<f64>,
    pub gamma: Option<f64>,
    pub gamma_par: Option<f64>,
    pub gamma_perp: Option<f64>,
    pub mu: Option<f64>,
    pub mu2: Option<f64>,
    pub t: Option<f64>,
    pub r: Option<f64>,
    pub r_par: Option<f64>,
    pub r_perp: Option<f64>,
    pub phi: Option<f64>,
    pub grid: Option<GridRange>,
    pub out: Option<PathBuf>,
    pub format: Option<OutputFormat>,
    pub tol: Option<f64>,
    /// Seed for randomized sampling in property suites
    /// (env `METACONF_SEED`, default 0).
    pub seed: u64,
}

impl RunConfig {
    /// Build the effective config: file values (if any) overridden by
    /// explicit flags, stamped with the subcommand and seed.
    pub fn resolve(subcommand: &str, flags: &ParamFlags, seed: u64) -> Result<Self, CliError> {
        let mut cfg = match &flags.config {
            Some(path) => {
                let text = std::fs::read_to_string(path)?;
                serde_json::from_str::<RunConfig>(&text).map_err(|e| {
                    CliError::Usage(format!("config file {}: {e}", path.display()))
                })?
            }
            None => RunConfig::default(),
        };
        cfg.subcommand = subcommand.to_string();
        cfg.seed = seed;
        macro_rules! take {
            ($($field:ident),*) => {
                $(if flags.$field.is_some() {
                    cfg.$field = flags.$field.clone();
                })*
            };
        }
        take!(
            kernel, delta, gamma, gamma_par, gamma_perp, mu, mu2, t, r, r_par, r_perp, phi,
            grid, out, format, tol
        );
        Ok(cfg)
    }

    /// One-line JSON stamp of this config.
    pub fn stamp(&self) -> String {
        serde_json::to_string(self).expect("config serialization cannot fail")
    }

    /// A required field, with a uniform missing-flag diagnostic.
    pub fn require<T: Copy>(&self, value: Option<T>, flag: &str) -> Result<T, CliError> {
        value.ok_or_else(|| {
            CliError::Usage(format!(
                "missing --{flag} (set it on the command line or in the config file)"
            ))
        })
    }
}
