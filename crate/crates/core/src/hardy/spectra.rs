//! Spectrum and tube-point data types for the Hardy-space routines.
//!
//! A `HalfLineSpectrum` is the Fourier datum f̂ supported on ζ ≥ 0 whose
//! reconstruction f(z) = (2π)^{-1/2} ∫₀^∞ e^{izζ} f̂(ζ) dζ lives in the
//! upper-half-plane Hardy space; a `QuadrantSpectrum` is the 2D analogue on
//! the first quadrant, reconstructed over the quadrant tube.

use std::fmt;
use std::path::Path;
use std::sync::Arc;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::HardyError;

/// Declared large-ζ behaviour of a spectrum, used to complete (or bound)
/// quadrature tails beyond the sampled support end.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum DecayTag {
    /// |f̂(ζ)| ≈ |f̂(ζ_end)|·e^{−rate·(ζ−ζ_end)} beyond the support end.
    Exponential { rate: f64 },
    /// |f̂(ζ)| ≲ |f̂(ζ_end)|·(ζ/ζ_end)^{−exponent} beyond the support end.
    Power { exponent: f64 },
    /// The spectrum vanishes identically beyond the support end.
    Compact,
}

/// Square-integrability proxy of a spectrum: trapezoidal ∑|f̂|²Δζ over the
/// stored grid plus the declared-decay tail estimate.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct L2Proxy {
    /// Trapezoidal ∑|f̂|²Δζ over the sample grid.
    pub head: f64,
    /// Tail estimate beyond the support end, from the decay tag.
    pub tail_estimate: f64,
    /// tail / (head + tail); small for genuinely square-integrable data.
    pub tail_fraction: f64,
}

/// A complex-valued spectrum supported on the half-line ζ ≥ 0.
///
/// The evaluation callable is the source of truth; the stored sample grid
/// mirrors it for diagnostics and CSV round-trips. Values at ζ < 0 are 0.
#[derive(Clone)]
pub struct HalfLineSpectrum {
    eval: Arc<dyn Fn(f64) -> Complex64 + Send + Sync>,
    grid: Arc<Vec<f64>>,
    values: Arc<Vec<Complex64>>,
    support_end: f64,
    decay: DecayTag,
}

impl fmt::Debug for HalfLineSpectrum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("HalfLineSpectrum")
            .field("support_end", &self.support_end)
            .field("decay", &self.decay)
            .field("samples", &self.grid.len())
            .finish()
    }
}

/// Number of synthetic samples stored for closure-backed spectra.
const SYNTH_SAMPLES: usize = 1025;

impl HalfLineSpectrum {
    /// Spectrum backed by an exact callable on [0, `support_end`].
    pub fn from_fn<F>(f: F, support_end: f64, decay: DecayTag) -> Result<Self, HardyError>
    where
        F: Fn(f64) -> Complex64 + Send + Sync + 'static,
    {
        if !(support_end > 0.0) || !support_end.is_finite() {
            return Err(HardyError::InvalidParameter {
                detail: format!("support end must be positive and finite, got {support_end}"),
            });
        }
        validate_decay(decay)?;
        let grid: Vec<f64> = (0..SYNTH_SAMPLES)
            .map(|j| support_end * j as f64 / (SYNTH_SAMPLES - 1) as f64)
            .collect();
        let values: Vec<Complex64> = grid.iter().map(|&z| f(z)).collect();
        Ok(Self {
            eval: Arc::new(f),
            grid: Arc::new(grid),
            values: Arc::new(values),
            support_end,
            decay,
        })
    }

    /// The reference spectrum f̂(ζ) = e^{−ζ}; its reconstruction has the
    /// closed form (2π)^{-1/2} (1 − iz)^{-1}.
    pub fn exponential() -> Self {
        Self::from_fn(
            |zeta| Complex64::new((-zeta).exp(), 0.0),
            36.0,
            DecayTag::Exponential { rate: 1.0 },
        )
        .expect("static parameters are valid")
    }

    /// The constant spectrum f̂ ≡ 1 on [0, `support_end`]. Not
    /// square-integrable as a half-line function; used for the dual-space
    /// inversion where spectra enter by point evaluation only.
    pub fn flat(support_end: f64) -> Result<Self, HardyError> {
        Self::from_fn(|_| Complex64::new(1.0, 0.0), support_end, DecayTag::Compact)
    }

    /// Spectrum interpolating the given samples linearly; zero outside the
    /// grid span. The grid must be finite, non-negative, strictly
    /// increasing and hold at least two points.
    pub fn from_samples(
        grid: Vec<f64>,
        values: Vec<Complex64>,
        decay: DecayTag,
    ) -> Result<Self, HardyError> {
        if grid.len() < 2 || grid.len() != values.len() {
            return Err(HardyError::InvalidParameter {
                detail: format!(
                    "need at least two matching samples, got {} grid / {} values",
                    grid.len(),
                    values.len()
                ),
            });
        }
        if grid.iter().any(|z| !z.is_finite() || *z < 0.0)
            || values.iter().any(|v| !v.re.is_finite() || !v.im.is_finite())
        {
            return Err(HardyError::InvalidParameter {
                detail: "samples must be finite with non-negative abscissae".into(),
            });
        }
        if grid.windows(2).any(|w| w[0] >= w[1]) {
            return Err(HardyError::InvalidParameter {
                detail: "sample grid must be strictly increasing".into(),
            });
        }
        validate_decay(decay)?;
        let support_end = *grid.last().expect("non-empty");
        let grid = Arc::new(grid);
        let values = Arc::new(values);
        let (g, v) = (Arc::clone(&grid), Arc::clone(&values));
        let eval = move |zeta: f64| -> Complex64 {
            if zeta < g[0] || zeta > *g.last().expect("non-empty") {
                return Complex64::new(0.0, 0.0);
            }
            let hi = g.partition_point(|&x| x < zeta).min(g.len() - 1).max(1);
            let lo = hi - 1;
            let width = g[hi] - g[lo];
            let w = ((zeta - g[lo]) / width).clamp(0.0, 1.0);
            v[lo] * (1.0 - w) + v[hi] * w
        };
        Ok(Self {
            eval: Arc::new(eval),
            grid,
            values,
            support_end,
            decay,
        })
    }

    /// Load a spectrum from a CSV file with columns `zeta,re,im`
    /// (`#`-prefixed comment lines allowed, one header row required).
    pub fn from_csv(path: &Path, decay: DecayTag) -> Result<Self, HardyError> {
        let mut reader = csv::ReaderBuilder::new()
            .comment(Some(b'#'))
            .trim(csv::Trim::All)
            .from_path(path)
            .map_err(csv_error)?;
        let mut rows: Vec<(f64, Complex64)> = Vec::new();
        for record in reader.records() {
            let record = record.map_err(csv_error)?;
            if record.len() < 3 {
                return Err(HardyError::InvalidParameter {
                    detail: format!("CSV row needs 3 columns zeta,re,im, got {}", record.len()),
                });
            }
            let parse = |field: &str, name: &str| -> Result<f64, HardyError> {
                field.parse::<f64>().map_err(|e| HardyError::InvalidParameter {
                    detail: format!("bad {name} field {field:?}: {e}"),
                })
            };
            let zeta = parse(&record[0], "zeta")?;
            let re = parse(&record[1], "re")?;
            let im = parse(&record[2], "im")?;
            rows.push((zeta, Complex64::new(re, im)));
        }
        rows.sort_by(|a, b| a.0.total_cmp(&b.0));
        let grid: Vec<f64> = rows.iter().map(|r| r.0).collect();
        let values: Vec<Complex64> = rows.iter().map(|r| r.1).collect();
        Self::from_samples(grid, values, decay)
    }

    /// Write the stored samples as CSV (`zeta,re,im`), 17 significant digits.
    pub fn write_csv<W: std::io::Write>(&self, mut out: W) -> Result<(), HardyError> {
        writeln!(out, "zeta,re,im")?;
        for (z, v) in self.grid.iter().zip(self.values.iter()) {
            writeln!(out, "{:.16e},{:.16e},{:.16e}", z, v.re, v.im)?;
        }
        Ok(())
    }

    /// Spectrum value at ζ (zero for ζ < 0).
    pub fn value(&self, zeta: f64) -> Complex64 {
        if zeta < 0.0 {
            Complex64::new(0.0, 0.0)
        } else {
            (self.eval)(zeta)
        }
    }

    /// End of the quadrature support.
    pub fn support_end(&self) -> f64 {
        self.support_end
    }

    /// Declared large-ζ behaviour.
    pub fn decay(&self) -> DecayTag {
        self.decay
    }

    /// Stored sample grid (diagnostic mirror of the callable).
    pub fn grid(&self) -> &[f64] {
        &self.grid
    }

    /// Stored sample values paired with [`Self::grid`].
    pub fn samples(&self) -> &[Complex64] {
        &self.values
    }

    /// Trapezoidal square-integrability proxy with a declared-decay tail
    /// estimate; `tail_fraction` should stay below the caller's tolerance.
    pub fn l2_proxy(&self) -> L2Proxy {
        let mut head = 0.0;
        for w in self.grid.windows(2) {
            let (a, b) = (w[0], w[1]);
            let fa = self.value(a).norm_sqr();
            let fb = self.value(b).norm_sqr();
            head += 0.5 * (fa + fb) * (b - a);
        }
        let edge = self.value(self.support_end).norm_sqr();
        let tail_estimate = match self.decay {
            DecayTag::Exponential { rate } => edge / (2.0 * rate),
            DecayTag::Power { exponent } => {
                if 2.0 * exponent > 1.0 {
                    edge * self.support_end / (2.0 * exponent - 1.0)
                } else {
                    f64::INFINITY
                }
            }
            DecayTag::Compact => 0.0,
        };
        let total = head + tail_estimate;
        L2Proxy {
            head,
            tail_estimate,
            tail_fraction: if total > 0.0 { tail_estimate / total } else { 0.0 },
        }
    }
}

fn validate_decay(decay: DecayTag) -> Result<(), HardyError> {
    match decay {
        DecayTag::Exponential { rate } if !(rate > 0.0) || !rate.is_finite() => {
            Err(HardyError::InvalidParameter {
                detail: format!("exponential decay rate must be positive, got {rate}"),
            })
        }
        DecayTag::Power { exponent } if !exponent.is_finite() => {
            Err(HardyError::InvalidParameter {
                detail: format!("power decay exponent must be finite, got {exponent}"),
            })
        }
        _ => Ok(()),
    }
}

fn csv_error(e: csv::Error) -> HardyError {
    HardyError::InvalidParameter {
        detail: format!("CSV read failed: {e}"),
    }
}

/// A complex-valued spectrum supported on the first quadrant ζ₁, ζ₂ ≥ 0.
#[derive(Clone)]
pub struct QuadrantSpectrum {
    eval: Arc<dyn Fn(f64, f64) -> Complex64 + Send + Sync>,
    support_end: (f64, f64),
    decay: (DecayTag, DecayTag),
}

impl fmt::Debug for QuadrantSpectrum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("QuadrantSpectrum")
            .field("support_end", &self.support_end)
            .field("decay", &self.decay)
            .finish()
    }
}

impl QuadrantSpectrum {
    /// Quadrant spectrum backed by an exact callable.
    pub fn from_fn<F>(
        f: F,
        support_end: (f64, f64),
        decay: (DecayTag, DecayTag),
    ) -> Result<Self, HardyError>
    where
        F: Fn(f64, f64) -> Complex64 + Send + Sync + 'static,
    {
        for end in [support_end.0, support_end.1] {
            if !(end > 0.0) || !end.is_finite() {
                return Err(HardyError::InvalidParameter {
                    detail: format!("support end must be positive and finite, got {end}"),
                });
            }
        }
        validate_decay(decay.0)?;
        validate_decay(decay.1)?;
        Ok(Self {
            eval: Arc::new(f),
            support_end,
            decay,
        })
    }

    /// Product spectrum f̂(ζ₁, ζ₂) = f̂₁(ζ₁)·f̂₂(ζ₂).
    pub fn product(a: &HalfLineSpectrum, b: &HalfLineSpectrum) -> Self {
        let (fa, fb) = (a.clone(), b.clone());
        Self {
            eval: Arc::new(move |z1, z2| fa.value(z1) * fb.value(z2)),
            support_end: (a.support_end(), b.support_end()),
            decay: (a.decay(), b.decay()),
        }
    }

    /// Spectrum value at (ζ₁, ζ₂) (zero outside the quadrant).
    pub fn value(&self, zeta1: f64, zeta2: f64) -> Complex64 {
        if zeta1 < 0.0 || zeta2 < 0.0 {
            Complex64::new(0.0, 0.0)
        } else {
            (self.eval)(zeta1, zeta2)
        }
    }

    /// Per-axis quadrature support ends.
    pub fn support_end(&self) -> (f64, f64) {
        self.support_end
    }

    /// Per-axis declared decay.
    pub fn decay(&self) -> (DecayTag, DecayTag) {
        self.decay
    }
}

/// A point x + iy of the upper-half-plane tube (y > 0).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TubePoint {
    pub x: f64,
    pub y: f64,
}

impl TubePoint {
    /// Validating constructor: requires finite x and y > 0.
    pub fn new(x: f64, y: f64) -> Result<Self, HardyError> {
        if !x.is_finite() || !y.is_finite() {
            return Err(HardyError::InvalidParameter {
                detail: format!("tube point must be finite, got ({x}, {y})"),
            });
        }
        if y <= 0.0 {
            return Err(HardyError::NonPositiveImaginaryPart { y });
        }
        Ok(Self { x, y })
    }

    /// The complex point x + iy.
    pub fn z(&self) -> Complex64 {
        Complex64::new(self.x, self.y)
    }
}

/// A point (x₁ + iy₁, x₂ + iy₂) of the first-quadrant tube (y₁, y₂ > 0).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TubePoint2D {
    pub x1: f64,
    pub y1: f64,
    pub x2: f64,
    pub y2: f64,
}

impl TubePoint2D {
    /// Validating constructor: both imaginary parts strictly positive.
    pub fn new(x1: f64, y1: f64, x2: f64, y2: f64) -> Result<Self, HardyError> {
        for v in [x1, y1, x2, y2] {
            if !v.is_finite() {
                return Err(HardyError::InvalidParameter {
                    detail: format!("tube point must be finite, got ({x1}, {y1}, {x2}, {y2})"),
                });
            }
        }
        for y in [y1, y2] {
            if y <= 0.0 {
                return Err(HardyError::NonPositiveImaginaryPart { y });
            }
        }
        Ok(Self { x1, y1, x2, y2 })
    }

    /// First complex coordinate x₁ + iy₁.
    pub fn z1(&self) -> Complex64 {
        Complex64::new(self.x1, self.y1)
    }

    /// Second complex coordinate x₂ + iy₂.
    pub fn z2(&self) -> Complex64 {
        Complex64::new(self.x2, self.y2)
    }
}
