//! Analysis battery for the correlator kernels: Wiener–Khintchine
//! positivity, the μ → 0 contraction rate, asymptotic power-law exponents,
//! cusp detection at the origin, and boundedness scans.

use num_complex::Complex64;
use rustfft::FftPlanner;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::corrkernels::{Kernel, KernelError, Point1D, Point2D, QuantumNumbers1D, QuantumNumbers2D};
use crate::corrkernels::{eval_cga_reg_1d, eval_cga_reg_2d, eval_meta1d_reg, eval_meta2d_reg};
use crate::tol::POSITIVITY_TOL;

/// Errors of the analysis layer.
#[derive(Debug, Error)]
pub enum AnalysisError {
    /// The sampling grid cannot resolve the correlation structure
    /// (Nyquist-type failure).
    #[error("grid too coarse: {detail}")]
    GridTooCoarse { detail: String },
    /// Kernel evaluation failed.
    #[error(transparent)]
    Kernel(#[from] KernelError),
    /// Malformed arguments.
    #[error("invalid parameter: {detail}")]
    InvalidParameter { detail: String },
}

/// Symmetric sampling grid r ∈ [−L, L] with `points` samples (wraparound
/// convention; the spectrum is computed with an FFT of this length).
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct GridSpec {
    /// Half-width L.
    pub half_width: f64,
    /// Number of samples N.
    pub points: usize,
}

impl GridSpec {
    fn validate(&self) -> Result<(), AnalysisError> {
        if !(self.half_width > 0.0) || !self.half_width.is_finite() {
            return Err(AnalysisError::InvalidParameter {
                detail: format!("half_width must be positive, got {}", self.half_width),
            });
        }
        if self.points < 8 {
            return Err(AnalysisError::InvalidParameter {
                detail: format!("need at least 8 samples, got {}", self.points),
            });
        }
        Ok(())
    }

    /// Sample spacing Δ = 2L/N.
    pub fn spacing(&self) -> f64 {
        2.0 * self.half_width / self.points as f64
    }

    /// The same window with twice the resolution.
    pub fn doubled(&self) -> Self {
        Self {
            half_width: self.half_width,
            points: self.points * 2,
        }
    }
}

/// Outcome of a Wiener–Khintchine positivity check: the discrete spectrum
/// of the sampled correlator must be non-negative up to rounding.
#[derive(Debug, Clone, Serialize)]
pub struct PositivityReport {
    /// Kernel or control identifier.
    pub kernel: String,
    /// Time difference of the section.
    pub t: f64,
    /// Sampling grid.
    pub grid: GridSpec,
    /// Minimum of the real part of the spectrum.
    pub re_min: f64,
    /// Maximum of the real part of the spectrum.
    pub re_max: f64,
    /// Largest |Im| over the spectrum.
    pub im_max_abs: f64,
    /// Whether the sampled correlator was even within rounding; if so the
    /// spectrum must be real to rounding as well.
    pub input_even: bool,
    /// re_min ≥ −tol·re_max (and spectral realness when the input is even).
    pub pass: bool,
}

struct SpectrumStats {
    re_min: f64,
    re_max: f64,
    im_max_abs: f64,
    input_even: bool,
}

impl SpectrumStats {
    fn pass(&self) -> bool {
        let mut ok = self.re_min >= -POSITIVITY_TOL * self.re_max.max(0.0);
        if self.input_even {
            ok = ok && self.im_max_abs <= 1e-10 * self.re_max.abs() + 1e-300;
        }
        ok
    }

    fn into_report(self, kernel: String, t: f64, grid: GridSpec) -> PositivityReport {
        let pass = self.pass();
        PositivityReport {
            kernel,
            t,
            grid,
            re_min: self.re_min,
            re_max: self.re_max,
            im_max_abs: self.im_max_abs,
            input_even: self.input_even,
            pass,
        }
    }
}

/// Wraparound coordinate of sample j on an N-point grid of spacing Δ.
fn wrap_coord(j: usize, n: usize, dx: f64) -> f64 {
    if j <= n / 2 {
        j as f64 * dx
    } else {
        (j as f64 - n as f64) * dx
    }
}

/// Nyquist guard: the half-decay radius of the sampled section must span at
/// least a few samples.
fn nyquist_guard(samples: &[f64], half: usize, dx: f64) -> Result<(), AnalysisError> {
    let c0 = samples[0].abs();
    if c0 > 0.0 {
        if let Some(j) = (1..=half).find(|&j| samples[j].abs() <= 0.5 * c0) {
            if j < 4 {
                return Err(AnalysisError::GridTooCoarse {
                    detail: format!(
                        "correlator half-decay spans only {j} sample(s) of spacing {dx:.3e}; \
                         refine the grid or shrink the window"
                    ),
                });
            }
        }
    }
    Ok(())
}

fn line_spectrum(samples: &[f64], dx: f64) -> SpectrumStats {
    let n = samples.len();
    let scale = samples.iter().fold(0.0_f64, |m, s| m.max(s.abs()));
    let input_even =
        (1..n).all(|j| (samples[j] - samples[n - j]).abs() <= 1e-12 * scale + 1e-300);
    let mut buf: Vec<Complex64> = samples
        .iter()
        .map(|&s| Complex64::new(s * dx, 0.0))
        .collect();
    FftPlanner::new().plan_fft_forward(n).process(&mut buf);
    let mut re_min = f64::INFINITY;
    let mut re_max = f64::NEG_INFINITY;
    let mut im_max_abs = 0.0_f64;
    for v in &buf {
        re_min = re_min.min(v.re);
        re_max = re_max.max(v.re);
        im_max_abs = im_max_abs.max(v.im.abs());
    }
    SpectrumStats {
        re_min,
        re_max,
        im_max_abs,
        input_even,
    }
}

/// Wiener–Khintchine check of a correlator section given as a callable
/// C(r). Samples on the wraparound grid, FFTs, and tests the real part of
/// the spectrum for non-negativity; for non-even sections the real part of
/// the spectrum is the transform of the even part of C, which is the
/// positive-definiteness certificate.
pub fn wiener_khintchine_fn(
    c: &dyn Fn(f64) -> f64,
    grid: &GridSpec,
) -> Result<PositivityReport, AnalysisError> {
    wiener_khintchine_labelled(c, grid, "custom".into(), 0.0)
}

fn wiener_khintchine_labelled(
    c: &dyn Fn(f64) -> f64,
    grid: &GridSpec,
    label: String,
    t: f64,
) -> Result<PositivityReport, AnalysisError> {
    grid.validate()?;
    let n = grid.points;
    let dx = grid.spacing();
    let mut samples = vec![0.0_f64; n];
    for (j, s) in samples.iter_mut().enumerate() {
        let r = wrap_coord(j, n, dx);
        *s = c(r);
        if !s.is_finite() {
            return Err(AnalysisError::InvalidParameter {
                detail: format!("correlator sample at r = {r} is not finite"),
            });
        }
    }
    nyquist_guard(&samples, n / 2, dx)?;
    Ok(line_spectrum(&samples, dx).into_report(label, t, *grid))
}

/// Wiener–Khintchine check of a 1D kernel at fixed time difference t over
/// the spatial separation grid.
pub fn wiener_khintchine_1d(
    kernel: &Kernel,
    t: f64,
    grid: &GridSpec,
) -> Result<PositivityReport, AnalysisError> {
    kernel.eval_sep1(t, 0.0)?; // surface kernel errors eagerly
    let f = |r: f64| {
        kernel
            .eval_sep1(t, r)
            .map(|res| res.value.re)
            .unwrap_or(f64::NAN)
    };
    wiener_khintchine_labelled(&f, grid, kernel.kind().name().into(), t)
}

/// Wiener–Khintchine check of a radial section of a 2D kernel: the line
/// r ↦ C(t, r cos φ, r sin φ) through the origin at angle φ.
pub fn wiener_khintchine_radial(
    kernel: &Kernel,
    t: f64,
    phi: f64,
    grid: &GridSpec,
) -> Result<PositivityReport, AnalysisError> {
    kernel.eval_sep2(t, 0.0, 0.0)?;
    let (cp, sp) = (phi.cos(), phi.sin());
    let f = |r: f64| {
        kernel
            .eval_sep2(t, r * cp, r * sp)
            .map(|res| res.value.re)
            .unwrap_or(f64::NAN)
    };
    let label = format!("{}@phi={:.1}deg", kernel.kind().name(), phi.to_degrees());
    wiener_khintchine_labelled(&f, grid, label, t)
}

/// Wiener–Khintchine check of a 2D kernel over the full separation plane:
/// the grid is applied to both axes and the spectrum is the 2D DFT.
pub fn wiener_khintchine_2d(
    kernel: &Kernel,
    t: f64,
    grid: &GridSpec,
) -> Result<PositivityReport, AnalysisError> {
    grid.validate()?;
    kernel.eval_sep2(t, 0.0, 0.0)?;
    let n = grid.points;
    let dx = grid.spacing();
    let mut samples = vec![0.0_f64; n * n];
    for j in 0..n {
        let rp = wrap_coord(j, n, dx);
        for k in 0..n {
            let rq = wrap_coord(k, n, dx);
            let v = kernel.eval_sep2(t, rp, rq)?.value.re;
            if !v.is_finite() {
                return Err(AnalysisError::InvalidParameter {
                    detail: format!("correlator sample at ({rp}, {rq}) is not finite"),
                });
            }
            samples[j * n + k] = v;
        }
    }
    // Nyquist guard along both axes through the origin.
    let row0: Vec<f64> = (0..n).map(|k| samples[k]).collect();
    nyquist_guard(&row0, n / 2, dx)?;
    let col0: Vec<f64> = (0..n).map(|j| samples[j * n]).collect();
    nyquist_guard(&col0, n / 2, dx)?;
    let scale = samples.iter().fold(0.0_f64, |m, s| m.max(s.abs()));
    let input_even = (0..n).all(|j| {
        (0..n).all(|k| {
            let ij = (n - j) % n;
            let ik = (n - k) % n;
            (samples[j * n + k] - samples[ij * n + ik]).abs() <= 1e-12 * scale + 1e-300
        })
    });
    let mut data: Vec<Complex64> = samples
        .iter()
        .map(|&s| Complex64::new(s * dx * dx, 0.0))
        .collect();
    let fft = FftPlanner::new().plan_fft_forward(n);
    for row in data.chunks_exact_mut(n) {
        fft.process(row);
    }
    let mut col = vec![Complex64::new(0.0, 0.0); n];
    for k in 0..n {
        for j in 0..n {
            col[j] = data[j * n + k];
        }
        fft.process(&mut col);
        for j in 0..n {
            data[j * n + k] = col[j];
        }
    }
    let mut re_min = f64::INFINITY;
    let mut re_max = f64::NEG_INFINITY;
    let mut im_max_abs = 0.0_f64;
    for v in &data {
        re_min = re_min.min(v.re);
        re_max = re_max.max(v.re);
        im_max_abs = im_max_abs.max(v.im.abs());
    }
    let stats = SpectrumStats {
        re_min,
        re_max,
        im_max_abs,
        input_even,
    };
    Ok(stats.into_report(format!("{}@plane", kernel.kind().name()), t, *grid))
}

/// One sampled mass value of the contraction-rate check.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct MuLimitEntry {
    pub mu: f64,
    /// max over the separation grid of |meta(μ) − galilean limit|.
    pub max_abs_error: f64,
}

/// Report of the μ → 0 contraction check: the regularized meta-conformal
/// kernel must approach the regularized galilean kernel at a rate
/// proportional to μ.
#[derive(Debug, Clone, Serialize)]
pub struct MuLimitReport {
    pub entries: Vec<MuLimitEntry>,
    /// Error ratios between consecutive μ values.
    pub ratios: Vec<f64>,
    /// Each ratio within 20% of the corresponding μ ratio.
    pub linear_in_mu: bool,
    /// At every grid point the error shrinks monotonically with μ.
    pub pointwise_monotone: bool,
    /// At Δr = 0 the two kernels agree exactly for every μ.
    pub exact_at_origin: bool,
    pub pass: bool,
}

fn mu_limit_report(
    mus: &[f64],
    errors: Vec<Vec<f64>>, // errors[k][i]: μ index k, grid index i
    origin_exact: bool,
) -> Result<MuLimitReport, AnalysisError> {
    let entries: Vec<MuLimitEntry> = mus
        .iter()
        .zip(&errors)
        .map(|(&mu, row)| MuLimitEntry {
            mu,
            max_abs_error: row.iter().fold(0.0_f64, |m, e| m.max(*e)),
        })
        .collect();
    let mut ratios = Vec::with_capacity(entries.len().saturating_sub(1));
    let mut linear_in_mu = true;
    for w in entries.windows(2) {
        let expected = w[0].mu / w[1].mu;
        if w[0].max_abs_error < 1e-300 && w[1].max_abs_error < 1e-300 {
            ratios.push(expected); // identically zero errors: vacuously linear
            continue;
        }
        let measured = w[0].max_abs_error / w[1].max_abs_error;
        ratios.push(measured);
        if !(0.8 * expected..=1.2 * expected).contains(&measured) {
            linear_in_mu = false;
        }
    }
    let n_pts = errors.first().map_or(0, Vec::len);
    let mut pointwise_monotone = true;
    for i in 0..n_pts {
        for k in 1..errors.len() {
            if errors[k][i] > errors[k - 1][i] * (1.0 + 1e-9) + 1e-18 {
                pointwise_monotone = false;
            }
        }
    }
    let pass = linear_in_mu && pointwise_monotone && origin_exact;
    Ok(MuLimitReport {
        entries,
        ratios,
        linear_in_mu,
        pointwise_monotone,
        exact_at_origin: origin_exact,
        pass,
    })
}

fn validate_mus(mus: &[f64]) -> Result<(), AnalysisError> {
    if mus.len() < 2 {
        return Err(AnalysisError::InvalidParameter {
            detail: "need at least two mass values".into(),
        });
    }
    if mus.iter().any(|m| !(*m > 0.0) || !m.is_finite()) {
        return Err(AnalysisError::InvalidParameter {
            detail: "mass values must be positive and finite".into(),
        });
    }
    if mus.windows(2).any(|w| w[1] >= w[0]) {
        return Err(AnalysisError::InvalidParameter {
            detail: "mass values must be strictly decreasing".into(),
        });
    }
    Ok(())
}

/// Contraction-rate check in one dimension: |meta(μ) − galilean| over the
/// grid, for each μ, against the regularized galilean kernel at α = 1,
/// F0 = 1.
pub fn mu_limit_check_1d(
    delta: f64,
    gamma: f64,
    t: f64,
    mus: &[f64],
    r_grid: &[f64],
) -> Result<MuLimitReport, AnalysisError> {
    validate_mus(mus)?;
    if r_grid.is_empty() {
        return Err(AnalysisError::InvalidParameter {
            detail: "separation grid must be non-empty".into(),
        });
    }
    let origin = Point1D::default();
    let cga_qn = QuantumNumbers1D {
        delta,
        gamma,
        mu: 0.0,
    };
    let cga_at = |r: f64| -> Result<f64, AnalysisError> {
        Ok(eval_cga_reg_1d(&Point1D { t, r }, &origin, &cga_qn, &cga_qn, 1.0, 1.0)?
            .value
            .re)
    };
    let mut errors = Vec::with_capacity(mus.len());
    let mut origin_exact = true;
    for &mu in mus {
        let qn = QuantumNumbers1D { delta, gamma, mu };
        let mut row = Vec::with_capacity(r_grid.len());
        for &r in r_grid {
            let meta = eval_meta1d_reg(&Point1D { t, r }, &origin, &qn, &qn)?.value.re;
            row.push((meta - cga_at(r)?).abs());
        }
        let meta0 = eval_meta1d_reg(&Point1D { t, r: 0.0 }, &origin, &qn, &qn)?.value.re;
        if meta0 != cga_at(0.0)? {
            origin_exact = false;
        }
        errors.push(row);
    }
    mu_limit_report(mus, errors, origin_exact)
}

/// Contraction-rate check in two dimensions against the separated
/// regularized galilean kernel at α = 1, F0 = 1.
pub fn mu_limit_check_2d(
    delta: f64,
    gamma_par: f64,
    gamma_perp: f64,
    t: f64,
    mus: &[f64],
    points: &[(f64, f64)],
) -> Result<MuLimitReport, AnalysisError> {
    validate_mus(mus)?;
    if points.is_empty() {
        return Err(AnalysisError::InvalidParameter {
            detail: "separation grid must be non-empty".into(),
        });
    }
    let origin = Point2D::default();
    let cga_qn = QuantumNumbers2D {
        delta,
        gamma_par,
        gamma_perp,
        mu: 0.0,
    };
    let cga_at = |rp: f64, rq: f64| -> Result<f64, AnalysisError> {
        Ok(eval_cga_reg_2d(
            &Point2D {
                t,
                r_par: rp,
                r_perp: rq,
            },
            &origin,
            &cga_qn,
            &cga_qn,
            1.0,
            1.0,
        )?
        .value
        .re)
    };
    let mut errors = Vec::with_capacity(mus.len());
    let mut origin_exact = true;
    for &mu in mus {
        let qn = QuantumNumbers2D {
            delta,
            gamma_par,
            gamma_perp,
            mu,
        };
        let mut row = Vec::with_capacity(points.len());
        for &(rp, rq) in points {
            let meta = eval_meta2d_reg(
                &Point2D {
                    t,
                    r_par: rp,
                    r_perp: rq,
                },
                &origin,
                &qn,
                &qn,
            )?
            .value
            .re;
            row.push((meta - cga_at(rp, rq)?).abs());
        }
        let meta0 = eval_meta2d_reg(
            &Point2D {
                t,
                r_par: 0.0,
                r_perp: 0.0,
            },
            &origin,
            &qn,
            &qn,
        )?
        .value
        .re;
        if meta0 != cga_at(0.0, 0.0)? {
            origin_exact = false;
        }
        errors.push(row);
    }
    mu_limit_report(mus, errors, origin_exact)
}

/// Log–log slope fit of an asymptotic radial power law.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct SlopeFit {
    /// Fitted slope of ln C against ln r.
    pub slope: f64,
    /// Ordinary-least-squares standard error of the slope.
    pub stderr: f64,
    /// The analytic exponent −2|γ∥/μ|.
    pub expected: f64,
    /// Radial fit window (start, end).
    pub window: (f64, f64),
    pub n_points: usize,
    /// |slope − expected| ≤ tol.
    pub pass: bool,
}

/// Fit the asymptotic radial exponent of a regularized meta-conformal
/// kernel along the ray at angle φ (odd kernels: φ = 0 for 1D). The window
/// starts at three times the crossover radius r* where the transverse
/// angle has saturated to 90% of its limit, and spans two decades.
pub fn asymptotic_exponent(
    kernel: &Kernel,
    t: f64,
    phi: f64,
    tol: f64,
) -> Result<SlopeFit, AnalysisError> {
    if !(tol > 0.0) || !tol.is_finite() {
        return Err(AnalysisError::InvalidParameter {
            detail: format!("tolerance must be positive, got {tol}"),
        });
    }
    let (expected, mu, two_d) = match kernel {
        Kernel::Meta1DReg { qn1, .. } => {
            if phi != 0.0 {
                return Err(AnalysisError::InvalidParameter {
                    detail: "1D sections only exist at phi = 0".into(),
                });
            }
            (-2.0 * (qn1.gamma / qn1.mu).abs(), qn1.mu.abs(), false)
        }
        Kernel::Meta2DReg { qn1, .. } => {
            (-2.0 * (qn1.gamma_par / qn1.mu).abs(), qn1.mu.abs(), true)
        }
        _ => {
            return Err(AnalysisError::InvalidParameter {
                detail: format!(
                    "asymptotic exponents are defined for the regularized \
                     meta-conformal kernels, not {:?}",
                    kernel.kind()
                ),
            })
        }
    };
    // Crossover radius: the arctangent argument reaches 0.9·tan φ at
    // X = μ r cos φ / t = 9.
    let r_star = 9.0 * t.abs() / (mu * phi.cos().abs().max(0.1));
    let window = (3.0 * r_star, 300.0 * r_star);
    let n_points = 64usize;
    let (cp, sp) = (phi.cos(), phi.sin());
    let mut xs = Vec::with_capacity(n_points);
    let mut ys = Vec::with_capacity(n_points);
    for k in 0..n_points {
        let r = window.0 * (window.1 / window.0).powf(k as f64 / (n_points - 1) as f64);
        let v = if two_d {
            kernel.eval_sep2(t, r * cp, r * sp)?.value.re
        } else {
            kernel.eval_sep1(t, r)?.value.re
        };
        if !(v > 0.0) {
            return Err(AnalysisError::InvalidParameter {
                detail: format!("non-positive section value {v} at r = {r}"),
            });
        }
        xs.push(r.ln());
        ys.push(v.ln());
    }
    let n = n_points as f64;
    let xm = xs.iter().sum::<f64>() / n;
    let ym = ys.iter().sum::<f64>() / n;
    let sxx: f64 = xs.iter().map(|x| (x - xm) * (x - xm)).sum();
    let sxy: f64 = xs.iter().zip(&ys).map(|(x, y)| (x - xm) * (y - ym)).sum();
    let slope = sxy / sxx;
    let intercept = ym - slope * xm;
    let ss_res: f64 = xs
        .iter()
        .zip(&ys)
        .map(|(x, y)| {
            let e = y - (slope * x + intercept);
            e * e
        })
        .sum();
    let stderr = (ss_res / (n - 2.0) / sxx).sqrt();
    Ok(SlopeFit {
        slope,
        stderr,
        expected,
        window,
        n_points,
        pass: (slope - expected).abs() <= tol,
    })
}

/// One-sided derivatives of a radial section at the origin.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct CuspReport {
    /// Right derivative C'(0⁺) (Richardson-extrapolated one-sided quotient).
    pub right_slope: f64,
    /// Left derivative C'(0⁻).
    pub left_slope: f64,
    /// |right − left|.
    pub gap: f64,
    /// gap ≤ 1e−6·max(1, |right|, |left|).
    pub smooth: bool,
}

/// Detect a cusp of the section c at the origin with second-order one-sided
/// difference quotients at steps h and h/2, Richardson-extrapolated.
pub fn cusp_detect(c: &dyn Fn(f64) -> f64, h: f64) -> Result<CuspReport, AnalysisError> {
    if !(h > 0.0) || !h.is_finite() {
        return Err(AnalysisError::InvalidParameter {
            detail: format!("step must be positive and finite, got {h}"),
        });
    }
    let c0 = c(0.0);
    let right = |h: f64| (-3.0 * c0 + 4.0 * c(h) - c(2.0 * h)) / (2.0 * h);
    let left = |h: f64| (3.0 * c0 - 4.0 * c(-h) + c(-2.0 * h)) / (2.0 * h);
    let right_slope = (4.0 * right(0.5 * h) - right(h)) / 3.0;
    let left_slope = (4.0 * left(0.5 * h) - left(h)) / 3.0;
    if !right_slope.is_finite() || !left_slope.is_finite() {
        return Err(AnalysisError::InvalidParameter {
            detail: "section is not finite near the origin".into(),
        });
    }
    let gap = (right_slope - left_slope).abs();
    Ok(CuspReport {
        right_slope,
        left_slope,
        gap,
        smooth: gap <= 1e-6 * right_slope.abs().max(left_slope.abs()).max(1.0),
    })
}

/// Boundedness scan of a 1D kernel section at fixed t.
#[derive(Debug, Clone, Serialize)]
pub struct BoundednessReport {
    /// Largest |C| over the grid (singular samples excluded).
    pub sup_value: f64,
    /// Location of the supremum.
    pub sup_location: f64,
    /// The amplitude bound |t|^{−2δ₁}.
    pub bound: f64,
    /// sup ≤ bound·(1 + 1e−12).
    pub bound_respected: bool,
    /// The supremum sits on the grid point closest to Δr = 0.
    pub sup_at_origin: bool,
    /// Grid point nearest the singular locus, if any sample was flagged
    /// (exactly singular, non-finite, or exceeding 10× the bound).
    pub singular_location: Option<f64>,
    /// Number of flagged samples.
    pub n_singular_points: usize,
    /// Bounded with the supremum at the origin and no flagged samples.
    pub pass: bool,
}

/// Scan |C(t, r)| over the separation grid: verify sup |C| = |t|^{−2δ₁}
/// attained at Δr = 0 for bounded kernels, and locate the singular locus
/// of holomorphic ones.
pub fn boundedness_scan(
    kernel: &Kernel,
    t: f64,
    r_grid: &[f64],
) -> Result<BoundednessReport, AnalysisError> {
    if r_grid.len() < 2 {
        return Err(AnalysisError::InvalidParameter {
            detail: "separation grid needs at least two points".into(),
        });
    }
    if r_grid.windows(2).any(|w| w[1] <= w[0]) {
        return Err(AnalysisError::InvalidParameter {
            detail: "separation grid must be strictly increasing".into(),
        });
    }
    let bound = t.abs().powf(-2.0 * kernel.delta1());
    let mut sup_value = f64::NEG_INFINITY;
    let mut sup_location = f64::NAN;
    let mut flagged: Vec<(f64, f64)> = Vec::new(); // (|C| or ∞, r)
    for &r in r_grid {
        let res = kernel.eval_sep1(t, r)?;
        if res.is_singular || !res.value.norm().is_finite() {
            flagged.push((f64::INFINITY, r));
            continue;
        }
        let mag = res.value.norm();
        if mag > 10.0 * bound {
            flagged.push((mag, r));
        }
        if mag > sup_value {
            sup_value = mag;
            sup_location = r;
        }
    }
    // The grid point nearest the origin, for the "supremum at Δr = 0" test.
    let origin_point = r_grid
        .iter()
        .cloned()
        .min_by(|a, b| a.abs().total_cmp(&b.abs()))
        .unwrap();
    let bound_respected = sup_value <= bound * (1.0 + 1e-12);
    let sup_at_origin = sup_location == origin_point;
    let singular_location = flagged
        .iter()
        .max_by(|a, b| a.0.total_cmp(&b.0))
        .map(|&(_, r)| r);
    Ok(BoundednessReport {
        sup_value,
        sup_location,
        bound,
        bound_respected,
        sup_at_origin,
        n_singular_points: flagged.len(),
        pass: bound_respected && sup_at_origin && flagged.is_empty(),
        singular_location,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corrkernels::CorrelatorKind;

    fn meta1d_reg_kernel(delta: f64, gamma: f64, mu: f64) -> Kernel {
        Kernel::symmetric_1d(
            CorrelatorKind::Meta1DReg,
            QuantumNumbers1D { delta, gamma, mu },
        )
        .unwrap()
    }

    fn meta2d_reg_kernel(delta: f64, gamma_par: f64, gamma_perp: f64, mu: f64) -> Kernel {
        Kernel::symmetric_2d(
            CorrelatorKind::Meta2DReg,
            QuantumNumbers2D {
                delta,
                gamma_par,
                gamma_perp,
                mu,
            },
        )
        .unwrap()
    }

    #[test]
    fn gaussian_control_is_positive_definite() {
        let grid = GridSpec {
            half_width: 30.0,
            points: 4096,
        };
        let report = wiener_khintchine_fn(&|r| (-0.5 * r * r).exp(), &grid).unwrap();
        assert!(report.input_even);
        assert!(report.pass, "re_min = {:e}", report.re_min);
        assert!(report.re_min >= -POSITIVITY_TOL * report.re_max);
    }

    #[test]
    fn rectangular_pulse_is_flagged_negative() {
        let grid = GridSpec {
            half_width: 20.0,
            points: 4096,
        };
        let pulse = |r: f64| if r.abs() <= 1.0 { 1.0 } else { 0.0 };
        let report = wiener_khintchine_fn(&pulse, &grid).unwrap();
        assert!(!report.pass);
        assert!(report.re_min < -POSITIVITY_TOL * report.re_max);
    }

    #[test]
    fn unresolvable_correlation_is_rejected() {
        let grid = GridSpec {
            half_width: 200.0,
            points: 1024,
        };
        let narrow = |r: f64| (-r * r / (2.0 * 0.01 * 0.01)).exp();
        assert!(matches!(
            wiener_khintchine_fn(&narrow, &grid),
            Err(AnalysisError::GridTooCoarse { .. })
        ));
    }

    #[test]
    fn regularized_1d_kernel_is_positive_definite_and_stable_under_refinement() {
        let kernel = meta1d_reg_kernel(0.22, 0.33, 1.0);
        let grid = GridSpec {
            half_width: 200.0,
            points: 1 << 14,
        };
        let report = wiener_khintchine_1d(&kernel, 1.0, &grid).unwrap();
        assert!(report.input_even);
        assert!(report.pass, "re_min = {:e} re_max = {:e}", report.re_min, report.re_max);
        let refined = wiener_khintchine_1d(&kernel, 1.0, &grid.doubled()).unwrap();
        assert!(refined.pass);
        let widened = wiener_khintchine_1d(
            &kernel,
            1.0,
            &GridSpec {
                half_width: 400.0,
                points: 1 << 15,
            },
        )
        .unwrap();
        assert!(widened.pass);
    }

    #[test]
    fn radial_sections_of_the_2d_kernel_are_positive_definite() {
        // The 2D sections decay like r^{-1/2}, so the window must be wide
        // enough that the periodization seam kink (∝ L^{-3/2}) stays below
        // the positivity tolerance.
        let grid = GridSpec {
            half_width: 400.0,
            points: 1 << 15,
        };
        // Pure algebraic kernel (γ⊥ = 0): sections at all four angles.
        let alg = meta2d_reg_kernel(0.22, 0.25, 0.0, 1.0);
        for phi_deg in [0.0_f64, 30.0, 60.0, 90.0] {
            let report =
                wiener_khintchine_radial(&alg, 1.0, phi_deg.to_radians(), &grid).unwrap();
            assert!(report.pass, "phi = {phi_deg}: re_min = {:e}", report.re_min);
        }
        // With a transverse rapidity the section is no longer even; the
        // real part of the spectrum must still be non-negative.
        let full = meta2d_reg_kernel(0.22, 0.25, 1.5, 1.0);
        for phi_deg in [30.0_f64, 60.0] {
            let report =
                wiener_khintchine_radial(&full, 1.0, phi_deg.to_radians(), &grid).unwrap();
            assert!(
                report.pass,
                "phi = {phi_deg}: re_min = {:e}, re_max = {:e}",
                report.re_min,
                report.re_max
            );
            let refined =
                wiener_khintchine_radial(&full, 1.0, phi_deg.to_radians(), &grid.doubled())
                    .unwrap();
            assert!(refined.pass);
        }
    }

    #[test]
    fn plane_spectrum_of_the_2d_kernel_is_positive_definite() {
        // Plane-integrable parameter set (γ∥/μ = 2): the section tails decay
        // like r^{-4}, so the periodized plane spectrum is resolvable on a
        // moderate grid. Slow-tail parameter sets are covered by the radial
        // section checks above.
        let grid = GridSpec {
            half_width: 40.0,
            points: 1 << 11,
        };
        let alg = meta2d_reg_kernel(0.22, 2.0, 0.0, 1.0);
        let report = wiener_khintchine_2d(&alg, 1.0, &grid).unwrap();
        assert!(report.input_even);
        assert!(
            report.pass,
            "re_min = {:e}, re_max = {:e}, im = {:e}",
            report.re_min, report.re_max, report.im_max_abs
        );
    }

    #[test]
    fn contraction_error_is_linear_in_mu() {
        // Keep |Δr/t| ≲ 1 so the largest μ already sits in the linear
        // regime of the expansion error ~ μ·γ·(Δr/t)².
        let mus = [1e-1, 1e-2, 1e-3, 1e-4];
        let r_grid: Vec<f64> = (-20..=20).map(|k| k as f64 * 0.05).collect();
        let report = mu_limit_check_1d(0.22, 0.3, 1.0, &mus, &r_grid).unwrap();
        assert!(report.exact_at_origin);
        assert!(report.pointwise_monotone);
        assert!(report.linear_in_mu, "ratios {:?}", report.ratios);
        assert!(report.pass);
        for ratio in &report.ratios {
            assert!((8.0..=12.0).contains(ratio), "ratio {ratio}");
        }
        let pts: Vec<(f64, f64)> = (-6..=6)
            .flat_map(|a| (-6..=6).map(move |b| (a as f64 * 0.1, b as f64 * 0.1)))
            .collect();
        let report = mu_limit_check_2d(0.3, 0.4, 0.2, 1.0, &mus, &pts).unwrap();
        assert!(report.pass, "2D ratios {:?}", report.ratios);
    }

    #[test]
    fn contraction_error_magnitude_matches_the_first_order_estimate() {
        // γ = 1, |Δr/t| = 1, μ = 1e-3: the relative error of the
        // contracted kernel is ≈ μ·γ·(Δr/t)²/2 and stays below 1e-2.
        let meta = meta1d_reg_kernel(0.22, 1.0, 1e-3);
        let cga = Kernel::symmetric_1d(
            CorrelatorKind::CgaReg1D,
            QuantumNumbers1D {
                delta: 0.22,
                gamma: 1.0,
                mu: 0.0,
            },
        )
        .unwrap();
        let a = meta.eval_sep1(1.0, 1.0).unwrap().value.re;
        let b = cga.eval_sep1(1.0, 1.0).unwrap().value.re;
        let rel = (a - b).abs() / b.abs();
        assert!(rel < 1e-2, "relative error {rel:e}");
        assert!(rel > 1e-5, "relative error suspiciously small: {rel:e}");
    }

    #[test]
    fn asymptotic_exponents_match_the_rapidity_ratio() {
        // 1D: γ/μ = 1/4 → slope −1/2.
        let k1 = meta1d_reg_kernel(0.22, 0.25, 1.0);
        let fit = asymptotic_exponent(&k1, 1.0, 0.0, 0.02).unwrap();
        assert!(fit.pass, "slope {} vs {}", fit.slope, fit.expected);
        assert!((fit.expected + 0.5).abs() < 1e-15);
        // 2D, γ⊥ = 0: slope −1/2 at every angle.
        let k2 = meta2d_reg_kernel(0.22, 0.25, 0.0, 1.0);
        for phi_deg in [0.0_f64, 30.0, 60.0, 90.0] {
            let fit = asymptotic_exponent(&k2, 1.0, phi_deg.to_radians(), 0.02).unwrap();
            assert!(fit.pass, "phi = {phi_deg}: slope {}", fit.slope);
        }
        // Crossover case with a transverse rapidity: looser tolerance.
        let k3 = meta2d_reg_kernel(0.22, 0.25, 1.5, 1.0);
        for phi_deg in [30.0_f64, 60.0] {
            let fit = asymptotic_exponent(&k3, 1.0, phi_deg.to_radians(), 0.05).unwrap();
            assert!(fit.pass, "phi = {phi_deg}: slope {}", fit.slope);
        }
        // γ∥ = 0: the algebraic factor is absent and the slope vanishes.
        let k4 = meta2d_reg_kernel(0.22, 0.0, 1.5, 1.0);
        let fit = asymptotic_exponent(&k4, 1.0, 1.0, 0.02).unwrap();
        assert_eq!(fit.expected, 0.0);
        assert!(fit.pass, "slope {}", fit.slope);
        // Unsupported kernels are rejected.
        let holo = Kernel::symmetric_1d(
            CorrelatorKind::Meta1DHolo,
            QuantumNumbers1D {
                delta: 0.2,
                gamma: 0.3,
                mu: 1.0,
            },
        )
        .unwrap();
        assert!(matches!(
            asymptotic_exponent(&holo, 1.0, 0.0, 0.02),
            Err(AnalysisError::InvalidParameter { .. })
        ));
    }

    #[test]
    fn cusps_and_smooth_sections_are_distinguished() {
        // 1D regularized kernel at γ/μ = 1/4: C(r) = (1+|r|)^{-1/2},
        // one-sided slopes ∓1/2, gap 1.
        let k1 = meta1d_reg_kernel(0.0, 0.25, 1.0);
        let section = |r: f64| k1.eval_sep1(1.0, r).unwrap().value.re;
        let report = cusp_detect(&section, 1e-3).unwrap();
        assert!((report.right_slope + 0.5).abs() < 1e-7, "right {}", report.right_slope);
        assert!((report.left_slope - 0.5).abs() < 1e-7, "left {}", report.left_slope);
        assert!((report.gap - 1.0).abs() < 1e-7);
        assert!(!report.smooth);
        // 2D section transverse to the preferred axis with γ⊥ = 0 is smooth.
        let k2 = meta2d_reg_kernel(0.0, 0.25, 0.0, 1.0);
        let transverse = |r: f64| k2.eval_sep2(1.0, 0.0, r).unwrap().value.re;
        let report = cusp_detect(&transverse, 1e-3).unwrap();
        assert!(report.smooth, "gap {:e}", report.gap);
        // Cusp parity: the gap is even in the section angle.
        let k3 = meta2d_reg_kernel(0.0, 0.25, 0.6, 1.0);
        let gap_at = |phi: f64| {
            let (cp, sp) = (phi.cos(), phi.sin());
            let k = &k3;
            let sec = move |r: f64| k.eval_sep2(1.0, r * cp, r * sp).unwrap().value.re;
            cusp_detect(&sec, 1e-3).unwrap().gap
        };
        let plus = gap_at(0.5);
        let minus = gap_at(-0.5);
        assert!(
            (plus - minus).abs() <= 1e-10 * plus.abs().max(1.0),
            "gap(+φ) = {plus}, gap(−φ) = {minus}"
        );
    }

    #[test]
    fn boundedness_scan_separates_the_two_kernels() {
        let r_grid: Vec<f64> = (0..481).map(|j| -1.0 + j as f64 / 240.0).collect();
        let t = -0.6;
        // Regularized kernel: bounded by |t|^{−2δ} with the sup at Δr = 0.
        let reg = meta1d_reg_kernel(0.22, 0.33, 1.0);
        let report = boundedness_scan(&reg, t, &r_grid).unwrap();
        assert!(report.pass);
        assert!(report.bound_respected);
        assert!(report.sup_at_origin);
        assert_eq!(report.n_singular_points, 0);
        assert!((report.sup_value - report.bound).abs() <= 1e-12 * report.bound);
        // Holomorphic kernel: singular ray at μΔr = −t, i.e. r = 0.6.
        let holo = Kernel::symmetric_1d(
            CorrelatorKind::Meta1DHolo,
            QuantumNumbers1D {
                delta: 0.22,
                gamma: 0.33,
                mu: 1.0,
            },
        )
        .unwrap();
        let report = boundedness_scan(&holo, t, &r_grid).unwrap();
        assert!(!report.pass);
        let loc = report.singular_location.expect("singular point detected");
        assert!(
            (loc - 0.6).abs() <= 1.0 / 240.0 + 1e-12,
            "singular location {loc}"
        );
    }
}
