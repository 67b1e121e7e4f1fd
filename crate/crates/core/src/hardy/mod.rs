//! Hardy-space numerics on the upper half-plane and the first-quadrant tube.
//!
//! The half-line Fourier representation f(z) = (2π)^{-1/2} ∫₀^∞ e^{izζ} f̂(ζ) dζ
//! and the Cauchy boundary representation are implemented as panel
//! quadratures with analytic tail completion, together with the norm
//! identities that make the Hardy property quantitative: Plancherel
//! consistency on horizontal lines, the closed-form norm of the power-law
//! spectrum family, the arc-suppression lemma, and the uniform y^{-1/2}
//! height bound.

mod gamma;
mod quad;
mod spectra;

use std::cell::{Cell, RefCell};
use std::f64::consts::{FRAC_PI_2, PI};

use num_complex::Complex64;
use serde::Serialize;
use thiserror::Error;

pub use gamma::gamma_fn;
pub use spectra::{DecayTag, HalfLineSpectrum, L2Proxy, QuadrantSpectrum, TubePoint, TubePoint2D};

/// Errors for the Hardy-space routines.
#[derive(Debug, Error)]
pub enum HardyError {
    /// Reconstruction requested outside the tube (y ≤ 0).
    #[error("tube point has non-positive imaginary part y = {y}")]
    NonPositiveImaginaryPart { y: f64 },
    /// The declared decay cannot push the quadrature tail below the budget.
    #[error("quadrature tail estimate {estimate:e} exceeds budget {budget:e}")]
    TailNotNegligible { estimate: f64, budget: f64 },
    /// Boundary data does not decay fast enough for the line integral.
    #[error("boundary decay insufficient: {detail}")]
    BoundaryDecayInsufficient { detail: String },
    /// The power-law norm integral requires ν > 1/4.
    #[error("norm integral diverges: nu = {nu} is not > 1/4")]
    NuOutOfRange { nu: f64 },
    /// Malformed spectrum data or out-of-domain arguments.
    #[error("invalid parameter: {detail}")]
    InvalidParameter { detail: String },
    /// I/O failure while reading or writing spectra.
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

/// A reconstructed tube value together with an absolute error estimate
/// (panel-doubling difference plus tail-model mismatch).
#[derive(Debug, Clone, Copy, Serialize)]
pub struct Reconstruction {
    pub value: Complex64,
    pub err_estimate: f64,
}

/// Relative tail budget: the analytic tail completion must be trusted to
/// this fraction of the head integral, otherwise the declared decay is
/// insufficient.
const TAIL_REL_BUDGET: f64 = 1e-12;

/// Truncation half-width for L² line integrals of reconstructed functions;
/// the remainder is completed by an algebraic tail fit.
const LINE_X_CAP: f64 = 150.0;

/// Panels for L² line integrals (doubled once for the error estimate).
const LINE_PANELS: usize = 64;

/// Panel scale for the ζ-integral: ensures the phase advances at most ~π/2
/// per panel so the 16-node rule resolves every oscillation.
fn oscillation_scale(z: Complex64, decay: DecayTag) -> f64 {
    let mut s = 1.0_f64.max(z.re.abs()).max(z.im.abs());
    if let DecayTag::Exponential { rate } = decay {
        s = s.max(rate);
    }
    s
}

/// Core half-line Fourier integral ∫₀^∞ e^{izζ} g(ζ) dζ (no (2π)^{-1/2}
/// prefactor), truncated at `end` with analytic tail completion per the
/// decay tag. `with_error` doubles the panels once for an error estimate.
fn fourier_halfline(
    g: &dyn Fn(f64) -> Complex64,
    z: Complex64,
    end: f64,
    decay: DecayTag,
    with_error: bool,
) -> Result<(Complex64, f64), HardyError> {
    let scale = oscillation_scale(z, decay);
    let n = ((end * scale * std::f64::consts::FRAC_2_PI).ceil() as usize).clamp(8, quad::MAX_PANELS);
    let i = Complex64::new(0.0, 1.0);
    let f = |zeta: f64| (i * z * zeta).exp() * g(zeta);
    let mut value = quad::panels_complex(&f, 0.0, end, n);
    let mut err = 0.0;
    if with_error {
        let fine = quad::panels_complex(&f, 0.0, end, 2 * n);
        err = (fine - value).norm();
        value = fine;
    }
    match decay {
        DecayTag::Compact => {}
        DecayTag::Exponential { rate } => {
            // Model g(ζ) = g(end)·e^{-rate(ζ-end)} beyond the support end:
            // ∫_end^∞ e^{izζ} g = g(end)·e^{iz·end}/(rate − iz).
            let g_end = g(end);
            let tail = g_end * (i * z * end).exp() / (Complex64::new(rate, 0.0) - i * z);
            // Probe the model one step inside the support to bound its error.
            let d = (end * 0.25).min(1.0);
            let predicted = g_end * (rate * d).exp();
            let actual = g(end - d);
            let mismatch = (actual - predicted).norm() / (actual.norm() + 1e-300);
            value += tail;
            err += tail.norm() * mismatch.min(1.0);
        }
        DecayTag::Power { exponent } => {
            let budget = TAIL_REL_BUDGET * value.norm() + 1e-280;
            if exponent <= 1.0 {
                return Err(HardyError::TailNotNegligible {
                    estimate: f64::INFINITY,
                    budget,
                });
            }
            // |tail| ≤ |g(end)|·e^{-y·end}·end/(exponent−1); no oscillatory
            // completion is attempted for power tails.
            let bound = g(end).norm() * (-z.im * end).exp() * end / (exponent - 1.0);
            if bound > budget {
                return Err(HardyError::TailNotNegligible {
                    estimate: bound,
                    budget,
                });
            }
            err += bound;
        }
    }
    Ok((value, err))
}

/// Crate-internal half-line transform ∫₀^∞ e^{izζ} f̂(ζ) dζ of a spectrum
/// (no prefactor). Unlike [`hardy_reconstruct_1d`] it admits boundary
/// points Im z = 0, where decaying spectra still have well-defined values.
pub(crate) fn halfline_transform(
    spec: &HalfLineSpectrum,
    z: Complex64,
) -> Result<(Complex64, f64), HardyError> {
    fourier_halfline(
        &|zeta| spec.value(zeta),
        z,
        spec.support_end(),
        spec.decay(),
        true,
    )
}

/// Upper-half-plane reconstruction f(z) = (2π)^{-1/2} ∫₀^∞ e^{izζ} f̂(ζ) dζ.
pub fn hardy_reconstruct_1d(
    spec: &HalfLineSpectrum,
    z: &TubePoint,
) -> Result<Reconstruction, HardyError> {
    if z.y <= 0.0 {
        return Err(HardyError::NonPositiveImaginaryPart { y: z.y });
    }
    let (raw, err) = fourier_halfline(
        &|zeta| spec.value(zeta),
        z.z(),
        spec.support_end(),
        spec.decay(),
        true,
    )?;
    let c = 1.0 / (2.0 * PI).sqrt();
    Ok(Reconstruction {
        value: c * raw,
        err_estimate: c * err,
    })
}

/// First-quadrant tube reconstruction
/// f(z₁, z₂) = (2π)^{-1} ∬ e^{i(z₁ζ₁ + z₂ζ₂)} f̂(ζ₁, ζ₂) dζ₁ dζ₂
/// by genuine tensor quadrature (inner ζ₁ integral nested in the outer ζ₂
/// integral), so product spectra independently verify factorization.
pub fn hardy_reconstruct_2d(
    spec: &QuadrantSpectrum,
    z: &TubePoint2D,
) -> Result<Reconstruction, HardyError> {
    for y in [z.y1, z.y2] {
        if y <= 0.0 {
            return Err(HardyError::NonPositiveImaginaryPart { y });
        }
    }
    let (end1, end2) = spec.support_end();
    let (decay1, decay2) = spec.decay();
    let inner_fail: RefCell<Option<HardyError>> = RefCell::new(None);
    let inner_err = Cell::new(0.0_f64);
    let outer_integrand = |zeta2: f64| -> Complex64 {
        match fourier_halfline(&|zeta1| spec.value(zeta1, zeta2), z.z1(), end1, decay1, false) {
            Ok((v, e)) => {
                inner_err.set(inner_err.get().max(e));
                v
            }
            Err(e) => {
                inner_fail.borrow_mut().get_or_insert(e);
                Complex64::new(0.0, 0.0)
            }
        }
    };
    let (raw, outer_err) = fourier_halfline(&outer_integrand, z.z2(), end2, decay2, true)?;
    if let Some(e) = inner_fail.into_inner() {
        return Err(e);
    }
    let c = 1.0 / (2.0 * PI);
    Ok(Reconstruction {
        value: c * raw,
        err_estimate: c * (outer_err + end2 * inner_err.get()),
    })
}

/// Boundary data 𝒻 on the real line, the input of the Cauchy representation.
#[derive(Clone)]
pub struct BoundaryLine {
    eval: std::sync::Arc<dyn Fn(f64) -> Complex64 + Send + Sync>,
}

impl BoundaryLine {
    /// Boundary function from an exact callable.
    pub fn from_fn<F>(f: F) -> Self
    where
        F: Fn(f64) -> Complex64 + Send + Sync + 'static,
    {
        Self {
            eval: std::sync::Arc::new(f),
        }
    }

    /// Boundary value at x.
    pub fn value(&self, x: f64) -> Complex64 {
        (self.eval)(x)
    }
}

impl std::fmt::Debug for BoundaryLine {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("BoundaryLine").finish()
    }
}

/// Output of [`cauchy_boundary_rep`]: the Cauchy value at z and the
/// conjugate-kernel residual that vanishes exactly for genuine
/// upper-half-plane Hardy boundary data.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct CauchyRep {
    pub value: Complex64,
    pub conjugate_residual: Complex64,
    pub err_estimate: f64,
}

/// Cauchy representation value = (2πi)^{-1} ∫ 𝒻(ξ)/(ξ−z) dξ together with
/// the conjugate residual (2πi)^{-1} ∫ 𝒻(ξ)/(ξ−z̄) dξ.
pub fn cauchy_boundary_rep(
    boundary: &BoundaryLine,
    z: &TubePoint,
) -> Result<CauchyRep, HardyError> {
    if z.y <= 0.0 {
        return Err(HardyError::NonPositiveImaginaryPart { y: z.y });
    }
    // Decay screen: the line integral needs |𝒻| = O(1/|ξ|) far out.
    let near = [-1.0, 0.0, 1.0, z.x]
        .iter()
        .map(|&x| boundary.value(x).norm())
        .fold(0.0, f64::max);
    let far = boundary
        .value(1e6)
        .norm()
        .max(boundary.value(-1e6).norm());
    if far > 1e-3 * (near + 1e-300) {
        return Err(HardyError::BoundaryDecayInsufficient {
            detail: format!("|f(±1e6)| = {far:.3e} against near-field scale {near:.3e}"),
        });
    }
    let scale = z.y.max(1.0);
    let n = 160;
    let kernel = |pole: Complex64| {
        let b = boundary.clone();
        move |xi: f64| b.value(xi) / (Complex64::new(xi, 0.0) - pole)
    };
    let direct = kernel(z.z());
    let coarse = quad::line_panels_complex(&direct, z.x, scale, None, n);
    let fine = quad::line_panels_complex(&direct, z.x, scale, None, 2 * n);
    let conj = kernel(z.z().conj());
    let conj_fine = quad::line_panels_complex(&conj, z.x, scale, None, 2 * n);
    let two_pi = 2.0 * PI;
    Ok(CauchyRep {
        value: fine / Complex64::new(0.0, two_pi),
        conjugate_residual: conj_fine / Complex64::new(0.0, two_pi),
        err_estimate: (fine - coarse).norm() / two_pi,
    })
}

/// Truncated L² line integral with a three-parameter algebraic tail fit
/// (A/x² + B/x³ + C/x⁴ per side). Returns (value, error estimate).
fn line_l2(h: &dyn Fn(f64) -> f64, scale: f64, x_cap: f64, n: usize) -> (f64, f64) {
    let coarse = quad::line_panels_real(h, 0.0, scale, Some(x_cap), n);
    let fine = quad::line_panels_real(h, 0.0, scale, Some(x_cap), 2 * n);
    let mut err = (fine - coarse).abs();
    let mut total = fine;
    for side in [1.0_f64, -1.0] {
        let tail = algebraic_tail(h, x_cap, side);
        total += tail;
        err += 0.01 * tail;
    }
    (total, err)
}

/// Fit h(side·u) ≈ A/u² + B/u³ + C/u⁴ from samples at u ∈ {X, 1.4X, 1.96X}
/// and integrate the model over (X, ∞).
fn algebraic_tail(h: &dyn Fn(f64) -> f64, x_cap: f64, side: f64) -> f64 {
    let u = [x_cap, 1.4 * x_cap, 1.96 * x_cap];
    let t: Vec<f64> = u.iter().map(|ui| 1.0 / ui).collect();
    let c: Vec<f64> = u.iter().map(|&ui| h(side * ui) * ui * ui).collect();
    let det3 = |m: &[[f64; 3]; 3]| -> f64 {
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    };
    let base = [
        [1.0, t[0], t[0] * t[0]],
        [1.0, t[1], t[1] * t[1]],
        [1.0, t[2], t[2] * t[2]],
    ];
    let d = det3(&base);
    if d == 0.0 {
        return 0.0;
    }
    let mut cols = [0.0_f64; 3];
    for k in 0..3 {
        let mut m = base;
        for row in 0..3 {
            m[row][k] = c[row];
        }
        cols[k] = det3(&m) / d;
    }
    let (a, b, cc) = (cols[0], cols[1], cols[2]);
    let t0 = 1.0 / x_cap;
    (a * t0 + 0.5 * b * t0 * t0 + cc * t0 * t0 * t0 / 3.0).max(0.0)
}

/// Per-height L² norms of a tube function and their supremum (the squared
/// Hardy norm estimate). For genuine Hardy elements the height profile is
/// non-increasing in y.
#[derive(Debug, Clone, Serialize)]
pub struct HardyNormReport {
    /// (y, ∫|f(x+iy)|²dx) in the order supplied.
    pub per_height: Vec<(f64, f64)>,
    /// Supremum of the per-height integrals — the M² estimate.
    pub m_squared: f64,
    /// Non-increasing in y within 1e-9 relative slack.
    pub monotone_nonincreasing: bool,
}

/// Estimate M² = sup_y ∫|f(x+iy)|²dx over the given heights.
pub fn hardy_norm_sup(
    f: &dyn Fn(f64, f64) -> Complex64,
    y_grid: &[f64],
) -> Result<HardyNormReport, HardyError> {
    if y_grid.is_empty() {
        return Err(HardyError::InvalidParameter {
            detail: "height grid must be non-empty".into(),
        });
    }
    for &y in y_grid {
        if !y.is_finite() {
            return Err(HardyError::InvalidParameter {
                detail: format!("height must be finite, got {y}"),
            });
        }
        if y <= 0.0 {
            return Err(HardyError::NonPositiveImaginaryPart { y });
        }
    }
    let mut per_height = Vec::with_capacity(y_grid.len());
    for &y in y_grid {
        let h = |x: f64| f(x, y).norm_sqr();
        let (v, _) = line_l2(&h, y.max(1.0), LINE_X_CAP, LINE_PANELS);
        per_height.push((y, v));
    }
    let m_squared = per_height.iter().fold(0.0_f64, |m, p| m.max(p.1));
    let mut sorted = per_height.clone();
    sorted.sort_by(|a, b| a.0.total_cmp(&b.0));
    let monotone_nonincreasing = sorted
        .windows(2)
        .all(|w| w[1].1 <= w[0].1 * (1.0 + 1e-9) + 1e-300);
    Ok(HardyNormReport {
        per_height,
        m_squared,
        monotone_nonincreasing,
    })
}

/// Two sides of the half-line Plancherel identity at height y:
/// ∫|f(x+iy)|² dx = ∫₀^∞ e^{−2yζ} |f̂(ζ)|² dζ.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct PlancherelCheck {
    pub line_side: f64,
    pub spectral_side: f64,
    pub rel_deviation: f64,
}

/// Compare the line-integral and spectral sides of the Plancherel identity
/// for the reconstruction of `spec` at height y ≥ 0.
pub fn plancherel_check(spec: &HalfLineSpectrum, y: f64) -> Result<PlancherelCheck, HardyError> {
    if !(y >= 0.0) || !y.is_finite() {
        return Err(HardyError::NonPositiveImaginaryPart { y });
    }
    let end = spec.support_end();
    let decay = spec.decay();
    let c = 1.0 / (2.0 * PI).sqrt();
    let failed: RefCell<Option<HardyError>> = RefCell::new(None);
    let f_line = |x: f64| -> f64 {
        match fourier_halfline(&|zeta| spec.value(zeta), Complex64::new(x, y), end, decay, false) {
            Ok((v, _)) => (c * v).norm_sqr(),
            Err(e) => {
                failed.borrow_mut().get_or_insert(e);
                0.0
            }
        }
    };
    let (line_side, _) = line_l2(&f_line, y.max(1.0), LINE_X_CAP, LINE_PANELS);
    if let Some(e) = failed.into_inner() {
        return Err(e);
    }
    let decay_sq = match decay {
        DecayTag::Exponential { rate } => DecayTag::Exponential { rate: 2.0 * rate },
        DecayTag::Power { exponent } => DecayTag::Power {
            exponent: 2.0 * exponent,
        },
        DecayTag::Compact => DecayTag::Compact,
    };
    let g_sq = |zeta: f64| Complex64::new(spec.value(zeta).norm_sqr(), 0.0);
    let (spectral, _) = fourier_halfline(&g_sq, Complex64::new(0.0, 2.0 * y), end, decay_sq, false)?;
    let spectral_side = spectral.re;
    Ok(PlancherelCheck {
        line_side,
        spectral_side,
        rel_deviation: (line_side - spectral_side).abs() / spectral_side.abs().max(1e-300),
    })
}

/// Closed form and quadrature of the power-law-spectrum norm integral
/// ∫_ℝ du (u² + (v+λ)²)^{−2ν} = √π·Γ(2ν−1/2)/Γ(2ν)·(v+λ)^{1−4ν}.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct PropositionNorm {
    pub closed_form: f64,
    pub quadrature: f64,
    pub abs_diff: f64,
}

/// Evaluate both sides of the norm identity for ν > 1/4, v + λ > 0.
pub fn proposition_norm(nu: f64, lam: f64, v: f64) -> Result<PropositionNorm, HardyError> {
    if !(nu > 0.25) || !nu.is_finite() {
        return Err(HardyError::NuOutOfRange { nu });
    }
    let a = v + lam;
    if !(a > 0.0) || !a.is_finite() {
        return Err(HardyError::InvalidParameter {
            detail: format!("v + lambda must be positive, got {a}"),
        });
    }
    let closed_form =
        PI.sqrt() * gamma_fn(2.0 * nu - 0.5) / gamma_fn(2.0 * nu) * a.powf(1.0 - 4.0 * nu);
    let integrand = |u: f64| (u * u + a * a).powf(-2.0 * nu);
    // Head on [0, a] (smooth peak), geometric panels on [a, X] (power law),
    // then the exact binomial-series tail of ∫_X^∞ u^{-4ν}(1+a²/u²)^{-2ν} du.
    let head = quad::panels_real(&integrand, 0.0, a, 8);
    let x_end = (8.0 * a).max(8.0);
    let mid = quad::panels_geometric_real(&integrand, a, x_end, 24);
    let ratio2 = (a / x_end).powi(2);
    let x_pow = x_end.powf(1.0 - 4.0 * nu);
    let mut tail = 0.0;
    let mut binom = 1.0; // C(−2ν, k), built iteratively
    let mut pow = 1.0; // (a/X)^{2k}
    for k in 0..=12_u32 {
        if k > 0 {
            binom *= (-2.0 * nu - (k as f64 - 1.0)) / k as f64;
            pow *= ratio2;
        }
        tail += binom * pow * x_pow / (4.0 * nu - 1.0 + 2.0 * k as f64);
    }
    let quadrature = 2.0 * (head + mid + tail);
    Ok(PropositionNorm {
        closed_form,
        quadrature,
        abs_diff: (closed_form - quadrature).abs(),
    })
}

/// One radius of the arc-suppression estimate.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct ArcCase {
    pub radius: f64,
    /// |(2πi)^{-1} ∫_arc f(ξ)/(ξ−z₀) dξ| at this radius.
    pub arc_magnitude: f64,
    /// The hypothesis bound f₀/(δR).
    pub bound: f64,
    pub within_bound: bool,
}

/// Report of the sufficient-criterion check: decay hypothesis on sampled
/// arcs, boundary square-integrability probe, and the 1/R arc suppression.
#[derive(Debug, Clone, Serialize)]
pub struct LemmaReport {
    /// |f(Re^{iθ})| ≤ f₀·e^{−δR sinθ} on all sampled arcs.
    pub decay_hypothesis_ok: bool,
    /// Growth-ratio probe of ∫|f(x)|²dx over widening windows.
    pub square_integrable_ok: bool,
    pub arc_cases: Vec<ArcCase>,
    /// arc_magnitude·R approximately constant (within a factor 2) between
    /// consecutive radii.
    pub inverse_radius_scaling_ok: bool,
    /// Whether the decay hypothesis holds, i.e. whether the arc claims apply.
    pub applicable: bool,
    /// Vacuously true when not applicable; otherwise every arc is within
    /// its bound and the 1/R scaling holds.
    pub pass: bool,
}

/// Numerically verify the arc-suppression lemma for a function holomorphic
/// on the closed upper half-plane: hypotheses |f| ≤ f₀e^{−δy} and boundary
/// square-integrability, conclusion |F₂(R)| ≤ f₀/(δR) decaying as 1/R.
pub fn lemma_check(
    f: &dyn Fn(Complex64) -> Complex64,
    f0: f64,
    delta: f64,
    radii: &[f64],
) -> Result<LemmaReport, HardyError> {
    if !(delta > 0.0) || !delta.is_finite() || !(f0 >= 0.0) || !f0.is_finite() {
        return Err(HardyError::InvalidParameter {
            detail: format!("need delta > 0 and f0 >= 0, got delta = {delta}, f0 = {f0}"),
        });
    }
    if radii.is_empty() || radii.iter().any(|r| !(*r > 1.0) || !r.is_finite()) {
        return Err(HardyError::InvalidParameter {
            detail: "radii must be finite and > 1".into(),
        });
    }
    let slack = 1.0 + 1e-9;
    // Hypothesis 1: exponential decay on the sampled arcs.
    let mut decay_hypothesis_ok = true;
    for &r in radii {
        for j in 0..=720 {
            let theta = PI * j as f64 / 720.0;
            let zv = Complex64::from_polar(r, theta);
            let bound = f0 * (-delta * r * theta.sin()).exp();
            if f(zv).norm() > bound * slack + 1e-300 {
                decay_hypothesis_ok = false;
                break;
            }
        }
        if !decay_hypothesis_ok {
            break;
        }
    }
    // Hypothesis 2: boundary L² growth-ratio probe over widening windows.
    let window = |x_half: f64, n: usize| -> f64 {
        quad::panels_real(&|x| f(Complex64::new(x, 0.0)).norm_sqr(), -x_half, x_half, n)
    };
    let i1 = window(10.0, 40);
    let i2 = window(100.0, 400);
    let i3 = window(1000.0, 4000);
    let square_integrable_ok = (i3 - i2) <= 0.9 * (i2 - i1) + 1e-9 * i3.abs() + 1e-12;
    // Arc suppression F₂(R) = (2πi)^{-1} ∫_arc f(ξ)/(ξ−z₀) dξ at z₀ = i/2.
    let z0 = Complex64::new(0.0, 0.5);
    let mut arc_cases = Vec::with_capacity(radii.len());
    let mut sorted = radii.to_vec();
    sorted.sort_by(f64::total_cmp);
    for &r in &sorted {
        let n = ((6.0 * delta * r).ceil() as usize).clamp(96, 16384);
        let raw = quad::arc_integral(f, r, z0, n);
        let arc_magnitude = raw.norm() / (2.0 * PI);
        let bound = if f0 == 0.0 { 0.0 } else { f0 / (delta * r) };
        arc_cases.push(ArcCase {
            radius: r,
            arc_magnitude,
            bound,
            within_bound: arc_magnitude <= bound * slack + 1e-300,
        });
    }
    let mut inverse_radius_scaling_ok = true;
    for w in arc_cases.windows(2) {
        let (p, q) = (&w[0], &w[1]);
        if p.arc_magnitude < 1e-300 || q.arc_magnitude < 1e-300 {
            continue; // decay faster than 1/R: vacuously fine
        }
        let ratio = (p.arc_magnitude * p.radius) / (q.arc_magnitude * q.radius);
        if !(0.5..=2.0).contains(&ratio) {
            inverse_radius_scaling_ok = false;
        }
    }
    let applicable = decay_hypothesis_ok;
    let conclusion = arc_cases.iter().all(|c| c.within_bound) && inverse_radius_scaling_ok;
    Ok(LemmaReport {
        decay_hypothesis_ok,
        square_integrable_ok,
        arc_cases,
        inverse_radius_scaling_ok,
        applicable,
        pass: !applicable || conclusion,
    })
}

/// Report of the uniform height-decay bound |f(x+iy)| ≤ f_∞ y^{−1/2}.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct LimitReport {
    /// Analytic constant (4π)^{-1/2}·‖f̂‖₂ from Cauchy–Schwarz.
    pub f_inf_bound: f64,
    /// max over the grid of √y·|f(x+iy)|.
    pub max_scaled: f64,
    /// sup_x |f| at the smallest sampled height.
    pub sup_low: f64,
    /// sup_x |f| at the largest sampled height.
    pub sup_high: f64,
    pub bounded_ok: bool,
    pub vanishing_ok: bool,
    pub pass: bool,
}

/// Verify √y·|f(x+iy)| stays below the analytic bound and that f vanishes
/// as y grows, over the sampled grid.
pub fn limit_behavior_check(
    spec: &HalfLineSpectrum,
    x_list: &[f64],
    y_list: &[f64],
) -> Result<LimitReport, HardyError> {
    if x_list.is_empty() || y_list.is_empty() {
        return Err(HardyError::InvalidParameter {
            detail: "sample grids must be non-empty".into(),
        });
    }
    for &y in y_list {
        if !(y > 0.0) || !y.is_finite() {
            return Err(HardyError::NonPositiveImaginaryPart { y });
        }
    }
    let end = spec.support_end();
    let decay = spec.decay();
    let decay_sq = match decay {
        DecayTag::Exponential { rate } => DecayTag::Exponential { rate: 2.0 * rate },
        DecayTag::Power { exponent } => DecayTag::Power {
            exponent: 2.0 * exponent,
        },
        DecayTag::Compact => DecayTag::Compact,
    };
    let g_sq = |zeta: f64| Complex64::new(spec.value(zeta).norm_sqr(), 0.0);
    let (l2, _) = fourier_halfline(&g_sq, Complex64::new(0.0, 0.0), end, decay_sq, false)?;
    let f_inf_bound = (l2.re / (4.0 * PI)).sqrt();
    let c = 1.0 / (2.0 * PI).sqrt();
    let y_lo = y_list.iter().cloned().fold(f64::INFINITY, f64::min);
    let y_hi = y_list.iter().cloned().fold(0.0_f64, f64::max);
    let mut max_scaled = 0.0_f64;
    let mut sup_low = 0.0_f64;
    let mut sup_high = 0.0_f64;
    for &y in y_list {
        for &x in x_list {
            let (v, _) =
                fourier_halfline(&|zeta| spec.value(zeta), Complex64::new(x, y), end, decay, false)?;
            let m = (c * v).norm();
            max_scaled = max_scaled.max(y.sqrt() * m);
            if y == y_lo {
                sup_low = sup_low.max(m);
            }
            if y == y_hi {
                sup_high = sup_high.max(m);
            }
        }
    }
    let bounded_ok = max_scaled <= f_inf_bound * (1.0 + 1e-6) + 1e-300;
    let vanishing_ok = sup_high <= sup_low * (y_lo / y_hi).powf(0.45) + 1e-300;
    Ok(LimitReport {
        f_inf_bound,
        max_scaled,
        sup_low,
        sup_high,
        bounded_ok,
        vanishing_ok,
        pass: bounded_ok && vanishing_ok,
    })
}

/// Discrete self-duality check of the first-quadrant cone.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct DualConeReport {
    pub n_grid: usize,
    /// Largest angular distance by which the measured dual-cone boundary
    /// deviates from the quadrant boundary {0, π/2}.
    pub max_boundary_deviation: f64,
    pub self_dual: bool,
}

/// Sample the first quadrant on `n` directions and verify that its discrete
/// dual cone is again the (closed) first quadrant.
pub fn dual_cone_check(n: usize) -> Result<DualConeReport, HardyError> {
    if n < 2 {
        return Err(HardyError::InvalidParameter {
            detail: "need at least two cone directions".into(),
        });
    }
    let cone: Vec<(f64, f64)> = (0..n)
        .map(|j| {
            let th = FRAC_PI_2 * j as f64 / (n - 1) as f64;
            (th.cos(), th.sin())
        })
        .collect();
    let m = 8 * n;
    let mut max_dev = 0.0_f64;
    for k in 0..m {
        let psi = -PI + (k as f64 + 0.5) * 2.0 * PI / m as f64;
        let (cy, sy) = (psi.cos(), psi.sin());
        let in_dual = cone.iter().all(|(cx, sx)| cx * cy + sx * sy >= -1e-12);
        let inside_quadrant = (0.0..=FRAC_PI_2).contains(&psi);
        if in_dual != inside_quadrant {
            let boundary_distance = psi.abs().min((psi - FRAC_PI_2).abs());
            max_dev = max_dev.max(boundary_distance);
        }
    }
    Ok(DualConeReport {
        n_grid: n,
        max_boundary_deviation: max_dev,
        self_dual: max_dev <= PI / n as f64,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tol::{
        HARDY_CAUCHY_TOL, HARDY_FACTOR_TOL, HARDY_FOURIER_TOL, PLANCHEREL_TOL,
    };

    /// Closed form of the exponential-spectrum reconstruction.
    fn exp_closed(z: Complex64) -> Complex64 {
        1.0 / ((2.0 * PI).sqrt() * (Complex64::new(1.0, 0.0) - Complex64::new(0.0, 1.0) * z))
    }

    #[test]
    fn reconstruction_matches_closed_form_on_tube_points() {
        let spec = HalfLineSpectrum::exponential();
        let points = [
            (-3.0, 0.2),
            (-1.0, 1.0),
            (-0.3, 0.5),
            (0.0, 1.0),
            (0.0, 0.05),
            (0.4, 2.0),
            (1.0, 0.7),
            (2.5, 3.0),
            (4.0, 0.3),
            (-2.0, 5.0),
        ];
        for (x, y) in points {
            let z = TubePoint::new(x, y).unwrap();
            let rec = hardy_reconstruct_1d(&spec, &z).unwrap();
            let exact = exp_closed(z.z());
            let dev = (rec.value - exact).norm();
            assert!(dev < HARDY_FOURIER_TOL, "dev {dev:e} at ({x}, {y})");
        }
        // Spot value: z = i gives (2π)^{-1/2}/2.
        let z = TubePoint::new(0.0, 1.0).unwrap();
        let rec = hardy_reconstruct_1d(&spec, &z).unwrap();
        let expect = 0.5 / (2.0 * PI).sqrt();
        assert!((rec.value.re - expect).abs() < HARDY_FOURIER_TOL);
        assert!(rec.value.im.abs() < HARDY_FOURIER_TOL);
    }

    #[test]
    fn zero_spectrum_and_invalid_tube_points() {
        let zero = HalfLineSpectrum::from_fn(
            |_| Complex64::new(0.0, 0.0),
            10.0,
            DecayTag::Compact,
        )
        .unwrap();
        let z = TubePoint::new(0.3, 0.8).unwrap();
        let rec = hardy_reconstruct_1d(&zero, &z).unwrap();
        assert_eq!(rec.value, Complex64::new(0.0, 0.0));
        assert!(matches!(
            TubePoint::new(0.0, -1.0),
            Err(HardyError::NonPositiveImaginaryPart { .. })
        ));
        let bad = TubePoint { x: 0.0, y: 0.0 };
        assert!(matches!(
            hardy_reconstruct_1d(&zero, &bad),
            Err(HardyError::NonPositiveImaginaryPart { .. })
        ));
    }

    #[test]
    fn power_tail_budget_is_enforced() {
        let slow = HalfLineSpectrum::from_fn(
            |zeta| Complex64::new((1.0 + zeta).powf(-1.5), 0.0),
            10.0,
            DecayTag::Power { exponent: 1.5 },
        )
        .unwrap();
        let z = TubePoint::new(0.0, 0.05).unwrap();
        assert!(matches!(
            hardy_reconstruct_1d(&slow, &z),
            Err(HardyError::TailNotNegligible { .. })
        ));
    }

    #[test]
    fn cauchy_representation_agrees_with_fourier_representation() {
        // Boundary data of the exponential-spectrum element.
        let boundary = BoundaryLine::from_fn(|x| exp_closed(Complex64::new(x, 0.0)));
        let z = TubePoint::new(0.0, 2.0).unwrap();
        let rep = cauchy_boundary_rep(&boundary, &z).unwrap();
        let exact = exp_closed(z.z());
        assert!(
            (rep.value - exact).norm() < HARDY_CAUCHY_TOL,
            "value dev {:e}",
            (rep.value - exact).norm()
        );
        assert!(
            rep.conjugate_residual.norm() < HARDY_CAUCHY_TOL,
            "conjugate residual {:e}",
            rep.conjugate_residual.norm()
        );
        // Off-axis point as well.
        let z = TubePoint::new(1.3, 0.9).unwrap();
        let rep = cauchy_boundary_rep(&boundary, &z).unwrap();
        assert!((rep.value - exp_closed(z.z())).norm() < HARDY_CAUCHY_TOL);
        assert!(rep.conjugate_residual.norm() < HARDY_CAUCHY_TOL);
    }

    #[test]
    fn cauchy_negative_control_and_guards() {
        // A real even Gaussian is not Hardy boundary data: for real 𝒻 the
        // conjugate integral is the complex conjugate of the direct one, so
        // the residual has the same magnitude as the value.
        let gauss = BoundaryLine::from_fn(|x| Complex64::new((-x * x).exp(), 0.0));
        let z = TubePoint::new(0.0, 2.0).unwrap();
        let rep = cauchy_boundary_rep(&gauss, &z).unwrap();
        let ratio = rep.conjugate_residual.norm() / rep.value.norm();
        assert!((0.9..=1.1).contains(&ratio), "ratio {ratio}");
        // Zero boundary → (0, 0).
        let zero = BoundaryLine::from_fn(|_| Complex64::new(0.0, 0.0));
        let rep = cauchy_boundary_rep(&zero, &z).unwrap();
        assert_eq!(rep.value, Complex64::new(0.0, 0.0));
        assert_eq!(rep.conjugate_residual, Complex64::new(0.0, 0.0));
        // Non-decaying boundary data is rejected.
        let flat = BoundaryLine::from_fn(|_| Complex64::new(1.0, 0.0));
        assert!(matches!(
            cauchy_boundary_rep(&flat, &z),
            Err(HardyError::BoundaryDecayInsufficient { .. })
        ));
    }

    #[test]
    fn plancherel_and_height_monotonicity() {
        let spec = HalfLineSpectrum::exponential();
        // Spectral side closed form: ∫ e^{-2yζ} e^{-2ζ} dζ = 1/(2+2y).
        for y in [0.1, 0.5, 1.0, 2.0] {
            let chk = plancherel_check(&spec, y).unwrap();
            let exact = 1.0 / (2.0 + 2.0 * y);
            assert!(
                chk.rel_deviation < PLANCHEREL_TOL,
                "deviation {:e} at y = {y}",
                chk.rel_deviation
            );
            assert!((chk.spectral_side - exact).abs() < 1e-12 * exact);
        }
        // Hardy norm: supremum approached as y → 0 equals ∫|f̂|² = 1/2.
        let spec2 = spec.clone();
        let f = move |x: f64, y: f64| {
            let z = TubePoint::new(x, y).unwrap();
            hardy_reconstruct_1d(&spec2, &z).unwrap().value
        };
        let report = hardy_norm_sup(&f, &[0.001, 0.1, 0.5, 1.0, 2.0]).unwrap();
        assert!(report.monotone_nonincreasing);
        let m2_exact = 1.0 / (2.0 + 2.0 * 0.001);
        assert!(
            (report.m_squared - m2_exact).abs() < PLANCHEREL_TOL * m2_exact,
            "M² = {} vs {}",
            report.m_squared,
            m2_exact
        );
    }

    #[test]
    fn proposition_norm_closed_forms() {
        // ν = 1/2, v+λ = 1: both sides are exactly π.
        let p = proposition_norm(0.5, 1.0, 0.0).unwrap();
        assert!((p.closed_form - PI).abs() < 1e-12);
        assert!((p.quadrature - PI).abs() < 1e-10);
        // ν = 1, v+λ = 1: π/2. ν = 1, v+λ = 2: π/16.
        let p = proposition_norm(1.0, 0.5, 0.5).unwrap();
        assert!((p.closed_form - PI / 2.0).abs() < 1e-12);
        assert!(p.abs_diff < 1e-10);
        let p = proposition_norm(1.0, 2.0, 0.0).unwrap();
        assert!((p.closed_form - PI / 16.0).abs() < 1e-13);
        assert!(p.abs_diff < 1e-10);
        // Full acceptance grid at relative 1e-8.
        for nu in [0.5, 1.0, 1.5] {
            for a in [0.5, 1.0, 2.0] {
                let p = proposition_norm(nu, a, 0.0).unwrap();
                assert!(
                    p.abs_diff < 1e-8 * p.closed_form.abs(),
                    "nu={nu} a={a}: {:e}",
                    p.abs_diff
                );
            }
        }
        assert!(matches!(
            proposition_norm(0.25, 1.0, 0.0),
            Err(HardyError::NuOutOfRange { .. })
        ));
        assert!(matches!(
            proposition_norm(1.0, 0.0, 0.0),
            Err(HardyError::InvalidParameter { .. })
        ));
    }

    #[test]
    fn lemma_cases() {
        // f(z) = e^{iz}: satisfies the decay hypothesis with f0 = 1, δ = 1;
        // arcs are suppressed like 1/R.
        let f = |z: Complex64| (Complex64::new(0.0, 1.0) * z).exp();
        let report = lemma_check(&f, 1.0, 1.0, &[10.0, 100.0, 1000.0]).unwrap();
        assert!(report.decay_hypothesis_ok);
        assert!(!report.square_integrable_ok); // |e^{ix}| = 1 is not L²
        assert!(report.arc_cases.iter().all(|c| c.within_bound));
        assert!(report.inverse_radius_scaling_ok);
        assert!(report.pass);
        // f(z) = 1/(z+2i): violates the exponential hypothesis; no claim.
        let g = |z: Complex64| 1.0 / (z + Complex64::new(0.0, 2.0));
        let report = lemma_check(&g, 1.0, 1.0, &[10.0, 100.0]).unwrap();
        assert!(!report.decay_hypothesis_ok);
        assert!(report.square_integrable_ok);
        assert!(!report.applicable);
        assert!(report.pass); // vacuous
        // f ≡ 0 passes trivially.
        let zero = |_: Complex64| Complex64::new(0.0, 0.0);
        let report = lemma_check(&zero, 0.0, 1.0, &[10.0]).unwrap();
        assert!(report.decay_hypothesis_ok && report.pass);
    }

    #[test]
    fn limit_behavior_of_the_exponential_spectrum() {
        let spec = HalfLineSpectrum::exponential();
        let xs: Vec<f64> = (-10..=10).map(|k| k as f64 * 0.5).collect();
        let ys = [0.25, 1.0, 4.0, 1000.0];
        let report = limit_behavior_check(&spec, &xs, &ys).unwrap();
        // sup_x |f(x+iy)| = (2π)^{-1/2}/(1+y); √y times that is maximal at
        // y = 1 where Cauchy–Schwarz is saturated: max_scaled == f_inf.
        assert!(report.bounded_ok, "scaled max {} vs bound {}", report.max_scaled, report.f_inf_bound);
        assert!(report.max_scaled > 0.99 * report.f_inf_bound);
        assert!(report.vanishing_ok);
        assert!(report.pass);
        let zero =
            HalfLineSpectrum::from_fn(|_| Complex64::new(0.0, 0.0), 5.0, DecayTag::Compact)
                .unwrap();
        let report = limit_behavior_check(&zero, &xs, &[0.5, 2.0]).unwrap();
        assert!(report.pass);
    }

    #[test]
    fn quadrant_reconstruction_factorizes() {
        let e = HalfLineSpectrum::exponential();
        let q = QuadrantSpectrum::product(&e, &e);
        // z = (i, i): (2π)^{-1}·(1/2)·(1/2).
        let z = TubePoint2D::new(0.0, 1.0, 0.0, 1.0).unwrap();
        let rec = hardy_reconstruct_2d(&q, &z).unwrap();
        let expect = 0.25 / (2.0 * PI);
        assert!(
            (rec.value - Complex64::new(expect, 0.0)).norm() < HARDY_FACTOR_TOL,
            "dev {:e}",
            (rec.value - Complex64::new(expect, 0.0)).norm()
        );
        // Generic points: tensor quadrature equals the product of the 1D
        // reconstructions (factorization property).
        for (x1, y1, x2, y2) in [(0.7, 0.4, -1.1, 0.9), (-0.5, 1.5, 0.3, 0.6)] {
            let z2 = TubePoint2D::new(x1, y1, x2, y2).unwrap();
            let rec = hardy_reconstruct_2d(&q, &z2).unwrap();
            let p1 = hardy_reconstruct_1d(&e, &TubePoint::new(x1, y1).unwrap()).unwrap();
            let p2 = hardy_reconstruct_1d(&e, &TubePoint::new(x2, y2).unwrap()).unwrap();
            let prod = p1.value * p2.value;
            let rel = (rec.value - prod).norm() / prod.norm();
            assert!(rel < HARDY_FACTOR_TOL, "rel {rel:e}");
        }
        // Zero spectrum → 0.
        let zq = QuadrantSpectrum::from_fn(
            |_, _| Complex64::new(0.0, 0.0),
            (5.0, 5.0),
            (DecayTag::Compact, DecayTag::Compact),
        )
        .unwrap();
        let rec = hardy_reconstruct_2d(&zq, &z).unwrap();
        assert_eq!(rec.value, Complex64::new(0.0, 0.0));
    }

    #[test]
    fn sampled_spectrum_round_trips_through_csv() {
        let n = 4097;
        let grid: Vec<f64> = (0..n).map(|j| 36.0 * j as f64 / (n - 1) as f64).collect();
        let values: Vec<Complex64> = grid
            .iter()
            .map(|&z| Complex64::new((-z).exp(), 0.0))
            .collect();
        let spec = HalfLineSpectrum::from_samples(
            grid,
            values,
            DecayTag::Exponential { rate: 1.0 },
        )
        .unwrap();
        let mut buf: Vec<u8> = Vec::new();
        spec.write_csv(&mut buf).unwrap();
        let dir = std::env::temp_dir().join("metaconf-hardy-test");
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("spectrum.csv");
        std::fs::write(&path, &buf).unwrap();
        let loaded =
            HalfLineSpectrum::from_csv(&path, DecayTag::Exponential { rate: 1.0 }).unwrap();
        let z = TubePoint::new(0.0, 2.0).unwrap();
        let rec = hardy_reconstruct_1d(&loaded, &z).unwrap();
        let exact = exp_closed(z.z());
        // Linear interpolation on 4097 nodes keeps the reconstruction well
        // inside 1e-4 of the closed form.
        assert!((rec.value - exact).norm() < 1e-4);
        let proxy = loaded.l2_proxy();
        assert!((proxy.head + proxy.tail_estimate - 0.5).abs() < 1e-4);
        // Guards on malformed sample sets.
        assert!(HalfLineSpectrum::from_samples(
            vec![0.0],
            vec![Complex64::new(1.0, 0.0)],
            DecayTag::Compact
        )
        .is_err());
        assert!(HalfLineSpectrum::from_samples(
            vec![1.0, 0.5],
            vec![Complex64::new(1.0, 0.0); 2],
            DecayTag::Compact
        )
        .is_err());
    }

    #[test]
    fn first_quadrant_is_discretely_self_dual() {
        let report = dual_cone_check(64).unwrap();
        assert!(report.self_dual);
        assert!(report.max_boundary_deviation <= PI / 64.0);
    }
}
