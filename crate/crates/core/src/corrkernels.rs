//! Closed-form two-point correlator kernels.
//!
//! Conventions shared by all kernels:
//!
//! - `t = t1 − t2` must be nonzero; exact coincidence is a domain error.
//! - Scaled separations use each field's own mass: `Δ(μr) = μ1 r1 − μ2 r2`.
//! - Holomorphic kernels use principal-branch complex powers, and flag
//!   `is_singular` on the interior singular locus (a vanishing light-cone
//!   base).
//! - Regularized kernels use `|t|` and symmetrized rapidity dependence; they
//!   are real, bounded by `|t|^(−2 δ1)` and never singular away from `t = 0`.
//! - Kronecker selection rules are enforced with an absolute tolerance
//!   [`EQ_TOL`](crate::tol::EQ_TOL); a violation yields the value `0`
//!   together with a structured [`Diagnostic`], not an error.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::tol::{EQ_TOL, REALNESS_TOL};

/// Errors for kernel evaluation. Selection-rule violations are *not* errors
/// (they produce a zero value with a diagnostic); these are genuine domain
/// or parameter problems.
#[derive(thiserror::Error, Debug, Clone, PartialEq)]
pub enum KernelError {
    /// `t1 − t2 = 0` is outside every kernel's domain.
    #[error("coincident times: t1 - t2 = 0 is outside the kernel domain")]
    SingularTime,
    /// Coincident (anti)holomorphic coordinates in the plane form.
    #[error("coincident coordinates: z1 = z2 or conjugates coincide")]
    SingularSeparation,
    /// Non-finite or inconsistent quantum numbers / parameters.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    /// A 1D kernel was queried with 2D points or vice versa.
    #[error("kernel expects {expected}-dimensional points, got {got}-dimensional access")]
    WrongDimension {
        /// Spatial dimension of the kernel.
        expected: u8,
        /// Spatial dimension of the attempted access.
        got: u8,
    },
}

/// Quantum numbers of a 1D field: scaling dimension `δ`, rapidity `γ` and
/// mass `μ`.
#[derive(Clone, Copy, PartialEq, Debug, Serialize, Deserialize)]
pub struct QuantumNumbers1D {
    /// Scaling dimension `δ`.
    pub delta: f64,
    /// Rapidity `γ`.
    pub gamma: f64,
    /// Kinematic mass `μ` (nonzero for meta-conformal kernels; ignored by
    /// the conformal-galilean kernels, where the `μ → 0` contraction has
    /// already been taken).
    pub mu: f64,
}

/// Quantum numbers of a 2D field.
#[derive(Clone, Copy, PartialEq, Debug, Serialize, Deserialize)]
pub struct QuantumNumbers2D {
    /// Scaling dimension `δ`.
    pub delta: f64,
    /// Parallel rapidity `γ∥`.
    pub gamma_par: f64,
    /// Transverse rapidity `γ⊥`.
    pub gamma_perp: f64,
    /// Kinematic mass `μ` (same conventions as in 1D).
    pub mu: f64,
}

/// Space-time point of a 1D field.
#[derive(Clone, Copy, PartialEq, Debug, Default, Serialize, Deserialize)]
pub struct Point1D {
    /// Time coordinate.
    pub t: f64,
    /// Space coordinate.
    pub r: f64,
}

/// Space-time point of a 2D field.
#[derive(Clone, Copy, PartialEq, Debug, Default, Serialize, Deserialize)]
pub struct Point2D {
    /// Time coordinate.
    pub t: f64,
    /// Parallel space coordinate.
    pub r_par: f64,
    /// Transverse space coordinate.
    pub r_perp: f64,
}

/// Structured diagnostic attached to an [`EvalResult`].
#[derive(Clone, Copy, PartialEq, Debug, Serialize)]
pub enum Diagnostic {
    /// A Kronecker selection rule failed: the kernel vanishes identically.
    SelectionRule {
        /// Which compared quantity differed.
        quantity: &'static str,
        /// Value for the first field.
        left: f64,
        /// Value for the second field.
        right: f64,
    },
    /// The kernel is unbounded: it diverges along the reported spatial
    /// direction (upstream); `dr_perp = 0` for 1D kernels.
    UnboundedDirection {
        /// Parallel (or sole) component of the divergence direction.
        dr: f64,
        /// Transverse component of the divergence direction.
        dr_perp: f64,
    },
}

/// Result of a kernel evaluation.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct EvalResult {
    /// The correlator value (NaN when `is_singular`).
    pub value: Complex64,
    /// True exactly on the interior singular locus of a holomorphic kernel.
    pub is_singular: bool,
    /// True when the value is real up to floating-point dust.
    pub is_real: bool,
    /// Selection-rule or unboundedness metadata, if any.
    pub diagnostic: Option<Diagnostic>,
}

impl EvalResult {
    fn of(value: Complex64) -> Self {
        EvalResult {
            value,
            is_singular: false,
            is_real: value.im == 0.0 || value.im.abs() <= REALNESS_TOL * value.norm(),
            diagnostic: None,
        }
    }

    fn singular() -> Self {
        EvalResult {
            value: Complex64::new(f64::NAN, f64::NAN),
            is_singular: true,
            is_real: false,
            diagnostic: None,
        }
    }

    fn selection_zero(diag: Diagnostic) -> Self {
        EvalResult {
            value: Complex64::new(0.0, 0.0),
            is_singular: false,
            is_real: true,
            diagnostic: Some(diag),
        }
    }

    fn with_diagnostic(mut self, diag: Diagnostic) -> Self {
        self.diagnostic = Some(diag);
        self
    }

    /// The real part, checked: panics in debug builds when the value has a
    /// non-negligible imaginary part.
    pub fn real(&self) -> f64 {
        debug_assert!(self.is_singular || self.is_real, "value {} is not real", self.value);
        self.value.re
    }
}

fn require_finite(name: &str, x: f64) -> Result<(), KernelError> {
    if x.is_finite() {
        Ok(())
    } else {
        Err(KernelError::InvalidParameter(format!(
            "{} must be finite, got {}",
            name, x
        )))
    }
}

fn validate_qn1(qn: &QuantumNumbers1D, need_mu: bool) -> Result<(), KernelError> {
    require_finite("delta", qn.delta)?;
    require_finite("gamma", qn.gamma)?;
    require_finite("mu", qn.mu)?;
    if need_mu && qn.mu == 0.0 {
        return Err(KernelError::InvalidParameter(
            "meta-conformal kernels need mu != 0 (use a conformal-galilean kernel at mu = 0)"
                .into(),
        ));
    }
    Ok(())
}

fn validate_qn2(qn: &QuantumNumbers2D, need_mu: bool) -> Result<(), KernelError> {
    require_finite("delta", qn.delta)?;
    require_finite("gamma_par", qn.gamma_par)?;
    require_finite("gamma_perp", qn.gamma_perp)?;
    require_finite("mu", qn.mu)?;
    if need_mu && qn.mu == 0.0 {
        return Err(KernelError::InvalidParameter(
            "meta-conformal kernels need mu != 0 (use a conformal-galilean kernel at mu = 0)"
                .into(),
        ));
    }
    Ok(())
}

/// First failing Kronecker selection rule among `(name, left, right)`
/// candidates, if any.
fn selection(checks: &[(&'static str, f64, f64)]) -> Option<Diagnostic> {
    checks.iter().find_map(|&(quantity, left, right)| {
        if (left - right).abs() > EQ_TOL {
            Some(Diagnostic::SelectionRule {
                quantity,
                left,
                right,
            })
        } else {
            None
        }
    })
}

/// Principal-branch power of a real base.
fn principal_pow(base: f64, exponent: f64) -> Complex64 {
    Complex64::new(base, 0.0).powc(Complex64::new(exponent, 0.0))
}

/// Plane (z-form) ortho-conformal two-point function
/// `C0 (z1−z2)^(−2Δ1) (z̄1−z̄2)^(−2Δ̄1)` with Kronecker selection on both
/// weights; weights may be complex.
///
/// Coincident coordinates (`z1 = z2` or `z̄1 = z̄2`) are a domain error.
pub fn eval_ortho_zform(
    z1: Complex64,
    zbar1: Complex64,
    z2: Complex64,
    zbar2: Complex64,
    delta1: Complex64,
    deltabar1: Complex64,
    delta2: Complex64,
    deltabar2: Complex64,
) -> Result<EvalResult, KernelError> {
    if (delta1 - delta2).norm() > EQ_TOL {
        return Ok(EvalResult::selection_zero(Diagnostic::SelectionRule {
            quantity: "Delta",
            left: delta1.re,
            right: delta2.re,
        }));
    }
    if (deltabar1 - deltabar2).norm() > EQ_TOL {
        return Ok(EvalResult::selection_zero(Diagnostic::SelectionRule {
            quantity: "Deltabar",
            left: deltabar1.re,
            right: deltabar2.re,
        }));
    }
    let dz = z1 - z2;
    let dzbar = zbar1 - zbar2;
    if dz.norm() == 0.0 || dzbar.norm() == 0.0 {
        return Err(KernelError::SingularSeparation);
    }
    let value = dz.powc(-2.0 * delta1) * dzbar.powc(-2.0 * deltabar1);
    Ok(EvalResult::of(value))
}

/// Ortho-conformal two-point function in physical `(t, r)` coordinates:
/// `|t|^(−2δ) [1 + (μr/t)²]^(−δ) exp[−(2γ/μ) arctan(μr/t)]`.
///
/// The `μ → 0` limit is taken analytically (`arctan(μr/t)/μ → r/t`), so
/// `μ = 0` is allowed here and reproduces `|t|^(−2δ) e^(−2γ r/t)`.
pub fn eval_ortho_physical(
    t: f64,
    r: f64,
    qn: &QuantumNumbers1D,
) -> Result<EvalResult, KernelError> {
    validate_qn1(qn, false)?;
    require_finite("t", t)?;
    require_finite("r", r)?;
    if t == 0.0 {
        return Err(KernelError::SingularTime);
    }
    let atan_over_mu = if qn.mu == 0.0 {
        r / t
    } else {
        (qn.mu * r / t).atan() / qn.mu
    };
    let x = if qn.mu == 0.0 { 0.0 } else { qn.mu * r / t };
    let value = t.abs().powf(-2.0 * qn.delta)
        * (1.0 + x * x).powf(-qn.delta)
        * (-2.0 * qn.gamma * atan_over_mu).exp();
    Ok(EvalResult::of(Complex64::new(value, 0.0)))
}

/// Holomorphic (unbounded) 1D meta-conformal kernel
/// `t^(−2δ1) (1 + Δ(μr)/t)^(−2γ1/μ1)` with principal-branch powers and
/// Kronecker selection on `(δ, γ)`.
pub fn eval_meta1d_holo(
    p1: &Point1D,
    p2: &Point1D,
    qn1: &QuantumNumbers1D,
    qn2: &QuantumNumbers1D,
) -> Result<EvalResult, KernelError> {
    validate_qn1(qn1, true)?;
    validate_qn1(qn2, true)?;
    let t = p1.t - p2.t;
    if t == 0.0 {
        return Err(KernelError::SingularTime);
    }
    if let Some(diag) = selection(&[
        ("delta", qn1.delta, qn2.delta),
        ("gamma", qn1.gamma, qn2.gamma),
    ]) {
        return Ok(EvalResult::selection_zero(diag));
    }
    let base = 1.0 + (qn1.mu * p1.r - qn2.mu * p2.r) / t;
    if base == 0.0 {
        return Ok(EvalResult::singular());
    }
    let value =
        principal_pow(t, -2.0 * qn1.delta) * principal_pow(base, -2.0 * qn1.gamma / qn1.mu);
    Ok(EvalResult::of(value))
}

/// Bounded (regularized) 1D meta-conformal kernel
/// `|t|^(−2δ1) (1 + |Δ(μr)/t|)^(−2|γ1/μ1|)` with Kronecker selection on
/// `(δ, γ/μ)`.
pub fn eval_meta1d_reg(
    p1: &Point1D,
    p2: &Point1D,
    qn1: &QuantumNumbers1D,
    qn2: &QuantumNumbers1D,
) -> Result<EvalResult, KernelError> {
    validate_qn1(qn1, true)?;
    validate_qn1(qn2, true)?;
    let t = p1.t - p2.t;
    if t == 0.0 {
        return Err(KernelError::SingularTime);
    }
    if let Some(diag) = selection(&[
        ("delta", qn1.delta, qn2.delta),
        ("gamma/mu", qn1.gamma / qn1.mu, qn2.gamma / qn2.mu),
    ]) {
        return Ok(EvalResult::selection_zero(diag));
    }
    let x = ((qn1.mu * p1.r - qn2.mu * p2.r) / t).abs();
    let value =
        t.abs().powf(-2.0 * qn1.delta) * (1.0 + x).powf(-2.0 * (qn1.gamma / qn1.mu).abs());
    Ok(EvalResult::of(Complex64::new(value, 0.0)))
}

/// Holomorphic (unbounded) 2D meta-conformal kernel
/// `t^(−2δ1) w₊^(−2(γ∥−iγ⊥)/μ) w₋^(−2(γ∥+iγ⊥)/μ)` with
/// `w_± = 1 + (Δ(μr∥) ± i Δ(μr⊥))/t` and Kronecker selection on
/// `(δ, γ∥, γ⊥)`.
pub fn eval_meta2d_holo(
    p1: &Point2D,
    p2: &Point2D,
    qn1: &QuantumNumbers2D,
    qn2: &QuantumNumbers2D,
) -> Result<EvalResult, KernelError> {
    validate_qn2(qn1, true)?;
    validate_qn2(qn2, true)?;
    let t = p1.t - p2.t;
    if t == 0.0 {
        return Err(KernelError::SingularTime);
    }
    if let Some(diag) = selection(&[
        ("delta", qn1.delta, qn2.delta),
        ("gamma_par", qn1.gamma_par, qn2.gamma_par),
        ("gamma_perp", qn1.gamma_perp, qn2.gamma_perp),
    ]) {
        return Ok(EvalResult::selection_zero(diag));
    }
    let x = (qn1.mu * p1.r_par - qn2.mu * p2.r_par) / t;
    let y = (qn1.mu * p1.r_perp - qn2.mu * p2.r_perp) / t;
    let base_plus = Complex64::new(1.0 + x, y);
    let base_minus = Complex64::new(1.0 + x, -y);
    if base_plus.norm() == 0.0 || base_minus.norm() == 0.0 {
        return Ok(EvalResult::singular());
    }
    let gamma_chiral = Complex64::new(qn1.gamma_par, -qn1.gamma_perp);
    let value = principal_pow(t, -2.0 * qn1.delta)
        * base_plus.powc(-2.0 * gamma_chiral / qn1.mu)
        * base_minus.powc(-2.0 * gamma_chiral.conj() / qn1.mu);
    Ok(EvalResult::of(value))
}

/// Bounded (regularized) 2D meta-conformal kernel
/// `|t|^(−2δ1) [(1+|X|)² + Y²]^(−|γ∥1/μ1|) exp(−|2 (γ⊥1/μ1) arctan(Y/(1+X))|)`
/// where `X = Δ(μr∥)/t`, `Y = Δ(μr⊥)/t`; Kronecker selection on
/// `(δ, γ∥/μ, γ⊥/μ)`.
///
/// The arctangent uses the principal branch of the plain ratio, with the
/// conventions `Y = 0 → 0` and `1 + X = 0 → ±π/2`.
pub fn eval_meta2d_reg(
    p1: &Point2D,
    p2: &Point2D,
    qn1: &QuantumNumbers2D,
    qn2: &QuantumNumbers2D,
) -> Result<EvalResult, KernelError> {
    validate_qn2(qn1, true)?;
    validate_qn2(qn2, true)?;
    let t = p1.t - p2.t;
    if t == 0.0 {
        return Err(KernelError::SingularTime);
    }
    if let Some(diag) = selection(&[
        ("delta", qn1.delta, qn2.delta),
        (
            "gamma_par/mu",
            qn1.gamma_par / qn1.mu,
            qn2.gamma_par / qn2.mu,
        ),
        (
            "gamma_perp/mu",
            qn1.gamma_perp / qn1.mu,
            qn2.gamma_perp / qn2.mu,
        ),
    ]) {
        return Ok(EvalResult::selection_zero(diag));
    }
    let x = (qn1.mu * p1.r_par - qn2.mu * p2.r_par) / t;
    let y = (qn1.mu * p1.r_perp - qn2.mu * p2.r_perp) / t;
    let lam_perp = perp_angle(x, y);
    let alg = ((1.0 + x.abs()).powi(2) + y * y).powf(-(qn1.gamma_par / qn1.mu).abs());
    let value = t.abs().powf(-2.0 * qn1.delta)
        * alg
        * (-(2.0 * (qn1.gamma_perp / qn1.mu) * lam_perp).abs()).exp();
    Ok(EvalResult::of(Complex64::new(value, 0.0)))
}

/// Transverse angle `λ⊥ = arctan(Y/(1+X))`, with `Y = 0 → 0` and
/// `1 + X = 0 → ±π/2`.
pub(crate) fn perp_angle(x: f64, y: f64) -> f64 {
    if y == 0.0 {
        0.0
    } else if 1.0 + x == 0.0 {
        y.signum() * std::f64::consts::FRAC_PI_2
    } else {
        (y / (1.0 + x)).atan()
    }
}

/// Naive (unbounded) 1D conformal-galilean kernel
/// `t^(−2δ1) exp(−2 γ1 Δr / t)` with Kronecker selection on `(δ, γ)`.
///
/// The result carries an [`Diagnostic::UnboundedDirection`] marker: at fixed
/// `t` the kernel diverges as `Δr → ∞` along the reported direction.
pub fn eval_cga_naive_1d(
    p1: &Point1D,
    p2: &Point1D,
    qn1: &QuantumNumbers1D,
    qn2: &QuantumNumbers1D,
) -> Result<EvalResult, KernelError> {
    validate_qn1(qn1, false)?;
    validate_qn1(qn2, false)?;
    let t = p1.t - p2.t;
    if t == 0.0 {
        return Err(KernelError::SingularTime);
    }
    if let Some(diag) = selection(&[
        ("delta", qn1.delta, qn2.delta),
        ("gamma", qn1.gamma, qn2.gamma),
    ]) {
        return Ok(EvalResult::selection_zero(diag));
    }
    let dr = p1.r - p2.r;
    let value = principal_pow(t, -2.0 * qn1.delta) * (-2.0 * qn1.gamma * dr / t).exp();
    let mut out = EvalResult::of(value);
    if qn1.gamma != 0.0 {
        out = out.with_diagnostic(Diagnostic::UnboundedDirection {
            dr: -(qn1.gamma / t).signum(),
            dr_perp: 0.0,
        });
    }
    Ok(out)
}

/// Naive (unbounded) 2D conformal-galilean kernel
/// `t^(−2δ1) exp(−4 (γ∥ Δr∥ + γ⊥ Δr⊥) / t)` with Kronecker selection on
/// `(δ, γ∥, γ⊥)`.
pub fn eval_cga_naive_2d(
    p1: &Point2D,
    p2: &Point2D,
    qn1: &QuantumNumbers2D,
    qn2: &QuantumNumbers2D,
) -> Result<EvalResult, KernelError> {
    validate_qn2(qn1, false)?;
    validate_qn2(qn2, false)?;
    let t = p1.t - p2.t;
    if t == 0.0 {
        return Err(KernelError::SingularTime);
    }
    if let Some(diag) = selection(&[
        ("delta", qn1.delta, qn2.delta),
        ("gamma_par", qn1.gamma_par, qn2.gamma_par),
        ("gamma_perp", qn1.gamma_perp, qn2.gamma_perp),
    ]) {
        return Ok(EvalResult::selection_zero(diag));
    }
    let dot = qn1.gamma_par * (p1.r_par - p2.r_par) + qn1.gamma_perp * (p1.r_perp - p2.r_perp);
    let value = principal_pow(t, -2.0 * qn1.delta) * (-4.0 * dot / t).exp();
    let mut out = EvalResult::of(value);
    if qn1.gamma_par != 0.0 || qn1.gamma_perp != 0.0 {
        let norm = (qn1.gamma_par.powi(2) + qn1.gamma_perp.powi(2)).sqrt();
        out = out.with_diagnostic(Diagnostic::UnboundedDirection {
            dr: -t.signum() * qn1.gamma_par / norm,
            dr_perp: -t.signum() * qn1.gamma_perp / norm,
        });
    }
    Ok(out)
}

/// Bounded (regularized) 1D conformal-galilean kernel
/// `F0 |t|^(−2δ1) exp(−2α |γ1 Δr / t|)` with `α > 0`, `F0 > 0`.
pub fn eval_cga_reg_1d(
    p1: &Point1D,
    p2: &Point1D,
    qn1: &QuantumNumbers1D,
    qn2: &QuantumNumbers1D,
    alpha: f64,
    f0: f64,
) -> Result<EvalResult, KernelError> {
    validate_qn1(qn1, false)?;
    validate_qn1(qn2, false)?;
    validate_reg_params(alpha, f0)?;
    let t = p1.t - p2.t;
    if t == 0.0 {
        return Err(KernelError::SingularTime);
    }
    if let Some(diag) = selection(&[
        ("delta", qn1.delta, qn2.delta),
        ("gamma", qn1.gamma, qn2.gamma),
    ]) {
        return Ok(EvalResult::selection_zero(diag));
    }
    let dr = p1.r - p2.r;
    let value =
        f0 * t.abs().powf(-2.0 * qn1.delta) * (-2.0 * alpha * (qn1.gamma * dr / t).abs()).exp();
    Ok(EvalResult::of(Complex64::new(value, 0.0)))
}

/// Bounded (regularized) 2D conformal-galilean kernel in the separated
/// convention:
/// `F0 |t|^(−2δ1) exp(−2α (|γ∥ Δr∥ / t| + |γ⊥ Δr⊥ / t|))`.
pub fn eval_cga_reg_2d(
    p1: &Point2D,
    p2: &Point2D,
    qn1: &QuantumNumbers2D,
    qn2: &QuantumNumbers2D,
    alpha: f64,
    f0: f64,
) -> Result<EvalResult, KernelError> {
    validate_qn2(qn1, false)?;
    validate_qn2(qn2, false)?;
    validate_reg_params(alpha, f0)?;
    let t = p1.t - p2.t;
    if t == 0.0 {
        return Err(KernelError::SingularTime);
    }
    if let Some(diag) = selection(&[
        ("delta", qn1.delta, qn2.delta),
        ("gamma_par", qn1.gamma_par, qn2.gamma_par),
        ("gamma_perp", qn1.gamma_perp, qn2.gamma_perp),
    ]) {
        return Ok(EvalResult::selection_zero(diag));
    }
    let arg = (qn1.gamma_par * (p1.r_par - p2.r_par) / t).abs()
        + (qn1.gamma_perp * (p1.r_perp - p2.r_perp) / t).abs();
    let value = f0 * t.abs().powf(-2.0 * qn1.delta) * (-2.0 * alpha * arg).exp();
    Ok(EvalResult::of(Complex64::new(value, 0.0)))
}

/// Bounded 2D conformal-galilean kernel in the vectorial convention:
/// `F0 |t|^(−2δ1) exp(−2α |γ⃗ · Δr⃗ / t|)`.
pub fn eval_cga_reg_vec_2d(
    p1: &Point2D,
    p2: &Point2D,
    qn1: &QuantumNumbers2D,
    qn2: &QuantumNumbers2D,
    alpha: f64,
    f0: f64,
) -> Result<EvalResult, KernelError> {
    validate_qn2(qn1, false)?;
    validate_qn2(qn2, false)?;
    validate_reg_params(alpha, f0)?;
    let t = p1.t - p2.t;
    if t == 0.0 {
        return Err(KernelError::SingularTime);
    }
    if let Some(diag) = selection(&[
        ("delta", qn1.delta, qn2.delta),
        ("gamma_par", qn1.gamma_par, qn2.gamma_par),
        ("gamma_perp", qn1.gamma_perp, qn2.gamma_perp),
    ]) {
        return Ok(EvalResult::selection_zero(diag));
    }
    let dot = qn1.gamma_par * (p1.r_par - p2.r_par) + qn1.gamma_perp * (p1.r_perp - p2.r_perp);
    let value = f0 * t.abs().powf(-2.0 * qn1.delta) * (-2.0 * alpha * (dot / t).abs()).exp();
    Ok(EvalResult::of(Complex64::new(value, 0.0)))
}

fn validate_reg_params(alpha: f64, f0: f64) -> Result<(), KernelError> {
    if !(alpha.is_finite() && alpha > 0.0) {
        return Err(KernelError::InvalidParameter(format!(
            "alpha must be positive and finite, got {}",
            alpha
        )));
    }
    if !(f0.is_finite() && f0 > 0.0) {
        return Err(KernelError::InvalidParameter(format!(
            "F0 must be positive and finite, got {}",
            f0
        )));
    }
    Ok(())
}

/// Kernel discriminant, used for dispatch and command-line selection.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub enum CorrelatorKind {
    /// Ortho-conformal kernel in physical coordinates.
    Ortho,
    /// Holomorphic 1D meta-conformal kernel.
    Meta1DHolo,
    /// Regularized 1D meta-conformal kernel.
    Meta1DReg,
    /// Holomorphic 2D meta-conformal kernel.
    Meta2DHolo,
    /// Regularized 2D meta-conformal kernel.
    Meta2DReg,
    /// Naive 1D conformal-galilean kernel.
    CgaNaive1D,
    /// Naive 2D conformal-galilean kernel.
    CgaNaive2D,
    /// Regularized 1D conformal-galilean kernel.
    CgaReg1D,
    /// Regularized 2D conformal-galilean kernel.
    CgaReg2D,
}

impl CorrelatorKind {
    /// Stable command-line name.
    pub fn name(self) -> &'static str {
        match self {
            CorrelatorKind::Ortho => "ortho",
            CorrelatorKind::Meta1DHolo => "meta1d-holo",
            CorrelatorKind::Meta1DReg => "meta1d-reg",
            CorrelatorKind::Meta2DHolo => "meta2d-holo",
            CorrelatorKind::Meta2DReg => "meta2d-reg",
            CorrelatorKind::CgaNaive1D => "cga-naive-1d",
            CorrelatorKind::CgaNaive2D => "cga-naive-2d",
            CorrelatorKind::CgaReg1D => "cga-reg-1d",
            CorrelatorKind::CgaReg2D => "cga-reg-2d",
        }
    }

    /// Spatial dimension of the kernel's points.
    pub fn dimension(self) -> u8 {
        match self {
            CorrelatorKind::Ortho
            | CorrelatorKind::Meta1DHolo
            | CorrelatorKind::Meta1DReg
            | CorrelatorKind::CgaNaive1D
            | CorrelatorKind::CgaReg1D => 1,
            _ => 2,
        }
    }
}

impl fmt::Display for CorrelatorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CorrelatorKind {
    type Err = KernelError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "ortho" => Ok(CorrelatorKind::Ortho),
            "meta1d-holo" => Ok(CorrelatorKind::Meta1DHolo),
            "meta1d-reg" => Ok(CorrelatorKind::Meta1DReg),
            "meta2d-holo" => Ok(CorrelatorKind::Meta2DHolo),
            "meta2d-reg" => Ok(CorrelatorKind::Meta2DReg),
            "cga-naive-1d" => Ok(CorrelatorKind::CgaNaive1D),
            "cga-naive-2d" => Ok(CorrelatorKind::CgaNaive2D),
            "cga-reg-1d" => Ok(CorrelatorKind::CgaReg1D),
            "cga-reg-2d" => Ok(CorrelatorKind::CgaReg2D),
            other => Err(KernelError::InvalidParameter(format!(
                "unknown kernel '{}'",
                other
            ))),
        }
    }
}

/// A fully parameterized kernel, evaluable at point pairs.
#[derive(Clone, Debug, Serialize)]
pub enum Kernel {
    /// See [`eval_ortho_physical`].
    Ortho {
        /// Field quantum numbers.
        qn: QuantumNumbers1D,
    },
    /// See [`eval_meta1d_holo`].
    Meta1DHolo {
        /// First field.
        qn1: QuantumNumbers1D,
        /// Second field.
        qn2: QuantumNumbers1D,
    },
    /// See [`eval_meta1d_reg`].
    Meta1DReg {
        /// First field.
        qn1: QuantumNumbers1D,
        /// Second field.
        qn2: QuantumNumbers1D,
    },
    /// See [`eval_meta2d_holo`].
    Meta2DHolo {
        /// First field.
        qn1: QuantumNumbers2D,
        /// Second field.
        qn2: QuantumNumbers2D,
    },
    /// See [`eval_meta2d_reg`].
    Meta2DReg {
        /// First field.
        qn1: QuantumNumbers2D,
        /// Second field.
        qn2: QuantumNumbers2D,
    },
    /// See [`eval_cga_naive_1d`].
    CgaNaive1D {
        /// First field.
        qn1: QuantumNumbers1D,
        /// Second field.
        qn2: QuantumNumbers1D,
    },
    /// See [`eval_cga_naive_2d`].
    CgaNaive2D {
        /// First field.
        qn1: QuantumNumbers2D,
        /// Second field.
        qn2: QuantumNumbers2D,
    },
    /// See [`eval_cga_reg_1d`].
    CgaReg1D {
        /// First field.
        qn1: QuantumNumbers1D,
        /// Second field.
        qn2: QuantumNumbers1D,
        /// Regularization strength `α > 0`.
        alpha: f64,
        /// Positive amplitude `F0`.
        f0: f64,
    },
    /// See [`eval_cga_reg_2d`].
    CgaReg2D {
        /// First field.
        qn1: QuantumNumbers2D,
        /// Second field.
        qn2: QuantumNumbers2D,
        /// Regularization strength `α > 0`.
        alpha: f64,
        /// Positive amplitude `F0`.
        f0: f64,
    },
}

impl Kernel {
    /// Convenience constructor for equal quantum numbers on both fields.
    pub fn symmetric_1d(kind: CorrelatorKind, qn: QuantumNumbers1D) -> Result<Self, KernelError> {
        match kind {
            CorrelatorKind::Ortho => Ok(Kernel::Ortho { qn }),
            CorrelatorKind::Meta1DHolo => Ok(Kernel::Meta1DHolo { qn1: qn, qn2: qn }),
            CorrelatorKind::Meta1DReg => Ok(Kernel::Meta1DReg { qn1: qn, qn2: qn }),
            CorrelatorKind::CgaNaive1D => Ok(Kernel::CgaNaive1D { qn1: qn, qn2: qn }),
            CorrelatorKind::CgaReg1D => Ok(Kernel::CgaReg1D {
                qn1: qn,
                qn2: qn,
                alpha: 1.0,
                f0: 1.0,
            }),
            other => Err(KernelError::WrongDimension {
                expected: other.dimension(),
                got: 1,
            }),
        }
    }

    /// Convenience constructor for equal quantum numbers on both fields (2D).
    pub fn symmetric_2d(kind: CorrelatorKind, qn: QuantumNumbers2D) -> Result<Self, KernelError> {
        match kind {
            CorrelatorKind::Meta2DHolo => Ok(Kernel::Meta2DHolo { qn1: qn, qn2: qn }),
            CorrelatorKind::Meta2DReg => Ok(Kernel::Meta2DReg { qn1: qn, qn2: qn }),
            CorrelatorKind::CgaNaive2D => Ok(Kernel::CgaNaive2D { qn1: qn, qn2: qn }),
            CorrelatorKind::CgaReg2D => Ok(Kernel::CgaReg2D {
                qn1: qn,
                qn2: qn,
                alpha: 1.0,
                f0: 1.0,
            }),
            other => Err(KernelError::WrongDimension {
                expected: other.dimension(),
                got: 2,
            }),
        }
    }

    /// The kernel's discriminant.
    pub fn kind(&self) -> CorrelatorKind {
        match self {
            Kernel::Ortho { .. } => CorrelatorKind::Ortho,
            Kernel::Meta1DHolo { .. } => CorrelatorKind::Meta1DHolo,
            Kernel::Meta1DReg { .. } => CorrelatorKind::Meta1DReg,
            Kernel::Meta2DHolo { .. } => CorrelatorKind::Meta2DHolo,
            Kernel::Meta2DReg { .. } => CorrelatorKind::Meta2DReg,
            Kernel::CgaNaive1D { .. } => CorrelatorKind::CgaNaive1D,
            Kernel::CgaNaive2D { .. } => CorrelatorKind::CgaNaive2D,
            Kernel::CgaReg1D { .. } => CorrelatorKind::CgaReg1D,
            Kernel::CgaReg2D { .. } => CorrelatorKind::CgaReg2D,
        }
    }

    /// Scaling dimension `δ1` of the first field (bound exponent).
    pub fn delta1(&self) -> f64 {
        match self {
            Kernel::Ortho { qn } => qn.delta,
            Kernel::Meta1DHolo { qn1, .. }
            | Kernel::Meta1DReg { qn1, .. }
            | Kernel::CgaNaive1D { qn1, .. }
            | Kernel::CgaReg1D { qn1, .. } => qn1.delta,
            Kernel::Meta2DHolo { qn1, .. }
            | Kernel::Meta2DReg { qn1, .. }
            | Kernel::CgaNaive2D { qn1, .. }
            | Kernel::CgaReg2D { qn1, .. } => qn1.delta,
        }
    }

    /// Evaluate at a pair of 1D points.
    pub fn eval1d(&self, p1: &Point1D, p2: &Point1D) -> Result<EvalResult, KernelError> {
        match self {
            Kernel::Ortho { qn } => eval_ortho_physical(p1.t - p2.t, p1.r - p2.r, qn),
            Kernel::Meta1DHolo { qn1, qn2 } => eval_meta1d_holo(p1, p2, qn1, qn2),
            Kernel::Meta1DReg { qn1, qn2 } => eval_meta1d_reg(p1, p2, qn1, qn2),
            Kernel::CgaNaive1D { qn1, qn2 } => eval_cga_naive_1d(p1, p2, qn1, qn2),
            Kernel::CgaReg1D {
                qn1,
                qn2,
                alpha,
                f0,
            } => eval_cga_reg_1d(p1, p2, qn1, qn2, *alpha, *f0),
            other => Err(KernelError::WrongDimension {
                expected: other.kind().dimension(),
                got: 1,
            }),
        }
    }

    /// Evaluate at a pair of 2D points.
    pub fn eval2d(&self, p1: &Point2D, p2: &Point2D) -> Result<EvalResult, KernelError> {
        match self {
            Kernel::Meta2DHolo { qn1, qn2 } => eval_meta2d_holo(p1, p2, qn1, qn2),
            Kernel::Meta2DReg { qn1, qn2 } => eval_meta2d_reg(p1, p2, qn1, qn2),
            Kernel::CgaNaive2D { qn1, qn2 } => eval_cga_naive_2d(p1, p2, qn1, qn2),
            Kernel::CgaReg2D {
                qn1,
                qn2,
                alpha,
                f0,
            } => eval_cga_reg_2d(p1, p2, qn1, qn2, *alpha, *f0),
            other => Err(KernelError::WrongDimension {
                expected: other.kind().dimension(),
                got: 2,
            }),
        }
    }

    /// Evaluate a 1D kernel at separation `(t, Δr)` (second field at the
    /// origin).
    pub fn eval_sep1(&self, t: f64, dr: f64) -> Result<EvalResult, KernelError> {
        self.eval1d(&Point1D { t, r: dr }, &Point1D::default())
    }

    /// Evaluate a 2D kernel at separation `(t, Δr∥, Δr⊥)`.
    pub fn eval_sep2(&self, t: f64, dr_par: f64, dr_perp: f64) -> Result<EvalResult, KernelError> {
        self.eval2d(
            &Point2D {
                t,
                r_par: dr_par,
                r_perp: dr_perp,
            },
            &Point2D::default(),
        )
    }
}
