//! Finite-difference Ward-identity residuals.
//!
//! A kernel `C` is covariant under a lifted two-body generator
//! `G = Σ_v a_v ∂_v + a_0` when `G C = 0`. The residual is evaluated
//! numerically: exact coefficients from the symbolic operator, derivatives
//! of the kernel by central finite differences, and Richardson
//! extrapolation across step sizes to cancel the leading truncation error.

use num_complex::Complex64;
use serde::Serialize;

use crate::corrkernels::{EvalResult, Kernel, KernelError, Point1D, Point2D};
use crate::liealg::poly::{NumericPoint, Var};
use crate::liealg::{DiffOp, LieError};

/// Order of the central finite-difference stencil.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum FdOrder {
    /// Three-point stencil, error `O(h²)`.
    Two,
    /// Five-point stencil, error `O(h⁴)`.
    Four,
}

impl FdOrder {
    fn power(self) -> i32 {
        match self {
            FdOrder::Two => 2,
            FdOrder::Four => 4,
        }
    }

    fn reach(self) -> f64 {
        match self {
            FdOrder::Two => 1.0,
            FdOrder::Four => 2.0,
        }
    }
}

/// Residual data at one sample point.
#[derive(Clone, Debug, Serialize)]
pub struct WardEntry {
    /// Coordinates of the sample point (variable name, value).
    pub point: Vec<(String, f64)>,
    /// `|C|` at the point (residuals are relative to it).
    pub kernel_magnitude: f64,
    /// Relative residual for each step size.
    pub step_residuals: Vec<f64>,
    /// Richardson-extrapolated relative residual from the two finest steps.
    pub extrapolated: f64,
}

/// Ward-identity residual report for one generator over a point set.
#[derive(Clone, Debug, Serialize)]
pub struct WardReport {
    /// Generator (or dual-equation) identifier.
    pub generator: String,
    /// Finite-difference order used.
    pub order: u8,
    /// Step sizes, as given.
    pub steps: Vec<f64>,
    /// Per-point residuals.
    pub entries: Vec<WardEntry>,
    /// Maximum extrapolated relative residual over all points.
    pub max_residual: f64,
    /// Acceptance tolerance the report was judged against.
    pub tol: f64,
    /// `max_residual <= tol`.
    pub pass: bool,
}

/// Lift two one-body generators to a two-body operator: the first acts on
/// the first field's coordinates as-is, the second is renamed onto the
/// second-field copies.
///
/// Fails when the second generator uses variables without a second-field
/// copy (the vector-component conformal-galilean variables).
pub fn lift_two_body(g1: &DiffOp, g2: &DiffOp) -> Result<DiffOp, LieError> {
    for v in g2.all_vars() {
        if v.second_copy().is_none() {
            return Err(LieError::UnsupportedGenerator(format!(
                "variable {} has no second-field copy; the vector-component family cannot be lifted",
                v
            )));
        }
    }
    Ok(g1.add(&g2.rename(|v| v.second_copy().unwrap_or(v))))
}

fn validate_steps(steps: &[f64]) -> Result<(), LieError> {
    if steps.is_empty() {
        return Err(LieError::InvalidParameter(
            "at least one finite-difference step is required".into(),
        ));
    }
    for &h in steps {
        if !(h > 0.0) {
            return Err(LieError::StepTooLarge(format!(
                "step {} is not positive",
                h
            )));
        }
        if h > 0.01 {
            return Err(LieError::StepTooLarge(format!(
                "step {} exceeds 0.01; the truncation-error contract assumes smaller steps",
                h
            )));
        }
    }
    Ok(())
}

type KernelFn<'a> = &'a dyn Fn(&NumericPoint) -> Result<EvalResult, KernelError>;

fn probe(kernel: KernelFn<'_>, p: &NumericPoint, what: &str) -> Result<Complex64, LieError> {
    let out = kernel(p).map_err(|e| {
        LieError::SingularSamplePoint(format!("{}: kernel evaluation failed: {}", what, e))
    })?;
    if out.is_singular {
        return Err(LieError::SingularSamplePoint(format!(
            "{}: kernel is singular",
            what
        )));
    }
    Ok(out.value)
}

fn central_diff(
    kernel: KernelFn<'_>,
    p: &NumericPoint,
    v: Var,
    h: f64,
    order: FdOrder,
) -> Result<Complex64, LieError> {
    let f = |s: f64| probe(kernel, &p.shifted(v, s), "finite-difference stencil");
    match order {
        FdOrder::Two => Ok((f(h)? - f(-h)?) / (2.0 * h)),
        FdOrder::Four => {
            Ok((-f(2.0 * h)? + 8.0 * f(h)? - 8.0 * f(-h)? + f(-2.0 * h)?) / (12.0 * h))
        }
    }
}

/// Evaluate the relative Ward residual `|G C| / |C|` of `generator` on a
/// kernel seen as a function of the full coordinate set.
///
/// Preconditions: sample points must avoid kernel singularities with a
/// margin of several stencil widths (checked, error
/// [`LieError::SingularSamplePoint`]); steps must be positive and at most
/// `0.01` (checked, error [`LieError::StepTooLarge`]).
pub fn ward_residual(
    kernel: KernelFn<'_>,
    generator: &DiffOp,
    generator_name: &str,
    points: &[NumericPoint],
    steps: &[f64],
    order: FdOrder,
    tol: f64,
) -> Result<WardReport, LieError> {
    validate_steps(steps)?;
    if points.is_empty() {
        return Err(LieError::InvalidParameter(
            "at least one sample point is required".into(),
        ));
    }
    let h_max = steps.iter().cloned().fold(0.0_f64, f64::max);
    let active = generator.active_vars();
    let mut entries = Vec::with_capacity(points.len());
    for p in points {
        let c0 = probe(kernel, p, "sample point")?;
        if c0.norm() < 1e-280 {
            return Err(LieError::InvalidParameter(
                "kernel vanishes at a sample point (selection rule violated?); \
                 relative residuals are undefined"
                    .into(),
            ));
        }
        // Margin check: the stencil and a 3x safety band must stay regular.
        for &v in &active {
            for m in [order.reach() * h_max, 3.0 * order.reach() * h_max] {
                probe(kernel, &p.shifted(v, m), "margin check")?;
                probe(kernel, &p.shifted(v, -m), "margin check")?;
            }
        }
        let (coeff_vals, zeroth_val) = generator.eval_coeffs(p);
        let mut residuals_abs: Vec<Complex64> = Vec::with_capacity(steps.len());
        for &h in steps {
            let mut acc = zeroth_val * c0;
            for &(v, a) in &coeff_vals {
                if a.norm() == 0.0 {
                    continue;
                }
                acc += a * central_diff(kernel, p, v, h, order)?;
            }
            residuals_abs.push(acc);
        }
        let extrapolated_abs = if residuals_abs.len() >= 2 {
            let h1 = steps[steps.len() - 2];
            let h2 = steps[steps.len() - 1];
            let q = (h1 / h2).powi(order.power());
            (q * residuals_abs[residuals_abs.len() - 1] - residuals_abs[residuals_abs.len() - 2])
                / (q - 1.0)
        } else {
            residuals_abs[0]
        };
        let scale = c0.norm();
        entries.push(WardEntry {
            point: generator
                .all_vars()
                .iter()
                .map(|&v| (v.name().to_string(), p.get_re(v)))
                .collect(),
            kernel_magnitude: scale,
            step_residuals: residuals_abs.iter().map(|r| r.norm() / scale).collect(),
            extrapolated: extrapolated_abs.norm() / scale,
        });
    }
    let max_residual = entries
        .iter()
        .map(|e| e.extrapolated)
        .fold(0.0_f64, f64::max);
    Ok(WardReport {
        generator: generator_name.to_string(),
        order: order.power() as u8,
        steps: steps.to_vec(),
        entries,
        max_residual,
        tol,
        pass: max_residual <= tol,
    })
}

/// Adapter: view a 1D two-point kernel as a function of
/// `(t, r, t', r')` numeric coordinates.
pub fn kernel_fn_1d(kernel: &Kernel) -> impl Fn(&NumericPoint) -> Result<EvalResult, KernelError> + '_ {
    move |p: &NumericPoint| {
        let p1 = Point1D {
            t: p.get_re(Var::T),
            r: p.get_re(Var::R),
        };
        let p2 = Point1D {
            t: p.get_re(Var::T2),
            r: p.get_re(Var::R2),
        };
        kernel.eval1d(&p1, &p2)
    }
}

/// Adapter: view a 2D two-point kernel as a function of
/// `(t, r∥, r⊥, t', r∥', r⊥')` numeric coordinates.
pub fn kernel_fn_2d(kernel: &Kernel) -> impl Fn(&NumericPoint) -> Result<EvalResult, KernelError> + '_ {
    move |p: &NumericPoint| {
        let p1 = Point2D {
            t: p.get_re(Var::T),
            r_par: p.get_re(Var::RPar),
            r_perp: p.get_re(Var::RPerp),
        };
        let p2 = Point2D {
            t: p.get_re(Var::T2),
            r_par: p.get_re(Var::RPar2),
            r_perp: p.get_re(Var::RPerp2),
        };
        kernel.eval2d(&p1, &p2)
    }
}

/// Coordinates of the dual-space scaling function
/// `F(η, η̄, t, ξ, ξ̄)`; 1D equations ignore the barred pair.
#[derive(Clone, Copy, Debug, Default)]
pub struct DualPoint {
    /// Dual sum coordinate `η`.
    pub eta: f64,
    /// Conjugate dual sum coordinate `η̄` (2D only).
    pub eta_bar: f64,
    /// Time difference `t`.
    pub t: f64,
    /// Scaled space difference `ξ`.
    pub xi: f64,
    /// Conjugate scaled space difference `ξ̄` (2D only).
    pub xi_bar: f64,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum DualVar {
    Eta,
    EtaBar,
    T,
    Xi,
    XiBar,
}

impl DualPoint {
    fn shifted(&self, v: DualVar, h: f64) -> DualPoint {
        let mut p = *self;
        match v {
            DualVar::Eta => p.eta += h,
            DualVar::EtaBar => p.eta_bar += h,
            DualVar::T => p.t += h,
            DualVar::Xi => p.xi += h,
            DualVar::XiBar => p.xi_bar += h,
        }
        p
    }
}

/// The dual-space covariance equations.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum DualPde {
    /// `(2i ∂_η − (t+ξ) ∂_ξ) F = 0` (1D pair, first member).
    Advect1D,
    /// `(−t ∂_t − ξ ∂_ξ − δ1 − δ2) F = 0` (1D pair, second member).
    Euler1D {
        /// First scaling dimension.
        delta1: f64,
        /// Second scaling dimension.
        delta2: f64,
    },
    /// `(2i ∂_η − (t+ξ) ∂_ξ) F = 0` (2D triple).
    Advect2D,
    /// `(2i ∂_η̄ − (t+ξ̄) ∂_ξ̄) F = 0` (2D triple).
    AdvectBar2D,
    /// `(t ∂_t + ξ ∂_ξ + ξ̄ ∂_ξ̄ + 2 δ1) F = 0` (2D triple).
    Euler2D {
        /// Common scaling dimension.
        delta1: f64,
    },
}

impl DualPde {
    /// Stable identifier for reports.
    pub fn name(&self) -> String {
        match self {
            DualPde::Advect1D => "dual-1d-advection".into(),
            DualPde::Euler1D { .. } => "dual-1d-euler".into(),
            DualPde::Advect2D => "dual-2d-advection".into(),
            DualPde::AdvectBar2D => "dual-2d-advection-bar".into(),
            DualPde::Euler2D { .. } => "dual-2d-euler".into(),
        }
    }
}

/// Relative residual of a dual-space covariance equation on a numerically
/// given scaling function.
pub fn dual_ward_residual(
    f: &dyn Fn(&DualPoint) -> Complex64,
    pde: DualPde,
    points: &[DualPoint],
    steps: &[f64],
    order: FdOrder,
    tol: f64,
) -> Result<WardReport, LieError> {
    validate_steps(steps)?;
    if points.is_empty() {
        return Err(LieError::InvalidParameter(
            "at least one sample point is required".into(),
        ));
    }
    let diff = |p: &DualPoint, v: DualVar, h: f64| -> Complex64 {
        let g = |s: f64| f(&p.shifted(v, s));
        match order {
            FdOrder::Two => (g(h) - g(-h)) / (2.0 * h),
            FdOrder::Four => {
                (-g(2.0 * h) + 8.0 * g(h) - 8.0 * g(-h) + g(2.0 * -h)) / (12.0 * h)
            }
        }
    };
    let i2 = Complex64::new(0.0, 2.0);
    let mut entries = Vec::with_capacity(points.len());
    for p in points {
        let f0 = f(p);
        if !(f0.norm() > 1e-280) {
            return Err(LieError::InvalidParameter(
                "scaling function vanishes at a sample point; relative residuals are undefined"
                    .into(),
            ));
        }
        let mut residuals: Vec<Complex64> = Vec::with_capacity(steps.len());
        for &h in steps {
            let res = match pde {
                DualPde::Advect1D | DualPde::Advect2D => {
                    i2 * diff(p, DualVar::Eta, h) - (p.t + p.xi) * diff(p, DualVar::Xi, h)
                }
                DualPde::AdvectBar2D => {
                    i2 * diff(p, DualVar::EtaBar, h)
                        - (p.t + p.xi_bar) * diff(p, DualVar::XiBar, h)
                }
                DualPde::Euler1D { delta1, delta2 } => {
                    -p.t * diff(p, DualVar::T, h) - p.xi * diff(p, DualVar::Xi, h)
                        - (delta1 + delta2) * f0
                }
                DualPde::Euler2D { delta1 } => {
                    p.t * diff(p, DualVar::T, h)
                        + p.xi * diff(p, DualVar::Xi, h)
                        + p.xi_bar * diff(p, DualVar::XiBar, h)
                        + 2.0 * delta1 * f0
                }
            };
            residuals.push(res);
        }
        let extrapolated = if residuals.len() >= 2 {
            let h1 = steps[steps.len() - 2];
            let h2 = steps[steps.len() - 1];
            let q = (h1 / h2).powi(order.power());
            (q * residuals[residuals.len() - 1] - residuals[residuals.len() - 2]) / (q - 1.0)
        } else {
            residuals[0]
        };
        let scale = f0.norm();
        entries.push(WardEntry {
            point: vec![
                ("eta".into(), p.eta),
                ("etabar".into(), p.eta_bar),
                ("t".into(), p.t),
                ("xi".into(), p.xi),
                ("xibar".into(), p.xi_bar),
            ],
            kernel_magnitude: scale,
            step_residuals: residuals.iter().map(|r| r.norm() / scale).collect(),
            extrapolated: extrapolated.norm() / scale,
        });
    }
    let max_residual = entries
        .iter()
        .map(|e| e.extrapolated)
        .fold(0.0_f64, f64::max);
    Ok(WardReport {
        generator: pde.name(),
        order: order.power() as u8,
        steps: steps.to_vec(),
        entries,
        max_residual,
        tol,
        pass: max_residual <= tol,
    })
}
