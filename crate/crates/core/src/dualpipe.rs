//! Dual-space description of the bounded correlators.
//!
//! Physical coordinates map to dual variables: a log coordinate
//! λ∥ = ln(1 + Δ(μr∥)/t) along the preferred direction and, in two
//! dimensions, the principal angle λ⊥ = arctan(Y/(1+X)). In these
//! variables the correlator is the half-line Fourier transform of a
//! sector spectrum evaluated on the tube ζ₊ + iλ, the Heaviside gates
//! Θ(±λ) select the sector, and the inverse map lands the transform back
//! on the physical kernels: the bounded kernels are exactly the λ-space
//! images of non-negative sector spectra, which is what makes their
//! boundedness a Hardy-space statement.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::Serialize;
use thiserror::Error;

use crate::corrkernels::{perp_angle, QuantumNumbers1D, QuantumNumbers2D};
use crate::hardy::{halfline_transform, HalfLineSpectrum, HardyError, QuadrantSpectrum};
use crate::tol::EQ_TOL;

/// Errors of the dual-space pipeline.
#[derive(Debug, Error)]
pub enum DualError {
    /// The log coordinate does not exist (argument of the logarithm ≤ 0 on
    /// the holomorphic sheet, or the 2D branch point (1+X, Y) = 0).
    #[error("dual sector undefined: log argument {argument} is not positive")]
    SectorUndefined { argument: f64 },
    /// The rapidity ratios of the two fields disagree, so the dual pairing
    /// annihilates the correlator.
    #[error("selection rule violated: gamma/mu ratios {left} != {right}")]
    SelectionRuleViolation { left: f64, right: f64 },
    /// The dual map needs t ≠ 0.
    #[error("singular time difference t = 0")]
    SingularTime,
    /// Malformed grids or parameters.
    #[error("invalid parameter: {detail}")]
    InvalidParameter { detail: String },
    /// Failure inside a Hardy-space transform.
    #[error(transparent)]
    Hardy(#[from] HardyError),
}

/// Dual variables of a 1D two-point function: the dual sum frequency ζ₊
/// and the log coordinate λ.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DualVars1D {
    /// Dual frequency conjugate to the rapidity sum.
    pub zeta_plus: f64,
    /// Log coordinate λ = ln(1 + Δ(μr)/t).
    pub lam: f64,
}

impl DualVars1D {
    /// Dual variables from physical data on the holomorphic sheet; requires
    /// 1 + Δ(μr)/t > 0.
    pub fn from_physical(zeta_plus: f64, t: f64, mu_r: f64) -> Result<Self, DualError> {
        if t == 0.0 {
            return Err(DualError::SingularTime);
        }
        let argument = 1.0 + mu_r / t;
        if !(argument > 0.0) {
            return Err(DualError::SectorUndefined { argument });
        }
        Ok(Self {
            zeta_plus,
            lam: argument.ln(),
        })
    }
}

/// Dual variables of a 2D two-point function.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DualVars2D {
    /// Dual frequency conjugate to the chiral rapidity sum.
    pub u: f64,
    /// Dual frequency conjugate to the anti-chiral rapidity sum.
    pub u_bar: f64,
    /// Parallel log coordinate λ∥ = ½ ln[(1+X)² + Y²].
    pub lam_par: f64,
    /// Transverse angle λ⊥ = arctan(Y/(1+X)), principal branch in
    /// (−π/2, π/2] with the convention 1 + X = 0 → ±π/2.
    pub lam_perp: f64,
}

impl DualVars2D {
    /// Dual variables from physical data; requires (1+X, Y) ≠ (0, 0) where
    /// X = Δ(μr∥)/t and Y = Δ(μr⊥)/t.
    pub fn from_physical(
        u: f64,
        u_bar: f64,
        t: f64,
        mu_r_par: f64,
        mu_r_perp: f64,
    ) -> Result<Self, DualError> {
        if t == 0.0 {
            return Err(DualError::SingularTime);
        }
        let x = mu_r_par / t;
        let y = mu_r_perp / t;
        let sq = (1.0 + x) * (1.0 + x) + y * y;
        if !(sq > 0.0) {
            return Err(DualError::SectorUndefined { argument: sq });
        }
        Ok(Self {
            u,
            u_bar,
            lam_par: 0.5 * sq.ln(),
            lam_perp: perp_angle(x, y),
        })
    }
}

/// Sign of the sector a physical point belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Sector {
    /// λ > 0 (the Θ(λ) branch).
    Plus,
    /// λ < 0 (the Θ(−λ) branch).
    Minus,
    /// λ = 0, shared closure of both sectors.
    Boundary,
}

fn sector_of(x: f64) -> Sector {
    if x > 0.0 {
        Sector::Plus
    } else if x < 0.0 {
        Sector::Minus
    } else {
        Sector::Boundary
    }
}

/// Log coordinates of a physical 1D point on both sheets.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SectorMap1D {
    /// X = Δ(μr)/t.
    pub x_ratio: f64,
    /// Holomorphic-sheet coordinate ln(1+X); absent when 1 + X ≤ 0.
    pub lam_holo: Option<f64>,
    /// Regularized-sheet coordinate sign(X)·ln(1+|X|), defined everywhere.
    pub lam_reg: f64,
    pub sector: Sector,
}

/// Map a physical 1D separation to its dual log coordinates and sector.
pub fn sector_map_1d(t: f64, r: f64, mu: f64) -> Result<SectorMap1D, DualError> {
    if t == 0.0 {
        return Err(DualError::SingularTime);
    }
    let x = mu * r / t;
    let lam_holo = if 1.0 + x > 0.0 {
        Some((1.0 + x).ln())
    } else {
        None
    };
    let mag = (1.0 + x.abs()).ln();
    let lam_reg = if x < 0.0 { -mag } else { mag };
    Ok(SectorMap1D {
        x_ratio: x,
        lam_holo,
        lam_reg,
        sector: sector_of(x),
    })
}

/// Log and angle coordinates of a physical 2D point on both sheets.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SectorMap2D {
    /// X = Δ(μr∥)/t.
    pub x_ratio: f64,
    /// Y = Δ(μr⊥)/t.
    pub y_ratio: f64,
    /// Holomorphic-sheet coordinate ½ ln[(1+X)² + Y²]; absent at the branch
    /// point (1+X, Y) = (0, 0).
    pub lam_par_holo: Option<f64>,
    /// Regularized-sheet coordinate sign(X)·½ ln[(1+|X|)² + Y²].
    pub lam_par_reg: f64,
    /// Transverse angle λ⊥ = arctan(Y/(1+X)), principal branch.
    pub lam_perp: f64,
    pub sector_par: Sector,
    pub sector_perp: Sector,
}

/// Map a physical 2D separation to its dual coordinates and sectors.
pub fn sector_map_2d(t: f64, r_par: f64, r_perp: f64, mu: f64) -> Result<SectorMap2D, DualError> {
    if t == 0.0 {
        return Err(DualError::SingularTime);
    }
    let x = mu * r_par / t;
    let y = mu * r_perp / t;
    let sq_holo = (1.0 + x) * (1.0 + x) + y * y;
    let lam_par_holo = if sq_holo > 0.0 {
        Some(0.5 * sq_holo.ln())
    } else {
        None
    };
    let mag = 0.5 * ((1.0 + x.abs()) * (1.0 + x.abs()) + y * y).ln();
    let lam_par_reg = if x < 0.0 { -mag } else { mag };
    let lam_perp = perp_angle(x, y);
    Ok(SectorMap2D {
        x_ratio: x,
        y_ratio: y,
        lam_par_holo,
        lam_par_reg,
        lam_perp,
        sector_par: sector_of(x),
        sector_perp: sector_of(lam_perp),
    })
}

/// The two sector spectra of a 1D dual correlator: F₊ feeds the Θ(λ)
/// branch, F₋ the Θ(−λ) branch.
#[derive(Debug, Clone)]
pub struct SectorSpectra1D {
    pub f_plus: HalfLineSpectrum,
    pub f_minus: HalfLineSpectrum,
}

impl SectorSpectra1D {
    /// Spectra pair from the two sector functions.
    pub fn new(f_plus: HalfLineSpectrum, f_minus: HalfLineSpectrum) -> Self {
        Self { f_plus, f_minus }
    }

    /// The flat pair F± ≡ 1 on [0, `support_end`], whose inverse map
    /// reproduces the regularized 1D kernel exactly.
    pub fn flat(support_end: f64) -> Result<Self, DualError> {
        Ok(Self {
            f_plus: HalfLineSpectrum::flat(support_end)?,
            f_minus: HalfLineSpectrum::flat(support_end)?,
        })
    }

    /// The exponential pair F± = e^{−ζ}, a convenient square-integrable
    /// test element.
    pub fn exponential() -> Self {
        Self {
            f_plus: HalfLineSpectrum::exponential(),
            f_minus: HalfLineSpectrum::exponential(),
        }
    }
}

/// The four quadrant spectra of a 2D dual correlator, indexed by the signs
/// of (λ∥, λ⊥).
#[derive(Debug, Clone)]
pub struct SectorSpectra2D {
    pub f_pp: QuadrantSpectrum,
    pub f_pm: QuadrantSpectrum,
    pub f_mp: QuadrantSpectrum,
    pub f_mm: QuadrantSpectrum,
}

impl SectorSpectra2D {
    /// Quadrant spectra from the four sector functions.
    pub fn new(
        f_pp: QuadrantSpectrum,
        f_pm: QuadrantSpectrum,
        f_mp: QuadrantSpectrum,
        f_mm: QuadrantSpectrum,
    ) -> Self {
        Self {
            f_pp,
            f_pm,
            f_mp,
            f_mm,
        }
    }

    /// All four spectra flat ≡ 1 on [0, end]²; the inverse map then
    /// reproduces the regularized 2D kernel exactly.
    pub fn flat(support_end: f64) -> Result<Self, DualError> {
        let one = HalfLineSpectrum::flat(support_end)?;
        let q = QuadrantSpectrum::product(&one, &one);
        Ok(Self {
            f_pp: q.clone(),
            f_pm: q.clone(),
            f_mp: q.clone(),
            f_mm: q,
        })
    }

    /// Quadrant spectrum for the given sector signs (`false` = minus).
    pub fn select(&self, plus_par: bool, plus_perp: bool) -> &QuadrantSpectrum {
        match (plus_par, plus_perp) {
            (true, true) => &self.f_pp,
            (true, false) => &self.f_pm,
            (false, true) => &self.f_mp,
            (false, false) => &self.f_mm,
        }
    }
}

/// Trapezoid weights of a strictly increasing grid.
fn trapezoid_weights(grid: &[f64], label: &str) -> Result<Vec<f64>, DualError> {
    if grid.len() < 2 {
        return Err(DualError::InvalidParameter {
            detail: format!("{label} grid needs at least two points"),
        });
    }
    if grid.iter().any(|x| !x.is_finite()) {
        return Err(DualError::InvalidParameter {
            detail: format!("{label} grid must be finite"),
        });
    }
    if grid.windows(2).any(|w| w[1] <= w[0]) {
        return Err(DualError::InvalidParameter {
            detail: format!("{label} grid must be strictly increasing"),
        });
    }
    let n = grid.len();
    let mut w = vec![0.0; n];
    for j in 0..n {
        let left = if j == 0 { grid[0] } else { grid[j - 1] };
        let right = if j == n - 1 { grid[n - 1] } else { grid[j + 1] };
        w[j] = 0.5 * (right - left);
    }
    Ok(w)
}

fn dualize_kernel(
    grid: &[f64],
    values: &[Complex64],
    out_grid: &[f64],
    sign: f64,
) -> Result<Vec<Complex64>, DualError> {
    let w = trapezoid_weights(grid, "input")?;
    if values.len() != grid.len() {
        return Err(DualError::InvalidParameter {
            detail: format!(
                "value count {} does not match grid size {}",
                values.len(),
                grid.len()
            ),
        });
    }
    if out_grid.is_empty() {
        return Err(DualError::InvalidParameter {
            detail: "output grid must be non-empty".into(),
        });
    }
    let c = 1.0 / (2.0 * PI).sqrt();
    let mut out = Vec::with_capacity(out_grid.len());
    for &zeta in out_grid {
        let mut acc = Complex64::new(0.0, 0.0);
        for (j, &g) in grid.iter().enumerate() {
            acc += w[j] * Complex64::new(0.0, sign * g * zeta).exp() * values[j];
        }
        out.push(c * acc);
    }
    Ok(out)
}

/// Rapidity-to-dual transform F̂(ζ) = (2π)^{-1/2} ∫ e^{+iγζ} f(γ) dγ by
/// trapezoid quadrature on the sampled rapidity grid.
pub fn dualize_field(
    gamma_grid: &[f64],
    values: &[Complex64],
    zeta_grid: &[f64],
) -> Result<Vec<Complex64>, DualError> {
    dualize_kernel(gamma_grid, values, zeta_grid, 1.0)
}

/// Inverse transform f(γ) = (2π)^{-1/2} ∫ e^{−iγζ} F̂(ζ) dζ.
pub fn dualize_field_inverse(
    zeta_grid: &[f64],
    values: &[Complex64],
    gamma_grid: &[f64],
) -> Result<Vec<Complex64>, DualError> {
    dualize_kernel(zeta_grid, values, gamma_grid, -1.0)
}

/// Tensor transform of a 2D rapidity field sampled on a product grid:
/// the 1D transform is applied along each axis in turn. `values[j][k]`
/// corresponds to `(gamma_grid_1[j], gamma_grid_2[k])`.
pub fn dualize_field_2d(
    gamma_grid_1: &[f64],
    gamma_grid_2: &[f64],
    values: &[Vec<Complex64>],
    zeta_grid_1: &[f64],
    zeta_grid_2: &[f64],
) -> Result<Vec<Vec<Complex64>>, DualError> {
    if values.len() != gamma_grid_1.len() {
        return Err(DualError::InvalidParameter {
            detail: format!(
                "row count {} does not match first grid size {}",
                values.len(),
                gamma_grid_1.len()
            ),
        });
    }
    // Axis 2 first: each row becomes a row over ζ₂.
    let mut half: Vec<Vec<Complex64>> = Vec::with_capacity(values.len());
    for row in values {
        half.push(dualize_kernel(gamma_grid_2, row, zeta_grid_2, 1.0)?);
    }
    // Axis 1: transform each ζ₂ column.
    let mut out = vec![vec![Complex64::new(0.0, 0.0); zeta_grid_2.len()]; zeta_grid_1.len()];
    let mut column = vec![Complex64::new(0.0, 0.0); gamma_grid_1.len()];
    for k in 0..zeta_grid_2.len() {
        for (j, row) in half.iter().enumerate() {
            column[j] = row[k];
        }
        let transformed = dualize_kernel(gamma_grid_1, &column, zeta_grid_1, 1.0)?;
        for (j, v) in transformed.into_iter().enumerate() {
            out[j][k] = v;
        }
    }
    Ok(out)
}

/// Dual-space correlator
/// C = |t|^{−2δ₁} (2π)^{-1/2} [Θ(λ) ∫₀^∞ e^{iζ₊ζ} e^{−λζ} F₊(ζ) dζ
///                            + Θ(−λ) ∫₀^∞ e^{−iζ₊ζ} e^{λζ} F₋(ζ) dζ],
/// with Θ(0) = ½ averaging the two boundary transforms.
pub fn dual_correlator_1d(
    dv: &DualVars1D,
    delta1: f64,
    t: f64,
    spectra: &SectorSpectra1D,
) -> Result<Complex64, DualError> {
    if t == 0.0 {
        return Err(DualError::SingularTime);
    }
    let pref = t.abs().powf(-2.0 * delta1) / (2.0 * PI).sqrt();
    let plus_z = Complex64::new(dv.zeta_plus, dv.lam);
    let minus_z = Complex64::new(-dv.zeta_plus, -dv.lam);
    if dv.lam > 0.0 {
        let (v, _) = halfline_transform(&spectra.f_plus, plus_z)?;
        Ok(pref * v)
    } else if dv.lam < 0.0 {
        let (v, _) = halfline_transform(&spectra.f_minus, minus_z)?;
        Ok(pref * v)
    } else {
        let (vp, _) = halfline_transform(&spectra.f_plus, plus_z)?;
        let (vm, _) = halfline_transform(&spectra.f_minus, minus_z)?;
        Ok(pref * 0.5 * (vp + vm))
    }
}

/// Heaviside-gated sector factor of one dual axis: `None` when the gate
/// Θ(±λ) excludes the point, otherwise e^{−2|g||λ|}. A vanishing rapidity
/// ratio g = 0 is sector-free and contributes the factor 1.
fn axis_gate(g: f64, lam: f64) -> Option<f64> {
    if g == 0.0 {
        Some(1.0)
    } else if g > 0.0 {
        if lam < 0.0 {
            None
        } else {
            Some((-2.0 * g * lam).exp())
        }
    } else if lam > 0.0 {
        None
    } else {
        Some((-2.0 * g.abs() * lam.abs()).exp())
    }
}

/// Invert the 1D dual representation at a physical point with log
/// coordinate λ: the Kronecker pairing enforces γ₁/μ₁ = γ₂/μ₂ =: g, the
/// Heaviside gate selects the sector by sign(g), and the surviving value is
/// e^{−2|g||λ|}·F_{sign(g)}(2|g|). The caller supplies the |t|^{−2δ₁}
/// prefactor; the overall normalization constant is fixed to 1 so that the
/// flat spectrum reproduces |t|^{−2δ₁} at λ = 0.
pub fn invert_to_physical_1d(
    qn1: &QuantumNumbers1D,
    qn2: &QuantumNumbers1D,
    lam: f64,
    spectra: &SectorSpectra1D,
) -> Result<f64, DualError> {
    if qn1.mu == 0.0 || qn2.mu == 0.0 {
        return Err(DualError::InvalidParameter {
            detail: "dual inversion requires nonzero mu".into(),
        });
    }
    let left = qn1.gamma / qn1.mu;
    let right = qn2.gamma / qn2.mu;
    if (left - right).abs() > EQ_TOL {
        return Err(DualError::SelectionRuleViolation { left, right });
    }
    let g = left;
    match axis_gate(g, lam) {
        None => Ok(0.0),
        Some(factor) => {
            let spec = if g < 0.0 {
                &spectra.f_minus
            } else {
                &spectra.f_plus
            };
            Ok(factor * spec.value(2.0 * g.abs()).re)
        }
    }
}

/// Invert the 2D dual representation at a physical point with coordinates
/// (λ∥, λ⊥). Both rapidity ratios are selection-constrained; the two
/// Heaviside gates pick one quadrant spectrum, and the surviving value is
/// e^{−2|g∥||λ∥|} e^{−2|g⊥||λ⊥|} · F_q(2|g∥|, 2|g⊥|).
pub fn invert_to_physical_2d(
    qn1: &QuantumNumbers2D,
    qn2: &QuantumNumbers2D,
    lam_par: f64,
    lam_perp: f64,
    spectra: &SectorSpectra2D,
) -> Result<f64, DualError> {
    if qn1.mu == 0.0 || qn2.mu == 0.0 {
        return Err(DualError::InvalidParameter {
            detail: "dual inversion requires nonzero mu".into(),
        });
    }
    let gp_left = qn1.gamma_par / qn1.mu;
    let gp_right = qn2.gamma_par / qn2.mu;
    if (gp_left - gp_right).abs() > EQ_TOL {
        return Err(DualError::SelectionRuleViolation {
            left: gp_left,
            right: gp_right,
        });
    }
    let gq_left = qn1.gamma_perp / qn1.mu;
    let gq_right = qn2.gamma_perp / qn2.mu;
    if (gq_left - gq_right).abs() > EQ_TOL {
        return Err(DualError::SelectionRuleViolation {
            left: gq_left,
            right: gq_right,
        });
    }
    let (g_par, g_perp) = (gp_left, gq_left);
    let par = axis_gate(g_par, lam_par);
    let perp = axis_gate(g_perp, lam_perp);
    match (par, perp) {
        (Some(fp), Some(fq)) => {
            let spec = spectra.select(g_par >= 0.0, g_perp >= 0.0);
            Ok(fp * fq * spec.value(2.0 * g_par.abs(), 2.0 * g_perp.abs()).re)
        }
        _ => Ok(0.0),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corrkernels::{eval_meta1d_reg, eval_meta2d_reg, Point1D, Point2D};
    use crate::liealg::{dual_ward_residual, DualPde, DualPoint, FdOrder};
    use crate::tol::{PIPELINE_TOL, WARD_TOL, WARD_STEPS};

    fn qn1(delta: f64, gamma: f64, mu: f64) -> QuantumNumbers1D {
        QuantumNumbers1D { delta, gamma, mu }
    }

    #[test]
    fn sector_maps_cover_both_sheets() {
        let sm = sector_map_1d(1.0, 0.0, 1.5).unwrap();
        assert_eq!(sm.lam_reg, 0.0);
        assert_eq!(sm.lam_holo, Some(0.0));
        assert_eq!(sm.sector, Sector::Boundary);
        let sm = sector_map_1d(2.0, 3.0, 1.0).unwrap();
        assert!((sm.lam_reg - 2.5_f64.ln()).abs() < 1e-15);
        assert_eq!(sm.sector, Sector::Plus);
        // Holomorphic sheet disappears past the singular ray, the
        // regularized sheet does not.
        let sm = sector_map_1d(1.0, -2.0, 1.0).unwrap();
        assert!(sm.lam_holo.is_none());
        assert!((sm.lam_reg + 3.0_f64.ln()).abs() < 1e-15);
        assert_eq!(sm.sector, Sector::Minus);
        assert!(matches!(
            sector_map_1d(0.0, 1.0, 1.0),
            Err(DualError::SingularTime)
        ));
        // 2D: branch point only at (1+X, Y) = 0.
        let sm = sector_map_2d(1.0, -1.0, 0.0, 1.0).unwrap();
        assert!(sm.lam_par_holo.is_none());
        assert!((sm.lam_par_reg + 2.0_f64.ln()).abs() < 1e-15);
        let sm = sector_map_2d(1.0, -1.0, 1.0, 1.0).unwrap();
        assert_eq!(sm.lam_par_holo, Some(0.0)); // (0)²+1² → ln 1 = 0
        assert!((sm.lam_perp - std::f64::consts::FRAC_PI_2).abs() < 1e-15);
        assert!(matches!(
            DualVars2D::from_physical(0.0, 0.0, 1.0, -1.0, 0.0),
            Err(DualError::SectorUndefined { .. })
        ));
    }

    #[test]
    fn flat_spectra_reproduce_the_regularized_1d_kernel() {
        let spectra = SectorSpectra1D::flat(8.0).unwrap();
        let (delta, gmag, mu) = (0.22, 0.33, 1.0);
        let mut checked = 0usize;
        for it in 0..10 {
            let t = -2.0 + 4.1 * (it as f64 + 0.5) / 10.0;
            for ir in 0..100 {
                let r = -30.0 + 60.0 * (ir as f64) / 99.0;
                let sm = sector_map_1d(t, r, mu).unwrap();
                // Orient the rapidity with the sector so the gate passes.
                let gamma = if sm.lam_reg < 0.0 { -gmag } else { gmag };
                let qn = qn1(delta, gamma, mu);
                let dual = t.abs().powf(-2.0 * delta)
                    * invert_to_physical_1d(&qn, &qn, sm.lam_reg, &spectra).unwrap();
                let kernel = eval_meta1d_reg(
                    &Point1D { t, r },
                    &Point1D::default(),
                    &qn,
                    &qn,
                )
                .unwrap();
                let expect = kernel.value.re;
                assert!(
                    (dual - expect).abs() <= PIPELINE_TOL * expect.abs(),
                    "t={t} r={r}: dual {dual} vs kernel {expect}"
                );
                checked += 1;
            }
        }
        assert_eq!(checked, 1000);
    }

    #[test]
    fn flat_spectra_reproduce_the_regularized_2d_kernel() {
        let spectra = SectorSpectra2D::flat(8.0).unwrap();
        let (delta, gp_mag, gq_mag, mu) = (0.3, 0.45, 0.2, 1.2);
        for it in 0..5 {
            let t = -1.5 + 3.2 * (it as f64 + 0.5) / 5.0;
            for ip in 0..10 {
                let rp = -8.0 + 16.0 * ip as f64 / 9.0;
                for iq in 0..10 {
                    let rq = -6.0 + 12.0 * iq as f64 / 9.0;
                    let sm = sector_map_2d(t, rp, rq, mu).unwrap();
                    let gamma_par = if sm.lam_par_reg < 0.0 { -gp_mag } else { gp_mag };
                    let gamma_perp = if sm.lam_perp < 0.0 { -gq_mag } else { gq_mag };
                    let qn = QuantumNumbers2D {
                        delta,
                        gamma_par,
                        gamma_perp,
                        mu,
                    };
                    let dual = t.abs().powf(-2.0 * delta)
                        * invert_to_physical_2d(&qn, &qn, sm.lam_par_reg, sm.lam_perp, &spectra)
                            .unwrap();
                    let kernel = eval_meta2d_reg(
                        &Point2D {
                            t,
                            r_par: rp,
                            r_perp: rq,
                        },
                        &Point2D::default(),
                        &qn,
                        &qn,
                    )
                    .unwrap();
                    let expect = kernel.value.re;
                    assert!(
                        (dual - expect).abs() <= PIPELINE_TOL * expect.abs(),
                        "t={t} rp={rp} rq={rq}: dual {dual} vs kernel {expect}"
                    );
                }
            }
        }
    }

    #[test]
    fn inversion_sector_rules() {
        let spectra = SectorSpectra1D::flat(8.0).unwrap();
        // Flat spectrum, g = 1/2, λ = ln 2 → e^{−ln 2·2·1/2}... = 1/2.
        let qn = qn1(0.1, 0.5, 1.0);
        let v = invert_to_physical_1d(&qn, &qn, 2.0_f64.ln(), &spectra).unwrap();
        assert!((v - 0.5).abs() < 1e-15);
        // Θ-excluded sector → exact zero.
        let v = invert_to_physical_1d(&qn, &qn, -0.3, &spectra).unwrap();
        assert_eq!(v, 0.0);
        // g = 0 → F(0), independent of λ.
        let qn0 = qn1(0.1, 0.0, 1.0);
        for lam in [-2.0, 0.0, 5.0] {
            let v = invert_to_physical_1d(&qn0, &qn0, lam, &spectra).unwrap();
            assert_eq!(v, 1.0);
        }
        // λ = 0 sits in the allowed closure: value F₊(2g), no ½ factor.
        let v = invert_to_physical_1d(&qn, &qn, 0.0, &spectra).unwrap();
        assert_eq!(v, 1.0);
        // Mismatched rapidity ratios violate the selection rule.
        let other = qn1(0.1, 0.5, 2.0);
        assert!(matches!(
            invert_to_physical_1d(&qn, &other, 1.0, &spectra),
            Err(DualError::SelectionRuleViolation { .. })
        ));
        // Equal ratios with different (γ, μ) separately are accepted.
        let scaled = qn1(0.1, 1.0, 2.0);
        let v = invert_to_physical_1d(&qn, &scaled, 2.0_f64.ln(), &spectra).unwrap();
        assert!((v - 0.5).abs() < 1e-15);
        assert!(matches!(
            invert_to_physical_1d(&qn, &qn1(0.1, 0.5, 0.0), 1.0, &spectra),
            Err(DualError::InvalidParameter { .. })
        ));
    }

    #[test]
    fn two_dimensional_inversion_factorizes_exactly() {
        let spectra2 = SectorSpectra2D::flat(8.0).unwrap();
        let spectra1 = SectorSpectra1D::flat(8.0).unwrap();
        let mu = 1.0;
        for (gp, gq, lp, lq) in [
            (0.4, 0.7, 0.9, 0.3),
            (-0.4, 0.7, -1.1, 0.2),
            (0.4, -0.7, 0.5, -0.8),
            (0.0, 0.7, -3.0, 1.2),
            (0.4, 0.0, 0.25, -2.0),
        ] {
            let qn2d = QuantumNumbers2D {
                delta: 0.2,
                gamma_par: gp,
                gamma_perp: gq,
                mu,
            };
            let v2 = invert_to_physical_2d(&qn2d, &qn2d, lp, lq, &spectra2).unwrap();
            let p = invert_to_physical_1d(&qn1(0.2, gp, mu), &qn1(0.2, gp, mu), lp, &spectra1)
                .unwrap();
            let q = invert_to_physical_1d(&qn1(0.2, gq, mu), &qn1(0.2, gq, mu), lq, &spectra1)
                .unwrap();
            assert_eq!(v2, p * q, "gp={gp} gq={gq} lp={lp} lq={lq}");
        }
    }

    #[test]
    fn gaussian_is_a_fixed_point_of_the_dual_transform() {
        let n = 2001;
        let grid: Vec<f64> = (0..n).map(|j| -12.0 + 24.0 * j as f64 / (n - 1) as f64).collect();
        let values: Vec<Complex64> = grid
            .iter()
            .map(|&g| Complex64::new((-0.5 * g * g).exp(), 0.0))
            .collect();
        let out: Vec<f64> = (0..41).map(|j| -4.0 + 0.2 * j as f64).collect();
        let hat = dualize_field(&grid, &values, &out).unwrap();
        for (z, v) in out.iter().zip(&hat) {
            let exact = (-0.5 * z * z).exp();
            assert!(
                (v - Complex64::new(exact, 0.0)).norm() < 1e-8,
                "zeta = {z}"
            );
        }
        // Round trip back to rapidity space.
        let zeta_grid: Vec<f64> = (0..n).map(|j| -12.0 + 24.0 * j as f64 / (n - 1) as f64).collect();
        let hat_full = dualize_field(&grid, &values, &zeta_grid).unwrap();
        let back = dualize_field_inverse(&zeta_grid, &hat_full, &out).unwrap();
        for (g, v) in out.iter().zip(&back) {
            let exact = (-0.5 * g * g).exp();
            assert!((v - Complex64::new(exact, 0.0)).norm() < 1e-8, "gamma = {g}");
        }
    }

    #[test]
    fn shift_in_rapidity_is_a_phase_in_dual_space() {
        let n = 2001;
        let a = 0.7;
        let grid: Vec<f64> = (0..n).map(|j| -14.0 + 28.0 * j as f64 / (n - 1) as f64).collect();
        let shifted: Vec<Complex64> = grid
            .iter()
            .map(|&g| Complex64::new((-0.5 * (g - a) * (g - a)).exp(), 0.0))
            .collect();
        let out: Vec<f64> = (0..21).map(|j| -2.0 + 0.2 * j as f64).collect();
        let hat = dualize_field(&grid, &shifted, &out).unwrap();
        for (z, v) in out.iter().zip(&hat) {
            let exact = Complex64::new(0.0, a * z).exp() * (-0.5 * z * z).exp();
            assert!((v - exact).norm() < 1e-8, "zeta = {z}");
        }
    }

    #[test]
    fn tensor_transform_factorizes_on_product_data() {
        let n = 801;
        let grid: Vec<f64> = (0..n).map(|j| -10.0 + 20.0 * j as f64 / (n - 1) as f64).collect();
        let f1: Vec<f64> = grid.iter().map(|&g| (-0.5 * g * g).exp()).collect();
        let f2: Vec<f64> = grid.iter().map(|&g| (-g * g).exp()).collect();
        let values: Vec<Vec<Complex64>> = f1
            .iter()
            .map(|&a| f2.iter().map(|&b| Complex64::new(a * b, 0.0)).collect())
            .collect();
        let out: Vec<f64> = vec![-1.0, 0.0, 0.5, 2.0];
        let hat2 = dualize_field_2d(&grid, &grid, &values, &out, &out).unwrap();
        let c1: Vec<Complex64> = f1.iter().map(|&a| Complex64::new(a, 0.0)).collect();
        let c2: Vec<Complex64> = f2.iter().map(|&b| Complex64::new(b, 0.0)).collect();
        let h1 = dualize_field(&grid, &c1, &out).unwrap();
        let h2 = dualize_field(&grid, &c2, &out).unwrap();
        for j in 0..out.len() {
            for k in 0..out.len() {
                let dev = (hat2[j][k] - h1[j] * h2[k]).norm();
                assert!(dev < 1e-12, "({j}, {k}): {dev:e}");
            }
        }
    }

    #[test]
    fn dual_correlator_is_continuous_in_the_real_part_across_the_sector_seam() {
        let spectra = SectorSpectra1D::exponential();
        let delta1 = 0.22;
        let t = 1.3;
        let zeta_plus = 0.4;
        let eps = 1e-9;
        let above = dual_correlator_1d(
            &DualVars1D { zeta_plus, lam: eps },
            delta1,
            t,
            &spectra,
        )
        .unwrap();
        let below = dual_correlator_1d(
            &DualVars1D {
                zeta_plus,
                lam: -eps,
            },
            delta1,
            t,
            &spectra,
        )
        .unwrap();
        let on = dual_correlator_1d(
            &DualVars1D {
                zeta_plus,
                lam: 0.0,
            },
            delta1,
            t,
            &spectra,
        )
        .unwrap();
        // With equal real sector spectra the two boundary values are complex
        // conjugates: the real part is continuous, the seam average real.
        assert!((above.re - below.re).abs() < 1e-7);
        assert!((above.im + below.im).abs() < 1e-7);
        assert!(on.im.abs() < 1e-12);
        assert!((on.re - above.re).abs() < 1e-7);
        assert!(matches!(
            dual_correlator_1d(&DualVars1D { zeta_plus, lam: 0.1 }, delta1, 0.0, &spectra),
            Err(DualError::SingularTime)
        ));
    }

    #[test]
    fn dual_correlator_satisfies_the_dual_ward_identities() {
        let spectra = SectorSpectra1D::exponential();
        let delta = 0.22;
        let f = move |p: &DualPoint| -> Complex64 {
            let dv = DualVars1D::from_physical(p.eta / 2.0, p.t, p.xi).unwrap();
            dual_correlator_1d(&dv, delta, p.t, &spectra).unwrap()
        };
        let points = [
            DualPoint {
                eta: 0.4,
                eta_bar: 0.0,
                t: 1.0,
                xi: 0.8,
                xi_bar: 0.0,
            },
            DualPoint {
                eta: -0.7,
                eta_bar: 0.0,
                t: 1.3,
                xi: 0.5,
                xi_bar: 0.0,
            },
            DualPoint {
                eta: 1.1,
                eta_bar: 0.0,
                t: 0.8,
                xi: 1.9,
                xi_bar: 0.0,
            },
            DualPoint {
                eta: 0.5,
                eta_bar: 0.0,
                t: 1.0,
                xi: -0.4,
                xi_bar: 0.0,
            },
        ];
        for pde in [
            DualPde::Advect1D,
            DualPde::Euler1D {
                delta1: delta,
                delta2: delta,
            },
        ] {
            let report =
                dual_ward_residual(&f, pde, &points, &WARD_STEPS, FdOrder::Four, WARD_TOL)
                    .unwrap();
            assert!(
                report.pass,
                "{:?}: max residual {:e}",
                pde, report.max_residual
            );
        }
    }
}
