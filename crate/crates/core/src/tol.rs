//! Pinned numerical tolerances.
//!
//! Every comparison tolerance used by the library and its verification
//! battery lives here, so that the accuracy contract is visible in one
//! place and cannot drift between call sites.

/// Absolute tolerance for Kronecker selection rules on quantum numbers
/// (scaling dimensions, rapidities and rapidity ratios).
pub const EQ_TOL: f64 = 1e-9;

/// Relative Ward-identity residual accepted for an exactly covariant kernel.
pub const WARD_TOL: f64 = 1e-6;

/// Spectral positivity slack: a spectrum passes when
/// `min >= -POSITIVITY_TOL * max`.
pub const POSITIVITY_TOL: f64 = 1e-8;

/// Relative agreement between the quadrature and closed-form Hardy norm of
/// the algebraic spectrum.
pub const PROP_NORM_TOL: f64 = 1e-8;

/// Tight absolute tolerance for the special value Γ-check of the Hardy norm
/// (ν = 1/2, v + λ = 1, where the closed form collapses to π).
pub const PROP_NORM_SPECIAL_TOL: f64 = 1e-10;

/// Relative tolerance for the half-line Fourier reconstruction against a
/// closed form.
pub const HARDY_FOURIER_TOL: f64 = 1e-10;

/// Relative tolerance for the Cauchy boundary-integral representation
/// (truncated line integral with algebraic tail completion).
pub const HARDY_CAUCHY_TOL: f64 = 1e-8;

/// Relative tolerance for the quadrant (two-variable) reconstruction
/// against a product of one-variable reconstructions.
pub const HARDY_FACTOR_TOL: f64 = 1e-10;

/// Relative tolerance for the Plancherel identity between a boundary L²
/// norm and its damped spectral representation.
pub const PLANCHEREL_TOL: f64 = 1e-6;

/// Relative tolerance for the dual-pipeline / closed-form kernel
/// equivalence on flat sector spectra.
pub const PIPELINE_TOL: f64 = 1e-10;

/// Relative tolerance for exact sector agreements (holomorphic vs
/// regularized kernels where both are defined) and for contraction ladders.
pub const LADDER_TOL: f64 = 1e-12;

/// Absolute tolerance on fitted asymptotic exponents in the algebraic
/// (cusp-free) regime.
pub const SLOPE_TOL: f64 = 0.02;

/// Absolute tolerance on fitted asymptotic exponents past a directional
/// crossover.
pub const SLOPE_TOL_CROSSOVER: f64 = 0.05;

/// Relative accuracy of the Lanczos Gamma evaluation on the real axis.
pub const GAMMA_TOL: f64 = 1e-12;

/// Default finite-difference steps used by Ward-residual evaluation.
pub const WARD_STEPS: [f64; 2] = [1e-3, 5e-4];

/// Threshold below which a floating-point imaginary part is considered
/// numerical dust relative to the magnitude of the value.
pub const REALNESS_TOL: f64 = 1e-12;
