//! Numerical library for meta-conformal, conformal-galilean and ortho-conformal
//! two-point correlators.
//!
//! The crate is organised in five modules:
//!
//! - [`corrkernels`] — closed-form evaluation of every two-point correlator
//!   (holomorphic and regularized), with singularity flagging and Kronecker
//!   selection-rule diagnostics.
//! - [`liealg`] — exact Laurent-polynomial differential-operator algebra:
//!   all generator families, exact commutator verification, two-body lifts
//!   and finite-difference Ward-identity residuals.
//! - [`hardy`] — Hardy-space toolkit for the half-plane H₂± and the quadrant
//!   tube H₂⁺⁺: spectral reconstruction, Cauchy boundary representation,
//!   norm suprema, the arc-suppression lemma and the closed-form norm of the
//!   algebraic spectrum `u^(−2ν)` (with a Lanczos Gamma implementation).
//! - [`dualpipe`] — the constructive dual-space chain: rapidity dualization,
//!   sector classification in the λ variables, dual correlators from
//!   half-line/quadrant spectra, and the delta-reduced inversion back to
//!   physical coordinates.
//! - [`analysis`] — physics-facing verification battery: Wiener–Khintchine
//!   spectral positivity, μ → 0 contraction limits, asymptotic exponents,
//!   cusp detection and boundedness scans.
//!
//! All operations are pure functions of their arguments; results are
//! deterministic and independent of evaluation order.

pub mod analysis;
pub mod corrkernels;
pub mod dualpipe;
pub mod hardy;
pub mod liealg;
pub mod tol;

pub use analysis::{
    AnalysisError, BoundednessReport, CuspReport, GridSpec, MuLimitReport, PositivityReport,
    SlopeFit,
};
pub use corrkernels::{
    CorrelatorKind, EvalResult, Kernel, Point1D, Point2D, QuantumNumbers1D, QuantumNumbers2D,
};
pub use dualpipe::{
    DualError, DualVars1D, DualVars2D, Sector, SectorMap1D, SectorMap2D, SectorSpectra1D,
    SectorSpectra2D,
};
pub use hardy::{
    DecayTag, HalfLineSpectrum, HardyError, QuadrantSpectrum, Reconstruction, TubePoint,
    TubePoint2D,
};
pub use liealg::{DiffOp, GenLabel, GeneratorFamily, MultiPoly, Var, WardReport};
