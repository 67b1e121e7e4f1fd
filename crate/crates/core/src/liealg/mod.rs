//! Exact Lie-algebra layer: Laurent polynomials, first-order differential
//! operators, generator families, closure verification and Ward-identity
//! residuals.

mod diffop;
mod families;
pub mod poly;
mod ward;

pub use diffop::DiffOp;
pub use families::{
    make_generator, verify_algebra, verify_contraction, AlgebraCase, AlgebraReport, FamilyKind,
    GenLabel, GeneratorFamily, MuSpec,
};
pub use poly::{CRat, Mono, MultiPoly, NumericPoint, Var, ALL_VARS, NVARS};
pub use ward::{
    dual_ward_residual, kernel_fn_1d, kernel_fn_2d, lift_two_body, ward_residual, DualPde,
    DualPoint, FdOrder, WardEntry, WardReport,
};

/// Errors of the Lie-algebra layer.
#[derive(thiserror::Error, Debug)]
pub enum LieError {
    /// Requested mode index outside the supported range.
    #[error("unsupported mode index: {0}")]
    UnsupportedIndex(String),
    /// Requested a generator that does not belong to the family.
    #[error("unsupported generator: {0}")]
    UnsupportedGenerator(String),
    /// Invalid parameter value (zero mass, empty input, ...).
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    /// A coefficient diverges in the `μ → 0` contraction.
    #[error("divergent mu -> 0 limit: {0}")]
    DivergentMuLimit(String),
    /// A Ward sample point sits on or too close to a kernel singularity.
    #[error("singular sample point: {0}")]
    SingularSamplePoint(String),
    /// Finite-difference step outside the accuracy contract.
    #[error("finite-difference step rejected: {0}")]
    StepTooLarge(String),
}
