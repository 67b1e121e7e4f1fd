//! Shared fixtures for the criterion benchmarks: reference kernels and
//! deterministic sample grids, kept identical across benches so numbers
//! stay comparable between runs and machines.

use metaconf::corrkernels::{CorrelatorKind, Kernel, QuantumNumbers1D, QuantumNumbers2D};

/// The regularized 1D reference kernel used throughout the benches.
pub fn reg_kernel_1d() -> Kernel {
    Kernel::symmetric_1d(
        CorrelatorKind::Meta1DReg,
        QuantumNumbers1D {
            delta: 0.22,
            gamma: 0.33,
            mu: 1.0,
        },
    )
    .expect("reference parameters are valid")
}

/// The regularized 2D reference kernel (transverse rapidity present).
pub fn reg_kernel_2d() -> Kernel {
    Kernel::symmetric_2d(
        CorrelatorKind::Meta2DReg,
        QuantumNumbers2D {
            delta: 0.22,
            gamma_par: 0.25,
            gamma_perp: 1.5,
            mu: 1.0,
        },
    )
    .expect("reference parameters are valid")
}

/// A deterministic low-discrepancy plane grid of `n` separations
/// (golden-ratio lattice), spanning both sectors on both axes.
pub fn plane_separations(n: usize) -> Vec<(f64, f64)> {
    const PHI: f64 = 0.618_033_988_749_894_9;
    (0..n)
        .map(|k| {
            let u = (k as f64 * PHI).fract();
            let v = (k as f64 + 0.5) / n as f64;
            (-6.0 + 12.0 * u, -6.0 + 12.0 * v)
        })
        .collect()
}

/// The matching 1D separation grid.
pub fn line_separations(n: usize) -> Vec<f64> {
    (0..n)
        .map(|k| -6.0 + 12.0 * (k as f64 + 0.5) / n as f64)
        .collect()
}
