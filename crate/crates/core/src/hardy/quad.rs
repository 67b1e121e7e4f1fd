//! Panel-based Gauss–Legendre quadrature primitives.
//!
//! Every routine uses a fixed 16-node Gauss–Legendre rule per panel, a
//! deterministic left-to-right summation order, and (where exposed) a
//! panel-doubling error estimate, so repeated runs are bit-identical.

use num_complex::Complex64;

/// Positive abscissae of the 16-point Gauss–Legendre rule on (−1, 1).
const GL16_NODES: [f64; 8] = [
    0.0950125098376374401853193,
    0.2816035507792589132304605,
    0.4580167776572273863424194,
    0.6178762444026437484466718,
    0.7554044083550030338951012,
    0.8656312023878317438804679,
    0.9445750230732325760779884,
    0.9894009349916499325961542,
];

/// Weights paired with `GL16_NODES` (each weight serves ±node).
const GL16_WEIGHTS: [f64; 8] = [
    0.1894506104550684962853967,
    0.1826034150449235888667637,
    0.1691565193950025381893121,
    0.1495959888165767320815017,
    0.1246289712555338720524763,
    0.0951585116824927848099251,
    0.0622535239386478928628438,
    0.0271524594117540948517806,
];

/// Hard cap on panel counts so extreme arguments degrade gracefully
/// instead of stalling a run.
pub(crate) const MAX_PANELS: usize = 1 << 18;

/// Integrate a complex-valued function over `[a, b]` with `n` equal panels.
pub(crate) fn panels_complex(f: &dyn Fn(f64) -> Complex64, a: f64, b: f64, n: usize) -> Complex64 {
    let n = n.clamp(1, MAX_PANELS);
    let width = (b - a) / n as f64;
    let half = 0.5 * width;
    let mut total = Complex64::new(0.0, 0.0);
    for k in 0..n {
        let mid = a + (k as f64 + 0.5) * width;
        let mut acc = Complex64::new(0.0, 0.0);
        for j in 0..8 {
            let dx = half * GL16_NODES[j];
            acc += GL16_WEIGHTS[j] * (f(mid - dx) + f(mid + dx));
        }
        total += acc * half;
    }
    total
}

/// Integrate a real-valued function over `[a, b]` with `n` equal panels.
pub(crate) fn panels_real(f: &dyn Fn(f64) -> f64, a: f64, b: f64, n: usize) -> f64 {
    let n = n.clamp(1, MAX_PANELS);
    let width = (b - a) / n as f64;
    let half = 0.5 * width;
    let mut total = 0.0;
    for k in 0..n {
        let mid = a + (k as f64 + 0.5) * width;
        let mut acc = 0.0;
        for j in 0..8 {
            let dx = half * GL16_NODES[j];
            acc += GL16_WEIGHTS[j] * (f(mid - dx) + f(mid + dx));
        }
        total += acc * half;
    }
    total
}

/// Integrate over a geometric subdivision of `[a, b]` (0 < a < b), one
/// 16-node panel per subdivision. Suited to power-law integrands.
pub(crate) fn panels_geometric_real(f: &dyn Fn(f64) -> f64, a: f64, b: f64, n: usize) -> f64 {
    let n = n.clamp(1, MAX_PANELS);
    let ratio = (b / a).powf(1.0 / n as f64);
    let mut total = 0.0;
    let mut lo = a;
    for _ in 0..n {
        let hi = lo * ratio;
        total += panels_real(f, lo, hi, 1);
        lo = hi;
    }
    total
}

/// Line integral `∫ h(ξ) dξ` over `ξ ∈ [center − X, center + X]` via the
/// substitution `ξ = center + scale·tan θ`, which concentrates nodes near
/// the feature scale and handles algebraically decaying integrands.
/// `x_half_width = None` maps the full real line.
pub(crate) fn line_panels_complex(
    h: &dyn Fn(f64) -> Complex64,
    center: f64,
    scale: f64,
    x_half_width: Option<f64>,
    n: usize,
) -> Complex64 {
    let theta_max = match x_half_width {
        Some(x) => (x / scale).atan(),
        None => std::f64::consts::FRAC_PI_2,
    };
    let g = |theta: f64| -> Complex64 {
        let t = theta.tan();
        let sec2 = 1.0 + t * t;
        h(center + scale * t) * (scale * sec2)
    };
    panels_complex(&g, -theta_max, theta_max, n)
}

/// Real counterpart of [`line_panels_complex`].
pub(crate) fn line_panels_real(
    h: &dyn Fn(f64) -> f64,
    center: f64,
    scale: f64,
    x_half_width: Option<f64>,
    n: usize,
) -> f64 {
    let theta_max = match x_half_width {
        Some(x) => (x / scale).atan(),
        None => std::f64::consts::FRAC_PI_2,
    };
    let g = |theta: f64| -> f64 {
        let t = theta.tan();
        let sec2 = 1.0 + t * t;
        h(center + scale * t) * (scale * sec2)
    };
    panels_real(&g, -theta_max, theta_max, n)
}

/// Integral of `f(ξ)/(ξ − z0)` over the upper semicircular arc of radius
/// `r`, parametrised as `ξ = r·e^{iθ}`, `θ ∈ [0, π]`.
pub(crate) fn arc_integral(
    f: &dyn Fn(Complex64) -> Complex64,
    r: f64,
    z0: Complex64,
    n: usize,
) -> Complex64 {
    let g = |theta: f64| -> Complex64 {
        let xi = Complex64::from_polar(r, theta);
        f(xi) / (xi - z0) * Complex64::new(0.0, 1.0) * xi
    };
    panels_complex(&g, 0.0, std::f64::consts::PI, n)
}
