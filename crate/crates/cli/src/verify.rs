//! `verify`: self-contained verification suites with machine-readable JSON
//! reports.
//!
//! Each suite re-derives a family of guarantees from scratch at run time —
//! exact algebra closure, Ward-identity residuals, dual-representation
//! round trips, Hardy-space identities, spectral positivity, contraction
//! and ladder limits, and the published-figure asymptotics — and emits one
//! report case per checked claim.

use clap::ValueEnum;
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use metaconf::analysis::{
    asymptotic_exponent, boundedness_scan, mu_limit_check_1d, mu_limit_check_2d,
    wiener_khintchine_1d, wiener_khintchine_fn, wiener_khintchine_radial, GridSpec,
};
use metaconf::corrkernels::{
    eval_meta1d_reg, eval_meta2d_reg, eval_ortho_physical, CorrelatorKind, EvalResult, Kernel,
    KernelError, Point1D, Point2D, QuantumNumbers1D, QuantumNumbers2D,
};
use metaconf::dualpipe::{
    invert_to_physical_1d, invert_to_physical_2d, sector_map_1d, sector_map_2d, SectorSpectra1D,
    SectorSpectra2D,
};
use metaconf::hardy::{
    cauchy_boundary_rep, dual_cone_check, hardy_norm_sup, hardy_reconstruct_1d,
    hardy_reconstruct_2d, lemma_check, limit_behavior_check, plancherel_check, proposition_norm,
    BoundaryLine, HalfLineSpectrum, QuadrantSpectrum, TubePoint, TubePoint2D,
};
use metaconf::liealg::{
    dual_ward_residual, kernel_fn_1d, kernel_fn_2d, lift_two_body, make_generator, verify_algebra,
    verify_contraction, ward_residual, CRat, DiffOp, DualPde, DualPoint, FamilyKind, FdOrder,
    GenLabel, GeneratorFamily, MuSpec, NumericPoint, Var,
};
use metaconf::tol::{
    HARDY_CAUCHY_TOL, HARDY_FACTOR_TOL, HARDY_FOURIER_TOL, LADDER_TOL, PIPELINE_TOL,
    PLANCHEREL_TOL, POSITIVITY_TOL, PROP_NORM_SPECIAL_TOL, PROP_NORM_TOL, SLOPE_TOL,
    SLOPE_TOL_CROSSOVER, WARD_STEPS, WARD_TOL,
};

use crate::config::{CliError, OutputFormat, RunConfig};
use crate::figures::{fig2d_kernel, reject_param_flags, FIG_ANGLES_DEG};
use crate::output::{atomic_write, VERSION};
use crate::CmdOutcome;

/// The verification suites.
#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
pub enum SuiteId {
    /// Exact commutator tables of all generator families.
    Lie,
    /// Finite-difference Ward identities of the correlator kernels.
    Ward,
    /// Dual-representation inversion round trips and dual-space equations.
    Dual,
    /// Hardy-space reconstruction, Cauchy, Plancherel and norm identities.
    Hardy,
    /// Wiener–Khintchine spectral positivity of the bounded kernels.
    Positivity,
    /// Contraction and ladder limits between kernel families.
    Limits,
    /// Published-figure asymptotics and boundedness.
    Figures,
}

impl SuiteId {
    pub fn name(self) -> &'static str {
        match self {
            SuiteId::Lie => "lie",
            SuiteId::Ward => "ward",
            SuiteId::Dual => "dual",
            SuiteId::Hardy => "hardy",
            SuiteId::Positivity => "positivity",
            SuiteId::Limits => "limits",
            SuiteId::Figures => "figures",
        }
    }
}

/// One verified claim.
#[derive(Serialize)]
pub struct CaseReport {
    pub id: String,
    pub params: Value,
    pub observed: Value,
    pub expected: Value,
    pub tolerance: f64,
    pub pass: bool,
}

#[derive(Serialize)]
pub struct Summary {
    pub n_cases: usize,
    pub n_pass: usize,
    pub n_fail: usize,
    pub pass: bool,
}

#[derive(Serialize)]
struct SuiteReport<'a> {
    suite: &'static str,
    version: &'static str,
    config: &'a RunConfig,
    cases: Vec<CaseReport>,
    summary: Summary,
}

fn num_err(e: impl std::fmt::Display) -> CliError {
    CliError::Numeric(e.to_string())
}

/// A case whose observation is a deviation that must vanish within `tol`.
fn dev_case(id: &str, params: Value, deviation: f64, tol: f64) -> CaseReport {
    CaseReport {
        id: id.into(),
        params,
        observed: json!(deviation),
        expected: json!(0.0),
        tolerance: tol,
        pass: deviation.abs() <= tol,
    }
}

pub fn cmd_verify(suite: SuiteId, cfg: &RunConfig) -> Result<CmdOutcome, CliError> {
    reject_param_flags(cfg)?;
    if cfg.grid.is_some() {
        return Err(CliError::Usage(
            "--grid conflicts with the fixed published parameter set; \
             use `eval` for custom parameters"
                .into(),
        ));
    }
    match cfg.format {
        None | Some(OutputFormat::Json) => {}
        Some(other) => {
            return Err(CliError::Usage(format!(
                "verify reports are JSON; --format {other} is not supported"
            )));
        }
    }
    let cases = match suite {
        SuiteId::Lie => suite_lie()?,
        SuiteId::Ward => suite_ward(cfg)?,
        SuiteId::Dual => suite_dual(cfg)?,
        SuiteId::Hardy => suite_hardy(cfg)?,
        SuiteId::Positivity => suite_positivity(cfg)?,
        SuiteId::Limits => suite_limits(cfg)?,
        SuiteId::Figures => suite_figures(cfg)?,
    };
    let n_pass = cases.iter().filter(|c| c.pass).count();
    let summary = Summary {
        n_cases: cases.len(),
        n_pass,
        n_fail: cases.len() - n_pass,
        pass: n_pass == cases.len(),
    };
    let all_pass = summary.pass;
    let report = SuiteReport {
        suite: suite.name(),
        version: VERSION,
        config: cfg,
        cases,
        summary,
    };
    let text = format!(
        "{}\n",
        serde_json::to_string_pretty(&report).expect("suite reports serialize")
    );
    if let Some(out) = &cfg.out {
        atomic_write(out, &text)?;
    }
    let stderr = format!(
        "suite {}: {}/{} cases passed\n",
        suite.name(),
        n_pass,
        report.summary.n_cases
    );
    Ok(CmdOutcome {
        stdout: text,
        stderr,
        exit: u8::from(!all_pass),
    })
}

// ---------------------------------------------------------------- lie --

fn suite_lie() -> Result<Vec<CaseReport>, CliError> {
    let mut cases = Vec::new();
    for kind in [
        FamilyKind::OrthoConformal,
        FamilyKind::Meta1D,
        FamilyKind::Meta2D,
        FamilyKind::Meta1DDual,
        FamilyKind::Cga1D,
    ] {
        let family = GeneratorFamily::generic(kind);
        let rep = verify_algebra(&family, -1, 2).map_err(num_err)?;
        let failing: Vec<&str> = rep
            .cases
            .iter()
            .filter(|c| !c.pass)
            .map(|c| c.id.as_str())
            .collect();
        cases.push(CaseReport {
            id: format!("closure {}", rep.family),
            params: json!({
                "n_range": rep.n_range,
                "relations_checked": rep.cases.len(),
                "relations_skipped": rep.skipped.len(),
            }),
            observed: json!({ "failing": failing }),
            expected: json!({ "failing": [] }),
            tolerance: 0.0,
            pass: rep.all_pass,
        });
        if kind == FamilyKind::Cga1D {
            // The eigen-relations of the auxiliary generator N, one case
            // each: [N, X_n] = 0 and [N, Y_n] = Y_n, exactly.
            for c in rep.cases.iter().filter(|c| c.eigenvalue.is_some()) {
                let alpha = if c.id.contains(", X_") { 0 } else { 1 };
                cases.push(CaseReport {
                    id: c.id.clone(),
                    params: json!({ "family": "cga-1d" }),
                    observed: json!(c.eigenvalue),
                    expected: json!(alpha),
                    tolerance: 0.0,
                    pass: c.pass,
                });
            }
        }
    }
    let rep = verify_contraction(-1, 2).map_err(num_err)?;
    let failing: Vec<&str> = rep
        .cases
        .iter()
        .filter(|c| !c.pass)
        .map(|c| c.id.as_str())
        .collect();
    cases.push(CaseReport {
        id: "contraction meta-1d-dual -> cga-1d".into(),
        params: json!({ "n_range": rep.n_range, "generators_checked": rep.cases.len() }),
        observed: json!({ "failing": failing }),
        expected: json!({ "failing": [] }),
        tolerance: 0.0,
        pass: rep.all_pass,
    });
    Ok(cases)
}

// --------------------------------------------------------------- ward --

fn suite_ward(cfg: &RunConfig) -> Result<Vec<CaseReport>, CliError> {
    let tol = cfg.tol.unwrap_or(WARD_TOL);
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut cases = Vec::new();

    // Generic smooth sample points: t = t1 − t2 ∈ [1.2, 2.8] and positive
    // scaled separations keep every kernel inside its holomorphic sector,
    // several stencil widths away from singular rays and cusps.
    let mut pts1 = Vec::with_capacity(20);
    for _ in 0..20 {
        let mut p = NumericPoint::new();
        p.set(Var::T, rng.gen_range(1.0..2.0))
            .set(Var::R, rng.gen_range(0.05..0.45))
            .set(Var::T2, rng.gen_range(-0.8..-0.2))
            .set(Var::R2, rng.gen_range(-0.45..-0.05));
        pts1.push(p);
    }
    let mut pts2 = Vec::with_capacity(20);
    for _ in 0..20 {
        let mut p = NumericPoint::new();
        p.set(Var::T, rng.gen_range(1.0..2.0))
            .set(Var::RPar, rng.gen_range(0.05..0.45))
            .set(Var::RPerp, rng.gen_range(0.05..0.45))
            .set(Var::T2, rng.gen_range(-0.8..-0.2))
            .set(Var::RPar2, rng.gen_range(-0.45..-0.05))
            .set(Var::RPerp2, rng.gen_range(-0.45..-0.05));
        pts2.push(p);
    }

    let fam1 = GeneratorFamily::meta1d(
        CRat::from_ratio(11, 50),
        CRat::from_ratio(33, 100),
        MuSpec::ratio(1, 1),
    )
    .map_err(num_err)?;
    let qn = QuantumNumbers1D {
        delta: 0.22,
        gamma: 0.33,
        mu: 1.0,
    };
    let holo1 = Kernel::Meta1DHolo { qn1: qn, qn2: qn };
    let reg1 = Kernel::Meta1DReg { qn1: qn, qn2: qn };
    for (kernel, tag) in [(&holo1, "meta1d-holo"), (&reg1, "meta1d-reg")] {
        let f = kernel_fn_1d(kernel);
        for label in [GenLabel::X, GenLabel::Y] {
            for n in -1..=1 {
                let g = make_generator(&fam1, label, n).map_err(num_err)?;
                let lifted = lift_two_body(&g, &g).map_err(num_err)?;
                let name = format!("{label}_{n}");
                let rep = ward_case(&f, &lifted, &name, &pts1, tol)?;
                cases.push(CaseReport {
                    id: format!("ward {tag} {name}"),
                    params: ward_params(tag, pts1.len()),
                    observed: json!(rep.0),
                    expected: json!(0.0),
                    tolerance: tol,
                    pass: rep.1,
                });
            }
        }
    }

    let fam2 = GeneratorFamily::meta2d(
        CRat::from_ratio(11, 50),
        CRat::from_ratio(1, 4),
        CRat::from_ratio(3, 8),
        MuSpec::ratio(1, 1),
    )
    .map_err(num_err)?;
    let qn2 = QuantumNumbers2D {
        delta: 0.22,
        gamma_par: 0.25,
        gamma_perp: 0.375,
        mu: 1.0,
    };
    let holo2 = Kernel::Meta2DHolo { qn1: qn2, qn2 };
    let f2 = kernel_fn_2d(&holo2);
    for label in [GenLabel::A, GenLabel::BPlus, GenLabel::BMinus] {
        for n in -1..=1 {
            let g = make_generator(&fam2, label, n).map_err(num_err)?;
            let lifted = lift_two_body(&g, &g).map_err(num_err)?;
            let name = format!("{label}_{n}");
            let rep = ward_case(&f2, &lifted, &name, &pts2, tol)?;
            cases.push(CaseReport {
                id: format!("ward meta2d-holo {name}"),
                params: ward_params("meta2d-holo", pts2.len()),
                observed: json!(rep.0),
                expected: json!(0.0),
                tolerance: tol,
                pass: rep.1,
            });
        }
    }

    // Negative control: mismatched scaling dimensions δ₂ = δ₁ + 0.01 leave
    // a zeroth-order covariance defect of order |Δδ| that the residual must
    // resolve cleanly above the acceptance threshold.
    let fam_off = GeneratorFamily::meta1d(
        CRat::from_ratio(23, 100),
        CRat::from_ratio(33, 100),
        MuSpec::ratio(1, 1),
    )
    .map_err(num_err)?;
    let g1 = make_generator(&fam1, GenLabel::X, 0).map_err(num_err)?;
    let g2 = make_generator(&fam_off, GenLabel::X, 0).map_err(num_err)?;
    let lifted = lift_two_body(&g1, &g2).map_err(num_err)?;
    let f = kernel_fn_1d(&holo1);
    let (max_residual, pass) = ward_case(&f, &lifted, "X_0 mismatched", &pts1, tol)?;
    cases.push(CaseReport {
        id: "ward negative control: delta2 offset by 1e-2".into(),
        params: json!({ "delta1": 0.22, "delta2": 0.23, "points": pts1.len() }),
        observed: json!(max_residual),
        expected: json!("residual of order 1e-2, above the detection floor 1e-4"),
        tolerance: 1e-4,
        pass: !pass && max_residual > 1e-4,
    });
    Ok(cases)
}

fn ward_params(kernel: &str, points: usize) -> Value {
    json!({
        "kernel": kernel,
        "points": points,
        "fd_order": 4,
        "steps": WARD_STEPS,
    })
}

fn ward_case<F>(
    f: &F,
    lifted: &DiffOp,
    name: &str,
    points: &[NumericPoint],
    tol: f64,
) -> Result<(f64, bool), CliError>
where
    F: Fn(&NumericPoint) -> Result<EvalResult, KernelError>,
{
    let rep = ward_residual(f, lifted, name, points, &WARD_STEPS, FdOrder::Four, tol)
        .map_err(num_err)?;
    Ok((rep.max_residual, rep.pass))
}

// --------------------------------------------------------------- dual --

fn suite_dual(cfg: &RunConfig) -> Result<Vec<CaseReport>, CliError> {
    let tol = cfg.tol.unwrap_or(PIPELINE_TOL);
    let mut cases = Vec::new();

    // Round trip 1: flat sector spectra reproduce the regularized 1D kernel
    // pointwise across both sectors and the boundary.
    let spectra = SectorSpectra1D::flat(8.0).map_err(num_err)?;
    let (delta, gmag, mu) = (0.22, 0.33, 1.0);
    let mut max_rel = 0.0_f64;
    let mut checked = 0usize;
    for it in 0..10 {
        let t = -2.0 + 4.1 * (it as f64 + 0.5) / 10.0;
        for ir in 0..100 {
            let r = -30.0 + 60.0 * ir as f64 / 99.0;
            let sm = sector_map_1d(t, r, mu).map_err(num_err)?;
            let gamma = if sm.lam_reg < 0.0 { -gmag } else { gmag };
            let qn = QuantumNumbers1D { delta, gamma, mu };
            let dual = t.abs().powf(-2.0 * delta)
                * invert_to_physical_1d(&qn, &qn, sm.lam_reg, &spectra).map_err(num_err)?;
            let expect = eval_meta1d_reg(&Point1D { t, r }, &Point1D::default(), &qn, &qn)
                .map_err(num_err)?
                .value
                .re;
            max_rel = max_rel.max((dual - expect).abs() / expect.abs());
            checked += 1;
        }
    }
    cases.push(dev_case(
        "round trip 1d: flat spectra vs regularized kernel",
        json!({ "points": checked, "delta": delta, "gamma": gmag, "mu": mu }),
        max_rel,
        tol,
    ));

    // Round trip 2: the factorized 2D inversion against the regularized 2D
    // kernel over a plane grid crossing every sector pair.
    let spectra2 = SectorSpectra2D::flat(8.0).map_err(num_err)?;
    let (delta2, gp_mag, gq_mag, mu2) = (0.3, 0.45, 0.2, 1.2);
    let mut max_rel2 = 0.0_f64;
    let mut checked2 = 0usize;
    for it in 0..10 {
        let t = -1.5 + 3.2 * (it as f64 + 0.5) / 10.0;
        for ip in 0..10 {
            let rp = -8.0 + 16.0 * ip as f64 / 9.0;
            for iq in 0..10 {
                let rq = -6.0 + 12.0 * iq as f64 / 9.0;
                let sm = sector_map_2d(t, rp, rq, mu2).map_err(num_err)?;
                let gamma_par = if sm.lam_par_reg < 0.0 { -gp_mag } else { gp_mag };
                let gamma_perp = if sm.lam_perp < 0.0 { -gq_mag } else { gq_mag };
                let qn = QuantumNumbers2D {
                    delta: delta2,
                    gamma_par,
                    gamma_perp,
                    mu: mu2,
                };
                let dual = t.abs().powf(-2.0 * delta2)
                    * invert_to_physical_2d(&qn, &qn, sm.lam_par_reg, sm.lam_perp, &spectra2)
                        .map_err(num_err)?;
                let expect = eval_meta2d_reg(
                    &Point2D {
                        t,
                        r_par: rp,
                        r_perp: rq,
                    },
                    &Point2D::default(),
                    &qn,
                    &qn,
                )
                .map_err(num_err)?
                .value
                .re;
                max_rel2 = max_rel2.max((dual - expect).abs() / expect.abs());
                checked2 += 1;
            }
        }
    }
    cases.push(dev_case(
        "round trip 2d: flat spectra vs regularized kernel",
        json!({
            "points": checked2,
            "delta": delta2,
            "gamma_par": gp_mag,
            "gamma_perp": gq_mag,
            "mu": mu2,
        }),
        max_rel2,
        tol,
    ));

    // Exact sector rules of the inversion gate.
    let qn_half = QuantumNumbers1D {
        delta: 0.1,
        gamma: 0.5,
        mu: 1.0,
    };
    let excluded = invert_to_physical_1d(&qn_half, &qn_half, -0.3, &spectra).map_err(num_err)?;
    cases.push(CaseReport {
        id: "sector rule: excluded sector yields exact zero".into(),
        params: json!({ "gamma_over_mu": 0.5, "lambda": -0.3 }),
        observed: json!(excluded),
        expected: json!(0.0),
        tolerance: 0.0,
        pass: excluded == 0.0,
    });
    let boundary = invert_to_physical_1d(&qn_half, &qn_half, 0.0, &spectra).map_err(num_err)?;
    cases.push(CaseReport {
        id: "sector rule: boundary lies in the allowed closure".into(),
        params: json!({ "gamma_over_mu": 0.5, "lambda": 0.0 }),
        observed: json!(boundary),
        expected: json!(1.0),
        tolerance: 0.0,
        pass: boundary == 1.0,
    });
    let qn_zero = QuantumNumbers1D {
        delta: 0.1,
        gamma: 0.0,
        mu: 1.0,
    };
    let ungated = invert_to_physical_1d(&qn_zero, &qn_zero, -2.0, &spectra).map_err(num_err)?;
    cases.push(CaseReport {
        id: "sector rule: vanishing rapidity disables the gate".into(),
        params: json!({ "gamma_over_mu": 0.0, "lambda": -2.0 }),
        observed: json!(ungated),
        expected: json!(1.0),
        tolerance: 0.0,
        pass: ungated == 1.0,
    });

    // Dual-space covariance equations on a closed-form scaling function.
    let ward_tol = cfg.tol.unwrap_or(WARD_TOL);
    let d1 = 0.22;
    let g = |a: Complex64| (Complex64::new(0.0, 1.0) * a - a * a * 0.1).exp();
    let arg = |eta: f64, t: f64, xi: f64| {
        Complex64::new(eta / 2.0, 0.0)
            + Complex64::new(0.0, 1.0) * Complex64::new(1.0 + xi / t, 0.0).ln()
    };
    let scaling_1d = move |p: &DualPoint| t_pow(p.t, -2.0 * d1) * g(arg(p.eta, p.t, p.xi));
    let scaling_2d = move |p: &DualPoint| {
        t_pow(p.t, -2.0 * d1) * g(arg(p.eta, p.t, p.xi)) * g(arg(p.eta_bar, p.t, p.xi_bar))
    };
    let pts: Vec<DualPoint> = (0..8)
        .map(|k| DualPoint {
            eta: -0.4 + 0.17 * k as f64,
            eta_bar: 0.3 - 0.11 * k as f64,
            t: 0.8 + 0.1 * k as f64,
            xi: 0.2 + 0.09 * k as f64,
            xi_bar: 0.1 + 0.06 * k as f64,
        })
        .collect();
    let pdes_1d = [
        DualPde::Advect1D,
        DualPde::Euler1D {
            delta1: d1,
            delta2: d1,
        },
    ];
    let pdes_2d = [
        DualPde::Advect2D,
        DualPde::AdvectBar2D,
        DualPde::Euler2D { delta1: d1 },
    ];
    for (pde, two_d) in pdes_1d
        .iter()
        .map(|p| (*p, false))
        .chain(pdes_2d.iter().map(|p| (*p, true)))
    {
        let f: &dyn Fn(&DualPoint) -> Complex64 = if two_d { &scaling_2d } else { &scaling_1d };
        let rep = dual_ward_residual(f, pde, &pts, &WARD_STEPS, FdOrder::Four, ward_tol)
            .map_err(num_err)?;
        cases.push(CaseReport {
            id: format!("dual equation {}", pde.name()),
            params: json!({ "points": pts.len(), "fd_order": 4, "steps": WARD_STEPS }),
            observed: json!(rep.max_residual),
            expected: json!(0.0),
            tolerance: ward_tol,
            pass: rep.pass,
        });
    }
    Ok(cases)
}

fn t_pow(t: f64, e: f64) -> Complex64 {
    Complex64::new(t.powf(e), 0.0)
}

// -------------------------------------------------------------- hardy --

fn exp_closed(z: Complex64) -> Complex64 {
    1.0 / ((2.0 * std::f64::consts::PI).sqrt() * (Complex64::new(1.0, 0.0) - Complex64::i() * z))
}

fn suite_hardy(cfg: &RunConfig) -> Result<Vec<CaseReport>, CliError> {
    let mut cases = Vec::new();

    // Norm identity of the power-law spectrum family.
    let prop_tol = cfg.tol.unwrap_or(PROP_NORM_TOL);
    for nu in [0.5, 1.0, 1.5] {
        for a in [0.5, 1.0, 2.0] {
            let rep = proposition_norm(nu, a, 0.0).map_err(num_err)?;
            cases.push(dev_case(
                &format!("norm identity nu={nu} v+lambda={a}"),
                json!({ "nu": nu, "v_plus_lambda": a }),
                rep.abs_diff / rep.closed_form.abs(),
                prop_tol,
            ));
        }
    }
    // The ν = 1/2, v + λ = 1 member has the exact value π.
    let rep = proposition_norm(0.5, 1.0, 0.0).map_err(num_err)?;
    cases.push(dev_case(
        "norm identity special value pi",
        json!({ "nu": 0.5, "v_plus_lambda": 1.0 }),
        rep.quadrature - std::f64::consts::PI,
        PROP_NORM_SPECIAL_TOL,
    ));

    // Half-line Fourier reconstruction of the exponential spectrum against
    // its closed form across the tube.
    let spec = HalfLineSpectrum::exponential();
    let tube: [(f64, f64); 10] = [
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
    let mut max_dev = 0.0_f64;
    for (x, y) in tube {
        let z = TubePoint::new(x, y).map_err(num_err)?;
        let rec = hardy_reconstruct_1d(&spec, &z).map_err(num_err)?;
        max_dev = max_dev.max((rec.value - exp_closed(z.z())).norm());
    }
    cases.push(dev_case(
        "fourier reconstruction vs closed form",
        json!({ "spectrum": "exponential", "tube_points": tube.len() }),
        max_dev,
        cfg.tol.unwrap_or(HARDY_FOURIER_TOL),
    ));

    // Cauchy boundary representation: value recovered from boundary data
    // alone, conjugate-pole residual compatible with zero.
    let cauchy_tol = cfg.tol.unwrap_or(HARDY_CAUCHY_TOL);
    let boundary = BoundaryLine::from_fn(|x| exp_closed(Complex64::new(x, 0.0)));
    for (x, y) in [(0.0, 2.0), (1.3, 0.9)] {
        let z = TubePoint::new(x, y).map_err(num_err)?;
        let rep = cauchy_boundary_rep(&boundary, &z).map_err(num_err)?;
        let dev = (rep.value - exp_closed(z.z()))
            .norm()
            .max(rep.conjugate_residual.norm());
        cases.push(dev_case(
            &format!("cauchy representation at z = {x} + {y}i"),
            json!({ "x": x, "y": y }),
            dev,
            cauchy_tol,
        ));
    }

    // Quadrant factorization: the tensor quadrature of a product spectrum
    // equals the product of the 1D closed forms.
    let factor_tol = cfg.tol.unwrap_or(HARDY_FACTOR_TOL);
    let quadrant = QuadrantSpectrum::product(&spec, &spec);
    let mut max_rel = 0.0_f64;
    let quad_pts = [(0.0, 1.0, 0.0, 1.0), (0.7, 0.4, -1.1, 0.9), (-0.5, 1.5, 0.3, 0.6)];
    for (x1, y1, x2, y2) in quad_pts {
        let z = TubePoint2D::new(x1, y1, x2, y2).map_err(num_err)?;
        let rec = hardy_reconstruct_2d(&quadrant, &z).map_err(num_err)?;
        let expect = exp_closed(z.z1()) * exp_closed(z.z2());
        max_rel = max_rel.max((rec.value - expect).norm() / expect.norm());
    }
    cases.push(dev_case(
        "quadrant reconstruction factorizes",
        json!({ "points": quad_pts.len() }),
        max_rel,
        factor_tol,
    ));

    // Plancherel identity with the e^{−2yζ} weight, against the exact
    // spectral value 1/(2 + 2y).
    let plancherel_tol = cfg.tol.unwrap_or(PLANCHEREL_TOL);
    for y in [0.1, 0.5, 1.0, 2.0] {
        let rep = plancherel_check(&spec, y).map_err(num_err)?;
        let exact = 1.0 / (2.0 + 2.0 * y);
        let dev = rep
            .rel_deviation
            .max((rep.spectral_side - exact).abs() / exact);
        cases.push(dev_case(
            &format!("plancherel identity at y = {y}"),
            json!({ "y": y, "line_side": rep.line_side, "spectral_side": rep.spectral_side }),
            dev,
            plancherel_tol,
        ));
    }

    // Hardy norm: sup over heights of the line L² integral, attained as
    // y → 0, monotone in y.
    let norm_rep = hardy_norm_sup(&|x, y| exp_closed(Complex64::new(x, y)), &[0.001, 0.1, 0.5, 1.0, 2.0])
        .map_err(num_err)?;
    let m2_exact = 1.0 / (2.0 + 2.0 * 0.001);
    let m2_dev = (norm_rep.m_squared - m2_exact).abs() / m2_exact;
    cases.push(CaseReport {
        id: "hardy norm monotone and attained at the boundary".into(),
        params: json!({ "heights": [0.001, 0.1, 0.5, 1.0, 2.0] }),
        observed: json!({
            "m_squared": norm_rep.m_squared,
            "monotone_nonincreasing": norm_rep.monotone_nonincreasing,
        }),
        expected: json!({ "m_squared": m2_exact, "monotone_nonincreasing": true }),
        tolerance: plancherel_tol,
        pass: norm_rep.monotone_nonincreasing && m2_dev <= plancherel_tol,
    });

    // Uniform y^{−1/2} height decay and vanishing at large heights.
    let xs: Vec<f64> = (-10..=10).map(|k| k as f64 * 0.5).collect();
    let rep = limit_behavior_check(&spec, &xs, &[0.25, 1.0, 4.0, 1000.0]).map_err(num_err)?;
    cases.push(CaseReport {
        id: "height decay bound sqrt(y)|f| <= f_inf".into(),
        params: json!({ "x_samples": xs.len(), "heights": [0.25, 1.0, 4.0, 1000.0] }),
        observed: json!({ "max_scaled": rep.max_scaled, "bound": rep.f_inf_bound }),
        expected: json!("max_scaled <= bound and sup|f| vanishing in y"),
        tolerance: 1e-6,
        pass: rep.pass,
    });

    // Arc suppression: hypotheses satisfied by e^{iz}, conclusion |F₂(R)|
    // ≤ f₀/(δR) with genuine 1/R scaling.
    let arc = lemma_check(
        &|z: Complex64| (Complex64::i() * z).exp(),
        1.0,
        1.0,
        &[10.0, 100.0, 1000.0],
    )
    .map_err(num_err)?;
    cases.push(CaseReport {
        id: "arc suppression for e^{iz}".into(),
        params: json!({ "f0": 1.0, "delta": 1.0, "radii": [10.0, 100.0, 1000.0] }),
        observed: json!({
            "applicable": arc.applicable,
            "inverse_radius_scaling_ok": arc.inverse_radius_scaling_ok,
        }),
        expected: json!({ "applicable": true, "inverse_radius_scaling_ok": true }),
        tolerance: 0.0,
        pass: arc.pass && arc.applicable && arc.inverse_radius_scaling_ok,
    });
    // Negative control: 1/(z + 2i) decays only algebraically, so the decay
    // hypothesis fails and the arc claims must be reported inapplicable.
    let arc_neg = lemma_check(
        &|z: Complex64| 1.0 / (z + Complex64::new(0.0, 2.0)),
        1.0,
        1.0,
        &[10.0, 100.0],
    )
    .map_err(num_err)?;
    cases.push(CaseReport {
        id: "arc suppression control: algebraic decay is inapplicable".into(),
        params: json!({ "f0": 1.0, "delta": 1.0, "radii": [10.0, 100.0] }),
        observed: json!({ "applicable": arc_neg.applicable }),
        expected: json!({ "applicable": false }),
        tolerance: 0.0,
        pass: !arc_neg.applicable && arc_neg.pass,
    });

    // The first-quadrant cone is self-dual on a discrete direction grid.
    let cone = dual_cone_check(64).map_err(num_err)?;
    cases.push(CaseReport {
        id: "first quadrant self-dual".into(),
        params: json!({ "directions": cone.n_grid }),
        observed: json!({ "max_boundary_deviation": cone.max_boundary_deviation }),
        expected: json!({ "self_dual": true }),
        tolerance: 0.0,
        pass: cone.self_dual,
    });
    Ok(cases)
}

// --------------------------------------------------------- positivity --

fn suite_positivity(_cfg: &RunConfig) -> Result<Vec<CaseReport>, CliError> {
    let mut cases = Vec::new();
    let line_grid = GridSpec {
        half_width: 200.0,
        points: 1 << 14,
    };
    let kernel1 = Kernel::symmetric_1d(
        CorrelatorKind::Meta1DReg,
        QuantumNumbers1D {
            delta: 0.22,
            gamma: 0.33,
            mu: 1.0,
        },
    )
    .map_err(num_err)?;
    for (grid, tag) in [(line_grid, "base"), (line_grid.doubled(), "doubled")] {
        let rep = wiener_khintchine_1d(&kernel1, 1.0, &grid).map_err(num_err)?;
        cases.push(positivity_case(
            &format!("spectrum 1d regularized kernel ({tag} grid)"),
            &rep,
            true,
        ));
    }

    // Radial sections of the two published 2D parameter sets, all four
    // section angles, base and doubled grids. Sections off the axes are
    // not even in r, so only the spectral real part is sign-constrained.
    let radial_grid = GridSpec {
        half_width: 400.0,
        points: 1 << 15,
    };
    for (fig, gamma_perp) in [("fig2", 0.0), ("fig3", 1.5)] {
        let kernel = fig2d_kernel(gamma_perp);
        for phi_deg in FIG_ANGLES_DEG {
            let even = gamma_perp == 0.0 || phi_deg == 0.0 || phi_deg == 90.0;
            for (grid, tag) in [(radial_grid, "base"), (radial_grid.doubled(), "doubled")] {
                let rep =
                    wiener_khintchine_radial(&kernel, 1.0, phi_deg.to_radians(), &grid)
                        .map_err(num_err)?;
                cases.push(positivity_case(
                    &format!("spectrum {fig} radial section phi={phi_deg} ({tag} grid)"),
                    &rep,
                    even,
                ));
            }
        }
    }

    // Negative control: the rectangular pulse is not positive definite and
    // its sinc spectrum must be flagged.
    let pulse = |r: f64| if r.abs() <= 1.0 { 1.0 } else { 0.0 };
    let rep = wiener_khintchine_fn(
        &pulse,
        &GridSpec {
            half_width: 20.0,
            points: 4096,
        },
    )
    .map_err(num_err)?;
    cases.push(CaseReport {
        id: "negative control: rectangular pulse is not positive definite".into(),
        params: json!({ "half_width": 20.0, "points": 4096 }),
        observed: json!({ "re_min": rep.re_min, "re_max": rep.re_max }),
        expected: json!("a clearly negative spectral minimum"),
        tolerance: POSITIVITY_TOL,
        pass: !rep.pass,
    });
    Ok(cases)
}

fn positivity_case(
    id: &str,
    rep: &metaconf::analysis::PositivityReport,
    expect_even: bool,
) -> CaseReport {
    CaseReport {
        id: id.into(),
        params: json!({
            "kernel": rep.kernel,
            "t": rep.t,
            "half_width": rep.grid.half_width,
            "points": rep.grid.points,
        }),
        observed: json!({
            "re_min": rep.re_min,
            "re_max": rep.re_max,
            "im_max_abs": rep.im_max_abs,
            "input_even": rep.input_even,
        }),
        expected: json!({ "re_min": ">= -tol * re_max", "input_even": expect_even }),
        tolerance: POSITIVITY_TOL,
        pass: rep.pass && rep.input_even == expect_even,
    }
}

// -------------------------------------------------------------- limits --

fn suite_limits(cfg: &RunConfig) -> Result<Vec<CaseReport>, CliError> {
    let mut cases = Vec::new();
    let mus = [1e-1, 1e-2, 1e-3, 1e-4];

    // μ → 0 contraction onto the regularized galilean kernels, linear rate.
    let r_grid: Vec<f64> = (-20..=20).map(|k| k as f64 * 0.05).collect();
    let rep = mu_limit_check_1d(0.22, 0.3, 1.0, &mus, &r_grid).map_err(num_err)?;
    cases.push(CaseReport {
        id: "contraction rate 1d: meta kernel -> galilean kernel".into(),
        params: json!({ "delta": 0.22, "gamma": 0.3, "t": 1.0, "mus": mus }),
        observed: json!({
            "error_ratios": rep.ratios,
            "pointwise_monotone": rep.pointwise_monotone,
            "exact_at_origin": rep.exact_at_origin,
        }),
        expected: json!("error linear in mu: ratios within 20% of 10"),
        tolerance: 0.2,
        pass: rep.pass,
    });
    let pts: Vec<(f64, f64)> = (-6..=6)
        .flat_map(|a| (-6..=6).map(move |b| (a as f64 * 0.1, b as f64 * 0.1)))
        .collect();
    let rep = mu_limit_check_2d(0.3, 0.4, 0.2, 1.0, &mus, &pts).map_err(num_err)?;
    cases.push(CaseReport {
        id: "contraction rate 2d: meta kernel -> galilean kernel".into(),
        params: json!({
            "delta": 0.3,
            "gamma_par": 0.4,
            "gamma_perp": 0.2,
            "t": 1.0,
            "mus": mus,
        }),
        observed: json!({
            "error_ratios": rep.ratios,
            "pointwise_monotone": rep.pointwise_monotone,
            "exact_at_origin": rep.exact_at_origin,
        }),
        expected: json!("error linear in mu: ratios within 20% of 10"),
        tolerance: 0.2,
        pass: rep.pass,
    });

    // Ladder identity: the 2D kernel restricted to the parallel axis is
    // the 1D kernel with the same parallel rapidity, for any transverse
    // rapidity.
    let ltol = cfg.tol.unwrap_or(LADDER_TOL);
    let qn2 = QuantumNumbers2D {
        delta: 0.22,
        gamma_par: 0.3,
        gamma_perp: 0.7,
        mu: 1.0,
    };
    let qn1 = QuantumNumbers1D {
        delta: 0.22,
        gamma: 0.3,
        mu: 1.0,
    };
    let mut max_rel = 0.0_f64;
    let mut n_pts = 0usize;
    for t in [1.0, -0.6, 2.3] {
        for k in 0..=40 {
            let rp = -3.0 + 6.0 * k as f64 / 40.0;
            let a = eval_meta2d_reg(
                &Point2D {
                    t,
                    r_par: rp,
                    r_perp: 0.0,
                },
                &Point2D::default(),
                &qn2,
                &qn2,
            )
            .map_err(num_err)?
            .value
            .re;
            let b = eval_meta1d_reg(&Point1D { t, r: rp }, &Point1D::default(), &qn1, &qn1)
                .map_err(num_err)?
                .value
                .re;
            max_rel = max_rel.max((a - b).abs() / b.abs());
            n_pts += 1;
        }
    }
    cases.push(dev_case(
        "ladder: 2d kernel on the parallel axis equals the 1d kernel",
        json!({ "gamma_perp": 0.7, "points": n_pts }),
        max_rel,
        ltol,
    ));

    // Ladder identity: on the transverse axis with δ = |γ∥/μ| the 2D
    // kernel collapses onto the ortho-conformal kernel with rapidity γ⊥
    // (forward cone t > 0, r⊥ ≥ 0).
    let qn2o = QuantumNumbers2D {
        delta: 0.3,
        gamma_par: 0.3,
        gamma_perp: 0.45,
        mu: 1.0,
    };
    let qno = QuantumNumbers1D {
        delta: 0.3,
        gamma: 0.45,
        mu: 1.0,
    };
    let mut max_rel = 0.0_f64;
    let mut n_pts = 0usize;
    for t in [0.7, 1.0, 2.3] {
        for k in 0..=30 {
            let rq = 3.0 * k as f64 / 30.0;
            let a = eval_meta2d_reg(
                &Point2D {
                    t,
                    r_par: 0.0,
                    r_perp: rq,
                },
                &Point2D::default(),
                &qn2o,
                &qn2o,
            )
            .map_err(num_err)?
            .value
            .re;
            let b = eval_ortho_physical(t, rq, &qno).map_err(num_err)?.value.re;
            max_rel = max_rel.max((a - b).abs() / b.abs());
            n_pts += 1;
        }
    }
    cases.push(dev_case(
        "ladder: 2d kernel on the transverse axis equals the ortho kernel",
        json!({
            "delta": 0.3,
            "gamma_perp": 0.45,
            "points": n_pts,
            "domain": "t > 0, r_perp >= 0",
        }),
        max_rel,
        ltol,
    ));
    Ok(cases)
}

// ------------------------------------------------------------- figures --

fn suite_figures(cfg: &RunConfig) -> Result<Vec<CaseReport>, CliError> {
    let mut cases = Vec::new();

    // The transverse-rapidity-free 2D kernel decays as r^{−2|γ∥/μ|} =
    // r^{−1/2} along every ray.
    let k2 = fig2d_kernel(0.0);
    for phi_deg in FIG_ANGLES_DEG {
        let tol = cfg.tol.unwrap_or(SLOPE_TOL);
        let fit = asymptotic_exponent(&k2, 1.0, phi_deg.to_radians(), tol).map_err(num_err)?;
        cases.push(CaseReport {
            id: format!("asymptotic slope gamma_perp=0 phi={phi_deg}"),
            params: json!({ "window": fit.window, "n_points": fit.n_points }),
            observed: json!(fit.slope),
            expected: json!(fit.expected),
            tolerance: tol,
            pass: fit.pass,
        });
    }
    // With γ⊥ = 3/2 the transverse damping saturates and the same algebraic
    // exponent re-emerges beyond the crossover (off-axis rays; the
    // transverse axis saturates too slowly for a clean two-decade window).
    let k3 = fig2d_kernel(1.5);
    for phi_deg in [30.0_f64, 60.0] {
        let tol = cfg.tol.unwrap_or(SLOPE_TOL_CROSSOVER);
        let fit =
            asymptotic_exponent(&k3, 1.0, phi_deg.to_radians(), tol).map_err(num_err)?;
        cases.push(CaseReport {
            id: format!("asymptotic slope gamma_perp=1.5 phi={phi_deg}"),
            params: json!({ "window": fit.window, "n_points": fit.n_points }),
            observed: json!(fit.slope),
            expected: json!(fit.expected),
            tolerance: tol,
            pass: fit.pass,
        });
    }

    // Radial sections decrease monotonically outward on every ray.
    for phi_deg in FIG_ANGLES_DEG {
        let phi = phi_deg.to_radians();
        let (cp, sp) = (phi.cos(), phi.sin());
        let mut monotone = true;
        let mut prev = f64::INFINITY;
        let n = 121;
        for k in 0..n {
            let r = 1e-2 * (1e5_f64).powf(k as f64 / (n - 1) as f64);
            let v = k3
                .eval_sep2(1.0, r * cp, r * sp)
                .map_err(num_err)?
                .value
                .re;
            if v > prev * (1.0 + 1e-12) {
                monotone = false;
            }
            prev = v;
        }
        cases.push(CaseReport {
            id: format!("radial section monotone decreasing phi={phi_deg}"),
            params: json!({ "gamma_perp": 1.5, "r_range": [1e-2, 1e3], "points": n }),
            observed: json!({ "monotone": monotone }),
            expected: json!({ "monotone": true }),
            tolerance: 0.0,
            pass: monotone,
        });
    }

    // Boundedness of the regularized 1D kernel: the supremum over the
    // section equals the amplitude bound |t|^{−2δ}, attained at Δr = 0.
    let reg = Kernel::symmetric_1d(
        CorrelatorKind::Meta1DReg,
        QuantumNumbers1D {
            delta: 0.22,
            gamma: 0.33,
            mu: 1.0,
        },
    )
    .map_err(num_err)?;
    let grid: Vec<f64> = (0..481).map(|j| -1.0 + j as f64 / 240.0).collect();
    for t in [-0.6, 1.0, 0.35] {
        let rep = boundedness_scan(&reg, t, &grid).map_err(num_err)?;
        let sup_exact = (rep.sup_value - rep.bound).abs() <= 1e-12 * rep.bound;
        cases.push(CaseReport {
            id: format!("regularized kernel bounded at t={t}"),
            params: json!({ "grid_points": grid.len() }),
            observed: json!({
                "sup_value": rep.sup_value,
                "sup_location": rep.sup_location,
                "bound": rep.bound,
            }),
            expected: json!({ "sup": "= |t|^{-2 delta} at dr = 0" }),
            tolerance: 1e-12,
            pass: rep.pass && sup_exact,
        });
    }
    // The holomorphic kernel on the same section blows up on the singular
    // ray 1 + μΔr/t = 0, located at Δr = 0.6 for t = −0.6.
    let holo = Kernel::symmetric_1d(
        CorrelatorKind::Meta1DHolo,
        QuantumNumbers1D {
            delta: 0.22,
            gamma: 0.33,
            mu: 1.0,
        },
    )
    .map_err(num_err)?;
    let rep = boundedness_scan(&holo, -0.6, &grid).map_err(num_err)?;
    let loc = rep.singular_location;
    let loc_ok = loc.map_or(false, |l| (l - 0.6).abs() <= 1.0 / 240.0 + 1e-12);
    cases.push(CaseReport {
        id: "holomorphic kernel singular on the ray t = -mu dr".into(),
        params: json!({ "t": -0.6, "grid_points": grid.len() }),
        observed: json!({ "singular_location": loc, "n_singular_points": rep.n_singular_points }),
        expected: json!({ "singular_location": 0.6 }),
        tolerance: 1.0 / 240.0,
        pass: !rep.pass && loc_ok,
    });
    Ok(cases)
}
