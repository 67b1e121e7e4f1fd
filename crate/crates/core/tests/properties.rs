//! Randomized invariant checks. Where the library is exact (rational
//! arithmetic, operator algebra, gate rules) the properties assert exact
//! equality; where it is floating (kernels, quadrature, log coordinates)
//! they assert the pinned tolerances on randomly drawn parameters instead
//! of hand-picked ones.

use num_complex::Complex64;
use proptest::prelude::*;

use metaconf::corrkernels::{
    eval_meta1d_holo, eval_meta1d_reg, eval_meta2d_reg, eval_ortho_physical, Diagnostic, Point1D,
    Point2D, QuantumNumbers1D, QuantumNumbers2D,
};
use metaconf::dualpipe::{
    invert_to_physical_1d, invert_to_physical_2d, sector_map_1d, Sector, SectorSpectra1D,
    SectorSpectra2D,
};
use metaconf::hardy::{hardy_reconstruct_1d, proposition_norm, HalfLineSpectrum, TubePoint};
use metaconf::liealg::{
    make_generator, verify_algebra, CRat, DiffOp, FamilyKind, GenLabel, GeneratorFamily, Mono,
    MultiPoly, NumericPoint, Var, ALL_VARS,
};
use metaconf::analysis::cusp_detect;

// ---------------------------------------------------------- strategies --

/// Exact complex rationals with small numerators and denominators.
fn arb_crat() -> impl Strategy<Value = CRat> {
    (-9i64..=9, 1i64..=9, -9i64..=9, 1i64..=9).prop_map(|(p, q, r, s)| {
        CRat::from_ratio(p, q).add(&CRat::from_ratio(r, s).mul(&CRat::i()))
    })
}

/// Variables the random polynomials range over.
const POLY_VARS: [Var; 3] = [Var::T, Var::R, Var::Mu];

/// Sparse Laurent polynomials in t, r, μ with exponents in [−2, 2].
fn arb_poly() -> impl Strategy<Value = MultiPoly> {
    proptest::collection::vec(
        (
            arb_crat(),
            proptest::collection::vec((0usize..POLY_VARS.len(), -2i32..=2), 0..3),
        ),
        0..4,
    )
    .prop_map(|terms| {
        let mut p = MultiPoly::zero();
        for (c, factors) in terms {
            let mut m = Mono::unit();
            for (vi, k) in factors {
                m = m.mul(&Mono::of(POLY_VARS[vi], k));
            }
            p.add_term(m, c);
        }
        p
    })
}

/// Evaluation points with all active coordinates well away from zero, so
/// Laurent (negative) exponents stay benign.
fn arb_eval_point() -> impl Strategy<Value = NumericPoint> {
    (0.6f64..1.8, 0.6f64..1.8, 0.6f64..1.8).prop_map(|(t, r, mu)| {
        let mut p = NumericPoint::new();
        p.set(Var::T, t).set(Var::R, r).set(Var::Mu, mu);
        p
    })
}

/// Worst-case magnitude of a polynomial at a point: the value of the
/// term-wise absolute polynomial. Bounds the floating-point cancellation
/// error of `eval`.
fn abs_eval(p: &MultiPoly, pt: &NumericPoint) -> f64 {
    p.terms()
        .map(|(m, c)| {
            let mut term = c.to_c64().norm();
            for v in ALL_VARS {
                let e = m.exp(v);
                if e != 0 {
                    term *= pt.get(v).norm().powi(e);
                }
            }
            term
        })
        .sum()
}

/// Random generators drawn from every family (generic non-degenerate
/// parameters), optionally rescaled by a random rational.
fn arb_operator() -> impl Strategy<Value = DiffOp> {
    (0usize..16, 0u8..5, -3i64..=3, 1i64..=4).prop_map(|(which, mode, p, q)| {
        let ortho = GeneratorFamily::generic(FamilyKind::OrthoConformal);
        let meta1 = GeneratorFamily::generic(FamilyKind::Meta1D);
        let meta2 = GeneratorFamily::generic(FamilyKind::Meta2D);
        let dual = GeneratorFamily::generic_symbolic(FamilyKind::Meta1DDual);
        let cga = GeneratorFamily::generic(FamilyKind::Cga1D);
        let cga2 = GeneratorFamily::generic(FamilyKind::CgaDDim(2));
        // (family, label, lowest admissible mode); N is mode-free.
        let pool: [(&GeneratorFamily, GenLabel, i32); 16] = [
            (&ortho, GenLabel::Ell, -1),
            (&ortho, GenLabel::EllBar, -1),
            (&meta1, GenLabel::X, -1),
            (&meta1, GenLabel::Y, -1),
            (&meta1, GenLabel::Ell, -1),
            (&meta1, GenLabel::EllBar, -1),
            (&meta2, GenLabel::A, -1),
            (&meta2, GenLabel::BPlus, -1),
            (&meta2, GenLabel::BMinus, -1),
            (&dual, GenLabel::X, -1),
            (&dual, GenLabel::Y, -1),
            (&dual, GenLabel::N, 0),
            (&cga, GenLabel::X, -1),
            (&cga, GenLabel::Y, -1),
            (&cga2, GenLabel::YComp(1), -1),
            (&cga2, GenLabel::Rot(1, 2), 0),
        ];
        let (fam, label, n_min) = &pool[which];
        let n = if *label == GenLabel::N {
            0
        } else {
            n_min + i32::from(mode) % (4 - n_min)
        };
        let g = make_generator(fam, *label, n).expect("pool entries are valid");
        let scale = CRat::from_ratio(p, q);
        if scale.is_zero() {
            g
        } else {
            g.scale(&scale)
        }
    })
}

/// 1D quantum numbers over the full admissible box (μ of either sign).
fn arb_qn1() -> impl Strategy<Value = QuantumNumbers1D> {
    (0.05f64..0.8, -1.5f64..1.5, 0.3f64..2.0, any::<bool>()).prop_map(
        |(delta, gamma, mu_mag, mu_neg)| QuantumNumbers1D {
            delta,
            gamma,
            mu: if mu_neg { -mu_mag } else { mu_mag },
        },
    )
}

/// 2D quantum numbers over the full admissible box.
fn arb_qn2() -> impl Strategy<Value = QuantumNumbers2D> {
    (
        0.05f64..0.8,
        -1.5f64..1.5,
        -1.5f64..1.5,
        0.3f64..2.0,
        any::<bool>(),
    )
        .prop_map(|(delta, gamma_par, gamma_perp, mu_mag, mu_neg)| QuantumNumbers2D {
            delta,
            gamma_par,
            gamma_perp,
            mu: if mu_neg { -mu_mag } else { mu_mag },
        })
}

/// Nonzero time separations.
fn arb_dt() -> impl Strategy<Value = f64> {
    (0.1f64..2.5, any::<bool>()).prop_map(|(m, neg)| if neg { -m } else { m })
}

// --------------------------------------------------- exact arithmetic --

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    /// Complex rationals form a field: associativity, commutativity,
    /// distributivity, multiplicative inverses and conjugation are exact.
    #[test]
    fn crat_arithmetic_is_a_field(a in arb_crat(), b in arb_crat(), c in arb_crat()) {
        prop_assert!(a.add(&b).add(&c).sub(&a.add(&b.add(&c))).is_zero());
        prop_assert!(a.mul(&b).mul(&c).sub(&a.mul(&b.mul(&c))).is_zero());
        prop_assert!(a.add(&b).sub(&b.add(&a)).is_zero());
        prop_assert!(a.mul(&b).sub(&b.mul(&a)).is_zero());
        prop_assert!(a.mul(&b.add(&c)).sub(&a.mul(&b).add(&a.mul(&c))).is_zero());
        prop_assert!(a.conj().conj().sub(&a).is_zero());
        prop_assert!(a.mul(&b).conj().sub(&a.conj().mul(&b.conj())).is_zero());
        if !a.is_zero() {
            let inv = a.inv().expect("nonzero rationals are invertible");
            prop_assert!(a.mul(&inv).sub(&CRat::one()).is_zero());
        } else {
            prop_assert!(a.inv().is_none());
        }
    }

    /// Laurent polynomials form a commutative ring with exact arithmetic.
    #[test]
    fn multipoly_is_a_commutative_ring(p in arb_poly(), q in arb_poly(), r in arb_poly()) {
        prop_assert_eq!(p.add(&q), q.add(&p));
        prop_assert_eq!(p.mul(&q), q.mul(&p));
        prop_assert_eq!(p.add(&q).add(&r), p.add(&q.add(&r)));
        prop_assert_eq!(p.mul(&q).mul(&r), p.mul(&q.mul(&r)));
        prop_assert_eq!(p.mul(&q.add(&r)), p.mul(&q).add(&p.mul(&r)));
        prop_assert_eq!(p.mul(&MultiPoly::one()), p.clone());
        prop_assert!(p.sub(&p).is_zero());
    }

    /// Formal differentiation is an exact derivation: d(pq) = dp·q + p·dq,
    /// and it commutes with addition.
    #[test]
    fn differentiation_is_a_derivation(p in arb_poly(), q in arb_poly(), vi in 0usize..3) {
        let v = POLY_VARS[vi];
        let lhs = p.mul(&q).diff(v);
        let rhs = p.diff(v).mul(&q).add(&p.mul(&q.diff(v)));
        prop_assert_eq!(lhs, rhs);
        prop_assert_eq!(p.add(&q).diff(v), p.diff(v).add(&q.diff(v)));
    }

    /// Numeric evaluation is a ring homomorphism up to floating-point
    /// cancellation, bounded by the term-wise absolute magnitudes.
    #[test]
    fn evaluation_is_a_ring_homomorphism(p in arb_poly(), q in arb_poly(), pt in arb_eval_point()) {
        let direct = p.mul(&q).eval(&pt);
        let split = p.eval(&pt) * q.eval(&pt);
        let scale = 1.0 + abs_eval(&p, &pt) * abs_eval(&q, &pt);
        prop_assert!(
            (direct - split).norm() <= 1e-12 * scale,
            "product eval {direct} vs factor evals {split} (scale {scale})"
        );
        let sum_direct = p.add(&q).eval(&pt);
        let sum_split = p.eval(&pt) + q.eval(&pt);
        let sum_scale = 1.0 + abs_eval(&p, &pt) + abs_eval(&q, &pt);
        prop_assert!((sum_direct - sum_split).norm() <= 1e-13 * sum_scale);
    }
}

// ---------------------------------------------------- operator algebra --

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    /// The implemented bracket agrees with the operator commutator: for
    /// every polynomial f, [A,B] f = A(B f) − B(A f), exactly.
    #[test]
    fn commutator_matches_operator_composition(
        a in arb_operator(),
        b in arb_operator(),
        f in arb_poly(),
    ) {
        let lhs = a.commutator(&b).apply(&f);
        let rhs = a.apply(&b.apply(&f)).sub(&b.apply(&a.apply(&f)));
        prop_assert_eq!(lhs, rhs);
    }

    /// The bracket is antisymmetric and additive in each slot, exactly.
    #[test]
    fn commutators_are_bilinear_and_antisymmetric(
        a in arb_operator(),
        b in arb_operator(),
        c in arb_operator(),
    ) {
        prop_assert!(a.commutator(&b).add(&b.commutator(&a)).is_zero());
        let lhs = a.add(&b).commutator(&c);
        let rhs = a.commutator(&c).add(&b.commutator(&c));
        prop_assert_eq!(lhs, rhs);
    }

    /// Jacobi identity of the bracket across all families, exactly —
    /// including mixed triples from different algebras.
    #[test]
    fn commutators_satisfy_the_jacobi_identity(
        a in arb_operator(),
        b in arb_operator(),
        c in arb_operator(),
    ) {
        let cyc = a
            .commutator(&b.commutator(&c))
            .add(&b.commutator(&c.commutator(&a)))
            .add(&c.commutator(&a.commutator(&b)));
        prop_assert!(cyc.is_zero(), "jacobi defect: {cyc:?}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    /// Closure of the relation tables is not special to one mode window:
    /// any window inside [−1, 3] verifies exactly, for every family.
    #[test]
    fn algebra_closure_holds_on_any_mode_window(
        kind_idx in 0usize..5,
        lo in -1i32..=1,
        span in 0i32..=2,
    ) {
        let kind = [
            FamilyKind::OrthoConformal,
            FamilyKind::Meta1D,
            FamilyKind::Meta2D,
            FamilyKind::Meta1DDual,
            FamilyKind::Cga1D,
        ][kind_idx];
        let family = GeneratorFamily::generic_symbolic(kind);
        let report = verify_algebra(&family, lo, lo + span).expect("window is admissible");
        prop_assert!(report.all_pass, "failed cases: {:?}",
            report.cases.iter().filter(|c| !c.pass).map(|c| &c.id).collect::<Vec<_>>());
    }
}

// -------------------------------------------------------------- kernels --

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    /// The regularized kernels never exceed the amplitude bound
    /// |t|^(−2δ), anywhere in parameter space, and stay real and positive.
    #[test]
    fn regularized_kernels_respect_the_amplitude_bound(
        qn1 in arb_qn1(),
        qn2 in arb_qn2(),
        t in arb_dt(),
        r in -6.0f64..6.0,
        rq in -6.0f64..6.0,
    ) {
        let bound1 = t.abs().powf(-2.0 * qn1.delta);
        let res = eval_meta1d_reg(&Point1D { t, r }, &Point1D::default(), &qn1, &qn1)
            .expect("t is nonzero");
        prop_assert!(res.is_real && res.value.re > 0.0);
        prop_assert!(res.value.re <= bound1 * (1.0 + 1e-12),
            "1d value {} above bound {bound1}", res.value.re);

        let bound2 = t.abs().powf(-2.0 * qn2.delta);
        let res = eval_meta2d_reg(
            &Point2D { t, r_par: r, r_perp: rq },
            &Point2D::default(),
            &qn2,
            &qn2,
        )
        .expect("t is nonzero");
        prop_assert!(res.is_real && res.value.re > 0.0);
        prop_assert!(res.value.re <= bound2 * (1.0 + 1e-12),
            "2d value {} above bound {bound2}", res.value.re);
    }

    /// Exchanging the two fields leaves the regularized kernels invariant,
    /// bit for bit: every intermediate flips sign in both numerator and
    /// denominator.
    #[test]
    fn regularized_kernels_are_exchange_symmetric(
        qn1 in arb_qn1(),
        qn2 in arb_qn2(),
        t1 in -2.0f64..2.0,
        dt in arb_dt(),
        r1 in -2.0f64..2.0,
        r2 in -2.0f64..2.0,
        s1 in -2.0f64..2.0,
        s2 in -2.0f64..2.0,
    ) {
        let p1 = Point1D { t: t1, r: r1 };
        let p2 = Point1D { t: t1 - dt, r: r2 };
        let fwd = eval_meta1d_reg(&p1, &p2, &qn1, &qn1).expect("Δt nonzero");
        let rev = eval_meta1d_reg(&p2, &p1, &qn1, &qn1).expect("Δt nonzero");
        prop_assert_eq!(fwd.value, rev.value);

        let q1 = Point2D { t: t1, r_par: r1, r_perp: s1 };
        let q2 = Point2D { t: t1 - dt, r_par: r2, r_perp: s2 };
        let fwd = eval_meta2d_reg(&q1, &q2, &qn2, &qn2).expect("Δt nonzero");
        let rev = eval_meta2d_reg(&q2, &q1, &qn2, &qn2).expect("Δt nonzero");
        prop_assert_eq!(fwd.value, rev.value);
    }

    /// In the forward sector (t > 0, Δr ≥ 0, γ ≥ 0, μ > 0) the holomorphic
    /// and regularized 1D kernels are the same function.
    #[test]
    fn holomorphic_and_regularized_kernels_agree_in_the_forward_sector(
        delta in 0.05f64..0.8,
        gamma in 0.0f64..1.5,
        mu in 0.3f64..2.0,
        t in 0.1f64..2.5,
        r in 0.0f64..3.0,
    ) {
        let qn = QuantumNumbers1D { delta, gamma, mu };
        let p1 = Point1D { t, r };
        let p2 = Point1D::default();
        let holo = eval_meta1d_holo(&p1, &p2, &qn, &qn).expect("forward sector is regular");
        let reg = eval_meta1d_reg(&p1, &p2, &qn, &qn).expect("forward sector is regular");
        prop_assert!(holo.is_real, "holomorphic value {} not real", holo.value);
        prop_assert!(
            (holo.value.re - reg.value.re).abs() <= 1e-12 * reg.value.re,
            "holo {} vs reg {}", holo.value.re, reg.value.re
        );
    }

    /// Any quantum-number mismatch beyond the equality tolerance makes the
    /// kernel an exact zero carrying a selection-rule diagnostic.
    #[test]
    fn mismatched_quantum_numbers_force_exact_zero(
        qn in arb_qn1(),
        offset in 1e-6f64..0.5,
        flip in any::<bool>(),
        t in arb_dt(),
        r in -3.0f64..3.0,
    ) {
        let qn2 = QuantumNumbers1D {
            delta: qn.delta + if flip { -offset } else { offset },
            ..qn
        };
        for res in [
            eval_meta1d_reg(&Point1D { t, r }, &Point1D::default(), &qn, &qn2).unwrap(),
            eval_meta1d_holo(&Point1D { t, r }, &Point1D::default(), &qn, &qn2).unwrap(),
        ] {
            prop_assert_eq!(res.value, Complex64::new(0.0, 0.0));
            let flagged = matches!(
                res.diagnostic,
                Some(Diagnostic::SelectionRule { quantity: "delta", .. })
            );
            prop_assert!(flagged, "missing selection diagnostic: {:?}", res.diagnostic);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    /// A nonzero rapidity puts a cusp at Δr = 0 with one-sided derivative
    /// gap exactly 4 |γ/μ| |μ/t| |t|^(−2δ); the ortho-conformal kernel
    /// stays smooth for every rapidity.
    #[test]
    fn rapidity_cusp_has_the_analytic_gap(
        delta in 0.05f64..0.6,
        gamma_ratio in 0.05f64..1.2,
        gamma_sign in any::<bool>(),
        mu in 0.5f64..1.5,
        t in arb_dt().prop_filter("|t| in [0.8, 2]", |t| t.abs() >= 0.8 && t.abs() <= 2.0),
        gamma_smooth in -1.0f64..1.0,
    ) {
        let gamma = mu * if gamma_sign { -gamma_ratio } else { gamma_ratio };
        let qn = QuantumNumbers1D { delta, gamma, mu };
        let section = move |r: f64| {
            eval_meta1d_reg(&Point1D { t, r }, &Point1D::default(), &qn, &qn)
                .expect("t is nonzero")
                .value
                .re
        };
        let rep = cusp_detect(&section, 1e-3).expect("step is valid");
        let expected_gap = 4.0 * gamma_ratio * (mu / t).abs() * t.abs().powf(-2.0 * delta);
        prop_assert!(!rep.smooth, "cusp undetected: {rep:?}");
        prop_assert!(
            (rep.gap - expected_gap).abs() <= 1e-5 * expected_gap,
            "gap {} vs analytic {expected_gap}", rep.gap
        );

        let qn_smooth = QuantumNumbers1D { delta, gamma: gamma_smooth, mu };
        let smooth_section = move |r: f64| {
            eval_ortho_physical(t, r, &qn_smooth).expect("t is nonzero").value.re
        };
        let rep = cusp_detect(&smooth_section, 1e-3).expect("step is valid");
        prop_assert!(rep.smooth, "false cusp: {rep:?}");
    }
}

// --------------------------------------------------------- dual space --

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    /// The log coordinates invert back to the physical ratio, the two
    /// sheets coincide for X ≥ 0, and the sector tracks the sign of X.
    #[test]
    fn sector_maps_invert_the_log_coordinates(
        t in arb_dt(),
        r in proptest::sample::select(vec![-5.0, -1.0, -0.31, 0.011, 0.4, 2.7])
            .prop_flat_map(|base: f64| (0.9f64..1.1).prop_map(move |j| base * j)),
        mu in 0.25f64..3.0,
    ) {
        let sm = sector_map_1d(t, r, mu).expect("t is nonzero");
        let x = sm.x_ratio;
        prop_assert!(
            (sm.lam_reg.abs().exp() - 1.0 - x.abs()).abs() <= 1e-12 * (1.0 + x.abs()),
            "lam_reg {} does not invert to |X| {}", sm.lam_reg, x.abs()
        );
        prop_assert_eq!(sm.lam_reg > 0.0, x > 0.0);
        prop_assert_eq!(sm.lam_reg < 0.0, x < 0.0);
        match sm.sector {
            Sector::Plus => prop_assert!(x > 0.0),
            Sector::Minus => prop_assert!(x < 0.0),
            Sector::Boundary => prop_assert!(x == 0.0),
        }
        let u = 1.0 + x;
        if u > 0.0 {
            let lam = sm.lam_holo.expect("holomorphic sheet exists for 1 + X > 0");
            prop_assert!((lam.exp() - u).abs() <= 1e-12 * u);
            if x >= 0.0 {
                prop_assert_eq!(lam, sm.lam_reg);
            }
        } else {
            prop_assert!(sm.lam_holo.is_none());
        }
    }

    /// The 2D inversion with product quadrant spectra factorizes into the
    /// two 1D axis inversions.
    #[test]
    fn dual_inversion_factorizes_across_axes(
        delta in 0.05f64..0.8,
        g_par in -2.0f64..2.0,
        g_perp in -2.0f64..2.0,
        mu in 0.3f64..1.5,
        lam_par in -3.0f64..3.0,
        lam_perp in -3.0f64..3.0,
    ) {
        let s1 = SectorSpectra1D::exponential();
        let s2 = SectorSpectra2D::new(
            metaconf::hardy::QuadrantSpectrum::product(&s1.f_plus, &s1.f_plus),
            metaconf::hardy::QuadrantSpectrum::product(&s1.f_plus, &s1.f_minus),
            metaconf::hardy::QuadrantSpectrum::product(&s1.f_minus, &s1.f_plus),
            metaconf::hardy::QuadrantSpectrum::product(&s1.f_minus, &s1.f_minus),
        );
        let qn2 = QuantumNumbers2D {
            delta,
            gamma_par: g_par * mu,
            gamma_perp: g_perp * mu,
            mu,
        };
        let qn_par = QuantumNumbers1D { delta, gamma: g_par * mu, mu };
        let qn_perp = QuantumNumbers1D { delta, gamma: g_perp * mu, mu };
        let twod = invert_to_physical_2d(&qn2, &qn2, lam_par, lam_perp, &s2)
            .expect("parameters are admissible");
        let par = invert_to_physical_1d(&qn_par, &qn_par, lam_par, &s1)
            .expect("parameters are admissible");
        let perp = invert_to_physical_1d(&qn_perp, &qn_perp, lam_perp, &s1)
            .expect("parameters are admissible");
        if twod == 0.0 {
            prop_assert_eq!(par * perp, 0.0);
        } else {
            prop_assert!(
                (twod - par * perp).abs() <= 1e-12 * twod.abs(),
                "2d {twod} vs factored {}", par * perp
            );
        }
    }

    /// The Heaviside gate is exact: a rapidity pointing against the sector
    /// yields literal zero, a vanishing rapidity never gates.
    #[test]
    fn opposing_gates_yield_exact_zero(
        delta in 0.05f64..0.8,
        g in 0.05f64..2.0,
        lam in 0.01f64..3.0,
        mu in 0.3f64..1.5,
    ) {
        let spectra = SectorSpectra1D::exponential();
        let qn_plus = QuantumNumbers1D { delta, gamma: g * mu, mu };
        let qn_minus = QuantumNumbers1D { delta, gamma: -g * mu, mu };
        let qn_zero = QuantumNumbers1D { delta, gamma: 0.0, mu };
        let blocked_plus = invert_to_physical_1d(&qn_plus, &qn_plus, -lam, &spectra).unwrap();
        let blocked_minus = invert_to_physical_1d(&qn_minus, &qn_minus, lam, &spectra).unwrap();
        prop_assert_eq!(blocked_plus, 0.0);
        prop_assert_eq!(blocked_minus, 0.0);
        let open = invert_to_physical_1d(&qn_plus, &qn_plus, lam, &spectra).unwrap();
        let ungated = invert_to_physical_1d(&qn_zero, &qn_zero, -lam, &spectra).unwrap();
        prop_assert!(open > 0.0);
        prop_assert!(ungated > 0.0);
    }
}

// -------------------------------------------------------- hardy space --

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    /// Spectral reconstruction of the exponential spectrum matches its
    /// closed form anywhere in the tube, not just at hand-picked points.
    #[test]
    fn reconstruction_matches_the_closed_form_on_the_tube(
        x in -3.0f64..3.0,
        y in 0.1f64..4.0,
    ) {
        let spec = HalfLineSpectrum::exponential();
        let z = TubePoint::new(x, y).expect("y > 0");
        let rec = hardy_reconstruct_1d(&spec, &z).expect("quadrature converges");
        let closed = 1.0
            / ((2.0 * std::f64::consts::PI).sqrt()
                * (Complex64::new(1.0, 0.0) - Complex64::i() * z.z()));
        prop_assert!(
            (rec.value - closed).norm() <= 1e-8,
            "reconstruction {} vs closed form {closed}", rec.value
        );
    }

    /// The power-spectrum norm identity holds across the (ν, v + λ) box,
    /// not just on the 3 × 3 reference grid.
    #[test]
    fn norm_identity_holds_across_the_parameter_box(
        nu in 0.45f64..1.6,
        lam in 0.2f64..1.5,
        v in 0.2f64..1.0,
    ) {
        let rep = proposition_norm(nu, lam, v).expect("parameters are admissible");
        prop_assert!(
            rep.abs_diff <= 1e-8 * rep.closed_form.abs(),
            "quadrature {} vs closed form {}", rep.quadrature, rep.closed_form
        );
    }
}
