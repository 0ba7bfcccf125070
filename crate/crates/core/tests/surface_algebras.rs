use proptest::prelude::*;
use wickstar::function::{eval_at_reciprocal, omega_finite, BasisFpq, EntireFn, FpqSpan};
use wickstar::peschl_minda::{aux_p, aux_q, DiskFunction};
use wickstar::sampling::Sampler;
use wickstar::sphere::{covering_disk_to_annulus, covering_disk_to_punctured, MoebiusMap};
use wickstar::star::{star_disk, Hbar, StarConfig};
use wickstar::surface::{
    chart_f_0, chart_f_r, gamma_hat_invariant, iso_psi, lift_to_disk, scaling_kernel, transport_t,
    translation_kernel, AnnulusElement, PuncturedElement, SurfaceElement, SurfaceTarget,
};
use wickstar::{c64, cq, C64, CQ};

fn close(a: C64, b: C64, tol: f64) -> bool {
    (a - b).norm() <= tol * (1.0 + b.norm())
}

#[test]
fn annulus_chart_examples() {
    for t in [0.0, 1.0, 2.5] {
        assert!(chart_f_r(2.0, C64::from_polar(1.0, t)).unwrap().norm() < 1e-16);
    }
    let e = std::f64::consts::E;
    assert!(close(chart_f_r(e, c64(0.0, e.sqrt())).unwrap(), c64(0.0, -1.0), 1e-14));
    assert!(chart_f_r(2.0, c64(2.0 * (1.0 - 1e-9), 0.0)).unwrap().norm() > 1e3);
    assert!(chart_f_r(2.0, c64(2.0, 0.0)).is_err());
    assert!(chart_f_r(2.0, c64(0.5, 0.0)).is_err());
    assert!(chart_f_r(1.0, c64(1.0, 0.0)).is_err());
}

#[test]
fn punctured_chart_examples() {
    let inv_e = (-1.0f64).exp();
    assert!(close(chart_f_0(c64(0.0, inv_e)).unwrap(), c64(1.0, 0.0), 1e-15));
    let v = chart_f_0(c64((-100.0f64).exp(), 0.0)).unwrap().re;
    assert!(v > 0.0 && v <= 1e-2 + 1e-17);
    assert!(chart_f_0(c64((-101.0f64).exp(), 0.0)).unwrap().re < 1e-2);
    assert!(chart_f_0(c64(0.0, 0.0)).is_err());
    assert!(chart_f_0(c64(1.0, 0.0)).is_err());
}

#[test]
fn transport_examples() {
    let k = c64(2.0, -1.0);
    let e = transport_t(EntireFn::constant(k), SurfaceTarget::Annulus { r: 3.0 }).unwrap();
    let mut s = Sampler::new(3);
    for _ in 0..20 {
        assert_eq!(e.eval(s.annulus(3.0)).unwrap(), k);
    }
    let e = transport_t(EntireFn::identity(), SurfaceTarget::Annulus { r: 3.0 }).unwrap();
    for _ in 0..20 {
        let z = s.annulus(3.0);
        assert_eq!(e.eval(z).unwrap(), chart_f_r(3.0, z).unwrap());
    }
    let e = transport_t(EntireFn::identity(), SurfaceTarget::Punctured).unwrap();
    for _ in 0..20 {
        let z = s.punctured();
        assert_eq!(e.eval(z).unwrap(), chart_f_0(z).unwrap());
    }
    assert_eq!(e.untransport(), EntireFn::identity());
    assert!(transport_t(EntireFn::identity(), SurfaceTarget::Annulus { r: 0.5 }).is_err());
}

#[test]
fn transport_separates_distinct_polynomials() {
    let a = transport_t(EntireFn::real_polynomial(&[1.0, 2.0]), SurfaceTarget::Punctured).unwrap();
    let b = transport_t(EntireFn::real_polynomial(&[1.0, 2.0, 1e-6]), SurfaceTarget::Punctured).unwrap();
    let mut s = Sampler::new(8);
    let differ = (0..20).any(|_| {
        let z = s.punctured();
        a.eval(z).unwrap() != b.eval(z).unwrap()
    });
    assert!(differ);
}

#[test]
fn psi_examples() {
    let e = AnnulusElement::new(2.0, EntireFn::identity()).unwrap();
    let image = iso_psi(&e, 5.0).unwrap();
    let mut s = Sampler::new(4);
    for _ in 0..20 {
        let z = s.annulus(5.0);
        assert_eq!(image.eval(z).unwrap(), chart_f_r(5.0, z).unwrap());
    }
    assert_eq!(iso_psi(&e, 2.0).unwrap(), e);
    let g = AnnulusElement::new(1.5, EntireFn::real_polynomial(&[0.0, 1.0, -0.5])).unwrap();
    let two_step = iso_psi(&iso_psi(&g, 7.0).unwrap(), 3.0).unwrap();
    let direct = iso_psi(&g, 3.0).unwrap();
    for _ in 0..20 {
        let z = s.annulus(3.0);
        assert_eq!(two_step.eval(z).unwrap(), direct.eval(z).unwrap());
    }
    assert_eq!(two_step.modulus(), 3.0);
}

#[test]
fn psi_is_multiplicative_for_the_star_product() {
    let (r1, r2) = (2.0, 4.0);
    let hb = Hbar::float(0.4, 0.1).unwrap();
    let cfg = StarConfig::exact_finite();
    let f = AnnulusElement::new(r1, EntireFn::real_polynomial(&[1.0, 0.0, 2.0])).unwrap();
    let g = AnnulusElement::new(r1, EntireFn::real_polynomial(&[0.0, -1.0, 0.0, 1.0])).unwrap();
    let (pf, pg) = (iso_psi(&f, r2).unwrap(), iso_psi(&g, r2).unwrap());
    let mut s = Sampler::new(6);
    for _ in 0..20 {
        // points with the same chart value on the two annuli
        let m = s.uniform(-0.9, 0.9);
        let t = s.angle();
        let z1 = C64::from_polar(r1.powf(m), t);
        let z2 = C64::from_polar(r2.powf(m), t);
        let lhs = pf.star(&pg, &hb, z2, &cfg).unwrap().value;
        let rhs = f.star(&g, &hb, z1, &cfg).unwrap().value;
        assert!(close(lhs, rhs, 1e-12));
    }
    assert!(f.star(&pg, &hb, c64(1.0, 0.0), &cfg).is_err());
}

#[test]
fn lifts_agree_with_the_coverings() {
    let r = 2.0;
    let mut s = Sampler::new(5);
    let a = SurfaceElement::Annulus(AnnulusElement::new(r, EntireFn::identity()).unwrap());
    let p = SurfaceElement::Punctured(PuncturedElement::new(EntireFn::identity()));
    let (la, lp) = (lift_to_disk(&a), lift_to_disk(&p));
    assert_eq!(la, DiskFunction::ComposedP(EntireFn::identity()));
    assert_eq!(lp, DiskFunction::ComposedQ(EntireFn::identity()));
    for _ in 0..100 {
        let z = s.disk(0.8);
        let via_a = a.eval(covering_disk_to_annulus(r, z).unwrap()).unwrap();
        assert!(close(via_a, la.value(z).unwrap(), 1e-10));
        assert!(close(la.value(z).unwrap(), aux_p(z), 1e-14));
        let via_p = p.eval(covering_disk_to_punctured(z).unwrap()).unwrap();
        assert!(close(via_p, lp.value(z).unwrap(), 1e-10));
        assert!(close(lp.value(z).unwrap(), aux_q(z), 1e-14));
    }
    let k = c64(0.5, 3.0);
    let c = lift_to_disk(&SurfaceElement::Punctured(PuncturedElement::new(EntireFn::constant(k))));
    assert_eq!(c.value(c64(0.3, 0.1)).unwrap(), k);
}

#[test]
fn star_products_lift_to_the_disk() {
    let r = 2.0;
    let hb = Hbar::float(0.5, 0.2).unwrap();
    let cfg = StarConfig::default();
    let g = EntireFn::real_polynomial(&[0.5, 1.0, -1.0, 0.25]);
    let gt = EntireFn::real_polynomial(&[0.0, 2.0, 1.0]);
    let (a, at) = (AnnulusElement::new(r, g.clone()).unwrap(), AnnulusElement::new(r, gt.clone()).unwrap());
    let (p, pt) = (PuncturedElement::new(g.clone()), PuncturedElement::new(gt.clone()));
    let mut s = Sampler::new(9);
    for _ in 0..50 {
        let z = s.disk(0.8);
        let disk = star_disk(&DiskFunction::ComposedP(g.clone()), &DiskFunction::ComposedP(gt.clone()), &hb, z, &cfg)
            .unwrap()
            .value;
        let surf = a.star(&at, &hb, covering_disk_to_annulus(r, z).unwrap(), &cfg).unwrap().value;
        assert!(close(disk, surf, 1e-9));
        let disk = star_disk(&DiskFunction::ComposedQ(g.clone()), &DiskFunction::ComposedQ(gt.clone()), &hb, z, &cfg)
            .unwrap()
            .value;
        let surf = p.star(&pt, &hb, covering_disk_to_punctured(z).unwrap(), &cfg).unwrap().value;
        assert!(close(disk, surf, 1e-9));
    }
}

#[test]
fn z2_examples() {
    let one = FpqSpan::basis(BasisFpq::new(0, 0));
    assert_eq!(one.z2_involution(), FpqSpan::<CQ>::basis(BasisFpq::new(0, 0)));

    let f11 = FpqSpan::<C64>::basis(BasisFpq::new(1, 1));
    let image = f11.z2_involution();
    let mut s = Sampler::new(12);
    for _ in 0..50 {
        let (z, w) = (s.complex(2.0), s.complex(2.0));
        if (z * w - 1.0).norm() < 0.1 || z.norm() < 0.1 || w.norm() < 0.1 {
            continue;
        }
        let p = omega_finite(z, w).unwrap();
        let direct = eval_at_reciprocal(&f11, &p).unwrap();
        assert!(close(image.eval(&z, &w).unwrap(), direct, 1e-12));
    }
}

#[test]
fn invariance_witnesses() {
    let mut s = Sampler::new(13);
    let samples: Vec<_> = (0..50).map(|_| s.g_point()).collect();
    let scaling = MoebiusMap::scaling(c64(2.0, 0.0)).unwrap();
    let shift = MoebiusMap::translation(c64(1.0, 0.0));
    let g = EntireFn::real_polynomial(&[1.0, 0.5, -0.25, 0.125]);

    let r = gamma_hat_invariant(scaling_kernel(g.clone()), &scaling, &samples, 1e-9);
    assert!(r.pass, "{r:?}");
    let r = gamma_hat_invariant(translation_kernel(g.clone()), &shift, &samples, 1e-9);
    assert!(r.pass, "{r:?}");
    let r = gamma_hat_invariant(scaling_kernel(g), &shift, &samples, 1e-9);
    assert!(!r.pass);
    assert_eq!(r.samples, 50);
}

fn span_cq() -> impl Strategy<Value = FpqSpan<CQ>> {
    prop::collection::vec(((0u32..5, 0u32..5), (-5i64..5, 1i64..4)), 0..6).prop_map(|t| {
        FpqSpan::from_terms(t.into_iter().map(|((p, q), (a, b))| (BasisFpq::new(p, q), cq(a, b, 0, 1))))
    })
}

fn span_c64() -> impl Strategy<Value = FpqSpan<C64>> {
    prop::collection::vec(((0u32..4, 0u32..4), (-1.0f64..1.0, -1.0f64..1.0)), 1..5).prop_map(|t| {
        FpqSpan::from_terms(t.into_iter().map(|((p, q), (a, b))| (BasisFpq::new(p, q), c64(a, b))))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn z2_is_an_involution(f in span_cq()) {
        prop_assert_eq!(f.z2_involution().z2_involution(), f);
    }

    #[test]
    fn z2_matches_direct_substitution(f in span_c64(), z in (0.2f64..1.5, 0.0f64..6.3), w in (0.2f64..1.5, 0.0f64..6.3)) {
        let (z, w) = (C64::from_polar(z.0, z.1), C64::from_polar(w.0, w.1));
        prop_assume!((z * w - 1.0).norm() > 0.1);
        let p = omega_finite(z, w).unwrap();
        let direct = eval_at_reciprocal(&f, &p).unwrap();
        let via = f.z2_involution().eval(&z, &w).unwrap();
        prop_assert!((via - direct).norm() < 1e-9 * (1.0 + direct.norm()));
    }

    #[test]
    fn elements_are_radial(
        coeffs in prop::collection::vec(-1.0f64..1.0, 1..5),
        m in -0.9f64..0.9,
        t1 in 0.0f64..6.3,
        t2 in 0.0f64..6.3,
    ) {
        let g = EntireFn::real_polynomial(&coeffs);
        let a = AnnulusElement::new(3.0, g.clone()).unwrap();
        let r = 3.0f64.powf(m);
        prop_assert!(close(a.eval(C64::from_polar(r, t1)).unwrap(), a.eval(C64::from_polar(r, t2)).unwrap(), 1e-12));
        let p = PuncturedElement::new(g);
        let r = (m - 1.0).exp() * 0.99;
        prop_assert!(close(p.eval(C64::from_polar(r, t1)).unwrap(), p.eval(C64::from_polar(r, t2)).unwrap(), 1e-12));
    }

    #[test]
    fn transport_is_linear(
        g1 in prop::collection::vec(-1.0f64..1.0, 1..5),
        g2 in prop::collection::vec(-1.0f64..1.0, 1..5),
        alpha in (-2.0f64..2.0, -2.0f64..2.0),
        beta in (-2.0f64..2.0, -2.0f64..2.0),
        seed in 0u64..1000,
    ) {
        let (alpha, beta) = (c64(alpha.0, alpha.1), c64(beta.0, beta.1));
        let (g1, g2) = (EntireFn::real_polynomial(&g1), EntireFn::real_polynomial(&g2));
        let sum = EntireFn::linear_combination(alpha, &g1, beta, &g2).unwrap();
        let mut s = Sampler::new(seed);
        for target in [SurfaceTarget::Annulus { r: 2.5 }, SurfaceTarget::Punctured] {
            let t = |g: &EntireFn| transport_t(g.clone(), target).unwrap();
            let (e1, e2, es) = (t(&g1), t(&g2), t(&sum));
            for _ in 0..5 {
                let z = match target {
                    SurfaceTarget::Annulus { r } => s.annulus(r),
                    SurfaceTarget::Punctured => s.punctured(),
                };
                let lhs = es.eval(z).unwrap();
                let rhs = alpha * e1.eval(z).unwrap() + beta * e2.eval(z).unwrap();
                prop_assert!(close(lhs, rhs, 1e-12));
            }
        }
    }
}
