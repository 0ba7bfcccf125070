use proptest::prelude::*;
use wickstar::sphere::{
    annulus_deck_factor, covering_disk_to_annulus, covering_disk_to_punctured, covering_half_to_annulus,
    danielewski_chart, gamma_hat, psi_g_to_omega, psi_omega_to_g, t_gamma_omega, t_gamma_omega_checked,
    AutDisk, DeckGroup, DeckKind, GPoint, MoebiusKind, MoebiusMap, OmegaPoint, SpherePoint,
};
use wickstar::{c64, cq, C64, CQ};

fn close(a: C64, b: C64, tol: f64) -> bool {
    (a - b).norm() <= tol * (1.0 + b.norm())
}

fn disk_point() -> impl Strategy<Value = C64> {
    (0.0f64..0.95, 0.0f64..std::f64::consts::TAU).prop_map(|(r, t)| C64::from_polar(r, t))
}

fn complex(s: f64) -> impl Strategy<Value = C64> {
    (-s..s, -s..s).prop_map(|(a, b)| c64(a, b))
}

fn half_plane_map() -> impl Strategy<Value = MoebiusMap<C64>> {
    (-3.0f64..3.0, -3.0f64..3.0, -3.0f64..3.0, -3.0f64..3.0)
        .prop_filter("positive determinant", |(a, b, c, d)| a * d - b * c > 0.1)
        .prop_map(|(a, b, c, d)| MoebiusMap::new(c64(a, 0.0), c64(b, 0.0), c64(c, 0.0), c64(d, 0.0)).unwrap())
}

fn moebius() -> impl Strategy<Value = MoebiusMap<C64>> {
    (complex(2.0), complex(2.0), complex(2.0), complex(2.0))
        .prop_filter("invertible", |(a, b, c, d)| (a * d - b * c).norm() > 0.1)
        .prop_map(|(a, b, c, d)| MoebiusMap::new(a, b, c, d).unwrap())
}

#[test]
fn apply_examples() {
    let p = SpherePoint::finite(c64(3.0, 4.0));
    assert_eq!(MoebiusMap::identity().apply(&p), p);
    let two = MoebiusMap::scaling(c64(2.0, 0.0)).unwrap();
    assert!(two.apply(&SpherePoint::infinity()).is_infinite());
    let i = MoebiusMap::cayley().apply(&SpherePoint::finite(c64(0.0, 0.0)));
    assert!(close(i.value().unwrap(), c64(0.0, 1.0), 1e-15));
}

#[test]
fn exact_cayley_and_infinity() {
    let t = MoebiusMap::<CQ>::cayley();
    assert_eq!(t.apply(&SpherePoint::finite(cq(0, 1, 0, 1))), SpherePoint::finite(cq(0, 1, 1, 1)));
    assert_eq!(t.apply(&SpherePoint::infinity()), SpherePoint::finite(cq(0, 1, -1, 1)));
}

#[test]
fn gamma_hat_examples() {
    let two = MoebiusMap::scaling(cq(2, 1, 0, 1)).unwrap();
    let p = GPoint::finite(cq(1, 1, 0, 1), cq(0, 1, 1, 1)).unwrap();
    assert_eq!(gamma_hat(&two, &p), GPoint::finite(cq(2, 1, 0, 1), cq(0, 1, 2, 1)).unwrap());

    let shift = MoebiusMap::translation(cq(1, 1, 0, 1));
    let p = GPoint::new(SpherePoint::finite(cq(0, 1, 0, 1)), SpherePoint::infinity()).unwrap();
    let q = gamma_hat(&shift, &p);
    assert_eq!(q.z, SpherePoint::finite(cq(1, 1, 0, 1)));
    assert!(q.w.is_infinite());

    let rot = MoebiusMap::rotation(0.9).conjugated_by(&MoebiusMap::cayley());
    let p = GPoint::finite(c64(0.0, 1.0), c64(0.0, 2.0)).unwrap();
    let via_hat = gamma_hat(&rot, &p);
    let t = MoebiusMap::cayley();
    let by_hand = t.apply(&MoebiusMap::rotation(0.9).apply(&t.inverse().apply(&p.z)));
    assert!(via_hat.z.chordal_distance(&by_hand) < 1e-14);
}

#[test]
fn t_gamma_examples() {
    let p = OmegaPoint::finite(c64(0.3, 0.0), c64(0.1, 0.0)).unwrap();
    assert_eq!(t_gamma_omega(&AutDisk::identity(), &p), p);

    let theta = 0.7;
    let rot = AutDisk::rotation(theta);
    let p = OmegaPoint::finite(c64(0.2, 0.1), c64(-0.4, 0.3)).unwrap();
    let (z, w) = t_gamma_omega(&rot, &p).values().unwrap();
    let e = C64::from_polar(1.0, theta);
    assert!(close(z, e * c64(0.2, 0.1), 1e-15));
    assert!(close(w, c64(-0.4, 0.3) / e, 1e-15));

    let phi = AutDisk::from_angle(0.4, c64(0.3, -0.2)).unwrap();
    let z = c64(0.1, 0.5);
    let (fz, fw) = t_gamma_omega(&phi, &OmegaPoint::diagonal(z).unwrap()).values().unwrap();
    assert!(close(fw, fz.conj(), 1e-14));

    assert!(t_gamma_omega_checked(&MoebiusMap::scaling(c64(2.0, 0.0)).unwrap(), &p).is_err());
}

#[test]
fn psi_examples() {
    let origin = OmegaPoint::finite(cq(0, 1, 0, 1), cq(0, 1, 0, 1)).unwrap();
    let g = psi_omega_to_g(&origin);
    assert_eq!(g.z, SpherePoint::finite(cq(0, 1, 1, 1)));
    assert_eq!(g.w, SpherePoint::finite(cq(0, 1, -1, 1)));
    assert!(OmegaPoint::finite(cq(2, 1, 0, 1), cq(1, 2, 0, 1)).is_err());
    assert!(OmegaPoint::new(SpherePoint::finite(cq(0, 1, 0, 1)), SpherePoint::infinity()).is_err());
}

#[test]
fn danielewski_examples() {
    let p = GPoint::finite(cq(1, 1, 0, 1), cq(0, 1, 0, 1)).unwrap();
    assert_eq!(danielewski_chart(&p).unwrap(), (cq(1, 1, 0, 1), cq(1, 1, 0, 1), cq(0, 1, 0, 1)));
    let p = GPoint::finite(cq(2, 1, 0, 1), cq(-1, 1, 0, 1)).unwrap();
    assert_eq!(danielewski_chart(&p).unwrap(), (cq(1, 3, 0, 1), cq(1, 3, 0, 1), cq(-2, 3, 0, 1)));
    let p = GPoint::new(SpherePoint::infinity(), SpherePoint::finite(c64(0.0, 0.0))).unwrap();
    assert!(danielewski_chart(&p).is_err());
}

#[test]
fn covering_examples() {
    assert!(close(covering_disk_to_annulus(2.0, c64(0.0, 0.0)).unwrap(), c64(1.0, 0.0), 1e-15));
    assert!(close(covering_disk_to_punctured(c64(0.0, 0.0)).unwrap(), c64((-1.0f64).exp(), 0.0), 1e-15));
    assert!(close(covering_half_to_annulus(2.0, c64(0.0, 1.0)).unwrap(), c64(1.0, 0.0), 1e-15));
    assert!(covering_disk_to_annulus(2.0, c64(1.0, 0.0)).is_err());
    assert!(covering_disk_to_punctured(c64(0.0, -1.5)).is_err());
    assert!(covering_half_to_annulus(2.0, c64(1.0, 0.0)).is_err());
}

#[test]
fn covering_ranges_over_many_samples() {
    let mut s = wickstar::sampling::Sampler::new(11);
    for _ in 0..10_000 {
        let z = s.disk(0.999);
        let a = covering_disk_to_annulus(2.0, z).unwrap().norm();
        assert!(a > 0.5 && a < 2.0, "{z}");
        let p = covering_disk_to_punctured(z).unwrap().norm();
        assert!(p > 0.0 && p < 1.0, "{z}");
    }
}

#[test]
fn deck_groups_match_their_kind() {
    let d = DeckGroup::new(DeckKind::HyperbolicScaling { c: 3.0 }).unwrap();
    assert_eq!(d.generator(), &MoebiusMap::scaling(c64(3.0, 0.0)).unwrap());
    assert_eq!(d.generator().classify(), MoebiusKind::Hyperbolic);
    let d = DeckGroup::new(DeckKind::ParabolicTranslation).unwrap();
    assert_eq!(d.generator().classify(), MoebiusKind::Parabolic);
    let d = DeckGroup::new(DeckKind::EllipticRotation { n: 5 }).unwrap();
    assert_eq!(d.generator().classify(), MoebiusKind::Elliptic);
    let z = c64(0.3, 0.2);
    assert!(close(d.element(5).apply_finite(&z).unwrap(), z, 1e-13));
    assert!(DeckGroup::new(DeckKind::HyperbolicScaling { c: 1.0 }).is_err());
    assert!(DeckGroup::new(DeckKind::EllipticRotation { n: 1 }).is_err());
    let r = 2.0;
    let DeckKind::HyperbolicScaling { c } = DeckGroup::for_annulus(r).unwrap().kind() else {
        panic!("annulus deck group is hyperbolic");
    };
    assert!((c - annulus_deck_factor(r)).abs() < 1e-9 * c);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn half_plane_maps_commute_with_conjugation(m in half_plane_map(), z in complex(3.0)) {
        prop_assert!(m.is_aut_half_plane(1e-12));
        if let (Some(a), Some(b)) = (m.apply_finite(&z.conj()), m.apply_finite(&z)) {
            prop_assert!(close(a, b.conj(), 1e-12));
        }
    }

    #[test]
    fn gamma_hat_is_a_group_action(g in moebius(), h in moebius(), z in complex(2.0), w in complex(2.0)) {
        prop_assume!((z - w).norm() > 0.1);
        let p = GPoint::finite(z, w).unwrap();
        let lhs = gamma_hat(&g, &gamma_hat(&h, &p));
        let rhs = gamma_hat(&g.compose(&h), &p);
        prop_assert!(lhs.z.chordal_distance(&rhs.z) < 1e-12);
        prop_assert!(lhs.w.chordal_distance(&rhs.w) < 1e-12);
    }

    #[test]
    fn psi_round_trips(z in disk_point(), w in disk_point()) {
        let p = OmegaPoint::finite(z, w).unwrap();
        let g = psi_omega_to_g(&p);
        prop_assert!(g.z.chordal_distance(&g.w) > 0.0);
        let back = psi_g_to_omega(&g);
        prop_assert!(back.z.chordal_distance(&p.z) < 1e-13);
        prop_assert!(back.w.chordal_distance(&p.w) < 1e-13);
    }

    #[test]
    fn psi_round_trips_exactly(a in -9i64..9, b in -9i64..9, c in -9i64..9, d in -9i64..9) {
        let (z, w) = (cq(a, 4, b, 3), cq(c, 5, d, 2));
        prop_assume!(z.clone() * w.clone() != cq(1, 1, 0, 1));
        let p = OmegaPoint::finite(z, w).unwrap();
        prop_assert_eq!(psi_g_to_omega(&psi_omega_to_g(&p)), p);
    }

    #[test]
    fn danielewski_lands_on_the_surface(z in complex(1.5), w in complex(1.5)) {
        prop_assume!((z - w).norm() > 0.25);
        let (a, b, c) = danielewski_chart(&GPoint::finite(z, w).unwrap()).unwrap();
        prop_assert!((b * b - 4.0 * a * c - 1.0).norm() < 1e-12);
    }

    #[test]
    fn annulus_deck_relation(r in 1.2f64..5.0, x in (0.05f64..3.0, 0.01f64..3.0)) {
        let x = c64(x.0 - 1.5, x.1);
        let c = annulus_deck_factor(r);
        let a = covering_half_to_annulus(r, c * x).unwrap();
        let b = covering_half_to_annulus(r, x).unwrap();
        prop_assert!(close(a, b, 1e-10));
    }

    #[test]
    fn disk_automorphisms_preserve_the_disk(theta in 0.0f64..6.3, alpha in disk_point(), z in disk_point()) {
        let phi = AutDisk::from_angle(theta, alpha * 0.9).unwrap();
        prop_assert!(phi.map().is_aut_disk(1e-12));
        prop_assert!(phi.eval(z).norm() < 1.0);
        let on = C64::from_polar(1.0, theta * 1.7);
        prop_assert!((phi.eval(on).norm() - 1.0).abs() < 1e-12);
    }
}
