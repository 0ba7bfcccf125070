use std::process::Command;

use wickstar::function::{BasisFpq, BiPoly, EntireFn, Poly};
use wickstar::peschl_minda::DiskFunction;
use wickstar::rigidity::{
    default_hbar_grid, elliptic_experiment, obstruction_check, two_hyperbolic_experiment, Verdict,
};
use wickstar::sampling::{Sampler, DISK_RADIUS};
use wickstar::sphere::{covering_disk_to_punctured, danielewski_chart};
use wickstar::star::{
    associator, star_annulus_symbolic, star_disk, star_disk_poly_exact, star_punctured_symbolic, star_punctured_with,
    Hbar, PuncturedWeight, StarConfig, StarMode,
};
use wickstar::surface::chart_f_0;
use wickstar::verify::{run_suites, Injection, Mode, Status, SuiteOptions};
use wickstar::{c64, cq, C64, CQ};

fn verdict(id: &str, what: &str, measured: impl std::fmt::Display, ok: bool) {
    println!("{} {id}: {what} [{measured}]", if ok { "PASS" } else { "FAIL" });
    assert!(ok, "criterion {id} failed: {what} [{measured}]");
}

fn within(id: &str, what: &str, residual: f64, tol: f64) {
    verdict(id, what, format!("max residual {residual:.3e}, tol {tol:.0e}"), residual < tol);
}

fn q(n: i64) -> CQ {
    cq(n, 1, 0, 1)
}

fn random_cq(rng: &mut Sampler) -> CQ {
    cq(rng.int(-5, 5), rng.int(1, 4), rng.int(-5, 5), rng.int(1, 4))
}

fn random_poly_cq(rng: &mut Sampler) -> Poly<CQ> {
    let degree = rng.int(0, 4) as usize;
    Poly::new((0..=degree).map(|_| random_cq(rng)).collect())
}

fn suite(name: &str, inject: Option<Injection>) -> wickstar::verify::Check {
    let opts = SuiteOptions {
        seed: 42,
        suite: Some(name.into()),
        inject,
        ..Default::default()
    };
    run_suites(&opts).unwrap().checks.remove(0)
}

#[test]
fn c01_coefficient_identities() {
    let mut exact = true;
    for h in [q(1), cq(1, 2, 0, 1), cq(1, 1, 1, 1)] {
        let hb = Hbar::new(h).unwrap();
        for n in 0..=30 {
            exact &= hb.c_n(n) == hb.c_n_product(n);
        }
    }
    let one = Hbar::new(q(1)).unwrap();
    let mut fact = q(1);
    for n in 0..=30u32 {
        if n > 0 {
            fact = fact * q(n as i64);
        }
        exact &= one.c_n(n as usize) * fact.clone() == q(1);
    }
    let guards = [q(0), q(-1), cq(-1, 2, 0, 1), cq(-1, 3, 0, 1)].into_iter().all(|h| Hbar::new(h).is_err());
    verdict(
        "1",
        "c_n recurrence = product formula and c_n(1) = 1/n! exactly for n <= 30; poles rejected",
        format!("exact {exact}, guards {guards}"),
        exact && guards,
    );
}

fn commutators(h: &Hbar<C64>, rng: &mut Sampler) -> Vec<(f64, C64)> {
    let cfg = StarConfig::default().with_max_terms(400);
    let (zb, z) = (DiskFunction::zbar(), DiskFunction::z());
    (0..100)
        .map(|_| {
            let p = rng.disk(DISK_RADIUS);
            let a = star_disk(&zb, &z, h, p, &cfg).unwrap();
            let b = star_disk(&z, &zb, h, p, &cfg).unwrap();
            assert!(a.converged && b.converged);
            (p.norm_sqr(), a.value - b.value)
        })
        .collect()
}

fn full_commutator(h: &Hbar<C64>, x: f64) -> C64 {
    let w = h.weights(2000);
    (1..2000).rev().fold(c64(0.0, 0.0), |acc, n| acc * x + w[n]) * (1.0 - x) * (1.0 - x)
}

#[test]
fn c02a_unit_and_commutator_series() {
    let mut rng = Sampler::new(2);
    let one = BiPoly::<CQ>::one();
    let h = Hbar::new(cq(1, 2, 0, 1)).unwrap();
    let mut unit = true;
    for _ in 0..20 {
        let mut f = BiPoly::zero();
        for i in 0..=3 {
            for j in 0..=3 - i {
                f.add_term(i, j, random_cq(&mut rng));
            }
        }
        unit &= star_disk_poly_exact(&one, &f, &h, StarMode::ExactFinite).unwrap() == f;
        unit &= star_disk_poly_exact(&f, &one, &h, StarMode::ExactFinite).unwrap() == f;
    }
    let mut residual: f64 = 0.0;
    let mut at_origin: f64 = 0.0;
    for (re, im) in [(0.5, 0.0), (1.0, 1.0)] {
        let h = Hbar::float(re, im).unwrap();
        for (x, comm) in commutators(&h, &mut rng) {
            let want = full_commutator(&h, x);
            residual = residual.max((comm - want).norm() / (1.0 + want.norm()));
        }
        let cfg = StarConfig::default();
        let zero = c64(0.0, 0.0);
        let a = star_disk(&DiskFunction::zbar(), &DiskFunction::z(), &h, zero, &cfg).unwrap().value;
        let b = star_disk(&DiskFunction::z(), &DiskFunction::zbar(), &h, zero, &cfg).unwrap().value;
        at_origin = at_origin.max((a - b - h.value()).norm());
    }
    verdict(
        "2a",
        "1 ⋆ f = f exactly; z̄ ⋆ z − z ⋆ z̄ = (1−|z|²)² Σ c_n n! |z|^(2n−2) at 100 z per ħ; equals ħ at z = 0",
        format!("unit {unit}, series residual {residual:.3e}, origin {at_origin:.1e}"),
        unit && residual < 1e-10 && at_origin < 1e-15,
    );
}

#[test]
#[should_panic(expected = "criterion 2b failed")]
fn c02b_commutator_literal_first_order_form() {
    let mut rng = Sampler::new(2);
    let mut residual: f64 = 0.0;
    for (re, im) in [(0.5, 0.0), (1.0, 1.0)] {
        let h = Hbar::float(re, im).unwrap();
        for (x, comm) in commutators(&h, &mut rng) {
            residual = residual.max((comm - h.value() * (1.0 - x) * (1.0 - x)).norm());
        }
    }
    within("2b", "z̄ ⋆ z − z ⋆ z̄ = ħ(1−|z|²)² at 100 random z, ħ ∈ {0.5, 1+i}", residual, 1e-12);
}

#[test]
fn c03_exact_associativity() {
    let m: Vec<BiPoly<CQ>> = [(0, 0), (1, 0), (0, 1), (2, 0), (1, 1), (0, 2)]
        .into_iter()
        .map(|(i, j)| BiPoly::monomial(q(1), i, j))
        .collect();
    let h = Hbar::new(cq(1, 2, 0, 1)).unwrap();
    let mut nonzero = 0;
    for f in &m {
        for g in &m {
            for k in &m {
                if !associator(f, g, k, &h, 6).unwrap().is_zero() {
                    nonzero += 1;
                }
            }
        }
    }
    verdict(
        "3",
        "(f ⋆ g) ⋆ h = f ⋆ (g ⋆ h) coefficientwise through degree 6 for 216 monomial triples, ħ = 1/2",
        format!("{nonzero} nonzero associators"),
        nonzero == 0,
    );
}

#[test]
fn c04_conformal_invariance() {
    let c = suite("conformal", None);
    within("4", "(f∘φ) ⋆ (g∘φ) = (f ⋆ g)∘φ over 50 (φ, z), deg <= 3, |z| <= 0.7", c.max_residual, 1e-8);
    assert_eq!(c.samples, 50);
}

#[test]
fn c05_annulus_closed_form() {
    let id = Poly::<CQ>::identity();
    let closed = star_annulus_symbolic(&id, &id).terms() == [Poly::monomial(2), Poly::new(vec![q(-1), q(0), q(1)])];
    let mut rng = Sampler::new(5);
    let mut commutes = true;
    for _ in 0..50 {
        let a = random_poly_cq(&mut rng);
        let b = random_poly_cq(&mut rng);
        commutes &= star_annulus_symbolic(&a, &b) == star_annulus_symbolic(&b, &a);
    }
    verdict(
        "5",
        "f_R ⋆ f_R = f_R² + (f_R² − 1)ħ symbolically; annulus product commutes on 50 pairs of degree <= 4",
        format!("closed form {closed}, commutative {commutes}"),
        closed && commutes,
    );
}

#[test]
fn c06_punctured_closed_form() {
    let id = Poly::<CQ>::identity();
    let closed = star_punctured_symbolic(&id, &id, PuncturedWeight::Derived).terms()
        == [Poly::monomial(2), Poly::monomial(2)];
    let mut rng = Sampler::new(6);
    let mut commutes = true;
    for _ in 0..50 {
        let a = random_poly_cq(&mut rng);
        let b = random_poly_cq(&mut rng);
        commutes &= star_punctured_symbolic(&a, &b, PuncturedWeight::Derived)
            == star_punctured_symbolic(&b, &a, PuncturedWeight::Derived);
    }
    verdict(
        "6",
        "f_0 ⋆ f_0 = (1 + ħ)f_0² symbolically; punctured product commutes on 50 pairs of degree <= 4",
        format!("closed form {closed}, commutative {commutes}"),
        closed && commutes,
    );
}

#[test]
fn c07_lift_coherence_and_injected_weight() {
    let good = suite("lift-coherence", None);
    let bad = suite("lift-coherence", Some(Injection::PrintedPuncturedWeight));

    let cfg = StarConfig::exact_finite();
    let g = EntireFn::monomial(2);
    let h = Hbar::float(0.5, 0.0).unwrap();
    let z = c64(0.3, 0.2);
    let lifted = DiskFunction::ComposedQ(g.clone());
    let disk = star_disk(&lifted, &lifted, &h, z, &cfg).unwrap().value;
    let w = chart_f_0(covering_disk_to_punctured(z).unwrap()).unwrap();
    let printed = star_punctured_with(&g, &g, &h, w, &cfg, PuncturedWeight::Printed).unwrap().value;
    let derived = star_punctured_with(&g, &g, &h, w, &cfg, PuncturedWeight::Derived).unwrap().value;

    verdict(
        "7",
        "radial products match the disk product at 50 lifted points < 1e-9; printed weight fails on t²",
        format!(
            "derived {:.3e}, injected {:.3e} ({:?}), t² witness {:.3e} vs {:.3e}",
            good.max_residual,
            bad.max_residual,
            bad.status,
            (derived - disk).norm(),
            (printed - disk).norm()
        ),
        good.status == Status::Pass
            && good.max_residual < 1e-9
            && bad.status == Status::Fail
            && (derived - disk).norm() < 1e-9
            && (printed - disk).norm() > 1e-3,
    );
}

#[test]
fn c08_charts_and_coverings() {
    let c = suite("charts", None);
    within("8", "f_R∘π_R = p, f_0∘π_0 = q and π(cz) = π(z) over 100 samples", c.max_residual, 1e-10);
    assert_eq!(c.samples, 100);
}

#[test]
fn c09_psi_morphism() {
    let c = suite("psi-morphism", None);
    verdict(
        "9",
        "Ψ_{2,3} intertwines the annulus products for degree <= 3 < 1e-9; Ψ_{R,R} = id",
        format!("max residual {:.3e}, {:?}", c.max_residual, c.status),
        c.status == Status::Pass && c.max_residual < 1e-9,
    );
}

#[test]
fn c10_invariance_predicates() {
    let c = suite("invariance", None);
    verdict(
        "10",
        "g(w/(z−w)) and g(1/(z−w)) invariant < 1e-12; coordinate witnesses rejected",
        format!("max residual {:.3e}, {}", c.max_residual, c.detail.unwrap_or_default()),
        c.status == Status::Pass && c.max_residual < 1e-12,
    );
}

#[test]
fn c11_rigidity_shadow() {
    let r = two_hyperbolic_experiment(3, 200, 42).unwrap().invariant_dimension().unwrap();
    verdict(
        "11",
        "two hyperbolic generators on f_{p,q}, p + q <= 3: invariant dimension 1 with gap >= 1e4",
        format!("dim {}, gap {:.3e}, indices {:?}", r.dim, r.gap, r.invariant_indices),
        r.dim == 1 && r.gap >= 1e4 && r.invariant_indices == [0],
    );
}

#[test]
fn c12_elliptic_filter() {
    let want: Vec<usize> = BasisFpq::grid(2)
        .iter()
        .enumerate()
        .filter(|(_, b)| (b.p as i64 - b.q as i64) % 2 == 0)
        .map(|(k, _)| k)
        .collect();
    let r = elliptic_experiment(2, 2, 100, 42).unwrap().invariant_dimension().unwrap();
    verdict(
        "12",
        "elliptic N = 2, d <= 2 keeps exactly the f_{p,q} with p − q even",
        format!("indices {:?}, expected {:?}", r.invariant_indices, want),
        r.invariant_indices == want,
    );
}

#[test]
#[should_panic(expected = "criterion 13a failed")]
fn c13a_obstruction_on_literal_grid() {
    let grid: Result<Vec<Hbar<C64>>, _> =
        [(0.05, 0.0), (-0.05, 0.0), (0.0, 0.08), (0.0, -0.08)].into_iter().map(|(re, im)| Hbar::float(re, im)).collect();
    match grid {
        Ok(grid) => {
            let r = obstruction_check(2.0, &grid, 3).unwrap();
            verdict("13a", "obstruction at R = 2 on ħ ∈ {±0.05, ±0.08i}", format!("{:?}", r.verdict), r.verdict == Verdict::Obstructed);
        }
        Err(e) => verdict("13a", "obstruction at R = 2 on ħ ∈ {±0.05, ±0.08i}", e, false),
    }
}

#[test]
fn c13b_obstruction_on_default_grid() {
    let r = obstruction_check(2.0, &default_hbar_grid(), 3).unwrap();
    verdict(
        "13b",
        "obstruction at R = 2 on ħ ∈ {0.05, 0.05i, ±0.08i}, degree <= 3: α = 0, β = ±1",
        format!("{:?}, α = {:.2e}, β = {:.6}", r.verdict, r.alpha, r.beta),
        r.verdict == Verdict::Obstructed && r.alpha.norm() < 1e-8 && (r.beta.norm() - 1.0).abs() < 1e-8,
    );
}

#[test]
fn c14_danielewski_chart() {
    let mut rng = Sampler::new(14);
    let mut residual: f64 = 0.0;
    for _ in 0..1000 {
        let (a, b, c) = danielewski_chart(&rng.g_point()).unwrap();
        residual = residual.max((b * b - 4.0 * a * c - 1.0).norm());
    }
    within("14", "|b² − 4ac − 1| on 1000 random G points", residual, 1e-12);
}

#[test]
fn c15_determinism() {
    let opts = SuiteOptions {
        seed: 42,
        mode: Mode::Exact,
        ..Default::default()
    };
    let lib = run_suites(&opts).unwrap().to_json() == run_suites(&opts).unwrap().to_json();
    let run = || Command::new(env!("CARGO_BIN_EXE_wickstar")).args(["verify", "--seed", "42"]).output().unwrap().stdout;
    let bin = run() == run();
    verdict("15", "verify --seed 42 twice gives byte-identical reports", format!("library {lib}, binary {bin}"), lib && bin);
}
