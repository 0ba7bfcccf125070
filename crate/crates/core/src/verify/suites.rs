//! The registered verification checks.

use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::function::{BiPoly, EntireFn, Poly};
use crate::peschl_minda::{aux_p, aux_q, DiskFunction};
use crate::rigidity::{
    default_hbar_grid, elliptic_experiment, obstruction_check, two_hyperbolic_experiment, Verdict,
};
use crate::sampling::{Sampler, DISK_RADIUS};
use crate::scalar::{c64, cq, Scalar, C64, CQ};
use crate::sphere::{
    annulus_deck_factor, covering_disk_to_annulus, covering_disk_to_punctured,
    covering_half_to_annulus, danielewski_chart, psi_g_to_omega, psi_omega_to_g, GPoint,
    MoebiusMap, OmegaPoint, SpherePoint,
};
use crate::star::{
    associator, star_annulus, star_annulus_symbolic, star_disk, star_disk_poly_exact,
    star_punctured_symbolic, star_punctured_with, star_series, BiSeries, FactorialSeries, Hbar,
    PuncturedWeight, StarConfig, StarMode,
};
use crate::surface::{
    chart_f_0, chart_f_r, gamma_hat_invariant, iso_psi, scaling_kernel, translation_kernel,
    AnnulusElement,
};

use super::report::{Check, Metadata, Mode, Status, SuiteReport};

/// Deliberate defects that a discriminating check must catch.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum Injection {
    /// Use the constant `w²` weight in the punctured-disk product.
    PrintedPuncturedWeight,
}

#[derive(Clone, Debug, Default)]
pub struct SuiteOptions {
    pub seed: u64,
    pub mode: Mode,
    /// Overrides every check's own tolerance.
    pub tol: Option<f64>,
    pub inject: Option<Injection>,
    pub timings: bool,
    /// Run only this check.
    pub suite: Option<String>,
}

struct Ctx {
    rng: Sampler,
    mode: Mode,
    inject: Option<Injection>,
}

#[derive(Default)]
struct Outcome {
    residual: f64,
    samples: usize,
    /// Conditions besides the residual bound.
    ok: bool,
    flagged: bool,
    detail: Option<String>,
}

impl Outcome {
    fn residual(residual: f64, samples: usize) -> Self {
        Outcome {
            residual,
            samples,
            ok: true,
            ..Default::default()
        }
    }

    fn require(mut self, ok: bool) -> Self {
        self.ok &= ok;
        self
    }

    fn detail(mut self, d: impl Into<String>) -> Self {
        self.detail = Some(d.into());
        self
    }
}

struct Entry {
    name: &'static str,
    paper_ref: &'static str,
    tol: f64,
    run: fn(&mut Ctx) -> Result<Outcome>,
}

const REGISTRY: &[Entry] = &[
    Entry {
        name: "coefficients",
        paper_ref: "coefficient family c_n(ħ): recurrence against product formula, c_n(1) = 1/n!, poles",
        tol: 1e-13,
        run: coefficients,
    },
    Entry {
        name: "unit",
        paper_ref: "disk product: 1 ⋆ f = f ⋆ 1 = f",
        tol: 1e-13,
        run: unit,
    },
    Entry {
        name: "noncommutativity",
        paper_ref: "disk product: commutator witness z̄ ⋆ z − z ⋆ z̄",
        tol: 1e-10,
        run: noncommutativity,
    },
    Entry {
        name: "associativity",
        paper_ref: "disk product: (f ⋆ g) ⋆ h = f ⋆ (g ⋆ h) on monomial triples",
        tol: 1e-12,
        run: associativity,
    },
    Entry {
        name: "conformal",
        paper_ref: "conformal invariance: (f∘φ) ⋆ (g∘φ) = (f ⋆ g)∘φ for φ in Aut(D)",
        tol: 1e-8,
        run: conformal,
    },
    Entry {
        name: "closed-forms",
        paper_ref: "annulus and punctured-disk closed forms and their commutativity",
        tol: 1e-12,
        run: closed_forms,
    },
    Entry {
        name: "lift-coherence",
        paper_ref: "radial products agree with the disk product on lifted functions",
        tol: 1e-9,
        run: lift_coherence,
    },
    Entry {
        name: "charts",
        paper_ref: "chart/covering identities f_R∘π_R = p, f₀∘π₀ = q and the deck relation",
        tol: 1e-10,
        run: charts,
    },
    Entry {
        name: "psi-morphism",
        paper_ref: "Ψ_{R',R} intertwines the annulus products; Ψ_{R,R} = id",
        tol: 1e-9,
        run: psi_morphism,
    },
    Entry {
        name: "invariance",
        paper_ref: "invariant kernels g(w/(z−w)) under scaling and g(1/(z−w)) under translation",
        tol: 1e-12,
        run: invariance,
    },
    Entry {
        name: "models",
        paper_ref: "Ω ↔ G round trip and the Danielewski chart b² − 4ac = 1",
        tol: 1e-12,
        run: models,
    },
    Entry {
        name: "rigidity",
        paper_ref: "invariant dimension for two hyperbolic generators and the elliptic filter",
        tol: 1e-8,
        run: rigidity,
    },
    Entry {
        name: "obstruction",
        paper_ref: "annulus and punctured-disk algebras are not strongly isomorphic",
        tol: 1e-8,
        run: obstruction,
    },
    Entry {
        name: "punctured-weight-variants",
        paper_ref: "punctured-disk weight: derived w^{2n} against the printed constant w²",
        tol: f64::INFINITY,
        run: weight_variants,
    },
];

pub fn suite_names() -> Vec<&'static str> {
    REGISTRY.iter().map(|e| e.name).collect()
}

fn stream_seed(seed: u64, name: &str) -> u64 {
    name.bytes()
        .fold(seed ^ 0xcbf2_9ce4_8422_2325, |h, b| (h ^ b as u64).wrapping_mul(0x0100_0000_01b3))
}

/// Runs the selected checks. Unknown suite names are an error.
pub fn run_suites(opts: &SuiteOptions) -> Result<SuiteReport> {
    let entries: Vec<&Entry> = match &opts.suite {
        None => REGISTRY.iter().collect(),
        Some(name) if name == "all" => REGISTRY.iter().collect(),
        Some(name) => {
            let e = REGISTRY.iter().find(|e| e.name == name).ok_or_else(|| {
                Error::Invalid(format!("unknown suite {name:?}; known: {}", suite_names().join(", ")))
            })?;
            vec![e]
        }
    };
    let checks = entries
        .par_iter()
        .map(|e| {
            let mut ctx = Ctx {
                rng: Sampler::new(stream_seed(opts.seed, e.name)),
                mode: opts.mode,
                inject: opts.inject,
            };
            let tol = opts.tol.unwrap_or(e.tol);
            let start = Instant::now();
            let outcome = (e.run)(&mut ctx);
            let runtime_ms = opts.timings.then(|| start.elapsed().as_millis() as u64);
            let (status, max_residual, samples, detail) = match outcome {
                Ok(o) => {
                    let status = if o.flagged {
                        Status::Flagged
                    } else if o.ok && o.residual <= tol {
                        Status::Pass
                    } else {
                        Status::Fail
                    };
                    (status, o.residual, o.samples, o.detail)
                }
                Err(err) => (Status::Fail, f64::INFINITY, 0, Some(err.to_string())),
            };
            Check {
                name: e.name.to_string(),
                paper_ref: e.paper_ref.to_string(),
                status,
                max_residual: if max_residual.is_finite() { max_residual } else { f64::MAX },
                samples,
                runtime_ms,
                detail,
            }
        })
        .collect();
    Ok(SuiteReport {
        metadata: Metadata {
            seed: opts.seed,
            mode: opts.mode,
            version: env!("CARGO_PKG_VERSION").to_string(),
        },
        checks,
    })
}

fn hbar(re: f64, im: f64) -> Hbar<C64> {
    Hbar::float(re, im).expect("fixed ħ values lie in the domain")
}

fn rel(a: C64, b: C64) -> f64 {
    (a - b).norm() / (1.0 + b.norm())
}

fn random_bipoly(rng: &mut Sampler, degree: u32) -> BiPoly<C64> {
    let mut f = BiPoly::zero();
    for i in 0..=degree {
        for j in 0..=degree - i {
            f.add_term(i, j, rng.complex(1.0));
        }
    }
    f
}

fn random_cq(rng: &mut Sampler) -> CQ {
    cq(rng.int(-5, 5), rng.int(1, 4), rng.int(-5, 5), rng.int(1, 4))
}

fn random_poly_cq(rng: &mut Sampler, degree: usize) -> Poly<CQ> {
    Poly::new((0..=degree).map(|_| random_cq(rng)).collect())
}

fn random_poly(rng: &mut Sampler, degree: usize) -> EntireFn {
    EntireFn::polynomial(rng.coeffs(degree + 1))
}

fn max_coeff<S: Scalar>(p: &BiPoly<S>) -> f64 {
    p.terms().fold(0.0, |m, (_, c)| m.max(c.to_c64().norm()))
}

fn coefficients(ctx: &mut Ctx) -> Result<Outcome> {
    let mut residual: f64 = 0.0;
    let mut samples = 0;
    let exact_ok = match ctx.mode {
        Mode::Exact => {
            let mut ok = true;
            for h in [cq(1, 1, 0, 1), cq(1, 2, 0, 1), cq(1, 1, 1, 1)] {
                let hb = Hbar::new(h)?;
                for n in 0..=30 {
                    ok &= hb.c_n(n) == hb.c_n_product(n);
                    samples += 1;
                }
            }
            let one = Hbar::new(cq(1, 1, 0, 1))?;
            let mut fact = cq(1, 1, 0, 1);
            for n in 0..=30 {
                if n > 0 {
                    fact = fact * cq(n as i64, 1, 0, 1);
                }
                ok &= one.c_n(n) * fact.clone() == cq(1, 1, 0, 1);
            }
            ok
        }
        Mode::Float => {
            for h in [c64(1.0, 0.0), c64(0.5, 0.0), c64(1.0, 1.0)] {
                let hb = Hbar::new(h)?;
                for n in 0..=30 {
                    let (a, b) = (hb.c_n(n), hb.c_n_product(n));
                    residual = residual.max((a - b).norm() / b.norm().max(f64::MIN_POSITIVE));
                    samples += 1;
                }
            }
            true
        }
    };
    let guards_ok = [0.0, -1.0, -0.5, -1.0 / 3.0]
        .iter()
        .all(|&v| Hbar::float(v, 0.0).is_err())
        && [cq(0, 1, 0, 1), cq(-1, 1, 0, 1), cq(-1, 2, 0, 1), cq(-1, 3, 0, 1)]
            .into_iter()
            .all(|v| Hbar::new(v).is_err());
    Ok(Outcome::residual(residual, samples + 8).require(exact_ok && guards_ok))
}

fn unit(ctx: &mut Ctx) -> Result<Outcome> {
    let cfg = StarConfig::exact_finite();
    let one = DiskFunction::constant(c64(1.0, 0.0));
    let mut residual: f64 = 0.0;
    let mut ok = true;
    for k in 0..100 {
        let f = DiskFunction::poly(random_bipoly(&mut ctx.rng, 3));
        let z = ctx.rng.disk(DISK_RADIUS);
        let h = if k % 2 == 0 { hbar(0.5, 0.0) } else { hbar(1.0, 1.0) };
        let fz = f.value(z)?;
        residual = residual.max(rel(star_disk(&one, &f, &h, z, &cfg)?.value, fz));
        residual = residual.max(rel(star_disk(&f, &one, &h, z, &cfg)?.value, fz));
    }
    if ctx.mode == Mode::Exact {
        let h = Hbar::new(cq(1, 2, 0, 1))?;
        let one = BiPoly::<CQ>::one();
        for _ in 0..20 {
            let mut f = BiPoly::zero();
            for i in 0..=3 {
                for j in 0..=3 - i {
                    f.add_term(i, j, random_cq(&mut ctx.rng));
                }
            }
            ok &= star_disk_poly_exact(&one, &f, &h, StarMode::ExactFinite)? == f;
            ok &= star_disk_poly_exact(&f, &one, &h, StarMode::ExactFinite)? == f;
        }
    }
    Ok(Outcome::residual(residual, 100).require(ok))
}

/// `(1 − x)² Σ_{n>=1} c_n n! xⁿ⁻¹`, the commutator `z̄ ⋆ z − z ⋆ z̄` at `x = |z|²`.
fn commutator_series(h: &Hbar<C64>, x: f64, terms: usize) -> C64 {
    let w = h.weights(terms);
    let s: C64 = (1..terms).rev().fold(c64(0.0, 0.0), |acc, n| acc * x + w[n]);
    s * (1.0 - x) * (1.0 - x)
}

fn noncommutativity(ctx: &mut Ctx) -> Result<Outcome> {
    let cfg = StarConfig::default().with_max_terms(400);
    let (zb, z1) = (DiskFunction::zbar(), DiskFunction::z());
    let mut residual: f64 = 0.0;
    let mut smallest = f64::INFINITY;
    let mut first_order: f64 = 0.0;
    let mut converged = true;
    for h in [hbar(0.5, 0.0), hbar(1.0, 1.0)] {
        for _ in 0..100 {
            let z = ctx.rng.disk(DISK_RADIUS);
            let a = star_disk(&zb, &z1, &h, z, &cfg)?;
            let b = star_disk(&z1, &zb, &h, z, &cfg)?;
            converged &= a.converged && b.converged;
            let comm = a.value - b.value;
            let x = z.norm_sqr();
            residual = residual.max(rel(comm, commutator_series(&h, x, 2000)));
            smallest = smallest.min(comm.norm());
            first_order = first_order.max((comm - h.value() * (1.0 - x) * (1.0 - x)).norm());
        }
    }
    let mut ok = smallest > 0.0 && converged;
    if ctx.mode == Mode::Exact {
        let h = Hbar::new(cq(1, 2, 0, 1))?;
        let k = 8;
        let (w, z) = (BiSeries::exact(BiPoly::<CQ>::w()), BiSeries::exact(BiPoly::<CQ>::z()));
        let comm = &star_series(&w, &z, &h, k)?.poly - &star_series(&z, &w, &h, k)?.poly;
        let weights = h.weights(k as usize);
        let sq = BiPoly::<CQ>::one_minus_zw().pow(2);
        let mut expected = BiPoly::zero();
        for n in 1..k {
            expected = &expected + &(&sq * &BiPoly::monomial(weights[n as usize].clone(), n - 1, n - 1));
        }
        ok &= comm == expected.truncate(k);
    }
    Ok(Outcome::residual(residual, 200).require(ok).detail(format!(
        "min |commutator| = {smallest:.3e}; max deviation from the first-order term ħ(1−|z|²)² = {first_order:.3e}"
    )))
}

fn associativity(ctx: &mut Ctx) -> Result<Outcome> {
    fn monomials<S: Scalar>() -> Vec<BiPoly<S>> {
        [(0, 0), (1, 0), (0, 1), (2, 0), (1, 1), (0, 2)]
            .into_iter()
            .map(|(i, j)| BiPoly::monomial(S::one(), i, j))
            .collect()
    }
    fn triples<S: Scalar>(h: &Hbar<S>, k: u32) -> Result<(f64, usize)> {
        let m = monomials::<S>();
        let mut idx = Vec::new();
        for a in 0..m.len() {
            for b in 0..m.len() {
                for c in 0..m.len() {
                    idx.push((a, b, c));
                }
            }
        }
        let res = idx
            .par_iter()
            .map(|&(a, b, c)| associator(&m[a], &m[b], &m[c], h, k).map(|p| max_coeff(&p)))
            .collect::<Result<Vec<f64>>>()?;
        Ok((res.iter().copied().fold(0.0, f64::max), idx.len()))
    }
    let k = 6;
    let (residual, samples) = match ctx.mode {
        Mode::Exact => triples(&Hbar::new(cq(1, 2, 0, 1))?, k)?,
        Mode::Float => triples(&hbar(0.5, 0.0), k)?,
    };
    Ok(Outcome::residual(residual, samples).detail(format!("coefficients compared through total degree {k}")))
}

fn conformal(ctx: &mut Ctx) -> Result<Outcome> {
    let cfg = StarConfig::default().with_max_terms(400);
    let h = hbar(0.5, 0.0);
    let cases: Vec<_> = (0..50)
        .map(|_| {
            let f = random_bipoly(&mut ctx.rng, 3);
            let g = random_bipoly(&mut ctx.rng, 3);
            (f, g, ctx.rng.aut_disk(0.3), ctx.rng.disk(0.7))
        })
        .collect();
    let res = cases
        .par_iter()
        .map(|(f, g, phi, z)| {
            let (f, g) = (DiskFunction::poly(f.clone()), DiskFunction::poly(g.clone()));
            let lhs = star_disk(
                &DiskFunction::pullback(f.clone(), phi.clone()),
                &DiskFunction::pullback(g.clone(), phi.clone()),
                &h,
                *z,
                &cfg,
            )?;
            let rhs = star_disk(&f, &g, &h, phi.eval(*z), &cfg)?;
            Ok((rel(lhs.value, rhs.value), lhs.converged && rhs.converged))
        })
        .collect::<Result<Vec<_>>>()?;
    let residual = res.iter().map(|r| r.0).fold(0.0, f64::max);
    let converged = res.iter().all(|r| r.1);
    let mut out = Outcome::residual(residual, cases.len());
    if !converged {
        out.flagged = true;
        out.detail = Some("a star series did not converge within 400 terms".into());
    }
    Ok(out)
}

fn closed_forms(ctx: &mut Ctx) -> Result<Outcome> {
    let q = |n: i64| cq(n, 1, 0, 1);
    let id = Poly::<CQ>::identity();
    let mut ok = star_annulus_symbolic(&id, &id).terms()
        == [Poly::monomial(2), Poly::new(vec![q(-1), q(0), q(1)])];
    ok &= star_punctured_symbolic(&id, &id, PuncturedWeight::Derived).terms() == [Poly::monomial(2), Poly::monomial(2)];
    let mut residual: f64 = 0.0;
    let pairs = 25;
    for _ in 0..pairs {
        let da = ctx.rng.int(0, 4) as usize;
        let db = ctx.rng.int(0, 4) as usize;
        match ctx.mode {
            Mode::Exact => {
                let (a, b) = (random_poly_cq(&mut ctx.rng, da), random_poly_cq(&mut ctx.rng, db));
                ok &= star_annulus_symbolic(&a, &b) == star_annulus_symbolic(&b, &a);
                ok &= star_punctured_symbolic(&a, &b, PuncturedWeight::Derived)
                    == star_punctured_symbolic(&b, &a, PuncturedWeight::Derived);
            }
            Mode::Float => {
                let (a, b) = (random_poly(&mut ctx.rng, da), random_poly(&mut ctx.rng, db));
                let h = hbar(0.3, 0.2);
                let w = ctx.rng.complex(2.0);
                let cfg = StarConfig::exact_finite();
                residual = residual.max(rel(
                    star_annulus(&a, &b, &h, w, &cfg)?.value,
                    star_annulus(&b, &a, &h, w, &cfg)?.value,
                ));
            }
        }
    }
    Ok(Outcome::residual(residual, pairs + 2).require(ok))
}

fn lift_coherence(ctx: &mut Ctx) -> Result<Outcome> {
    let weight = match ctx.inject {
        Some(Injection::PrintedPuncturedWeight) => PuncturedWeight::Printed,
        None => PuncturedWeight::Derived,
    };
    let r = 2.0;
    let cfg = StarConfig::exact_finite();
    let mut residual: f64 = 0.0;
    let points = 50;
    for k in 0..points {
        let degree = 2 + k % 2;
        let g = random_poly(&mut ctx.rng, degree);
        let gt = random_poly(&mut ctx.rng, degree);
        let h = Hbar::new(ctx.rng.disk(0.9) + 0.5).unwrap_or_else(|_| hbar(0.5, 0.0));
        let z = ctx.rng.disk(0.6);
        let (lg, lgt) = (DiskFunction::ComposedP(g.clone()), DiskFunction::ComposedP(gt.clone()));
        let disk = star_disk(&lg, &lgt, &h, z, &cfg)?.value;
        let w = chart_f_r(r, covering_disk_to_annulus(r, z)?)?;
        residual = residual.max(rel(star_annulus(&g, &gt, &h, w, &cfg)?.value, disk));
        let (lg, lgt) = (DiskFunction::ComposedQ(g.clone()), DiskFunction::ComposedQ(gt.clone()));
        let disk = star_disk(&lg, &lgt, &h, z, &cfg)?.value;
        let w = chart_f_0(covering_disk_to_punctured(z)?)?;
        residual = residual.max(rel(star_punctured_with(&g, &gt, &h, w, &cfg, weight)?.value, disk));
    }
    let mut out = Outcome::residual(residual, 2 * points);
    if weight == PuncturedWeight::Printed {
        out.detail = Some("punctured product evaluated with the printed constant weight".into());
    }
    Ok(out)
}

fn charts(ctx: &mut Ctx) -> Result<Outcome> {
    let mut residual: f64 = 0.0;
    for r in [2.0, 3.0] {
        for _ in 0..50 {
            let z = ctx.rng.disk(DISK_RADIUS);
            residual = residual.max(rel(chart_f_r(r, covering_disk_to_annulus(r, z)?)?, aux_p(z)));
            residual = residual.max(rel(chart_f_0(covering_disk_to_punctured(z)?)?, aux_q(z)));
            let x = ctx.rng.half_plane(3.0);
            let c = annulus_deck_factor(r);
            residual = residual.max(rel(covering_half_to_annulus(r, c * x)?, covering_half_to_annulus(r, x)?));
        }
    }
    Ok(Outcome::residual(residual, 100))
}

fn psi_morphism(ctx: &mut Ctx) -> Result<Outcome> {
    let (r_from, r_to) = (2.0, 3.0);
    let cfg = StarConfig::exact_finite();
    let mut residual: f64 = 0.0;
    let mut ok = true;
    let samples = 50;
    for _ in 0..samples {
        let da = ctx.rng.int(0, 3) as usize;
        let db = ctx.rng.int(0, 3) as usize;
        let g = random_poly(&mut ctx.rng, da);
        let gt = random_poly(&mut ctx.rng, db);
        let h = hbar(ctx.rng.uniform(0.1, 1.5), ctx.rng.uniform(-1.0, 1.0));
        let z = ctx.rng.annulus(r_to);
        // Ψ(f ⋆ f̃) through the symbolic product on A_{R'}, re-read on A_R.
        let product: FactorialSeries<C64> = star_annulus_symbolic(g.as_polynomial().unwrap(), gt.as_polynomial().unwrap());
        let lhs = product.eval(&h, &chart_f_r(r_to, z)?);
        let (e, et) = (AnnulusElement::new(r_from, g)?, AnnulusElement::new(r_from, gt)?);
        let (pe, pet) = (iso_psi(&e, r_to)?, iso_psi(&et, r_to)?);
        let rhs = pe.star(&pet, &h, z, &cfg)?.value;
        residual = residual.max(rel(lhs, rhs));
        ok &= iso_psi(&e, r_from)? == e;
        ok &= iso_psi(&iso_psi(&e, 5.0)?, r_to)? == pe;
    }
    Ok(Outcome::residual(residual, samples).require(ok))
}

fn invariance(ctx: &mut Ctx) -> Result<Outcome> {
    let pts: Vec<GPoint<C64>> = (0..100).map(|_| ctx.rng.g_point()).collect();
    let g = random_poly(&mut ctx.rng, 3);
    let scale = MoebiusMap::scaling(c64(2.0, 0.0))?;
    let shift = MoebiusMap::translation(c64(1.0, 0.0));
    let a = gamma_hat_invariant(scaling_kernel(g.clone()), &scale, &pts, f64::INFINITY);
    let b = gamma_hat_invariant(translation_kernel(g), &shift, &pts, f64::INFINITY);
    let z = |p: &GPoint<C64>| p.z.value().ok_or(Error::InfiniteCoordinate("z"));
    let wa = gamma_hat_invariant(z, &scale, &pts, 1e-3);
    let wb = gamma_hat_invariant(z, &shift, &pts, 1e-3);
    let ok = a.failures.is_empty() && b.failures.is_empty() && !wa.pass && !wb.pass;
    Ok(Outcome::residual(a.max_residual.max(b.max_residual), 2 * pts.len())
        .require(ok)
        .detail(format!(
            "non-invariant witnesses: residual {:.3e} (scaling), {:.3e} (translation)",
            wa.max_residual, wb.max_residual
        )))
}

fn models(ctx: &mut Ctx) -> Result<Outcome> {
    let mut residual: f64 = 0.0;
    for _ in 0..1000 {
        let p = ctx.rng.g_point();
        let (a, b, c) = danielewski_chart(&p)?;
        residual = residual.max((b * b - 4.0 * a * c - 1.0).norm());
    }
    let mut round_trip: f64 = 0.0;
    for _ in 0..100 {
        let o = ctx.rng.omega_point(0.95);
        let back = psi_g_to_omega(&psi_omega_to_g(&o));
        round_trip = round_trip.max(back.z.chordal_distance(&o.z).max(back.w.chordal_distance(&o.w)));
    }
    let mut ok = true;
    if ctx.mode == Mode::Exact {
        for _ in 0..100 {
            let (z, w) = (random_cq(&mut ctx.rng), random_cq(&mut ctx.rng));
            if z == w {
                continue;
            }
            let p = GPoint::finite(z.clone(), w.clone())?;
            let (a, b, c) = danielewski_chart(&p)?;
            ok &= b.clone() * b - cq(4, 1, 0, 1) * a * c == cq(1, 1, 0, 1);
            if z.clone() * w.clone() != cq(1, 1, 0, 1) {
                let o = OmegaPoint::new(SpherePoint::finite(z), SpherePoint::finite(w))?;
                ok &= psi_g_to_omega(&psi_omega_to_g(&o)) == o;
            }
        }
    }
    Ok(Outcome::residual(residual.max(round_trip), 1100).require(ok))
}

fn rigidity(ctx: &mut Ctx) -> Result<Outcome> {
    let seed = ctx.rng.int(0, i64::MAX) as u64;
    let hyp = two_hyperbolic_experiment(3, 200, seed)?.invariant_dimension()?;
    let ell = elliptic_experiment(2, 2, 100, seed)?.invariant_dimension()?;
    let expected: Vec<usize> = crate::function::BasisFpq::grid(2)
        .iter()
        .enumerate()
        .filter(|(_, b)| (b.p + b.q) % 2 == 0)
        .map(|(k, _)| k)
        .collect();
    let discarded = |sv: &[f64], dim: usize| sv[sv.len() - dim..].iter().copied().fold(0.0, f64::max) / sv[0];
    let residual = discarded(&hyp.singular_values, hyp.dim).max(discarded(&ell.singular_values, ell.dim));
    let ok = hyp.dim == 1 && hyp.gap >= 1e4 && ell.invariant_indices == expected && ell.dim == expected.len();
    Ok(Outcome::residual(residual, 300).require(ok).detail(format!(
        "two hyperbolic generators: dim {} (gap {:.3e}); elliptic N = 2: invariant indices {:?}",
        hyp.dim, hyp.gap, ell.invariant_indices
    )))
}

fn obstruction(ctx: &mut Ctx) -> Result<Outcome> {
    let grid = default_hbar_grid();
    let r = obstruction_check(2.0, &grid, 3)?;
    let half: Vec<Hbar<C64>> = grid.iter().map(|h| Hbar::new(h.value() * 0.5)).collect::<Result<_>>()?;
    let r_half = obstruction_check(2.0, &half, 3)?;
    let _ = ctx;
    let residual = r.residuals.iter().copied().fold(r.annulus_residual, f64::max);
    Ok(Outcome::residual(residual, r.samples)
        .require(r.verdict == Verdict::Obstructed && r_half.verdict == r.verdict)
        .detail(format!("verdict {:?}: α = {:.3e}, β = {:.6}", r.verdict, r.alpha, r.beta)))
}

fn weight_variants(ctx: &mut Ctx) -> Result<Outcome> {
    let g = EntireFn::monomial(2);
    let h = hbar(0.5, 0.0);
    let w = c64(ctx.rng.uniform(0.5, 2.0), 0.0);
    let cfg = StarConfig::exact_finite();
    let derived = star_punctured_with(&g, &g, &h, w, &cfg, PuncturedWeight::Derived)?.value;
    let printed = star_punctured_with(&g, &g, &h, w, &cfg, PuncturedWeight::Printed)?.value;
    // n = 2 terms: c₂ w^4 (g'')²/2 against c₂ w² (g'')²/2
    let c2 = h.c_n(2);
    let t_derived = c2 * w.powu(4) * 4.0 / 2.0;
    let t_printed = c2 * w.powu(2) * 4.0 / 2.0;
    Ok(Outcome {
        residual: (derived - printed).norm(),
        samples: 1,
        ok: true,
        flagged: true,
        detail: Some(format!(
            "g = g̃ = t², ħ = 0.5, w = {:.4}: n = 2 term {:.6} (derived) vs {:.6} (printed)",
            w.re, t_derived.re, t_printed.re
        )),
    })
}
