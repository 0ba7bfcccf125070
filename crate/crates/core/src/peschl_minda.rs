//! Peschl–Minda derivatives `Dⁿ`, `D̄ⁿ` of functions on the unit disk.
//!
//! A disk function `f` is handled through a bivariate extension `F` with
//! `f(z) = F(z, conj z)`. Three evaluation paths exist:
//!
//! * polynomials use the exact recursion `D^{n+1}F = (1 − zw) ∂^{n+1}[(1 − zw)ⁿ F]`
//!   or its per-monomial closed form,
//! * `g∘p` and `g∘q` use closed forms in `g^{(n)}`,
//! * everything else, and every cross-check, goes through the definition
//!   `Dⁿf(z)/n! = [uⁿ] F(T_z(u), conj z)` with `T_z(u) = (z + u)/(1 + conj(z) u)`.
//!
//! Most of the engine works with the normalized derivatives `D̃ⁿ = Dⁿ/n!`,
//! which stay bounded for large `n`.

use crate::error::{Error, Result};
use crate::function::{BiPoly, EntireFn, Poly};
use crate::scalar::{binomial_f64, c64, C64};
use crate::series::{entire_of_moebius, poly_of_moebius};
use crate::sphere::{AutDisk, MoebiusMap};

/// Default number of jet coefficients beyond the requested order for the definitional oracle.
pub const JET_GUARD: usize = 1;
/// Agreement tolerance between the definitional oracle and the primary paths.
pub const JET_TOL: f64 = 1e-8;

/// `p(z) = (z − conj z) / (1 − |z|²)`.
pub fn aux_p(z: C64) -> C64 {
    (z - z.conj()) / (1.0 - z.norm_sqr())
}

/// `q(z) = |1 − z|² / (1 − |z|²)`.
pub fn aux_q(z: C64) -> C64 {
    c64((c64(1.0, 0.0) - z).norm_sqr() / (1.0 - z.norm_sqr()), 0.0)
}

pub(crate) fn check_disk(z: C64) -> Result<()> {
    if !(z.norm() < 1.0) {
        return Err(Error::outside(z, "the unit disk"));
    }
    Ok(())
}

/// A function on the unit disk with a known bivariate extension.
#[derive(Clone, Debug, PartialEq)]
pub enum DiskFunction {
    /// `F(z, conj z)` for a polynomial `F`.
    Poly(BiPoly<C64>),
    /// `g(p(z))`.
    ComposedP(EntireFn),
    /// `g(q(z))`.
    ComposedQ(EntireFn),
    /// `inner ∘ φ` for a disk automorphism `φ`.
    MoebiusPullback {
        inner: Box<DiskFunction>,
        phi: AutDisk<C64>,
    },
}

/// Which derivative evaluation path to use.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum PmRoute {
    /// Per-monomial formula for polynomials, closed forms for `g∘p`, `g∘q`.
    #[default]
    Closed,
    /// The definition through `T_z` for every variant.
    Jet,
}

/// Normalized derivatives `D̃ⁿf(z)` and `D̄̃ⁿf(z)` for `n < len`, with error bounds
/// inherited from truncated-series data.
#[derive(Clone, Debug, PartialEq)]
pub struct PmJets {
    pub holo: Vec<C64>,
    pub anti: Vec<C64>,
    pub holo_bound: Vec<f64>,
    pub anti_bound: Vec<f64>,
}

impl DiskFunction {
    pub fn poly(f: BiPoly<C64>) -> Self {
        DiskFunction::Poly(f)
    }

    pub fn z() -> Self {
        DiskFunction::Poly(BiPoly::z())
    }

    pub fn zbar() -> Self {
        DiskFunction::Poly(BiPoly::w())
    }

    pub fn constant(c: C64) -> Self {
        DiskFunction::Poly(BiPoly::constant(c))
    }

    pub fn pullback(inner: DiskFunction, phi: AutDisk<C64>) -> Self {
        DiskFunction::MoebiusPullback {
            inner: Box::new(inner),
            phi,
        }
    }

    pub fn value(&self, z: C64) -> Result<C64> {
        check_disk(z)?;
        self.value_unchecked(z)
    }

    fn value_unchecked(&self, z: C64) -> Result<C64> {
        match self {
            DiskFunction::Poly(f) => Ok(f.eval_diagonal(&z)),
            DiskFunction::ComposedP(g) => g.value(aux_p(z)),
            DiskFunction::ComposedQ(g) => g.value(aux_q(z)),
            DiskFunction::MoebiusPullback { inner, phi } => inner.value_unchecked(phi.eval(z)),
        }
    }

    /// Largest `n` for which `Dⁿf` can be nonzero; `None` if unbounded.
    pub fn holo_order(&self) -> Option<usize> {
        match self {
            DiskFunction::Poly(f) if f.is_antiholomorphic() => Some(0),
            DiskFunction::Poly(_) => None,
            DiskFunction::ComposedP(g) | DiskFunction::ComposedQ(g) => g.derivative_order(),
            DiskFunction::MoebiusPullback { inner, .. } => inner.holo_order(),
        }
    }

    /// Largest `n` for which `D̄ⁿf` can be nonzero; `None` if unbounded.
    pub fn anti_order(&self) -> Option<usize> {
        match self {
            DiskFunction::Poly(f) if f.is_holomorphic() => Some(0),
            DiskFunction::Poly(_) => None,
            DiskFunction::ComposedP(g) | DiskFunction::ComposedQ(g) => g.derivative_order(),
            DiskFunction::MoebiusPullback { inner, .. } => inner.anti_order(),
        }
    }

    /// Taylor coefficients in `u` of `F(M(u), w₀)`.
    pub fn z_slot_series(&self, m: &MoebiusMap<C64>, w0: C64, order: usize) -> Result<Vec<C64>> {
        match self {
            DiskFunction::Poly(f) => {
                let mut c = vec![c64(0.0, 0.0); f.deg_z() as usize + 1];
                for (&(i, j), a) in f.terms() {
                    c[i as usize] += a * w0.powu(j);
                }
                poly_of_moebius(&Poly::new(c), m, order)
            }
            DiskFunction::ComposedP(g) => {
                let pm = MoebiusMap::new(c64(1.0, 0.0), -w0, -w0, c64(1.0, 0.0))?;
                entire_of_moebius(g, &pm.compose(m), order)
            }
            DiskFunction::ComposedQ(g) => {
                let s = c64(1.0, 0.0) - w0;
                let qm = MoebiusMap::new(-s, s, -w0, c64(1.0, 0.0))?;
                entire_of_moebius(g, &qm.compose(m), order)
            }
            DiskFunction::MoebiusPullback { inner, phi } => {
                let w1 = phi
                    .map()
                    .reflected()
                    .apply_finite(&w0)
                    .ok_or(Error::InfiniteCoordinate("pullback second slot"))?;
                inner.z_slot_series(&phi.map().compose(m), w1, order)
            }
        }
    }

    /// Taylor coefficients in `v` of `F(z₀, M(v))`.
    pub fn w_slot_series(&self, z0: C64, m: &MoebiusMap<C64>, order: usize) -> Result<Vec<C64>> {
        match self {
            DiskFunction::Poly(f) => {
                let mut c = vec![c64(0.0, 0.0); f.deg_w() as usize + 1];
                for (&(i, j), a) in f.terms() {
                    c[j as usize] += a * z0.powu(i);
                }
                poly_of_moebius(&Poly::new(c), m, order)
            }
            DiskFunction::ComposedP(g) => {
                let pm = MoebiusMap::new(c64(-1.0, 0.0), z0, -z0, c64(1.0, 0.0))?;
                entire_of_moebius(g, &pm.compose(m), order)
            }
            DiskFunction::ComposedQ(g) => {
                let s = c64(1.0, 0.0) - z0;
                let qm = MoebiusMap::new(-s, s, -z0, c64(1.0, 0.0))?;
                entire_of_moebius(g, &qm.compose(m), order)
            }
            DiskFunction::MoebiusPullback { inner, phi } => {
                let z1 = phi.eval(z0);
                inner.w_slot_series(z1, &phi.map().reflected().compose(m), order)
            }
        }
    }

    /// `[D̃ⁿf(z), n < count]` and `[D̄̃ⁿf(z), n < count]`.
    pub fn normalized_jets(&self, z: C64, count: usize, route: PmRoute) -> Result<PmJets> {
        check_disk(z)?;
        let zeros = vec![0.0; count];
        match (self, route) {
            (DiskFunction::Poly(f), PmRoute::Closed) => Ok(PmJets {
                holo: (0..count).map(|n| poly_normalized_at(f, n, z, false)).collect(),
                anti: (0..count).map(|n| poly_normalized_at(f, n, z, true)).collect(),
                holo_bound: zeros.clone(),
                anti_bound: zeros,
            }),
            (DiskFunction::ComposedP(g), PmRoute::Closed) => {
                let taylor = g.taylor_coeffs_at(aux_p(z), count)?;
                let s = 1.0 - z.norm_sqr();
                let fh = (c64(1.0, 0.0) - z.conj() * z.conj()) / s;
                let fa = -(c64(1.0, 0.0) - z * z) / s;
                Ok(closed_jets(&taylor, fh, fa))
            }
            (DiskFunction::ComposedQ(g), PmRoute::Closed) => {
                let taylor = g.taylor_coeffs_at(aux_q(z), count)?;
                let s = 1.0 - z.norm_sqr();
                let one = c64(1.0, 0.0);
                let fh = -(one - z.conj()) * (one - z.conj()) / s;
                let fa = -(one - z) * (one - z) / s;
                Ok(closed_jets(&taylor, fh, fa))
            }
            _ => {
                let order = count.saturating_sub(1);
                let (tz, tzbar) = disk_automorphisms_at(z);
                let mut holo = self.z_slot_series(&tz, z.conj(), order)?;
                let mut anti = self.w_slot_series(z, &tzbar, order)?;
                holo.truncate(count);
                anti.truncate(count);
                Ok(PmJets {
                    holo,
                    anti,
                    holo_bound: zeros.clone(),
                    anti_bound: zeros,
                })
            }
        }
    }
}

fn closed_jets(taylor: &[(C64, f64)], fh: C64, fa: C64) -> PmJets {
    let mut out = PmJets {
        holo: Vec::with_capacity(taylor.len()),
        anti: Vec::with_capacity(taylor.len()),
        holo_bound: Vec::with_capacity(taylor.len()),
        anti_bound: Vec::with_capacity(taylor.len()),
    };
    let (mut ph, mut pa) = (c64(1.0, 0.0), c64(1.0, 0.0));
    for &(t, b) in taylor {
        out.holo.push(ph * t);
        out.anti.push(pa * t);
        out.holo_bound.push(ph.norm() * b);
        out.anti_bound.push(pa.norm() * b);
        ph *= fh;
        pa *= fa;
    }
    out
}

/// `T_z(u) = (u + z)/(conj(z) u + 1)` and `T_{conj z}(v) = (v + conj z)/(z v + 1)`.
pub fn disk_automorphisms_at(z: C64) -> (MoebiusMap<C64>, MoebiusMap<C64>) {
    let one = c64(1.0, 0.0);
    let tz = MoebiusMap {
        a: one,
        b: z,
        c: z.conj(),
        d: one,
    };
    let tzbar = MoebiusMap {
        a: one,
        b: z.conj(),
        c: z,
        d: one,
    };
    (tz, tzbar)
}

/// `D̃ⁿF` (or `D̄̃ⁿF` when `bar`) at a disk point from the per-monomial formula.
fn poly_normalized_at(f: &BiPoly<C64>, n: usize, z: C64, bar: bool) -> C64 {
    if n == 0 {
        return f.eval_diagonal(&z);
    }
    let w = z.conj();
    // with the roles of the slots swapped the bar formula is identical
    let (x, y) = if bar { (w, z) } else { (z, w) };
    let mut acc = c64(0.0, 0.0);
    for (&(i, j), c) in f.terms() {
        let (a, b) = if bar { (j as usize, i as usize) } else { (i as usize, j as usize) };
        let k0 = n.saturating_sub(a);
        for k in k0..n {
            let coef = binomial_f64((n - 1) as u64, k as u64) * binomial_f64((a + k) as u64, n as u64);
            let coef = if k % 2 == 1 { -coef } else { coef };
            acc += c * coef * x.powu((a + k - n) as u32) * y.powu((b + k) as u32);
        }
    }
    acc * (1.0 - z.norm_sqr())
}

fn factorial(n: usize) -> f64 {
    (1..=n).map(|k| k as f64).product()
}

/// `Dⁿf(z)`; `n = 0` returns `f(z)`.
///
/// Polynomials go through the exact recursion, `g∘p`, `g∘q` through the closed
/// forms, pullbacks through the definition.
pub fn pm_derivative(f: &DiskFunction, n: usize, z: C64) -> Result<C64> {
    check_disk(z)?;
    match f {
        DiskFunction::Poly(p) => Ok(p.pm_derivative(n as u32).eval_diagonal(&z)),
        DiskFunction::ComposedP(g) => Ok(pm_closed_form_p(g, n, z)?.0),
        DiskFunction::ComposedQ(g) => Ok(pm_closed_form_q(g, n, z)?.0),
        DiskFunction::MoebiusPullback { .. } => Ok(pm_derivative_jet(f, n, z, n + 1 + JET_GUARD)?.0),
    }
}

/// `D̄ⁿf(z) = conj(Dⁿ(conj f)(z))`.
pub fn pm_bar_derivative(f: &DiskFunction, n: usize, z: C64) -> Result<C64> {
    check_disk(z)?;
    match f {
        DiskFunction::Poly(p) => Ok(p.pm_bar_derivative(n as u32).eval_diagonal(&z)),
        DiskFunction::ComposedP(g) => Ok(pm_closed_form_p(g, n, z)?.1),
        DiskFunction::ComposedQ(g) => Ok(pm_closed_form_q(g, n, z)?.1),
        DiskFunction::MoebiusPullback { .. } => Ok(pm_derivative_jet(f, n, z, n + 1 + JET_GUARD)?.1),
    }
}

/// Definitional oracle: `(Dⁿf(z), D̄ⁿf(z))` from Taylor jets with `terms` coefficients.
pub fn pm_derivative_jet(f: &DiskFunction, n: usize, z: C64, terms: usize) -> Result<(C64, C64)> {
    if terms < n + 1 {
        return Err(Error::Invalid(format!(
            "jet with {terms} coefficients cannot resolve derivative order {n}"
        )));
    }
    let jets = f.normalized_jets(z, terms, PmRoute::Jet)?;
    let fact = factorial(n);
    Ok((jets.holo[n] * fact, jets.anti[n] * fact))
}

/// `(Dⁿ(g∘p)(z), D̄ⁿ(g∘p)(z))`:
/// `((1 − z̄²)/(1 − |z|²))ⁿ g⁽ⁿ⁾(p)` and `(−1)ⁿ((1 − z²)/(1 − |z|²))ⁿ g⁽ⁿ⁾(p)`.
pub fn pm_closed_form_p(g: &EntireFn, n: usize, z: C64) -> Result<(C64, C64)> {
    check_disk(z)?;
    let jets = DiskFunction::ComposedP(g.clone()).normalized_jets(z, n + 1, PmRoute::Closed)?;
    let fact = factorial(n);
    Ok((jets.holo[n] * fact, jets.anti[n] * fact))
}

/// `(Dⁿ(g∘q)(z), D̄ⁿ(g∘q)(z))`:
/// `(−1)ⁿ (1 − z̄)^{2n}/(1 − |z|²)ⁿ g⁽ⁿ⁾(q)` and `(−1)ⁿ (1 − z)^{2n}/(1 − |z|²)ⁿ g⁽ⁿ⁾(q)`.
pub fn pm_closed_form_q(g: &EntireFn, n: usize, z: C64) -> Result<(C64, C64)> {
    check_disk(z)?;
    let jets = DiskFunction::ComposedQ(g.clone()).normalized_jets(z, n + 1, PmRoute::Closed)?;
    let fact = factorial(n);
    Ok((jets.holo[n] * fact, jets.anti[n] * fact))
}
