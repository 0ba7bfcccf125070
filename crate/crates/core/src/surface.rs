//! The radial algebras `A(A_R) = {g ∘ f_R}` and `A(D*) = {g ∘ f₀}`, their
//! transports, lifts to the disk, and invariance predicates on `G`.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::function::EntireFn;
use crate::peschl_minda::DiskFunction;
use crate::scalar::{c64, Scalar, C64};
use crate::sphere::{gamma_hat, GPoint, MoebiusMap};
use crate::star::{star_annulus, star_punctured, Hbar, StarConfig, StarResult};

fn check_modulus(r: f64) -> Result<()> {
    if !(r > 1.0) || !r.is_finite() {
        return Err(Error::Invalid(format!("annulus modulus R = {r} must exceed 1")));
    }
    Ok(())
}

/// `f_R(z) = −i tan(π/(2 log R) · log|z|)` on `1/R < |z| < R`.
pub fn chart_f_r(r: f64, z: C64) -> Result<C64> {
    check_modulus(r)?;
    let m = z.norm();
    if !(m > 1.0 / r && m < r) {
        return Err(Error::outside(z, "the annulus A_R"));
    }
    let arg = PI / (2.0 * r.ln()) * m.ln();
    Ok(c64(0.0, -arg.tan()))
}

/// `f₀(z) = −1/log|z|` on `0 < |z| < 1`.
pub fn chart_f_0(z: C64) -> Result<C64> {
    let m = z.norm();
    if !(m > 0.0 && m < 1.0) {
        return Err(Error::outside(z, "the punctured disk"));
    }
    Ok(c64(-1.0 / m.ln(), 0.0))
}

/// `g ∘ f_R` on the annulus `A_R`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AnnulusElement {
    #[serde(rename = "R")]
    r: f64,
    g: EntireFn,
}

impl AnnulusElement {
    pub fn new(r: f64, g: EntireFn) -> Result<Self> {
        check_modulus(r)?;
        Ok(AnnulusElement { r, g })
    }

    pub fn modulus(&self) -> f64 {
        self.r
    }

    pub fn g(&self) -> &EntireFn {
        &self.g
    }

    pub fn eval(&self, z: C64) -> Result<C64> {
        self.g.value(chart_f_r(self.r, z)?)
    }

    /// `(self ⋆ other)(z)` evaluated through the chart variable.
    pub fn star(&self, other: &Self, h: &Hbar<C64>, z: C64, cfg: &StarConfig) -> Result<StarResult> {
        if self.r != other.r {
            return Err(Error::Invalid(format!(
                "elements live on different annuli (R = {} and R = {})",
                self.r, other.r
            )));
        }
        star_annulus(&self.g, &other.g, h, chart_f_r(self.r, z)?, cfg)
    }
}

/// `g ∘ f₀` on the punctured disk.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PuncturedElement {
    g: EntireFn,
}

impl PuncturedElement {
    pub fn new(g: EntireFn) -> Self {
        PuncturedElement { g }
    }

    pub fn g(&self) -> &EntireFn {
        &self.g
    }

    pub fn eval(&self, z: C64) -> Result<C64> {
        self.g.value(chart_f_0(z)?)
    }

    pub fn star(&self, other: &Self, h: &Hbar<C64>, z: C64, cfg: &StarConfig) -> Result<StarResult> {
        star_punctured(&self.g, &other.g, h, chart_f_0(z)?, cfg)
    }
}

/// An element of one of the two radial algebras.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "surface", rename_all = "lowercase")]
pub enum SurfaceElement {
    Annulus(AnnulusElement),
    Punctured(PuncturedElement),
}

impl SurfaceElement {
    pub fn eval(&self, z: C64) -> Result<C64> {
        match self {
            SurfaceElement::Annulus(e) => e.eval(z),
            SurfaceElement::Punctured(e) => e.eval(z),
        }
    }

    pub fn g(&self) -> &EntireFn {
        match self {
            SurfaceElement::Annulus(e) => e.g(),
            SurfaceElement::Punctured(e) => e.g(),
        }
    }

    /// Inverse transport: recover `g` structurally.
    pub fn untransport(&self) -> EntireFn {
        self.g().clone()
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum SurfaceTarget {
    Annulus { r: f64 },
    Punctured,
}

/// `T_R(g) = g ∘ f_R` or `T₀(g) = g ∘ f₀`.
pub fn transport_t(g: EntireFn, target: SurfaceTarget) -> Result<SurfaceElement> {
    Ok(match target {
        SurfaceTarget::Annulus { r } => SurfaceElement::Annulus(AnnulusElement::new(r, g)?),
        SurfaceTarget::Punctured => SurfaceElement::Punctured(PuncturedElement::new(g)),
    })
}

/// `Ψ_{R',R}(h ∘ f_{R'}) = h ∘ f_R`.
pub fn iso_psi(e: &AnnulusElement, r: f64) -> Result<AnnulusElement> {
    AnnulusElement::new(r, e.g.clone())
}

/// The lift along the covering: `g ∘ f_R ↦ g ∘ p`, `g ∘ f₀ ↦ g ∘ q`.
pub fn lift_to_disk(e: &SurfaceElement) -> DiskFunction {
    match e {
        SurfaceElement::Annulus(a) => DiskFunction::ComposedP(a.g.clone()),
        SurfaceElement::Punctured(p) => DiskFunction::ComposedQ(p.g.clone()),
    }
}

/// Result of an invariance test `F ∘ γ̂ = F` over sample points.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct InvarianceReport {
    pub max_residual: f64,
    pub samples: usize,
    pub failures: Vec<(usize, String)>,
    pub pass: bool,
}

/// `max |F(γ̂P) − F(P)|` over the samples; evaluation failures are reported per sample.
pub fn gamma_hat_invariant<F>(f: F, gamma: &MoebiusMap<C64>, samples: &[GPoint<C64>], tol: f64) -> InvarianceReport
where
    F: Fn(&GPoint<C64>) -> Result<C64>,
{
    let mut max_residual: f64 = 0.0;
    let mut failures = Vec::new();
    for (k, p) in samples.iter().enumerate() {
        let moved = gamma_hat(gamma, p);
        match (f(p), f(&moved)) {
            (Ok(a), Ok(b)) => max_residual = max_residual.max((a - b).norm()),
            (Err(e), _) | (_, Err(e)) => failures.push((k, e.to_string())),
        }
    }
    InvarianceReport {
        max_residual,
        samples: samples.len(),
        pass: failures.is_empty() && max_residual <= tol,
        failures,
    }
}

fn cross<S: Scalar>(p: &GPoint<S>) -> S {
    p.z.u().clone() * p.w.v().clone() - p.w.u().clone() * p.z.v().clone()
}

/// `w/(z − w)` in projective coordinates, finite on all of `G`.
pub fn scaling_kernel_arg<S: Scalar>(p: &GPoint<S>) -> S {
    p.w.u().clone() * p.z.v().clone() / cross(p)
}

/// `1/(z − w)` in projective coordinates, finite on all of `G`.
pub fn translation_kernel_arg<S: Scalar>(p: &GPoint<S>) -> S {
    p.z.v().clone() * p.w.v().clone() / cross(p)
}

/// `F(z, w) = g(w/(z − w))`, invariant under `z ↦ cz`.
pub fn scaling_kernel(g: EntireFn) -> impl Fn(&GPoint<C64>) -> Result<C64> {
    move |p| g.value(scaling_kernel_arg(p))
}

/// `F(z, w) = g(1/(z − w))`, invariant under `z ↦ z + 1`.
pub fn translation_kernel(g: EntireFn) -> impl Fn(&GPoint<C64>) -> Result<C64> {
    move |p| g.value(translation_kernel_arg(p))
}
