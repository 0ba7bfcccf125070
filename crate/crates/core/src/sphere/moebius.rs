use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::scalar::{c64, Scalar, C64};
use crate::sphere::point::SpherePoint;

/// Möbius transformation `z -> (a z + b) / (c z + d)` acting on the Riemann sphere.
#[derive(Clone, Debug, PartialEq)]
pub struct MoebiusMap<S> {
    pub a: S,
    pub b: S,
    pub c: S,
    pub d: S,
}

impl<S: Scalar> MoebiusMap<S> {
    pub fn new(a: S, b: S, c: S, d: S) -> Result<Self> {
        let m = MoebiusMap { a, b, c, d };
        if m.det().is_zero() {
            return Err(Error::SingularMoebius);
        }
        Ok(m)
    }

    pub fn identity() -> Self {
        MoebiusMap {
            a: S::one(),
            b: S::zero(),
            c: S::zero(),
            d: S::one(),
        }
    }

    /// `z -> k z`.
    pub fn scaling(k: S) -> Result<Self> {
        Self::new(k, S::zero(), S::zero(), S::one())
    }

    /// `z -> z + t`.
    pub fn translation(t: S) -> Self {
        MoebiusMap {
            a: S::one(),
            b: t,
            c: S::zero(),
            d: S::one(),
        }
    }

    /// The Cayley map `T(z) = i (1 + z) / (1 - z)` from the unit disk onto the upper half-plane.
    pub fn cayley() -> Self {
        MoebiusMap {
            a: S::i(),
            b: S::i(),
            c: -S::one(),
            d: S::one(),
        }
    }

    pub fn det(&self) -> S {
        self.a.clone() * self.d.clone() - self.b.clone() * self.c.clone()
    }

    /// Projective action `(u, v) -> (a u + b v, c u + d v)`.
    pub fn apply(&self, p: &SpherePoint<S>) -> SpherePoint<S> {
        let u = self.a.clone() * p.u().clone() + self.b.clone() * p.v().clone();
        let v = self.c.clone() * p.u().clone() + self.d.clone() * p.v().clone();
        // invertible matrices never send a nonzero pair to (0, 0)
        SpherePoint::new(u, v).expect("invertible Möbius map")
    }

    /// Action on a finite point; `None` when the image is infinity.
    pub fn apply_finite(&self, z: &S) -> Option<S> {
        self.apply(&SpherePoint::finite(z.clone())).value()
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Self {
        MoebiusMap {
            a: self.a.clone() * other.a.clone() + self.b.clone() * other.c.clone(),
            b: self.a.clone() * other.b.clone() + self.b.clone() * other.d.clone(),
            c: self.c.clone() * other.a.clone() + self.d.clone() * other.c.clone(),
            d: self.c.clone() * other.b.clone() + self.d.clone() * other.d.clone(),
        }
    }

    pub fn inverse(&self) -> Self {
        MoebiusMap {
            a: self.d.clone(),
            b: -self.b.clone(),
            c: -self.c.clone(),
            d: self.a.clone(),
        }
    }

    /// Conjugation `h ∘ self ∘ h⁻¹`.
    pub fn conjugated_by(&self, h: &Self) -> Self {
        h.compose(self).compose(&h.inverse())
    }

    /// The map `w -> 1 / self(1 / w)`, written again as a Möbius matrix.
    pub fn reflected(&self) -> Self {
        MoebiusMap {
            a: self.d.clone(),
            b: self.c.clone(),
            c: self.b.clone(),
            d: self.a.clone(),
        }
    }

    /// Real coefficients up to a common complex factor and positive determinant:
    /// the automorphisms of the upper half-plane.
    pub fn is_aut_half_plane(&self, tol: f64) -> bool {
        // pick the entry of largest modulus to fix the common phase
        let entries = [&self.a, &self.b, &self.c, &self.d];
        let pivot = entries
            .iter()
            .max_by(|x, y| {
                x.to_c64()
                    .norm()
                    .partial_cmp(&y.to_c64().norm())
                    .unwrap_or(std::cmp::Ordering::Equal)
            })
            .map(|e| (*e).clone())
            .unwrap_or_else(S::one);
        let normalized: Vec<S> = entries
            .iter()
            .map(|e| (*e).clone() * pivot.conj())
            .collect();
        let scale = pivot.to_c64().norm_sqr().max(1e-300);
        let real = normalized
            .iter()
            .all(|e| e.im_part().near_zero(tol * scale));
        if !real {
            return false;
        }
        let det = normalized[0].clone() * normalized[3].clone()
            - normalized[1].clone() * normalized[2].clone();
        det.real_sign(tol * scale * scale) == Some(std::cmp::Ordering::Greater)
    }

    /// Preserves the unit circle and maps `0` into the open disk.
    ///
    /// Three circle points `1, -1, i` determine the image circle, so checking
    /// them and the centre is exact for rational coefficients.
    pub fn is_aut_disk(&self, tol: f64) -> bool {
        let on_circle = [S::one(), -S::one(), S::i()].into_iter().all(|z| {
            match self.apply_finite(&z) {
                Some(w) => (w.abs_sq() - S::one()).near_zero(tol),
                None => false,
            }
        });
        if !on_circle {
            return false;
        }
        match self.apply_finite(&S::zero()) {
            Some(w) => {
                (S::one() - w.abs_sq()).real_sign(tol) == Some(std::cmp::Ordering::Greater)
            }
            None => false,
        }
    }

    pub fn to_c64(&self) -> MoebiusMap<C64> {
        MoebiusMap {
            a: self.a.to_c64(),
            b: self.b.to_c64(),
            c: self.c.to_c64(),
            d: self.d.to_c64(),
        }
    }
}

impl MoebiusMap<C64> {
    /// `z -> e^{iθ} z`.
    pub fn rotation(theta: f64) -> Self {
        MoebiusMap {
            a: C64::from_polar(1.0, theta),
            b: c64(0.0, 0.0),
            c: c64(0.0, 0.0),
            d: c64(1.0, 0.0),
        }
    }

    /// Trace-normalized classification of the map as an isometry of `H` or `D`.
    pub fn classify(&self) -> MoebiusKind {
        let det = self.det();
        let s = det.sqrt();
        let tr = (self.a + self.d) / s;
        let tr2 = tr * tr;
        if (tr2 - c64(4.0, 0.0)).norm() < 1e-10 {
            if (self.b.norm() + self.c.norm()) < 1e-14 && (self.a - self.d).norm() < 1e-14 {
                MoebiusKind::Identity
            } else {
                MoebiusKind::Parabolic
            }
        } else if tr2.im.abs() < 1e-10 && tr2.re > 4.0 {
            MoebiusKind::Hyperbolic
        } else if tr2.im.abs() < 1e-10 && tr2.re < 4.0 && tr2.re >= 0.0 {
            MoebiusKind::Elliptic
        } else {
            MoebiusKind::Loxodromic
        }
    }

    /// Fixed points on the sphere (one or two).
    pub fn fixed_points(&self) -> Vec<SpherePoint<C64>> {
        let (a, b, c, d) = (self.a, self.b, self.c, self.d);
        if c.norm() < 1e-15 {
            // z = (a z + b)/d: finite fixed point unless a = d
            let mut out = vec![SpherePoint::infinity()];
            if (a - d).norm() > 1e-15 {
                out.push(SpherePoint::finite(b / (d - a)));
            }
            return out;
        }
        // c z^2 + (d - a) z - b = 0
        let disc = ((d - a) * (d - a) + 4.0 * b * c).sqrt();
        let z1 = (a - d + disc) / (2.0 * c);
        let z2 = (a - d - disc) / (2.0 * c);
        if (z1 - z2).norm() < 1e-12 {
            vec![SpherePoint::finite(z1)]
        } else {
            vec![SpherePoint::finite(z1), SpherePoint::finite(z2)]
        }
    }

    /// Complex derivative at a finite point.
    pub fn derivative_at(&self, z: C64) -> C64 {
        let den = self.c * z + self.d;
        self.det() / (den * den)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MoebiusKind {
    Identity,
    Parabolic,
    Hyperbolic,
    Elliptic,
    Loxodromic,
}

/// An automorphism of the unit disk.
#[derive(Clone, Debug, PartialEq)]
pub struct AutDisk<S>(MoebiusMap<S>);

impl<S: Scalar> AutDisk<S> {
    pub fn new(m: MoebiusMap<S>) -> Result<Self> {
        if m.det().is_zero() {
            return Err(Error::SingularMoebius);
        }
        if !m.is_aut_disk(1e-10) {
            return Err(Error::NotAutomorphism("the unit disk"));
        }
        Ok(AutDisk(m))
    }

    /// `z -> λ (z - α) / (1 - conj(α) z)` for a unimodular `λ` and `|α| < 1`.
    pub fn from_parts(lambda: S, alpha: S) -> Result<Self> {
        let m = MoebiusMap::new(
            lambda.clone(),
            -(lambda * alpha.clone()),
            -alpha.conj(),
            S::one(),
        )?;
        Self::new(m)
    }

    pub fn map(&self) -> &MoebiusMap<S> {
        &self.0
    }

    pub fn identity() -> Self {
        AutDisk(MoebiusMap::identity())
    }
}

impl AutDisk<C64> {
    pub fn from_angle(theta: f64, alpha: C64) -> Result<Self> {
        Self::from_parts(C64::from_polar(1.0, theta), alpha)
    }

    pub fn rotation(theta: f64) -> Self {
        AutDisk(MoebiusMap::rotation(theta))
    }

    pub fn eval(&self, z: C64) -> C64 {
        let m = &self.0;
        (m.a * z + m.b) / (m.c * z + m.d)
    }
}

/// An automorphism of the upper half-plane.
#[derive(Clone, Debug, PartialEq)]
pub struct AutHalfPlane<S>(MoebiusMap<S>);

impl<S: Scalar> AutHalfPlane<S> {
    pub fn new(m: MoebiusMap<S>) -> Result<Self> {
        if m.det().is_zero() {
            return Err(Error::SingularMoebius);
        }
        if !m.is_aut_half_plane(1e-12) {
            return Err(Error::NotAutomorphism("the upper half-plane"));
        }
        Ok(AutHalfPlane(m))
    }

    pub fn map(&self) -> &MoebiusMap<S> {
        &self.0
    }
}

/// Kinds of cyclic deck groups used for doubly connected surfaces and the
/// elliptic comparison case.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum DeckKind {
    /// `z -> c z` on `H`, `c > 1`.
    HyperbolicScaling { c: f64 },
    /// `z -> z + 1` on `H`.
    ParabolicTranslation,
    /// `z -> e^{2πi/N} z` on `D`, `N >= 2`.
    EllipticRotation { n: u32 },
}

#[derive(Clone, Debug, PartialEq)]
pub struct DeckGroup {
    kind: DeckKind,
    generator: MoebiusMap<C64>,
}

impl DeckGroup {
    pub fn new(kind: DeckKind) -> Result<Self> {
        let generator = match kind {
            DeckKind::HyperbolicScaling { c } => {
                if !(c > 1.0) || !c.is_finite() {
                    return Err(Error::Invalid(format!("scaling factor {c} must exceed 1")));
                }
                MoebiusMap::scaling(c64(c, 0.0))?
            }
            DeckKind::ParabolicTranslation => MoebiusMap::translation(c64(1.0, 0.0)),
            DeckKind::EllipticRotation { n } => {
                if n < 2 {
                    return Err(Error::Invalid(format!("rotation order {n} must be at least 2")));
                }
                MoebiusMap::rotation(2.0 * PI / n as f64)
            }
        };
        Ok(DeckGroup { kind, generator })
    }

    /// Deck group of the half-plane covering of `A_R`: `log c = π² / log R`.
    pub fn for_annulus(r: f64) -> Result<Self> {
        if !(r > 1.0) {
            return Err(Error::Invalid(format!("annulus modulus R = {r} must exceed 1")));
        }
        Self::new(DeckKind::HyperbolicScaling {
            c: (PI * PI / r.ln()).exp(),
        })
    }

    pub fn kind(&self) -> DeckKind {
        self.kind
    }

    pub fn generator(&self) -> &MoebiusMap<C64> {
        &self.generator
    }

    /// `generator^k` for any integer `k`.
    pub fn element(&self, k: i32) -> MoebiusMap<C64> {
        let base = if k < 0 {
            self.generator.inverse()
        } else {
            self.generator.clone()
        };
        let mut acc = MoebiusMap::identity();
        for _ in 0..k.unsigned_abs() {
            acc = acc.compose(&base);
        }
        acc
    }
}
