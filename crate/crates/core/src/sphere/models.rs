//! The three models of the second configuration space: `Ω`, `G` and the
//! Danielewski surface `b² − 4ac = 1`.

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::sphere::moebius::{AutDisk, MoebiusMap};
use crate::sphere::point::SpherePoint;

/// A pair of distinct points of the sphere.
#[derive(Clone, Debug, PartialEq)]
pub struct GPoint<S: Scalar> {
    pub z: SpherePoint<S>,
    pub w: SpherePoint<S>,
}

impl<S: Scalar> GPoint<S> {
    pub fn new(z: SpherePoint<S>, w: SpherePoint<S>) -> Result<Self> {
        if z.proj_eq(&w) {
            return Err(Error::outside(format!("({z}, {w})"), "G (diagonal point)"));
        }
        Ok(GPoint { z, w })
    }

    pub fn finite(z: S, w: S) -> Result<Self> {
        Self::new(SpherePoint::finite(z), SpherePoint::finite(w))
    }

    /// Affine coordinates when both points are finite.
    pub fn values(&self) -> Option<(S, S)> {
        Some((self.z.value()?, self.w.value()?))
    }
}

/// A point of `Ω = Ĉ² ∖ ({zw = 1} ∪ {(0, ∞), (∞, 0)})`.
#[derive(Clone, Debug, PartialEq)]
pub struct OmegaPoint<S: Scalar> {
    pub z: SpherePoint<S>,
    pub w: SpherePoint<S>,
}

impl<S: Scalar> OmegaPoint<S> {
    pub fn new(z: SpherePoint<S>, w: SpherePoint<S>) -> Result<Self> {
        let (zu, zv, wu, wv) = (z.u(), z.v(), w.u(), w.v());
        // zw = 1 projectively: zu wu = zv wv
        let lhs = zu.clone() * wu.clone();
        let rhs = zv.clone() * wv.clone();
        let on_hyperbola = if S::EXACT {
            (lhs.clone() - rhs.clone()).is_zero()
        } else {
            let zs = z.to_c64().normalized();
            let ws = w.to_c64().normalized();
            (zs.u() * ws.u() - zs.v() * ws.v()).norm() <= 1e-12
        };
        if on_hyperbola {
            return Err(Error::outside(format!("({z}, {w})"), "Ω (zw = 1)"));
        }
        let zero_inf = (zu.is_zero() && wv.is_zero()) || (zv.is_zero() && wu.is_zero());
        if zero_inf {
            return Err(Error::outside(format!("({z}, {w})"), "Ω (excluded point)"));
        }
        Ok(OmegaPoint { z, w })
    }

    pub fn finite(z: S, w: S) -> Result<Self> {
        Self::new(SpherePoint::finite(z), SpherePoint::finite(w))
    }

    /// The diagonal point `(z, conj z)` carrying a disk point into `Ω`.
    pub fn diagonal(z: S) -> Result<Self> {
        let w = z.conj();
        Self::finite(z, w)
    }

    pub fn values(&self) -> Option<(S, S)> {
        Some((self.z.value()?, self.w.value()?))
    }
}

/// `γ̂(z, w) = (γ(z), γ(w))`.
pub fn gamma_hat<S: Scalar>(m: &MoebiusMap<S>, p: &GPoint<S>) -> GPoint<S> {
    GPoint {
        z: m.apply(&p.z),
        w: m.apply(&p.w),
    }
}

/// `T_φ(z, w) = (φ(z), 1/φ(1/w))`, the automorphism of `Ω` induced by `φ ∈ Aut(D)`.
pub fn t_gamma_omega<S: Scalar>(phi: &AutDisk<S>, p: &OmegaPoint<S>) -> OmegaPoint<S> {
    let m = phi.map();
    OmegaPoint {
        z: m.apply(&p.z),
        w: m.reflected().apply(&p.w),
    }
}

/// Checked variant of [`t_gamma_omega`] for maps not yet known to preserve the disk.
pub fn t_gamma_omega_checked<S: Scalar>(
    phi: &MoebiusMap<S>,
    p: &OmegaPoint<S>,
) -> Result<OmegaPoint<S>> {
    let phi = AutDisk::new(phi.clone())?;
    Ok(t_gamma_omega(&phi, p))
}

/// `Ψ(z, w) = (T(z), T(1/w))` with the Cayley map `T`.
pub fn psi_omega_to_g<S: Scalar>(p: &OmegaPoint<S>) -> GPoint<S> {
    let t = MoebiusMap::cayley();
    GPoint {
        z: t.apply(&p.z),
        w: t.apply(&p.w.reciprocal()),
    }
}

/// `Ψ⁻¹(Z, W) = (T⁻¹(Z), 1/T⁻¹(W))`.
pub fn psi_g_to_omega<S: Scalar>(p: &GPoint<S>) -> OmegaPoint<S> {
    let tinv = MoebiusMap::<S>::cayley().inverse();
    OmegaPoint {
        z: tinv.apply(&p.z),
        w: tinv.apply(&p.w).reciprocal(),
    }
}

/// `(z, w) -> (1/(z−w), (z+w)/(z−w), zw/(z−w))`, landing on `b² − 4ac = 1`.
pub fn danielewski_chart<S: Scalar>(p: &GPoint<S>) -> Result<(S, S, S)> {
    let (z, w) = p
        .values()
        .ok_or(Error::InfiniteCoordinate("the Danielewski chart needs finite z and w"))?;
    let d = z.clone() - w.clone();
    let a = S::one() / d.clone();
    let b = (z.clone() + w.clone()) * a.clone();
    let c = z * w * a.clone();
    Ok((a, b, c))
}
