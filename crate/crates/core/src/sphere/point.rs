use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::{Scalar, C64};

/// Relative tolerance used for projective comparisons in floating point.
pub const PROJECTIVE_TOL: f64 = 1e-12;

/// A point of the Riemann sphere stored as a projective pair `(u, v)`.
///
/// The represented value is `u / v`; `v = 0` is the point at infinity.
#[derive(Clone, Debug)]
pub struct SpherePoint<S> {
    u: S,
    v: S,
}

impl<S: Scalar> SpherePoint<S> {
    pub fn new(u: S, v: S) -> Result<Self> {
        if u.is_zero() && v.is_zero() {
            return Err(Error::DegeneratePoint);
        }
        Ok(SpherePoint { u, v })
    }

    pub fn finite(z: S) -> Self {
        SpherePoint { u: z, v: S::one() }
    }

    pub fn infinity() -> Self {
        SpherePoint {
            u: S::one(),
            v: S::zero(),
        }
    }

    pub fn u(&self) -> &S {
        &self.u
    }

    pub fn v(&self) -> &S {
        &self.v
    }

    pub fn is_infinite(&self) -> bool {
        self.v.is_zero()
    }

    /// Affine value, `None` at infinity.
    pub fn value(&self) -> Option<S> {
        if self.is_infinite() {
            None
        } else {
            Some(self.u.clone() / self.v.clone())
        }
    }

    /// `1/p`, i.e. the projective swap `(u, v) -> (v, u)`.
    pub fn reciprocal(&self) -> Self {
        SpherePoint {
            u: self.v.clone(),
            v: self.u.clone(),
        }
    }

    pub fn conj(&self) -> Self {
        SpherePoint {
            u: self.u.conj(),
            v: self.v.conj(),
        }
    }

    /// Projective equality `u1 v2 = u2 v1`; exact for rational scalars, relative
    /// tolerance [`PROJECTIVE_TOL`] for floats.
    pub fn proj_eq(&self, other: &Self) -> bool {
        let cross = self.u.clone() * other.v.clone() - other.u.clone() * self.v.clone();
        if S::EXACT {
            return cross.is_zero();
        }
        let scale = (self.u.to_c64().norm() + self.v.to_c64().norm())
            * (other.u.to_c64().norm() + other.v.to_c64().norm());
        cross.near_zero(PROJECTIVE_TOL * scale)
    }

    pub fn to_c64(&self) -> SpherePoint<C64> {
        SpherePoint {
            u: self.u.to_c64(),
            v: self.v.to_c64(),
        }
    }
}

impl SpherePoint<C64> {
    /// Scale the pair so the larger component has modulus one.
    pub fn normalized(&self) -> Self {
        let m = self.u.norm().max(self.v.norm());
        SpherePoint {
            u: self.u / m,
            v: self.v / m,
        }
    }

    /// Chordal distance on the sphere, useful for comparing points near infinity.
    pub fn chordal_distance(&self, other: &Self) -> f64 {
        let cross = (self.u * other.v - other.u * self.v).norm();
        let n1 = (self.u.norm_sqr() + self.v.norm_sqr()).sqrt();
        let n2 = (other.u.norm_sqr() + other.v.norm_sqr()).sqrt();
        cross / (n1 * n2)
    }
}

impl<S: Scalar> PartialEq for SpherePoint<S> {
    fn eq(&self, other: &Self) -> bool {
        self.proj_eq(other)
    }
}

impl<S: Scalar> fmt::Display for SpherePoint<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.value() {
            None => write!(f, "∞"),
            Some(z) => {
                let z = z.to_c64();
                write!(f, "{}{:+}i", z.re, z.im)
            }
        }
    }
}
