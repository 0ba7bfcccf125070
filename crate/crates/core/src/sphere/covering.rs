//! Universal coverings of the annulus `A_R = {1/R < |z| < R}` and the punctured
//! disk, in both the disk and half-plane models.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::scalar::{c64, C64};

/// Principal logarithm; arguments on the closed negative real axis are rejected.
pub fn principal_log(z: C64) -> Result<C64> {
    if z.im == 0.0 && z.re <= 0.0 {
        return Err(Error::BranchCut(format!("{}{:+}i", z.re, z.im)));
    }
    if !z.re.is_finite() || !z.im.is_finite() {
        return Err(Error::Invalid(format!("non-finite log argument {z}")));
    }
    Ok(z.ln())
}

fn check_disk(z: C64) -> Result<()> {
    if !(z.norm() < 1.0) {
        return Err(Error::outside(z, "the unit disk"));
    }
    Ok(())
}

fn check_modulus(r: f64) -> Result<()> {
    if !(r > 1.0) || !r.is_finite() {
        return Err(Error::Invalid(format!("annulus modulus R = {r} must exceed 1")));
    }
    Ok(())
}

/// `π_R(z) = exp((2i log R / π) · log((1+z)/(1−z)))`, a covering `D → A_R`.
pub fn covering_disk_to_annulus(r: f64, z: C64) -> Result<C64> {
    check_modulus(r)?;
    check_disk(z)?;
    let one = c64(1.0, 0.0);
    let l = principal_log((one + z) / (one - z))?;
    Ok((c64(0.0, 2.0 * r.ln() / PI) * l).exp())
}

/// `π₀(z) = exp(−(1+z)/(1−z))`, a covering `D → D*`.
pub fn covering_disk_to_punctured(z: C64) -> Result<C64> {
    check_disk(z)?;
    let one = c64(1.0, 0.0);
    Ok((-(one + z) / (one - z)).exp())
}

/// Half-plane covering of `A_R`: `exp((2i log R / π) · log(z/i))`, periodic under `z -> c z`
/// with `log c = π² / log R`.
pub fn covering_half_to_annulus(r: f64, z: C64) -> Result<C64> {
    check_modulus(r)?;
    if !(z.im > 0.0) {
        return Err(Error::outside(z, "the upper half-plane"));
    }
    let l = principal_log(z / c64(0.0, 1.0))?;
    Ok((c64(0.0, 2.0 * r.ln() / PI) * l).exp())
}

/// Half-plane covering of `D*`: `exp(2πi z)`, periodic under `z -> z + 1`.
pub fn covering_half_to_punctured(z: C64) -> Result<C64> {
    if !(z.im > 0.0) {
        return Err(Error::outside(z, "the upper half-plane"));
    }
    Ok((c64(0.0, 2.0 * PI) * z).exp())
}

/// Deck-group scaling factor `c = exp(π² / log R)` of the half-plane covering of `A_R`.
pub fn annulus_deck_factor(r: f64) -> f64 {
    (PI * PI / r.ln()).exp()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn origin_images() {
        assert!((covering_disk_to_annulus(2.0, c64(0.0, 0.0)).unwrap() - 1.0).norm() < 1e-15);
        let p = covering_disk_to_punctured(c64(0.0, 0.0)).unwrap();
        assert!((p - (-1.0f64).exp()).norm() < 1e-15);
        assert!((covering_half_to_annulus(2.0, c64(0.0, 1.0)).unwrap() - 1.0).norm() < 1e-15);
    }

    #[test]
    fn rejects_points_off_the_model() {
        assert!(covering_disk_to_annulus(2.0, c64(1.0, 0.0)).is_err());
        assert!(covering_disk_to_annulus(1.0, c64(0.0, 0.0)).is_err());
        assert!(covering_disk_to_punctured(c64(0.0, -1.5)).is_err());
        assert!(covering_half_to_annulus(2.0, c64(1.0, 0.0)).is_err());
        assert!(matches!(principal_log(c64(-2.0, 0.0)), Err(Error::BranchCut(_))));
    }

    #[test]
    fn deck_relation_on_a_few_points() {
        let r = 2.0;
        let c = annulus_deck_factor(r);
        for z in [c64(0.1, 0.5), c64(-3.0, 2.0), c64(0.0, 7.0)] {
            let a = covering_half_to_annulus(r, z).unwrap();
            let b = covering_half_to_annulus(r, z * c).unwrap();
            assert!((a - b).norm() < 1e-10 * a.norm().max(1.0));
        }
    }

    #[test]
    fn disk_covering_factors_through_cayley() {
        let z = c64(0.3, -0.4);
        let t = c64(0.0, 1.0) * (c64(1.0, 0.0) + z) / (c64(1.0, 0.0) - z);
        let a = covering_disk_to_annulus(3.0, z).unwrap();
        let b = covering_half_to_annulus(3.0, t).unwrap();
        assert!((a - b).norm() < 1e-13);
        let p = covering_disk_to_punctured(z).unwrap();
        let q = covering_half_to_punctured(t / (2.0 * PI)).unwrap();
        assert!((p - q).norm() < 1e-13);
    }
}
