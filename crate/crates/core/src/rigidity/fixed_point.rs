use std::f64::consts::PI;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::scalar::{c64, C64};
use crate::sphere::{GPoint, MoebiusKind, MoebiusMap, SpherePoint};
use crate::surface::gamma_hat_invariant;

use super::invariance::g_samples;

/// Radius of the differentiation circle.
pub const CIRCLE_RADIUS: f64 = 1e-2;

/// Derivatives of `z ↦ F(z, w₀)` at the fixed point `z₀`, for one ordering of
/// the two fixed points.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FixedPointLeg {
    pub w0: String,
    pub z0: String,
    /// `|g^{(j)}(z₀)|` for `j = 1..=k`, in the local chart at `z₀`
    /// (`z − z₀`, or `1/z` when `z₀ = ∞`).
    pub derivatives: Vec<f64>,
    /// Rounding floor of each entry of `derivatives`: `ε · max|g| · j! / r^j`.
    pub noise: Vec<f64>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FixedPointDemo {
    pub invariance_residual: f64,
    pub legs: Vec<FixedPointLeg>,
}

impl FixedPointDemo {
    pub fn max_derivative(&self) -> f64 {
        self.legs
            .iter()
            .flat_map(|l| l.derivatives.iter().copied())
            .fold(0.0, f64::max)
    }

    /// Largest ratio of a derivative magnitude to its rounding floor.
    pub fn max_noise_ratio(&self) -> f64 {
        self.legs
            .iter()
            .flat_map(|l| l.derivatives.iter().zip(&l.noise).map(|(d, n)| d / n))
            .fold(0.0, f64::max)
    }
}

fn circle_point(z0: &SpherePoint<C64>, u: C64) -> SpherePoint<C64> {
    match z0.value() {
        Some(z) => SpherePoint::finite(z + u),
        None => SpherePoint::new(c64(1.0, 0.0), u).expect("u ≠ 0"),
    }
}

/// Magnitudes of `g⁽ʲ⁾(0)`, `j = 1..=k`, from samples on `|u| = r` with a
/// degree-`k` discrete Fourier fit, together with their rounding floors.
fn circle_derivatives<G: Fn(C64) -> Result<C64>>(g: G, k: usize, r: f64) -> Result<(Vec<f64>, Vec<f64>)> {
    let m = (4 * (k + 1)).max(32);
    let vals: Vec<C64> = (0..m)
        .map(|j| g(C64::from_polar(r, 2.0 * PI * j as f64 / m as f64)))
        .collect::<Result<_>>()?;
    let size = vals.iter().fold(f64::MIN_POSITIVE, |a, v| a.max(v.norm()));
    let mut out = Vec::with_capacity(k);
    let mut noise = Vec::with_capacity(k);
    let mut fact = 1.0;
    for j in 1..=k {
        fact *= j as f64;
        let a: C64 = vals
            .iter()
            .enumerate()
            .map(|(i, v)| (v - vals[0]) * C64::from_polar(1.0, -2.0 * PI * (i * j) as f64 / m as f64))
            .sum::<C64>()
            / m as f64;
        out.push(fact * a.norm() / r.powi(j as i32));
        noise.push(4.0 * f64::EPSILON * size * fact / r.powi(j as i32));
    }
    Ok((out, noise))
}

/// For a hyperbolic `γ` and a `γ̂`-invariant `F`, the derivatives of `F(·, w₀)`
/// at the other fixed point `z₀` up to order `k`, for both orderings of the
/// fixed points. Non-invariant `F` is refused with its invariance residual.
pub fn hyperbolic_fixed_point_demo<F>(gamma: &MoebiusMap<C64>, f: F, k: usize) -> Result<FixedPointDemo>
where
    F: Fn(&GPoint<C64>) -> Result<C64>,
{
    if gamma.classify() != MoebiusKind::Hyperbolic {
        return Err(Error::Invalid(format!("{:?} map given where a hyperbolic one is required", gamma.classify())));
    }
    let samples = g_samples(0x5eed, 32);
    let report = gamma_hat_invariant(&f, gamma, &samples, f64::INFINITY);
    if let Some((_, msg)) = report.failures.first() {
        return Err(Error::Invalid(format!("F cannot be evaluated on the invariance samples: {msg}")));
    }
    let scale = samples
        .iter()
        .filter_map(|p| f(p).ok())
        .fold(1.0f64, |m, v| m.max(v.norm()));
    if report.max_residual > 1e-8 * scale {
        return Err(Error::NotInvariant {
            residual: report.max_residual,
        });
    }
    let fp = gamma.fixed_points();
    let mut legs = Vec::with_capacity(2);
    for (w0, z0) in [(&fp[0], &fp[1]), (&fp[1], &fp[0])] {
        let (derivatives, noise) = circle_derivatives(
            |u| {
                let p = GPoint::new(circle_point(z0, u), w0.clone())?;
                f(&p)
            },
            k,
            CIRCLE_RADIUS,
        )?;
        legs.push(FixedPointLeg {
            w0: w0.to_string(),
            z0: z0.to_string(),
            derivatives,
            noise,
        });
    }
    Ok(FixedPointDemo {
        invariance_residual: report.max_residual,
        legs,
    })
}
