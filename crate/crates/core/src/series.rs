//! Taylor coefficients of functions of a Möbius argument.
//!
//! The definitional Peschl–Minda derivative needs the Taylor expansion in `u` of
//! `F(M(u), w₀)` where `M` is a Möbius map (the disk automorphism `T_z`, possibly
//! composed with further automorphisms). Writing `M(u) = (αu + β)/(γu + δ)`, a
//! polynomial in `M(u)` is a polynomial in `u` divided by `(γu + δ)^D`, and an
//! exponential satisfies a three-term recurrence, so every expansion below costs
//! `O(order · degree)`.

use crate::error::{Error, Result};
use crate::function::{EntireFn, Poly};
use crate::scalar::{Scalar, C64};
use crate::sphere::MoebiusMap;

fn check_finite_at_zero<S: Scalar>(m: &MoebiusMap<S>) -> Result<()> {
    if m.d.is_zero() {
        return Err(Error::InfiniteCoordinate("Möbius argument has a pole at u = 0"));
    }
    Ok(())
}

/// Truncated product of a polynomial with a series.
fn mul_poly_series<S: Scalar>(p: &Poly<S>, s: &[S], order: usize) -> Vec<S> {
    let mut out = vec![S::zero(); order + 1];
    for (i, a) in p.coeffs().iter().enumerate() {
        if a.is_zero() || i > order {
            continue;
        }
        for (j, b) in s.iter().enumerate().take(order + 1 - i) {
            out[i + j] = out[i + j].clone() + a.clone() * b.clone();
        }
    }
    out
}

/// Coefficients of `(γu + δ)^{-d}` through `u^order`.
pub fn inverse_power_series<S: Scalar>(gamma: &S, delta: &S, d: u32, order: usize) -> Vec<S> {
    let mut out = Vec::with_capacity(order + 1);
    let mut s = S::one() / delta.pow(d);
    let ratio = -(gamma.clone() / delta.clone());
    for k in 0..=order {
        out.push(s.clone());
        // s_{k+1} = s_k · (d + k)/(k + 1) · (−γ/δ)
        s = s * S::from_i64((d as usize + k) as i64) / S::from_i64(k as i64 + 1) * ratio.clone();
    }
    out
}

/// Coefficients of `M(u)` itself.
pub fn moebius_series<S: Scalar>(m: &MoebiusMap<S>, order: usize) -> Result<Vec<S>> {
    poly_of_moebius(&Poly::identity(), m, order)
}

/// Coefficients of `P(M(u))` through `u^order`.
pub fn poly_of_moebius<S: Scalar>(p: &Poly<S>, m: &MoebiusMap<S>, order: usize) -> Result<Vec<S>> {
    check_finite_at_zero(m)?;
    let d = match p.degree() {
        None => return Ok(vec![S::zero(); order + 1]),
        Some(d) => d as u32,
    };
    let num = Poly::new(vec![m.b.clone(), m.a.clone()]);
    let den = Poly::new(vec![m.d.clone(), m.c.clone()]);
    // Q(u) = Σ_a c_a (αu+β)^a (γu+δ)^{D-a}
    let mut q = Poly::zero();
    let mut num_pow = Poly::constant(S::one());
    for (a, c) in p.coeffs().iter().enumerate() {
        if !c.is_zero() {
            let term = &(&num_pow * &den.pow(d - a as u32)) * &Poly::constant(c.clone());
            q = &q + &term;
        }
        num_pow = &num_pow * &num;
    }
    let inv = inverse_power_series(&m.c, &m.d, d, order);
    Ok(mul_poly_series(&q, &inv, order))
}

/// Coefficients of `κ · exp(s · M(u))`.
///
/// With `K = αδ − βγ` the function `y` solves `(γu + δ)² y' = s K y`, giving
/// `δ²(k+1) y_{k+1} = (sK − 2γδk) y_k − γ²(k−1) y_{k−1}`.
pub fn exp_of_moebius(kappa: C64, s: C64, m: &MoebiusMap<C64>, order: usize) -> Result<Vec<C64>> {
    check_finite_at_zero(m)?;
    let (g, d) = (m.c, m.d);
    let k_det = m.det();
    let mut out = Vec::with_capacity(order + 1);
    out.push(kappa * (s * m.b / d).exp());
    let d2 = d * d;
    for k in 0..order {
        let kf = k as f64;
        let prev = if k >= 1 { out[k - 1] } else { C64::new(0.0, 0.0) };
        let next = ((s * k_det - 2.0 * g * d * kf) * out[k] - g * g * (kf - 1.0) * prev)
            / (d2 * (kf + 1.0));
        out.push(next);
    }
    Ok(out)
}

/// Coefficients of `g(M(u))` for a polynomial or exponential `g`.
pub fn entire_of_moebius(g: &EntireFn, m: &MoebiusMap<C64>, order: usize) -> Result<Vec<C64>> {
    match g {
        EntireFn::Polynomial(p) => poly_of_moebius(p, m, order),
        EntireFn::Exp { coeff, scale } => exp_of_moebius(*coeff, *scale, m, order),
        EntireFn::TruncatedSeries(_) => Err(Error::Invalid(
            "Taylor jets through a Möbius argument need a polynomial or exponential g".into(),
        )),
    }
}
