//! Can a linear map `Ψ` with `Ψ(1) = 1` and `Ψ(f_R) = g ∘ f₀` intertwine the
//! annulus and punctured-disk products for every `ħ` at once?
//!
//! Both sides of `Ψ(f_R ⋆ f_R) = Ψ(f_R) ⋆ Ψ(f_R)` are finite factorial series
//! `Σ c_n(ħ) X_n` for polynomial `g`. The coefficients `X_n` are recovered by
//! fitting values at the sample set of `ħ` in the basis `c_n(ħ)`, and compared
//! order by order:
//!
//! * `n >= 2`: `w^{2n} (g⁽ⁿ⁾)²/n! = 0`, so `g'' = 0` and `g(t) = αt + β`;
//! * `n = 1`: `h − 1 = w² α²` with `h = Ψ(f_R²)` in the chart variable;
//! * `n = 0`: `h = (αw + β)²`.

use nalgebra::{DMatrix, DVector};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::function::EntireFn;
use crate::linalg::{condition_number, least_squares, nullspace_below};
use crate::scalar::{c64, pair, C64};
use crate::star::{star_annulus, star_punctured, Hbar, StarConfig};
use crate::surface::{chart_f_0, chart_f_r};

/// Tolerance of the order-by-order comparison.
pub const OBSTRUCTION_TOL: f64 = 1e-8;

/// Largest acceptable condition number of the `c_n(ħ)` fit matrix.
pub const FIT_CONDITION_LIMIT: f64 = 1e10;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    /// No nonconstant `g` satisfies all orders.
    Obstructed,
    /// Only constants were admitted as candidates, and they are consistent.
    ConstantOnly,
    /// A nonconstant solution exists within tolerance.
    Consistent,
    /// The fit could not decide.
    Inconclusive,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ObstructionReport {
    /// Best fit `g(t) = αt + β`.
    #[serde(with = "pair")]
    pub alpha: C64,
    #[serde(with = "pair")]
    pub beta: C64,
    /// Residual of the order-`n` comparison at the fitted `g`, `n = 0..`.
    pub residuals: Vec<f64>,
    pub verdict: Verdict,
    /// Residual of the annulus identity `X₁ = X₀ − 1`, `X_n = 0` for `n >= 2`.
    pub annulus_residual: f64,
    /// Dimension of the candidate space left by the orders `n >= 2`.
    pub first_order_dim: usize,
    /// Smallest singular value (relative) separating the rejected candidates,
    /// `None` when the orders `n >= 2` impose nothing.
    pub margin: Option<f64>,
    pub fit_condition: f64,
    pub samples: usize,
    pub note: String,
}

/// Fits `values[i] = Σ_n X_n c_n(ħ_i)`.
struct FactorialFit {
    basis: DMatrix<C64>,
    condition: f64,
}

impl FactorialFit {
    fn new(hs: &[Hbar<C64>], orders: usize) -> Result<Self> {
        let rows: Vec<Vec<C64>> = hs.iter().map(|h| h.coefficients(orders)).collect();
        let basis = DMatrix::from_fn(hs.len(), orders, |i, n| rows[i][n]);
        let condition = condition_number(&basis);
        if condition > FIT_CONDITION_LIMIT {
            return Err(Error::Conditioning(format!(
                "the ħ samples resolve {orders} factorial orders with condition number {condition:e}"
            )));
        }
        Ok(FactorialFit { basis, condition })
    }

    fn coefficients(&self, values: Vec<C64>) -> Result<Vec<C64>> {
        let ls = least_squares(&self.basis, &DVector::from_vec(values), 1e-14)?;
        Ok(ls.x.iter().copied().collect())
    }
}

fn check_hbars(hs: &[Hbar<C64>], orders: usize) -> Result<()> {
    if hs.len() < orders {
        return Err(Error::Invalid(format!(
            "{} values of ħ cannot resolve {orders} factorial orders",
            hs.len()
        )));
    }
    for (i, a) in hs.iter().enumerate() {
        for b in &hs[..i] {
            if (a.value() - b.value()).norm() < 1e-12 {
                return Err(Error::Invalid(format!("repeated ħ = {}", a.value())));
            }
        }
    }
    Ok(())
}

/// Chart values `w = f₀(z)` at `count` deterministic points with `0.5 <= w <= 2`.
fn punctured_chart_points(count: usize) -> Result<Vec<C64>> {
    (0..count)
        .map(|j| {
            let t = j as f64 / (count - 1).max(1) as f64;
            let w = 0.5 * 4f64.powf(t);
            chart_f_0(C64::from_polar((-1.0 / w).exp(), j as f64))
        })
        .collect()
}

/// Chart values `w = f_R(z)` at `count` deterministic points of `A_R`.
fn annulus_chart_points(r: f64, count: usize) -> Result<Vec<C64>> {
    (0..count)
        .map(|j| {
            let t = (j as f64 + 0.5) / count as f64;
            let m = r.powf(1.6 * t - 0.8);
            chart_f_r(r, C64::from_polar(m, 0.7 * j as f64))
        })
        .collect()
}

pub fn obstruction_check(r: f64, hs: &[Hbar<C64>], degree: u32) -> Result<ObstructionReport> {
    if !(r > 1.0) || !r.is_finite() {
        return Err(Error::Invalid(format!("annulus modulus R = {r} must exceed 1")));
    }
    let d = degree as usize;
    let orders = d.max(2) + 1;
    check_hbars(hs, orders)?;
    let fit = FactorialFit::new(hs, orders)?;
    let cfg = StarConfig::exact_finite();
    let count = 2 * (d + 1) + 4;

    let id = EntireFn::identity();
    let mut annulus_residual: f64 = 0.0;
    for w in annulus_chart_points(r, count)? {
        let values = hs
            .iter()
            .map(|h| star_annulus(&id, &id, h, w, &cfg).map(|s| s.value))
            .collect::<Result<Vec<_>>>()?;
        let x = fit.coefficients(values)?;
        let scale = 1.0 + x[0].norm();
        annulus_residual = annulus_residual.max((x[1] - x[0] + 1.0).norm() / scale);
        for xn in &x[2..] {
            annulus_residual = annulus_residual.max(xn.norm() / scale);
        }
    }

    // m[j][n] is the symmetric matrix of the order-n coefficient of t^k ⋆ t^l at w_j.
    let ws = punctured_chart_points(count)?;
    let monomials: Vec<EntireFn> = (0..=d).map(EntireFn::monomial).collect();
    let mut m: Vec<Vec<DMatrix<C64>>> = Vec::with_capacity(ws.len());
    for &w in &ws {
        let mut per_order = vec![DMatrix::zeros(d + 1, d + 1); orders];
        for k in 0..=d {
            for l in k..=d {
                let values = hs
                    .iter()
                    .map(|h| star_punctured(&monomials[k], &monomials[l], h, w, &cfg).map(|s| s.value))
                    .collect::<Result<Vec<_>>>()?;
                for (n, x) in fit.coefficients(values)?.into_iter().enumerate() {
                    per_order[n][(k, l)] = x;
                    per_order[n][(l, k)] = x;
                }
            }
        }
        m.push(per_order);
    }

    // Orders n >= 2: (g⁽ⁿ⁾(w))² = a^T M_n(w) a with M_n of rank one, so the
    // candidates form the common nullspace of the stacked M_n.
    let blocks: Vec<&DMatrix<C64>> = m.iter().flat_map(|per| per[2..].iter()).collect();
    let stacked = DMatrix::from_fn(blocks.len() * (d + 1), d + 1, |i, c| blocks[i / (d + 1)][(i % (d + 1), c)]);
    // Thresholds are relative to the order-0 data, since the stacked matrix
    // vanishes identically for affine candidates.
    let reference = m.iter().fold(f64::MIN_POSITIVE, |a, per| a.max(per[0].norm()));
    let ns = nullspace_below(&stacked, |_| OBSTRUCTION_TOL * reference);
    let rank = d + 1 - ns.dim();
    let margin = (rank > 0).then(|| ns.singular_values[rank - 1] / reference);
    let affine = d.min(1) + 1;
    let canonical = ns.dim() == affine && (0..affine).all(|k| ns.distance_to_unit(k) < OBSTRUCTION_TOL.sqrt());

    let mut report = ObstructionReport {
        alpha: c64(0.0, 0.0),
        beta: c64(0.0, 0.0),
        residuals: vec![0.0; orders],
        verdict: Verdict::Inconclusive,
        annulus_residual,
        first_order_dim: ns.dim(),
        margin,
        fit_condition: fit.condition,
        samples: ws.len(),
        note: String::new(),
    };
    if annulus_residual > OBSTRUCTION_TOL {
        report.note = format!("annulus product does not have the form X₀ + c₁(X₀ − 1) (residual {annulus_residual:e})");
        return Ok(report);
    }
    if !canonical {
        report.note = format!(
            "orders n >= 2 leave a {}-dimensional candidate space that is not the affine functions",
            ns.dim()
        );
        return Ok(report);
    }

    // Orders 0 and 1 combine to A₀ − A₁ = 1, linear in y = (β², αβ, α²).
    let unknowns = if affine == 1 { 1 } else { 3 };
    let mut a = DMatrix::zeros(ws.len(), unknowns);
    for (j, per) in m.iter().enumerate() {
        let b = &per[0] - &per[1];
        a[(j, 0)] = b[(0, 0)];
        if affine == 2 {
            a[(j, 1)] = 2.0 * b[(0, 1)];
            a[(j, 2)] = b[(1, 1)];
        }
    }
    let ones = DVector::from_element(ws.len(), c64(1.0, 0.0));
    let ls = least_squares(&a, &ones, OBSTRUCTION_TOL)?;
    let free = |k: usize| ls.free.weight(k) > OBSTRUCTION_TOL.sqrt();
    if ls.residual > OBSTRUCTION_TOL {
        report.verdict = Verdict::Obstructed;
        report.note = format!("orders 0 and 1 admit no affine g (residual {:e})", ls.residual);
        report.residuals[0] = ls.residual / 2.0;
        report.residuals[1] = ls.residual / 2.0;
        return Ok(report);
    }
    if free(0) {
        report.note = "β² is not determined by the samples".into();
        return Ok(report);
    }
    let y0 = ls.x[0];
    let (beta, alpha) = if affine == 1 {
        (y0.sqrt(), c64(0.0, 0.0))
    } else if y0.norm() > OBSTRUCTION_TOL {
        let beta = y0.sqrt();
        let alpha = if free(1) { c64(0.0, 0.0) } else { ls.x[1] / beta };
        if !free(2) && (alpha * alpha - ls.x[2]).norm() > OBSTRUCTION_TOL {
            report.verdict = Verdict::Obstructed;
            report.note = "orders 0 and 1 force α² inconsistently".into();
            return Ok(report);
        }
        (beta, alpha)
    } else if free(2) {
        report.verdict = Verdict::Consistent;
        report.note = "β = 0 leaves α unconstrained".into();
        return Ok(report);
    } else {
        (c64(0.0, 0.0), ls.x[2].sqrt())
    };
    report.alpha = alpha;
    report.beta = beta;

    let mut coeffs = DVector::zeros(d + 1);
    coeffs[0] = beta;
    if d >= 1 {
        coeffs[1] = alpha;
    }
    let quad = |mat: &DMatrix<C64>| (coeffs.transpose() * mat * &coeffs)[(0, 0)];
    for per in &m {
        let r01 = (quad(&per[0]) - quad(&per[1]) - 1.0).norm() / 2.0;
        report.residuals[0] = report.residuals[0].max(r01);
        report.residuals[1] = report.residuals[1].max(r01);
        for n in 2..orders {
            report.residuals[n] = report.residuals[n].max(quad(&per[n]).norm());
        }
    }
    let nonconstant = alpha.norm() > OBSTRUCTION_TOL;
    report.verdict = match (affine, nonconstant) {
        (1, _) => Verdict::ConstantOnly,
        (_, false) => Verdict::Obstructed,
        (_, true) => Verdict::Consistent,
    };
    report.note = match report.verdict {
        Verdict::ConstantOnly => "constant candidates only; they satisfy all orders with g = ±1".into(),
        Verdict::Obstructed => "every solution has α = 0 and β = ±1, so Ψ(f_R) would be constant".into(),
        _ => "a nonconstant affine g satisfies all orders".into(),
    };
    Ok(report)
}

/// The default `ħ` grid `{0.05, 0.05i, ±0.08i}`.
///
/// `−0.05 = −1/20` is a pole of the coefficient family and is not a valid `ħ`.
pub fn default_hbar_grid() -> Vec<Hbar<C64>> {
    [c64(0.05, 0.0), c64(0.0, 0.05), c64(0.0, 0.08), c64(0.0, -0.08)]
        .into_iter()
        .map(|h| Hbar::new(h).expect("small ħ lies in the domain"))
        .collect()
}
