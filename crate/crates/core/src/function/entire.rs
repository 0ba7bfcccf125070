use crate::error::{Error, Result};
use crate::function::poly::Poly;
use crate::scalar::{binomial_f64, c64, C64};

/// Power series known through order `M` with a certified coefficient bound
/// `|a_k| <= C / rho^k` for every `k > M`.
#[derive(Clone, Debug, PartialEq)]
pub struct TruncatedSeries {
    coeffs: Vec<C64>,
    rho: f64,
    c: f64,
}

impl TruncatedSeries {
    pub fn new(coeffs: Vec<C64>, rho: f64, c: f64) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::Invalid("truncated series needs at least one coefficient".into()));
        }
        if !(rho > 0.0) || !rho.is_finite() {
            return Err(Error::Invalid(format!("tail radius rho = {rho} must be positive")));
        }
        if !(c >= 0.0) || !c.is_finite() {
            return Err(Error::Invalid(format!("tail constant C = {c} must be non-negative")));
        }
        Ok(TruncatedSeries { coeffs, rho, c })
    }

    pub fn coeffs(&self) -> &[C64] {
        &self.coeffs
    }

    /// Declared maximal order `M`.
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn rho(&self) -> f64 {
        self.rho
    }

    pub fn tail_constant(&self) -> f64 {
        self.c
    }

    fn ratio(&self, t: C64) -> Result<f64> {
        let r = t.norm() / self.rho;
        if !(r < 1.0) {
            return Err(Error::SeriesRadius {
                modulus: t.norm(),
                rho: self.rho,
            });
        }
        Ok(r)
    }

    /// First derivative; the tail bound is re-derived on the slightly smaller
    /// radius `rho·e^{-1/(M+1)}`.
    fn differentiate(&self) -> Result<Self> {
        let m = self.order();
        if m == 0 {
            return Err(Error::SeriesOrder {
                requested: 1,
                usable: 0,
            });
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, a)| a * k as f64)
            .collect();
        let theta = (-1.0 / (m as f64 + 1.0)).exp();
        // max over k >= M of (k+1) θ^k, attained at k = M
        let peak = (m as f64 + 1.0) * theta.powi(m as i32);
        Ok(TruncatedSeries {
            coeffs,
            rho: self.rho * theta,
            c: self.c / self.rho * peak,
        })
    }

    /// Bound on `Σ_{k>M, k>=n} C(k,n) |a_k| |t|^{k-n}`.
    fn tail_bound(&self, t: C64, n: usize) -> Result<f64> {
        let r = self.ratio(t)?;
        let coarse = self.c * self.rho.powi(-(n as i32)) * (1.0 - r).powi(-(n as i32 + 1));
        if self.c == 0.0 {
            return Ok(0.0);
        }
        let k0 = (self.order() + 1).max(n);
        // term_k = C ρ^{-n} C(k,n) r^{k-n}
        let mut term = self.c * self.rho.powi(-(n as i32)) * binomial_f64(k0 as u64, n as u64)
            * r.powi((k0 - n) as i32);
        let mut sum = 0.0;
        let mut k = k0;
        for _ in 0..100_000 {
            sum += term;
            let q = (k + 1) as f64 / (k + 1 - n) as f64 * r;
            if q < 1.0 {
                let rest = term * q / (1.0 - q);
                if rest <= 1e-17 * sum || term == 0.0 {
                    return Ok((sum + rest).min(coarse));
                }
            }
            term *= q;
            k += 1;
        }
        Ok(coarse)
    }

    /// `g^{(n)}(t) / n!` together with an error bound from the tail.
    pub fn taylor_at(&self, t: C64, n: usize) -> Result<(C64, f64)> {
        let bound = self.tail_bound(t, n)?;
        let mut value = c64(0.0, 0.0);
        for k in (n..self.coeffs.len()).rev() {
            value = value * t + self.coeffs[k] * binomial_f64(k as u64, n as u64);
        }
        Ok((value, bound))
    }
}

/// An entire function `g` given in one of three forms.
#[derive(Clone, Debug, PartialEq)]
pub enum EntireFn {
    Polynomial(Poly<C64>),
    /// `t -> coeff · e^{scale·t}`.
    Exp { coeff: C64, scale: C64 },
    TruncatedSeries(TruncatedSeries),
}

impl EntireFn {
    pub fn polynomial(coeffs: Vec<C64>) -> Self {
        EntireFn::Polynomial(Poly::new(coeffs))
    }

    pub fn real_polynomial(coeffs: &[f64]) -> Self {
        Self::polynomial(coeffs.iter().map(|&c| c64(c, 0.0)).collect())
    }

    pub fn constant(k: C64) -> Self {
        EntireFn::Polynomial(Poly::constant(k))
    }

    pub fn identity() -> Self {
        EntireFn::Polynomial(Poly::identity())
    }

    pub fn monomial(k: usize) -> Self {
        EntireFn::Polynomial(Poly::monomial(k))
    }

    /// `t -> e^{scale·t}`.
    pub fn exp(scale: C64) -> Self {
        EntireFn::Exp {
            coeff: c64(1.0, 0.0),
            scale,
        }
    }

    pub fn series(coeffs: Vec<C64>, rho: f64, c: f64) -> Result<Self> {
        Ok(EntireFn::TruncatedSeries(TruncatedSeries::new(coeffs, rho, c)?))
    }

    pub fn as_polynomial(&self) -> Option<&Poly<C64>> {
        match self {
            EntireFn::Polynomial(p) => Some(p),
            _ => None,
        }
    }

    /// Largest `n` with `g^{(n)} ≠ 0`, `None` when derivatives never vanish.
    pub fn derivative_order(&self) -> Option<usize> {
        match self {
            EntireFn::Polynomial(p) => Some(p.degree().unwrap_or(0)),
            EntireFn::Exp { coeff, scale } if coeff.norm() == 0.0 || scale.norm() == 0.0 => {
                Some(0)
            }
            _ => None,
        }
    }

    pub fn derivative(&self, n: usize) -> Result<EntireFn> {
        Ok(match self {
            EntireFn::Polynomial(p) => EntireFn::Polynomial(p.derivative(n)),
            EntireFn::Exp { coeff, scale } => EntireFn::Exp {
                coeff: coeff * scale.powu(n as u32),
                scale: *scale,
            },
            EntireFn::TruncatedSeries(s) => {
                if n > s.order() {
                    return Err(Error::SeriesOrder {
                        requested: n,
                        usable: s.order(),
                    });
                }
                let mut out = s.clone();
                for _ in 0..n {
                    out = out.differentiate()?;
                }
                EntireFn::TruncatedSeries(out)
            }
        })
    }

    /// Value and error bound; the bound is zero for the closed forms.
    pub fn eval(&self, t: C64) -> Result<(C64, f64)> {
        self.taylor_at(t, 0)
    }

    pub fn value(&self, t: C64) -> Result<C64> {
        Ok(self.eval(t)?.0)
    }

    /// Normalized derivative `g^{(n)}(t) / n!` and its error bound.
    pub fn taylor_at(&self, t: C64, n: usize) -> Result<(C64, f64)> {
        match self {
            EntireFn::Polynomial(p) => Ok((p.taylor_coeff_at(n, &t), 0.0)),
            EntireFn::Exp { coeff, scale } => {
                let mut v = coeff * (scale * t).exp();
                for k in 1..=n {
                    v = v * scale / k as f64;
                }
                Ok((v, 0.0))
            }
            EntireFn::TruncatedSeries(s) => s.taylor_at(t, n),
        }
    }

    /// `[g^{(n)}(t)/n! for n in 0..count]` with bounds, sharing work across orders.
    pub fn taylor_coeffs_at(&self, t: C64, count: usize) -> Result<Vec<(C64, f64)>> {
        match self {
            EntireFn::Exp { coeff, scale } => {
                let mut v = coeff * (scale * t).exp();
                let mut out = Vec::with_capacity(count);
                for k in 0..count {
                    if k > 0 {
                        v = v * scale / k as f64;
                    }
                    out.push((v, 0.0));
                }
                Ok(out)
            }
            _ => (0..count).map(|n| self.taylor_at(t, n)).collect(),
        }
    }

    /// `α f + β g` when both are polynomials.
    pub fn linear_combination(alpha: C64, f: &EntireFn, beta: C64, g: &EntireFn) -> Option<EntireFn> {
        let (p, q) = (f.as_polynomial()?, g.as_polynomial()?);
        Some(EntireFn::Polynomial(&p.scale(&alpha) + &q.scale(&beta)))
    }
}
