//! Star products of the radial algebras of `A_R` and `D*`, written in the chart
//! variable `w = f_R(z)` or `w = f₀(z)`.

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::function::{EntireFn, Poly};
use crate::scalar::{Scalar, C64};
use crate::star::hbar::Hbar;
use crate::star::sum::{min_order, plan_terms, StarConfig, StarResult, Summer};

/// Weight used in the punctured-disk product.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PuncturedWeight {
    /// `w^{2n}`, the weight produced by lifting to the disk through `q`.
    #[default]
    Derived,
    /// A fixed factor `w²` for every `n >= 1`, as the closed formula is sometimes printed.
    Printed,
}

impl PuncturedWeight {
    fn factor<S: Scalar>(self, w: &S, n: usize) -> S {
        match (self, n) {
            (_, 0) => S::one(),
            (PuncturedWeight::Derived, n) => w.pow(2 * n as u32),
            (PuncturedWeight::Printed, _) => w.clone() * w.clone(),
        }
    }

    fn factor_poly<S: Scalar>(self, n: usize) -> Poly<S> {
        match (self, n) {
            (_, 0) => Poly::constant(S::one()),
            (PuncturedWeight::Derived, n) => Poly::monomial(2 * n),
            (PuncturedWeight::Printed, _) => Poly::monomial(2),
        }
    }
}

fn radial_sum(
    g: &EntireFn,
    gt: &EntireFn,
    h: &Hbar<C64>,
    w: C64,
    cfg: &StarConfig,
    weight: impl Fn(usize) -> C64,
) -> Result<StarResult> {
    let order = min_order(g.derivative_order(), gt.derivative_order());
    let (count, finite) = plan_terms(order, cfg)?;
    let tg = g.taylor_coeffs_at(w, count)?;
    let tgt = gt.taylor_coeffs_at(w, count)?;
    let weights = h.weights(count);
    let mut sum = Summer::new(cfg, finite);
    for n in 0..count {
        let f = weights[n] * weight(n);
        let ((a, ea), (b, eb)) = (tg[n], tgt[n]);
        let term = f * a * b;
        let bound = f.norm() * (a.norm() * eb + ea * b.norm() + ea * eb);
        if sum.push(term, bound) {
            break;
        }
    }
    Ok(sum.finish())
}

/// `Σ_n c_n(ħ)/n! · (w² − 1)ⁿ · g⁽ⁿ⁾(w) · g̃⁽ⁿ⁾(w)`.
pub fn star_annulus(
    g: &EntireFn,
    gt: &EntireFn,
    h: &Hbar<C64>,
    w: C64,
    cfg: &StarConfig,
) -> Result<StarResult> {
    let base = w * w - 1.0;
    radial_sum(g, gt, h, w, cfg, |n| base.powu(n as u32))
}

/// `Σ_n c_n(ħ)/n! · w^{2n} · g⁽ⁿ⁾(w) · g̃⁽ⁿ⁾(w)`.
pub fn star_punctured(
    g: &EntireFn,
    gt: &EntireFn,
    h: &Hbar<C64>,
    w: C64,
    cfg: &StarConfig,
) -> Result<StarResult> {
    star_punctured_with(g, gt, h, w, cfg, PuncturedWeight::Derived)
}

pub fn star_punctured_with(
    g: &EntireFn,
    gt: &EntireFn,
    h: &Hbar<C64>,
    w: C64,
    cfg: &StarConfig,
    weight: PuncturedWeight,
) -> Result<StarResult> {
    radial_sum(g, gt, h, w, cfg, |n| weight.factor(&w, n))
}

/// A finite factorial series `Σ_n c_n(ħ) · P_n(w)` with polynomial coefficients.
///
/// This is the symbolic form of the radial products of polynomials: equality of
/// two series is equality for every `ħ` at once.
#[derive(Clone, Debug, PartialEq)]
pub struct FactorialSeries<S> {
    terms: Vec<Poly<S>>,
}

impl<S: Scalar> FactorialSeries<S> {
    pub fn new(mut terms: Vec<Poly<S>>) -> Self {
        while terms.last().is_some_and(|p| p.is_zero()) {
            terms.pop();
        }
        FactorialSeries { terms }
    }

    /// `P_n`, the coefficient of `c_n(ħ)`.
    pub fn term(&self, n: usize) -> Poly<S> {
        self.terms.get(n).cloned().unwrap_or_else(Poly::zero)
    }

    pub fn terms(&self) -> &[Poly<S>] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn eval(&self, h: &Hbar<S>, w: &S) -> S {
        let c = h.coefficients(self.terms.len());
        self.terms
            .iter()
            .zip(c)
            .fold(S::zero(), |acc, (p, cn)| acc + cn * p.eval(w))
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.terms.len().max(other.terms.len());
        Self::new((0..n).map(|k| &self.term(k) - &other.term(k)).collect())
    }
}

fn radial_symbolic<S: Scalar>(g: &Poly<S>, gt: &Poly<S>, weight: impl Fn(usize) -> Poly<S>) -> FactorialSeries<S> {
    let d = g.degree().unwrap_or(0).min(gt.degree().unwrap_or(0));
    let mut terms = Vec::with_capacity(d + 1);
    let mut fact = S::one();
    for n in 0..=d {
        if n > 0 {
            fact = fact * S::from_i64(n as i64);
        }
        let prod = &g.derivative(n) * &gt.derivative(n);
        let inv = S::one() / fact.clone();
        terms.push(&(&weight(n) * &prod) * &Poly::constant(inv));
    }
    FactorialSeries::new(terms)
}

/// Symbolic annulus product of two polynomials.
pub fn star_annulus_symbolic<S: Scalar>(g: &Poly<S>, gt: &Poly<S>) -> FactorialSeries<S> {
    let base = Poly::new(vec![-S::one(), S::zero(), S::one()]);
    radial_symbolic(g, gt, |n| base.pow(n as u32))
}

/// Symbolic punctured-disk product of two polynomials.
pub fn star_punctured_symbolic<S: Scalar>(
    g: &Poly<S>,
    gt: &Poly<S>,
    weight: PuncturedWeight,
) -> FactorialSeries<S> {
    radial_symbolic(g, gt, |n| weight.factor_poly(n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{c64, cq, CQ};

    fn q(n: i64) -> CQ {
        cq(n, 1, 0, 1)
    }

    #[test]
    fn annulus_identity_pair() {
        let id = Poly::<CQ>::identity();
        let s = star_annulus_symbolic(&id, &id);
        assert_eq!(s.term(0), Poly::new(vec![q(0), q(0), q(1)]));
        assert_eq!(s.term(1), Poly::new(vec![q(-1), q(0), q(1)]));
        assert_eq!(s.len(), 2);
    }

    #[test]
    fn annulus_power_times_identity() {
        // (1 + nħ) w^{n+1} − nħ w^{n−1}
        let n = 4;
        let s = star_annulus_symbolic(&Poly::<CQ>::monomial(n), &Poly::identity());
        let h = Hbar::new(cq(2, 7, 1, 3)).unwrap();
        let w = cq(-3, 5, 1, 2);
        let hv = h.value().clone();
        let expected = (q(1) + q(n as i64) * hv.clone()) * w.pow(n as u32 + 1)
            - q(n as i64) * hv * w.pow(n as u32 - 1);
        assert_eq!(s.eval(&h, &w), expected);
    }

    #[test]
    fn punctured_examples() {
        let id = Poly::<CQ>::identity();
        let s = star_punctured_symbolic(&id, &id, PuncturedWeight::Derived);
        assert_eq!(s.terms(), &[Poly::monomial(2), Poly::monomial(2)]);
        let s2 = star_punctured_symbolic(&Poly::monomial(2), &id, PuncturedWeight::Derived);
        assert_eq!(s2.terms(), &[Poly::monomial(3), Poly::monomial(3).scale(&q(2))]);
    }

    #[test]
    fn float_products_agree_with_symbolic_form() {
        let g = EntireFn::real_polynomial(&[1.0, -2.0, 0.5, 3.0]);
        let gt = EntireFn::real_polynomial(&[0.0, 1.0, 1.0]);
        let h = Hbar::float(0.3, 0.2).unwrap();
        let w = c64(0.7, -0.4);
        let sym = star_annulus_symbolic(g.as_polynomial().unwrap(), gt.as_polynomial().unwrap());
        let r = star_annulus(&g, &gt, &h, w, &StarConfig::exact_finite()).unwrap();
        assert!((r.value - sym.eval(&h, &w)).norm() < 1e-13);
        let sym = star_punctured_symbolic(g.as_polynomial().unwrap(), gt.as_polynomial().unwrap(), PuncturedWeight::Derived);
        let r = star_punctured(&g, &gt, &h, w, &StarConfig::exact_finite()).unwrap();
        assert!((r.value - sym.eval(&h, &w)).norm() < 1e-13);
    }

    #[test]
    fn exponential_inputs_converge() {
        let g = EntireFn::exp(c64(1.0, 0.0));
        let h = Hbar::float(0.5, 0.0).unwrap();
        let r = star_annulus(&g, &EntireFn::constant(c64(1.0, 0.0)), &h, c64(0.3, 0.0), &StarConfig::default())
            .unwrap();
        assert!(r.converged);
        assert!((r.value - c64(0.3f64.exp(), 0.0)).norm() < 1e-14);
        let r = star_annulus(&g, &g, &h, c64(0.3, 0.0), &StarConfig::default()).unwrap();
        assert!(r.converged);
    }
}
