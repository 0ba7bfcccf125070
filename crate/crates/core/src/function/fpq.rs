use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::scalar::{binomial_in, Scalar};
use crate::sphere::{OmegaPoint, SpherePoint};

/// `f_{p,q}(z, w) = z^p w^q / (1 - zw)^{max(p, q)}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BasisFpq {
    pub p: u32,
    pub q: u32,
}

impl BasisFpq {
    pub fn new(p: u32, q: u32) -> Self {
        BasisFpq { p, q }
    }

    pub fn m(&self) -> u32 {
        self.p.max(self.q)
    }

    /// All indices with `p, q <= d`, in lexicographic order.
    pub fn grid(d: u32) -> Vec<BasisFpq> {
        (0..=d)
            .flat_map(|p| (0..=d).map(move |q| BasisFpq { p, q }))
            .collect()
    }

    pub fn eval<S: Scalar>(&self, z: &S, w: &S) -> Result<S> {
        let denom = S::one() - z.clone() * w.clone();
        if denom.near_zero(1e-14) {
            return Err(Error::outside(
                format!("({:?}, {:?})", z.to_c64(), w.to_c64()),
                "Ω (zw = 1)",
            ));
        }
        Ok(z.pow(self.p) * w.pow(self.q) / denom.pow(self.m()))
    }

    /// Evaluation on projective coordinates, so points of `Ω` at infinity are allowed:
    /// `zu^p wu^q zv^{m-p} wv^{m-q} / (zv wv - zu wu)^m`.
    pub fn eval_projective<S: Scalar>(&self, p: &OmegaPoint<S>) -> S {
        let (zu, zv) = (p.z.u().clone(), p.z.v().clone());
        let (wu, wv) = (p.w.u().clone(), p.w.v().clone());
        let m = self.m();
        let num = zu.pow(self.p) * wu.pow(self.q) * zv.pow(m - self.p) * wv.pow(m - self.q);
        let den = zv * wv - zu * wu;
        num / den.pow(m)
    }
}

/// Finite linear combination `Σ c_{pq} f_{p,q}`.
#[derive(Clone, Debug, PartialEq)]
pub struct FpqSpan<S> {
    terms: BTreeMap<BasisFpq, S>,
}

impl<S: Scalar> FpqSpan<S> {
    pub fn zero() -> Self {
        FpqSpan {
            terms: BTreeMap::new(),
        }
    }

    pub fn basis(b: BasisFpq) -> Self {
        let mut s = Self::zero();
        s.add_term(b, S::one());
        s
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (BasisFpq, S)>) -> Self {
        let mut s = Self::zero();
        for (b, c) in terms {
            s.add_term(b, c);
        }
        s
    }

    pub fn add_term(&mut self, b: BasisFpq, c: S) {
        let v = self.terms.get(&b).cloned().unwrap_or_else(S::zero) + c;
        if v.is_zero() {
            self.terms.remove(&b);
        } else {
            self.terms.insert(b, v);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&BasisFpq, &S)> {
        self.terms.iter()
    }

    pub fn coeff(&self, b: BasisFpq) -> S {
        self.terms.get(&b).cloned().unwrap_or_else(S::zero)
    }

    pub fn eval(&self, z: &S, w: &S) -> Result<S> {
        let mut acc = S::zero();
        for (b, c) in &self.terms {
            acc = acc + c.clone() * b.eval(z, w)?;
        }
        Ok(acc)
    }

    pub fn eval_projective(&self, p: &OmegaPoint<S>) -> S {
        self.terms
            .iter()
            .fold(S::zero(), |acc, (b, c)| acc + c.clone() * b.eval_projective(p))
    }

    /// The combination representing `(z, w) -> F(1/z, 1/w)`.
    ///
    /// Uses `f_{p,q}(1/z, 1/w) = (-1)^m Σ_j C(min(p,q), j) f_{j, p-q+j}` for `p >= q`
    /// and the mirror formula for `p < q`.
    pub fn z2_involution(&self) -> Self {
        let mut out = Self::zero();
        for (b, c) in &self.terms {
            let m = b.m();
            let lo = b.p.min(b.q);
            let sign = if m % 2 == 1 { -S::one() } else { S::one() };
            for j in 0..=lo {
                let target = if b.p >= b.q {
                    BasisFpq::new(j, b.p - b.q + j)
                } else {
                    BasisFpq::new(b.q - b.p + j, j)
                };
                out.add_term(
                    target,
                    c.clone() * sign.clone() * binomial_in::<S>(lo as u64, j as u64),
                );
            }
        }
        out
    }
}

/// Evaluate a span at the reciprocal point directly, for cross-checking the involution.
pub fn eval_at_reciprocal<S: Scalar>(span: &FpqSpan<S>, p: &OmegaPoint<S>) -> Result<S> {
    let r = OmegaPoint::new(p.z.reciprocal(), p.w.reciprocal())?;
    Ok(span.eval_projective(&r))
}

/// Convenience constructor for a finite-point `Ω` sample.
pub fn omega_finite<S: Scalar>(z: S, w: S) -> Result<OmegaPoint<S>> {
    OmegaPoint::new(SpherePoint::finite(z), SpherePoint::finite(w))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{cq, CQ};

    #[test]
    fn evaluation_examples() {
        let half = cq(1, 2, 0, 1);
        assert_eq!(BasisFpq::new(0, 0).eval(&half, &half).unwrap(), cq(1, 1, 0, 1));
        assert_eq!(BasisFpq::new(1, 1).eval(&half, &half).unwrap(), cq(1, 3, 0, 1));
        assert_eq!(
            BasisFpq::new(2, 1).eval(&cq(0, 1, 0, 1), &cq(3, 1, 1, 1)).unwrap(),
            cq(0, 1, 0, 1)
        );
        assert!(BasisFpq::new(1, 0).eval(&cq(2, 1, 0, 1), &half).is_err());
    }

    #[test]
    fn involution_of_f11() {
        let s = FpqSpan::<CQ>::basis(BasisFpq::new(1, 1)).z2_involution();
        let expected = FpqSpan::from_terms([
            (BasisFpq::new(0, 0), cq(-1, 1, 0, 1)),
            (BasisFpq::new(1, 1), cq(-1, 1, 0, 1)),
        ]);
        assert_eq!(s, expected);
    }

    #[test]
    fn involution_is_exact_pointwise_and_squares_to_identity() {
        let span = FpqSpan::from_terms([
            (BasisFpq::new(3, 1), cq(1, 2, 1, 1)),
            (BasisFpq::new(0, 2), cq(-2, 1, 0, 1)),
            (BasisFpq::new(2, 2), cq(0, 1, 3, 4)),
        ]);
        let inv = span.z2_involution();
        assert_eq!(inv.z2_involution(), span);
        let p = omega_finite(cq(2, 3, 1, 5), cq(-1, 4, 1, 2)).unwrap();
        assert_eq!(inv.eval_projective(&p), eval_at_reciprocal(&span, &p).unwrap());
    }

    #[test]
    fn projective_evaluation_agrees_on_finite_points() {
        let p = omega_finite(cq(1, 3, 0, 1), cq(1, 5, 1, 7)).unwrap();
        for b in BasisFpq::grid(3) {
            let (z, w) = p.values().unwrap();
            assert_eq!(b.eval(&z, &w).unwrap(), b.eval_projective(&p));
        }
    }
}
