use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};

use crate::error::{Error, Result};
use crate::scalar::{Scalar, C64};

/// Distance below which a float `ħ` counts as sitting on a pole or at zero.
pub const POLE_TOL: f64 = 1e-12;

/// Deformation parameter in `𝒟 = C ∖ {0, −1, −1/2, −1/3, …}`.
#[derive(Clone, Debug, PartialEq)]
pub struct Hbar<S> {
    value: S,
}

impl<S: Scalar> Hbar<S> {
    pub fn new(value: S) -> Result<Self> {
        if S::EXACT {
            Self::check_exact(&value)?;
        } else {
            Self::check_float(value.to_c64())?;
        }
        Ok(Hbar { value })
    }

    fn check_exact(value: &S) -> Result<()> {
        if value.is_zero() {
            return Err(Error::HbarZero);
        }
        if value.real_sign(0.0) == Some(Ordering::Less) {
            let inv = -(S::one() / value.clone());
            if let Some(n) = inv.exact_integer() {
                if n.is_positive() {
                    return Err(Error::HbarPole {
                        value: fmt_c64(value.to_c64()),
                        n: n.to_u64().unwrap_or(u64::MAX),
                    });
                }
            }
        }
        Ok(())
    }

    fn check_float(v: C64) -> Result<()> {
        if !v.re.is_finite() || !v.im.is_finite() {
            return Err(Error::Invalid(format!("ħ = {v} is not finite")));
        }
        if v.norm() < POLE_TOL {
            return Err(Error::HbarZero);
        }
        if v.re < 0.0 && v.im.abs() < POLE_TOL {
            let n0 = (-1.0 / v.re).round().max(1.0);
            for n in [n0 - 1.0, n0, n0 + 1.0] {
                if n >= 1.0 && (v - C64::new(-1.0 / n, 0.0)).norm() < POLE_TOL {
                    return Err(Error::HbarPole {
                        value: fmt_c64(v),
                        n: n as u64,
                    });
                }
            }
        }
        Ok(())
    }

    pub fn value(&self) -> &S {
        &self.value
    }

    /// `c_n(ħ)` by the recurrence `c_{n+1} = c_n ħ / (1 + nħ)`.
    pub fn c_n(&self, n: usize) -> S {
        let mut c = S::one();
        for k in 0..n {
            c = c * self.value.clone() / (S::one() + S::from_i64(k as i64) * self.value.clone());
        }
        c
    }

    /// `c_n(ħ) = ħⁿ / ∏_{j<n} (1 + jħ)` evaluated as a single quotient.
    pub fn c_n_product(&self, n: usize) -> S {
        let den = (0..n).fold(S::one(), |acc, j| {
            acc * (S::one() + S::from_i64(j as i64) * self.value.clone())
        });
        self.value.pow(n as u32) / den
    }

    /// `[c_0, …, c_{count-1}]`.
    pub fn coefficients(&self, count: usize) -> Vec<S> {
        let mut out = Vec::with_capacity(count);
        let mut c = S::one();
        for k in 0..count {
            out.push(c.clone());
            c = c * self.value.clone() / (S::one() + S::from_i64(k as i64) * self.value.clone());
        }
        out
    }

    /// `[c_n n!, n < count]`, the weights paired with normalized derivatives.
    ///
    /// `c_n n! = ∏_{j<n} (j+1)ħ/(1 + jħ)` grows at most polynomially in `n`.
    pub fn weights(&self, count: usize) -> Vec<S> {
        let mut out = Vec::with_capacity(count);
        let mut c = S::one();
        for k in 0..count {
            out.push(c.clone());
            c = c * S::from_i64(k as i64 + 1) * self.value.clone()
                / (S::one() + S::from_i64(k as i64) * self.value.clone());
        }
        out
    }

    pub fn to_c64(&self) -> Hbar<C64> {
        Hbar {
            value: self.value.to_c64(),
        }
    }
}

impl Hbar<C64> {
    pub fn float(re: f64, im: f64) -> Result<Self> {
        Self::new(C64::new(re, im))
    }
}

/// `c_n(ħ)` with the domain check folded in.
pub fn c_n<S: Scalar>(h: &S, n: usize) -> Result<S> {
    Ok(Hbar::new(h.clone())?.c_n(n))
}

fn fmt_c64(v: C64) -> String {
    if v.im == 0.0 {
        format!("{}", v.re)
    } else {
        format!("{}{:+}i", v.re, v.im)
    }
}

impl<S: Scalar> fmt::Display for Hbar<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", fmt_c64(self.value.to_c64()))
    }
}

/// Exact `n!` as a big integer.
pub fn factorial_big(n: usize) -> BigInt {
    (1..=n).fold(BigInt::from(1), |acc, k| acc * BigInt::from(k))
}
