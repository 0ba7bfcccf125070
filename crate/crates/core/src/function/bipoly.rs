use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::scalar::{binomial_in, Scalar, C64};

/// Which variable a partial derivative acts on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Slot {
    Z,
    W,
}

/// Sparse bivariate polynomial `F(z, w) = Σ a_ij z^i w^j`.
///
/// On the disk the represented function is `F(z, conj z)`.
#[derive(Clone, PartialEq)]
pub struct BiPoly<S> {
    terms: BTreeMap<(u32, u32), S>,
}

impl<S: Scalar> BiPoly<S> {
    pub fn zero() -> Self {
        BiPoly {
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(c: S) -> Self {
        Self::monomial(c, 0, 0)
    }

    pub fn one() -> Self {
        Self::constant(S::one())
    }

    pub fn monomial(c: S, i: u32, j: u32) -> Self {
        let mut p = Self::zero();
        p.add_term(i, j, c);
        p
    }

    pub fn z() -> Self {
        Self::monomial(S::one(), 1, 0)
    }

    pub fn w() -> Self {
        Self::monomial(S::one(), 0, 1)
    }

    /// `1 - z w`, i.e. `1 - |z|²` on the disk.
    pub fn one_minus_zw() -> Self {
        let mut p = Self::one();
        p.add_term(1, 1, -S::one());
        p
    }

    pub fn from_terms(terms: impl IntoIterator<Item = ((u32, u32), S)>) -> Self {
        let mut p = Self::zero();
        for ((i, j), c) in terms {
            p.add_term(i, j, c);
        }
        p
    }

    /// Accumulate `c z^i w^j`, dropping the entry if it cancels.
    pub fn add_term(&mut self, i: u32, j: u32, c: S) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry((i, j)) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let v = e.get().clone() + c;
                if v.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = v;
                }
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &S)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, i: u32, j: u32) -> S {
        self.terms.get(&(i, j)).cloned().unwrap_or_else(S::zero)
    }

    pub fn deg_z(&self) -> u32 {
        self.terms.keys().map(|k| k.0).max().unwrap_or(0)
    }

    pub fn deg_w(&self) -> u32 {
        self.terms.keys().map(|k| k.1).max().unwrap_or(0)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|k| k.0 + k.1).max().unwrap_or(0)
    }

    pub fn min_total_degree(&self) -> u32 {
        self.terms.keys().map(|k| k.0 + k.1).min().unwrap_or(0)
    }

    /// Range of the charge `i - j` over the stored monomials.
    pub fn charge_range(&self) -> Option<(i64, i64)> {
        let charges = self.terms.keys().map(|&(i, j)| i as i64 - j as i64);
        let lo = charges.clone().min()?;
        let hi = charges.max()?;
        Some((lo, hi))
    }

    /// Holomorphic on the disk: no `w` dependence.
    pub fn is_holomorphic(&self) -> bool {
        self.terms.keys().all(|k| k.1 == 0)
    }

    pub fn is_antiholomorphic(&self) -> bool {
        self.terms.keys().all(|k| k.0 == 0)
    }

    /// Drop all monomials of total degree above `k`.
    pub fn truncate(&self, k: u32) -> Self {
        BiPoly {
            terms: self
                .terms
                .iter()
                .filter(|(key, _)| key.0 + key.1 <= k)
                .map(|(key, c)| (*key, c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, s: &S) -> Self {
        Self::from_terms(self.terms.iter().map(|(k, c)| (*k, c.clone() * s.clone())))
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(), |acc, _| &acc * self)
    }

    /// Product truncated at total degree `k`.
    pub fn mul_truncated(&self, rhs: &Self, k: u32) -> Self {
        let mut out = Self::zero();
        for (&(i1, j1), a) in &self.terms {
            for (&(i2, j2), b) in &rhs.terms {
                if i1 + i2 + j1 + j2 <= k {
                    out.add_term(i1 + i2, j1 + j2, a.clone() * b.clone());
                }
            }
        }
        out
    }

    pub fn eval(&self, z: &S, w: &S) -> S {
        let mut acc = S::zero();
        for (&(i, j), c) in &self.terms {
            acc = acc + c.clone() * z.pow(i) * w.pow(j);
        }
        acc
    }

    /// `F(z, conj z)`.
    pub fn eval_diagonal(&self, z: &S) -> S {
        self.eval(z, &z.conj())
    }

    pub fn wirtinger(&self, slot: Slot) -> Self {
        let mut out = Self::zero();
        for (&(i, j), c) in &self.terms {
            match slot {
                Slot::Z if i > 0 => out.add_term(i - 1, j, c.clone() * S::from_i64(i as i64)),
                Slot::W if j > 0 => out.add_term(i, j - 1, c.clone() * S::from_i64(j as i64)),
                _ => {}
            }
        }
        out
    }

    pub fn wirtinger_n(&self, slot: Slot, n: u32) -> Self {
        (0..n).fold(self.clone(), |acc, _| acc.wirtinger(slot))
    }

    /// Extension of `conj f`: swap the variables and conjugate coefficients.
    pub fn swap_conj(&self) -> Self {
        Self::from_terms(self.terms.iter().map(|(&(i, j), c)| ((j, i), c.conj())))
    }

    /// `f` is real-valued on the disk.
    pub fn is_real(&self) -> bool {
        self.swap_conj() == *self
    }

    /// `D^n F` by the recursion `D^{n+1} F = (1 - zw) ∂^{n+1}[(1 - zw)^n F]`, exact in the
    /// coefficient field.
    pub fn pm_derivative(&self, n: u32) -> Self {
        if n == 0 {
            return self.clone();
        }
        let m = n - 1;
        let inner = &Self::one_minus_zw().pow(m) * self;
        &Self::one_minus_zw() * &inner.wirtinger_n(Slot::Z, n)
    }

    /// `D̄^n F = conj(D^n(conj F))`.
    pub fn pm_bar_derivative(&self, n: u32) -> Self {
        self.swap_conj().pm_derivative(n).swap_conj()
    }

    /// `D^n F / n!` from the closed per-monomial expansion
    /// `D^n(z^a w^b)/n! = (1 - zw) Σ_k (-1)^k C(n-1,k) C(a+k,n) z^{a+k-n} w^{b+k}`.
    pub fn pm_normalized(&self, n: u32) -> Self {
        if n == 0 {
            return self.clone();
        }
        let mut core = Self::zero();
        for (&(a, b), c) in &self.terms {
            let k0 = n.saturating_sub(a);
            for k in k0..n {
                let coef = binomial_in::<S>((n - 1) as u64, k as u64)
                    * binomial_in::<S>((a + k) as u64, n as u64);
                let coef = if k % 2 == 1 { -coef } else { coef };
                core.add_term(a + k - n, b + k, c.clone() * coef);
            }
        }
        &Self::one_minus_zw() * &core
    }

    /// `D̄^n F / n!`, the mirror image of [`BiPoly::pm_normalized`] with the slots exchanged.
    pub fn pm_bar_normalized(&self, n: u32) -> Self {
        if n == 0 {
            return self.clone();
        }
        let mut core = Self::zero();
        for (&(a, b), c) in &self.terms {
            let k0 = n.saturating_sub(b);
            for k in k0..n {
                let coef = binomial_in::<S>((n - 1) as u64, k as u64)
                    * binomial_in::<S>((b + k) as u64, n as u64);
                let coef = if k % 2 == 1 { -coef } else { coef };
                core.add_term(a + k, b + k - n, c.clone() * coef);
            }
        }
        &Self::one_minus_zw() * &core
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> BiPoly<T> {
        BiPoly::from_terms(self.terms.iter().map(|(k, c)| (*k, f(c))))
    }

    pub fn to_c64(&self) -> BiPoly<C64> {
        self.map(|c| c.to_c64())
    }
}

impl<S: Scalar> Default for BiPoly<S> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<S: Scalar> Add for &BiPoly<S> {
    type Output = BiPoly<S>;
    fn add(self, rhs: &BiPoly<S>) -> BiPoly<S> {
        let mut out = self.clone();
        for (&(i, j), c) in &rhs.terms {
            out.add_term(i, j, c.clone());
        }
        out
    }
}

impl<S: Scalar> Sub for &BiPoly<S> {
    type Output = BiPoly<S>;
    fn sub(self, rhs: &BiPoly<S>) -> BiPoly<S> {
        let mut out = self.clone();
        for (&(i, j), c) in &rhs.terms {
            out.add_term(i, j, -c.clone());
        }
        out
    }
}

impl<S: Scalar> Mul for &BiPoly<S> {
    type Output = BiPoly<S>;
    fn mul(self, rhs: &BiPoly<S>) -> BiPoly<S> {
        let mut out = BiPoly::zero();
        for (&(i1, j1), a) in &self.terms {
            for (&(i2, j2), b) in &rhs.terms {
                out.add_term(i1 + i2, j1 + j2, a.clone() * b.clone());
            }
        }
        out
    }
}

impl<S: Scalar> Neg for &BiPoly<S> {
    type Output = BiPoly<S>;
    fn neg(self) -> BiPoly<S> {
        self.scale(&-S::one())
    }
}

impl<S: Scalar> fmt::Debug for BiPoly<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&(i, j), c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let c = c.to_c64();
            write!(f, "({}{:+}i)", c.re, c.im)?;
            if i > 0 {
                write!(f, "·z^{i}")?;
            }
            if j > 0 {
                write!(f, "·w^{j}")?;
            }
        }
        Ok(())
    }
}
