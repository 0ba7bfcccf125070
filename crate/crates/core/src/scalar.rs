//! Coefficient backends.
//!
//! Two fields are used throughout the crate: double-precision complex numbers
//! ([`C64`]) and exact complex rationals ([`CQ`]). Möbius maps, bivariate
//! polynomials, the coefficient family `c_n(ħ)` and the exact jet calculus are
//! generic over [`Scalar`]; transcendental charts are float-only.

use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub type C64 = Complex<f64>;
pub type CQ = Complex<BigRational>;

pub trait Scalar:
    Clone
    + Debug
    + PartialEq
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    /// True when arithmetic in this field is exact.
    const EXACT: bool;

    fn zero() -> Self;
    fn one() -> Self;
    fn i() -> Self;
    fn from_bigint(n: &BigInt) -> Self;
    fn from_i64(n: i64) -> Self {
        Self::from_bigint(&BigInt::from(n))
    }
    fn from_ratio(num: i64, den: i64) -> Self {
        Self::from_i64(num) / Self::from_i64(den)
    }
    fn conj(&self) -> Self;
    fn is_zero(&self) -> bool;
    /// Zero test with tolerance; exact fields ignore `tol`.
    fn near_zero(&self, tol: f64) -> bool;
    fn to_c64(&self) -> C64;
    fn re_part(&self) -> Self;
    fn im_part(&self) -> Self;
    /// Sign of the real part when the value is real, `None` otherwise.
    fn real_sign(&self, tol: f64) -> Option<std::cmp::Ordering>;
    /// The value as an integer when it is exactly one.
    fn exact_integer(&self) -> Option<BigInt>;

    fn abs_sq(&self) -> Self {
        self.clone() * self.conj()
    }

    fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut e = n;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base.clone();
            }
            e >>= 1;
            if e > 0 {
                base = base.clone() * base;
            }
        }
        acc
    }
}

impl Scalar for C64 {
    const EXACT: bool = false;

    fn zero() -> Self {
        Complex::new(0.0, 0.0)
    }
    fn one() -> Self {
        Complex::new(1.0, 0.0)
    }
    fn i() -> Self {
        Complex::new(0.0, 1.0)
    }
    fn from_bigint(n: &BigInt) -> Self {
        Complex::new(n.to_f64().unwrap_or(f64::NAN), 0.0)
    }
    fn from_i64(n: i64) -> Self {
        Complex::new(n as f64, 0.0)
    }
    fn from_ratio(num: i64, den: i64) -> Self {
        Complex::new(num as f64 / den as f64, 0.0)
    }
    fn conj(&self) -> Self {
        Complex::conj(self)
    }
    fn is_zero(&self) -> bool {
        self.re == 0.0 && self.im == 0.0
    }
    fn near_zero(&self, tol: f64) -> bool {
        self.norm() <= tol
    }
    fn to_c64(&self) -> C64 {
        *self
    }
    fn re_part(&self) -> Self {
        Complex::new(self.re, 0.0)
    }
    fn im_part(&self) -> Self {
        Complex::new(self.im, 0.0)
    }
    fn real_sign(&self, tol: f64) -> Option<std::cmp::Ordering> {
        if self.im.abs() > tol {
            return None;
        }
        if self.re.abs() <= tol {
            Some(std::cmp::Ordering::Equal)
        } else {
            self.re.partial_cmp(&0.0)
        }
    }
    fn exact_integer(&self) -> Option<BigInt> {
        if self.im == 0.0 && self.re.fract() == 0.0 && self.re.abs() < 9.0e15 {
            Some(BigInt::from(self.re as i64))
        } else {
            None
        }
    }
}

impl Scalar for CQ {
    const EXACT: bool = true;

    fn zero() -> Self {
        Complex::new(BigRational::zero(), BigRational::zero())
    }
    fn one() -> Self {
        Complex::new(BigRational::one(), BigRational::zero())
    }
    fn i() -> Self {
        Complex::new(BigRational::zero(), BigRational::one())
    }
    fn from_bigint(n: &BigInt) -> Self {
        Complex::new(BigRational::from_integer(n.clone()), BigRational::zero())
    }
    fn from_ratio(num: i64, den: i64) -> Self {
        Complex::new(
            BigRational::new(BigInt::from(num), BigInt::from(den)),
            BigRational::zero(),
        )
    }
    fn conj(&self) -> Self {
        Complex::new(self.re.clone(), -self.im.clone())
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
    fn near_zero(&self, _tol: f64) -> bool {
        Scalar::is_zero(self)
    }
    fn to_c64(&self) -> C64 {
        Complex::new(
            self.re.to_f64().unwrap_or(f64::NAN),
            self.im.to_f64().unwrap_or(f64::NAN),
        )
    }
    fn re_part(&self) -> Self {
        Complex::new(self.re.clone(), BigRational::zero())
    }
    fn im_part(&self) -> Self {
        Complex::new(self.im.clone(), BigRational::zero())
    }
    fn real_sign(&self, _tol: f64) -> Option<std::cmp::Ordering> {
        if !self.im.is_zero() {
            return None;
        }
        Some(if self.re.is_zero() {
            std::cmp::Ordering::Equal
        } else if self.re.is_positive() {
            std::cmp::Ordering::Greater
        } else {
            std::cmp::Ordering::Less
        })
    }
    fn exact_integer(&self) -> Option<BigInt> {
        if self.im.is_zero() && self.re.is_integer() {
            Some(self.re.to_integer())
        } else {
            None
        }
    }
}

/// Exact complex rational `(re_n/re_d) + i (im_n/im_d)`.
pub fn cq(re_n: i64, re_d: i64, im_n: i64, im_d: i64) -> CQ {
    Complex::new(
        BigRational::new(re_n.into(), re_d.into()),
        BigRational::new(im_n.into(), im_d.into()),
    )
}

/// Exact complex rational from a float pair (every finite double is a dyadic rational).
pub fn cq_from_c64(z: C64) -> Option<CQ> {
    Some(Complex::new(
        BigRational::from_float(z.re)?,
        BigRational::from_float(z.im)?,
    ))
}

pub fn c64(re: f64, im: f64) -> C64 {
    Complex::new(re, im)
}

/// Serde adapter writing complex floats as `[re, im]`.
pub mod pair {
    use super::C64;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(z: &C64, s: S) -> Result<S::Ok, S::Error> {
        [z.re, z.im].serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<C64, D::Error> {
        let [re, im] = <[f64; 2]>::deserialize(d)?;
        Ok(C64::new(re, im))
    }

    pub mod vec {
        use super::C64;
        use serde::{Deserialize, Deserializer, Serialize, Serializer};

        pub fn serialize<S: Serializer>(zs: &[C64], s: S) -> Result<S::Ok, S::Error> {
            zs.iter().map(|z| [z.re, z.im]).collect::<Vec<_>>().serialize(s)
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<C64>, D::Error> {
            let v = Vec::<[f64; 2]>::deserialize(d)?;
            Ok(v.into_iter().map(|[re, im]| C64::new(re, im)).collect())
        }
    }
}

/// Binomial coefficient `C(n, k)` as an exact integer.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for j in 0..k {
        acc = acc * BigInt::from(n - j) / BigInt::from(j + 1);
    }
    acc
}

/// Binomial coefficient in floating point, computed by the multiplicative formula.
pub fn binomial_f64(n: u64, k: u64) -> f64 {
    if k > n {
        return 0.0;
    }
    let k = k.min(n - k);
    let mut acc = 1.0;
    for j in 0..k {
        acc = acc * (n - j) as f64 / (j + 1) as f64;
    }
    acc
}

/// Binomial coefficient in the scalar field `S`.
pub fn binomial_in<S: Scalar>(n: u64, k: u64) -> S {
    S::from_bigint(&binomial(n, k))
}
