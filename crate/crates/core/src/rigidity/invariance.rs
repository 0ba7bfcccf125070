use nalgebra::DMatrix;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::function::{BasisFpq, EntireFn};
use crate::linalg::{nullspace, singular_values};
use crate::sampling::Sampler;
use crate::scalar::{c64, C64};
use crate::sphere::{gamma_hat, psi_g_to_omega, psi_omega_to_g, GPoint, MoebiusMap};
use crate::surface::{scaling_kernel_arg, translation_kernel_arg};

/// A holomorphic function on `G` usable as a basis element.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum GFunction {
    Constant,
    /// `f_{p,q} ∘ Ψ⁻¹`.
    Fpq { p: u32, q: u32 },
    /// `g(w/(z − w))`.
    ScalingKernel { g: EntireFn },
    /// `g(1/(z − w))`.
    TranslationKernel { g: EntireFn },
    /// The first coordinate `z` (finite points only).
    CoordinateZ,
}

impl GFunction {
    pub fn fpq_grid(d: u32) -> Vec<GFunction> {
        BasisFpq::grid(d)
            .into_iter()
            .map(|b| GFunction::Fpq { p: b.p, q: b.q })
            .collect()
    }

    pub fn eval(&self, p: &GPoint<C64>) -> Result<C64> {
        let v = match self {
            GFunction::Constant => c64(1.0, 0.0),
            GFunction::Fpq { p: a, q: b } => BasisFpq::new(*a, *b).eval_projective(&psi_g_to_omega(p)),
            GFunction::ScalingKernel { g } => g.value(scaling_kernel_arg(p))?,
            GFunction::TranslationKernel { g } => g.value(translation_kernel_arg(p))?,
            GFunction::CoordinateZ => p
                .z
                .value()
                .ok_or(Error::InfiniteCoordinate("the coordinate z at infinity"))?,
        };
        if !v.is_finite() {
            return Err(Error::outside(format!("{} / {}", p.z, p.w), "the domain of the basis function"));
        }
        Ok(v)
    }
}

/// Generators acting on `G` by `γ̂`, a basis of functions and sample points.
#[derive(Clone, Debug)]
pub struct InvarianceExperiment {
    pub generators: Vec<MoebiusMap<C64>>,
    pub basis: Vec<GFunction>,
    pub samples: Vec<GPoint<C64>>,
    pub svd_tol: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct InvarianceResult {
    pub dim: usize,
    pub singular_values: Vec<f64>,
    /// Smallest kept over largest discarded singular value.
    pub gap: f64,
    /// Condition number of the column-normalized evaluation matrix.
    pub eval_condition: f64,
    /// Basis indices whose unit vector lies in the invariant subspace.
    pub invariant_indices: Vec<usize>,
    /// Invariant combinations in the original basis, one vector per dimension.
    #[serde(skip)]
    pub invariant_vectors: Vec<Vec<C64>>,
}

/// Evaluation matrices stop being usable beyond this condition number.
pub const EVAL_CONDITION_LIMIT: f64 = 1e12;

fn eval_rows(basis: &[GFunction], points: &[GPoint<C64>]) -> Result<Vec<Vec<C64>>> {
    points
        .par_iter()
        .map(|p| basis.iter().map(|f| f.eval(p)).collect::<Result<Vec<_>>>())
        .collect()
}

impl InvarianceExperiment {
    pub fn new(
        generators: Vec<MoebiusMap<C64>>,
        basis: Vec<GFunction>,
        samples: Vec<GPoint<C64>>,
        svd_tol: f64,
    ) -> Result<Self> {
        let e = InvarianceExperiment {
            generators,
            basis,
            samples,
            svd_tol,
        };
        e.check()?;
        Ok(e)
    }

    fn check(&self) -> Result<()> {
        if self.basis.is_empty() {
            return Err(Error::Invalid("empty basis".into()));
        }
        if self.samples.len() < 3 * self.basis.len() {
            return Err(Error::Invalid(format!(
                "{} samples for {} basis functions; at least three per function are required",
                self.samples.len(),
                self.basis.len()
            )));
        }
        if !(self.svd_tol > 0.0 && self.svd_tol < 1.0) {
            return Err(Error::Invalid(format!("svd_tol = {} must lie in (0, 1)", self.svd_tol)));
        }
        Ok(())
    }

    /// Numeric dimension of the span of basis combinations `Σ a_k F_k` with
    /// `Σ a_k (F_k(γ̂P) − F_k(P)) = 0` for all generators and samples.
    pub fn invariant_dimension(&self) -> Result<InvarianceResult> {
        self.check()?;
        let n = self.basis.len();
        let base = eval_rows(&self.basis, &self.samples)?;
        let mut scale = vec![0.0f64; n];
        for row in &base {
            for (k, v) in row.iter().enumerate() {
                scale[k] += v.norm_sqr();
            }
        }
        for s in &mut scale {
            *s = s.sqrt();
            if *s == 0.0 {
                return Err(Error::Conditioning("a basis function vanishes on every sample".into()));
            }
        }
        let eval = DMatrix::from_fn(base.len(), n, |j, k| base[j][k] / scale[k]);
        let sv = singular_values(&eval);
        let eval_condition = match sv.last() {
            Some(&lo) if lo > 0.0 => sv[0] / lo,
            _ => f64::INFINITY,
        };
        if eval_condition > EVAL_CONDITION_LIMIT {
            return Err(Error::Conditioning(format!(
                "evaluation matrix has condition number {eval_condition:e}; the samples do not resolve the basis"
            )));
        }
        let mut rows: Vec<Vec<C64>> = Vec::with_capacity(self.generators.len() * base.len());
        for g in &self.generators {
            let moved: Vec<GPoint<C64>> = self.samples.iter().map(|p| gamma_hat(g, p)).collect();
            let image = eval_rows(&self.basis, &moved)?;
            for (a, b) in image.iter().zip(&base) {
                rows.push((0..n).map(|k| (a[k] - b[k]) / scale[k]).collect());
            }
        }
        let m = DMatrix::from_fn(rows.len(), n, |j, k| rows[j][k]);
        let ns = nullspace(&m, self.svd_tol);
        let invariant_indices = (0..n)
            .filter(|&k| ns.distance_to_unit(k) < self.svd_tol.sqrt())
            .collect();
        let invariant_vectors = (0..ns.dim())
            .map(|j| (0..n).map(|k| ns.basis[(k, j)] / scale[k]).collect())
            .collect();
        Ok(InvarianceResult {
            dim: ns.dim(),
            singular_values: ns.singular_values,
            gap: ns.gap,
            eval_condition,
            invariant_indices,
            invariant_vectors,
        })
    }
}

/// `(z − 1)/(z + 1)`, an automorphism of `H` moving the axis of `z ↦ cz`.
pub fn axis_shift() -> MoebiusMap<C64> {
    MoebiusMap::new(c64(1.0, 0.0), c64(-1.0, 0.0), c64(1.0, 0.0), c64(1.0, 0.0)).expect("det = 2")
}

/// `z ↦ cz` and its conjugate `σ⁻¹ ∘ (z ↦ cz) ∘ σ` by [`axis_shift`]: two
/// hyperbolic elements of `Aut(H)` with axes `(0, ∞)` and `(−1, 1)`.
pub fn two_hyperbolic_generators(c: f64) -> Result<[MoebiusMap<C64>; 2]> {
    if !(c > 1.0) {
        return Err(Error::Invalid(format!("scaling factor c = {c} must exceed 1")));
    }
    let g = MoebiusMap::scaling(c64(c, 0.0))?;
    let h = g.conjugated_by(&axis_shift().inverse());
    Ok([g, h])
}

/// Rotation of `D` by `2π/N`, acting on `G` through the Cayley map.
pub fn elliptic_generator(n: u32) -> Result<MoebiusMap<C64>> {
    if n < 2 {
        return Err(Error::Invalid(format!("elliptic order N = {n} must be at least 2")));
    }
    let rot = MoebiusMap::rotation(2.0 * std::f64::consts::PI / n as f64);
    Ok(rot.conjugated_by(&MoebiusMap::cayley()))
}

/// `count` points of `G` obtained as `Ψ(z, w)` with `|z|, |w| <= r`.
pub fn omega_samples(seed: u64, count: usize, r: f64) -> Vec<GPoint<C64>> {
    let mut s = Sampler::new(seed);
    (0..count).map(|_| psi_omega_to_g(&s.omega_point(r))).collect()
}

/// `count` finite points of `G` from the default `G` sampler.
pub fn g_samples(seed: u64, count: usize) -> Vec<GPoint<C64>> {
    let mut s = Sampler::new(seed);
    (0..count).map(|_| s.g_point()).collect()
}

/// Two hyperbolic generators with distinct axes against the `f_{p,q}` basis, `p, q <= d`.
pub fn two_hyperbolic_experiment(d: u32, samples: usize, seed: u64) -> Result<InvarianceExperiment> {
    InvarianceExperiment::new(
        two_hyperbolic_generators(2.0)?.to_vec(),
        GFunction::fpq_grid(d),
        omega_samples(seed, samples, 0.8),
        1e-8,
    )
}

/// Elliptic rotation of order `N` against the `f_{p,q}` basis, `p, q <= d`.
pub fn elliptic_experiment(n: u32, d: u32, samples: usize, seed: u64) -> Result<InvarianceExperiment> {
    InvarianceExperiment::new(
        vec![elliptic_generator(n)?],
        GFunction::fpq_grid(d),
        omega_samples(seed, samples, 0.8),
        1e-8,
    )
}

/// `z ↦ cz` against `{1} ∪ {(w/(z − w))^j : 1 <= j <= d}`.
pub fn scaling_kernel_experiment(c: f64, d: u32, samples: usize, seed: u64) -> Result<InvarianceExperiment> {
    let mut basis = vec![GFunction::Constant];
    for j in 1..=d as usize {
        basis.push(GFunction::ScalingKernel {
            g: EntireFn::monomial(j),
        });
    }
    InvarianceExperiment::new(
        vec![MoebiusMap::scaling(c64(c, 0.0))?],
        basis,
        g_samples(seed, samples),
        1e-8,
    )
}
