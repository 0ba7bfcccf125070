//! Small SVD helpers on complex dense matrices.

use nalgebra::{DMatrix, DVector};

use crate::error::{Error, Result};
use crate::scalar::C64;

/// Singular values, largest first.
pub fn singular_values(m: &DMatrix<C64>) -> Vec<f64> {
    if m.is_empty() {
        return Vec::new();
    }
    m.clone().svd(false, false).singular_values.iter().copied().collect()
}

/// `σ_max / σ_min` (infinite for a rank-deficient matrix).
pub fn condition_number(m: &DMatrix<C64>) -> f64 {
    let s = singular_values(m);
    match (s.first(), s.last()) {
        (Some(&hi), Some(&lo)) if lo > 0.0 => hi / lo,
        _ => f64::INFINITY,
    }
}

/// Numerical nullspace of a matrix.
#[derive(Clone, Debug)]
pub struct Nullspace {
    /// Orthonormal basis, one column per null direction.
    pub basis: DMatrix<C64>,
    /// All `ncols` singular values (padded with zeros for wide matrices), largest first.
    pub singular_values: Vec<f64>,
    /// Ratio between the smallest kept and the largest discarded singular value.
    pub gap: f64,
}

impl Nullspace {
    pub fn dim(&self) -> usize {
        self.basis.ncols()
    }

    /// Norm of the projection of `e_k` onto the nullspace.
    pub fn weight(&self, k: usize) -> f64 {
        self.basis.row(k).iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    /// Distance from the unit vector `e_k` to the nullspace.
    pub fn distance_to_unit(&self, k: usize) -> f64 {
        (1.0 - self.weight(k).powi(2)).max(0.0).sqrt()
    }
}

/// Nullspace with a threshold relative to the largest singular value.
pub fn nullspace(m: &DMatrix<C64>, rel_tol: f64) -> Nullspace {
    nullspace_below(m, |top| rel_tol * top)
}

/// Nullspace of the singular values at or below `threshold(σ_max)`.
pub fn nullspace_below(m: &DMatrix<C64>, threshold: impl Fn(f64) -> f64) -> Nullspace {
    let n = m.ncols();
    let padded = if m.nrows() < n {
        let mut p = DMatrix::zeros(n, n);
        p.view_mut((0, 0), (m.nrows(), n)).copy_from(m);
        p
    } else {
        m.clone()
    };
    let svd = padded.svd(false, true);
    let s: Vec<f64> = svd.singular_values.iter().copied().collect();
    let v_t = svd.v_t.expect("v_t was requested");
    let top = s.first().copied().unwrap_or(0.0);
    let cut = threshold(top);
    let rank = s.iter().filter(|&&x| x > cut && x > 0.0).count();
    let dim = n - rank;
    let mut basis = DMatrix::zeros(n, dim);
    for j in 0..dim {
        let row = v_t.row(rank + j);
        for i in 0..n {
            basis[(i, j)] = row[i].conj();
        }
    }
    let gap = match (rank, dim) {
        (_, 0) | (0, _) => f64::INFINITY,
        (r, _) if s[r] == 0.0 => f64::INFINITY,
        (r, _) => s[r - 1] / s[r],
    };
    Nullspace {
        basis,
        singular_values: s,
        gap,
    }
}

/// Least-squares solution of `A x = b` by truncated SVD.
#[derive(Clone, Debug)]
pub struct LeastSquares {
    pub x: DVector<C64>,
    /// `max_i |(A x − b)_i|`.
    pub residual: f64,
    pub rank: usize,
    /// Directions of `x` left undetermined by the data.
    pub free: Nullspace,
}

pub fn least_squares(a: &DMatrix<C64>, b: &DVector<C64>, rel_tol: f64) -> Result<LeastSquares> {
    if a.nrows() != b.len() {
        return Err(Error::Invalid(format!(
            "least squares: {} rows but {} right-hand sides",
            a.nrows(),
            b.len()
        )));
    }
    let svd = a.clone().svd(true, true);
    let top = svd.singular_values.iter().fold(0.0f64, |m, &x| m.max(x));
    let x = svd
        .solve(b, rel_tol * top)
        .map_err(|e| Error::Conditioning(e.to_string()))?;
    let residual = (a * &x - b).iter().fold(0.0f64, |m, z| m.max(z.norm()));
    let free = nullspace(a, rel_tol);
    Ok(LeastSquares {
        x,
        residual,
        rank: a.ncols() - free.dim(),
        free,
    })
}
