use rayon::prelude::*;

use crate::error::Result;
use crate::function::EntireFn;
use crate::peschl_minda::DiskFunction;
use crate::scalar::C64;
use crate::star::disk::star_disk;
use crate::star::hbar::Hbar;
use crate::star::radial::{star_annulus, star_punctured};
use crate::star::sum::{StarConfig, StarResult};

/// One of the three products together with its inputs and evaluation point.
#[derive(Clone, Debug, PartialEq)]
pub enum StarOp {
    Disk { f: DiskFunction, g: DiskFunction, z: C64 },
    Annulus { g: EntireFn, gt: EntireFn, w: C64 },
    Punctured { g: EntireFn, gt: EntireFn, w: C64 },
}

impl StarOp {
    pub fn eval(&self, h: &Hbar<C64>, cfg: &StarConfig) -> Result<StarResult> {
        match self {
            StarOp::Disk { f, g, z } => star_disk(f, g, h, *z, cfg),
            StarOp::Annulus { g, gt, w } => star_annulus(g, gt, h, *w, cfg),
            StarOp::Punctured { g, gt, w } => star_punctured(g, gt, h, *w, cfg),
        }
    }

    /// Evaluate at a raw ħ value, applying the domain guard.
    pub fn eval_at(&self, h: C64, cfg: &StarConfig) -> Result<StarResult> {
        self.eval(&Hbar::new(h)?, cfg)
    }
}

/// Evaluate `op` for every ħ sample; failures are kept per sample, in input order.
pub fn star_hbar_profile(op: &StarOp, hs: &[C64], cfg: &StarConfig) -> Vec<Result<StarResult>> {
    hs.par_iter().map(|&h| op.eval_at(h, cfg)).collect()
}

/// Discrete Cauchy–Riemann residual `|∂_x F + i ∂_y F|` at `h0` with central
/// differences of step `delta`; vanishes to `O(δ²)` for holomorphic profiles.
pub fn cauchy_riemann_residual(op: &StarOp, h0: C64, delta: f64, cfg: &StarConfig) -> Result<f64> {
    let shifts = [
        C64::new(delta, 0.0),
        C64::new(-delta, 0.0),
        C64::new(0.0, delta),
        C64::new(0.0, -delta),
    ];
    let hs: Vec<C64> = shifts.iter().map(|s| h0 + s).collect();
    let vals = star_hbar_profile(op, &hs, cfg)
        .into_iter()
        .map(|r| r.map(|s| s.value))
        .collect::<Result<Vec<_>>>()?;
    let dx = (vals[0] - vals[1]) / (2.0 * delta);
    let dy = (vals[2] - vals[3]) / (2.0 * delta);
    Ok((dx + C64::new(0.0, 1.0) * dy).norm())
}
