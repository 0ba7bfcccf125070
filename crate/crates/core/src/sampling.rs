//! Seeded samplers for the documented sampling regions.
//!
//! Disk tests draw `|z| <= 0.8`; annulus samples are log-uniform in the
//! modulus; `G` samples have `|z|, |w| <= 1.5` and `|z − w| >= 0.25`.

use std::f64::consts::PI;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::scalar::{c64, C64};
use crate::sphere::{AutDisk, GPoint, OmegaPoint};

pub const DISK_RADIUS: f64 = 0.8;
pub const G_RADIUS: f64 = 1.5;
pub const G_SEPARATION: f64 = 0.25;

#[derive(Clone, Debug)]
pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Sampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    /// Independent stream for a named sub-experiment.
    pub fn fork(&mut self) -> Sampler {
        Sampler::new(self.rng.gen())
    }

    pub fn uniform(&mut self, lo: f64, hi: f64) -> f64 {
        self.rng.gen_range(lo..hi)
    }

    /// Uniform integer in `lo..=hi`.
    pub fn int(&mut self, lo: i64, hi: i64) -> i64 {
        self.rng.gen_range(lo..=hi)
    }

    pub fn angle(&mut self) -> f64 {
        self.rng.gen_range(0.0..2.0 * PI)
    }

    /// Uniform (by area) in `|z| <= r`.
    pub fn disk(&mut self, r: f64) -> C64 {
        let m = r * self.rng.gen::<f64>().sqrt();
        C64::from_polar(m, self.angle())
    }

    /// Uniform in the square `[-s, s]²`.
    pub fn complex(&mut self, s: f64) -> C64 {
        c64(self.rng.gen_range(-s..s), self.rng.gen_range(-s..s))
    }

    /// Modulus log-uniform in `[lo, hi]`, uniform angle.
    pub fn log_annulus(&mut self, lo: f64, hi: f64) -> C64 {
        let m = self.rng.gen_range(lo.ln()..hi.ln()).exp();
        C64::from_polar(m, self.angle())
    }

    /// A point of `A_R` away from the boundary circles.
    pub fn annulus(&mut self, r: f64) -> C64 {
        let k = r.powf(0.9);
        self.log_annulus(1.0 / k, k)
    }

    /// A point of `D*` with `e^{-8} <= |z| <= e^{-1/8}`.
    pub fn punctured(&mut self) -> C64 {
        self.log_annulus((-8.0f64).exp(), (-0.125f64).exp())
    }

    /// A point of the upper half-plane with `|z| <= r` and `Im z >= r·1e-2`.
    pub fn half_plane(&mut self, r: f64) -> C64 {
        let m = r * self.rng.gen::<f64>().sqrt();
        let t = self.rng.gen_range(0.01..PI - 0.01);
        C64::from_polar(m.max(1e-3), t)
    }

    pub fn g_point(&mut self) -> GPoint<C64> {
        loop {
            let z = self.complex(G_RADIUS);
            let w = self.complex(G_RADIUS);
            if z.norm() <= G_RADIUS && w.norm() <= G_RADIUS && (z - w).norm() >= G_SEPARATION {
                return GPoint::finite(z, w).expect("separated points lie in G");
            }
        }
    }

    /// Both coordinates in `|·| <= r < 1`, so `zw ≠ 1`.
    pub fn omega_point(&mut self, r: f64) -> OmegaPoint<C64> {
        let z = self.disk(r);
        let w = self.disk(r);
        OmegaPoint::finite(z, w).expect("points of the disk bidisk lie in Ω")
    }

    /// `e^{iθ}(z − α)/(1 − ᾱz)` with `|α| <= a`.
    pub fn aut_disk(&mut self, a: f64) -> AutDisk<C64> {
        let theta = self.angle();
        let alpha = self.disk(a);
        AutDisk::from_angle(theta, alpha).expect("|α| < 1")
    }

    /// Coefficients uniform in the square `[-1, 1]²`.
    pub fn coeffs(&mut self, count: usize) -> Vec<C64> {
        (0..count).map(|_| self.complex(1.0)).collect()
    }
}
