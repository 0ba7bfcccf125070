//! The coefficient family `c_n(ħ)` and the star products on `D`, `A_R` and `D*`.

mod disk;
mod hbar;
mod profile;
mod radial;
mod sum;

pub use disk::{associator, star_disk, star_disk_poly_exact, star_series, BiSeries};
pub use hbar::{c_n, factorial_big, Hbar, POLE_TOL};
pub use profile::{cauchy_riemann_residual, star_hbar_profile, StarOp};
pub use radial::{
    star_annulus, star_annulus_symbolic, star_punctured, star_punctured_symbolic,
    star_punctured_with, FactorialSeries, PuncturedWeight,
};
pub use sum::{StarConfig, StarMode, StarResult};
