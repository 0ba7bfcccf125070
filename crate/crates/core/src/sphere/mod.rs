//! Riemann sphere, Möbius maps and the model spaces `Ω`, `G`.

mod covering;
mod models;
mod moebius;
mod point;

pub use covering::{
    annulus_deck_factor, covering_disk_to_annulus, covering_disk_to_punctured,
    covering_half_to_annulus, covering_half_to_punctured, principal_log,
};
pub use models::{
    danielewski_chart, gamma_hat, psi_g_to_omega, psi_omega_to_g, t_gamma_omega,
    t_gamma_omega_checked, GPoint, OmegaPoint,
};
pub use moebius::{AutDisk, AutHalfPlane, DeckGroup, DeckKind, MoebiusKind, MoebiusMap};
pub use point::{SpherePoint, PROJECTIVE_TOL};
