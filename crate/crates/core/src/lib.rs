//! Convergent Wick-type star products on the disk, annuli and the punctured disk.
//!
//! The crate is organised bottom-up:
//!
//! * [`sphere`] – Riemann-sphere points, Möbius maps, coverings, and the models `Ω`, `G`.
//! * [`function`] – entire functions and exact bivariate polynomials.
//! * [`peschl_minda`] – Peschl–Minda derivatives on disk functions.
//! * [`star`] – the coefficient family `c_n(ħ)` and the three star products.
//! * [`surface`] – elements of the annulus and punctured-disk algebras.
//! * [`rigidity`] – invariant-subspace experiments and the non-isomorphism check.
//! * [`verify`] – verification suites, JSON reports and the CLI commands.

pub mod error;
pub mod function;
pub mod linalg;
pub mod peschl_minda;
pub mod rigidity;
pub mod sampling;
pub mod scalar;
pub mod series;
pub mod sphere;
pub mod star;
pub mod surface;
pub mod verify;

pub use error::{Error, Result};
pub use scalar::{c64, cq, Scalar, C64, CQ};
