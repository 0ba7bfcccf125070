//! Entire functions of one variable and exact bivariate polynomials.

mod bipoly;
mod entire;
mod fpq;
mod poly;
mod wire;

pub use bipoly::{BiPoly, Slot};
pub use entire::{EntireFn, TruncatedSeries};
pub use fpq::{eval_at_reciprocal, omega_finite, BasisFpq, FpqSpan};
pub use poly::Poly;
