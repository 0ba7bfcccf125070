use thiserror::Error;

/// Errors raised by the library.
///
/// Domain errors (a point outside a surface, ħ on a pole) are separated from
/// representation errors so the CLI can map them onto distinct exit codes.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("ħ = {value} lies on the pole ħ = -1/{n} of the coefficient family")]
    HbarPole { value: String, n: u64 },

    #[error("ħ must be nonzero")]
    HbarZero,

    #[error("point {point} is outside {domain}")]
    OutsideDomain { point: String, domain: &'static str },

    #[error("log argument {0} lies on the branch cut of the principal logarithm")]
    BranchCut(String),

    #[error("Möbius map is singular (ad - bc = 0)")]
    SingularMoebius,

    #[error("map is not an automorphism of {0}")]
    NotAutomorphism(&'static str),

    #[error("degenerate sphere point (0, 0)")]
    DegeneratePoint,

    #[error("point at infinity is not supported here: {0}")]
    InfiniteCoordinate(&'static str),

    #[error("derivative of order {requested} exceeds usable order {usable} of the truncated series")]
    SeriesOrder { requested: usize, usable: usize },

    #[error("|t| = {modulus} is outside the tail-bound radius {rho}")]
    SeriesRadius { modulus: f64, rho: f64 },

    #[error("exact-finite summation requested but the series does not terminate")]
    NotTerminating,

    #[error("linear-algebra conditioning failure: {0}")]
    Conditioning(String),

    #[error("function is not invariant under the given map (residual {residual:e})")]
    NotInvariant { residual: f64 },

    #[error("invalid input: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn outside(point: impl std::fmt::Display, domain: &'static str) -> Self {
        Error::OutsideDomain {
            point: point.to_string(),
            domain,
        }
    }

    /// True for errors that describe inputs outside the mathematical domain.
    pub fn is_domain(&self) -> bool {
        matches!(
            self,
            Error::HbarPole { .. }
                | Error::HbarZero
                | Error::OutsideDomain { .. }
                | Error::BranchCut(_)
                | Error::SeriesRadius { .. }
                | Error::InfiniteCoordinate(_)
        )
    }
}
