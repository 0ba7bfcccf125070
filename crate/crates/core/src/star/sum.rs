use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::peschl_minda::PmRoute;
use crate::scalar::{pair, C64};

/// How the factorial series is summed.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum StarMode {
    /// Sum the finitely many nonzero terms; refused when the series does not terminate.
    ExactFinite,
    #[default]
    Truncated,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct StarConfig {
    pub max_terms: usize,
    pub tol: f64,
    pub mode: StarMode,
    /// Derivative path for the disk product.
    pub route: PmRoute,
}

impl Default for StarConfig {
    fn default() -> Self {
        StarConfig {
            max_terms: 64,
            tol: 1e-12,
            mode: StarMode::Truncated,
            route: PmRoute::Closed,
        }
    }
}

impl StarConfig {
    pub fn exact_finite() -> Self {
        StarConfig {
            mode: StarMode::ExactFinite,
            ..Self::default()
        }
    }

    pub fn with_max_terms(self, max_terms: usize) -> Self {
        StarConfig { max_terms, ..self }
    }

    pub fn with_route(self, route: PmRoute) -> Self {
        StarConfig { route, ..self }
    }

    pub fn with_tol(self, tol: f64) -> Self {
        StarConfig { tol, ..self }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct StarResult {
    #[serde(with = "pair")]
    pub value: C64,
    pub terms_used: usize,
    pub tail_estimate: f64,
    pub converged: bool,
}

/// Number of terms to evaluate: `Some(N + 1)` when the series is known to stop at `N`.
pub(crate) fn plan_terms(order: Option<usize>, cfg: &StarConfig) -> Result<(usize, bool)> {
    match (order, cfg.mode) {
        (Some(n), _) => Ok((n + 1, true)),
        (None, StarMode::ExactFinite) => Err(Error::NotTerminating),
        (None, StarMode::Truncated) => Ok((cfg.max_terms.max(1), false)),
    }
}

/// `min` over optional orders where `None` means unbounded.
pub(crate) fn min_order(a: Option<usize>, b: Option<usize>) -> Option<usize> {
    match (a, b) {
        (Some(x), Some(y)) => Some(x.min(y)),
        (Some(x), None) | (None, Some(x)) => Some(x),
        (None, None) => None,
    }
}

/// Accumulates a factorial series under the truncation rule: stop after three
/// consecutive terms below `tol·(1 + max |partial sum|)`.
pub(crate) struct Summer {
    tol: f64,
    finite: bool,
    sum: C64,
    running_max: f64,
    streak: usize,
    terms: usize,
    recent: [f64; 3],
    certified: f64,
    stopped: bool,
}

impl Summer {
    pub fn new(cfg: &StarConfig, finite: bool) -> Self {
        Summer {
            tol: cfg.tol,
            finite,
            sum: C64::new(0.0, 0.0),
            running_max: 0.0,
            streak: 0,
            terms: 0,
            recent: [f64::NAN; 3],
            certified: 0.0,
            stopped: false,
        }
    }

    /// Add a term with an error bound on it; returns `true` once summation may stop.
    pub fn push(&mut self, term: C64, bound: f64) -> bool {
        self.sum += term;
        self.terms += 1;
        self.certified += bound;
        self.running_max = self.running_max.max(self.sum.norm());
        self.recent = [self.recent[1], self.recent[2], term.norm()];
        if self.finite {
            return false;
        }
        if term.norm() < self.tol * (1.0 + self.running_max) {
            self.streak += 1;
        } else {
            self.streak = 0;
        }
        if self.streak >= 3 {
            self.stopped = true;
        }
        self.stopped
    }

    fn geometric_tail(&self) -> f64 {
        let [a, b, c] = self.recent;
        if c == 0.0 && b == 0.0 {
            return 0.0;
        }
        let mut r: f64 = 0.0;
        if a > 0.0 && b.is_finite() {
            r = r.max(b / a);
        }
        if b > 0.0 {
            r = r.max(c / b);
        }
        if r < 1.0 && r.is_finite() {
            c * r / (1.0 - r)
        } else {
            f64::INFINITY
        }
    }

    pub fn finish(self) -> StarResult {
        if self.finite {
            return StarResult {
                value: self.sum,
                terms_used: self.terms,
                tail_estimate: self.certified,
                converged: true,
            };
        }
        let tail = if self.stopped {
            self.geometric_tail()
                .min(3.0 * self.tol * (1.0 + self.running_max))
        } else {
            self.geometric_tail()
        };
        StarResult {
            value: self.sum,
            terms_used: self.terms,
            tail_estimate: tail + self.certified,
            converged: self.stopped,
        }
    }
}
