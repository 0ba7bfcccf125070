//! JSON experiment specifications for the `rigidity` command.
//!
//! ```json
//! {"experiment": "invariant-dimension",
//!  "generators": [{"kind": "two-hyperbolic", "c": 2.0}],
//!  "basis": {"kind": "fpq", "d": 3},
//!  "samples": {"region": "omega", "count": 200, "seed": 1}}
//! ```

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::function::EntireFn;
use crate::scalar::{c64, pair, C64};
use crate::sphere::MoebiusMap;
use crate::star::Hbar;

use super::fixed_point::{hyperbolic_fixed_point_demo, FixedPointDemo};
use super::invariance::{
    elliptic_generator, g_samples, omega_samples, two_hyperbolic_generators, GFunction,
    InvarianceExperiment, InvarianceResult,
};
use super::obstruction::{obstruction_check, ObstructionReport};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case", deny_unknown_fields)]
pub enum GeneratorSpec {
    /// `z ↦ cz`.
    Scaling { c: f64 },
    /// `z ↦ z + t`.
    Translation {
        #[serde(with = "pair")]
        t: C64,
    },
    /// `z ↦ cz` together with its conjugate along a second axis.
    TwoHyperbolic { c: f64 },
    /// Rotation of the disk by `2π/N`.
    Elliptic { n: u32 },
    /// `(az + b)/(cz + d)`.
    Moebius {
        #[serde(with = "pair")]
        a: C64,
        #[serde(with = "pair")]
        b: C64,
        #[serde(with = "pair")]
        c: C64,
        #[serde(with = "pair")]
        d: C64,
    },
}

impl GeneratorSpec {
    pub fn build(&self) -> Result<Vec<MoebiusMap<C64>>> {
        Ok(match self {
            GeneratorSpec::Scaling { c } => vec![MoebiusMap::scaling(c64(*c, 0.0))?],
            GeneratorSpec::Translation { t } => vec![MoebiusMap::translation(*t)],
            GeneratorSpec::TwoHyperbolic { c } => two_hyperbolic_generators(*c)?.to_vec(),
            GeneratorSpec::Elliptic { n } => vec![elliptic_generator(*n)?],
            GeneratorSpec::Moebius { a, b, c, d } => vec![MoebiusMap::new(*a, *b, *c, *d)?],
        })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case", deny_unknown_fields)]
pub enum BasisSpec {
    /// `f_{p,q}`, `p, q <= d`.
    Fpq { d: u32 },
    /// `1` and `(w/(z − w))^j`, `j <= d`.
    ScalingKernels { d: u32 },
    Functions { functions: Vec<GFunction> },
}

impl BasisSpec {
    pub fn build(&self) -> Vec<GFunction> {
        match self {
            BasisSpec::Fpq { d } => GFunction::fpq_grid(*d),
            BasisSpec::ScalingKernels { d } => std::iter::once(GFunction::Constant)
                .chain((1..=*d as usize).map(|j| GFunction::ScalingKernel {
                    g: EntireFn::monomial(j),
                }))
                .collect(),
            BasisSpec::Functions { functions } => functions.clone(),
        }
    }
}

fn default_omega_radius() -> f64 {
    0.8
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "region", rename_all = "kebab-case", deny_unknown_fields)]
pub enum SampleSpec {
    /// Images in `G` of points of `Ω` with `|z|, |w| <= r`.
    Omega {
        count: usize,
        seed: u64,
        #[serde(default = "default_omega_radius")]
        r: f64,
    },
    /// Finite points of `G` with `|z|, |w| <= 1.5`, `|z − w| >= 0.25`.
    G { count: usize, seed: u64 },
}

fn default_svd_tol() -> f64 {
    1e-8
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "experiment", rename_all = "kebab-case", deny_unknown_fields)]
pub enum RigiditySpec {
    InvariantDimension {
        generators: Vec<GeneratorSpec>,
        basis: BasisSpec,
        samples: SampleSpec,
        #[serde(default = "default_svd_tol")]
        svd_tol: f64,
    },
    Obstruction {
        #[serde(rename = "R")]
        r: f64,
        #[serde(with = "pair::vec")]
        hbar: Vec<C64>,
        degree: u32,
    },
    FixedPoint {
        generator: GeneratorSpec,
        function: GFunction,
        order: usize,
    },
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct InvariantDimensionReport {
    pub basis: Vec<GFunction>,
    #[serde(flatten)]
    pub result: InvarianceResult,
    /// The basis elements at `invariant_indices`.
    pub invariant_basis: Vec<GFunction>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "experiment", rename_all = "kebab-case")]
pub enum RigidityReport {
    InvariantDimension(InvariantDimensionReport),
    Obstruction(ObstructionReport),
    FixedPoint(FixedPointDemo),
}

impl RigidityReport {
    /// `index,singular_value` lines, when the experiment has a spectrum.
    pub fn spectrum_csv(&self) -> Option<String> {
        match self {
            RigidityReport::InvariantDimension(r) => {
                let mut s = String::from("index,singular_value\n");
                for (k, v) in r.result.singular_values.iter().enumerate() {
                    s.push_str(&format!("{k},{v:e}\n"));
                }
                Some(s)
            }
            _ => None,
        }
    }
}

impl RigiditySpec {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Invalid(format!("experiment spec: {e}")))
    }

    pub fn run(&self) -> Result<RigidityReport> {
        match self {
            RigiditySpec::InvariantDimension {
                generators,
                basis,
                samples,
                svd_tol,
            } => {
                let mut maps = Vec::new();
                for g in generators {
                    maps.extend(g.build()?);
                }
                let points = match samples {
                    SampleSpec::Omega { count, seed, r } => {
                        if !(*r > 0.0 && *r < 1.0) {
                            return Err(Error::Invalid(format!("sample radius r = {r} must lie in (0, 1)")));
                        }
                        omega_samples(*seed, *count, *r)
                    }
                    SampleSpec::G { count, seed } => g_samples(*seed, *count),
                };
                let basis = basis.build();
                let result = InvarianceExperiment::new(maps, basis.clone(), points, *svd_tol)?.invariant_dimension()?;
                let invariant_basis = result.invariant_indices.iter().map(|&k| basis[k].clone()).collect();
                Ok(RigidityReport::InvariantDimension(InvariantDimensionReport {
                    basis,
                    result,
                    invariant_basis,
                }))
            }
            RigiditySpec::Obstruction { r, hbar, degree } => {
                let hs = hbar.iter().map(|&h| Hbar::new(h)).collect::<Result<Vec<_>>>()?;
                Ok(RigidityReport::Obstruction(obstruction_check(*r, &hs, *degree)?))
            }
            RigiditySpec::FixedPoint {
                generator,
                function,
                order,
            } => {
                let maps = generator.build()?;
                let [gamma] = maps.as_slice() else {
                    return Err(Error::Invalid("the fixed-point demo takes a single generator".into()));
                };
                let f = |p: &_| function.eval(p);
                Ok(RigidityReport::FixedPoint(hyperbolic_fixed_point_demo(gamma, f, *order)?))
            }
        }
    }
}

const BUNDLED: &[(&str, &str)] = &[
    ("two-hyperbolic-d3", include_str!("../../specs/two-hyperbolic-d3.json")),
    ("elliptic-N2-d2", include_str!("../../specs/elliptic-N2-d2.json")),
    ("annulus-punctured-obstruction", include_str!("../../specs/annulus-punctured-obstruction.json")),
    ("scaling-fixed-point", include_str!("../../specs/scaling-fixed-point.json")),
];

pub fn bundled_names() -> Vec<&'static str> {
    BUNDLED.iter().map(|(n, _)| *n).collect()
}

pub fn bundled_spec(name: &str) -> Result<RigiditySpec> {
    let (_, text) = BUNDLED.iter().find(|(n, _)| *n == name).ok_or_else(|| {
        Error::Invalid(format!("no bundled spec {name:?}; known: {}", bundled_names().join(", ")))
    })?;
    RigiditySpec::from_json(text)
}
