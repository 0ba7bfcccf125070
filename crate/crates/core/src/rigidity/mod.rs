//! Invariant-subspace experiments under Fuchsian actions on `G`, the
//! fixed-point derivative argument, and the annulus versus punctured-disk
//! non-isomorphism check.

mod fixed_point;
mod invariance;
mod obstruction;
mod spec;

pub use fixed_point::{hyperbolic_fixed_point_demo, FixedPointDemo, FixedPointLeg, CIRCLE_RADIUS};
pub use invariance::{
    axis_shift, elliptic_experiment, elliptic_generator, g_samples, omega_samples,
    scaling_kernel_experiment, two_hyperbolic_experiment, two_hyperbolic_generators, GFunction,
    InvarianceExperiment, InvarianceResult, EVAL_CONDITION_LIMIT,
};
pub use obstruction::{
    default_hbar_grid, obstruction_check, ObstructionReport, Verdict, FIT_CONDITION_LIMIT,
    OBSTRUCTION_TOL,
};
pub use spec::{
    bundled_names, bundled_spec, BasisSpec, GeneratorSpec, InvariantDimensionReport, RigidityReport,
    RigiditySpec, SampleSpec,
};
