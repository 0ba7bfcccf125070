//! Numeric dimension of the invariant part of the f_{p,q} span under
//! Fuchsian actions on G.

use wickstar::rigidity::{elliptic_experiment, scaling_kernel_experiment, two_hyperbolic_experiment, GFunction};
use wickstar::Result;

fn main() -> Result<()> {
    let r = two_hyperbolic_experiment(3, 200, 1)?.invariant_dimension()?;
    println!("two hyperbolic generators, p, q <= 3: dim {} (gap {:e})", r.dim, r.gap);
    let tail: Vec<String> = r.singular_values.iter().rev().take(3).map(|s| format!("{s:.2e}")).collect();
    println!("  smallest singular values: {}", tail.join(", "));

    let r = elliptic_experiment(2, 2, 100, 1)?.invariant_dimension()?;
    let grid = GFunction::fpq_grid(2);
    let kept: Vec<String> = r
        .invariant_indices
        .iter()
        .map(|&k| match &grid[k] {
            GFunction::Fpq { p, q } => format!("f_{p}{q}"),
            other => format!("{other:?}"),
        })
        .collect();
    println!("rotation of order 2, p, q <= 2: invariant {}", kept.join(" "));

    let r = scaling_kernel_experiment(2.0, 3, 60, 1)?.invariant_dimension()?;
    println!("z -> 2z against kernels (w/(z-w))^j: dim {}", r.dim);
    Ok(())
}
