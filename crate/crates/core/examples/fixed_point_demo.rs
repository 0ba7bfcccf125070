//! Derivatives of an invariant function at the fixed points of a hyperbolic map.

use wickstar::function::EntireFn;
use wickstar::rigidity::{hyperbolic_fixed_point_demo, two_hyperbolic_generators};
use wickstar::sphere::{GPoint, MoebiusMap};
use wickstar::surface::scaling_kernel;
use wickstar::{c64, Result, C64};

fn main() -> Result<()> {
    let gamma = MoebiusMap::scaling(c64(2.0, 0.0))?;
    let f = scaling_kernel(EntireFn::real_polynomial(&[0.0, 1.0, 0.5]));
    let demo = hyperbolic_fixed_point_demo(&gamma, f, 4)?;
    for leg in &demo.legs {
        println!("w0 = {}, z0 = {}: |g^(j)(z0)| = {:?}", leg.w0, leg.z0, leg.derivatives);
    }
    println!("largest derivative over rounding floor: {:.2}", demo.max_noise_ratio());

    let [_, h] = two_hyperbolic_generators(2.0)?;
    let err = hyperbolic_fixed_point_demo(&h, |p: &GPoint<C64>| Ok(p.z.value().unwrap_or_default()), 2);
    println!("non-invariant input: {}", err.unwrap_err());
    Ok(())
}
