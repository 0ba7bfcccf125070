//! Elements of the annulus and punctured-disk algebras, the maps between
//! annuli, lifts to the disk, and invariance of kernels on G.

use wickstar::function::EntireFn;
use wickstar::peschl_minda::aux_p;
use wickstar::sampling::Sampler;
use wickstar::sphere::{covering_disk_to_annulus, GPoint, MoebiusMap};
use wickstar::star::{star_annulus_symbolic, Hbar, StarConfig};
use wickstar::surface::{
    chart_f_r, gamma_hat_invariant, iso_psi, lift_to_disk, scaling_kernel, transport_t, translation_kernel,
    AnnulusElement, SurfaceTarget,
};
use wickstar::{c64, Result, C64};

fn main() -> Result<()> {
    let g = EntireFn::real_polynomial(&[1.0, -1.0, 0.5]);
    let e = transport_t(g.clone(), SurfaceTarget::Annulus { r: 2.0 })?;
    let z = c64(0.9, 0.9);
    println!("(g∘f_2)(z) = {:.8}; radial: {:.8}", e.eval(z)?, e.eval(c64(z.norm(), 0.0))?);

    let lifted = lift_to_disk(&e);
    let u = c64(0.2, -0.3);
    println!(
        "lift at u: {:.10}, element at pi(u): {:.10}",
        lifted.value(u)?,
        e.eval(covering_disk_to_annulus(2.0, u)?)?
    );
    println!("f_2(pi(u)) = {:.10}, p(u) = {:.10}", chart_f_r(2.0, covering_disk_to_annulus(2.0, u)?)?, aux_p(u));

    let a = AnnulusElement::new(2.0, g.clone())?;
    let b = AnnulusElement::new(2.0, EntireFn::identity())?;
    let h = Hbar::float(0.4, 0.0)?;
    let (pa, pb) = (iso_psi(&a, 3.0)?, iso_psi(&b, 3.0)?);
    let z = c64(1.3, 0.4);
    let product = pa.star(&pb, &h, z, &StarConfig::exact_finite())?.value;
    let symbolic = star_annulus_symbolic(g.as_polynomial().unwrap(), EntireFn::identity().as_polynomial().unwrap())
        .eval(&h, &chart_f_r(3.0, z)?);
    println!("Psi(a) * Psi(b) = {product:.10}, Psi(a * b) = {symbolic:.10}");

    let mut s = Sampler::new(3);
    let pts: Vec<GPoint<C64>> = (0..50).map(|_| s.g_point()).collect();
    let scale = MoebiusMap::scaling(c64(2.0, 0.0))?;
    let shift = MoebiusMap::translation(c64(1.0, 0.0));
    let r = gamma_hat_invariant(scaling_kernel(g.clone()), &scale, &pts, 1e-12);
    println!("g(w/(z-w)) under z -> 2z: pass {} (residual {:.1e})", r.pass, r.max_residual);
    let r = gamma_hat_invariant(translation_kernel(g), &shift, &pts, 1e-12);
    println!("g(1/(z-w)) under z -> z+1: pass {} (residual {:.1e})", r.pass, r.max_residual);
    let r = gamma_hat_invariant(|p: &GPoint<C64>| Ok(p.z.value().unwrap()), &scale, &pts, 1e-12);
    println!("the coordinate z under z -> 2z: pass {} (residual {:.1e})", r.pass, r.max_residual);
    Ok(())
}
