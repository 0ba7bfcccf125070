//! The disk product: the commutator of z̄ and z, exact associativity on
//! monomials, and conformal invariance.

use wickstar::function::BiPoly;
use wickstar::peschl_minda::DiskFunction;
use wickstar::sphere::AutDisk;
use wickstar::star::{associator, star_disk, Hbar, StarConfig};
use wickstar::{c64, cq, Result, CQ};

fn main() -> Result<()> {
    let h = Hbar::float(0.5, 0.0)?;
    let cfg = StarConfig::default().with_max_terms(400);
    for z in [c64(0.0, 0.0), c64(0.3, 0.1), c64(-0.6, 0.2)] {
        let a = star_disk(&DiskFunction::zbar(), &DiskFunction::z(), &h, z, &cfg)?;
        let b = star_disk(&DiskFunction::z(), &DiskFunction::zbar(), &h, z, &cfg)?;
        let x = z.norm_sqr();
        println!(
            "z = {z:.2}: [zbar, z] = {:.8} ({} terms), first-order term hbar(1-|z|^2)^2 = {:.8}",
            (a.value - b.value).re,
            a.terms_used,
            0.5 * (1.0 - x) * (1.0 - x)
        );
    }

    let hq = Hbar::new(cq(1, 2, 0, 1))?;
    let (z, w) = (BiPoly::<CQ>::z(), BiPoly::<CQ>::w());
    let zw = &z * &w;
    let assoc = associator(&w, &zw, &z, &hq, 6)?;
    println!("associator (zbar, z zbar, z) through degree 6 is zero: {}", assoc.is_zero());

    let f = DiskFunction::poly(BiPoly::from_terms([((2, 0), c64(1.0, 0.0)), ((1, 1), c64(0.0, 2.0))]));
    let g = DiskFunction::poly(BiPoly::from_terms([((0, 2), c64(1.0, 0.0)), ((1, 0), c64(-1.0, 0.0))]));
    let phi = AutDisk::from_angle(0.7, c64(0.2, -0.1))?;
    let z = c64(0.1, 0.3);
    let lhs = star_disk(
        &DiskFunction::pullback(f.clone(), phi.clone()),
        &DiskFunction::pullback(g.clone(), phi.clone()),
        &h,
        z,
        &cfg,
    )?;
    let rhs = star_disk(&f, &g, &h, phi.eval(z), &cfg)?;
    println!("conformal invariance residual: {:.2e}", (lhs.value - rhs.value).norm());
    Ok(())
}
