//! The coefficient family c_n(hbar), its poles, and products as functions of hbar.

use wickstar::function::EntireFn;
use wickstar::star::{cauchy_riemann_residual, star_hbar_profile, Hbar, StarConfig, StarOp};
use wickstar::{c64, cq, Result};

fn main() -> Result<()> {
    let h = Hbar::new(cq(1, 2, 0, 1))?;
    for n in 0..6 {
        println!("c_{n}(1/2) = {}", h.c_n(n));
    }
    for bad in [0.0, -1.0, -0.5, -0.05] {
        println!("hbar = {bad}: {}", Hbar::float(bad, 0.0).unwrap_err());
    }

    let op = StarOp::Annulus {
        g: EntireFn::identity(),
        gt: EntireFn::exp(c64(1.0, 0.0)),
        w: c64(0.4, 0.0),
    };
    let hs = [c64(0.1, 0.0), c64(-0.25, 0.0), c64(0.5, 0.5), c64(-1.0 / 3.0, 0.0)];
    for (h, r) in hs.iter().zip(star_hbar_profile(&op, &hs, &StarConfig::default())) {
        match r {
            Ok(r) => println!("hbar = {h:.3}: {:.10}", r.value),
            Err(e) => println!("hbar = {h:.3}: {e}"),
        }
    }
    let cr = cauchy_riemann_residual(&op, c64(0.3, 0.1), 1e-4, &StarConfig::default())?;
    println!("Cauchy-Riemann residual in hbar: {cr:.1e}");
    Ok(())
}
