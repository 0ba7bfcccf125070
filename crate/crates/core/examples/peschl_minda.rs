//! Peschl–Minda derivatives: the closed forms for g∘p and g∘q against the
//! definition through disk automorphisms.

use wickstar::function::EntireFn;
use wickstar::peschl_minda::{aux_p, aux_q, pm_closed_form_p, pm_closed_form_q, pm_derivative_jet, DiskFunction};
use wickstar::{c64, Result};

fn main() -> Result<()> {
    let z = c64(0.25, 0.4);
    let g = EntireFn::real_polynomial(&[0.0, 1.0, 0.0, 2.0]);
    println!("p(z) = {:.6}, q(z) = {:.6}", aux_p(z), aux_q(z));
    for n in 0..4 {
        let closed = pm_closed_form_p(&g, n, z)?;
        let jet = pm_derivative_jet(&DiskFunction::ComposedP(g.clone()), n, z, 24)?;
        println!(
            "n = {n}: D^n(g∘p) closed {:.8}, by definition {:.8}",
            closed.0, jet.0
        );
    }
    for n in 0..4 {
        let closed = pm_closed_form_q(&g, n, z)?;
        let jet = pm_derivative_jet(&DiskFunction::ComposedQ(g.clone()), n, z, 24)?;
        println!("n = {n}: Dbar^n(g∘q) closed {:.8}, by definition {:.8}", closed.1, jet.1);
    }
    Ok(())
}
