//! Products on the annulus and the punctured disk in the chart variable, their
//! symbolic closed forms, and the two punctured-disk weights.

use wickstar::function::{EntireFn, Poly};
use wickstar::star::{
    star_annulus, star_annulus_symbolic, FactorialSeries, star_punctured_symbolic, star_punctured_with, Hbar, PuncturedWeight,
    StarConfig,
};
use wickstar::{c64, Result, Scalar, CQ};

fn show(p: &Poly<CQ>) -> String {
    let terms: Vec<String> = p
        .coeffs()
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(k, c)| format!("({})w^{k}", c.re))
        .collect();
    if terms.is_empty() { "0".into() } else { terms.join(" + ") }
}

fn series(s: &FactorialSeries<CQ>) -> String {
    let terms: Vec<String> = s.terms().iter().enumerate().map(|(n, p)| format!("c_{n}·[{}]", show(p))).collect();
    terms.join(" + ")
}

fn main() -> Result<()> {
    let id = Poly::<CQ>::identity();
    let a = star_annulus_symbolic(&id, &id);
    println!("annulus   id * id = {}", series(&a));
    let p = star_punctured_symbolic(&id, &id, PuncturedWeight::Derived);
    println!("punctured id * id = {}", series(&p));

    let h = Hbar::float(0.3, 0.2)?;
    let w = c64(0.7, 0.0);
    let cfg = StarConfig::default();
    let e = EntireFn::exp(c64(1.0, 0.0));
    let r = star_annulus(&e, &e, &h, w, &cfg)?;
    println!(
        "annulus e^t * e^t at w = 0.7: {:.10} ({} terms, tail {:.1e}, converged {})",
        r.value, r.terms_used, r.tail_estimate, r.converged
    );

    let sq = EntireFn::monomial(2);
    for weight in [PuncturedWeight::Derived, PuncturedWeight::Printed] {
        let v = star_punctured_with(&sq, &sq, &h, c64(1.5, 0.0), &StarConfig::exact_finite(), weight)?;
        println!("punctured t^2 * t^2 at w = 1.5 with {weight:?} weight: {:.8}", v.value);
    }
    Ok(())
}
