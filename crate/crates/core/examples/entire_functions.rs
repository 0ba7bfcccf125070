//! Entire functions with exact derivatives, a truncated series with a tail
//! bound, bivariate polynomials and the f_{p,q} family.

use wickstar::function::{BasisFpq, BiPoly, EntireFn, FpqSpan, Slot};
use wickstar::sphere::OmegaPoint;
use wickstar::{c64, cq, Result};

fn main() -> Result<()> {
    let cube = EntireFn::monomial(3);
    println!("(t^3)'' at t = 2: {}", cube.derivative(2)?.value(c64(2.0, 0.0))?);

    let e2 = EntireFn::exp(c64(2.0, 0.0));
    println!("(e^2t)''' at 0: {}", e2.derivative(3)?.value(c64(0.0, 0.0))?);

    // degree-5 Taylor polynomial of exp with |a_k| <= 1/2^k for k > 5
    let coeffs: Vec<_> = (0..=5u32).map(|k| c64(1.0 / (1..=k).product::<u32>().max(1) as f64, 0.0)).collect();
    let taylor = EntireFn::series(coeffs, 2.0, 1.0)?;
    let (v, bound) = taylor.eval(c64(0.5, 0.0))?;
    println!("truncated exp(0.5) = {:.10} +- {bound:.2e} (exact {:.10})", v.re, 0.5f64.exp());
    println!("evaluating outside the tail radius: {:?}", taylor.eval(c64(3.0, 0.0)).err());

    let f = BiPoly::monomial(cq(1, 1, 0, 1), 2, 1);
    println!("d/dz z^2 w = {:?}", f.wirtinger(Slot::Z));
    println!("d/dw z^2 w = {:?}", f.wirtinger(Slot::W));

    let half = cq(1, 2, 0, 1);
    println!("f_11(1/2, 1/2) = {}", BasisFpq::new(1, 1).eval(&half, &half)?);

    let span = FpqSpan::from_terms([(BasisFpq::new(1, 1), c64(1.0, 0.0)), (BasisFpq::new(2, 0), c64(0.5, 0.0))]);
    let p = OmegaPoint::finite(c64(0.3, 0.1), c64(-0.2, 0.4))?;
    let image = span.z2_involution();
    println!("F(1/z, 1/w) via the involution: {:.6}", image.eval_projective(&p));
    println!("F(1/z, 1/w) directly:           {:.6}", wickstar::function::eval_at_reciprocal(&span, &p)?);
    Ok(())
}
