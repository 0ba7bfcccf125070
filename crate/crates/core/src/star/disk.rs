use crate::error::{Error, Result};
use crate::function::BiPoly;
use crate::peschl_minda::{check_disk, DiskFunction};
use crate::scalar::{Scalar, C64};
use crate::star::hbar::Hbar;
use crate::star::sum::{min_order, plan_terms, StarConfig, StarMode, StarResult, Summer};

/// `(f ⋆ g)(z) = Σ_n c_n(ħ)/n! · Dⁿg(z) · D̄ⁿf(z)`.
///
/// The first factor takes `D̄ⁿ`, the second `Dⁿ`. Internally the sum runs over
/// normalized derivatives with weights `c_n n!`.
pub fn star_disk(
    f: &DiskFunction,
    g: &DiskFunction,
    h: &Hbar<C64>,
    z: C64,
    cfg: &StarConfig,
) -> Result<StarResult> {
    check_disk(z)?;
    let order = min_order(f.anti_order(), g.holo_order());
    let (count, finite) = plan_terms(order, cfg)?;
    let jf = f.normalized_jets(z, count, cfg.route)?;
    let jg = g.normalized_jets(z, count, cfg.route)?;
    let weights = h.weights(count);
    let mut sum = Summer::new(cfg, finite);
    for n in 0..count {
        let (a, b) = (jf.anti[n], jg.holo[n]);
        let (ea, eb) = (jf.anti_bound[n], jg.holo_bound[n]);
        let wn = weights[n];
        let term = wn * a * b;
        let bound = wn.norm() * (a.norm() * eb + ea * b.norm() + ea * eb);
        if sum.push(term, bound) {
            break;
        }
    }
    Ok(sum.finish())
}

/// Exact disk product of two polynomials when the series terminates after the
/// `n = 0` term, i.e. `f` holomorphic or `g` antiholomorphic.
pub fn star_disk_poly_exact<S: Scalar>(
    f: &BiPoly<S>,
    g: &BiPoly<S>,
    _h: &Hbar<S>,
    mode: StarMode,
) -> Result<BiPoly<S>> {
    if f.is_holomorphic() || g.is_antiholomorphic() {
        return Ok(f * g);
    }
    match mode {
        StarMode::ExactFinite => Err(Error::NotTerminating),
        StarMode::Truncated => Err(Error::Invalid(
            "non-terminating polynomial products are returned as truncated series; use star_series"
                .into(),
        )),
    }
}

/// Bivariate Taylor series around the origin, exact through total degree `prec`
/// (`None`: an exact polynomial).
#[derive(Clone, Debug, PartialEq)]
pub struct BiSeries<S: Scalar> {
    pub poly: BiPoly<S>,
    pub prec: Option<u32>,
}

impl<S: Scalar> BiSeries<S> {
    pub fn exact(poly: BiPoly<S>) -> Self {
        BiSeries { poly, prec: None }
    }

    pub fn truncated(poly: BiPoly<S>, prec: u32) -> Self {
        BiSeries {
            poly: poly.truncate(prec),
            prec: Some(prec),
        }
    }

    /// Coefficients through total degree `k`, or an error if they are not known.
    pub fn through(&self, k: u32) -> Result<BiPoly<S>> {
        if let Some(p) = self.prec {
            if p < k {
                return Err(Error::Invalid(format!(
                    "series known through degree {p}, degree {k} requested"
                )));
            }
        }
        Ok(self.poly.truncate(k))
    }
}

/// Taylor coefficients of `f ⋆ g` through total degree `target`.
///
/// The product conserves the charge `i − j`, so the `n`-th term has degree at
/// least `2n + qlo(f) − qhi(g)` and only finitely many terms contribute. `D̄ⁿ`
/// lowers the degree by at most `n`, which costs `n` degrees of input precision.
pub fn star_series<S: Scalar>(
    f: &BiSeries<S>,
    g: &BiSeries<S>,
    h: &Hbar<S>,
    target: u32,
) -> Result<BiSeries<S>> {
    let (Some((qlo_f, _)), Some((_, qhi_g))) = (f.poly.charge_range(), g.poly.charge_range())
    else {
        return Ok(BiSeries::truncated(BiPoly::zero(), target));
    };
    let t = target as i64;
    let n_max = ((t - qlo_f + qhi_g).max(-1) / 2).max(0) as usize;
    let weights = h.weights(n_max + 1);
    let mut out = BiPoly::zero();
    for (n, wn) in weights.iter().enumerate() {
        let ni = n as i64;
        if 2 * ni + qlo_f - qhi_g > t {
            break;
        }
        let m1 = (ni + qlo_f).max(0);
        let m2 = (ni - qhi_g).max(0);
        let p1 = f.prec.map(|p| p as i64 - ni);
        let p2 = g.prec.map(|p| p as i64 - ni);
        let known = match (p1, p2) {
            (Some(a), Some(b)) => Some((a + m2).min(b + m1)),
            (Some(a), None) => Some(a + m2),
            (None, Some(b)) => Some(b + m1),
            (None, None) => None,
        };
        if let Some(k) = known {
            if k < t {
                return Err(Error::Invalid(format!(
                    "term {n} of the star product is only known through degree {k}, {t} needed"
                )));
            }
        }
        let keep = |s: BiPoly<S>, p: Option<i64>| match p {
            Some(p) if p < 0 => BiPoly::zero(),
            Some(p) => s.truncate(p as u32),
            None => s,
        };
        let dbar_f = keep(f.poly.pm_bar_normalized(n as u32), p1).truncate(target);
        let d_g = keep(g.poly.pm_normalized(n as u32), p2).truncate(target);
        let term = dbar_f.mul_truncated(&d_g, target);
        out = &out + &term.scale(wn);
    }
    Ok(BiSeries::truncated(out, target))
}

/// Degree through which the inner product of an associator must be known.
fn inner_precision(k: u32, qlo: i64, qhi: i64) -> u32 {
    let n_out = ((k as i64 - qlo + qhi).max(0) / 2) as u32;
    k + n_out
}

/// `(f⋆g)⋆h − f⋆(g⋆h)` through total degree `k`, exact in the coefficient field.
pub fn associator<S: Scalar>(
    f: &BiPoly<S>,
    g: &BiPoly<S>,
    h: &BiPoly<S>,
    hbar: &Hbar<S>,
    k: u32,
) -> Result<BiPoly<S>> {
    let (Some(cf), Some(cg), Some(ch)) = (f.charge_range(), g.charge_range(), h.charge_range())
    else {
        return Ok(BiPoly::zero());
    };
    let (sf, sg, sh) = (
        BiSeries::exact(f.clone()),
        BiSeries::exact(g.clone()),
        BiSeries::exact(h.clone()),
    );
    let p_left = inner_precision(k, cf.0 + cg.0, ch.1);
    let fg = star_series(&sf, &sg, hbar, p_left)?;
    let left = star_series(&fg, &sh, hbar, k)?;
    let p_right = inner_precision(k, cf.0, cg.1 + ch.1);
    let gh = star_series(&sg, &sh, hbar, p_right)?;
    let right = star_series(&sf, &gh, hbar, k)?;
    Ok(&left.poly - &right.poly)
}
