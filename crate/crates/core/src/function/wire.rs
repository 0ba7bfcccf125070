//! JSON mini-language for entire functions:
//! `{"type":"poly","coeffs":[[re,im],...]}`, `{"type":"exp","scale":[re,im]}`,
//! `{"type":"series","coeffs":[...],"rho":ρ,"C":C}`.

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::function::entire::{EntireFn, TruncatedSeries};
use crate::function::poly::Poly;
use crate::scalar::{c64, C64};

#[derive(Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase", deny_unknown_fields)]
enum Wire {
    Poly {
        coeffs: Vec<[f64; 2]>,
    },
    Exp {
        scale: [f64; 2],
        #[serde(default = "unit", skip_serializing_if = "is_unit")]
        coeff: [f64; 2],
    },
    Series {
        coeffs: Vec<[f64; 2]>,
        rho: f64,
        #[serde(rename = "C")]
        c: f64,
    },
}

fn unit() -> [f64; 2] {
    [1.0, 0.0]
}

fn is_unit(v: &[f64; 2]) -> bool {
    *v == [1.0, 0.0]
}

fn to_pairs(cs: &[C64]) -> Vec<[f64; 2]> {
    cs.iter().map(|z| [z.re, z.im]).collect()
}

fn from_pairs(cs: &[[f64; 2]]) -> Vec<C64> {
    cs.iter().map(|&[re, im]| c64(re, im)).collect()
}

impl Serialize for EntireFn {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let wire = match self {
            EntireFn::Polynomial(p) => Wire::Poly {
                coeffs: to_pairs(p.coeffs()),
            },
            EntireFn::Exp { coeff, scale } => Wire::Exp {
                scale: [scale.re, scale.im],
                coeff: [coeff.re, coeff.im],
            },
            EntireFn::TruncatedSeries(t) => Wire::Series {
                coeffs: to_pairs(t.coeffs()),
                rho: t.rho(),
                c: t.tail_constant(),
            },
        };
        wire.serialize(s)
    }
}

impl<'de> Deserialize<'de> for EntireFn {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let wire = Wire::deserialize(d)?;
        Ok(match wire {
            Wire::Poly { coeffs } => EntireFn::Polynomial(Poly::new(from_pairs(&coeffs))),
            Wire::Exp { scale, coeff } => EntireFn::Exp {
                coeff: c64(coeff[0], coeff[1]),
                scale: c64(scale[0], scale[1]),
            },
            Wire::Series { coeffs, rho, c } => EntireFn::TruncatedSeries(
                TruncatedSeries::new(from_pairs(&coeffs), rho, c).map_err(serde::de::Error::custom)?,
            ),
        })
    }
}
