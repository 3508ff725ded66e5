use serde::Serialize;

use crate::exactalg::factor::factor_q;
use crate::exactalg::{poly_gcd, Rat, UniPoly};

use super::param::ParamCurve;

/// Location of a flex on the parameter line.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FlexParam {
    Rational(Rat),
    Infinity,
    /// All roots of an irreducible polynomial of degree > 1.
    Conjugates(UniPoly<Rat>),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Flex {
    pub param: FlexParam,
    /// Intersection number of the tangent line with the branch.
    pub osculation: u32,
}

impl Flex {
    /// Number of flex points this entry stands for.
    pub fn count(&self) -> usize {
        match &self.param {
            FlexParam::Conjugates(h) => h.deg() as usize,
            _ => 1,
        }
    }
}

/// Wronskian with every root at a singular branch removed.
fn reduced_wronskian(curve: &ParamCurve) -> UniPoly<Rat> {
    let mut w = curve.wronskian();
    if w.is_zero() {
        return w;
    }
    let m = curve.tangent_minors();
    let sing = poly_gcd(&poly_gcd(&m[0], &m[1]), &m[2]);
    loop {
        let g = poly_gcd(&w, &sing);
        if g.deg() <= 0 {
            return w;
        }
        w = w.exact_div(&g).expect("gcd divides");
    }
}

/// Flexes of a parametrized curve: zeros of `det [f, f', f'']` away from
/// singular branches. A root of multiplicity `k` is a flex whose tangent
/// meets the branch with multiplicity `k + 2`.
pub fn flex_parameters(curve: &ParamCurve) -> Vec<Flex> {
    if curve.is_line() {
        return Vec::new();
    }
    let mut out = Vec::new();
    let w = reduced_wronskian(curve);
    for (h, mult) in factor_q(&w) {
        let param = if h.deg() == 1 { FlexParam::Rational(-h.coeffs()[0].clone()) } else { FlexParam::Conjugates(h) };
        out.push(Flex { param, osculation: mult as u32 + 2 });
    }
    let at_inf = reduced_wronskian(&curve.reversed()).ord().unwrap_or(0);
    if at_inf > 0 {
        out.push(Flex { param: FlexParam::Infinity, osculation: at_inf as u32 + 2 });
    }
    out
}

pub fn flex_count(curve: &ParamCurve) -> usize {
    flex_parameters(curve).iter().map(|f| f.count()).sum()
}
