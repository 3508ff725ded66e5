use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed};

use serde::{Deserialize, Serialize};

use crate::curvelocal::param::{cross_rat, ParamCurve};
use crate::curvelocal::SingRecord;
use crate::error::{Error, Result};
use crate::exactalg::elim::multimodular_bivariate;
use crate::exactalg::{Rat, TernForm};

/// A reduced curve `F = 0` together with whatever singular points are
/// already known for it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ImplicitCurve {
    pub form: TernForm<Rat>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub known_singularities: Vec<SingRecord>,
}

impl ImplicitCurve {
    pub fn new(form: TernForm<Rat>) -> Result<ImplicitCurve> {
        if form.is_zero() || form.degree() == 0 {
            return Err(Error::DegenerateInput("an implicit curve needs a nonconstant form".into()));
        }
        if !is_squarefree_form(&form) {
            return Err(Error::DegenerateInput("the form has a repeated factor".into()));
        }
        Ok(ImplicitCurve { form: form.normalize(), known_singularities: Vec::new() })
    }

    pub fn degree(&self) -> u32 {
        self.form.degree()
    }
}

/// Some line meets `F = 0` in `deg F` distinct points.
pub fn is_squarefree_form(f: &TernForm<Rat>) -> bool {
    let d = f.degree() as i64;
    (0..16i64).any(|j| {
        let line = [
            crate::exactalg::UniPoly::from_ints(&[1, j + 2]),
            crate::exactalg::UniPoly::from_ints(&[j, 1]),
            crate::exactalg::UniPoly::from_ints(&[j * j - 3, 3 * j + 1]),
        ];
        let r = f.pullback(&line);
        r.deg() == d && r.is_squarefree()
    })
}

/// Integer coefficient vectors of the coordinates, scaled by one common factor.
fn integer_coords(curve: &ParamCurve) -> [Vec<BigInt>; 3] {
    let mut den = BigInt::one();
    for c in curve.coords() {
        for x in c.coeffs() {
            den = den.lcm(x.denom());
        }
    }
    let d = curve.degree() as usize;
    curve.coords().clone().map(|c| {
        (0..=d)
            .map(|i| c.coeff(i).map(|x| x.numer() * (&den / x.denom())).unwrap_or_default())
            .collect()
    })
}

/// The normalized degree-`d` form vanishing on the image of `curve`.
pub fn implicitize(curve: &ParamCurve) -> TernForm<Rat> {
    let d = curve.degree() as usize;
    if d == 1 {
        let c = curve.coords();
        let a = [0, 1, 2].map(|i| c[i].coeff(0).cloned().unwrap_or_else(Rat::zero));
        let b = [0, 1, 2].map(|i| c[i].coeff(1).cloned().unwrap_or_else(Rat::zero));
        return TernForm::linear(cross_rat(&a, &b)).normalize();
    }
    let [f1, f2, f3] = integer_coords(curve);
    let l1 = |v: &[BigInt]| -> BigInt { v.iter().map(|x| x.abs()).sum() };
    let bound = (l1(&f1) + l1(&f3)).pow(d as u32) * (l1(&f2) + l1(&f3)).pow(d as u32);
    // Res_t(f1 - x f3, f2 - y f3) at formal degree d in t.
    let r = multimodular_bivariate(d, d, &bound, |zp, x, y| {
        let a: Vec<u64> = (0..=d).map(|i| zp.sub(zp.from_int(&f1[i]), zp.mul(x, zp.from_int(&f3[i])))).collect();
        let b: Vec<u64> = (0..=d).map(|i| zp.sub(zp.from_int(&f2[i]), zp.mul(y, zp.from_int(&f3[i])))).collect();
        zp.presultant(&crate::exactalg::modular::trim(a), d, &crate::exactalg::modular::trim(b), d)
    });
    assert!(r.total_degree() <= d as i64, "implicit equation exceeds the curve degree");
    let form = TernForm::homogenize(&r, 2, d as u32).normalize();
    debug_assert!(vanishes_on(&form, curve));
    form
}

/// `F(f(t)) = 0` checked at `deg(F) * deg(f) + 1` parameter values.
pub fn vanishes_on(form: &TernForm<Rat>, curve: &ParamCurve) -> bool {
    let n = (form.degree() * curve.degree()) as i64;
    (0..=n).all(|k| {
        let t = Rat::from_int(k);
        let p = curve.coords().clone().map(|c| c.eval(&t));
        form.eval(&p).is_zero()
    })
}
