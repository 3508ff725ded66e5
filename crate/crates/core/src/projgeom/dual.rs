use num_bigint::BigInt;
use num_traits::Signed;

use crate::budget;
use crate::curvelocal::audit::{implicit_centers, Center};
use crate::curvelocal::{Component, ParamCurve};
use crate::error::{Error, Result};
use crate::exactalg::elim::multimodular_bivariate;
use crate::exactalg::factor::{interpolate_q, norm_poly};
use crate::exactalg::modular::trim;
use crate::exactalg::{BiPoly, Ext, Field, NumberField, Rat, TernForm, UniPoly};

use super::implicit::implicitize;

/// Dual of a rational curve, parametrized by `f x f'` with the common factor removed.
pub fn dual_param(c: &ParamCurve) -> Result<ParamCurve> {
    if c.is_line() {
        return Err(Error::DegenerateInput("the dual of a line is a point".into()));
    }
    let d = ParamCurve::new(c.tangent_minors())?;
    Ok(match c.label() {
        Some(l) => d.labeled(&format!("dual of {l}")),
        None => d,
    })
}

/// Dual of a reduced irreducible curve `F = 0`, in line coordinates `u`.
///
/// The discriminant of `F` restricted to the line `u1 z1 + u2 z2 + z3 = 0`
/// vanishes on the dual curve and on the pencils of lines through the
/// singular points; the latter are divided out.
pub fn dual_implicit(f: &TernForm<Rat>) -> Result<TernForm<Rat>> {
    let f = f.normalize();
    let d = f.degree() as usize;
    if d <= 1 {
        return Err(Error::DegenerateInput("the dual of a line is a point".into()));
    }
    let n = 2 * d * (d - 1);
    let budget = budget::degree_budget();
    if n > budget {
        return Err(Error::EliminationOverflow { needed: n, budget });
    }
    let terms: Vec<([u32; 3], BigInt)> = f.terms().iter().map(|(e, c)| (*e, c.numer().clone())).collect();
    let l1: BigInt = terms.iter().map(|(_, c)| c.abs()).sum();
    let bound = (BigInt::from(d) * BigInt::from(2u32).pow(d as u32) * l1).pow(2 * (d as u32 - 1));
    let disc = multimodular_bivariate(n, n, &bound, |zp, u1, u2| {
        // G(z1, 1) = F(z1, 1, -u1 z1 - u2) mod p.
        let lin = [zp.neg(u2), zp.neg(u1)];
        let mut pows: Vec<Vec<u64>> = vec![vec![1]];
        for k in 0..d {
            let next = zp.pmul(&pows[k], &lin);
            pows.push(next);
        }
        let mut g = vec![0u64; d + 1];
        for (e, c) in &terms {
            let c = zp.from_int(c);
            let mut t = vec![0u64; e[0] as usize];
            t.extend(pows[e[2] as usize].iter().copied());
            for (i, v) in t.iter().enumerate() {
                g[i] = zp.add(g[i], zp.mul(c, *v));
            }
        }
        let a: Vec<u64> = (0..d).map(|i| zp.mul(zp.from_i64(i as i64 + 1), g[i + 1])).collect();
        let b: Vec<u64> = (0..d).map(|i| zp.mul(zp.from_i64((d - i) as i64), g[i])).collect();
        zp.presultant(&trim(a), d - 1, &trim(b), d - 1)
    });
    if disc.is_zero() {
        return Err(Error::DegenerateInput("the curve is not reduced".into()));
    }
    let mut form = TernForm::homogenize(&disc, 2, disc.total_degree() as u32);
    for c in implicit_centers(std::slice::from_ref(&f))? {
        let pencil = match c {
            Center::Rational(p) => TernForm::linear(p),
            Center::Algebraic(k, p, _) => norm_of_linear(&k, &p),
        };
        while let Some(q) = form.exact_div(&pencil) {
            form = q;
        }
    }
    let form = form.normalize();
    if form.degree() < 2 {
        return Err(Error::CertificationFailure(format!("dual of a degree-{d} curve came out of degree {}", form.degree())));
    }
    Ok(form)
}

/// `N(p1 u1 + p2 u2 + p3 u3)` from `K[u]` down to `Q[u]`.
fn norm_of_linear(k: &NumberField, p: &[Ext; 3]) -> TernForm<Rat> {
    let m = k.degree();
    let (xs, cols): (Vec<Rat>, Vec<UniPoly<Rat>>) = (0..=m as i64)
        .map(|j| {
            let y = Rat::from_int(j);
            let g = UniPoly::new(vec![p[2].plus(&p[1].scale(&y)), p[0].clone()]);
            (y, norm_poly(k, &g))
        })
        .unzip();
    // Interpolate each u1-coefficient in u2.
    let rows: Vec<UniPoly<Rat>> = (0..=m)
        .map(|i| {
            let ys: Vec<Rat> = cols.iter().map(|c| c.coeff(i).cloned().unwrap_or_else(Rat::zero)).collect();
            interpolate_q(&xs, &ys)
        })
        .collect();
    let mut terms = Vec::new();
    for (i, r) in rows.iter().enumerate() {
        for (j, c) in r.coeffs().iter().enumerate() {
            terms.push(((i, j), c.clone()));
        }
    }
    TernForm::homogenize(&BiPoly::from_terms(terms), 2, m as u32)
}

/// The dual of a component: parametrized in, parametrized out.
pub fn dual_curve(c: &Component) -> Result<Component> {
    Ok(match c {
        Component::Param(p) => Component::Param(dual_param(p)?),
        Component::Implicit(f) => Component::Implicit(dual_implicit(f)?),
    })
}

/// `dual(dual(C)) = C` as implicit curves.
pub fn biduality_holds(c: &Component) -> Result<bool> {
    let twice = dual_curve(&dual_curve(c)?)?;
    Ok(twice.form() == c.form())
}

/// The dual as an implicit form, from either representation.
pub fn dual_form(c: &Component) -> Result<TernForm<Rat>> {
    match c {
        Component::Param(p) => Ok(implicitize(&dual_param(p)?)),
        Component::Implicit(f) => dual_implicit(f),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn curve(c: [&[i64]; 3]) -> ParamCurve {
        ParamCurve::from_ints(c).unwrap()
    }

    #[test]
    fn conic_is_self_dual_class() {
        let conic = TernForm::from_ints(2, &[([1, 0, 1], 1), ([0, 2, 0], -1)]);
        let d = dual_implicit(&conic).unwrap();
        assert_eq!(d.degree(), 2);
        let p = dual_param(&curve([&[0, 0, 1], &[0, 1], &[1]])).unwrap();
        assert_eq!(implicitize(&p), d);
    }

    #[test]
    fn nodal_cubic_dual_is_a_quartic() {
        let c = curve([&[-1, 0, 1], &[0, -1, 0, 1], &[1]]);
        let p = dual_param(&c).unwrap();
        assert_eq!(p.degree(), 4);
        let i = dual_implicit(&implicitize(&c)).unwrap();
        assert_eq!(implicitize(&p), i);
    }

    #[test]
    fn cuspidal_cubic_dual_is_a_cuspidal_cubic() {
        let c = curve([&[0, 0, 0, 1], &[0, 0, 1], &[1]]);
        assert_eq!(dual_param(&c).unwrap().degree(), 3);
        assert_eq!(dual_implicit(&implicitize(&c)).unwrap().degree(), 3);
        assert!(biduality_holds(&Component::Param(c)).unwrap());
    }

    #[test]
    fn fermat_cubic_dual_is_a_sextic() {
        let f = TernForm::from_ints(3, &[([3, 0, 0], 1), ([0, 3, 0], 1), ([0, 0, 3], 1)]);
        assert_eq!(dual_implicit(&f).unwrap().degree(), 6);
    }

    #[test]
    fn lines_have_no_dual_curve() {
        assert!(dual_param(&curve([&[0, 1], &[1], &[1]])).is_err());
    }
}
