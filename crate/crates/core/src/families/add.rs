//! Rational curves with one or two prescribed unibranch singular points,
//! together with a distinguished line.

use serde::Serialize;

use crate::curvelocal::{audit_components, branch_at, AuditReport, Component, Decoration, ParamCurve, ParamPoint, SingTypeTag};
use crate::error::{Error, Result};
use crate::exactalg::{Rat, TernForm, UniPoly};
use crate::projgeom::ProjMap;

use super::ak::ak_poly;
use super::{expect_descriptor, line_intersection_at};

fn mono(k: usize) -> UniPoly<Rat> {
    UniPoly::monomial(Rat::one(), k)
}

/// A rational curve together with one line, certified by an audit of the union.
#[derive(Clone, Debug, Serialize)]
pub struct CurveWithLine {
    pub curve: ParamCurve,
    pub line: TernForm<Rat>,
    pub audit: AuditReport,
}

impl CurveWithLine {
    pub fn components(&self) -> Vec<Component> {
        vec![Component::Param(self.curve.clone()), Component::Implicit(self.line.clone())]
    }
}

/// `(t^4 P(t), t^2, t - 1)`.
pub fn add1_curve(p: &UniPoly<Rat>) -> Result<ParamCurve> {
    ParamCurve::new([&mono(4) * p, mono(2), UniPoly::from_ints(&[-1, 1])])
}

/// The curve `(t^4 A_{2n-3}(t), t^2, t - 1)` with the line `z3 = 0`.
///
/// Certified descriptor: `T(2n-1,2n)^{2n} + A1` on the union and `A_{4n-2}`
/// on the curve.
pub fn build_add1(n: usize) -> Result<CurveWithLine> {
    if n < 2 {
        return Err(Error::BadParams(format!("add1 needs n >= 2, got {n}")));
    }
    let curve = add1_curve(&ak_poly(2 * n - 3))?.labeled(&format!("add1 n={n}"));
    let line = TernForm::var(2);
    let audit = audit_components(&[Component::Param(curve.clone()), Component::Implicit(line.clone())])?;
    let n = n as u32;
    expect_descriptor(
        &audit.descriptor,
        &[
            (SingTypeTag::decorated(2 * n - 1, 2 * n, Decoration::UpperN), vec![0, 1], 1),
            (SingTypeTag::a(1), vec![0, 1], 1),
            (SingTypeTag::a(4 * n - 2), vec![0], 1),
        ],
    )?;
    Ok(CurveWithLine { curve, line, audit })
}

/// The `k` of the `A_k` point at the image of `t = 0` of `(t^4 P, t^2, t - 1)`.
pub fn add1_a_index(p: &UniPoly<Rat>) -> Result<u32> {
    let curve = add1_curve(p)?;
    let b = branch_at(&curve, &ParamPoint::Finite(Rat::zero()), &Rat::zero())?;
    match (b.e, b.beta) {
        (2, Some(beta)) => Ok(beta - 1),
        (e, beta) => Err(Error::CertificationFailure(format!("branch at t = 0 has e = {e}, beta = {beta:?}"))),
    }
}

/// A-indices of every single-coefficient perturbation `A_{2n-3} +- t^i`,
/// `i` below the leading term, paired with the perturbation.
pub fn add1_perturbations(n: usize) -> Result<Vec<((usize, i64), u32)>> {
    let a = ak_poly(2 * n - 3);
    let mut out = Vec::new();
    for i in 0..a.deg() as usize {
        for s in [1i64, -1] {
            let p = &a + &UniPoly::monomial(Rat::from_int(s), i);
            out.push(((i, s), add1_a_index(&p)?));
        }
    }
    Ok(out)
}

/// `(t^{2n+1}, t^{n+1}, a t + 1)`.
pub fn build_add2(n: usize, a: &Rat) -> Result<ParamCurve> {
    if n < 2 {
        return Err(Error::BadParams(format!("add2 needs n >= 2, got {n}")));
    }
    let z3 = UniPoly::new(vec![Rat::one(), a.clone()]);
    Ok(ParamCurve::new([mono(2 * n + 1), mono(n + 1), z3])?.labeled(&format!("add2 n={n} a={a}")))
}

/// Audit of the (add2) curve, checked against `T(n+1,2n+1) + T(n,2n+1)`.
pub fn audit_add2(n: usize, a: &Rat) -> Result<AuditReport> {
    let c = build_add2(n, a)?;
    let audit = audit_components(&[Component::Param(c)])?;
    let n = n as u32;
    expect_descriptor(
        &audit.descriptor,
        &[(SingTypeTag::tmn(n + 1, 2 * n + 1), vec![0], 1), (SingTypeTag::tmn(n, 2 * n + 1), vec![0], 1)],
    )?;
    Ok(audit)
}

/// `(C, z3 = 0)` at the image of `t = inf`.
pub fn add2_intersection(n: usize, a: &Rat) -> Result<u64> {
    let c = build_add2(n, a)?;
    let p = c.infinity_point();
    line_intersection_at(&c, &[Rat::zero(), Rat::zero(), Rat::one()], &p)
}

/// `diag(a^{2n+1}, a^{n+1}, 1)`, carrying the `a` member to the `a = 1` member.
pub fn add2_witness(n: usize, a: &Rat) -> Result<ProjMap> {
    if a.is_zero() {
        return Err(Error::BadParams("the a = 0 member is a separate orbit".into()));
    }
    ProjMap::diagonal([a.pow(2 * n as i32 + 1), a.pow(n as i32 + 1), Rat::one()])
}

/// `((t^2 - a^2) t^{4n-2}, t^{2n-1}, 1)`.
pub fn build_add3(n: usize, a: &Rat) -> Result<ParamCurve> {
    if n < 3 {
        return Err(Error::BadParams(format!("add3 needs n >= 3, got {n}")));
    }
    let q = UniPoly::new(vec![-(a * a), Rat::zero(), Rat::one()]);
    Ok(ParamCurve::new([&q * &mono(4 * n - 2), mono(2 * n - 1), UniPoly::one()])?.labeled(&format!("add3 n={n} a={a}")))
}

/// Audit of the (add3) curve, checked against `T(2n-1,4n) + T(2n+1,4n)`.
pub fn audit_add3(n: usize, a: &Rat) -> Result<AuditReport> {
    let c = build_add3(n, a)?;
    let audit = audit_components(&[Component::Param(c)])?;
    let n = n as u32;
    expect_descriptor(
        &audit.descriptor,
        &[(SingTypeTag::tmn(2 * n - 1, 4 * n), vec![0], 1), (SingTypeTag::tmn(2 * n + 1, 4 * n), vec![0], 1)],
    )?;
    Ok(audit)
}

/// `(C, z1 = 0)` at the image of `t = 0`.
pub fn add3_intersection(n: usize, a: &Rat) -> Result<u64> {
    let c = build_add3(n, a)?;
    let p = c.point_at_rat(&ParamPoint::Finite(Rat::zero()));
    line_intersection_at(&c, &[Rat::one(), Rat::zero(), Rat::zero()], &p)
}

/// `diag(a^{-4n}, a^{1-2n}, 1)`, carrying the `a` member to the `a = 1` member.
pub fn add3_witness(n: usize, a: &Rat) -> Result<ProjMap> {
    if a.is_zero() {
        return Err(Error::BadParams("the a = 0 member is a separate orbit".into()));
    }
    let n = n as i32;
    ProjMap::diagonal([a.pow(-4 * n), a.pow(1 - 2 * n), Rat::one()])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::projgeom::implicitize;

    fn r(n: i64) -> Rat {
        Rat::from_int(n)
    }

    #[test]
    fn add1_small_cases() {
        let c = build_add1(2).unwrap();
        assert_eq!(c.curve.degree(), 5);
        assert_eq!(c.audit.descriptor.to_string(), "A1 + A6 + T(3,4)^4");
        assert_eq!(add1_a_index(&ak_poly(3)).unwrap(), 10);
    }

    #[test]
    fn perturbing_a1_drops_the_index() {
        assert!(add1_a_index(&UniPoly::from_ints(&[2, 1])).unwrap() < 6);
        for (_, k) in add1_perturbations(3).unwrap() {
            assert!(k < 10);
        }
    }

    #[test]
    fn add2_dichotomy() {
        assert_eq!(add2_intersection(2, &r(0)).unwrap(), 5);
        assert_eq!(add2_intersection(2, &r(1)).unwrap(), 4);
        assert_eq!(audit_add2(3, &r(0)).unwrap().descriptor.to_string(), "T(3,7) + T(4,7)");
        assert!(audit_add2(2, &r(3)).is_ok());
    }

    #[test]
    fn add2_witness_carries_a_to_one() {
        let a = r(5);
        let h = add2_witness(2, &a).unwrap();
        let ca = build_add2(2, &a).unwrap();
        let c1 = build_add2(2, &r(1)).unwrap();
        assert_eq!(implicitize(&h.apply_param(&ca).unwrap()), implicitize(&c1));
    }

    #[test]
    fn add3_dichotomy_and_witness() {
        assert_eq!(add3_intersection(3, &r(0)).unwrap(), 12);
        assert_eq!(add3_intersection(3, &r(1)).unwrap(), 10);
        let a = Rat::new(1, 3);
        let h = add3_witness(3, &a).unwrap();
        let ca = build_add3(3, &a).unwrap();
        let c1 = build_add3(3, &r(1)).unwrap();
        assert_eq!(implicitize(&h.apply_param(&ca).unwrap()), implicitize(&c1));
    }

    #[test]
    fn bad_parameters() {
        assert!(build_add1(1).is_err());
        assert!(build_add2(1, &r(0)).is_err());
        assert!(build_add3(2, &r(0)).is_err());
    }
}
