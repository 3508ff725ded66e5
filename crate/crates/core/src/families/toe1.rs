//! Curves `1 + x + y + sum a_i x^i y^i = 0` with one `A_n` and two
//! `T(n,2n-1)` points.

use serde::Serialize;

use crate::curvelocal::{audit_components, AuditReport, Component, SingTypeTag};
use crate::error::{Error, Result};
use crate::exactalg::{Rat, TernForm, UniPoly};
use crate::projgeom::ImplicitCurve;

use super::expect_descriptor;

#[derive(Clone, Debug, Serialize)]
pub struct ToE1Solution {
    pub n: usize,
    pub tau: Rat,
    /// `a_1, ..., a_n`.
    pub a: Vec<Rat>,
    pub i1: Rat,
    pub i2: Rat,
    pub curve: ImplicitCurve,
    pub audit: AuditReport,
}

impl ToE1Solution {
    pub fn component(&self) -> Component {
        Component::Implicit(self.curve.form.clone())
    }
}

/// `I1 = int_0^1 (1 - s^2)^{n-1} ds` and
/// `I2 = int_0^1 int_0^s (1 - r^2)^{n-1} dr ds`.
pub fn toe1_integrals(n: usize) -> (Rat, Rat) {
    let p = UniPoly::from_ints(&[1, 0, -1]).pow(n as u32 - 1);
    (p.integrate_unit_interval(), p.antiderivative().integrate_unit_interval())
}

/// `a_1, ..., a_n` from `tau` and `a_1`.
pub fn toe1_coefficients(n: usize, tau: &Rat, a1: &Rat) -> Vec<Rat> {
    let t2 = tau * tau;
    (1..=n as i64)
        .map(|i| {
            let sign = if i % 2 == 1 { Rat::one() } else { -Rat::one() };
            sign * Rat::new(1, i * (2 * i - 1)) * Rat::binomial(n as i64 - 1, i - 1) * a1 * t2.pow(i as i32 - 1)
        })
        .collect()
}

/// `Delta(x) = (1 + sum a_i x^i)^2 - 4x`.
pub fn toe1_discriminant(a: &[Rat]) -> UniPoly<Rat> {
    let mut c = vec![Rat::one()];
    c.extend(a.iter().cloned());
    let p = UniPoly::new(c);
    &(&p * &p) - &UniPoly::from_ints(&[0, 4])
}

/// The homogenized curve in `x = z2/z1`, `y = z3/z1`.
pub fn toe1_form(a: &[Rat]) -> Result<TernForm<Rat>> {
    let d = 2 * a.len() as u32;
    let mut terms = vec![([d, 0, 0], Rat::one()), ([d - 1, 1, 0], Rat::one()), ([d - 1, 0, 1], Rat::one())];
    for (i, ai) in a.iter().enumerate() {
        let i = i as u32 + 1;
        if !ai.is_zero() {
            terms.push(([d - 2 * i, i, i], ai.clone()));
        }
    }
    TernForm::from_terms(d, terms)
}

/// Solves for `tau` and `a_1` exactly, fills in the remaining coefficients
/// and certifies the result.
pub fn solve_toe1(n: usize) -> Result<ToE1Solution> {
    if n < 2 {
        return Err(Error::BadParams(format!("toe1 needs n >= 2, got {n}")));
    }
    let fail = |m: String| Err(Error::CertificationFailure(m));
    let (i1, i2) = toe1_integrals(n);
    let tau = Rat::from_int(2) * &i2 / &i1 - Rat::from_int(2);
    let a1 = -(&tau / &i1);
    let a = toe1_coefficients(n, &tau, &a1);
    if a[n - 1].is_zero() {
        return fail("a_n vanishes".into());
    }
    let delta = toe1_discriminant(&a);
    // 1 + t x with t = -tau^2 vanishes at x = 1/tau^2.
    let root = (&tau * &tau).inv();
    let mult = delta.root_multiplicity(&root);
    if mult != n + 1 {
        return fail(format!("Delta vanishes to order {mult} at {root}, expected {}", n + 1));
    }
    let lin = UniPoly::new(vec![-root.clone(), Rat::one()]);
    let cof = delta.exact_div(&lin.pow(n as u32 + 1)).expect("multiplicity checked");
    if !cof.is_squarefree() {
        return fail("cofactor of Delta is not square-free".into());
    }
    let form = toe1_form(&a)?;
    let mut curve = ImplicitCurve::new(form.clone())?;
    let audit = audit_components(&[Component::Implicit(form)])?;
    let nn = n as u32;
    expect_descriptor(&audit.descriptor, &[(SingTypeTag::a(nn), vec![0], 1), (SingTypeTag::tmn(nn, 2 * nn - 1), vec![0], 2)])?;
    let genus = (n / 2) as i64 - 1;
    if audit.genera != [genus] {
        return fail(format!("genus {:?}, expected {genus}", audit.genera));
    }
    curve.known_singularities = audit.records.clone();
    Ok(ToE1Solution { n, tau, a, i1, i2, curve, audit })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn n2_matches_hand_solution() {
        let s = solve_toe1(2).unwrap();
        assert_eq!((s.i1.clone(), s.i2.clone()), (Rat::new(2, 3), Rat::new(5, 12)));
        assert_eq!(s.tau, Rat::new(-3, 4));
        assert_eq!(s.a, vec![Rat::new(9, 8), Rat::new(-27, 256)]);
        let delta = toe1_discriminant(&s.a);
        assert_eq!(delta.root_multiplicity(&Rat::new(16, 9)), 3);
        assert_eq!(s.audit.descriptor.to_string(), "3 A2");
        assert_eq!(s.audit.genera, vec![0]);
    }

    #[test]
    fn n3_descriptor() {
        let s = solve_toe1(3).unwrap();
        assert_eq!(s.audit.descriptor.to_string(), "A3 + 2 T(3,5)");
        assert_eq!(s.curve.degree(), 6);
    }

    #[test]
    fn the_other_binomial_convention_fails() {
        // binom(i-1, n-1) kills a_1..a_{n-1} except at i = n.
        let (i1, i2) = toe1_integrals(3);
        let tau = Rat::from_int(2) * &i2 / &i1 - Rat::from_int(2);
        let a1 = -(&tau / &i1);
        let good = toe1_coefficients(3, &tau, &a1);
        let mut bad = good.clone();
        bad[1] = Rat::zero();
        let root = (&tau * &tau).inv();
        assert_eq!(toe1_discriminant(&good).root_multiplicity(&root), 4);
        assert!(toe1_discriminant(&bad).root_multiplicity(&root) < 4);
    }
}
