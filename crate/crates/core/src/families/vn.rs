//! One step of the recursion `V_m -> V_{m+1}`: dualize, attach the three
//! flex tangents, and apply the quadratic transformation based at them.

use serde::Serialize;

use crate::curvelocal::{audit_components, branch_at, flex_parameters, AuditReport, Component, FlexParam, ParamCurve, ParamPoint, SingTypeTag};
use crate::error::{Error, Result};
use crate::exactalg::{Rat, TernForm};
use crate::projgeom::{cremona_sigma, dual_param, Triangle};

use super::describe;

#[derive(Clone, Debug, Serialize)]
pub struct VnStep {
    pub m: u32,
    pub input_audit: AuditReport,
    pub dual: ParamCurve,
    pub dual_audit: AuditReport,
    /// Tangent lines at the three flexes of the dual.
    pub flex_lines: Vec<[Rat; 3]>,
    /// Audit of the dual together with its flex tangents.
    pub vhat_audit: AuditReport,
    pub next: Component,
    pub next_audit: AuditReport,
}

impl VnStep {
    pub fn vhat_components(&self) -> Vec<Component> {
        let mut v = vec![Component::Param(self.dual.clone())];
        v.extend(self.flex_lines.iter().map(|l| Component::Implicit(TernForm::linear(l.clone()).normalize())));
        v
    }
}

/// The quartic with cusps at the coordinate points, `((s+1)^2, s^2 (s+1)^2, s^2)`.
pub fn tricuspidal_quartic() -> ParamCurve {
    ParamCurve::from_ints([&[1, 2, 1], &[0, 0, 1, 2, 1], &[0, 0, 1]]).expect("valid").labeled("tricuspidal quartic")
}

fn all_ordinary_except(audit: &AuditReport, tag: SingTypeTag) -> bool {
    audit.descriptor.0.iter().all(|e| e.tag == tag || e.tag.is_ordinary())
}

/// Runs one step from a member of `V_m = V(2m; 0; 3 T(m,m+1) + ...)`.
pub fn vn_step(curve: &ParamCurve) -> Result<VnStep> {
    if curve.degree() % 2 != 0 || curve.degree() < 4 {
        return Err(Error::BadParams(format!("members of V_m have even degree >= 4, got {}", curve.degree())));
    }
    let m = curve.degree() / 2;
    let fail = |s: String| Err(Error::CertificationFailure(s));
    let input_audit = audit_components(&[Component::Param(curve.clone())])?;
    let cusp = SingTypeTag::tmn(m, m + 1);
    if input_audit.descriptor.count(cusp) != 3 || !all_ordinary_except(&input_audit, cusp) {
        return fail(format!("input is {}, not a member of V_{m}", input_audit.descriptor));
    }

    let dual = dual_param(curve)?;
    if dual.degree() != m + 1 {
        return fail(format!("dual has degree {}, expected {}", dual.degree(), m + 1));
    }
    let dual_audit = audit_components(&[Component::Param(dual.clone())])?;
    if !dual_audit.descriptor.0.iter().all(|e| e.tag.is_ordinary()) {
        return fail(format!("dual has non-simple singularities: {}", dual_audit.descriptor));
    }

    let flexes = flex_parameters(&dual);
    let count: usize = flexes.iter().map(|f| f.count()).sum();
    if count != 3 {
        return Err(Error::FlexCountUnexpected(count));
    }
    let mut flex_lines = Vec::with_capacity(3);
    for f in &flexes {
        let t0 = match &f.param {
            FlexParam::Rational(t) => ParamPoint::Finite(t.clone()),
            FlexParam::Infinity => ParamPoint::Infinity,
            FlexParam::Conjugates(h) => {
                return Err(Error::DegenerateInput(format!("flexes at the roots of {h} are not rational")));
            }
        };
        flex_lines.push(branch_at(&dual, &t0, &Rat::zero())?.tangent);
    }

    let mut vhat = vec![Component::Param(dual.clone())];
    vhat.extend(flex_lines.iter().map(|l| Component::Implicit(TernForm::linear(l.clone()).normalize())));
    let vhat_audit = audit_components(&vhat)?;
    let contact = SingTypeTag::a(2 * m + 1);
    for i in 1..=3 {
        if vhat_audit.descriptor.count_on(contact, &[0, i]) != 1 {
            return fail(format!("flex tangent {i} does not give {contact}: {}", describe(&vhat_audit.descriptor)));
        }
    }

    let triangle = Triangle::new([flex_lines[0].clone(), flex_lines[1].clone(), flex_lines[2].clone()])?;
    let next = cremona_sigma(&Component::Param(dual.clone()), &triangle)?;
    let next_audit = audit_components(std::slice::from_ref(&next))?;
    let cusp = SingTypeTag::tmn(m + 1, m + 2);
    if next_audit.descriptor.count(cusp) != 3 || !all_ordinary_except(&next_audit, cusp) {
        return fail(format!("image is {}, expected 3 {cusp} plus simple points", next_audit.descriptor));
    }
    Ok(VnStep { m, input_audit, dual, dual_audit, flex_lines, vhat_audit, next, next_audit })
}
