//! The dual of the Fermat curve `z1^n + z2^n + z3^n = 0`, optionally with
//! the coordinate lines.

use serde::Serialize;

use crate::curvelocal::{audit_components, AuditReport, Component, Decoration, Descriptor, DescriptorEntry, SingTypeTag};
use crate::error::{Error, Result};
use crate::exactalg::{Rat, TernForm};
use crate::projgeom::dual_implicit;

use super::describe;

#[derive(Clone, Debug, Serialize)]
pub struct FermatDual {
    pub n: u32,
    /// The dual curve first, then the coordinate lines if requested.
    pub components: Vec<Component>,
    pub audit: AuditReport,
    /// The singular points of the dual curve other than the `3n` points of type `T(n-1,n)`.
    pub s_f: Descriptor,
}

pub fn fermat_form(n: u32) -> TernForm<Rat> {
    TernForm::from_ints(n, &[([n, 0, 0], 1), ([0, n, 0], 1), ([0, 0, n], 1)])
}

/// The dual of the Fermat curve of degree `n in {3, 4}`, certified to have
/// `3n` points of type `T(n-1,n)`; with `lines`, the three coordinate lines
/// are attached and each is certified to pass through `n` of them.
pub fn fermat_dual_family(n: u32, lines: bool) -> Result<FermatDual> {
    if !(3..=4).contains(&n) {
        return Err(Error::ResourceBudget(format!("the Fermat dual is only computed for n = 3, 4, got {n}")));
    }
    let fail = |s: String| Err(Error::CertificationFailure(s));
    let dual = dual_implicit(&fermat_form(n))?;
    if dual.degree() != n * (n - 1) {
        return fail(format!("dual has degree {}, expected {}", dual.degree(), n * (n - 1)));
    }
    let mut components = vec![Component::Implicit(dual)];
    if lines {
        components.extend((0..3).map(|i| Component::Implicit(TernForm::var(i))));
    }
    let audit = audit_components(&components)?;
    let cusp = SingTypeTag::tmn(n - 1, n);
    let mut rest = Vec::new();
    let mut cusps = 0;
    for e in &audit.descriptor.0 {
        if e.components == [0] && e.tag == cusp {
            cusps += e.count;
        } else if e.components == [0] {
            rest.push(e.clone());
        }
    }
    if lines {
        let on_line = SingTypeTag::decorated(n - 1, n, Decoration::UpperM);
        for i in 1..=3 {
            if audit.descriptor.count_on(on_line, &[0, i]) != n as usize {
                return fail(format!("line {i} misses the expected contacts: {}", describe(&audit.descriptor)));
            }
            cusps += n as usize;
        }
        for (i, j) in [(1, 2), (1, 3), (2, 3)] {
            if audit.descriptor.count_on(SingTypeTag::a(1), &[i, j]) != 1 {
                return fail(format!("lines {i} and {j} do not meet in a node: {}", describe(&audit.descriptor)));
            }
        }
    }
    if cusps != 3 * n as usize {
        return fail(format!("found {cusps} points of type {cusp}, expected {}", 3 * n));
    }
    let s_f = Descriptor(rest.into_iter().map(|e| DescriptorEntry { components: vec![0], ..e }).collect());
    Ok(FermatDual { n, components, audit, s_f })
}
