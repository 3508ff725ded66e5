//! Constructors and exact solvers for rigid families, with certificates.

pub mod ak;
pub mod add;
pub mod catalog;
pub mod descriptor;
pub mod fermat;
pub mod quartic;
pub mod rigit;
pub mod toe1;
pub mod vn;

pub use add::{
    add1_a_index, add1_perturbations, add2_intersection, add2_witness, add3_intersection, add3_witness, audit_add2, audit_add3,
    build_add1, build_add2, build_add3, CurveWithLine,
};
pub use ak::{ak_poly, AkSequence};
pub use catalog::{catalog_entry, catalog_member, catalog_small_degree, CatalogEntry, CATALOG_IDS};
pub use descriptor::{FamilyDescriptor, RigidityClass, StypeEntry};
pub use fermat::{fermat_dual_family, FermatDual};
pub use quartic::{enumerate_rigid_candidates, quartic_stratum_tools, StratumInfo};
pub use rigit::{rigit_classes, rigit_equivalent, rigit_orbit_analysis, rigit_pairs, RigitAnalysis};
pub use toe1::{solve_toe1, ToE1Solution};
pub use vn::{tricuspidal_quartic, vn_step, VnStep};

use std::collections::BTreeMap;

use crate::curvelocal::param::{cross_field, cross_rat};
use crate::curvelocal::{Descriptor, DescriptorEntry, ParamCurve, ParamPoint, SingTypeTag};
use crate::error::{Error, Result};
use crate::exactalg::factor::factor_q;
use crate::exactalg::{Ext, Field, NumberField, Rat, TernForm};

/// A descriptor from `(tag, components, count)` triples.
pub fn descriptor_of(entries: &[(SingTypeTag, Vec<usize>, usize)]) -> Descriptor {
    let mut m: BTreeMap<(SingTypeTag, Vec<usize>), usize> = BTreeMap::new();
    for (tag, c, count) in entries {
        *m.entry((*tag, c.clone())).or_default() += count;
    }
    Descriptor(m.into_iter().map(|((tag, components), count)| DescriptorEntry { tag, components, count }).collect())
}

pub(crate) fn expect_descriptor(got: &Descriptor, want: &[(SingTypeTag, Vec<usize>, usize)]) -> Result<()> {
    let want = descriptor_of(want);
    if *got != want {
        return Err(Error::CertificationFailure(format!("audit gives {}, expected {}", describe(got), describe(&want))));
    }
    Ok(())
}

/// `(C, L)_p` for a rational curve `C`, a line with coefficients `line` and a
/// rational point `p`: the order of `L(f(t))` summed over the parameters
/// mapping to `p`.
pub fn line_intersection_at(curve: &ParamCurve, line: &[Rat; 3], p: &[Rat; 3]) -> Result<u64> {
    let g = TernForm::linear(line.clone()).pullback(curve.coords());
    if g.is_zero() {
        return Err(Error::InfiniteIntersection("the curve is the line".into()));
    }
    let on_p = |q: [Ext; 3], k: &NumberField| cross_field(&q, &p.clone().map(|c| k.from_rat(&c))).iter().all(|c| c.is_zero());
    let mut total = 0u64;
    if cross_rat(&curve.infinity_point(), p).iter().all(|c| c.is_zero()) {
        total += (curve.degree() as i64 - g.deg()) as u64;
    }
    for (h, m) in factor_q(&g) {
        if h.deg() == 1 {
            let t0 = -(&h.coeffs()[0] / &h.coeffs()[1]);
            if cross_rat(&curve.point_at_rat(&ParamPoint::Finite(t0)), p).iter().all(|c| c.is_zero()) {
                total += m as u64;
            }
            continue;
        }
        let k = NumberField::new(h.monic(), "w")?;
        let q = curve.coords().clone().map(|z| z.map(|x| k.from_rat(x)).eval(&k.gen()));
        if on_p(q, &k) {
            total += (m * h.deg() as usize) as u64;
        }
    }
    Ok(total)
}

/// Descriptor with component subsets, e.g. `A1 on {0,1} + A6 on {0}`.
pub fn describe(d: &Descriptor) -> String {
    if d.is_empty() {
        return "smooth".into();
    }
    let parts: Vec<String> = d
        .0
        .iter()
        .map(|e| {
            let c: Vec<String> = e.components.iter().map(|i| i.to_string()).collect();
            let n = if e.count == 1 { String::new() } else { format!("{} ", e.count) };
            format!("{n}{} on {{{}}}", e.tag, c.join(","))
        })
        .collect();
    parts.join(" + ")
}
