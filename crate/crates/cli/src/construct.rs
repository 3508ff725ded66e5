use std::collections::BTreeMap;

use rigidcurve::curvelocal::{audit_components, Component, DescriptorEntry, SingTypeTag};
use rigidcurve::exactalg::Rat;
use rigidcurve::families::{
    audit_add2, audit_add3, build_add1, build_add2, build_add3, catalog_entry, catalog_member, fermat_dual_family, rigit_classes,
    solve_toe1, tricuspidal_quartic, vn_step, FamilyDescriptor, RigidityClass, CATALOG_IDS,
};
use rigidcurve::wire::{CurveFile, Provenance};
use rigidcurve::{Error, Result};
use serde::Serialize;

#[derive(Clone, Debug, Default)]
pub struct Params {
    pub n: Option<u64>,
    pub a: Option<Rat>,
    pub lines: bool,
}

impl Params {
    fn n(&self, family: &str) -> Result<u64> {
        self.n.ok_or_else(|| Error::BadParams(format!("{family} needs --n")))
    }

    fn record(&self) -> BTreeMap<String, String> {
        let mut m = BTreeMap::new();
        if let Some(n) = self.n {
            m.insert("n".into(), n.to_string());
        }
        if let Some(a) = &self.a {
            m.insert("a".into(), a.to_string());
        }
        if self.lines {
            m.insert("lines".into(), "true".into());
        }
        m
    }

    fn refuse_a(&self, family: &str) -> Result<()> {
        if self.a.is_some() {
            return Err(Error::BadParams(format!("{family} takes no --a")));
        }
        Ok(())
    }
}

fn all(_: &DescriptorEntry) -> bool {
    true
}

fn certified(
    family: &str,
    p: &Params,
    components: Vec<Component>,
    class: RigidityClass,
    essential: impl Fn(&DescriptorEntry) -> bool,
) -> Result<CurveFile> {
    let audit = audit_components(&components)?;
    let d = FamilyDescriptor::from_audit(&audit, class, essential)?;
    Ok(CurveFile::new(components, Some(d), Provenance { family: family.into(), params: p.record() }))
}

fn small_n(family: &str, n: u64, min: u64) -> Result<usize> {
    if n < min || n > 64 {
        return Err(Error::BadParams(format!("{family} needs {min} <= n <= 64, got {n}")));
    }
    Ok(n as usize)
}

/// Builds and certifies one member of a family.
pub fn construct(family: &str, p: &Params) -> Result<CurveFile> {
    if CATALOG_IDS.contains(&family) {
        if p.n.is_some() {
            return Err(Error::BadParams(format!("{family} takes no --n")));
        }
        let entry = catalog_entry(family)?;
        let components = catalog_member(family, p.a.as_ref())?;
        let audit = audit_components(&components)?;
        if !entry.family.matches(&audit) {
            return Err(Error::CertificationFailure(format!("{family}: audit gives {}", audit.descriptor)));
        }
        return Ok(CurveFile::new(components, Some(entry.family), Provenance { family: family.into(), params: p.record() }));
    }
    let zero = Rat::zero();
    match family {
        "toe1" => {
            p.refuse_a(family)?;
            let s = solve_toe1(small_n(family, p.n(family)?, 2)?)?;
            certified(family, p, vec![s.component()], RigidityClass::Rigid(1), all)
        }
        "add1" => {
            p.refuse_a(family)?;
            let c = build_add1(small_n(family, p.n(family)?, 2)?)?;
            Ok(CurveFile::new(
                c.components(),
                Some(FamilyDescriptor::from_audit(&c.audit, RigidityClass::Rigid(1), all)?),
                Provenance { family: family.into(), params: p.record() },
            ))
        }
        "add2" | "add3" => {
            let a = p.a.as_ref().unwrap_or(&zero);
            let (curve, audit) = if family == "add2" {
                let n = small_n(family, p.n(family)?, 2)?;
                (build_add2(n, a)?, audit_add2(n, a)?)
            } else {
                let n = small_n(family, p.n(family)?, 3)?;
                (build_add3(n, a)?, audit_add3(n, a)?)
            };
            Ok(CurveFile::new(
                vec![Component::Param(curve)],
                Some(FamilyDescriptor::from_audit(&audit, RigidityClass::Rigid(2), all)?),
                Provenance { family: family.into(), params: p.record() },
            ))
        }
        "vn" => {
            p.refuse_a(family)?;
            let m = p.n.unwrap_or(2);
            if !(2..=4).contains(&m) {
                return Err(Error::ResourceBudget(format!("vn is computed for 2 <= n <= 4, got {m}")));
            }
            let mut curve = tricuspidal_quartic();
            for _ in 2..m {
                let step = vn_step(&curve)?;
                curve = match step.next {
                    Component::Param(c) => c,
                    Component::Implicit(_) => return Err(Error::CertificationFailure("the recursion left the rational curves".into())),
                };
            }
            let essential = |e: &DescriptorEntry| !e.tag.is_ordinary();
            if p.lines {
                let step = vn_step(&curve)?;
                return certified(family, p, step.vhat_components(), RigidityClass::Rigid(1), essential);
            }
            certified(family, p, vec![Component::Param(curve)], RigidityClass::Rigid(1), essential)
        }
        "fermat-dual" => {
            p.refuse_a(family)?;
            let n = p.n(family)?;
            let f = fermat_dual_family(n.min(u32::MAX as u64) as u32, p.lines)?;
            let cusp = SingTypeTag::tmn(f.n - 1, f.n);
            let essential = |e: &DescriptorEntry| e.components != [0] || e.tag == cusp;
            let class = if p.lines { RigidityClass::Rigid(1) } else { RigidityClass::Unknown };
            Ok(CurveFile::new(
                f.components,
                Some(FamilyDescriptor::from_audit(&f.audit, class, essential)?),
                Provenance { family: family.into(), params: p.record() },
            ))
        }
        "rigit" => Err(Error::BadParams("rigit configurations are not defined over Q".into())),
        _ => Err(Error::UnknownFamily(family.into())),
    }
}

#[derive(Serialize)]
pub struct RigitSummary {
    pub n: u64,
    pub orbit_count: usize,
    pub classes: Vec<Vec<(u64, u64)>>,
}

pub fn rigit(n: u64) -> Result<RigitSummary> {
    let classes = rigit_classes(n)?;
    Ok(RigitSummary { n, orbit_count: classes.len(), classes })
}

/// `2..6`, `n=2..6`, `2..=6` or a single value.
pub fn parse_sweep(s: &str) -> Result<Vec<u64>> {
    let bad = || Error::Parse(format!("bad sweep range {s:?}"));
    let body = s.strip_prefix("n=").unwrap_or(s);
    let num = |x: &str| x.trim().parse::<u64>().map_err(|_| bad());
    let (lo, hi) = match body.split_once("..") {
        Some((a, b)) => (num(a)?, num(b.strip_prefix('=').unwrap_or(b))?),
        None => (num(body)?, num(body)?),
    };
    if lo > hi || hi - lo > 64 {
        return Err(bad());
    }
    Ok((lo..=hi).collect())
}
