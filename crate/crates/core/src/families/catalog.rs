//! Rigid reduced curves of degree at most 4: twenty-four strictly rigid
//! families and two 2-rigid ones, each with concrete members.

use serde::Serialize;

use crate::curvelocal::{audit_components, AuditReport, Component, Decoration, ParamCurve, SingTypeTag};
use crate::error::{Error, Result};
use crate::exactalg::{Rat, TernForm};
use crate::projgeom::ProjMap;
use crate::rigidity::{rigidity_report, verify_witness, RigidityReport, Witness};

use super::descriptor::{FamilyDescriptor, RigidityClass, StypeEntry};
use super::{describe, solve_toe1};

pub const CATALOG_IDS: [&str; 26] = [
    "I1", "I2", "I3", "I4", "I5", "I6", "I7", "I8", "I9", "I10", "I11", "I12", "I13", "I14", "I15", "I16", "I17", "I18", "I19",
    "I20", "I21", "I22", "I23", "I24", "II1", "II2",
];

#[derive(Clone, Debug, Serialize)]
pub struct CatalogEntry {
    pub id: String,
    pub family: FamilyDescriptor,
    /// Members of the family; the first one represents each orbit in turn
    /// when the family has several, later ones are reached by `witnesses`.
    pub representatives: Vec<Vec<Component>>,
    pub witnesses: Vec<Witness>,
}

impl CatalogEntry {
    /// Audits every member against the descriptor and verifies every witness.
    pub fn certify(&self) -> Result<Vec<AuditReport>> {
        let mut out = Vec::new();
        for (i, r) in self.representatives.iter().enumerate() {
            let audit = audit_components(r)?;
            if !self.family.matches(&audit) {
                return Err(Error::CertificationFailure(format!(
                    "{} member {i}: audit gives {}, expected {}",
                    self.id,
                    describe(&audit.descriptor),
                    self.family.summary()
                )));
            }
            out.push(audit);
        }
        for (i, w) in self.witnesses.iter().enumerate() {
            if !verify_witness(w)? {
                return Err(Error::CertificationFailure(format!("{} witness {i} does not verify", self.id)));
            }
        }
        Ok(out)
    }

    pub fn report(&self) -> RigidityReport {
        rigidity_report(&self.representatives, &self.witnesses)
    }
}

fn q(n: i64) -> Rat {
    Rat::from_int(n)
}

fn line(a: i64, b: i64, c: i64) -> Component {
    Component::Implicit(TernForm::linear([q(a), q(b), q(c)]))
}

fn param(c: [&[i64]; 3]) -> Component {
    Component::Param(ParamCurve::from_ints(c).expect("nonconstant"))
}

/// `z1^2 - z2 z3`.
fn q0() -> TernForm<Rat> {
    TernForm::from_ints(2, &[([2, 0, 0], 1), ([0, 1, 1], -1)])
}

fn conic() -> Component {
    Component::Implicit(q0())
}

/// Members of the pencils `Q0 + l z1 z3` and `Q0 + l z3^2`.
fn pen1(l: &Rat) -> Component {
    Component::Implicit(q0().add(&TernForm::monomial([1, 0, 1], l.clone())))
}

fn pen3(l: &Rat) -> Component {
    Component::Implicit(q0().add(&TernForm::monomial([0, 0, 2], l.clone())))
}

fn parx(a: &Rat) -> Component {
    let c = [vec![q(0), q(0), q(0), q(1)], vec![q(0), q(0), q(1)], vec![q(1), a.clone()]];
    Component::Param(ParamCurve::new(c.map(crate::exactalg::UniPoly::new)).expect("cubic"))
}

fn nu3(a: &Rat) -> Component {
    let c = [vec![q(0), q(0), q(0), q(0), q(1)], vec![q(0), q(0), q(0), q(1)], vec![q(1), a.clone()]];
    Component::Param(ParamCurve::new(c.map(crate::exactalg::UniPoly::new)).expect("quartic"))
}

/// `(z1 : z2 : z3) -> (z1 : a^-1 z2 : a^-3 z3)`.
fn parx_map(a: &Rat) -> ProjMap {
    ProjMap::diagonal([q(1), a.pow(-1), a.pow(-3)]).expect("a != 0")
}

fn sample_params() -> [Rat; 3] {
    [q(2), q(-3), Rat::new(1, 2)]
}

fn st(tag: SingTypeTag, components: &[usize], count: usize) -> StypeEntry {
    StypeEntry { tag, components: components.to_vec(), count, essential: true }
}

fn a(k: u32) -> SingTypeTag {
    SingTypeTag::a(k)
}

fn family(degrees: &[u32], stype: Vec<StypeEntry>, k: u32) -> FamilyDescriptor {
    FamilyDescriptor::new(degrees.to_vec(), vec![0; degrees.len()], stype, RigidityClass::Rigid(k)).expect("consistent catalog data")
}

fn entry(id: &str, family: FamilyDescriptor, representatives: Vec<Vec<Component>>, witnesses: Vec<Witness>) -> CatalogEntry {
    CatalogEntry { id: id.into(), family, representatives, witnesses }
}

fn one(id: &str, degrees: &[u32], stype: Vec<StypeEntry>, rep: Vec<Component>) -> CatalogEntry {
    entry(id, family(degrees, stype, 1), vec![rep], Vec::new())
}

/// One entry of the degree <= 4 catalog by id (`I1`..`I24`, `II1`, `II2`).
pub fn catalog_entry(id: &str) -> Result<CatalogEntry> {
    let t33 = SingTypeTag::ordinary(3);
    let cusp = || param([&[0, 0, 0, 1], &[0, 0, 1], &[1]]);
    let nodal = || param([&[-1, 0, 1], &[0, -1, 0, 1], &[1]]);
    Ok(match id {
        "I1" => one(id, &[1], vec![], vec![line(0, 0, 1)]),
        "I2" => one(id, &[1, 1], vec![st(a(1), &[0, 1], 1)], vec![line(1, 0, 0), line(0, 1, 0)]),
        "I3" => one(id, &[2], vec![], vec![conic()]),
        "I4" => one(
            id,
            &[1, 1, 1],
            vec![st(a(1), &[0, 1], 1), st(a(1), &[0, 2], 1), st(a(1), &[1, 2], 1)],
            vec![line(1, 0, 0), line(0, 1, 0), line(0, 0, 1)],
        ),
        "I5" => one(id, &[1, 1, 1], vec![st(t33, &[0, 1, 2], 1)], vec![line(1, 0, 0), line(0, 1, 0), line(1, 1, 0)]),
        "I6" => one(id, &[2, 1], vec![st(a(1), &[0, 1], 2)], vec![conic(), line(1, 0, 0)]),
        "I7" => one(id, &[2, 1], vec![st(a(3), &[0, 1], 1)], vec![conic(), line(0, 0, 1)]),
        "I8" => one(id, &[3], vec![st(a(1), &[0], 1)], vec![nodal()]),
        "I9" => one(id, &[3], vec![st(a(2), &[0], 1)], vec![cusp()]),
        "I10" => {
            let pairs = [[0, 1], [0, 2], [0, 3], [1, 2], [1, 3], [2, 3]];
            one(
                id,
                &[1, 1, 1, 1],
                pairs.iter().map(|p| st(a(1), p, 1)).collect(),
                vec![line(1, 0, 0), line(0, 1, 0), line(0, 0, 1), line(1, 1, 1)],
            )
        }
        "I11" => one(
            id,
            &[1, 1, 1, 1],
            vec![st(t33, &[0, 1, 2], 1), st(a(1), &[0, 3], 1), st(a(1), &[1, 3], 1), st(a(1), &[2, 3], 1)],
            vec![line(1, 0, 0), line(0, 1, 0), line(1, 1, 0), line(0, 0, 1)],
        ),
        "I12" => one(
            id,
            &[2, 1, 1],
            vec![st(a(3), &[0, 1], 1), st(a(3), &[0, 2], 1), st(a(1), &[1, 2], 1)],
            vec![conic(), line(0, 1, 0), line(0, 0, 1)],
        ),
        "I13" => one(
            id,
            &[2, 1, 1],
            vec![st(a(3), &[0, 1], 1), st(a(1), &[0, 2], 2), st(a(1), &[1, 2], 1)],
            vec![conic(), line(0, 0, 1), line(0, 1, -1)],
        ),
        "I14" => one(
            id,
            &[2, 1, 1],
            vec![st(SingTypeTag::decorated(2, 4, Decoration::UpperM), &[0, 1, 2], 1), st(a(1), &[0, 2], 1)],
            vec![conic(), line(0, 0, 1), line(1, 0, 0)],
        ),
        "I15" | "I16" => {
            let (member, stype): (fn(&Rat) -> Component, _) = if id == "I15" {
                (pen1, vec![st(a(5), &[0, 1], 1), st(a(1), &[0, 1], 1)])
            } else {
                (pen3, vec![st(a(7), &[0, 1], 1)])
            };
            // h_l = diag(l, l^2, 1) sends Q0 + Q1 to Q0 + Q_l, resp. Q0 + Q_{l^2}.
            let target = |l: &Rat| if id == "I15" { l.clone() } else { l * l };
            let c1 = vec![conic(), member(&q(1))];
            let mut reps = vec![c1.clone()];
            let mut ws = Vec::new();
            for l in sample_params() {
                let cl = vec![conic(), member(&target(&l))];
                let h = ProjMap::diagonal([l.clone(), &l * &l, q(1)])?;
                ws.push(Witness::new(h, c1.clone(), cl.clone()));
                reps.push(cl);
            }
            entry(id, family(&[2, 2], stype, 1), reps, ws)
        }
        "I17" => one(id, &[3, 1], vec![st(a(5), &[0, 1], 1), st(a(1), &[0], 1)], vec![nodal(), line(0, 0, 1)]),
        "I18" => one(
            id,
            &[3, 1],
            vec![st(SingTypeTag::decorated(2, 4, Decoration::UpperM), &[0, 1], 1)],
            vec![nodal(), line(-1, 1, 0)],
        ),
        "I19" => one(
            id,
            &[3, 1],
            vec![st(SingTypeTag::decorated(2, 3, Decoration::UpperN), &[0, 1], 1)],
            vec![cusp(), line(1, 0, 0)],
        ),
        "I20" => one(id, &[3, 1], vec![st(a(2), &[0], 1), st(a(5), &[0, 1], 1)], vec![cusp(), line(0, 0, 1)]),
        "I21" | "II1" => {
            let (l, stype, k, firsts) = if id == "I21" {
                (line(0, 0, 1), vec![st(a(3), &[0, 1], 1), st(a(2), &[0], 1), st(a(1), &[0, 1], 1)], 1, vec![q(1)])
            } else {
                let t = SingTypeTag::decorated(2, 3, Decoration::UpperM);
                (line(0, 1, 0), vec![st(t, &[0, 1], 1), st(a(1), &[0, 1], 1)], 2, vec![q(0), q(1)])
            };
            let mut reps: Vec<Vec<Component>> = firsts.iter().map(|x| vec![parx(x), l.clone()]).collect();
            let mut ws = Vec::new();
            for x in sample_params() {
                let c = vec![parx(&x), l.clone()];
                ws.push(Witness::new(parx_map(&x), c.clone(), vec![parx(&q(1)), l.clone()]));
                reps.push(c);
            }
            entry(id, family(&[3, 1], stype, k), reps, ws)
        }
        "I22" => one(id, &[4], vec![st(a(2), &[0], 3)], vec![Component::Implicit(solve_toe1(2)?.curve.form)]),
        "I23" => one(id, &[4], vec![st(a(4), &[0], 1), st(a(2), &[0], 1)], vec![param([&[0, 0, 0, 0, 1], &[0, 0, 1], &[1, 1]])]),
        "I24" => one(id, &[4], vec![st(a(6), &[0], 1)], vec![param([&[0, 0, 0, 0, 1], &[0, 0, -1, 1], &[1, -2]])]),
        "II2" => {
            let mut reps = vec![vec![nu3(&q(0))], vec![nu3(&q(1))]];
            let mut ws = Vec::new();
            for x in sample_params() {
                // (t^4, t^3, 1 + a t) -> (a^4 t^4, a^3 t^3, 1 + a t) is C_1 at s = a t.
                let h = ProjMap::diagonal([x.pow(4), x.pow(3), q(1)])?;
                ws.push(Witness::new(h, vec![nu3(&x)], vec![nu3(&q(1))]));
                reps.push(vec![nu3(&x)]);
            }
            entry(id, family(&[4], vec![st(SingTypeTag::tmn(3, 4), &[0], 1)], 2), reps, ws)
        }
        _ => return Err(Error::UnknownFamily(id.into())),
    })
}

/// A member of a catalog family: the first representative, or for the
/// families written with a parameter (`I15`, `I16`, `I21`, `II1`, `II2`)
/// the member at `a`.
pub fn catalog_member(id: &str, a: Option<&Rat>) -> Result<Vec<Component>> {
    let Some(a) = a else {
        return Ok(catalog_entry(id)?.representatives.swap_remove(0));
    };
    let nonzero = |what: &str| {
        if a.is_zero() {
            return Err(Error::BadParams(format!("{id} needs a nonzero {what}")));
        }
        Ok(())
    };
    Ok(match id {
        "I15" => {
            nonzero("pencil parameter")?;
            vec![conic(), pen1(a)]
        }
        "I16" => {
            nonzero("pencil parameter")?;
            vec![conic(), pen3(a)]
        }
        "I21" => {
            nonzero("a")?;
            vec![parx(a), line(0, 0, 1)]
        }
        "II1" => vec![parx(a), line(0, 1, 0)],
        "II2" => vec![nu3(a)],
        _ if CATALOG_IDS.contains(&id) => return Err(Error::BadParams(format!("{id} has no parameter"))),
        _ => return Err(Error::UnknownFamily(id.into())),
    })
}

/// The whole catalog, in the order of `CATALOG_IDS`.
pub fn catalog_small_degree() -> Result<Vec<CatalogEntry>> {
    CATALOG_IDS.iter().map(|id| catalog_entry(id)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_id() {
        assert!(matches!(catalog_entry("I25"), Err(Error::UnknownFamily(_))));
        assert!(matches!(catalog_member("I3", Some(&q(1))), Err(Error::BadParams(_))));
        assert!(matches!(catalog_member("I21", Some(&q(0))), Err(Error::BadParams(_))));
    }

    #[test]
    fn parametrized_members() {
        let e = catalog_entry("II2").unwrap();
        let audit = audit_components(&catalog_member("II2", Some(&q(7))).unwrap()).unwrap();
        assert!(e.family.matches(&audit));
    }

    #[test]
    fn every_entry_certifies() {
        for e in catalog_small_degree().unwrap() {
            if let Err(err) = e.certify() {
                panic!("{err}");
            }
        }
    }

    #[test]
    fn reports_reproduce_the_rigidity_class() {
        for e in catalog_small_degree().unwrap() {
            let r = e.report();
            let RigidityClass::Rigid(k) = e.family.rigidity_class else { unreachable!() };
            assert_eq!((e.id.as_str(), r.classes.len(), r.undecided), (e.id.as_str(), k as usize, 0));
        }
    }
}
