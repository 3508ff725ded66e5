//! The data `(d, g, S)` of an equisingular family together with its rigidity class.

use std::fmt;

use serde::de::{self, Deserializer};
use serde::{Deserialize, Serialize, Serializer};

use crate::curvelocal::{AuditReport, Descriptor, DescriptorEntry, SingTypeTag};
use crate::error::{Error, Result};

use super::{describe, descriptor_of};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RigidityClass {
    /// A union of exactly `k` orbits.
    Rigid(u32),
    NonRigid,
    Unknown,
}

impl Serialize for RigidityClass {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            RigidityClass::Rigid(k) => s.serialize_u32(*k),
            RigidityClass::NonRigid => s.serialize_str("non-rigid"),
            RigidityClass::Unknown => s.serialize_str("unknown"),
        }
    }
}

impl<'de> Deserialize<'de> for RigidityClass {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<RigidityClass, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            K(u32),
            S(String),
        }
        match Raw::deserialize(d)? {
            Raw::K(0) => Err(de::Error::custom("rigidity class must be positive")),
            Raw::K(k) => Ok(RigidityClass::Rigid(k)),
            Raw::S(s) if s == "non-rigid" => Ok(RigidityClass::NonRigid),
            Raw::S(s) if s == "unknown" => Ok(RigidityClass::Unknown),
            Raw::S(s) => Err(de::Error::custom(format!("unknown rigidity class {s:?}"))),
        }
    }
}

impl fmt::Display for RigidityClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RigidityClass::Rigid(k) => write!(f, "{k}-rigid"),
            RigidityClass::NonRigid => write!(f, "non-rigid"),
            RigidityClass::Unknown => write!(f, "unknown"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StypeEntry {
    pub tag: SingTypeTag,
    pub components: Vec<usize>,
    pub count: usize,
    #[serde(default = "yes")]
    pub essential: bool,
}

fn yes() -> bool {
    true
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyDescriptor {
    pub degrees: Vec<u32>,
    pub genera: Vec<u32>,
    pub stype: Vec<StypeEntry>,
    pub rigidity_class: RigidityClass,
}

impl FamilyDescriptor {
    /// Checks the shape and the genus bookkeeping
    /// `sum delta = (d-1)(d-2)/2 - sum g + N - 1`.
    pub fn new(degrees: Vec<u32>, genera: Vec<u32>, stype: Vec<StypeEntry>, rigidity_class: RigidityClass) -> Result<Self> {
        let bad = |s: String| Err(Error::BadParams(s));
        if degrees.is_empty() || degrees.len() != genera.len() || degrees.contains(&0) {
            return bad(format!("{} degrees and {} genera", degrees.len(), genera.len()));
        }
        for e in &stype {
            let sorted = e.components.windows(2).all(|w| w[0] < w[1]);
            if e.components.is_empty() || !sorted || e.components.iter().any(|&c| c >= degrees.len()) || e.count == 0 {
                return bad(format!("bad component subset {:?} for {}", e.components, e.tag));
            }
        }
        let f = FamilyDescriptor { degrees, genera, stype, rigidity_class };
        let (have, want) = (f.delta_sum(), f.expected_delta());
        if have != want {
            return bad(format!("delta sum {have} does not match the genus formula, which needs {want}"));
        }
        Ok(f)
    }

    /// The family an audited curve belongs to; `essential` marks the entries
    /// that pin the family down.
    pub fn from_audit(
        audit: &AuditReport,
        rigidity_class: RigidityClass,
        essential: impl Fn(&DescriptorEntry) -> bool,
    ) -> Result<Self> {
        let genera = audit
            .genera
            .iter()
            .map(|&g| u32::try_from(g).map_err(|_| Error::CertificationFailure(format!("negative genus {g}"))))
            .collect::<Result<Vec<u32>>>()?;
        let stype = audit
            .descriptor
            .0
            .iter()
            .map(|e| StypeEntry { tag: e.tag, components: e.components.clone(), count: e.count, essential: essential(e) })
            .collect();
        FamilyDescriptor::new(audit.degrees.clone(), genera, stype, rigidity_class)
    }

    pub fn components(&self) -> usize {
        self.degrees.len()
    }

    pub fn delta_sum(&self) -> i64 {
        self.stype.iter().map(|e| e.tag.delta() as i64 * e.count as i64).sum()
    }

    /// The delta total forced by the degrees and genera.
    pub fn expected_delta(&self) -> i64 {
        let d: i64 = self.degrees.iter().map(|&x| x as i64).sum();
        let g: i64 = self.genera.iter().map(|&x| x as i64).sum();
        (d - 1) * (d - 2) / 2 - g + self.degrees.len() as i64 - 1
    }

    pub fn descriptor(&self) -> Descriptor {
        let v: Vec<(SingTypeTag, Vec<usize>, usize)> = self.stype.iter().map(|e| (e.tag, e.components.clone(), e.count)).collect();
        descriptor_of(&v)
    }

    pub fn essential(&self) -> Descriptor {
        let v: Vec<(SingTypeTag, Vec<usize>, usize)> =
            self.stype.iter().filter(|e| e.essential).map(|e| (e.tag, e.components.clone(), e.count)).collect();
        descriptor_of(&v)
    }

    /// Whether an audit has these degrees, genera and singularities, up to
    /// renumbering components of equal degree and genus.
    pub fn matches(&self, audit: &AuditReport) -> bool {
        let n = self.components();
        if audit.degrees.len() != n {
            return false;
        }
        let want = self.descriptor();
        let mut perm: Vec<usize> = (0..n).collect();
        loop {
            let fits = (0..n).all(|i| audit.degrees[perm[i]] == self.degrees[i] && audit.genera[perm[i]] == self.genera[i] as i64);
            if fits && relabel(&audit.descriptor, &perm) == want {
                return true;
            }
            if !next_permutation(&mut perm) {
                return false;
            }
        }
    }

    pub fn summary(&self) -> String {
        format!("V({:?}; {:?}; {})", self.degrees, self.genera, describe(&self.descriptor()))
    }
}

/// The descriptor with audit component `perm[i]` renamed to `i`.
fn relabel(d: &Descriptor, perm: &[usize]) -> Descriptor {
    let inv = |c: usize| perm.iter().position(|&p| p == c).expect("permutation");
    let v: Vec<(SingTypeTag, Vec<usize>, usize)> = d
        .0
        .iter()
        .map(|e| {
            let mut c: Vec<usize> = e.components.iter().map(|&c| inv(c)).collect();
            c.sort();
            (e.tag, c, e.count)
        })
        .collect();
    descriptor_of(&v)
}

fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).expect("exists");
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curvelocal::{audit_components, Component};
    use crate::exactalg::TernForm;

    fn entry(tag: SingTypeTag, components: Vec<usize>, count: usize) -> StypeEntry {
        StypeEntry { tag, components, count, essential: true }
    }

    #[test]
    fn genus_bookkeeping() {
        let ok = FamilyDescriptor::new(vec![4], vec![0], vec![entry(SingTypeTag::a(2), vec![0], 3)], RigidityClass::Rigid(1));
        assert!(ok.is_ok());
        let bad = FamilyDescriptor::new(vec![4], vec![0], vec![entry(SingTypeTag::a(2), vec![0], 2)], RigidityClass::Rigid(1));
        assert!(bad.is_err());
        assert!(FamilyDescriptor::new(vec![], vec![], vec![], RigidityClass::Unknown).is_err());
    }

    #[test]
    fn json_forms() {
        let f = FamilyDescriptor::new(vec![1, 1], vec![0, 0], vec![entry(SingTypeTag::a(1), vec![0, 1], 1)], RigidityClass::Rigid(1))
            .unwrap();
        let s = serde_json::to_string(&f).unwrap();
        assert_eq!(
            s,
            r#"{"degrees":[1,1],"genera":[0,0],"stype":[{"tag":"A1","components":[0,1],"count":1,"essential":true}],"rigidity_class":1}"#
        );
        assert_eq!(serde_json::from_str::<FamilyDescriptor>(&s).unwrap(), f);
        assert_eq!(serde_json::to_string(&RigidityClass::NonRigid).unwrap(), r#""non-rigid""#);
        assert!(serde_json::from_str::<RigidityClass>("0").is_err());
    }

    #[test]
    fn matching_allows_renumbering() {
        let conic = TernForm::from_ints(2, &[([2, 0, 0], 1), ([0, 1, 1], -1)]);
        let c = [Component::Implicit(TernForm::var(2)), Component::Implicit(conic)];
        let audit = audit_components(&c).unwrap();
        let f = FamilyDescriptor::new(vec![2, 1], vec![0, 0], vec![entry(SingTypeTag::a(3), vec![0, 1], 1)], RigidityClass::Rigid(1))
            .unwrap();
        assert!(f.matches(&audit));
    }
}
