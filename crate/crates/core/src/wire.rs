//! The versioned JSON file formats for curves and witnesses.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::curvelocal::Component;
use crate::error::{Error, Result};
use crate::families::FamilyDescriptor;
use crate::rigidity::Witness;

pub const FORMAT_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LabeledComponent {
    pub component: Component,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Provenance {
    pub family: String,
    #[serde(default)]
    pub params: BTreeMap<String, String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Metadata {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub descriptor: Option<FamilyDescriptor>,
    #[serde(default)]
    pub provenance: Provenance,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CurveFile {
    pub format_version: u32,
    pub components: Vec<LabeledComponent>,
    #[serde(default)]
    pub metadata: Metadata,
}

fn check_version(v: u32) -> Result<()> {
    if v != FORMAT_VERSION {
        return Err(Error::Parse(format!("unsupported format_version {v}, expected {FORMAT_VERSION}")));
    }
    Ok(())
}

impl CurveFile {
    pub fn new(components: Vec<Component>, descriptor: Option<FamilyDescriptor>, provenance: Provenance) -> CurveFile {
        let components = components.into_iter().map(|component| LabeledComponent { component, label: None }).collect();
        CurveFile { format_version: FORMAT_VERSION, components, metadata: Metadata { descriptor, provenance } }
    }

    pub fn curve(&self) -> Vec<Component> {
        self.components.iter().map(|c| c.component.clone()).collect()
    }

    /// Parses and validates a curve file.
    pub fn from_json(s: &str) -> Result<CurveFile> {
        let f: CurveFile = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        check_version(f.format_version)?;
        if f.components.is_empty() {
            return Err(Error::Parse("a curve file needs at least one component".into()));
        }
        for (i, c) in f.components.iter().enumerate() {
            if let Component::Implicit(g) = &c.component {
                if g.is_zero() || g.degree() == 0 {
                    return Err(Error::Parse(format!("component {i} is a constant form")));
                }
            }
        }
        if let Some(d) = &f.metadata.descriptor {
            let degrees: Vec<u32> = f.components.iter().map(|c| c.component.degree()).collect();
            if d.degrees != degrees {
                return Err(Error::Parse(format!("descriptor degrees {:?} do not match components {:?}", d.degrees, degrees)));
            }
            FamilyDescriptor::new(d.degrees.clone(), d.genera.clone(), d.stype.clone(), d.rigidity_class)
                .map_err(|e| Error::Parse(e.to_string()))?;
        }
        Ok(f)
    }

    /// Canonical form: fixed field order, two-space indentation, trailing newline.
    pub fn to_json(&self) -> String {
        canonical(self)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WitnessFile {
    pub format_version: u32,
    pub witnesses: Vec<Witness>,
}

impl WitnessFile {
    pub fn new(witnesses: Vec<Witness>) -> WitnessFile {
        WitnessFile { format_version: FORMAT_VERSION, witnesses }
    }

    pub fn from_json(s: &str) -> Result<WitnessFile> {
        let f: WitnessFile = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        check_version(f.format_version)?;
        Ok(f)
    }

    pub fn to_json(&self) -> String {
        canonical(self)
    }
}

/// Pretty JSON with a trailing newline; struct fields keep declaration
/// order and maps are ordered, so equal values print identically.
pub fn canonical<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curvelocal::ParamCurve;
    use crate::exactalg::TernForm;

    fn sample() -> CurveFile {
        let c = ParamCurve::from_ints([&[0, 0, 0, 1], &[0, 0, 1], &[1, 1]]).unwrap();
        let mut params = BTreeMap::new();
        params.insert("a".to_string(), "1".to_string());
        CurveFile::new(
            vec![Component::Param(c), Component::Implicit(TernForm::var(2))],
            None,
            Provenance { family: "I21".into(), params },
        )
    }

    #[test]
    fn round_trip() {
        let s = sample().to_json();
        let back = CurveFile::from_json(&s).unwrap();
        assert_eq!(back, sample());
        assert_eq!(back.to_json(), s);
    }

    #[test]
    fn rationals_are_strings() {
        let s = sample().to_json();
        assert!(s.contains("\"1\""));
        assert!(s.contains("\"format_version\": 1"));
    }

    #[test]
    fn rejects() {
        assert!(CurveFile::from_json("{}").is_err());
        let s = sample().to_json().replace("\"format_version\": 1", "\"format_version\": 7");
        assert!(matches!(CurveFile::from_json(&s), Err(Error::Parse(_))));
        assert!(CurveFile::from_json(r#"{"format_version":1,"components":[]}"#).is_err());
    }
}
