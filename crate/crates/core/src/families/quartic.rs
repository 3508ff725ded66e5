//! Dimension count for equisingular strata of irreducible quartics.

use serde::Serialize;

use crate::curvelocal::{Decoration, SingTypeTag};
use crate::error::{Error, Result};

/// The types counted by `m1..m9`: `A1..A6`, `T(3,3)`, `T(2,3)^2`, `T(3,4)`.
pub fn quartic_types() -> [SingTypeTag; 9] {
    [
        SingTypeTag::a(1),
        SingTypeTag::a(2),
        SingTypeTag::a(3),
        SingTypeTag::a(4),
        SingTypeTag::a(5),
        SingTypeTag::a(6),
        SingTypeTag::ordinary(3),
        SingTypeTag::decorated(2, 3, Decoration::UpperM),
        SingTypeTag::tmn(3, 4),
    ]
}

const TYPE_WEIGHTS: [u32; 9] = [1, 1, 2, 2, 3, 3, 3, 3, 3];
const DIM_WEIGHTS: [u32; 9] = [1, 2, 3, 4, 5, 6, 4, 5, 6];

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StratumInfo {
    pub m: [u32; 9],
    pub dimension: i64,
    pub rigid_candidate: bool,
}

impl StratumInfo {
    /// The singularity type as `(tag, count)` pairs.
    pub fn stype(&self) -> Vec<(SingTypeTag, u32)> {
        quartic_types().into_iter().zip(self.m).filter(|(_, k)| *k > 0).collect()
    }

    pub fn label(&self) -> String {
        let parts: Vec<String> =
            self.stype().iter().map(|(t, k)| if *k == 1 { t.to_string() } else { format!("{k} {t}") }).collect();
        if parts.is_empty() {
            "smooth".into()
        } else {
            parts.join(" + ")
        }
    }
}

/// Dimension of the stratum `m1 A1 + ... + m6 A6 + m7 T(3,3) + m8 T(2,3)^2 + m9 T(3,4)`
/// and whether it is small enough (`<= 8`) to be a single orbit.
pub fn quartic_stratum_tools(m: [u32; 9]) -> Result<StratumInfo> {
    let weight: u32 = m.iter().zip(TYPE_WEIGHTS).map(|(a, w)| a * w).sum();
    if weight > 3 {
        return Err(Error::TypeBoundViolated(weight));
    }
    let dimension = 14 - m.iter().zip(DIM_WEIGHTS).map(|(a, w)| (a * w) as i64).sum::<i64>();
    Ok(StratumInfo { m, dimension, rigid_candidate: dimension <= 8 })
}

/// Every admissible `m` whose stratum is a rigid candidate.
pub fn enumerate_rigid_candidates() -> Vec<StratumInfo> {
    let mut out = Vec::new();
    let mut m = [0u32; 9];
    fn rec(i: usize, left: u32, m: &mut [u32; 9], out: &mut Vec<StratumInfo>) {
        if i == 9 {
            if let Ok(s) = quartic_stratum_tools(*m) {
                if s.rigid_candidate {
                    out.push(s);
                }
            }
            return;
        }
        for k in 0..=left / TYPE_WEIGHTS[i] {
            m[i] = k;
            rec(i + 1, left - k * TYPE_WEIGHTS[i], m, out);
        }
        m[i] = 0;
    }
    rec(0, 3, &mut m, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn three_cusps() {
        let s = quartic_stratum_tools([0, 3, 0, 0, 0, 0, 0, 0, 0]).unwrap();
        assert_eq!((s.dimension, s.rigid_candidate), (8, true));
        let smooth = quartic_stratum_tools([0; 9]).unwrap();
        assert_eq!((smooth.dimension, smooth.rigid_candidate), (14, false));
    }

    #[test]
    fn type_bound() {
        assert_eq!(quartic_stratum_tools([4, 0, 0, 0, 0, 0, 0, 0, 0]), Err(Error::TypeBoundViolated(4)));
    }

    #[test]
    fn the_four_candidates() {
        let labels: Vec<String> = enumerate_rigid_candidates().iter().map(|s| s.label()).collect();
        let mut want = vec!["3 A2", "A2 + A4", "A6", "T(3,4)"];
        let mut got: Vec<&str> = labels.iter().map(|s| s.as_str()).collect();
        want.sort();
        got.sort();
        assert_eq!(got, want);
    }
}
