use std::fmt;

use serde::{Deserialize, Serialize};

use crate::curvelocal::{Component, ParamCurve};
use crate::error::{Error, Result};
use crate::exactalg::{Rat, TernForm};

pub type Mat3 = [[Rat; 3]; 3];

/// An invertible linear map of the plane, `z -> M z`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "Mat3", into = "Mat3")]
pub struct ProjMap {
    m: Mat3,
}

impl TryFrom<Mat3> for ProjMap {
    type Error = Error;

    fn try_from(m: Mat3) -> Result<ProjMap> {
        ProjMap::new(m)
    }
}

impl From<ProjMap> for Mat3 {
    fn from(h: ProjMap) -> Mat3 {
        h.m
    }
}

pub fn det3(m: &Mat3) -> Rat {
    &m[0][0] * &(&m[1][1] * &m[2][2] - &m[1][2] * &m[2][1]) - &m[0][1] * &(&m[1][0] * &m[2][2] - &m[1][2] * &m[2][0])
        + &m[0][2] * &(&m[1][0] * &m[2][1] - &m[1][1] * &m[2][0])
}

pub fn mat_mul(a: &Mat3, b: &Mat3) -> Mat3 {
    std::array::from_fn(|i| std::array::from_fn(|j| (0..3).map(|k| &a[i][k] * &b[k][j]).fold(Rat::zero(), |s, x| s + x)))
}

pub fn mat_vec(a: &Mat3, v: &[Rat; 3]) -> [Rat; 3] {
    std::array::from_fn(|i| (0..3).map(|k| &a[i][k] * &v[k]).fold(Rat::zero(), |s, x| s + x))
}

/// Inverse by the adjugate; `None` for a singular matrix.
pub fn mat_inverse(m: &Mat3) -> Option<Mat3> {
    let det = det3(m);
    if det.is_zero() {
        return None;
    }
    let c = |i: usize, j: usize| {
        let (r0, r1) = ((i + 1) % 3, (i + 2) % 3);
        let (c0, c1) = ((j + 1) % 3, (j + 2) % 3);
        &m[r0][c0] * &m[r1][c1] - &m[r0][c1] * &m[r1][c0]
    };
    Some(std::array::from_fn(|i| std::array::from_fn(|j| c(j, i) / det.clone())))
}

impl ProjMap {
    pub fn new(m: Mat3) -> Result<ProjMap> {
        if det3(&m).is_zero() {
            return Err(Error::SingularMatrix);
        }
        Ok(ProjMap { m })
    }

    pub fn from_ints(m: [[i64; 3]; 3]) -> Result<ProjMap> {
        ProjMap::new(m.map(|r| r.map(Rat::from_int)))
    }

    pub fn identity() -> ProjMap {
        ProjMap::diagonal([Rat::one(), Rat::one(), Rat::one()]).expect("invertible")
    }

    /// `(z1 : z2 : z3) -> (a z1 : b z2 : c z3)`.
    pub fn diagonal(d: [Rat; 3]) -> Result<ProjMap> {
        let z = Rat::zero();
        ProjMap::new([
            [d[0].clone(), z.clone(), z.clone()],
            [z.clone(), d[1].clone(), z.clone()],
            [z.clone(), z, d[2].clone()],
        ])
    }

    pub fn matrix(&self) -> &Mat3 {
        &self.m
    }

    /// `self` after `first`.
    pub fn compose(&self, first: &ProjMap) -> ProjMap {
        ProjMap { m: mat_mul(&self.m, &first.m) }
    }

    pub fn inverse(&self) -> ProjMap {
        ProjMap { m: mat_inverse(&self.m).expect("invertible by construction") }
    }

    pub fn apply_point(&self, p: &[Rat; 3]) -> [Rat; 3] {
        mat_vec(&self.m, p)
    }

    pub fn apply_param(&self, c: &ParamCurve) -> Result<ParamCurve> {
        c.transform(&self.m)
    }

    /// The image of `F = 0` is `F(h^-1 z) = 0`.
    pub fn apply_form(&self, f: &TernForm<Rat>) -> TernForm<Rat> {
        f.substitute_linear(&self.inverse().m).normalize()
    }

    pub fn apply(&self, c: &Component) -> Result<Component> {
        Ok(match c {
            Component::Param(p) => Component::Param(self.apply_param(p)?),
            Component::Implicit(f) => Component::Implicit(self.apply_form(f)),
        })
    }

    /// Whether the two maps agree up to a scalar.
    pub fn projectively_equal(&self, o: &ProjMap) -> bool {
        let a: Vec<&Rat> = self.m.iter().flatten().collect();
        let b: Vec<&Rat> = o.m.iter().flatten().collect();
        let k = (0..9).find(|&i| !a[i].is_zero()).expect("nonzero matrix");
        if b[k].is_zero() {
            return false;
        }
        (0..9).all(|i| a[i] * b[k] == b[i] * a[k])
    }
}

impl fmt::Display for ProjMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> =
            self.m.iter().map(|r| format!("[{}, {}, {}]", r[0], r[1], r[2])).collect();
        write!(f, "[{}]", rows.join(", "))
    }
}

/// `apply_map` over either kind of component.
pub fn apply_map(h: &ProjMap, c: &Component) -> Result<Component> {
    h.apply(c)
}
