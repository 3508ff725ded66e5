use serde::{Deserialize, Serialize};

use crate::curvelocal::{Component, ParamCurve};
use crate::error::{Error, Result};
use crate::exactalg::{Rat, TernForm, UniPoly};

use super::map::{det3, mat_inverse, Mat3};

/// Three non-concurrent lines, given by their coefficient vectors.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Triangle {
    lines: [[Rat; 3]; 3],
}

impl Triangle {
    pub fn new(lines: [[Rat; 3]; 3]) -> Result<Triangle> {
        if det3(&lines).is_zero() {
            return Err(Error::DegenerateInput("triangle lines are concurrent or repeated".into()));
        }
        Ok(Triangle { lines })
    }

    /// `z1 z2 z3 = 0`.
    pub fn coordinate() -> Triangle {
        let (o, z) = (Rat::one(), Rat::zero());
        Triangle::new([[o.clone(), z.clone(), z.clone()], [z.clone(), o.clone(), z.clone()], [z.clone(), z, o]])
            .expect("independent")
    }

    /// From three linear forms.
    pub fn from_forms(forms: &[TernForm<Rat>; 3]) -> Result<Triangle> {
        let mut lines = Vec::with_capacity(3);
        for f in forms {
            if f.degree() != 1 {
                return Err(Error::DegenerateInput("triangle sides must be lines".into()));
            }
            lines.push(f.line_coeffs(&Rat::zero()));
        }
        Triangle::new([lines[0].clone(), lines[1].clone(), lines[2].clone()])
    }

    pub fn lines(&self) -> &[[Rat; 3]; 3] {
        &self.lines
    }

    pub fn forms(&self) -> [TernForm<Rat>; 3] {
        self.lines.clone().map(|l| TernForm::linear(l).normalize())
    }

    /// Vertex opposite to side `i`.
    pub fn vertex(&self, i: usize) -> [Rat; 3] {
        let (a, b) = ((i + 1) % 3, (i + 2) % 3);
        crate::curvelocal::param::cross_rat(&self.lines[a], &self.lines[b])
    }
}

/// The standard quadratic transformation with fundamental points at the
/// vertices of `t`: in coordinates `w_i = L_i(z)` it is
/// `(w1 : w2 : w3) -> (w2 w3 : w1 w3 : w1 w2)`.
pub fn cremona_sigma(c: &Component, t: &Triangle) -> Result<Component> {
    let m: &Mat3 = &t.lines;
    let minv = mat_inverse(m).expect("triangle matrix is invertible");
    match c {
        Component::Param(p) => {
            let w: [UniPoly<Rat>; 3] = std::array::from_fn(|i| {
                (0..3).fold(UniPoly::zero(), |acc, j| &acc + &p.coords()[j].scale(&m[i][j]))
            });
            if let Some(i) = (0..3).find(|&i| w[i].is_zero()) {
                return Err(Error::CurveContainsTriangleLine(i));
            }
            let s = [&w[1] * &w[2], &w[0] * &w[2], &w[0] * &w[1]];
            let z: [UniPoly<Rat>; 3] =
                std::array::from_fn(|i| (0..3).fold(UniPoly::zero(), |acc, j| &acc + &s[j].scale(&minv[i][j])));
            Ok(Component::Param(ParamCurve::new(z)?.with_label(p.label().map(|l| format!("sigma({l})")))))
        }
        Component::Implicit(f) => {
            let g = f.substitute_linear(&minv);
            let content = g.monomial_content();
            if let Some(i) = (0..3).find(|&i| content[i] > 0) {
                return Err(Error::CurveContainsTriangleLine(i));
            }
            let mut h = TernForm::zero(2 * g.degree());
            for (e, c) in g.terms() {
                h.add_term([e[1] + e[2], e[0] + e[2], e[0] + e[1]], c.clone());
            }
            let h = h.divide_monomial(h.monomial_content());
            Ok(Component::Implicit(h.substitute_linear(m).normalize()))
        }
    }
}
