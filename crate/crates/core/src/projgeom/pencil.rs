use serde::{Deserialize, Serialize};

use crate::curvelocal::param::cross_rat;
use crate::curvelocal::Coords;
use crate::error::{Error, Result};
use crate::exactalg::factor::{factor_q, interpolate_q};
use crate::exactalg::{Field, NumberField, Rat, TernForm, UniPoly};

use super::map::{det3, Mat3};

/// The conics `base + lambda * direction`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Pencil {
    pub base: TernForm<Rat>,
    pub direction: TernForm<Rat>,
    #[serde(default = "default_parameter")]
    pub parameter: String,
}

fn default_parameter() -> String {
    "lambda".into()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LambdaValue {
    Rational(Rat),
    Infinity,
    /// Every root of an irreducible polynomial of degree > 1.
    Conjugates(UniPoly<Rat>),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MemberLines {
    DoubleLine([Rat; 3]),
    TwoLines([Rat; 3], [Rat; 3]),
    /// One of two lines conjugate over a quadratic field.
    ConjugateLines(Coords),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegenerateMember {
    pub lambda: LambdaValue,
    pub rank: usize,
    /// `None` for members at irrational parameters.
    pub lines: Option<MemberLines>,
}

impl Pencil {
    pub fn new(base: TernForm<Rat>, direction: TernForm<Rat>) -> Result<Pencil> {
        if base.degree() != 2 || direction.degree() != 2 {
            return Err(Error::DegenerateInput("pencil members must be conics".into()));
        }
        if base.is_zero() || direction.is_zero() || base.normalize() == direction.normalize() {
            return Err(Error::DegenerateInput("pencil generators are proportional".into()));
        }
        Ok(Pencil { base, direction, parameter: default_parameter() })
    }

    pub fn member(&self, lambda: &Rat) -> TernForm<Rat> {
        self.base.add(&self.direction.scale(lambda))
    }

    /// `det(S_base + lambda S_direction)`.
    pub fn discriminant(&self) -> UniPoly<Rat> {
        let (sb, sd) = (sym_matrix(&self.base), sym_matrix(&self.direction));
        let xs: Vec<Rat> = (0..4).map(Rat::from_int).collect();
        let ys: Vec<Rat> = xs
            .iter()
            .map(|l| det3(&std::array::from_fn(|i| std::array::from_fn(|j| &sb[i][j] + &(&sd[i][j] * l)))))
            .collect();
        interpolate_q(&xs, &ys)
    }
}

/// Symmetric matrix of a quadratic form.
pub fn sym_matrix(q: &TernForm<Rat>) -> Mat3 {
    let z = Rat::zero();
    std::array::from_fn(|i| {
        std::array::from_fn(|j| {
            let mut e = [0u32; 3];
            e[i] += 1;
            e[j] += 1;
            let c = q.coeff(e, &z);
            if i == j {
                c
            } else {
                c / Rat::from_int(2)
            }
        })
    })
}

fn rank3(m: &Mat3) -> usize {
    if !det3(m).is_zero() {
        return 3;
    }
    let rows: Vec<&[Rat; 3]> = m.iter().collect();
    for a in 0..3 {
        for b in a + 1..3 {
            if cross_rat(rows[a], rows[b]).iter().any(|c| !c.is_zero()) {
                return 2;
            }
        }
    }
    if m.iter().flatten().any(|c| !c.is_zero()) {
        1
    } else {
        0
    }
}

/// Splits a singular conic into its lines.
pub fn split_conic(q: &TernForm<Rat>) -> Result<MemberLines> {
    let s = sym_matrix(q);
    match rank3(&s) {
        1 => {
            let row = s.iter().find(|r| r.iter().any(|c| !c.is_zero())).expect("rank one");
            Ok(MemberLines::DoubleLine(TernForm::linear(row.clone()).normalize().line_coeffs(&Rat::zero())))
        }
        2 => {
            let (a, b) = (0..3)
                .flat_map(|a| (a + 1..3).map(move |b| (a, b)))
                .find(|&(a, b)| cross_rat(&s[a], &s[b]).iter().any(|c| !c.is_zero()))
                .expect("rank two");
            let p = cross_rat(&s[a], &s[b]);
            // Restrict to a coordinate line z_k = 0 missing the vertex p.
            let k = (0..3).find(|&i| !p[i].is_zero()).expect("nonzero vertex");
            let (i, j) = crate::exactalg::tern::other_two(k);
            let z = Rat::zero();
            let (qa, qb, qc) = (sym(&s, i, i), sym(&s, i, j) * Rat::from_int(2), sym(&s, j, j));
            let disc = &(&qb * &qb) - &(&(&qa * &qc) * &Rat::from_int(4));
            let point = |x: Rat, y: Rat| {
                let mut v = [z.clone(), z.clone(), z.clone()];
                v[i] = x;
                v[j] = y;
                v
            };
            let line = |v: [Rat; 3]| TernForm::linear(cross_rat(&p, &v)).normalize().line_coeffs(&Rat::zero());
            if qa.is_zero() {
                let l1 = line(point(Rat::one(), Rat::zero()));
                let l2 = line(point(-qc, qb));
                return Ok(two_lines(l1, l2));
            }
            if let Some(r) = rational_sqrt(&disc) {
                let two_a = &qa * &Rat::from_int(2);
                let l1 = line(point(&(-&qb) + &r, two_a.clone()));
                let l2 = line(point(&(-&qb) - &r, two_a));
                return Ok(two_lines(l1, l2));
            }
            let k = NumberField::new(UniPoly::new(vec![-disc, Rat::zero(), Rat::one()]), "w")?;
            let w = k.gen();
            let mut v = [k.zero(), k.zero(), k.zero()];
            v[i] = w.minus(&k.from_rat(&qb));
            v[j] = k.from_rat(&(&qa * &Rat::from_int(2)));
            let pk = p.clone().map(|c| k.from_rat(&c));
            Ok(MemberLines::ConjugateLines(Coords::of_ext(&crate::curvelocal::param::cross_field(&pk, &v))))
        }
        _ => Err(Error::DegenerateInput("conic is not degenerate".into())),
    }
}

/// Lines in a fixed order, the one with the larger leading coefficients first.
fn two_lines(a: [Rat; 3], b: [Rat; 3]) -> MemberLines {
    if a >= b {
        MemberLines::TwoLines(a, b)
    } else {
        MemberLines::TwoLines(b, a)
    }
}

fn sym(s: &Mat3, i: usize, j: usize) -> Rat {
    s[i][j].clone()
}

fn rational_sqrt(r: &Rat) -> Option<Rat> {
    if r < &Rat::zero() {
        return None;
    }
    let sq = |n: &num_bigint::BigInt| {
        let s = n.sqrt();
        (&s * &s == *n).then_some(s)
    };
    Some(Rat::from_big(sq(r.numer())?, sq(r.denom())?))
}

/// Degenerate members of a pencil of conics, with their lines.
pub fn pencil_analysis(p: &Pencil) -> Result<Vec<DegenerateMember>> {
    let disc = p.discriminant();
    if disc.is_zero() {
        return Err(Error::IdenticallyDegenerate);
    }
    let mut out = Vec::new();
    for (h, _) in factor_q(&disc) {
        let h = h.monic();
        if h.deg() == 1 {
            let l = -h.coeffs()[0].clone();
            let q = p.member(&l);
            out.push(DegenerateMember {
                lambda: LambdaValue::Rational(l),
                rank: rank3(&sym_matrix(&q)),
                lines: Some(split_conic(&q)?),
            });
        } else {
            out.push(DegenerateMember { lambda: LambdaValue::Conjugates(h), rank: 2, lines: None });
        }
    }
    let sd = sym_matrix(&p.direction);
    if det3(&sd).is_zero() {
        out.push(DegenerateMember { lambda: LambdaValue::Infinity, rank: rank3(&sd), lines: Some(split_conic(&p.direction)?) });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn conic() -> TernForm<Rat> {
        TernForm::from_ints(2, &[([2, 0, 0], 1), ([0, 1, 1], -1)])
    }

    fn r3(v: [i64; 3]) -> [Rat; 3] {
        v.map(Rat::from_int)
    }

    #[test]
    fn pen1_has_a_single_degenerate_member_at_infinity() {
        let p = Pencil::new(conic(), TernForm::from_ints(2, &[([1, 0, 1], 1)])).unwrap();
        let m = pencil_analysis(&p).unwrap();
        assert_eq!(m.len(), 1);
        assert_eq!(m[0].lambda, LambdaValue::Infinity);
        assert_eq!(m[0].lines, Some(MemberLines::TwoLines(r3([1, 0, 0]), r3([0, 0, 1]))));
    }

    #[test]
    fn pen2_double_line_and_line_pair() {
        let p = Pencil::new(conic(), TernForm::from_ints(2, &[([2, 0, 0], 1)])).unwrap();
        let m = pencil_analysis(&p).unwrap();
        assert_eq!(m.len(), 2);
        assert_eq!(m[0].lambda, LambdaValue::Rational(Rat::from_int(-1)));
        assert_eq!(m[0].lines, Some(MemberLines::TwoLines(r3([0, 1, 0]), r3([0, 0, 1]))));
        assert_eq!(m[1].lambda, LambdaValue::Infinity);
        assert_eq!(m[1].lines, Some(MemberLines::DoubleLine(r3([1, 0, 0]))));
    }

    #[test]
    fn pen3_single_double_line() {
        let p = Pencil::new(conic(), TernForm::from_ints(2, &[([0, 0, 2], 1)])).unwrap();
        let m = pencil_analysis(&p).unwrap();
        assert_eq!(m.len(), 1);
        assert_eq!(m[0].lambda, LambdaValue::Infinity);
        assert_eq!(m[0].lines, Some(MemberLines::DoubleLine(r3([0, 0, 1]))));
    }

    #[test]
    fn conjugate_lines_and_identically_degenerate_pencils() {
        let q = TernForm::from_ints(2, &[([2, 0, 0], 1), ([0, 2, 0], -2)]);
        assert!(matches!(split_conic(&q), Ok(MemberLines::ConjugateLines(Coords::Algebraic { .. }))));
        let a = TernForm::from_ints(2, &[([2, 0, 0], 1)]);
        let b = TernForm::from_ints(2, &[([1, 1, 0], 1)]);
        assert_eq!(pencil_analysis(&Pencil::new(a, b).unwrap()), Err(Error::IdenticallyDegenerate));
    }
}
