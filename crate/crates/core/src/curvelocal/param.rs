use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactalg::{poly_gcd, Field, Rat, TernForm, UniPoly};

/// A point of the parameter line.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ParamPoint<E> {
    Finite(E),
    Infinity,
}

impl<E: fmt::Display> fmt::Display for ParamPoint<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParamPoint::Finite(t) => write!(f, "{t}"),
            ParamPoint::Infinity => write!(f, "inf"),
        }
    }
}

/// A birational map `P^1 -> P^2`, `t -> (z1(t) : z2(t) : z3(t))`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ParamCurve {
    coords: [UniPoly<Rat>; 3],
    degree: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    label: Option<String>,
}

#[derive(Deserialize)]
struct RawParam {
    coords: [UniPoly<Rat>; 3],
    #[serde(default)]
    label: Option<String>,
}

impl<'de> Deserialize<'de> for ParamCurve {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = RawParam::deserialize(d)?;
        let c = ParamCurve::new(raw.coords).map_err(serde::de::Error::custom)?;
        Ok(c.with_label(raw.label))
    }
}

impl ParamCurve {
    /// Removes the common factor of the coordinates and checks that the map
    /// is a birational parametrization of a curve.
    pub fn new(coords: [UniPoly<Rat>; 3]) -> Result<ParamCurve> {
        if coords.iter().all(|c| c.is_zero()) {
            return Err(Error::DegenerateInput("all coordinates vanish".into()));
        }
        let g = poly_gcd(&poly_gcd(&coords[0], &coords[1]), &coords[2]);
        let coords = coords.map(|c| c.exact_div(&g).expect("gcd divides"));
        let curve = ParamCurve { degree: coords.iter().map(|c| c.deg().max(0) as u32).max().unwrap(), coords, label: None };
        if curve.tangent_minors().iter().all(|m| m.is_zero()) {
            return Err(Error::DegenerateInput("the image is a point".into()));
        }
        if !curve.is_birational() {
            return Err(Error::DegenerateInput("the parametrization is not birational onto its image".into()));
        }
        Ok(curve)
    }

    pub fn from_ints(c: [&[i64]; 3]) -> Result<ParamCurve> {
        ParamCurve::new(c.map(UniPoly::from_ints))
    }

    pub fn with_label(mut self, label: Option<String>) -> ParamCurve {
        self.label = label;
        self
    }

    pub fn labeled(self, label: &str) -> ParamCurve {
        self.with_label(Some(label.to_string()))
    }

    pub fn coords(&self) -> &[UniPoly<Rat>; 3] {
        &self.coords
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    pub fn is_line(&self) -> bool {
        self.degree == 1
    }

    /// `f(t0)`, or the leading coefficients at `t = inf`.
    pub fn point_at<E: Field>(&self, t: &ParamPoint<E>, like: &E) -> [E; 3] {
        match t {
            ParamPoint::Finite(t0) => self.coords.clone().map(|c| c.map(|x| like.embed(x)).eval(t0)),
            ParamPoint::Infinity => self.infinity_point().map(|c| like.embed(&c)),
        }
    }

    pub fn point_at_rat(&self, t: &ParamPoint<Rat>) -> [Rat; 3] {
        match t {
            ParamPoint::Finite(t0) => self.coords.clone().map(|c| c.eval(t0)),
            ParamPoint::Infinity => self.infinity_point(),
        }
    }

    pub fn infinity_point(&self) -> [Rat; 3] {
        let d = self.degree as usize;
        self.coords.clone().map(|c| c.coeff(d).cloned().unwrap_or_else(Rat::zero))
    }

    /// The same curve under `t -> 1/t`, so that `t = inf` moves to `0`.
    pub fn reversed(&self) -> ParamCurve {
        let d = self.degree as usize;
        ParamCurve { coords: self.coords.clone().map(|c| c.reversed(d)), degree: self.degree, label: self.label.clone() }
    }

    /// Coordinates of `f(t0 + s)` as polynomials in `s` (or of the reversed
    /// curve at `s = 0` for `t0 = inf`).
    pub fn local_coords<E: Field>(&self, t: &ParamPoint<E>, like: &E) -> [UniPoly<E>; 3] {
        match t {
            ParamPoint::Finite(t0) => self.coords.clone().map(|c| c.map(|x| like.embed(x)).taylor_shift(t0)),
            ParamPoint::Infinity => self.reversed().coords.map(|c| c.map(|x| like.embed(x))),
        }
    }

    /// `f((a t + b) / (c t + d))` with denominators cleared.
    pub fn mobius(&self, m: [[Rat; 2]; 2]) -> Result<ParamCurve> {
        let det = &m[0][0] * &m[1][1] - &m[0][1] * &m[1][0];
        if det.is_zero() {
            return Err(Error::SingularMatrix);
        }
        let num = UniPoly::new(vec![m[0][1].clone(), m[0][0].clone()]);
        let den = UniPoly::new(vec![m[1][1].clone(), m[1][0].clone()]);
        let d = self.degree;
        let coords = self.coords.clone().map(|c| {
            let mut acc = UniPoly::zero();
            for (k, a) in c.coeffs().iter().enumerate() {
                let term = &num.pow(k as u32) * &den.pow(d - k as u32);
                acc = &acc + &term.scale(a);
            }
            acc
        });
        Ok(ParamCurve::new(coords)?.with_label(self.label.clone()))
    }

    /// Compose with a linear map of the plane: `t -> M f(t)`.
    pub fn transform(&self, m: &[[Rat; 3]; 3]) -> Result<ParamCurve> {
        let coords = [0, 1, 2].map(|i| {
            let mut acc = UniPoly::zero();
            for j in 0..3 {
                acc = &acc + &self.coords[j].scale(&m[i][j]);
            }
            acc
        });
        Ok(ParamCurve::new(coords)?.with_label(self.label.clone()))
    }

    pub fn derivative(&self) -> [UniPoly<Rat>; 3] {
        self.coords.clone().map(|c| c.derivative())
    }

    /// The three 2x2 minors of `[f; f']`, i.e. `f x f'`.
    pub fn tangent_minors(&self) -> [UniPoly<Rat>; 3] {
        cross(&self.coords, &self.derivative())
    }

    /// `F(f(t))`.
    pub fn pullback(&self, form: &TernForm<Rat>) -> UniPoly<Rat> {
        form.pullback(&self.coords)
    }

    /// `det [f, f', f'']`.
    pub fn wronskian(&self) -> UniPoly<Rat> {
        let d1 = self.derivative();
        let d2 = d1.clone().map(|c| c.derivative());
        let c = cross(&d1, &d2);
        let mut acc = UniPoly::zero();
        for i in 0..3 {
            acc = &acc + &(&self.coords[i] * &c[i]);
        }
        acc
    }

    /// A generic fiber has one point: for some `t0` among the first
    /// `(d-1)(d-2) + d + 1` integers the fiber over `f(t0)` is `{t0}` alone.
    fn is_birational(&self) -> bool {
        let d = self.degree as i64;
        if d == 1 {
            return true;
        }
        let inf = self.infinity_point();
        let tries = (d - 1) * (d - 2) + d + 1;
        (0..tries).any(|k| {
            let t0 = Rat::from_int(k);
            let p = self.point_at_rat(&ParamPoint::Finite(t0));
            if cross_rat(&p, &inf).iter().all(|c| c.is_zero()) {
                return false;
            }
            let pc = p.map(UniPoly::constant);
            let fiber = cross(&self.coords, &pc);
            let g = poly_gcd(&poly_gcd(&fiber[0], &fiber[1]), &fiber[2]);
            g.deg() == 1
        })
    }
}

impl fmt::Display for ParamCurve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.coords[0], self.coords[1], self.coords[2])
    }
}

pub fn cross<E: Field>(a: &[UniPoly<E>; 3], b: &[UniPoly<E>; 3]) -> [UniPoly<E>; 3] {
    [
        &(&a[1] * &b[2]) - &(&a[2] * &b[1]),
        &(&a[2] * &b[0]) - &(&a[0] * &b[2]),
        &(&a[0] * &b[1]) - &(&a[1] * &b[0]),
    ]
}

pub fn cross_rat(a: &[Rat; 3], b: &[Rat; 3]) -> [Rat; 3] {
    [&a[1] * &b[2] - &a[2] * &b[1], &a[2] * &b[0] - &a[0] * &b[2], &a[0] * &b[1] - &a[1] * &b[0]]
}

pub fn cross_field<E: Field>(a: &[E; 3], b: &[E; 3]) -> [E; 3] {
    [
        a[1].times(&b[2]).minus(&a[2].times(&b[1])),
        a[2].times(&b[0]).minus(&a[0].times(&b[2])),
        a[0].times(&b[1]).minus(&a[1].times(&b[0])),
    ]
}

/// Scale so that the last nonzero coordinate is 1.
pub fn normalize_point<E: Field>(p: &[E; 3]) -> [E; 3] {
    let k = (0..3).rev().find(|&i| !p[i].is_zero()).expect("nonzero point");
    let inv = p[k].inverse();
    p.clone().map(|c| c.times(&inv))
}
