use std::collections::BTreeMap;
use std::fmt;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

use super::bipoly::BiPoly;
use super::field::Field;
use super::modular::primitive_int;
use super::poly::UniPoly;
use super::rat::Rat;

pub type Exp = [u32; 3];

/// Homogeneous polynomial in `z1, z2, z3`; only nonzero terms are stored.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TernForm<F = Rat> {
    degree: u32,
    terms: BTreeMap<Exp, F>,
}

impl<F: Field> TernForm<F> {
    pub fn zero(degree: u32) -> Self {
        TernForm { degree, terms: BTreeMap::new() }
    }

    pub fn from_terms(degree: u32, terms: impl IntoIterator<Item = (Exp, F)>) -> Result<Self> {
        let mut f = TernForm::zero(degree);
        for (e, c) in terms {
            if e.iter().sum::<u32>() != degree {
                return Err(Error::Parse(format!("exponent {e:?} does not sum to {degree}")));
            }
            f.add_term(e, c);
        }
        Ok(f)
    }

    pub fn monomial(e: Exp, c: F) -> Self {
        let mut f = TernForm::zero(e.iter().sum());
        f.add_term(e, c);
        f
    }

    /// `a z1 + b z2 + c z3`.
    pub fn linear(c: [F; 3]) -> Self {
        let mut f = TernForm::zero(1);
        let [a, b, cc] = c;
        f.add_term([1, 0, 0], a);
        f.add_term([0, 1, 0], b);
        f.add_term([0, 0, 1], cc);
        f
    }

    /// Coefficients of a linear form.
    pub fn line_coeffs(&self, like: &F) -> [F; 3] {
        assert_eq!(self.degree, 1);
        [self.coeff([1, 0, 0], like), self.coeff([0, 1, 0], like), self.coeff([0, 0, 1], like)]
    }

    pub fn add_term(&mut self, e: Exp, c: F) {
        if c.is_zero() {
            return;
        }
        debug_assert_eq!(e.iter().sum::<u32>(), self.degree);
        match self.terms.remove(&e) {
            Some(old) => {
                let s = old.plus(&c);
                if !s.is_zero() {
                    self.terms.insert(e, s);
                }
            }
            None => {
                self.terms.insert(e, c);
            }
        }
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn terms(&self) -> &BTreeMap<Exp, F> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, e: Exp, like: &F) -> F {
        self.terms.get(&e).cloned().unwrap_or_else(|| like.zero_like())
    }

    pub fn sample(&self) -> Option<&F> {
        self.terms.values().next()
    }

    pub fn scale(&self, c: &F) -> Self {
        let mut f = TernForm::zero(self.degree);
        for (e, v) in &self.terms {
            f.add_term(*e, v.times(c));
        }
        f
    }

    pub fn neg(&self) -> Self {
        TernForm { degree: self.degree, terms: self.terms.iter().map(|(e, c)| (*e, c.negated())).collect() }
    }

    pub fn add(&self, o: &Self) -> Self {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        assert_eq!(self.degree, o.degree, "adding forms of different degree");
        let mut f = self.clone();
        for (e, c) in &o.terms {
            f.add_term(*e, c.clone());
        }
        f
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut f = TernForm::zero(self.degree + o.degree);
        for (a, x) in &self.terms {
            for (b, y) in &o.terms {
                f.add_term([a[0] + b[0], a[1] + b[1], a[2] + b[2]], x.times(y));
            }
        }
        f
    }

    pub fn pow(&self, k: u32, like: &F) -> Self {
        let mut acc = TernForm::monomial([0, 0, 0], like.one_like());
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn partial(&self, i: usize) -> Self {
        let mut f = TernForm::zero(self.degree.saturating_sub(1));
        for (e, c) in &self.terms {
            if e[i] > 0 {
                let mut e2 = *e;
                e2[i] -= 1;
                f.add_term(e2, c.mul_int(e[i] as i64));
            }
        }
        f
    }

    pub fn gradient(&self) -> [Self; 3] {
        [self.partial(0), self.partial(1), self.partial(2)]
    }

    pub fn eval(&self, p: &[F; 3]) -> F {
        let mut acc = p[0].zero_like();
        let pw = |x: &F, k: u32| x.powu(k as u64);
        for (e, c) in &self.terms {
            acc = acc.plus(&c.times(&pw(&p[0], e[0]).times(&pw(&p[1], e[1])).times(&pw(&p[2], e[2]))));
        }
        acc
    }

    /// `F(M z)`, i.e. `z_i -> sum_j M[i][j] z_j`.
    pub fn substitute_linear(&self, m: &[[F; 3]; 3]) -> Self {
        let like = match self.sample() {
            Some(c) => c.clone(),
            None => return TernForm::zero(self.degree),
        };
        let rows: Vec<TernForm<F>> = m.iter().map(|r| TernForm::linear(r.clone())).collect();
        let mut powers: Vec<Vec<TernForm<F>>> = Vec::new();
        for r in &rows {
            let mut v = vec![TernForm::monomial([0, 0, 0], like.one_like())];
            for k in 1..=self.degree {
                let next = v[k as usize - 1].mul(r);
                v.push(next);
            }
            powers.push(v);
        }
        let mut out = TernForm::zero(self.degree);
        for (e, c) in &self.terms {
            let t = powers[0][e[0] as usize].mul(&powers[1][e[1] as usize]).mul(&powers[2][e[2] as usize]);
            out = out.add(&t.scale(c));
        }
        out.degree = self.degree;
        out
    }

    /// Substitute three univariate polynomials: `F(f1(t), f2(t), f3(t))`.
    pub fn pullback(&self, f: &[UniPoly<F>; 3]) -> UniPoly<F> {
        let mut out = UniPoly::zero();
        let mut cache: BTreeMap<(usize, u32), UniPoly<F>> = BTreeMap::new();
        let mut pw = |i: usize, k: u32| -> UniPoly<F> {
            cache
                .entry((i, k))
                .or_insert_with(|| if k == 0 { UniPoly::zero() } else { f[i].pow(k) })
                .clone()
        };
        for (e, c) in &self.terms {
            let mut t = UniPoly::constant(c.clone());
            for i in 0..3 {
                if e[i] > 0 {
                    t = &t * &pw(i, e[i]);
                }
            }
            out = &out + &t;
        }
        out
    }

    /// Largest `(a, b, c)` with `z1^a z2^b z3^c` dividing the form.
    pub fn monomial_content(&self) -> Exp {
        let mut m = [u32::MAX; 3];
        for e in self.terms.keys() {
            for i in 0..3 {
                m[i] = m[i].min(e[i]);
            }
        }
        if self.terms.is_empty() {
            [0, 0, 0]
        } else {
            m
        }
    }

    pub fn divide_monomial(&self, d: Exp) -> Self {
        let mut f = TernForm::zero(self.degree - d.iter().sum::<u32>());
        for (e, c) in &self.terms {
            assert!(e[0] >= d[0] && e[1] >= d[1] && e[2] >= d[2], "monomial does not divide");
            f.add_term([e[0] - d[0], e[1] - d[1], e[2] - d[2]], c.clone());
        }
        f
    }

    /// Exact quotient, if `d` divides `self`.
    pub fn exact_div(&self, d: &Self) -> Option<Self> {
        let (lt, lc) = d.terms.iter().next_back()?;
        if d.degree > self.degree {
            return if self.is_zero() { Some(TernForm::zero(0)) } else { None };
        }
        let inv = lc.inverse();
        let mut r = self.clone();
        let mut q = TernForm::zero(self.degree - d.degree);
        while let Some((e, c)) = r.terms.iter().next_back().map(|(e, c)| (*e, c.clone())) {
            if e[0] < lt[0] || e[1] < lt[1] || e[2] < lt[2] {
                return None;
            }
            let qe = [e[0] - lt[0], e[1] - lt[1], e[2] - lt[2]];
            let qc = c.times(&inv);
            let t = TernForm::monomial(qe, qc.clone());
            r = r.sub(&t.mul(d));
            r.degree = self.degree;
            q.add_term(qe, qc);
        }
        Some(q)
    }

    /// Affine chart `z_k = 1`; the remaining coordinates in increasing index
    /// order become `(x, y)`.
    pub fn dehomogenize(&self, k: usize) -> BiPoly<F> {
        let (a, b) = other_two(k);
        let mut rows: Vec<Vec<F>> = Vec::new();
        let like = match self.sample() {
            Some(c) => c.clone(),
            None => return BiPoly::zero(),
        };
        for (e, c) in &self.terms {
            let (i, j) = (e[a] as usize, e[b] as usize);
            if rows.len() <= j {
                rows.resize(j + 1, Vec::new());
            }
            if rows[j].len() <= i {
                rows[j].resize(i + 1, like.zero_like());
            }
            rows[j][i] = rows[j][i].plus(c);
        }
        BiPoly::new(rows.into_iter().map(UniPoly::new).collect())
    }

    /// Inverse of [`dehomogenize`](Self::dehomogenize) at the given degree.
    pub fn homogenize(f: &BiPoly<F>, k: usize, degree: u32) -> Self {
        let (a, b) = other_two(k);
        let mut out = TernForm::zero(degree);
        for (j, row) in f.rows().iter().enumerate() {
            for (i, c) in row.coeffs().iter().enumerate() {
                let mut e = [0u32; 3];
                e[a] = i as u32;
                e[b] = j as u32;
                let s = (i + j) as u32;
                assert!(s <= degree, "affine degree exceeds target degree");
                e[k] = degree - s;
                out.add_term(e, c.clone());
            }
        }
        out
    }

    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> TernForm<G> {
        let mut out = TernForm::zero(self.degree);
        for (e, c) in &self.terms {
            out.add_term(*e, f(c));
        }
        out
    }
}

pub fn other_two(k: usize) -> (usize, usize) {
    match k {
        0 => (1, 2),
        1 => (0, 2),
        2 => (0, 1),
        _ => panic!("coordinate index out of range"),
    }
}

impl TernForm<Rat> {
    pub fn from_ints(degree: u32, terms: &[(Exp, i64)]) -> Self {
        TernForm::from_terms(degree, terms.iter().map(|(e, c)| (*e, Rat::from_int(*c)))).expect("valid exponents")
    }

    pub fn var(i: usize) -> Self {
        let mut e = [0; 3];
        e[i] = 1;
        TernForm::monomial(e, Rat::one())
    }

    /// Primitive integer coefficients with the leading term (lex-largest
    /// exponent, so highest power of `z1` first) positive.
    pub fn normalize(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let keys: Vec<Exp> = self.terms.keys().rev().cloned().collect();
        let coeffs: Vec<Rat> = keys.iter().map(|e| self.terms[e].clone()).collect();
        // primitive_int makes the last entry positive; feed the lead term last.
        let rev: Vec<Rat> = coeffs.into_iter().rev().collect();
        let ints = primitive_int(&UniPoly::new(rev));
        let mut f = TernForm::zero(self.degree);
        for (e, c) in keys.iter().rev().zip(ints) {
            f.add_term(*e, Rat::from_bigint(c));
        }
        f
    }
}

impl<F: Field> fmt::Display for TernForm<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms.iter().rev() {
            let s = c.to_string();
            let atomic = c.to_rat().is_some();
            let (neg, body) = match s.strip_prefix('-') {
                Some(rest) if atomic => (true, rest.to_string()),
                _ => (false, if atomic { s } else { format!("({s})") }),
            };
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let mut parts: Vec<String> = Vec::new();
            for (i, &k) in e.iter().enumerate() {
                match k {
                    0 => {}
                    1 => parts.push(format!("z{}", i + 1)),
                    _ => parts.push(format!("z{}^{}", i + 1, k)),
                }
            }
            if parts.is_empty() {
                write!(f, "{body}")?;
            } else if body == "1" {
                write!(f, "{}", parts.join("*"))?;
            } else {
                write!(f, "{body}*{}", parts.join("*"))?;
            }
        }
        Ok(())
    }
}

impl<F: Field> fmt::Debug for TernForm<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Serialize, Deserialize)]
struct WireTerm(u32, u32, u32, Rat);

impl Serialize for TernForm<Rat> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let v: Vec<WireTerm> = self.terms.iter().rev().map(|(e, c)| WireTerm(e[0], e[1], e[2], c.clone())).collect();
        v.serialize(s)
    }
}

impl<'de> Deserialize<'de> for TernForm<Rat> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Vec::<WireTerm>::deserialize(d)?;
        parse_terms(v).map_err(D::Error::custom)
    }
}

fn parse_terms(v: Vec<WireTerm>) -> Result<TernForm<Rat>> {
    let first = v.first().ok_or_else(|| Error::Parse("empty form".into()))?;
    let degree = first
        .0
        .checked_add(first.1)
        .and_then(|s| s.checked_add(first.2))
        .ok_or_else(|| Error::Parse("exponent overflow".into()))?;
    let mut seen = std::collections::BTreeSet::new();
    let mut terms = Vec::new();
    for WireTerm(a, b, c, r) in v {
        if r.is_zero() {
            return Err(Error::Parse("stored coefficient is zero".into()));
        }
        if !seen.insert([a, b, c]) {
            return Err(Error::Parse(format!("duplicate exponent [{a},{b},{c}]")));
        }
        if a.checked_add(b).and_then(|s| s.checked_add(c)) != Some(degree) {
            return Err(Error::Parse(format!("exponent [{a},{b},{c}] does not sum to {degree}")));
        }
        terms.push(([a, b, c], r));
    }
    TernForm::from_terms(degree, terms)
}

/// Parse the JSON wire form of a ternary form.
pub fn parse_tern_json(s: &str) -> Result<TernForm<Rat>> {
    let v: Vec<WireTerm> = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
    parse_terms(v)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cusp() -> TernForm {
        // z1^2 z3 - z2^3
        TernForm::from_ints(3, &[([2, 0, 1], 1), ([0, 3, 0], -1)])
    }

    #[test]
    fn wire_round_trip() {
        let f = cusp();
        let s = serde_json::to_string(&f).unwrap();
        assert_eq!(s, r#"[[2,0,1,"1"],[0,3,0,"-1"]]"#);
        assert_eq!(parse_tern_json(&s).unwrap(), f);
        assert!(parse_tern_json(r#"[[2,0,1,"1"],[0,2,0,"1"]]"#).is_err());
        assert!(parse_tern_json(r#"[[2,0,1,"0"]]"#).is_err());
        assert!(parse_tern_json("[]").is_err());
    }

    #[test]
    fn display() {
        assert_eq!(cusp().to_string(), "z1^2*z3 - z2^3");
    }

    #[test]
    fn pullback_vanishes_on_parametrization() {
        let t = UniPoly::var();
        let f = [t.pow(3), t.pow(2), UniPoly::one()];
        assert!(cusp().pullback(&f).is_zero());
    }

    #[test]
    fn exact_division() {
        let a = TernForm::linear([Rat::one(), Rat::from_int(2), Rat::zero()]);
        let b = TernForm::linear([Rat::zero(), Rat::one(), Rat::from_int(-3)]);
        let ab = a.mul(&b);
        assert_eq!(ab.exact_div(&a), Some(b.clone()));
        assert_eq!(cusp().exact_div(&a), None);
    }

    #[test]
    fn linear_substitution_matches_evaluation() {
        let m = [
            [Rat::from_int(1), Rat::from_int(2), Rat::from_int(0)],
            [Rat::from_int(0), Rat::from_int(1), Rat::from_int(-1)],
            [Rat::from_int(3), Rat::from_int(0), Rat::from_int(1)],
        ];
        let g = cusp().substitute_linear(&m);
        let p = [Rat::from_int(2), Rat::new(1, 3), Rat::from_int(-1)];
        let mp: Vec<Rat> = m.iter().map(|r| &(&(&r[0] * &p[0]) + &(&r[1] * &p[1])) + &(&r[2] * &p[2])).collect();
        assert_eq!(g.eval(&p), cusp().eval(&[mp[0].clone(), mp[1].clone(), mp[2].clone()]));
    }

    #[test]
    fn normalization() {
        let f = cusp().scale(&Rat::new(-3, 7));
        assert_eq!(f.normalize(), cusp());
        let g = TernForm::from_ints(2, &[([0, 2, 0], 4), ([1, 0, 1], -6)]);
        assert_eq!(g.normalize(), TernForm::from_ints(2, &[([0, 2, 0], -2), ([1, 0, 1], 3)]));
    }

    #[test]
    fn chart_round_trip() {
        let f = cusp();
        for k in 0..3 {
            assert_eq!(TernForm::homogenize(&f.dehomogenize(k), k, 3), f);
        }
    }
}
