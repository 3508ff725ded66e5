//! Sparse multivariate polynomials over Q, just enough for resultants by the
//! subresultant pseudo-remainder sequence.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};

use super::rat::Rat;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MPoly {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, Rat>,
}

impl MPoly {
    pub fn zero(nvars: usize) -> MPoly {
        MPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: Rat) -> MPoly {
        let mut p = MPoly::zero(nvars);
        p.add_term(vec![0; nvars], c);
        p
    }

    pub fn var(nvars: usize, i: usize) -> MPoly {
        let mut e = vec![0; nvars];
        e[i] = 1;
        let mut p = MPoly::zero(nvars);
        p.add_term(e, Rat::one());
        p
    }

    pub fn from_terms(nvars: usize, terms: &[(&[u32], i64)]) -> MPoly {
        let mut p = MPoly::zero(nvars);
        for (e, c) in terms {
            assert_eq!(e.len(), nvars);
            p.add_term(e.to_vec(), Rat::from_int(*c));
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, Rat> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, e: Vec<u32>, c: Rat) {
        if c.is_zero() {
            return;
        }
        let s = match self.terms.remove(&e) {
            Some(old) => old + c,
            None => c,
        };
        if !s.is_zero() {
            self.terms.insert(e, s);
        }
    }

    pub fn add(&self, o: &MPoly) -> MPoly {
        let mut p = self.clone();
        for (e, c) in &o.terms {
            p.add_term(e.clone(), c.clone());
        }
        p
    }

    pub fn neg(&self) -> MPoly {
        MPoly { nvars: self.nvars, terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect() }
    }

    pub fn sub(&self, o: &MPoly) -> MPoly {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &MPoly) -> MPoly {
        let mut p = MPoly::zero(self.nvars);
        for (a, x) in &self.terms {
            for (b, y) in &o.terms {
                let e = a.iter().zip(b).map(|(i, j)| i + j).collect();
                p.add_term(e, x * y);
            }
        }
        p
    }

    pub fn pow(&self, k: u32) -> MPoly {
        let mut acc = MPoly::constant(self.nvars, Rat::one());
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn degree_in(&self, var: usize) -> i64 {
        self.terms.keys().map(|e| e[var] as i64).max().unwrap_or(-1)
    }

    /// Coefficients of `self` viewed as a polynomial in `var`, lowest first.
    pub fn coefficients_in(&self, var: usize) -> Vec<MPoly> {
        let d = self.degree_in(var);
        let mut out = vec![MPoly::zero(self.nvars); (d + 1).max(0) as usize];
        for (e, c) in &self.terms {
            let mut e2 = e.clone();
            let k = e2[var] as usize;
            e2[var] = 0;
            out[k].add_term(e2, c.clone());
        }
        out
    }

    pub fn from_coefficients(var: usize, nvars: usize, cs: &[MPoly]) -> MPoly {
        let mut p = MPoly::zero(nvars);
        for (k, c) in cs.iter().enumerate() {
            for (e, v) in &c.terms {
                let mut e2 = e.clone();
                e2[var] += k as u32;
                p.add_term(e2, v.clone());
            }
        }
        p
    }

    /// Exact quotient by lexicographic leading-term division, if it exists.
    pub fn exact_div(&self, d: &MPoly) -> Option<MPoly> {
        let (lt, lc) = d.terms.iter().next_back()?;
        let mut r = self.clone();
        let mut q = MPoly::zero(self.nvars);
        while let Some((e, c)) = r.terms.iter().next_back().map(|(e, c)| (e.clone(), c.clone())) {
            if e.iter().zip(lt).any(|(a, b)| a < b) {
                return None;
            }
            let qe: Vec<u32> = e.iter().zip(lt).map(|(a, b)| a - b).collect();
            let qc = &c / lc;
            let mut t = MPoly::zero(self.nvars);
            t.add_term(qe, qc);
            r = r.sub(&t.mul(d));
            q = q.add(&t);
        }
        Some(q)
    }

    pub fn eval(&self, point: &[Rat]) -> Rat {
        self.terms
            .iter()
            .map(|(e, c)| e.iter().zip(point).fold(c.clone(), |acc, (k, x)| acc * x.pow(*k as i32)))
            .sum()
    }

    /// Substitute a value for one variable.
    pub fn eval_var(&self, var: usize, x: &Rat) -> MPoly {
        let mut p = MPoly::zero(self.nvars);
        for (e, c) in &self.terms {
            let mut e2 = e.clone();
            let k = e2[var];
            e2[var] = 0;
            p.add_term(e2, c * &x.pow(k as i32));
        }
        p
    }
}

/// Pseudo-remainder of `a` by `b`: `lc(b)^(da-db+1) a mod b`.
fn prem(a: &[MPoly], b: &[MPoly]) -> Vec<MPoly> {
    let db = b.len() - 1;
    let lb = &b[db];
    let mut r: Vec<MPoly> = a.to_vec();
    while r.len() > db {
        let k = r.len() - 1 - db;
        let c = r.last().unwrap().clone();
        for x in r.iter_mut() {
            *x = x.mul(lb);
        }
        for (j, bj) in b.iter().enumerate() {
            r[k + j] = r[k + j].sub(&c.mul(bj));
        }
        r.pop();
    }
    while r.last().is_some_and(|c| c.is_zero()) {
        r.pop();
    }
    r
}

fn lead(v: &[MPoly]) -> &MPoly {
    v.last().expect("nonzero polynomial")
}

/// `Res_var(p, q)` by the subresultant pseudo-remainder sequence.
pub fn resultant(p: &MPoly, q: &MPoly, var: usize) -> Result<MPoly> {
    if p.is_zero() || q.is_zero() {
        return Err(Error::ZeroInput("resultant operand"));
    }
    let n = p.nvars;
    let one = MPoly::constant(n, Rat::one());
    let mut a = p.coefficients_in(var);
    let mut b = q.coefficients_in(var);
    let mut sign = false;
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
        if (a.len() - 1) % 2 == 1 && (b.len() - 1) % 2 == 1 {
            sign = true;
        }
    }
    if b.len() == 1 {
        let r = b[0].pow((a.len() - 1) as u32);
        return Ok(if sign { r.neg() } else { r });
    }
    let (mut g, mut h) = (one.clone(), one.clone());
    loop {
        let da = a.len() - 1;
        let db = b.len() - 1;
        let delta = (da - db) as u32;
        if da % 2 == 1 && db % 2 == 1 {
            sign = !sign;
        }
        let r = prem(&a, &b);
        if r.is_empty() {
            return Ok(MPoly::zero(n));
        }
        let div = g.mul(&h.pow(delta));
        a = b;
        b = r.iter().map(|c| c.exact_div(&div).expect("subresultant division is exact")).collect();
        g = lead(&a).clone();
        h = match delta {
            0 => h,
            1 => g.clone(),
            _ => g.pow(delta).exact_div(&h.pow(delta - 1)).expect("exact"),
        };
        if b.len() == 1 {
            let da = (a.len() - 1) as u32;
            let lb = &b[0];
            let res = if da == 1 {
                lb.clone()
            } else {
                lb.pow(da).exact_div(&h.pow(da - 1)).expect("exact")
            };
            return Ok(if sign { res.neg() } else { res });
        }
    }
}

/// Sylvester determinant by fraction-free Gaussian elimination, an independent
/// route to the same resultant.
pub fn resultant_sylvester(p: &MPoly, q: &MPoly, var: usize) -> Result<MPoly> {
    if p.is_zero() || q.is_zero() {
        return Err(Error::ZeroInput("resultant operand"));
    }
    let n = p.nvars;
    let a = p.coefficients_in(var);
    let b = q.coefficients_in(var);
    let (da, db) = (a.len() - 1, b.len() - 1);
    let size = da + db;
    if size == 0 {
        return Ok(MPoly::constant(n, Rat::one()));
    }
    let mut m = vec![vec![MPoly::zero(n); size]; size];
    for i in 0..db {
        for (k, c) in a.iter().rev().enumerate() {
            m[i][i + k] = c.clone();
        }
    }
    for i in 0..da {
        for (k, c) in b.iter().rev().enumerate() {
            m[db + i][i + k] = c.clone();
        }
    }
    let mut prev = MPoly::constant(n, Rat::one());
    let mut neg = false;
    for k in 0..size {
        if m[k][k].is_zero() {
            match (k + 1..size).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(k, i);
                    neg = !neg;
                }
                None => return Ok(MPoly::zero(n)),
            }
        }
        for i in k + 1..size {
            for j in k + 1..size {
                let v = m[k][k].mul(&m[i][j]).sub(&m[i][k].mul(&m[k][j]));
                m[i][j] = v.exact_div(&prev).expect("Bareiss division is exact");
            }
        }
        prev = m[k][k].clone();
    }
    let d = m[size - 1][size - 1].clone();
    Ok(if neg { d.neg() } else { d })
}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .rev()
            .map(|(e, c)| {
                let mono: Vec<String> = e
                    .iter()
                    .enumerate()
                    .filter(|(_, k)| **k > 0)
                    .map(|(i, k)| if *k == 1 { format!("x{}", i + 1) } else { format!("x{}^{}", i + 1, k) })
                    .collect();
                if mono.is_empty() {
                    format!("{c}")
                } else if c.is_one() {
                    mono.join("*")
                } else {
                    format!("{c}*{}", mono.join("*"))
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    // Variables: 0 = t, 1 = x, 2 = y.
    fn v(i: usize) -> MPoly {
        MPoly::var(3, i)
    }

    #[test]
    fn substitution_example() {
        let p = v(0).sub(&v(1));
        let q = v(0).mul(&v(0)).sub(&v(2));
        let r = resultant(&p, &q, 0).unwrap();
        assert_eq!(r, v(1).mul(&v(1)).sub(&v(2)));
        assert_eq!(resultant_sylvester(&p, &q, 0).unwrap(), r);
    }

    #[test]
    fn common_root_gives_zero() {
        let r = resultant(&v(0).pow(2), &v(0).pow(3), 0).unwrap();
        assert!(r.is_zero());
    }

    #[test]
    fn cuspidal_cubic() {
        let p = v(1).sub(&v(0).pow(3));
        let q = v(2).sub(&v(0).pow(2));
        let r = resultant(&p, &q, 0).unwrap();
        let expect = v(2).pow(3).sub(&v(1).pow(2));
        assert!(r == expect || r == expect.neg());
        assert_eq!(resultant_sylvester(&p, &q, 0).unwrap(), r);
    }

    #[test]
    fn zero_input() {
        assert_eq!(resultant(&MPoly::zero(3), &v(0), 0), Err(Error::ZeroInput("resultant operand")));
    }

    #[test]
    fn exact_division() {
        let a = v(1).add(&v(2));
        let b = v(0).sub(&v(2)).add(&MPoly::constant(3, Rat::from_int(2)));
        assert_eq!(a.mul(&b).exact_div(&b), Some(a.clone()));
        assert_eq!(a.exact_div(&b), None);
    }
}
