use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::field::Field;
use super::rat::Rat;

/// Dense univariate polynomial, lowest degree first. The zero polynomial has no
/// coefficients; otherwise the last coefficient is nonzero.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct UniPoly<F> {
    coeffs: Vec<F>,
}

impl<F: Field> UniPoly<F> {
    pub fn new(mut coeffs: Vec<F>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: F) -> Self {
        UniPoly::new(vec![c])
    }

    pub fn monomial(c: F, k: usize) -> Self {
        if c.is_zero() {
            return UniPoly::zero();
        }
        let mut v = vec![c.zero_like(); k];
        v.push(c);
        UniPoly { coeffs: v }
    }

    /// The variable `t`, with constants taken from `like`.
    pub fn var_like(like: &F) -> Self {
        UniPoly::monomial(like.one_like(), 1)
    }

    /// `c0 + c1 t`.
    pub fn linear(c0: F, c1: F) -> Self {
        UniPoly::new(vec![c0, c1])
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<F> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the zero polynomial at -1.
    pub fn deg(&self) -> i64 {
        self.coeffs.len() as i64 - 1
    }

    pub fn lc(&self) -> Option<&F> {
        self.coeffs.last()
    }

    pub fn coeff(&self, i: usize) -> Option<&F> {
        self.coeffs.get(i)
    }

    /// Some element of the coefficient field, if any coefficient exists.
    pub fn sample(&self) -> Option<&F> {
        self.coeffs.first()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Lowest exponent with a nonzero coefficient; `None` for zero.
    pub fn ord(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return UniPoly::zero();
        }
        UniPoly::new(self.coeffs.iter().map(|x| x.times(c)).collect())
    }

    /// Multiply by `t^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return UniPoly::zero();
        }
        let z = self.coeffs[0].zero_like();
        let mut v = vec![z; k];
        v.extend(self.coeffs.iter().cloned());
        UniPoly { coeffs: v }
    }

    /// Drop the `t^k` factor, assuming `ord >= k`; lower terms are discarded.
    pub fn unshift(&self, k: usize) -> Self {
        UniPoly::new(self.coeffs.iter().skip(k).cloned().collect())
    }

    /// Truncate modulo `t^n`.
    pub fn truncate(&self, n: usize) -> Self {
        UniPoly::new(self.coeffs.iter().take(n).cloned().collect())
    }

    pub fn monic(&self) -> Self {
        match self.lc() {
            None => UniPoly::zero(),
            Some(l) if l.is_one() => self.clone(),
            Some(l) => self.scale(&l.inverse()),
        }
    }

    pub fn eval(&self, x: &F) -> F {
        let mut acc = x.zero_like();
        for c in self.coeffs.iter().rev() {
            acc = acc.times(x).plus(c);
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        UniPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.mul_int(i as i64))
                .collect(),
        )
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = match self.sample() {
            Some(c) => UniPoly::constant(c.one_like()),
            None => return UniPoly::zero(),
        };
        let mut base = self.clone();
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// `self(g(t))`.
    pub fn compose(&self, g: &Self) -> Self {
        let mut acc = UniPoly::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * g) + &UniPoly::constant(c.clone());
        }
        acc
    }

    /// `self(t + a)`.
    pub fn taylor_shift(&self, a: &F) -> Self {
        let mut c = self.coeffs.clone();
        let n = c.len();
        for i in 0..n {
            for j in (i..n - 1).rev() {
                let t = c[j + 1].times(a);
                c[j] = c[j].plus(&t);
            }
        }
        UniPoly::new(c)
    }

    /// `t^n self(1/t)`; requires `n >= deg`.
    pub fn reversed(&self, n: usize) -> Self {
        assert!(self.deg() <= n as i64, "reversal below degree");
        if self.is_zero() {
            return UniPoly::zero();
        }
        let z = self.coeffs[0].zero_like();
        let mut v = vec![z; n + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            v[n - i] = c.clone();
        }
        UniPoly::new(v)
    }

    /// Quotient and remainder; panics if `d` is zero.
    pub fn divrem(&self, d: &Self) -> (Self, Self) {
        let dl = d.lc().expect("division by zero polynomial");
        if self.deg() < d.deg() {
            return (UniPoly::zero(), self.clone());
        }
        let inv = dl.inverse();
        let dd = d.coeffs.len() - 1;
        let mut r = self.coeffs.clone();
        let z = dl.zero_like();
        let mut q = vec![z; r.len() - dd];
        for k in (0..q.len()).rev() {
            let c = r[k + dd].times(&inv);
            if c.is_zero() {
                continue;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                r[k + j] = r[k + j].minus(&c.times(dc));
            }
            q[k] = c;
        }
        r.truncate(dd);
        (UniPoly::new(q), UniPoly::new(r))
    }

    pub fn rem(&self, d: &Self) -> Self {
        self.divrem(d).1
    }

    /// `Some(self / d)` when the division is exact.
    pub fn exact_div(&self, d: &Self) -> Option<Self> {
        let (q, r) = self.divrem(d);
        r.is_zero().then_some(q)
    }

    pub fn divides(&self, other: &Self) -> bool {
        other.rem(self).is_zero()
    }

    /// Monic gcd; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// `(g, s, u)` with `s*self + u*other = g` and `g` monic.
    pub fn ext_gcd(&self, other: &Self) -> (Self, Self, Self) {
        let one = match self.sample().or(other.sample()) {
            Some(c) => UniPoly::constant(c.one_like()),
            None => return (UniPoly::zero(), UniPoly::zero(), UniPoly::zero()),
        };
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (one.clone(), UniPoly::zero());
        let (mut u0, mut u1) = (UniPoly::zero(), one);
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1);
            r0 = std::mem::replace(&mut r1, r);
            let s = &s0 - &(&q * &s1);
            s0 = std::mem::replace(&mut s1, s);
            let u = &u0 - &(&q * &u1);
            u0 = std::mem::replace(&mut u1, u);
        }
        let l = r0.lc().expect("nonzero gcd").inverse();
        (r0.scale(&l), s0.scale(&l), u0.scale(&l))
    }

    /// Largest `k` with `(t - r)^k | self`; zero polynomial gives `usize::MAX`.
    pub fn root_multiplicity(&self, r: &F) -> usize {
        if self.is_zero() {
            return usize::MAX;
        }
        let mut p = self.clone();
        let mut k = 0;
        loop {
            let (q, rem) = p.div_linear(r);
            if !rem.is_zero() {
                return k;
            }
            k += 1;
            p = q;
        }
    }

    /// Synthetic division by `t - r`: quotient and remainder value.
    pub fn div_linear(&self, r: &F) -> (Self, F) {
        if self.is_zero() {
            return (UniPoly::zero(), r.zero_like());
        }
        let n = self.coeffs.len();
        let mut q = vec![r.zero_like(); n - 1];
        let mut acc = r.zero_like();
        for i in (0..n).rev() {
            let v = self.coeffs[i].plus(&acc.times(r));
            if i == 0 {
                acc = v;
            } else {
                q[i - 1] = v.clone();
                acc = v;
            }
        }
        (UniPoly::new(q), acc)
    }

    /// Yun's square-free decomposition: monic `(a_i, i)` with `self ~ prod a_i^i`,
    /// trivial factors omitted.
    pub fn squarefree_decomposition(&self) -> Vec<(Self, usize)> {
        let mut out = Vec::new();
        if self.degree().unwrap_or(0) == 0 {
            return out;
        }
        let f = self.monic();
        let df = f.derivative();
        let a0 = f.gcd(&df);
        let mut b = f.exact_div(&a0).expect("gcd divides");
        let mut c = df.exact_div(&a0).expect("gcd divides derivative");
        let mut d = &c - &b.derivative();
        let mut i = 1;
        while b.deg() > 0 {
            let a = b.gcd(&d);
            b = b.exact_div(&a).expect("gcd divides");
            c = d.exact_div(&a).expect("gcd divides");
            d = &c - &b.derivative();
            if a.deg() > 0 {
                out.push((a, i));
            }
            i += 1;
        }
        out
    }

    /// `self / gcd(self, self')`, monic.
    pub fn squarefree_part(&self) -> Self {
        if self.is_zero() {
            return UniPoly::zero();
        }
        let g = self.gcd(&self.derivative());
        self.exact_div(&g).expect("gcd divides").monic()
    }

    pub fn is_squarefree(&self) -> bool {
        !self.is_zero() && self.gcd(&self.derivative()).deg() == 0
    }

    /// Resultant over the field, by the Euclidean recurrence.
    pub fn resultant(&self, other: &Self) -> F {
        let z = match self.sample().or(other.sample()) {
            Some(c) => c.zero_like(),
            None => panic!("resultant of two zero polynomials"),
        };
        if self.is_zero() || other.is_zero() {
            return z;
        }
        let mut a = self.clone();
        let mut b = other.clone();
        let mut acc = z.one_like();
        loop {
            let da = a.deg();
            let db = b.deg();
            if db == 0 {
                return acc.times(&b.coeffs[0].powu(da as u64));
            }
            let r = a.rem(&b);
            if r.is_zero() {
                return z;
            }
            if da % 2 == 1 && db % 2 == 1 {
                acc = acc.negated();
            }
            let dr = r.deg();
            acc = acc.times(&b.lc().unwrap().powu((da - dr) as u64));
            a = b;
            b = r;
        }
    }

    /// Resultant with `self` read at formal degree `n >= deg`.
    pub fn resultant_formal(&self, n: usize, other: &Self) -> F {
        let d = self.deg();
        let m = other.deg();
        assert!(d <= n as i64);
        if d == n as i64 || m < 0 {
            return self.resultant(other);
        }
        if self.is_zero() {
            return other.sample().unwrap().zero_like();
        }
        // Missing leading terms contribute a power of the other leading coefficient.
        let extra = (n as i64 - d) as u64;
        let mut r = self.resultant(other).times(&other.lc().unwrap().powu(extra));
        if (extra * m as u64) % 2 == 1 {
            r = r.negated();
        }
        r
    }

    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> UniPoly<G> {
        UniPoly::new(self.coeffs.iter().map(f).collect())
    }

    pub fn fmt_var(&self, f: &mut fmt::Formatter<'_>, var: &str) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let s = c.to_string();
            let atomic = c.to_rat().is_some();
            let (neg, body) = match s.strip_prefix('-') {
                Some(rest) if atomic => (true, rest.to_string()),
                _ => (false, s),
            };
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let body = if atomic { body } else { format!("({body})") };
            match i {
                0 => write!(f, "{body}")?,
                _ => {
                    if body != "1" {
                        write!(f, "{body}*")?;
                    }
                    write!(f, "{var}")?;
                    if i > 1 {
                        write!(f, "^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl UniPoly<Rat> {
    pub fn from_ints(c: &[i64]) -> Self {
        UniPoly::new(c.iter().map(|&x| Rat::from_int(x)).collect())
    }

    pub fn from_rats(c: &[(i64, i64)]) -> Self {
        UniPoly::new(c.iter().map(|&(p, q)| Rat::new(p, q)).collect())
    }

    pub fn var() -> Self {
        UniPoly::var_like(&Rat::one())
    }

    pub fn one() -> Self {
        UniPoly::constant(Rat::one())
    }

    pub fn cst(c: i64) -> Self {
        UniPoly::constant(Rat::from_int(c))
    }

    /// Antiderivative with zero constant term.
    pub fn antiderivative(&self) -> Self {
        let mut v = vec![Rat::zero()];
        for (i, c) in self.coeffs.iter().enumerate() {
            v.push(c / &Rat::from_int(i as i64 + 1));
        }
        UniPoly::new(v)
    }

    /// Exact integral over [0, 1].
    pub fn integrate_unit_interval(&self) -> Rat {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| c / &Rat::from_int(i as i64 + 1))
            .sum()
    }
}

impl<F: Field> fmt::Display for UniPoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_var(f, "t")
    }
}

impl<F: Field> fmt::Debug for UniPoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl<'a, F: Field> Add<&'a UniPoly<F>> for &'a UniPoly<F> {
    type Output = UniPoly<F>;
    fn add(self, o: &UniPoly<F>) -> UniPoly<F> {
        let (long, short) = if self.coeffs.len() >= o.coeffs.len() { (self, o) } else { (o, self) };
        let mut v = long.coeffs.clone();
        for (i, c) in short.coeffs.iter().enumerate() {
            v[i] = v[i].plus(c);
        }
        UniPoly::new(v)
    }
}

impl<'a, F: Field> Sub<&'a UniPoly<F>> for &'a UniPoly<F> {
    type Output = UniPoly<F>;
    fn sub(self, o: &UniPoly<F>) -> UniPoly<F> {
        let mut v = self.coeffs.clone();
        for (i, c) in o.coeffs.iter().enumerate() {
            if i < v.len() {
                v[i] = v[i].minus(c);
            } else {
                v.push(c.negated());
            }
        }
        UniPoly::new(v)
    }
}

impl<'a, F: Field> Mul<&'a UniPoly<F>> for &'a UniPoly<F> {
    type Output = UniPoly<F>;
    fn mul(self, o: &UniPoly<F>) -> UniPoly<F> {
        if self.is_zero() || o.is_zero() {
            return UniPoly::zero();
        }
        let z = self.coeffs[0].zero_like();
        let mut v = vec![z; self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    v[i + j] = v[i + j].plus(&a.times(b));
                }
            }
        }
        UniPoly::new(v)
    }
}

impl<F: Field> Neg for &UniPoly<F> {
    type Output = UniPoly<F>;
    fn neg(self) -> UniPoly<F> {
        UniPoly { coeffs: self.coeffs.iter().map(|c| c.negated()).collect() }
    }
}

macro_rules! owned_ops {
    ($($tr:ident $m:ident),*) => {$(
        impl<F: Field> $tr<UniPoly<F>> for UniPoly<F> {
            type Output = UniPoly<F>;
            fn $m(self, o: UniPoly<F>) -> UniPoly<F> {
                (&self).$m(&o)
            }
        }
        impl<'a, F: Field> $tr<&'a UniPoly<F>> for UniPoly<F> {
            type Output = UniPoly<F>;
            fn $m(self, o: &UniPoly<F>) -> UniPoly<F> {
                (&self).$m(o)
            }
        }
        impl<'a, F: Field> $tr<UniPoly<F>> for &'a UniPoly<F> {
            type Output = UniPoly<F>;
            fn $m(self, o: UniPoly<F>) -> UniPoly<F> {
                self.$m(&o)
            }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul);

impl<F: Field> Neg for UniPoly<F> {
    type Output = UniPoly<F>;
    fn neg(self) -> UniPoly<F> {
        -&self
    }
}

impl Serialize for UniPoly<Rat> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.coeffs.serialize(s)
    }
}

impl<'de> Deserialize<'de> for UniPoly<Rat> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let v = Vec::<Rat>::deserialize(d)?;
        if v.last().is_some_and(|c| c.is_zero()) {
            return Err(serde::de::Error::custom("leading coefficient is zero"));
        }
        Ok(UniPoly::new(v))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> UniPoly<Rat> {
        UniPoly::from_ints(c)
    }

    #[test]
    fn trims_and_degrees() {
        assert_eq!(p(&[1, 2, 0, 0]).degree(), Some(1));
        assert!(p(&[0, 0]).is_zero());
        assert_eq!(p(&[]).deg(), -1);
    }

    #[test]
    fn division_identity() {
        let a = p(&[-5, 0, 2, 2, 1]);
        let b = p(&[1, 3, 2]);
        let (q, r) = a.divrem(&b);
        assert_eq!(&(&q * &b) + &r, a);
        assert!(r.deg() < b.deg());
    }

    #[test]
    fn gcd_cases() {
        assert_eq!(p(&[-1, 0, 1]).gcd(&p(&[-1, 1])), p(&[-1, 1]));
        assert_eq!(p(&[4, 2]).gcd(&UniPoly::zero()), p(&[2, 1]));
        assert_eq!(p(&[-5, 0, 2, 2, 1]).gcd(&p(&[-1, 1])), p(&[-1, 1]));
        assert!(UniPoly::<Rat>::zero().gcd(&UniPoly::zero()).is_zero());
    }

    #[test]
    fn ext_gcd_bezout() {
        let a = p(&[1, 0, 1]);
        let b = p(&[1, 1, 0, 3]);
        let (g, s, u) = a.ext_gcd(&b);
        assert_eq!(&(&s * &a) + &(&u * &b), g);
        assert_eq!(g, p(&[1]));
    }

    #[test]
    fn multiplicities() {
        let f = p(&[-1, 1]).pow(3) * p(&[2, 1]);
        assert_eq!(f.root_multiplicity(&Rat::one()), 3);
        assert_eq!(p(&[1, 1]).root_multiplicity(&Rat::from_int(5)), 0);
    }

    #[test]
    fn yun() {
        let f = p(&[-1, 1]).pow(2) * p(&[1, 1]);
        assert_eq!(f.squarefree_decomposition(), vec![(p(&[1, 1]), 1), (p(&[-1, 1]), 2)]);
        assert_eq!(f.squarefree_part(), p(&[-1, 0, 1]));
        assert_eq!(p(&[0, 0, 0, 1]).squarefree_decomposition(), vec![(p(&[0, 1]), 3)]);
    }

    #[test]
    fn resultants() {
        // Res(t^2 - 2, t - 1) = (1)^2 - 2
        assert_eq!(p(&[-2, 0, 1]).resultant(&p(&[-1, 1])), Rat::from_int(-1));
        assert_eq!(p(&[0, 0, 1]).resultant(&p(&[0, 0, 0, 1])), Rat::zero());
        // Sylvester determinant of t^2 + 1 and 2t + 3 is 13.
        assert_eq!(p(&[1, 0, 1]).resultant(&p(&[3, 2])), Rat::from_int(13));
        assert_eq!(p(&[3, 2]).resultant(&p(&[1, 0, 1])), Rat::from_int(13));
    }

    #[test]
    fn formal_degree_resultant() {
        // Reading 2t + 3 as a quadratic adds a factor lc(t^2+1)^1 and sign (-1)^(1*2).
        assert_eq!(p(&[3, 2]).resultant_formal(2, &p(&[1, 0, 1])), Rat::from_int(13));
        assert_eq!(p(&[3, 2]).resultant_formal(2, &p(&[1, 2])), Rat::from_int(8));
    }

    #[test]
    fn shifts_and_reversal() {
        let f = p(&[1, 2, 3]);
        assert_eq!(f.taylor_shift(&Rat::one()), p(&[6, 8, 3]));
        assert_eq!(f.reversed(3), p(&[0, 3, 2, 1]));
        assert_eq!(f.compose(&p(&[1, 1])), p(&[6, 8, 3]));
    }

    #[test]
    fn unit_interval_integrals() {
        assert_eq!(p(&[1, 0, -1]).integrate_unit_interval(), Rat::new(2, 3));
        assert_eq!(p(&[1]).integrate_unit_interval(), Rat::one());
        let i2 = UniPoly::from_rats(&[(0, 1), (1, 1), (0, 1), (-1, 3)]);
        assert_eq!(i2.integrate_unit_interval(), Rat::new(5, 12));
    }

    #[test]
    fn display() {
        assert_eq!(p(&[-1, 0, 1]).to_string(), "t^2 - 1");
        assert_eq!(UniPoly::from_rats(&[(1, 2), (-3, 1)]).to_string(), "-3*t + 1/2");
    }

    #[test]
    fn serde_round_trip() {
        let f = UniPoly::from_rats(&[(1, 2), (0, 1), (-3, 4)]);
        let s = serde_json::to_string(&f).unwrap();
        assert_eq!(s, r#"["1/2","0","-3/4"]"#);
        assert_eq!(serde_json::from_str::<UniPoly<Rat>>(&s).unwrap(), f);
        assert!(serde_json::from_str::<UniPoly<Rat>>(r#"["1","0"]"#).is_err());
    }
}
