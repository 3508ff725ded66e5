//! Word-size prime fields, dense polynomials over them, and the Chinese
//! remainder / rational reconstruction glue used by the multimodular kernels.

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::poly::UniPoly;
use super::rat::Rat;

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn powmod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(acc, a, p);
        }
        a = mulmod(a, a, p);
        e >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin for 64-bit inputs.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for q in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % q == 0 {
            return n == q;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powmod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Primes below `2^62`, in decreasing order.
pub fn large_primes() -> impl Iterator<Item = u64> {
    let mut c = (1u64 << 62) - 1;
    std::iter::from_fn(move || {
        while !is_prime_u64(c) {
            c -= 2;
        }
        let p = c;
        c -= 2;
        Some(p)
    })
}

/// Primes from 3 upward (for factoring, where small fields are cheaper).
pub fn small_primes() -> impl Iterator<Item = u64> {
    (3u64..).step_by(2).filter(|&n| is_prime_u64(n))
}

/// Arithmetic in `Z/pZ` and in `(Z/pZ)[t]`, with polynomials stored lowest
/// degree first and trimmed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Zp {
    pub p: u64,
}

pub type PolyP = Vec<u64>;

impl Zp {
    pub fn new(p: u64) -> Zp {
        Zp { p }
    }

    pub fn add(self, a: u64, b: u64) -> u64 {
        let s = a as u128 + b as u128;
        (s % self.p as u128) as u64
    }

    pub fn sub(self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            self.p - (b - a)
        }
    }

    pub fn neg(self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    pub fn mul(self, a: u64, b: u64) -> u64 {
        mulmod(a, b, self.p)
    }

    pub fn pow(self, a: u64, e: u64) -> u64 {
        powmod(a, e, self.p)
    }

    /// Panics on zero.
    pub fn inv(self, a: u64) -> u64 {
        assert!(a % self.p != 0, "inverse of zero mod p");
        powmod(a, self.p - 2, self.p)
    }

    pub fn from_int(self, n: &BigInt) -> u64 {
        let m = n.mod_floor(&BigInt::from(self.p));
        m.to_u64().expect("reduced residue fits")
    }

    pub fn from_i64(self, n: i64) -> u64 {
        (n as i128).rem_euclid(self.p as i128) as u64
    }

    pub fn from_rat(self, r: &Rat) -> Option<u64> {
        let d = self.from_int(r.denom());
        if d == 0 {
            return None;
        }
        Some(self.mul(self.from_int(r.numer()), self.inv(d)))
    }

    /// Image of a rational polynomial; `None` if `p` divides a denominator.
    pub fn poly_from_rat(self, f: &UniPoly<Rat>) -> Option<PolyP> {
        let mut v = Vec::with_capacity(f.coeffs().len());
        for c in f.coeffs() {
            v.push(self.from_rat(c)?);
        }
        Some(trim(v))
    }

    pub fn poly_from_ints(self, f: &[BigInt]) -> PolyP {
        trim(f.iter().map(|c| self.from_int(c)).collect())
    }

    pub fn padd(self, a: &[u64], b: &[u64]) -> PolyP {
        let n = a.len().max(b.len());
        let mut v = Vec::with_capacity(n);
        for i in 0..n {
            v.push(self.add(*a.get(i).unwrap_or(&0), *b.get(i).unwrap_or(&0)));
        }
        trim(v)
    }

    pub fn psub(self, a: &[u64], b: &[u64]) -> PolyP {
        let n = a.len().max(b.len());
        let mut v = Vec::with_capacity(n);
        for i in 0..n {
            v.push(self.sub(*a.get(i).unwrap_or(&0), *b.get(i).unwrap_or(&0)));
        }
        trim(v)
    }

    pub fn pscale(self, a: &[u64], c: u64) -> PolyP {
        trim(a.iter().map(|&x| self.mul(x, c)).collect())
    }

    pub fn pmul(self, a: &[u64], b: &[u64]) -> PolyP {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        // Accumulate in u128 and reduce lazily; each product is below 2^124.
        let p = self.p as u128;
        let mut acc = vec![0u128; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                let s = acc[i + j] + x as u128 * y as u128;
                acc[i + j] = if s >= p << 64 { s % p } else { s };
            }
        }
        trim(acc.into_iter().map(|s| (s % p) as u64).collect())
    }

    pub fn pdivrem(self, a: &[u64], b: &[u64]) -> (PolyP, PolyP) {
        assert!(!b.is_empty(), "division by zero polynomial mod p");
        if a.len() < b.len() {
            return (Vec::new(), a.to_vec());
        }
        let db = b.len() - 1;
        let inv = self.inv(b[db]);
        let mut r = a.to_vec();
        let mut q = vec![0u64; a.len() - db];
        for k in (0..q.len()).rev() {
            let c = self.mul(r[k + db], inv);
            if c == 0 {
                continue;
            }
            q[k] = c;
            for (j, &bj) in b.iter().enumerate() {
                r[k + j] = self.sub(r[k + j], self.mul(c, bj));
            }
        }
        r.truncate(db);
        (trim(q), trim(r))
    }

    pub fn prem(self, a: &[u64], b: &[u64]) -> PolyP {
        self.pdivrem(a, b).1
    }

    pub fn pmonic(self, a: &[u64]) -> PolyP {
        match a.last() {
            None => Vec::new(),
            Some(&l) => self.pscale(a, self.inv(l)),
        }
    }

    pub fn pgcd(self, a: &[u64], b: &[u64]) -> PolyP {
        let mut x = a.to_vec();
        let mut y = b.to_vec();
        while !y.is_empty() {
            let r = self.prem(&x, &y);
            x = y;
            y = r;
        }
        self.pmonic(&x)
    }

    /// `(g, s, t)` with `s a + t b = g`, `g` monic.
    pub fn pext_gcd(self, a: &[u64], b: &[u64]) -> (PolyP, PolyP, PolyP) {
        let (mut r0, mut r1) = (a.to_vec(), b.to_vec());
        let (mut s0, mut s1) = (vec![1u64], Vec::new());
        let (mut t0, mut t1) = (Vec::new(), vec![1u64]);
        while !r1.is_empty() {
            let (q, r) = self.pdivrem(&r0, &r1);
            r0 = std::mem::replace(&mut r1, r);
            let s = self.psub(&s0, &self.pmul(&q, &s1));
            s0 = std::mem::replace(&mut s1, s);
            let t = self.psub(&t0, &self.pmul(&q, &t1));
            t0 = std::mem::replace(&mut t1, t);
        }
        let l = self.inv(*r0.last().expect("nonzero gcd"));
        (self.pscale(&r0, l), self.pscale(&s0, l), self.pscale(&t0, l))
    }

    pub fn peval(self, a: &[u64], x: u64) -> u64 {
        a.iter().rev().fold(0, |acc, &c| self.add(self.mul(acc, x), c))
    }

    pub fn pderiv(self, a: &[u64]) -> PolyP {
        trim(a.iter().enumerate().skip(1).map(|(i, &c)| self.mul(c, i as u64 % self.p)).collect())
    }

    /// `base^e mod m`.
    pub fn ppowmod(self, base: &[u64], e: &BigInt, m: &[u64]) -> PolyP {
        let mut acc = vec![1u64];
        let b = self.prem(base, m);
        let bits = e.bits();
        for i in (0..bits).rev() {
            acc = self.prem(&self.pmul(&acc, &acc), m);
            if e.bit(i) {
                acc = self.prem(&self.pmul(&acc, &b), m);
            }
        }
        self.prem(&acc, m)
    }

    /// Resultant of `a` (read at formal degree `da`) and `b` (formal degree `db`).
    pub fn presultant(self, a: &[u64], da: usize, b: &[u64], db: usize) -> u64 {
        let na = a.len() as i64 - 1;
        let nb = b.len() as i64 - 1;
        if na < 0 || nb < 0 {
            return 0;
        }
        let mut acc = 1u64;
        let ea = da as i64 - na;
        let eb = db as i64 - nb;
        if ea > 0 && eb > 0 {
            return 0;
        }
        if ea > 0 {
            acc = self.mul(acc, self.pow(b[nb as usize], ea as u64));
            if (ea * db as i64) % 2 == 1 {
                acc = self.neg(acc);
            }
        }
        if eb > 0 {
            acc = self.mul(acc, self.pow(a[na as usize], eb as u64));
        }
        self.mul(acc, self.presultant_exact(a, b))
    }

    fn presultant_exact(self, a: &[u64], b: &[u64]) -> u64 {
        let mut a = a.to_vec();
        let mut b = b.to_vec();
        let mut acc = 1u64;
        loop {
            let da = a.len() - 1;
            let db = b.len() - 1;
            if db == 0 {
                return self.mul(acc, self.pow(b[0], da as u64));
            }
            let r = self.prem(&a, &b);
            if r.is_empty() {
                return 0;
            }
            if da % 2 == 1 && db % 2 == 1 {
                acc = self.neg(acc);
            }
            let dr = r.len() - 1;
            acc = self.mul(acc, self.pow(b[db], (da - dr) as u64));
            a = b;
            b = r;
        }
    }

    /// Interpolating polynomial through `(xs[i], ys[i])`, distinct nodes.
    pub fn interpolate(self, xs: &[u64], ys: &[u64]) -> PolyP {
        // Newton divided differences.
        let n = xs.len();
        let mut c = ys.to_vec();
        for j in 1..n {
            for i in (j..n).rev() {
                let num = self.sub(c[i], c[i - 1]);
                let den = self.sub(xs[i], xs[i - j]);
                c[i] = self.mul(num, self.inv(den));
            }
        }
        let mut out: PolyP = Vec::new();
        for i in (0..n).rev() {
            out = self.pmul(&out, &[self.neg(xs[i]), 1]);
            out = self.padd(&out, &[c[i]]);
        }
        out
    }
}

pub fn trim(mut v: PolyP) -> PolyP {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

/// Symmetric residue in `(-m/2, m/2]`.
pub fn symmetric(r: &BigInt, m: &BigInt) -> BigInt {
    let r = r.mod_floor(m);
    if &r * 2 > *m {
        r - m
    } else {
        r
    }
}

/// Incremental Chinese remaindering of integer vectors.
#[derive(Clone, Debug)]
pub struct Crt {
    pub modulus: BigInt,
    pub residues: Vec<BigInt>,
}

impl Crt {
    pub fn new(p: u64, v: &[u64]) -> Crt {
        Crt { modulus: BigInt::from(p), residues: v.iter().map(|&x| BigInt::from(x)).collect() }
    }

    /// Absorb residues modulo a new prime; vectors are zero padded to equal length.
    pub fn absorb(&mut self, p: u64, v: &[u64]) {
        let zp = Zp::new(p);
        let n = self.residues.len().max(v.len());
        self.residues.resize(n, BigInt::zero());
        let minv = zp.inv(zp.from_int(&self.modulus));
        for i in 0..n {
            let cur = zp.from_int(&self.residues[i]);
            let target = *v.get(i).unwrap_or(&0);
            let k = zp.mul(zp.sub(target, cur), minv);
            if k != 0 {
                self.residues[i] += &self.modulus * BigInt::from(k);
            }
        }
        self.modulus *= BigInt::from(p);
    }

    pub fn symmetric(&self) -> Vec<BigInt> {
        self.residues.iter().map(|r| symmetric(r, &self.modulus)).collect()
    }

    /// Rational reconstruction of every entry, or `None` if any entry fails.
    pub fn rationals(&self) -> Option<Vec<Rat>> {
        self.residues.iter().map(|r| rational_reconstruction(r, &self.modulus)).collect()
    }
}

/// Wang's rational reconstruction with the balanced bound `sqrt(m/2)`.
pub fn rational_reconstruction(a: &BigInt, m: &BigInt) -> Option<Rat> {
    let a = a.mod_floor(m);
    if a.is_zero() {
        return Some(Rat::zero());
    }
    let bound = (m / 2u32).sqrt();
    let (mut r0, mut r1) = (m.clone(), a);
    let (mut t0, mut t1) = (BigInt::zero(), BigInt::one());
    while r1 > bound {
        let q = &r0 / &r1;
        let r2 = &r0 - &q * &r1;
        r0 = std::mem::replace(&mut r1, r2);
        let t2 = &t0 - &q * &t1;
        t0 = std::mem::replace(&mut t1, t2);
    }
    if t1.is_zero() || t1.abs() > bound || !r1.gcd(&t1).is_one() {
        return None;
    }
    if t1.sign() == Sign::Minus {
        Some(Rat::from_big(-r1, -t1))
    } else {
        Some(Rat::from_big(r1, t1))
    }
}

/// Primitive integer multiple of a rational polynomial, positive leading coefficient.
pub fn primitive_int(f: &UniPoly<Rat>) -> Vec<BigInt> {
    if f.is_zero() {
        return Vec::new();
    }
    let mut den = BigInt::one();
    for c in f.coeffs() {
        den = den.lcm(c.denom());
    }
    let mut v: Vec<BigInt> = f.coeffs().iter().map(|c| c.numer() * (&den / c.denom())).collect();
    let mut g = BigInt::zero();
    for c in &v {
        g = g.gcd(c);
    }
    if v.last().unwrap().is_negative() {
        g = -g;
    }
    for c in v.iter_mut() {
        *c = &*c / &g;
    }
    v
}

pub fn from_ints(v: &[BigInt]) -> UniPoly<Rat> {
    UniPoly::new(v.iter().map(|c| Rat::from_bigint(c.clone())).collect())
}

pub fn max_norm(v: &[BigInt]) -> BigInt {
    v.iter().map(|c| c.abs()).max().unwrap_or_default()
}

/// Gcd over the rationals by the small-prime-modular algorithm with trial
/// division, monic. Agrees with [`UniPoly::gcd`], but avoids coefficient swell.
pub fn gcd_q(a: &UniPoly<Rat>, b: &UniPoly<Rat>) -> UniPoly<Rat> {
    if a.is_zero() {
        return b.monic();
    }
    if b.is_zero() {
        return a.monic();
    }
    if a.deg() == 0 || b.deg() == 0 {
        return UniPoly::constant(Rat::one());
    }
    if a.deg().min(b.deg()) <= 2 {
        return a.gcd(b);
    }
    let fa = primitive_int(a);
    let fb = primitive_int(b);
    let lg = fa.last().unwrap().gcd(fb.last().unwrap());
    let mut best: Option<(usize, Crt)> = None;
    for p in large_primes() {
        let zp = Zp::new(p);
        let la = zp.from_int(fa.last().unwrap());
        let lb = zp.from_int(fb.last().unwrap());
        if la == 0 || lb == 0 {
            continue;
        }
        let g = zp.pgcd(&zp.poly_from_ints(&fa), &zp.poly_from_ints(&fb));
        let g = zp.pscale(&g, zp.from_int(&lg));
        let dg = g.len() - 1;
        if dg == 0 {
            return UniPoly::constant(Rat::one());
        }
        match &mut best {
            Some((d, crt)) if *d == dg => crt.absorb(p, &g),
            Some((d, _)) if *d < dg => continue,
            _ => best = Some((dg, Crt::new(p, &g))),
        }
        let (_, crt) = best.as_ref().unwrap();
        let cand = from_ints(&crt.symmetric());
        let cand = UniPoly::new(primitive_int(&cand).into_iter().map(Rat::from_bigint).collect());
        if cand.deg() == dg as i64 && a.divides_checked(&cand) && b.divides_checked(&cand) {
            return cand.monic();
        }
    }
    unreachable!("prime supply is unbounded")
}

impl UniPoly<Rat> {
    /// `d | self`, tested exactly.
    pub fn divides_checked(&self, d: &UniPoly<Rat>) -> bool {
        self.rem(d).is_zero()
    }
}
