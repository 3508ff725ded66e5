//! Factorization over the rationals (Zassenhaus with Hensel lifting) and over
//! simple algebraic extensions (Trager's norm method).

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::field::Field;
use super::modular::{from_ints, gcd_q, max_norm, primitive_int, small_primes, PolyP, Zp};
use super::numfield::{Ext, NumberField};
use super::poly::UniPoly;
use super::rat::Rat;

/// Monic irreducible factors over Q with multiplicities, sorted by degree and
/// then by coefficients. Constants give an empty list.
pub fn factor_q(f: &UniPoly<Rat>) -> Vec<(UniPoly<Rat>, usize)> {
    let mut out = Vec::new();
    for (part, mult) in squarefree_decomposition_q(f) {
        for g in factor_squarefree_q(&part) {
            out.push((g, mult));
        }
    }
    sort_factors(&mut out);
    out
}

fn sort_factors(v: &mut [(UniPoly<Rat>, usize)]) {
    v.sort_by(|(a, _), (b, _)| a.deg().cmp(&b.deg()).then_with(|| a.coeffs().cmp(b.coeffs())));
}

/// Yun's algorithm using the modular gcd.
pub fn squarefree_decomposition_q(f: &UniPoly<Rat>) -> Vec<(UniPoly<Rat>, usize)> {
    let mut out = Vec::new();
    if f.deg() <= 0 {
        return out;
    }
    let f = f.monic();
    let df = f.derivative();
    let a0 = gcd_q(&f, &df);
    let mut b = f.exact_div(&a0).expect("gcd divides");
    let c = df.exact_div(&a0).expect("gcd divides derivative");
    let mut d = &c - &b.derivative();
    let mut i = 1;
    while b.deg() > 0 {
        let a = gcd_q(&b, &d);
        b = b.exact_div(&a).expect("gcd divides");
        let c = d.exact_div(&a).expect("gcd divides");
        d = &c - &b.derivative();
        if a.deg() > 0 {
            out.push((a, i));
        }
        i += 1;
    }
    out
}

/// Rational roots with multiplicities, ascending.
pub fn rational_roots(f: &UniPoly<Rat>) -> Vec<(Rat, usize)> {
    let mut v: Vec<(Rat, usize)> = factor_q(f)
        .into_iter()
        .filter(|(g, _)| g.deg() == 1)
        .map(|(g, m)| (-g.coeffs()[0].clone(), m))
        .collect();
    v.sort();
    v
}

pub fn is_irreducible_q(f: &UniPoly<Rat>) -> bool {
    let fs = factor_q(f);
    f.deg() >= 1 && fs.len() == 1 && fs[0].1 == 1
}

/// Irreducible monic factors of a square-free polynomial over Q.
pub fn factor_squarefree_q(f: &UniPoly<Rat>) -> Vec<UniPoly<Rat>> {
    let mut out = Vec::new();
    let mut f = f.monic();
    if f.deg() <= 0 {
        return out;
    }
    if f.coeffs()[0].is_zero() {
        out.push(UniPoly::var());
        f = f.unshift(1);
    }
    if f.deg() <= 0 {
        return out;
    }
    if f.deg() == 1 {
        out.push(f);
        return out;
    }
    let big = primitive_int(&f);
    for g in zassenhaus(&big) {
        out.push(from_ints(&g).monic());
    }
    out
}

/// Irreducible primitive factors of a square-free primitive integer polynomial
/// with positive leading coefficient and nonzero constant term.
fn zassenhaus(f: &[BigInt]) -> Vec<Vec<BigInt>> {
    let n = f.len() - 1;
    let lc = f[n].clone();
    let mut best: Option<(u64, Vec<PolyP>)> = None;
    let mut tried = 0;
    for p in small_primes().skip_while(|&p| p < 50) {
        let zp = Zp::new(p);
        if zp.from_int(&lc) == 0 {
            continue;
        }
        let fp = zp.poly_from_ints(f);
        if zp.pgcd(&fp, &zp.pderiv(&fp)).len() != 1 {
            continue;
        }
        let facs = factor_mod_p(zp, &fp);
        if facs.len() == 1 {
            return vec![f.to_vec()];
        }
        if best.as_ref().is_none_or(|(_, b)| facs.len() < b.len()) {
            best = Some((p, facs));
        }
        tried += 1;
        if tried >= 5 {
            break;
        }
    }
    let (p, facs) = best.expect("some prime is good");
    // Any factor of lc*f has coefficients below lc * 2^n * ||f||_2.
    let mut norm2 = BigInt::zero();
    for c in f {
        norm2 += c * c;
    }
    let bound = &lc * (BigInt::one() << n) * (norm2.sqrt() + 1u32);
    let pb = BigInt::from(p);
    let mut m = pb.clone();
    while m <= &bound * 2u32 {
        m = &m * &m;
    }
    let lifted = hensel_lift(f, p, &facs, &m);
    recombine(f, lifted, &m)
}

fn recombine(f: &[BigInt], mut facs: Vec<Vec<BigInt>>, m: &BigInt) -> Vec<Vec<BigInt>> {
    let mut out = Vec::new();
    let mut f = f.to_vec();
    let mut size = 1;
    'outer: while 2 * size <= facs.len() {
        let lc = f.last().unwrap().clone();
        let r = facs.len();
        let mut idx: Vec<usize> = (0..size).collect();
        loop {
            // Cheap constant-term filter before the full product.
            let mut c0 = lc.clone();
            for &i in &idx {
                c0 = (c0 * &facs[i][0]).mod_floor(m);
            }
            let c0 = super::modular::symmetric(&c0, m);
            let ok0 = !c0.is_zero() && (&lc * &f[0]).is_multiple_of(&c0);
            if ok0 {
                let mut g = vec![lc.clone()];
                for &i in &idx {
                    g = mul_mod(&g, &facs[i], m);
                }
                let g: Vec<BigInt> = g.iter().map(|c| super::modular::symmetric(c, m)).collect();
                let g = primitive_int(&from_ints(&g));
                if let Some(q) = int_exact_div(&f, &g) {
                    out.push(g);
                    f = q;
                    let mut k = 0;
                    facs.retain(|_| {
                        let keep = !idx.contains(&k);
                        k += 1;
                        keep
                    });
                    continue 'outer;
                }
            }
            if !next_subset(&mut idx, r) {
                break;
            }
        }
        size += 1;
    }
    out.push(f);
    out
}

fn next_subset(idx: &mut [usize], n: usize) -> bool {
    let k = idx.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if idx[i] < n - k + i {
            idx[i] += 1;
            for j in i + 1..k {
                idx[j] = idx[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Exact quotient over Z, if it exists.
fn int_exact_div(f: &[BigInt], g: &[BigInt]) -> Option<Vec<BigInt>> {
    let (q, r) = from_ints(f).divrem(&from_ints(g));
    if !r.is_zero() || q.coeffs().iter().any(|c| !c.is_integer()) {
        return None;
    }
    Some(q.coeffs().iter().map(|c| c.numer().clone()).collect())
}

fn trim_big(mut v: Vec<BigInt>) -> Vec<BigInt> {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    v
}

fn reduce(v: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    trim_big(v.iter().map(|c| c.mod_floor(m)).collect())
}

fn mul_mod(a: &[BigInt], b: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut v = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            v[i + j] += x * y;
        }
    }
    reduce(&v, m)
}

fn add_mod(a: &[BigInt], b: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    let n = a.len().max(b.len());
    let z = BigInt::zero();
    reduce(&(0..n).map(|i| a.get(i).unwrap_or(&z) + b.get(i).unwrap_or(&z)).collect::<Vec<_>>(), m)
}

fn sub_mod(a: &[BigInt], b: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    let n = a.len().max(b.len());
    let z = BigInt::zero();
    reduce(&(0..n).map(|i| a.get(i).unwrap_or(&z) - b.get(i).unwrap_or(&z)).collect::<Vec<_>>(), m)
}

/// Division by a monic polynomial modulo `m`.
fn divrem_monic_mod(a: &[BigInt], b: &[BigInt], m: &BigInt) -> (Vec<BigInt>, Vec<BigInt>) {
    let db = b.len() - 1;
    debug_assert!(b[db].is_one());
    if a.len() <= db {
        return (Vec::new(), a.to_vec());
    }
    let mut r = a.to_vec();
    let mut q = vec![BigInt::zero(); a.len() - db];
    for k in (0..q.len()).rev() {
        let c = r[k + db].mod_floor(m);
        if c.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            r[k + j] = (&r[k + j] - &c * bj).mod_floor(m);
        }
        q[k] = c;
    }
    r.truncate(db);
    (reduce(&q, m), reduce(&r, m))
}

fn lift_vec(v: &[u64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

/// One quadratic Hensel step: `f = g h mod m` with `h` monic and `s g + t h = 1 mod m`
/// becomes the same data modulo `m^2`.
fn hensel_step(
    f: &[BigInt],
    g: &[BigInt],
    h: &[BigInt],
    s: &[BigInt],
    t: &[BigInt],
    m: &BigInt,
) -> (Vec<BigInt>, Vec<BigInt>, Vec<BigInt>, Vec<BigInt>) {
    let m2 = m * m;
    let e = sub_mod(f, &mul_mod(g, h, &m2), &m2);
    let (q, r) = divrem_monic_mod(&mul_mod(s, &e, &m2), h, &m2);
    let g2 = add_mod(&add_mod(g, &mul_mod(t, &e, &m2), &m2), &mul_mod(&q, g, &m2), &m2);
    let h2 = add_mod(h, &r, &m2);
    let b = sub_mod(&add_mod(&mul_mod(s, &g2, &m2), &mul_mod(t, &h2, &m2), &m2), &[BigInt::one()], &m2);
    let (c, d) = divrem_monic_mod(&mul_mod(s, &b, &m2), &h2, &m2);
    let s2 = sub_mod(s, &d, &m2);
    let t2 = sub_mod(&sub_mod(t, &mul_mod(t, &b, &m2), &m2), &mul_mod(&c, &g2, &m2), &m2);
    (g2, h2, s2, t2)
}

/// Lift monic factors of `f mod p` to monic factors modulo `target` (a power of p).
fn hensel_lift(f: &[BigInt], p: u64, facs: &[PolyP], target: &BigInt) -> Vec<Vec<BigInt>> {
    let zp = Zp::new(p);
    let mut out = Vec::new();
    let mut cur = f.to_vec();
    for (i, u) in facs.iter().enumerate() {
        if i + 1 == facs.len() {
            // The last factor is the monic remainder itself.
            let lc = cur.last().unwrap().clone();
            let inv = lc.modinv(target).expect("lc is a unit");
            out.push(reduce(&cur.iter().map(|c| c * &inv).collect::<Vec<_>>(), target));
            break;
        }
        let rest: PolyP = facs[i + 1..].iter().fold(vec![1u64], |acc, v| zp.pmul(&acc, v));
        let lcp = zp.from_int(cur.last().unwrap());
        let g0 = zp.pscale(&rest, lcp);
        let (one, s0, t0) = zp.pext_gcd(&g0, u);
        debug_assert_eq!(one, vec![1]);
        let mut m = BigInt::from(p);
        let (mut g, mut h, mut s, mut t) = (lift_vec(&g0), lift_vec(u), lift_vec(&s0), lift_vec(&t0));
        while &m < target {
            let (g2, h2, s2, t2) = hensel_step(&reduce(&cur, &(&m * &m)), &g, &h, &s, &t, &m);
            g = g2;
            h = h2;
            s = s2;
            t = t2;
            m = &m * &m;
        }
        let hm = reduce(&h, target);
        out.push(hm);
        cur = reduce(&g, target);
    }
    out
}

/// Monic irreducible factors of a square-free monic polynomial mod p.
pub fn factor_mod_p(zp: Zp, f: &[u64]) -> Vec<PolyP> {
    let f = zp.pmonic(f);
    let mut out = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed ^ zp.p);
    for (g, d) in distinct_degree(zp, &f) {
        equal_degree(zp, &g, d, &mut rng, &mut out);
    }
    out.sort();
    out
}

fn distinct_degree(zp: Zp, f: &[u64]) -> Vec<(PolyP, usize)> {
    let mut out = Vec::new();
    let mut f = f.to_vec();
    let x = vec![0u64, 1];
    let mut h = x.clone();
    let pe = BigInt::from(zp.p);
    let mut i = 0;
    while f.len() > 1 {
        i += 1;
        if 2 * i > f.len() - 1 {
            out.push((f.clone(), f.len() - 1));
            break;
        }
        h = zp.ppowmod(&h, &pe, &f);
        let g = zp.pgcd(&zp.psub(&h, &x), &f);
        if g.len() > 1 {
            f = zp.pdivrem(&f, &g).0;
            h = zp.prem(&h, &f);
            out.push((g, i));
        }
    }
    out
}

fn equal_degree(zp: Zp, f: &[u64], d: usize, rng: &mut ChaCha8Rng, out: &mut Vec<PolyP>) {
    let n = f.len() - 1;
    if n == d {
        out.push(zp.pmonic(f));
        return;
    }
    let e = (BigInt::from(zp.p).pow(d as u32) - 1u32) / 2u32;
    loop {
        let a: PolyP = super::modular::trim((0..n).map(|_| rng.gen_range(0..zp.p)).collect());
        if a.len() < 2 {
            continue;
        }
        let g = zp.pgcd(&a, f);
        let g = if g.len() > 1 {
            g
        } else {
            let b = zp.ppowmod(&a, &e, f);
            zp.pgcd(&zp.psub(&b, &[1]), f)
        };
        if g.len() > 1 && g.len() < f.len() {
            let q = zp.pdivrem(f, &g).0;
            equal_degree(zp, &g, d, rng, out);
            equal_degree(zp, &q, d, rng, out);
            return;
        }
    }
}

/// Monic irreducible factors over `K` with multiplicities.
pub fn factor_over(k: &NumberField, g: &UniPoly<Ext>) -> Vec<(UniPoly<Ext>, usize)> {
    let mut out = Vec::new();
    for (part, mult) in g.squarefree_decomposition() {
        for h in factor_squarefree_over(k, &part) {
            out.push((h, mult));
        }
    }
    out.sort_by(|(a, _), (b, _)| a.deg().cmp(&b.deg()).then_with(|| a.to_string().cmp(&b.to_string())));
    out
}

/// Roots in `K` with multiplicities.
pub fn roots_over(k: &NumberField, g: &UniPoly<Ext>) -> Vec<(Ext, usize)> {
    factor_over(k, g)
        .into_iter()
        .filter(|(h, _)| h.deg() == 1)
        .map(|(h, m)| (h.coeffs()[0].negated(), m))
        .collect()
}

/// Trager: shift until the norm is square-free, factor the norm over Q, and
/// pull the factors back with gcds over `K`.
fn factor_squarefree_over(k: &NumberField, g: &UniPoly<Ext>) -> Vec<UniPoly<Ext>> {
    let g = g.monic();
    if g.deg() <= 1 {
        return if g.deg() == 1 { vec![g] } else { Vec::new() };
    }
    let alpha = k.gen();
    for s in [0i64, 1, -1, 2, -2, 3, -3, 4, -4, 5, -5, 6, 7, 8, 9, 10] {
        let shift = alpha.mul_int(-s);
        let gs = g.taylor_shift(&shift);
        let norm = norm_poly(k, &gs);
        if !norm.is_squarefree() {
            continue;
        }
        let mut out = Vec::new();
        for (ni, _) in factor_q(&norm) {
            let lifted = ni.map(|c| k.from_rat(c));
            let h = gs.gcd(&lifted);
            if h.deg() > 0 {
                out.push(h.taylor_shift(&alpha.mul_int(s)).monic());
            }
        }
        return out;
    }
    panic!("no square-free norm found among small shifts")
}

/// `Res_y(m(y), g(x, y))`, the norm of `g` from `K[x]` down to `Q[x]`.
pub fn norm_poly(k: &NumberField, g: &UniPoly<Ext>) -> UniPoly<Rat> {
    let n = g.degree().unwrap_or(0) * k.degree();
    let m = k.modulus();
    let mut xs = Vec::with_capacity(n + 1);
    let mut ys = Vec::with_capacity(n + 1);
    for j in 0..=n as i64 {
        let x = Rat::from_int(j);
        let v = g.eval(&k.from_rat(&x));
        xs.push(x);
        ys.push(m.resultant(v.rep()).clone());
    }
    interpolate_q(&xs, &ys)
}

/// Newton interpolation over Q.
pub fn interpolate_q(xs: &[Rat], ys: &[Rat]) -> UniPoly<Rat> {
    let n = xs.len();
    let mut c = ys.to_vec();
    for j in 1..n {
        for i in (j..n).rev() {
            c[i] = (&c[i] - &c[i - 1]) / (&xs[i] - &xs[i - j]);
        }
    }
    let mut out = UniPoly::zero();
    for i in (0..n).rev() {
        out = &(&out * &UniPoly::linear(-&xs[i], Rat::one())) + &UniPoly::constant(c[i].clone());
    }
    out
}

/// Coefficient bound used by callers that need a quick size estimate.
pub fn height(f: &UniPoly<Rat>) -> BigInt {
    max_norm(&primitive_int(f))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> UniPoly<Rat> {
        UniPoly::from_ints(c)
    }

    fn product(fs: &[(UniPoly<Rat>, usize)]) -> UniPoly<Rat> {
        fs.iter().fold(p(&[1]), |acc, (g, m)| acc * g.pow(*m as u32))
    }

    #[test]
    fn factors_swinnerton_dyer_like() {
        // x^4 - 10x^2 + 1 is irreducible over Q but splits mod every prime.
        let f = p(&[1, 0, -10, 0, 1]);
        assert_eq!(factor_q(&f), vec![(f.clone(), 1)]);
    }

    #[test]
    fn factors_mixed() {
        let a = p(&[-2, 0, 1]);
        let b = p(&[1, 1, 1]);
        let c = p(&[3, 2]);
        let f = &(&a * &a) * &(&b * &c);
        let fs = factor_q(&f);
        assert_eq!(fs.len(), 3);
        assert_eq!(product(&fs), f.monic());
        assert!(fs.iter().any(|(g, m)| *g == a && *m == 2));
    }

    #[test]
    fn cyclotomic_splits() {
        let f = p(&[-1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1]);
        let fs = factor_q(&f);
        let degs: Vec<i64> = fs.iter().map(|(g, _)| g.deg()).collect();
        assert_eq!(degs, vec![1, 1, 2, 2, 2, 4]);
        assert_eq!(product(&fs), f);
    }

    #[test]
    fn rational_root_list() {
        let f = p(&[6, -5, 1]) * p(&[1, 3]);
        assert_eq!(
            rational_roots(&f),
            vec![(Rat::new(-1, 3), 1), (Rat::from_int(2), 1), (Rat::from_int(3), 1)]
        );
    }

    #[test]
    fn high_degree_with_many_modular_factors() {
        let mut f = p(&[1]);
        for k in 1..=6 {
            f = f * p(&[-k, 0, 1]);
        }
        // Squares 1 and 4 split, the other four stay quadratic.
        let fs = factor_q(&f);
        assert_eq!(fs.len(), 8);
        assert_eq!(product(&fs), f);
    }

    #[test]
    fn trager_over_gaussian_field() {
        let k = NumberField::new(p(&[1, 0, 1]), "i").unwrap();
        let f = p(&[1, 0, 0, 0, 1]).map(|c| k.from_rat(c));
        let fs = factor_over(&k, &f);
        assert_eq!(fs.len(), 2);
        assert!(fs.iter().all(|(g, _)| g.deg() == 2));
        let k8 = NumberField::cyclotomic(8);
        let f8 = p(&[1, 0, 0, 0, 1]).map(|c| k8.from_rat(c));
        assert_eq!(roots_over(&k8, &f8).len(), 4);
    }

    #[test]
    fn norm_of_linear() {
        let k = NumberField::new(p(&[-2, 0, 1]), "r2").unwrap();
        let g = UniPoly::linear(k.gen().negated(), k.one());
        assert_eq!(norm_poly(&k, &g), p(&[-2, 0, 1]));
    }
}
