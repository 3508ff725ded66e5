//! Evaluation/interpolation kernels: an integer polynomial is recovered from
//! its values modulo enough word-size primes to exceed twice a rigorous
//! coefficient bound.

use std::cell::RefCell;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::bipoly::BiPoly;
use super::modular::{large_primes, Crt, Zp};
use super::poly::UniPoly;
use super::rat::Rat;

/// Integer polynomial of degree `<= deg` with coefficients bounded by `bound`
/// in absolute value, recovered from `eval(zp, x) = f(x) mod p`.
pub fn multimodular_univariate(deg: usize, bound: &BigInt, eval: impl Fn(Zp, u64) -> u64) -> UniPoly<Rat> {
    let target = bound * 2u32 + 1u32;
    let mut crt: Option<Crt> = None;
    for p in large_primes() {
        let zp = Zp::new(p);
        let xs: Vec<u64> = (0..=deg as u64).collect();
        let ys: Vec<u64> = xs.iter().map(|&x| eval(zp, x)).collect();
        let f = zp.interpolate(&xs, &ys);
        match &mut crt {
            None => crt = Some(Crt::new(p, &f)),
            Some(c) => c.absorb(p, &f),
        }
        let c = crt.as_ref().unwrap();
        if c.modulus > target {
            return UniPoly::new(c.symmetric().into_iter().map(Rat::from_bigint).collect());
        }
    }
    unreachable!()
}

/// Bivariate analogue of [`multimodular_univariate`] with separate degree
/// bounds in `x` and `y`.
pub fn multimodular_bivariate(
    dx: usize,
    dy: usize,
    bound: &BigInt,
    eval: impl Fn(Zp, u64, u64) -> u64,
) -> BiPoly<Rat> {
    let target = bound * 2u32 + 1u32;
    let mut crt: Option<Crt> = None;
    let w = dx + 1;
    for p in large_primes() {
        let zp = Zp::new(p);
        let xs: Vec<u64> = (0..=dx as u64).collect();
        let ys: Vec<u64> = (0..=dy as u64).collect();
        // For each x node, interpolate in y.
        let per_x: Vec<Vec<u64>> = xs
            .iter()
            .map(|&x| {
                let vals: Vec<u64> = ys.iter().map(|&y| eval(zp, x, y)).collect();
                let mut c = zp.interpolate(&ys, &vals);
                c.resize(dy + 1, 0);
                c
            })
            .collect();
        let mut flat = vec![0u64; w * (dy + 1)];
        for j in 0..=dy {
            let vals: Vec<u64> = per_x.iter().map(|c| c[j]).collect();
            let c = zp.interpolate(&xs, &vals);
            for (i, v) in c.into_iter().enumerate() {
                flat[j * w + i] = v;
            }
        }
        match &mut crt {
            None => crt = Some(Crt::new(p, &flat)),
            Some(c) => c.absorb(p, &flat),
        }
        let c = crt.as_ref().unwrap();
        if c.modulus > target {
            let v = c.symmetric();
            let rows = (0..=dy)
                .map(|j| UniPoly::new((0..w).map(|i| Rat::from_bigint(v.get(j * w + i).cloned().unwrap_or_default())).collect()))
                .collect();
            return BiPoly::new(rows);
        }
    }
    unreachable!()
}

/// Sum of absolute values of the coefficients of an integer bivariate polynomial.
pub fn l1_norm(f: &BiPoly<Rat>) -> BigInt {
    f.terms().map(|(_, c)| c.numer().abs()).sum()
}

/// Clear denominators and content of a bivariate polynomial.
pub fn primitive_bi(f: &BiPoly<Rat>) -> BiPoly<Rat> {
    let mut den = BigInt::one();
    for (_, c) in f.terms() {
        den = den.lcm(c.denom());
    }
    let mut g = BigInt::zero();
    for (_, c) in f.terms() {
        g = g.gcd(&(c.numer() * (&den / c.denom())));
    }
    if g.is_zero() {
        return BiPoly::zero();
    }
    f.scale(&Rat::from_big(den, g))
}

/// Image of an integer bivariate polynomial modulo p, rows in `y`.
pub fn bi_mod(zp: Zp, f: &BiPoly<Rat>) -> Vec<Vec<u64>> {
    f.rows().iter().map(|r| r.coeffs().iter().map(|c| zp.from_int(c.numer())).collect()).collect()
}

/// `f(x0, y) mod p` from [`bi_mod`] rows.
pub fn eval_rows(zp: Zp, rows: &[Vec<u64>], x: u64) -> Vec<u64> {
    super::modular::trim(rows.iter().map(|r| zp.peval(r, x)).collect())
}

/// `Res_y(f, g)` for bivariate polynomials with rational coefficients, up to a
/// nonzero rational factor (inputs are made primitive integral first). The
/// `y`-degrees are used as formal degrees.
pub fn resultant_y(f: &BiPoly<Rat>, g: &BiPoly<Rat>) -> UniPoly<Rat> {
    let f = primitive_bi(f);
    let g = primitive_bi(g);
    if f.is_zero() || g.is_zero() {
        return UniPoly::zero();
    }
    let (m, n) = (f.deg_y() as usize, g.deg_y() as usize);
    let dx = (f.deg_x() as usize) * n + (g.deg_x() as usize) * m;
    let tot = (f.total_degree() * g.total_degree()) as usize;
    let deg = dx.min(tot);
    let bound = l1_norm(&f).pow(n as u32) * l1_norm(&g).pow(m as u32);
    let images = ModImages::new(vec![f, g]);
    multimodular_univariate(deg, &bound, |zp, x| {
        images.with(zp, |rows| {
            let a = eval_rows(zp, &rows[0], x);
            let b = eval_rows(zp, &rows[1], x);
            zp.presultant(&a, m, &b, n)
        })
    })
}

/// Per-prime cache of the images of a fixed list of bivariate polynomials.
pub struct ModImages {
    polys: Vec<BiPoly<Rat>>,
    cache: RefCell<Option<(u64, Vec<Vec<Vec<u64>>>)>>,
}

impl ModImages {
    pub fn new(polys: Vec<BiPoly<Rat>>) -> ModImages {
        ModImages { polys, cache: RefCell::new(None) }
    }

    pub fn with<T>(&self, zp: Zp, f: impl FnOnce(&[Vec<Vec<u64>>]) -> T) -> T {
        let mut c = self.cache.borrow_mut();
        if c.as_ref().map(|(p, _)| *p) != Some(zp.p) {
            *c = Some((zp.p, self.polys.iter().map(|q| bi_mod(zp, q)).collect()));
        }
        f(&c.as_ref().unwrap().1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn univariate_reconstruction() {
        let f = UniPoly::from_ints(&[-7, 0, 123456789, 5]);
        let big: BigInt = BigInt::from(123456789);
        let g = multimodular_univariate(3, &big, |zp, x| zp.peval(&zp.poly_from_rat(&f).unwrap(), x));
        assert_eq!(g, f);
    }

    #[test]
    fn resultant_eliminates_y() {
        // Res_y(y - x^2, y^2 - x) = x^4 - x
        let f = BiPoly::from_terms([((0, 1), Rat::one()), ((2, 0), Rat::from_int(-1))]);
        let g = BiPoly::from_terms([((0, 2), Rat::one()), ((1, 0), Rat::from_int(-1))]);
        let r = resultant_y(&f, &g);
        assert_eq!(r.monic(), UniPoly::from_ints(&[0, -1, 0, 0, 1]));
        assert!(r.eval(&Rat::one()).is_zero());
    }

    #[test]
    fn bivariate_reconstruction() {
        let f = BiPoly::from_terms([((2, 1), Rat::from_int(-3)), ((0, 2), Rat::from_int(5)), ((1, 0), Rat::one())]);
        let g = multimodular_bivariate(2, 2, &BigInt::from(5), |zp, x, y| {
            let rows = bi_mod(zp, &f);
            zp.peval(&eval_rows(zp, &rows, x), y)
        });
        assert_eq!(g, f);
    }
}
