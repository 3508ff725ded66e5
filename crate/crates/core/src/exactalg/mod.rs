//! Exact arithmetic: rationals, number fields, dense univariate and bivariate
//! polynomials, ternary forms, factorization and elimination.

pub mod bipoly;
pub mod elim;
pub mod factor;
pub mod field;
pub mod modular;
pub mod mpoly;
pub mod numfield;
pub mod poly;
pub mod rat;
pub mod scalars;
pub mod tern;

pub use bipoly::BiPoly;
pub use field::Field;
pub use mpoly::MPoly;
pub use numfield::{cyclotomic_poly, Ext, NumberField};
pub use poly::UniPoly;
pub use rat::Rat;
pub use scalars::{Rationals, Scalars};
pub use tern::{parse_tern_json, TernForm};

use crate::error::{Error, Result};

/// Monic gcd; `gcd(0, 0) = 0`.
pub fn poly_gcd(p: &UniPoly<Rat>, q: &UniPoly<Rat>) -> UniPoly<Rat> {
    modular::gcd_q(p, q)
}

/// `Res_var(p, q)`.
pub fn resultant_eliminate(p: &MPoly, q: &MPoly, var: usize) -> Result<MPoly> {
    mpoly::resultant(p, q, var)
}

/// Largest `k` with `(t - r)^k | p`.
pub fn root_multiplicity(p: &UniPoly<Rat>, r: &Rat) -> Result<usize> {
    if p.is_zero() {
        return Err(Error::ZeroInput("root_multiplicity"));
    }
    Ok(p.root_multiplicity(r))
}

/// Square-free part together with `(degree, multiplicity)` for each repeated
/// irreducible factor, sorted.
pub fn squarefree_part(p: &UniPoly<Rat>) -> Result<(UniPoly<Rat>, Vec<(usize, usize)>)> {
    if p.is_zero() {
        return Err(Error::ZeroInput("squarefree_part"));
    }
    let g = modular::gcd_q(p, &p.derivative());
    let sf = p.exact_div(&g).expect("gcd divides").monic();
    let mut profile: Vec<(usize, usize)> = factor::factor_q(p)
        .into_iter()
        .filter(|(_, m)| *m > 1)
        .map(|(f, m)| (f.degree().unwrap(), m))
        .collect();
    profile.sort();
    Ok((sf, profile))
}

/// Exact integral over `[0, 1]`.
pub fn integrate_unit_interval(p: &UniPoly<Rat>) -> Rat {
    p.integrate_unit_interval()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> UniPoly<Rat> {
        UniPoly::from_ints(c)
    }

    #[test]
    fn spec_level_api() {
        assert_eq!(poly_gcd(&p(&[-1, 0, 1]), &p(&[-1, 1])), p(&[-1, 1]));
        assert_eq!(root_multiplicity(&(p(&[-1, 1]).pow(3) * p(&[2, 1])), &Rat::one()), Ok(3));
        assert!(root_multiplicity(&UniPoly::zero(), &Rat::one()).is_err());
        let (sf, prof) = squarefree_part(&(p(&[-1, 1]).pow(2) * p(&[1, 1]))).unwrap();
        assert_eq!(sf, p(&[-1, 0, 1]));
        assert_eq!(prof, vec![(1, 2)]);
        let (sf, prof) = squarefree_part(&p(&[0, 0, 0, 1])).unwrap();
        assert_eq!((sf, prof), (p(&[0, 1]), vec![(1, 3)]));
        assert_eq!(integrate_unit_interval(&p(&[1, 0, -1])), Rat::new(2, 3));
    }
}
