use crate::error::{Error, Result};
use crate::exactalg::{Field, TernForm, UniPoly};

use super::param::{cross_field, normalize_point, ParamCurve, ParamPoint};
use super::tag::BranchType;

/// The branch of a parametrized curve at one parameter value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Branch<E> {
    pub center: [E; 3],
    /// Multiplicity of the branch.
    pub e: u32,
    /// Intersection number with the tangent line; `None` when the curve is
    /// that line.
    pub contact: Option<u32>,
    /// First characteristic exponent, for singular branches.
    pub beta: Option<u32>,
    pub tangent: [E; 3],
    pub param: ParamPoint<E>,
}

impl<E: Field> Branch<E> {
    pub fn is_smooth(&self) -> bool {
        self.e == 1
    }

    pub fn branch_type(&self) -> BranchType {
        BranchType { e: self.e, beta: self.beta }
    }
}

/// Truncated power series product.
fn mul_trunc<E: Field>(a: &[E], b: &[E], n: usize, zero: &E) -> Vec<E> {
    let mut out = vec![zero.clone(); n];
    for (i, x) in a.iter().enumerate().take(n) {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate().take(n - i) {
            out[i + j] = out[i + j].plus(&x.times(y));
        }
    }
    out
}

/// Inverse of a unit power series to `n` terms.
fn inv_trunc<E: Field>(a: &[E], n: usize, zero: &E) -> Vec<E> {
    let a0 = a[0].inverse();
    let mut out = vec![zero.clone(); n];
    out[0] = a0.clone();
    for k in 1..n {
        let mut s = zero.clone();
        for j in 1..=k.min(a.len() - 1) {
            s = s.plus(&a[j].times(&out[k - j]));
        }
        out[k] = s.times(&a0).negated();
    }
    out
}

fn series_ord<E: Field>(a: &[E]) -> Option<usize> {
    a.iter().position(|c| !c.is_zero())
}

fn dot<E: Field>(l: &[E; 3], g: &[UniPoly<E>; 3]) -> UniPoly<E> {
    let mut acc = UniPoly::zero();
    for i in 0..3 {
        acc = &acc + &g[i].scale(&l[i]);
    }
    acc
}

fn padded<E: Field>(p: &UniPoly<E>, n: usize, zero: &E) -> Vec<E> {
    (0..n).map(|i| p.coeff(i).cloned().unwrap_or_else(|| zero.clone())).collect()
}

/// Local branch data of `curve` at `t0`.
pub fn branch_at<E: Field>(curve: &ParamCurve, t0: &ParamPoint<E>, like: &E) -> Result<Branch<E>> {
    let g = curve.local_coords(t0, like);
    let zero = like.zero_like();
    let c0: [E; 3] = g.clone().map(|p| p.coeff(0).cloned().unwrap_or_else(|| zero.clone()));
    if c0.iter().all(|c| c.is_zero()) {
        return Err(Error::DegenerateInput("all coordinates vanish at the parameter".into()));
    }
    let d = curve.degree() as usize;
    // First coefficient vector not proportional to the center.
    let mut e = None;
    for j in 1..=d {
        let cj: [E; 3] = g.clone().map(|p| p.coeff(j).cloned().unwrap_or_else(|| zero.clone()));
        let t = cross_field(&c0, &cj);
        if t.iter().any(|c| !c.is_zero()) {
            e = Some((j, t));
            break;
        }
    }
    let (e, tangent) = e.ok_or_else(|| Error::DegenerateInput("constant map".into()))?;
    let tangent = normalize_point(&tangent);
    let along = dot(&tangent, &g);
    let contact = along.ord().map(|c| c as u32);
    let mut beta = None;
    if e > 1 {
        let contact = contact.expect("a singular branch is not a line") as usize;
        // Affine coordinates x = l1/l0 (order e) and y = tangent/l0.
        let l0 = transverse_line(&c0, None);
        let l1 = transverse_line(&c0, Some(&tangent));
        let n = (d.saturating_sub(1)) * (d.saturating_sub(2)) + contact + e + 2;
        let den = inv_trunc(&padded(&dot(&l0, &g), n, &zero), n, &zero);
        let x = mul_trunc(&padded(&dot(&l1, &g), n, &zero), &den, n, &zero);
        let mut y = mul_trunc(&padded(&along, n, &zero), &den, n, &zero);
        debug_assert_eq!(series_ord(&x), Some(e));
        let xe = x[e].clone();
        loop {
            let k = match series_ord(&y) {
                Some(k) => k,
                None => return Err(Error::ResourceBudget("branch expansion precision exhausted".into())),
            };
            if k % e != 0 {
                beta = Some(k as u32);
                break;
            }
            // y -= c x^(k/e) with c matching the leading term.
            let q = k / e;
            let c = y[k].over(&xe.powu(q as u64));
            let mut xp = vec![like.one_like()];
            for _ in 0..q {
                xp = mul_trunc(&xp, &x, n, &zero);
            }
            for (i, v) in xp.iter().enumerate() {
                y[i] = y[i].minus(&c.times(v));
            }
        }
    }
    Ok(Branch { center: normalize_point(&c0), e: e as u32, contact, beta, tangent, param: t0.clone() })
}

/// A line not through `p` (when `through` is `None`), or a line through `p`
/// different from `through`.
fn transverse_line<E: Field>(p: &[E; 3], through: Option<&[E; 3]>) -> [E; 3] {
    let zero = p[0].zero_like();
    let one = p[0].one_like();
    let units: Vec<[E; 3]> = (0..3)
        .map(|i| {
            let mut v = [zero.clone(), zero.clone(), zero.clone()];
            v[i] = one.clone();
            v
        })
        .collect();
    match through {
        None => units.into_iter().find(|l| !dot_pt(l, p).is_zero()).expect("nonzero point"),
        Some(t) => units
            .iter()
            .map(|u| cross_field(p, u))
            .find(|l| l.iter().any(|c| !c.is_zero()) && cross_field(l, t).iter().any(|c| !c.is_zero()))
            .expect("two independent lines through a point"),
    }
}

fn dot_pt<E: Field>(l: &[E; 3], p: &[E; 3]) -> E {
    l[0].times(&p[0]).plus(&l[1].times(&p[1])).plus(&l[2].times(&p[2]))
}

/// Intersection multiplicity at `f(t0)` of the branch of `curve` at `t0`
/// with the curve `form = 0`.
pub fn pair_intersection_multiplicity<E: Field>(
    curve: &ParamCurve,
    t0: &ParamPoint<E>,
    form: &TernForm<crate::exactalg::Rat>,
    like: &E,
) -> Result<u64> {
    let g = curve.local_coords(t0, like);
    let f = form.map(|c| like.embed(c));
    let p = f.pullback(&g);
    match p.ord() {
        Some(k) => Ok(k as u64),
        None => Err(Error::InfiniteIntersection("the curve is a component of the other curve".into())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::Rat;

    fn at0() -> ParamPoint<Rat> {
        ParamPoint::Finite(Rat::zero())
    }

    #[test]
    fn cusp_of_cuspidal_cubic() {
        let c = ParamCurve::from_ints([&[0, 0, 0, 1], &[0, 0, 1], &[1]]).unwrap();
        let b = branch_at(&c, &at0(), &Rat::zero()).unwrap();
        assert_eq!((b.e, b.contact, b.beta), (2, Some(3), Some(3)));
        assert_eq!(b.center, [Rat::zero(), Rat::zero(), Rat::one()]);
        assert_eq!(b.tangent, [Rat::one(), Rat::zero(), Rat::zero()]);
    }

    #[test]
    fn t35_and_lines() {
        let c = ParamCurve::from_ints([&[0, 0, 0, 0, 0, 1], &[0, 0, 0, 1], &[1]]).unwrap();
        let b = branch_at(&c, &at0(), &Rat::zero()).unwrap();
        assert_eq!((b.e, b.contact, b.beta), (3, Some(5), Some(5)));
        let l = ParamCurve::from_ints([&[0, 1], &[1], &[1]]).unwrap();
        let b = branch_at(&l, &at0(), &Rat::zero()).unwrap();
        assert_eq!((b.e, b.contact), (1, None));
    }

    #[test]
    fn beta_differs_from_contact_after_a_parabola() {
        // (t^2, t^4 + t^5): x = t^2, y = x^2 + x^(5/2); contact with y=0 is 4, beta 5
        let c = ParamCurve::from_ints([&[0, 0, 1], &[0, 0, 0, 0, 1, 1], &[1]]).unwrap();
        let b = branch_at(&c, &at0(), &Rat::zero()).unwrap();
        assert_eq!((b.e, b.contact, b.beta), (2, Some(4), Some(5)));
    }

    #[test]
    fn intersections_with_the_line_at_infinity() {
        let z3 = TernForm::var(2);
        let c0 = ParamCurve::from_ints([&[0, 0, 0, 0, 0, 1], &[0, 0, 0, 1], &[1]]).unwrap();
        let c1 = ParamCurve::from_ints([&[0, 0, 0, 0, 0, 1], &[0, 0, 0, 1], &[1, 1]]).unwrap();
        let inf = ParamPoint::<Rat>::Infinity;
        assert_eq!(pair_intersection_multiplicity(&c0, &inf, &z3, &Rat::zero()), Ok(5));
        assert_eq!(pair_intersection_multiplicity(&c1, &inf, &z3, &Rat::zero()), Ok(4));
        let line = ParamCurve::from_ints([&[0, 1], &[0], &[1]]).unwrap();
        let z2 = TernForm::var(1);
        assert!(matches!(pair_intersection_multiplicity(&line, &at0(), &z2, &Rat::zero()), Err(Error::InfiniteIntersection(_))));
    }
}
