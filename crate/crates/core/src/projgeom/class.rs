use crate::curvelocal::{branch_at, ParamCurve, ParamPoint};
use crate::error::{Error, Result};
use crate::exactalg::factor::factor_q;
use crate::exactalg::{poly_gcd, NumberField, Rat};

/// `2d - 2 - sum (e_b - 1)` over the singular branches of a rational curve.
pub fn class_of_curve(c: &ParamCurve) -> Result<u32> {
    if c.is_line() {
        return Ok(0);
    }
    let mut defect = 0u32;
    let m = c.tangent_minors();
    let s = poly_gcd(&poly_gcd(&m[0], &m[1]), &m[2]);
    if s.deg() > 0 {
        for (h, mult) in factor_q(&s) {
            let e = if h.deg() == 1 {
                let t0 = -h.monic().coeffs()[0].clone();
                branch_at(c, &ParamPoint::Finite(t0), &Rat::zero())?.e
            } else {
                let k = NumberField::new(h.clone(), "w")?;
                branch_at(c, &ParamPoint::Finite(k.gen()), &k.zero())?.e
            };
            if e as usize != mult + 1 {
                return Err(Error::CertificationFailure(format!("branch multiplicity {e} at a root of order {mult}")));
            }
            defect += (e - 1) * h.deg() as u32;
        }
    }
    let r = c.reversed().tangent_minors();
    let at_inf = poly_gcd(&poly_gcd(&r[0], &r[1]), &r[2]).ord().unwrap_or(0);
    if at_inf > 0 {
        defect += branch_at(c, &ParamPoint::<Rat>::Infinity, &Rat::zero())?.e - 1;
    }
    Ok(2 * c.degree() - 2 - defect)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::projgeom::dual_param;

    fn curve(c: [&[i64]; 3]) -> ParamCurve {
        ParamCurve::from_ints(c).unwrap()
    }

    #[test]
    fn classical_classes() {
        assert_eq!(class_of_curve(&curve([&[0, 0, 1], &[0, 1], &[1]])), Ok(2));
        assert_eq!(class_of_curve(&curve([&[-1, 0, 1], &[0, -1, 0, 1], &[1]])), Ok(4));
        assert_eq!(class_of_curve(&curve([&[0, 0, 0, 1], &[0, 0, 1], &[1]])), Ok(3));
    }

    #[test]
    fn agrees_with_dual_degree() {
        for c in [
            curve([&[0, 0, 0, 0, 1], &[0, 0, -1, 1], &[1, -2]]),
            curve([&[0, 0, 0, 0, 0, 1], &[0, 0, 0, 1], &[1, 1]]),
            curve([&[1, 0, 1], &[3, -1, 0, 1], &[2, 1, 0, 1]]),
        ] {
            assert_eq!(class_of_curve(&c).unwrap(), dual_param(&c).unwrap().degree());
        }
    }
}
