use serde::{Deserialize, Serialize};

use crate::exactalg::{Rat, UniPoly};

/// The polynomials `A_1, ..., A_k` of the recurrence
/// `(t - 1) A_{j+1}(t) = t^2 A_j(t) - A_j(1)`, `A_1 = t + 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AkSequence {
    pub polys: Vec<UniPoly<Rat>>,
}

impl AkSequence {
    pub fn new(k: usize) -> AkSequence {
        assert!(k >= 1, "the sequence starts at A_1");
        let mut polys = vec![UniPoly::from_ints(&[1, 1])];
        let t2 = UniPoly::monomial(Rat::one(), 2);
        let tm1 = UniPoly::from_ints(&[-1, 1]);
        while polys.len() < k {
            let a = polys.last().unwrap();
            let num = &(&t2 * a) - &UniPoly::constant(a.eval(&Rat::one()));
            polys.push(num.exact_div(&tm1).expect("t = 1 is a root of t^2 A(t) - A(1)"));
        }
        AkSequence { polys }
    }

    /// `A_j`, 1-based.
    pub fn get(&self, j: usize) -> &UniPoly<Rat> {
        &self.polys[j - 1]
    }

    /// Checks the recurrence and monicity at every step.
    pub fn verify(&self) -> bool {
        let t2 = UniPoly::monomial(Rat::one(), 2);
        let tm1 = UniPoly::from_ints(&[-1, 1]);
        self.polys[0] == UniPoly::from_ints(&[1, 1])
            && self.polys.iter().enumerate().all(|(i, p)| p.deg() == i as i64 + 1 && p.lc().is_some_and(|c| c.is_one()))
            && self.polys.windows(2).all(|w| {
                let lhs = &tm1 * &w[1];
                let rhs = &(&t2 * &w[0]) - &UniPoly::constant(w[0].eval(&Rat::one()));
                lhs == rhs
            })
    }
}

/// `A_k`.
pub fn ak_poly(k: usize) -> UniPoly<Rat> {
    AkSequence::new(k).polys.pop().unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_terms() {
        assert_eq!(ak_poly(1), UniPoly::from_ints(&[1, 1]));
        assert_eq!(ak_poly(2), UniPoly::from_ints(&[2, 2, 1]));
        assert_eq!(ak_poly(3), UniPoly::from_ints(&[5, 5, 3, 1]));
    }

    #[test]
    fn a3_times_t_minus_one() {
        let lhs = &UniPoly::from_ints(&[-1, 1]) * &ak_poly(3);
        let a2 = ak_poly(2);
        let rhs = &(&UniPoly::monomial(Rat::one(), 2) * &a2) - &UniPoly::cst(5);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn long_sequence_is_exact() {
        assert!(AkSequence::new(50).verify());
    }
}
