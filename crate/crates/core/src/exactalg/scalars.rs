use std::fmt;

use super::factor::{factor_over, factor_q};
use super::field::Field;
use super::numfield::{Ext, NumberField};
use super::poly::UniPoly;
use super::rat::Rat;

/// A working field together with the ability to factor over it.
pub trait Scalars: Clone + fmt::Debug + Send + Sync {
    type E: Field;

    fn from_rat(&self, r: &Rat) -> Self::E;

    /// Monic irreducible factors with multiplicities.
    fn factor(&self, p: &UniPoly<Self::E>) -> Vec<(UniPoly<Self::E>, usize)>;

    fn label(&self) -> String;

    fn zero(&self) -> Self::E {
        self.from_rat(&Rat::zero())
    }

    fn one(&self) -> Self::E {
        self.from_rat(&Rat::one())
    }

    fn lift(&self, p: &UniPoly<Rat>) -> UniPoly<Self::E> {
        p.map(|c| self.from_rat(c))
    }

    /// Roots in the field with multiplicities.
    fn roots(&self, p: &UniPoly<Self::E>) -> Vec<(Self::E, usize)> {
        self.factor(p)
            .into_iter()
            .filter(|(g, _)| g.deg() == 1)
            .map(|(g, m)| (g.coeffs()[0].negated(), m))
            .collect()
    }
}

/// The rational numbers as a working field.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Rationals;

impl Scalars for Rationals {
    type E = Rat;

    fn from_rat(&self, r: &Rat) -> Rat {
        r.clone()
    }

    fn factor(&self, p: &UniPoly<Rat>) -> Vec<(UniPoly<Rat>, usize)> {
        factor_q(p)
    }

    fn label(&self) -> String {
        "Q".into()
    }
}

impl Scalars for NumberField {
    type E = Ext;

    fn from_rat(&self, r: &Rat) -> Ext {
        NumberField::from_rat(self, r)
    }

    fn factor(&self, p: &UniPoly<Ext>) -> Vec<(UniPoly<Ext>, usize)> {
        factor_over(self, p)
    }

    fn label(&self) -> String {
        format!("Q[w]/({})", self.modulus().to_string().replace('t', "w"))
    }
}
