use std::fmt;
use std::hash::Hash;

use super::rat::Rat;

/// A characteristic-zero field whose elements carry their own context.
///
/// Constants are built from an existing element (`zero_like`, `embed`) so that
/// number-field elements can share their modulus without a global registry.
pub trait Field: Clone + PartialEq + Eq + Hash + fmt::Debug + fmt::Display + Send + Sync + 'static {
    fn is_zero(&self) -> bool;
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn embed(&self, r: &Rat) -> Self;
    fn plus(&self, o: &Self) -> Self;
    fn minus(&self, o: &Self) -> Self;
    fn times(&self, o: &Self) -> Self;
    fn negated(&self) -> Self;
    /// Panics on zero.
    fn inverse(&self) -> Self;
    /// `Some` iff the element lies in the prime field.
    fn to_rat(&self) -> Option<Rat>;

    fn is_one(&self) -> bool {
        *self == self.one_like()
    }

    fn over(&self, o: &Self) -> Self {
        self.times(&o.inverse())
    }

    fn scale(&self, r: &Rat) -> Self {
        self.times(&self.embed(r))
    }

    fn mul_int(&self, k: i64) -> Self {
        self.scale(&Rat::from_int(k))
    }

    fn powu(&self, mut e: u64) -> Self {
        let mut acc = self.one_like();
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.times(&base);
            }
            base = base.times(&base);
            e >>= 1;
        }
        acc
    }
}

impl Field for Rat {
    fn is_zero(&self) -> bool {
        Rat::is_zero(self)
    }
    fn zero_like(&self) -> Rat {
        Rat::zero()
    }
    fn one_like(&self) -> Rat {
        Rat::one()
    }
    fn embed(&self, r: &Rat) -> Rat {
        r.clone()
    }
    fn plus(&self, o: &Rat) -> Rat {
        self + o
    }
    fn minus(&self, o: &Rat) -> Rat {
        self - o
    }
    fn times(&self, o: &Rat) -> Rat {
        self * o
    }
    fn negated(&self) -> Rat {
        -self
    }
    fn inverse(&self) -> Rat {
        Rat::inv(self)
    }
    fn to_rat(&self) -> Option<Rat> {
        Some(self.clone())
    }
    fn is_one(&self) -> bool {
        Rat::is_one(self)
    }
    fn scale(&self, r: &Rat) -> Rat {
        self * r
    }
}
