use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use crate::error::{Error, Result};

use super::factor::is_irreducible_q;
use super::field::Field;
use super::poly::UniPoly;
use super::rat::Rat;

/// `Q[w]/(m(w))` for a monic irreducible `m`.
#[derive(Debug, PartialEq, Eq, Hash)]
pub struct NumberFieldData {
    modulus: UniPoly<Rat>,
    name: String,
    /// False when the modulus was too large to check and is trusted.
    checked: bool,
}

/// Shared handle to a number field; elements keep one alive.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NumberField(Arc<NumberFieldData>);

/// Irreducibility is certified up to this degree and trusted above it.
pub const IRREDUCIBILITY_CHECK_MAX_DEGREE: usize = 8;

impl NumberField {
    pub fn new(modulus: UniPoly<Rat>, name: &str) -> Result<NumberField> {
        let d = modulus.degree().ok_or(Error::ZeroInput("modulus"))?;
        if d == 0 {
            return Err(Error::DegenerateInput("constant modulus".into()));
        }
        let modulus = modulus.monic();
        let checked = d <= IRREDUCIBILITY_CHECK_MAX_DEGREE;
        if checked && !is_irreducible_q(&modulus) {
            return Err(Error::DegenerateInput(format!("modulus {modulus} is reducible")));
        }
        Ok(NumberField(Arc::new(NumberFieldData { modulus, name: name.to_string(), checked })))
    }

    /// `Q(zeta_m)`, generated by a primitive m-th root of unity.
    pub fn cyclotomic(m: usize) -> NumberField {
        NumberField::new(cyclotomic_poly(m), &format!("zeta{m}")).expect("cyclotomic polynomials are irreducible")
    }

    pub fn modulus(&self) -> &UniPoly<Rat> {
        &self.0.modulus
    }

    pub fn name(&self) -> &str {
        &self.0.name
    }

    pub fn irreducibility_checked(&self) -> bool {
        self.0.checked
    }

    pub fn degree(&self) -> usize {
        self.0.modulus.degree().unwrap()
    }

    pub fn elem(&self, rep: UniPoly<Rat>) -> Ext {
        let rep = if rep.deg() >= self.degree() as i64 { rep.rem(&self.0.modulus) } else { rep };
        Ext { rep, field: self.clone() }
    }

    pub fn from_rat(&self, r: &Rat) -> Ext {
        self.elem(UniPoly::constant(r.clone()))
    }

    pub fn from_int(&self, n: i64) -> Ext {
        self.from_rat(&Rat::from_int(n))
    }

    pub fn zero(&self) -> Ext {
        self.elem(UniPoly::zero())
    }

    pub fn one(&self) -> Ext {
        self.from_int(1)
    }

    /// The class of the variable, a root of the modulus.
    pub fn gen(&self) -> Ext {
        self.elem(UniPoly::var())
    }

    pub fn same(&self, other: &NumberField) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}

/// The m-th cyclotomic polynomial.
pub fn cyclotomic_poly(m: usize) -> UniPoly<Rat> {
    assert!(m >= 1);
    let mut f = UniPoly::monomial(Rat::one(), m) - UniPoly::one();
    for d in 1..m {
        if m % d == 0 {
            f = f.exact_div(&cyclotomic_poly(d)).expect("cyclotomic divisor");
        }
    }
    f
}

/// Element of a number field, stored as its reduced representative.
#[derive(Clone)]
pub struct Ext {
    rep: UniPoly<Rat>,
    field: NumberField,
}

impl Ext {
    pub fn rep(&self) -> &UniPoly<Rat> {
        &self.rep
    }

    pub fn field(&self) -> &NumberField {
        &self.field
    }

    fn check(&self, o: &Ext) {
        debug_assert!(self.field.same(&o.field), "mixing elements of different fields");
    }
}

impl PartialEq for Ext {
    fn eq(&self, o: &Ext) -> bool {
        self.rep == o.rep && self.field.same(&o.field)
    }
}

impl Eq for Ext {}

impl Hash for Ext {
    fn hash<H: Hasher>(&self, h: &mut H) {
        self.rep.hash(h);
    }
}

impl fmt::Display for Ext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.rep.fmt_var(f, "w")
    }
}

impl fmt::Debug for Ext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} in {}", self.field.name())
    }
}

impl Field for Ext {
    fn is_zero(&self) -> bool {
        self.rep.is_zero()
    }
    fn zero_like(&self) -> Ext {
        self.field.zero()
    }
    fn one_like(&self) -> Ext {
        self.field.one()
    }
    fn embed(&self, r: &Rat) -> Ext {
        self.field.from_rat(r)
    }
    fn plus(&self, o: &Ext) -> Ext {
        self.check(o);
        Ext { rep: &self.rep + &o.rep, field: self.field.clone() }
    }
    fn minus(&self, o: &Ext) -> Ext {
        self.check(o);
        Ext { rep: &self.rep - &o.rep, field: self.field.clone() }
    }
    fn times(&self, o: &Ext) -> Ext {
        self.check(o);
        self.field.elem(&self.rep * &o.rep)
    }
    fn negated(&self) -> Ext {
        Ext { rep: -&self.rep, field: self.field.clone() }
    }
    fn inverse(&self) -> Ext {
        assert!(!self.rep.is_zero(), "inverse of zero");
        let (g, s, _) = self.rep.ext_gcd(self.field.modulus());
        debug_assert_eq!(g, UniPoly::one());
        self.field.elem(s)
    }
    fn to_rat(&self) -> Option<Rat> {
        match self.rep.degree() {
            None => Some(Rat::zero()),
            Some(0) => Some(self.rep.coeffs()[0].clone()),
            _ => None,
        }
    }
    fn scale(&self, r: &Rat) -> Ext {
        Ext { rep: self.rep.scale(r), field: self.field.clone() }
    }
}
