//! Projective equivalence: curve equality, witnesses, separating invariants
//! and orbit reports for finite sets of family members.

mod invariants;
mod report;

pub use invariants::{invariant_values, separating_invariant, separating_invariants, InvariantName, InvariantValues, Separation, SeparationCertificate};
pub use report::{rigidity_report, PairEntry, PairStatus, RigidityReport};

use serde::{Deserialize, Serialize};

use crate::curvelocal::Component;
use crate::error::{Error, Result};
use crate::exactalg::{Rat, TernForm};
use crate::projgeom::ProjMap;

/// The normalized product of the component forms.
pub fn configuration_form(c: &[Component]) -> TernForm<Rat> {
    let mut forms = c.iter().map(Component::form);
    let Some(first) = forms.next() else {
        return TernForm::zero(0);
    };
    forms.fold(first, |acc, f| acc.mul(&f)).normalize()
}

/// Whether two configurations are the same plane curve, components unordered.
pub fn curves_equal(a: &[Component], b: &[Component]) -> bool {
    let deg = |c: &[Component]| c.iter().map(Component::degree).sum::<u32>();
    if deg(a) != deg(b) || a.is_empty() {
        return false;
    }
    configuration_form(a) == configuration_form(b)
}

/// `map` carries `source` onto `target`; `reparam` is applied to the
/// parametrized source components first.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub map: ProjMap,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reparam: Option<[[Rat; 2]; 2]>,
    pub source: Vec<Component>,
    pub target: Vec<Component>,
}

impl Witness {
    pub fn new(map: ProjMap, source: Vec<Component>, target: Vec<Component>) -> Witness {
        Witness { map, reparam: None, source, target }
    }

    /// The image of the source under the witness.
    pub fn image(&self) -> Result<Vec<Component>> {
        self.source
            .iter()
            .map(|c| {
                let c = match (c, &self.reparam) {
                    (Component::Param(p), Some(m)) => Component::Param(p.mobius(m.clone())?),
                    _ => c.clone(),
                };
                self.map.apply(&c)
            })
            .collect()
    }
}

pub fn verify_witness(w: &Witness) -> Result<bool> {
    if let Some(m) = &w.reparam {
        if (&m[0][0] * &m[1][1] - &m[0][1] * &m[1][0]).is_zero() {
            return Err(Error::SingularMatrix);
        }
    }
    Ok(curves_equal(&w.image()?, &w.target))
}
