use std::fmt;

use serde::{Deserialize, Serialize};

use crate::curvelocal::{audit_components, branch_at, flex_parameters, Branch, Component, FlexParam, ParamCurve, ParamPoint};
use crate::exactalg::factor::factor_q;
use crate::exactalg::{poly_gcd, Field, NumberField, Rat, TernForm};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum InvariantName {
    FlexCount,
    FlexMembership,
    IntersectionMultiplicityProfile,
    DescriptorMismatch,
}

impl InvariantName {
    pub const ALL: [InvariantName; 4] = [
        InvariantName::FlexCount,
        InvariantName::FlexMembership,
        InvariantName::IntersectionMultiplicityProfile,
        InvariantName::DescriptorMismatch,
    ];
}

impl fmt::Display for InvariantName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            InvariantName::FlexCount => "flex-count",
            InvariantName::FlexMembership => "flex-membership",
            InvariantName::IntersectionMultiplicityProfile => "intersection-multiplicity-profile",
            InvariantName::DescriptorMismatch => "descriptor-mismatch",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeparationCertificate {
    pub invariant_name: InvariantName,
    pub value_source: String,
    pub value_target: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "status")]
pub enum Separation {
    Separated(SeparationCertificate),
    NotSeparated,
}

/// Projective invariants of a configuration, each rendered canonically.
/// `None` means the invariant could not be computed exactly.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantValues {
    pub flex_count: Option<String>,
    pub flex_membership: Option<String>,
    pub intersection_profile: Option<String>,
    pub descriptor: Option<String>,
}

impl InvariantValues {
    pub fn get(&self, name: InvariantName) -> Option<&str> {
        match name {
            InvariantName::FlexCount => self.flex_count.as_deref(),
            InvariantName::FlexMembership => self.flex_membership.as_deref(),
            InvariantName::IntersectionMultiplicityProfile => self.intersection_profile.as_deref(),
            InvariantName::DescriptorMismatch => self.descriptor.as_deref(),
        }
    }

    /// Every invariant on which `self` and `o` are both known and differ, in list order.
    pub fn differences(&self, o: &InvariantValues) -> Vec<SeparationCertificate> {
        InvariantName::ALL
            .into_iter()
            .filter_map(|name| match (self.get(name), o.get(name)) {
                (Some(a), Some(b)) if a != b => {
                    Some(SeparationCertificate { invariant_name: name, value_source: a.into(), value_target: b.into() })
                }
                _ => None,
            })
            .collect()
    }
}

/// The curved components as parametrizations; `None` if some curved
/// component is only known implicitly.
fn curved_params(c: &[Component]) -> Option<Vec<&ParamCurve>> {
    c.iter()
        .filter(|x| x.degree() > 1)
        .map(|x| match x {
            Component::Param(p) => Some(p),
            Component::Implicit(_) => None,
        })
        .collect()
}

fn join(mut items: Vec<String>) -> String {
    items.sort();
    if items.is_empty() {
        "none".into()
    } else {
        items.join(", ")
    }
}

fn flex_count_value(curves: &[&ParamCurve]) -> String {
    let counts: Vec<usize> = curves.iter().map(|c| flex_parameters(c).iter().map(|f| f.count()).sum()).collect();
    if let [k] = counts[..] {
        return k.to_string();
    }
    join(curves.iter().zip(counts).map(|(c, k)| format!("deg {}: {k}", c.degree())).collect())
}

/// Degrees of the other components through `p`, computed exactly.
fn through<E: Field>(p: &[E; 3], others: &[(u32, TernForm<E>)]) -> Vec<u32> {
    let mut v: Vec<u32> = others.iter().filter(|(_, f)| f.eval(p).is_zero()).map(|(d, _)| *d).collect();
    v.sort();
    v
}

fn flex_membership_value(c: &[Component]) -> Option<String> {
    let mut items = Vec::new();
    for (i, comp) in c.iter().enumerate() {
        let Component::Param(curve) = comp else { continue };
        if curve.is_line() {
            continue;
        }
        let others: Vec<(u32, TernForm<Rat>)> =
            c.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, o)| (o.degree(), o.form())).collect();
        for f in flex_parameters(curve) {
            let (on, n) = match &f.param {
                FlexParam::Rational(t) => (through(&curve.point_at_rat(&ParamPoint::Finite(t.clone())), &others), 1),
                FlexParam::Infinity => (through(&curve.infinity_point(), &others), 1),
                FlexParam::Conjugates(h) => {
                    let k = NumberField::new(h.monic(), "w").ok()?;
                    let p = curve.coords().clone().map(|z| z.map(|x| k.from_rat(x)).eval(&k.gen()));
                    let o: Vec<_> = others.iter().map(|(d, g)| (*d, g.map(|x| k.from_rat(x)))).collect();
                    (through(&p, &o), h.deg() as usize)
                }
            };
            let item = format!("deg {} osc {} on {:?}", curve.degree(), f.osculation, on);
            items.extend(std::iter::repeat_n(item, n));
        }
    }
    Some(join(items))
}

fn branch_item<E: Field>(deg: u32, b: &Branch<E>) -> String {
    let beta = b.beta.map_or("-".to_string(), |x| x.to_string());
    let contact = b.contact.map_or("-".to_string(), |x| x.to_string());
    format!("deg {deg} branch e={} beta={beta} contact={contact}", b.e)
}

/// Tangent contact of every singular branch of a rational curve.
fn singular_branches(curve: &ParamCurve) -> Option<Vec<String>> {
    let mut out = Vec::new();
    let m = curve.tangent_minors();
    let sing = poly_gcd(&poly_gcd(&m[0], &m[1]), &m[2]);
    let deg = curve.degree();
    if sing.deg() > 0 {
        for (h, _) in factor_q(&sing) {
            if h.deg() == 1 {
                let t = -(&h.coeffs()[0] / &h.coeffs()[1]);
                out.push(branch_item(deg, &branch_at(curve, &ParamPoint::Finite(t), &Rat::zero()).ok()?));
            } else {
                let k = NumberField::new(h.monic(), "w").ok()?;
                let b = branch_at(curve, &ParamPoint::Finite(k.gen()), &k.from_rat(&Rat::zero())).ok()?;
                out.extend(std::iter::repeat_n(branch_item(deg, &b), h.deg() as usize));
            }
        }
    }
    let b = branch_at(curve, &ParamPoint::Infinity, &Rat::zero()).ok()?;
    if b.e > 1 {
        out.push(branch_item(deg, &b));
    }
    Some(out)
}

fn descriptor_value(c: &[Component], audit: &crate::curvelocal::AuditReport) -> String {
    let degs: Vec<u32> = {
        let mut d: Vec<u32> = c.iter().map(Component::degree).collect();
        d.sort();
        d
    };
    let items = audit
        .descriptor
        .0
        .iter()
        .map(|e| {
            let mut on: Vec<u32> = e.components.iter().map(|&i| audit.degrees[i]).collect();
            on.sort();
            format!("{} {} on degrees {:?}", e.count, e.tag, on)
        })
        .collect();
    format!("degrees {:?}: {}", degs, join(items))
}

/// Computes every invariant of the fixed list that can be obtained exactly.
pub fn invariant_values(c: &[Component]) -> InvariantValues {
    let curves = curved_params(c);
    let audit = audit_components(c).ok();
    let intersection_profile = (|| {
        let audit = audit.as_ref()?;
        let mut items = Vec::new();
        for p in curves.as_ref()? {
            items.extend(singular_branches(p)?);
        }
        for r in &audit.records {
            for &(i, j, k) in &r.intersections {
                let (a, b) = (audit.degrees[i].min(audit.degrees[j]), audit.degrees[i].max(audit.degrees[j]));
                items.extend(std::iter::repeat_n(format!("I(deg {a}, deg {b})={k}"), r.conjugates));
            }
        }
        Some(join(items))
    })();
    InvariantValues {
        flex_count: curves.as_ref().map(|cs| flex_count_value(cs)),
        flex_membership: curves.as_ref().and_then(|_| flex_membership_value(c)),
        intersection_profile,
        descriptor: audit.as_ref().map(|a| descriptor_value(c, a)),
    }
}

/// The first invariant of the fixed list telling `a` and `b` apart.
pub fn separating_invariant(a: &[Component], b: &[Component]) -> Separation {
    match separating_invariants(a, b).into_iter().next() {
        Some(cert) => Separation::Separated(cert),
        None => Separation::NotSeparated,
    }
}

/// Every invariant of the fixed list telling `a` and `b` apart.
pub fn separating_invariants(a: &[Component], b: &[Component]) -> Vec<SeparationCertificate> {
    invariant_values(a).differences(&invariant_values(b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::build_add2;
    use crate::projgeom::ProjMap;

    fn nu3(a: i64) -> Vec<Component> {
        vec![Component::Param(ParamCurve::from_ints([&[0, 0, 0, 0, 1], &[0, 0, 0, 1], &[1, a]]).unwrap())]
    }

    #[test]
    fn nu3_flex_counts() {
        match separating_invariant(&nu3(0), &nu3(1)) {
            Separation::Separated(c) => {
                assert_eq!(c.invariant_name, InvariantName::FlexCount);
                assert_eq!((c.value_source.as_str(), c.value_target.as_str()), ("1", "2"));
            }
            Separation::NotSeparated => panic!("not separated"),
        }
    }

    #[test]
    fn par_contact_profile() {
        let c = |a| vec![Component::Param(build_add2(2, &Rat::from_int(a)).unwrap())];
        let all = separating_invariants(&c(0), &c(1));
        let p = all.iter().find(|x| x.invariant_name == InvariantName::IntersectionMultiplicityProfile).unwrap();
        assert!(p.value_source.contains("e=2 beta=5 contact=5"));
        assert!(p.value_target.contains("e=2 beta=5 contact=4"));
    }

    #[test]
    fn invariant_under_maps() {
        let h = ProjMap::from_ints([[1, 2, 0], [0, 1, 3], [1, 0, 1]]).unwrap();
        let c = nu3(1);
        let d: Vec<Component> = c.iter().map(|x| h.apply(x).unwrap()).collect();
        assert_eq!(separating_invariant(&c, &d), Separation::NotSeparated);
    }
}
