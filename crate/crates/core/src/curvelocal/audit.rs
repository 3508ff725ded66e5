//! Singularity audit of a union of plane curves.
//!
//! Singular centers are located exactly, each is classified by a
//! Newton–Puiseux analysis of the local equation of the union, and the result
//! is certified against the genus formula and Bézout's theorem.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::budget;
use crate::error::{Error, Result};
use crate::exactalg::elim::resultant_y;
use crate::exactalg::factor::{factor_over, factor_q, norm_poly};
use crate::exactalg::tern::other_two;
use crate::exactalg::{poly_gcd, BiPoly, Ext, Field, NumberField, Rat, Rationals, Scalars, TernForm, UniPoly};
use crate::projgeom::implicitize;

use super::germ::{analyze, order_at_origin, transverse_shear};
use super::param::{cross_field, normalize_point, ParamCurve};
use super::tag::{classify_germ, SingTypeTag};

/// One component of a plane curve.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Component {
    Param(ParamCurve),
    Implicit(TernForm<Rat>),
}

impl Component {
    pub fn degree(&self) -> u32 {
        match self {
            Component::Param(c) => c.degree(),
            Component::Implicit(f) => f.degree(),
        }
    }

    pub fn form(&self) -> TernForm<Rat> {
        match self {
            Component::Param(c) => implicitize(c),
            Component::Implicit(f) => f.normalize(),
        }
    }

    pub fn as_param(&self) -> Option<&ParamCurve> {
        match self {
            Component::Param(c) => Some(c),
            Component::Implicit(_) => None,
        }
    }
}

impl From<ParamCurve> for Component {
    fn from(c: ParamCurve) -> Component {
        Component::Param(c)
    }
}

/// A projective point or line, over Q or over `Q[w]/(modulus)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "field", rename_all = "snake_case")]
pub enum Coords {
    Rational { coords: [Rat; 3] },
    Algebraic { modulus: UniPoly<Rat>, coords: [UniPoly<Rat>; 3] },
}

impl Coords {
    pub fn as_rational(&self) -> Option<&[Rat; 3]> {
        match self {
            Coords::Rational { coords } => Some(coords),
            Coords::Algebraic { .. } => None,
        }
    }

    pub(crate) fn of_rat(p: &[Rat; 3]) -> Coords {
        Coords::Rational { coords: normalize_point(p) }
    }

    pub(crate) fn of_ext(p: &[Ext; 3]) -> Coords {
        let p = normalize_point(p);
        if let [Some(a), Some(b), Some(c)] = [p[0].to_rat(), p[1].to_rat(), p[2].to_rat()] {
            return Coords::Rational { coords: [a, b, c] };
        }
        Coords::Algebraic { modulus: p[0].field().modulus().clone(), coords: p.map(|x| x.rep().clone()) }
    }
}

impl fmt::Display for Coords {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coords::Rational { coords: c } => write!(f, "({} : {} : {})", c[0], c[1], c[2]),
            Coords::Algebraic { modulus, coords: c } => {
                let w = |p: &UniPoly<Rat>| p.to_string().replace('t', "w");
                write!(f, "({} : {} : {}), {} = 0", w(&c[0]), w(&c[1]), w(&c[2]), w(modulus))
            }
        }
    }
}

/// Conjugate branches of one component at a singular center.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BranchRecord {
    pub component: usize,
    pub e: u32,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub beta: Option<u32>,
    pub count: usize,
    /// Tangent line, when defined over the field of the center.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub tangent: Option<Coords>,
}

/// A singular point of the union, standing for `conjugates` Galois
/// conjugate points with identical data.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SingRecord {
    pub center: Coords,
    pub conjugates: usize,
    pub tag: SingTypeTag,
    pub delta: u64,
    pub multiplicity: usize,
    pub component_set: Vec<usize>,
    pub branches: Vec<BranchRecord>,
    /// `(component, delta)` for each component through the point.
    pub component_deltas: Vec<(usize, u64)>,
    /// `(i, j, I_p(C_i, C_j))` for each pair of components through the point.
    pub intersections: Vec<(usize, usize, u64)>,
}

impl SingRecord {
    pub fn component_delta(&self, c: usize) -> u64 {
        self.component_deltas.iter().find(|(i, _)| *i == c).map_or(0, |(_, d)| *d)
    }

    pub fn intersection(&self, a: usize, b: usize) -> u64 {
        let (a, b) = (a.min(b), a.max(b));
        self.intersections.iter().find(|(i, j, _)| (*i, *j) == (a, b)).map_or(0, |(_, _, k)| *k)
    }
}

/// `count` singular points of type `tag` lying on exactly the components `components`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DescriptorEntry {
    pub tag: SingTypeTag,
    pub components: Vec<usize>,
    pub count: usize,
}

/// The multiset of singularity types with their component subsets.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Descriptor(pub Vec<DescriptorEntry>);

impl Descriptor {
    pub fn from_records(records: &[SingRecord]) -> Descriptor {
        let mut m: BTreeMap<(SingTypeTag, Vec<usize>), usize> = BTreeMap::new();
        for r in records {
            *m.entry((r.tag, r.component_set.clone())).or_default() += r.conjugates;
        }
        Descriptor(m.into_iter().map(|((tag, components), count)| DescriptorEntry { tag, components, count }).collect())
    }

    /// Counts per tag, forgetting component subsets.
    pub fn tag_counts(&self) -> BTreeMap<SingTypeTag, usize> {
        let mut m = BTreeMap::new();
        for e in &self.0 {
            *m.entry(e.tag).or_default() += e.count;
        }
        m
    }

    pub fn count(&self, tag: SingTypeTag) -> usize {
        self.tag_counts().get(&tag).copied().unwrap_or(0)
    }

    pub fn count_on(&self, tag: SingTypeTag, components: &[usize]) -> usize {
        self.0.iter().filter(|e| e.tag == tag && e.components == components).map(|e| e.count).sum()
    }

    pub fn total_points(&self) -> usize {
        self.0.iter().map(|e| e.count).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for Descriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let counts = self.tag_counts();
        if counts.is_empty() {
            return write!(f, "smooth");
        }
        let parts: Vec<String> = counts
            .iter()
            .map(|(t, n)| if *n == 1 { t.to_string() } else { format!("{n} {t}") })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AuditReport {
    pub degrees: Vec<u32>,
    pub genera: Vec<i64>,
    pub records: Vec<SingRecord>,
    pub descriptor: Descriptor,
}

impl AuditReport {
    pub fn total_delta(&self) -> u64 {
        self.records.iter().map(|r| r.delta * r.conjugates as u64).sum()
    }
}

/// Audit of a union of rational curves.
pub fn singularity_audit(components: &[ParamCurve]) -> Result<AuditReport> {
    let comps: Vec<Component> = components.iter().cloned().map(Component::Param).collect();
    audit_components(&comps)
}

/// Audit of a union of parametrized and implicit components.
pub fn audit_components(components: &[Component]) -> Result<AuditReport> {
    if components.is_empty() {
        return Err(Error::ZeroInput("component list"));
    }
    let forms: Vec<TernForm<Rat>> = components.iter().map(Component::form).collect();
    for i in 0..forms.len() {
        for j in 0..i {
            if forms[i] == forms[j] {
                return Err(Error::InfiniteIntersection(format!("components {j} and {i} coincide")));
            }
        }
    }
    // Lines are parametrized; elimination is only needed for the other implicit components.
    let params: Vec<Option<ParamCurve>> = components
        .iter()
        .zip(&forms)
        .map(|(c, f)| c.as_param().cloned().or_else(|| (f.degree() == 1).then(|| line_param(f))))
        .collect();
    let refs: Vec<Option<&ParamCurve>> = params.iter().map(Option::as_ref).collect();
    let rest: Vec<TernForm<Rat>> = forms.iter().zip(&params).filter(|(_, p)| p.is_none()).map(|(f, _)| f.clone()).collect();
    let mut centers = param_centers(&refs, &forms)?;
    if !rest.is_empty() {
        centers.extend(implicit_centers(&rest)?);
        centers = dedup_centers(centers)?;
    }
    let mut records = Vec::new();
    for c in centers {
        let rec = match c {
            Center::Rational(p) => local_record(&Rationals, &p, &forms, 1, Coords::of_rat)?,
            Center::Algebraic(k, p, n) => local_record(&k, &p, &forms, n, Coords::of_ext)?,
        };
        records.extend(rec);
    }
    records.sort_by(|a, b| (a.tag, &a.component_set, a.center.to_string()).cmp(&(b.tag, &b.component_set, b.center.to_string())));
    let degrees: Vec<u32> = forms.iter().map(|f| f.degree()).collect();
    let mut genera = Vec::with_capacity(forms.len());
    for (c, comp) in components.iter().enumerate() {
        let d = degrees[c] as i64;
        let dsum: u64 = records.iter().map(|r| r.component_delta(c) * r.conjugates as u64).sum();
        let g = (d - 1) * (d - 2) / 2 - dsum as i64;
        if g < 0 || (comp.as_param().is_some() && g != 0) {
            return Err(Error::GenusMismatch { component: c, genus: g });
        }
        genera.push(g);
    }
    for a in 0..forms.len() {
        for b in a + 1..forms.len() {
            let total: u64 = records.iter().map(|r| r.intersection(a, b) * r.conjugates as u64).sum();
            let want = degrees[a] as u64 * degrees[b] as u64;
            if total != want {
                return Err(Error::CertificationFailure(format!(
                    "components {a} and {b} meet with total multiplicity {total}, expected {want}"
                )));
            }
        }
    }
    let descriptor = Descriptor::from_records(&records);
    Ok(AuditReport { degrees, genera, records, descriptor })
}

/// `t -> p + t q` for two points `p, q` spanning the line.
fn line_param(f: &TernForm<Rat>) -> ParamCurve {
    let l = f.line_coeffs(&Rat::zero());
    let k = (0..3).find(|&i| !l[i].is_zero()).expect("nonzero line");
    let (a, b) = other_two(k);
    let mut p = [Rat::zero(), Rat::zero(), Rat::zero()];
    let mut q = p.clone();
    p[a] = l[k].clone();
    p[k] = -l[a].clone();
    q[b] = l[k].clone();
    q[k] = -l[b].clone();
    let coords = [0, 1, 2].map(|i| UniPoly::new(vec![p[i].clone(), q[i].clone()]));
    ParamCurve::new(coords).expect("two independent points span the line")
}

pub(crate) enum Center {
    Rational([Rat; 3]),
    Algebraic(NumberField, [Ext; 3], usize),
}

fn monic_factors(p: &UniPoly<Rat>) -> Vec<UniPoly<Rat>> {
    factor_q(p).into_iter().map(|(h, _)| h.monic()).collect()
}

fn push_rational(out: &mut Vec<[Rat; 3]>, p: [Rat; 3]) {
    let p = normalize_point(&p);
    if !out.contains(&p) {
        out.push(p);
    }
}

/// Centers of a union of rational curves: images of `t = inf`, of the common
/// roots of the gradient pulled back along each parametrization, and of the
/// roots of the pullbacks of the other components.
fn param_centers(curves: &[Option<&ParamCurve>], forms: &[TernForm<Rat>]) -> Result<Vec<Center>> {
    let n = curves.len();
    let mut rational: Vec<[Rat; 3]> = Vec::new();
    let mut pools: Vec<Vec<UniPoly<Rat>>> = Vec::with_capacity(n);
    for (c, curve) in curves.iter().enumerate() {
        let Some(curve) = curve else {
            pools.push(Vec::new());
            continue;
        };
        push_rational(&mut rational, curve.infinity_point());
        let mut pool: Vec<UniPoly<Rat>> = Vec::new();
        let grad = forms[c].gradient().map(|g| curve.pullback(&g));
        let s = poly_gcd(&poly_gcd(&grad[0], &grad[1]), &grad[2]);
        if s.is_zero() {
            return Err(Error::DegenerateInput(format!("component {c} is not reduced")));
        }
        let mut polys = vec![s];
        for (o, form) in forms.iter().enumerate() {
            if o == c {
                continue;
            }
            let q = curve.pullback(form);
            if q.is_zero() {
                return Err(Error::InfiniteIntersection(format!("components {c} and {o} share a component")));
            }
            polys.push(q);
        }
        for p in polys {
            if p.deg() <= 0 {
                continue;
            }
            for h in monic_factors(&p) {
                if !pool.contains(&h) {
                    pool.push(h);
                }
            }
        }
        pools.push(pool);
    }
    let mut algebraic = Vec::new();
    let mut consumed: Vec<Vec<bool>> = pools.iter().map(|p| vec![false; p.len()]).collect();
    for c in 0..n {
        let Some(cc) = curves[c] else { continue };
        for i in 0..pools[c].len() {
            if consumed[c][i] {
                continue;
            }
            let h = pools[c][i].clone();
            if h.deg() == 1 {
                let t0 = -h.coeffs()[0].clone();
                push_rational(&mut rational, cc.coords().clone().map(|z| z.eval(&t0)));
                continue;
            }
            let k = NumberField::new(h.clone(), "w")?;
            let theta = k.gen();
            let p = normalize_point(&cc.coords().clone().map(|z| z.map(|x| k.from_rat(x)).eval(&theta)));
            if let [Some(a), Some(b), Some(d)] = [p[0].to_rat(), p[1].to_rat(), p[2].to_rat()] {
                push_rational(&mut rational, [a, b, d]);
                continue;
            }
            let mut own = 1;
            for o in 0..n {
                if !forms[o].map(|x| k.from_rat(x)).eval(&p).is_zero() {
                    continue;
                }
                let Some(co) = curves[o] else { continue };
                let pc = p.clone().map(UniPoly::constant);
                let lifted = co.coords().clone().map(|z| z.map(|x| k.from_rat(x)));
                let cr = cross_poly(&lifted, &pc);
                let g = cr[0].gcd(&cr[1]).gcd(&cr[2]);
                if o == c {
                    own = g.gcd(&h.map(|x| k.from_rat(x))).deg().max(1) as usize;
                }
                let norm = norm_poly(&k, &g);
                for (j, h2) in pools[o].iter().enumerate() {
                    if poly_gcd(h2, &norm).deg() > 0 {
                        consumed[o][j] = true;
                    }
                }
            }
            consumed[c][i] = true;
            let deg = h.deg() as usize;
            algebraic.push(Center::Algebraic(k, p, deg / own));
        }
    }
    let mut out: Vec<Center> = rational.into_iter().map(Center::Rational).collect();
    out.extend(algebraic);
    Ok(out)
}

/// Merges centers found twice, comparing algebraic points up to conjugation.
fn dedup_centers(centers: Vec<Center>) -> Result<Vec<Center>> {
    let mut rational: Vec<[Rat; 3]> = Vec::new();
    let mut algebraic: Vec<Center> = Vec::new();
    for c in centers {
        match c {
            Center::Rational(p) => push_rational(&mut rational, p),
            Center::Algebraic(k, p, n) => {
                let mut seen = false;
                for a in &algebraic {
                    if let Center::Algebraic(k2, p2, n2) = a {
                        if *n2 == n && k2.degree() == k.degree() && conjugate_points(&k, &p, k2, p2) {
                            seen = true;
                            break;
                        }
                    }
                }
                if !seen {
                    algebraic.push(Center::Algebraic(k, p, n));
                }
            }
        }
    }
    let mut out: Vec<Center> = rational.into_iter().map(Center::Rational).collect();
    out.extend(algebraic);
    Ok(out)
}

/// Whether `q` over `k2` is a Galois conjugate of `p` over `k1`: some root of
/// the modulus of `k1` in `k2` carries `p` to `q`.
fn conjugate_points(k1: &NumberField, p: &[Ext; 3], k2: &NumberField, q: &[Ext; 3]) -> bool {
    let p = normalize_point(p);
    let q = normalize_point(q);
    let h = k1.modulus().map(|c| k2.from_rat(c));
    factor_over(k2, &h).into_iter().filter(|(f, _)| f.deg() == 1).any(|(f, _)| {
        let r = f.coeffs()[0].negated();
        let image: [Ext; 3] = p.clone().map(|x| x.rep().map(|c| k2.from_rat(c)).eval(&r));
        image == q
    })
}

fn cross_poly<E: Field>(a: &[UniPoly<E>; 3], b: &[UniPoly<E>; 3]) -> [UniPoly<E>; 3] {
    super::param::cross(a, b)
}

/// `f(x0, y)` as a polynomial in `y`.
fn at_x<E: Field>(f: &BiPoly<Rat>, x0: &E) -> UniPoly<E> {
    UniPoly::new(f.rows().iter().map(|r| r.map(|c| x0.embed(c)).eval(x0)).collect())
}

/// Centers of an arbitrary union, found from the reduced equation by
/// elimination in a sheared chart.
pub(crate) fn implicit_centers(forms: &[TernForm<Rat>]) -> Result<Vec<Center>> {
    let f = forms.iter().skip(1).fold(forms[0].clone(), |acc, g| acc.mul(g));
    let d = f.degree() as usize;
    budget::check("locating singular points", d * d.saturating_sub(1))?;
    // Move the projection center (0 : 1 : 0) off the curve: z1 -> z1 + s z2, z3 -> z3 + r z2.
    let small = |k: i64| if k % 2 == 1 { (k + 1) / 2 } else { -k / 2 };
    let (s, r) = (0..=2 * d as i64 + 2)
        .flat_map(|r| (0..=2 * d as i64 + 2).map(move |s| (small(s), small(r))))
        .find(|&(s, r)| !f.eval(&[Rat::from_int(s), Rat::one(), Rat::from_int(r)]).is_zero())
        .expect("a curve of degree d misses some point of a (2d+3)^2 grid");
    let (sr, rr) = (Rat::from_int(s), Rat::from_int(r));
    let (o, z) = (Rat::one(), Rat::zero());
    let shear = [[o.clone(), sr.clone(), z.clone()], [z.clone(), o.clone(), z.clone()], [z.clone(), rr.clone(), o.clone()]];
    let ft = f.substitute_linear(&shear);
    let back_rat = |p: [Rat; 3]| [&p[0] + &(&sr * &p[1]), p[1].clone(), &p[2] + &(&rr * &p[1])];
    let back_ext = |p: [Ext; 3]| [p[0].plus(&p[1].scale(&sr)), p[1].clone(), p[2].plus(&p[1].scale(&rr))];

    let mut rational: Vec<[Rat; 3]> = Vec::new();
    let mut out = Vec::new();
    let aff = ft.dehomogenize(2);
    let (fx, fy) = (aff.partial_x(), aff.partial_y());
    let r1 = resultant_y(&aff, &fy);
    if r1.is_zero() {
        return Err(Error::DegenerateInput("the curve is not reduced".into()));
    }
    let r2 = resultant_y(&aff, &fx);
    let g = if r2.is_zero() { r1 } else { poly_gcd(&r1, &r2) };
    if g.deg() > 0 {
        for h in monic_factors(&g) {
            if h.deg() == 1 {
                let x0 = -h.coeffs()[0].clone();
                let yg = at_x(&aff, &x0).gcd(&at_x(&fx, &x0)).gcd(&at_x(&fy, &x0));
                if yg.deg() <= 0 {
                    continue;
                }
                for q in monic_factors(&yg) {
                    if q.deg() == 1 {
                        push_rational(&mut rational, back_rat([x0.clone(), -q.coeffs()[0].clone(), Rat::one()]));
                    } else {
                        let k = NumberField::new(q.clone(), "w")?;
                        let p = [k.from_rat(&x0), k.gen(), k.one()];
                        out.push(Center::Algebraic(k, back_ext(p), q.deg() as usize));
                    }
                }
                continue;
            }
            let k = NumberField::new(h.clone(), "w")?;
            let theta = k.gen();
            let yg = at_x(&aff, &theta).gcd(&at_x(&fx, &theta)).gcd(&at_x(&fy, &theta));
            if yg.deg() <= 0 {
                continue;
            }
            for (q, _) in factor_over(&k, &yg) {
                if q.deg() != 1 {
                    return Err(Error::UnsupportedGerm(format!(
                        "singular points over {h} need a further extension {q}"
                    )));
                }
                let p = [theta.clone(), q.coeffs()[0].negated(), k.one()];
                out.push(Center::Algebraic(k.clone(), back_ext(p), h.deg() as usize));
            }
        }
    }
    // The line z3 = 0: points (u : 1 : 0) and (1 : 0 : 0).
    let grad = ft.gradient();
    let on_line: Vec<UniPoly<Rat>> = grad.iter().map(|g| g.dehomogenize(1).row(0)).collect();
    let gl = poly_gcd(&poly_gcd(&on_line[0], &on_line[1]), &on_line[2]);
    if gl.deg() > 0 {
        for q in monic_factors(&gl) {
            if q.deg() == 1 {
                push_rational(&mut rational, back_rat([-q.coeffs()[0].clone(), Rat::one(), Rat::zero()]));
            } else {
                let k = NumberField::new(q.clone(), "w")?;
                let p = [k.gen(), k.one(), k.zero()];
                out.push(Center::Algebraic(k, back_ext(p), q.deg() as usize));
            }
        }
    }
    let e1 = [Rat::one(), Rat::zero(), Rat::zero()];
    if grad.iter().all(|g| g.eval(&e1).is_zero()) {
        push_rational(&mut rational, back_rat(e1));
    }
    let mut all: Vec<Center> = rational.into_iter().map(Center::Rational).collect();
    all.extend(out);
    Ok(all)
}

/// Local analysis of the union at `p`; `None` when the union is smooth there.
fn local_record<S: Scalars>(
    s: &S,
    p: &[S::E; 3],
    forms: &[TernForm<Rat>],
    conjugates: usize,
    coords: impl Fn(&[S::E; 3]) -> Coords,
) -> Result<Option<SingRecord>> {
    let p = normalize_point(p);
    let k = (0..3).rev().find(|&i| !p[i].is_zero()).expect("nonzero point");
    let (a, b) = other_two(k);
    let lifted: Vec<TernForm<S::E>> = forms.iter().map(|f| f.map(|c| s.from_rat(c))).collect();
    let comps: Vec<usize> = (0..forms.len()).filter(|&c| lifted[c].eval(&p).is_zero()).collect();
    if comps.is_empty() {
        return Ok(None);
    }
    let germs: Vec<BiPoly<S::E>> = comps.iter().map(|&c| lifted[c].dehomogenize(k).shift(&p[a], &p[b])).collect();
    let union = germs.iter().skip(1).fold(germs[0].clone(), |acc, g| acc.mul(g));
    let order = order_at_origin(&union).unwrap_or(0);
    if order <= 1 {
        return Ok(None);
    }
    let ks = transverse_shear(&union).ok_or_else(|| Error::UnsupportedGerm("no transverse direction".into()))?;
    let kse = s.from_rat(&Rat::from_int(ks));
    let germs: Vec<BiPoly<S::E>> = germs.iter().map(|g| g.shear_x(&kse)).collect();
    let union = union.shear_x(&kse);
    let ug = analyze(s, &union)?;
    let bs = ug.branch_set();
    let tag = classify_germ(&bs).map_err(|e| match e {
        Error::UnsupportedGerm(m) => Error::UnsupportedGerm(format!("at {}: {m}", coords(&p))),
        e => e,
    })?;
    let delta = bs.delta();
    if tag.delta() != delta {
        return Err(Error::CertificationFailure(format!("tag {tag} has delta {} but the germ has {delta}", tag.delta())));
    }
    let mut branches = Vec::new();
    let mut component_deltas = Vec::new();
    let mut cg = Vec::new();
    for (i, &c) in comps.iter().enumerate() {
        let g = analyze(s, &germs[i])?;
        component_deltas.push((c, g.delta()));
        for leaf in &g.leaves {
            let tangent = leaf.tangent.as_ref().map(|t| {
                let mut dir = [s.zero(), s.zero(), s.zero()];
                dir[a] = s.one().plus(&kse.times(t));
                dir[b] = t.clone();
                coords(&cross_field(&p, &dir))
            });
            branches.push(BranchRecord { component: c, e: leaf.branch.e, beta: leaf.branch.beta, count: leaf.count, tangent });
        }
        cg.push(g.delta());
    }
    let mut intersections = Vec::new();
    for i in 0..comps.len() {
        for j in i + 1..comps.len() {
            let dij = if comps.len() == 2 { delta } else { analyze(s, &germs[i].mul(&germs[j]))?.delta() };
            intersections.push((comps[i], comps[j], dij - cg[i] - cg[j]));
        }
    }
    Ok(Some(SingRecord {
        center: coords(&p),
        conjugates,
        tag,
        delta,
        multiplicity: order,
        component_set: comps,
        branches,
        component_deltas,
        intersections,
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn curve(c: [&[i64]; 3]) -> ParamCurve {
        ParamCurve::from_ints(c).unwrap()
    }

    fn tag(s: &str) -> SingTypeTag {
        s.parse().unwrap()
    }

    #[test]
    fn cuspidal_and_nodal_cubics() {
        let r = singularity_audit(&[curve([&[0, 0, 0, 1], &[0, 0, 1], &[1]])]).unwrap();
        assert_eq!(r.descriptor.to_string(), "A2");
        assert_eq!(r.genera, vec![0]);
        let r = singularity_audit(&[curve([&[-1, 0, 1], &[0, -1, 0, 1], &[1]])]).unwrap();
        assert_eq!(r.descriptor.to_string(), "A1");
        assert_eq!(r.records[0].center, Coords::Rational { coords: [Rat::zero(), Rat::zero(), Rat::one()] });
        assert_eq!(r.records[0].branches.len(), 2);
    }

    #[test]
    fn node_with_conjugate_preimages() {
        // (t^2 + 1, t(t^2 + 1), 1): the node at the origin has preimages +-i.
        let r = singularity_audit(&[curve([&[1, 0, 1], &[0, 1, 0, 1], &[1]])]).unwrap();
        assert_eq!(r.descriptor.to_string(), "A1");
        assert_eq!(r.records[0].conjugates, 1);
        assert!(r.records[0].branches.iter().all(|b| b.tangent.is_none()));
    }

    #[test]
    fn quartic_with_a6() {
        let r = singularity_audit(&[curve([&[0, 0, 0, 0, 1], &[0, 0, -1, 1], &[1, -2]])]).unwrap();
        assert_eq!(r.descriptor.to_string(), "A6");
        assert_eq!(r.records[0].delta, 3);
    }

    #[test]
    fn tricuspidal_quartic() {
        let f = TernForm::from_ints(
            4,
            &[([2, 2, 0], 1), ([0, 2, 2], 1), ([2, 0, 2], 1), ([2, 1, 1], -2), ([1, 2, 1], -2), ([1, 1, 2], -2)],
        );
        let r = audit_components(&[Component::Implicit(f)]).unwrap();
        assert_eq!(r.genera, vec![0]);
        assert_eq!(r.descriptor.count(tag("A2")), 3);
    }

    #[test]
    fn lines() {
        let l1 = curve([&[0, 1], &[0], &[1]]);
        let l2 = curve([&[0], &[0, 1], &[1]]);
        let r = singularity_audit(&[l1.clone(), l2]).unwrap();
        assert_eq!(r.descriptor.to_string(), "A1");
        assert_eq!(r.descriptor.0[0].components, vec![0, 1]);
        assert_eq!(r.genera, vec![0, 0]);
        assert!(matches!(singularity_audit(&[l1.clone(), l1]), Err(Error::InfiniteIntersection(_))));
    }

    #[test]
    fn cusp_with_lines() {
        let cusp = curve([&[0, 0, 0, 1], &[0, 0, 1], &[1]]);
        // z1 = 0 is the cuspidal tangent; z2 = 0 is transverse.
        let tangent = curve([&[0], &[0, 1], &[1]]);
        let transverse = curve([&[0, 1], &[0], &[1]]);
        let r = singularity_audit(&[cusp.clone(), tangent]).unwrap();
        assert_eq!(r.descriptor.count(tag("T(2,3)^3")), 1);
        let at0 = r.records.iter().find(|x| x.tag == tag("T(2,3)^3")).unwrap();
        assert_eq!(at0.intersection(0, 1), 3);
        let r = singularity_audit(&[cusp, transverse]).unwrap();
        assert_eq!(r.descriptor.count(tag("T(2,3)^2")), 1);
    }

    #[test]
    fn conjugate_nodes_over_quadratic_field() {
        // x^2 + y^2 = 3 z^2 and x^2 = y z meet in four irrational points.
        let c1 = Component::Implicit(TernForm::from_ints(2, &[([2, 0, 0], 1), ([0, 2, 0], 1), ([0, 0, 2], -3)]));
        let c2 = Component::Implicit(TernForm::from_ints(2, &[([2, 0, 0], 1), ([0, 1, 1], -1)]));
        let r = audit_components(&[c1, c2]).unwrap();
        assert_eq!(r.descriptor.count(tag("A1")), 4);
        assert!(r.records.iter().any(|x| matches!(x.center, Coords::Algebraic { .. })));
        assert_eq!(r.genera, vec![0, 0]);
    }

    #[test]
    fn implicit_and_param_paths_agree() {
        let p = curve([&[0, 0, 0, 0, 1], &[0, 0, -1, 1], &[1, -2]]);
        let a = singularity_audit(std::slice::from_ref(&p)).unwrap();
        let b = audit_components(&[Component::Implicit(implicitize(&p))]).unwrap();
        assert_eq!(a.descriptor, b.descriptor);
    }

    #[test]
    fn descriptor_display_groups_tags() {
        let d = Descriptor(vec![
            DescriptorEntry { tag: tag("A3"), components: vec![0], count: 1 },
            DescriptorEntry { tag: tag("T(3,5)"), components: vec![0], count: 2 },
        ]);
        assert_eq!(d.to_string(), "A3 + 2 T(3,5)");
    }
}
