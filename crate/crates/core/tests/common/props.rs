//! Property suites shared by the `properties` and `acceptance` targets.

#![allow(dead_code)]

use proptest::prelude::*;
use proptest::test_runner::{Config, TestCaseError, TestRunner};

use rigidcurve::curvelocal::{audit_components, flex_count, Component, ParamCurve};
use rigidcurve::exactalg::{Rat, UniPoly};
use rigidcurve::families::{catalog_member, rigit_equivalent, rigit_pairs};
use rigidcurve::projgeom::{implicitize, ProjMap};
use rigidcurve::rigidity::{
    curves_equal, invariant_values, rigidity_report, separating_invariant, verify_witness, Separation, Witness,
};
use rigidcurve::wire::{CurveFile, Provenance};

fn runner(cases: u32) -> TestRunner {
    TestRunner::new(Config { cases, failure_persistence: None, ..Config::default() })
}

fn outcome<T: std::fmt::Debug>(r: Result<(), proptest::test_runner::TestError<T>>) -> Result<(), String> {
    r.map_err(|e| e.to_string())
}

pub fn poly(max_deg: usize, range: i64) -> impl Strategy<Value = UniPoly<Rat>> {
    prop::collection::vec(-range..=range, 1..=max_deg + 1).prop_map(|c| UniPoly::from_ints(&c))
}

pub fn rat() -> impl Strategy<Value = Rat> {
    (-20i64..=20, 1i64..=9).prop_map(|(p, q)| Rat::new(p, q))
}

pub fn nonzero_rat() -> impl Strategy<Value = Rat> {
    rat().prop_filter("nonzero", |r| !r.is_zero())
}

pub fn proj_map() -> impl Strategy<Value = ProjMap> {
    prop::array::uniform3(prop::array::uniform3(-2i64..=2)).prop_filter_map("singular", |m| ProjMap::from_ints(m).ok())
}

/// Rational cubics and quartics with random lower-order terms.
pub fn rational_curve() -> impl Strategy<Value = ParamCurve> {
    (3usize..=4, prop::collection::vec(-3i64..=3, 3), -3i64..=3).prop_filter_map("degenerate", |(d, c, s)| {
        let mut x = vec![0i64; d + 1];
        x[d] = 1;
        x[2] = c[0];
        let mut y = vec![0i64; d + 1];
        y[d - 1] = 1;
        y[3.min(d - 1)] += c[1];
        let z = vec![1, s, c[2]];
        ParamCurve::from_ints([&x, &y, &z]).ok()
    })
}

/// Catalog members of degree 4 that stay cheap under random maps.
pub fn small_member() -> impl Strategy<Value = Vec<Component>> {
    prop::sample::select(vec!["I3", "I5", "I15", "I16", "I23", "I24", "II2"]).prop_map(|id| catalog_member(id, None).unwrap())
}

pub fn algebra(cases: u32) -> Result<(), String> {
    let mut r = runner(cases);
    outcome(r.run(&(poly(4, 6), poly(4, 6), poly(3, 6)), |(a, b, c)| {
        prop_assume!(!c.is_zero() && !a.is_zero() && !b.is_zero());
        let g = a.gcd(&b);
        prop_assert!(g.divides(&a) && g.divides(&b));
        let ac = &a * &c;
        let bc = &b * &c;
        let gc = ac.gcd(&bc);
        prop_assert!(c.divides(&gc));
        prop_assert_eq!(gc.deg(), g.deg() + c.deg());
        prop_assert_eq!(a.resultant(&b).is_zero(), g.deg() > 0);
        prop_assert_eq!((&a * &b).resultant(&c), a.resultant(&c) * b.resultant(&c));
        Ok(())
    }))?;
    outcome(r.run(&(poly(3, 5), rat(), 0usize..4), |(p, x, k)| {
        prop_assume!(!p.is_zero());
        let lin = UniPoly::new(vec![-x.clone(), Rat::one()]);
        let q = &p * &lin.pow(k as u32);
        prop_assert_eq!(q.root_multiplicity(&x), p.root_multiplicity(&x) + k);
        let s = q.squarefree_part();
        prop_assert!(s.is_squarefree() && s.divides(&q));
        prop_assert!(q.divides(&s.pow(q.deg().max(1) as u32)));
        Ok(())
    }))
}

pub fn genus_delta(cases: u32) -> Result<(), String> {
    outcome(runner(cases).run(&rational_curve(), |c| {
        let d = c.degree() as u64;
        let a = audit_components(&[Component::Param(c.clone())]).map_err(|e| TestCaseError::fail(e.to_string()))?;
        prop_assert_eq!(a.genera.clone(), vec![0]);
        prop_assert_eq!(a.total_delta(), (d - 1) * (d - 2) / 2);
        let f = audit_components(&[Component::Implicit(implicitize(&c))]).map_err(|e| TestCaseError::fail(e.to_string()))?;
        prop_assert_eq!(f.descriptor, a.descriptor);
        Ok(())
    }))
}

pub fn equivariance(cases: u32) -> Result<(), String> {
    outcome(runner(cases).run(&(small_member(), proj_map()), |(c, h)| {
        let hc: Vec<Component> = c.iter().map(|x| h.apply(x).unwrap()).collect();
        let (a, b) = (audit_components(&c).unwrap(), audit_components(&hc).unwrap());
        prop_assert_eq!(&a.descriptor, &b.descriptor);
        prop_assert_eq!(&a.genera, &b.genera);
        prop_assert_eq!(invariant_values(&c), invariant_values(&hc));
        for (x, y) in c.iter().zip(&hc) {
            if let (Some(p), Some(q)) = (x.as_param(), y.as_param()) {
                prop_assert_eq!(flex_count(p), flex_count(q));
            }
        }
        Ok(())
    }))
}

pub fn witness_separation(cases: u32) -> Result<(), String> {
    let mut r = runner(cases);
    outcome(r.run(&(small_member(), proj_map()), |(c, h)| {
        let hc: Vec<Component> = c.iter().map(|x| h.apply(x).unwrap()).collect();
        let w = Witness::new(h.clone(), c.clone(), hc.clone());
        prop_assert!(verify_witness(&w).unwrap());
        prop_assert_eq!(separating_invariant(&c, &hc), Separation::NotSeparated);
        let back = Witness::new(h.inverse(), hc.clone(), c.clone());
        prop_assert!(verify_witness(&back).unwrap());
        Ok(())
    }))?;
    // In the two-orbit family, a separated pair admits no witness at all.
    outcome(r.run(&(rat(), nonzero_rat(), proj_map()), |(a, b, h)| {
        let ca = catalog_member("II2", Some(&a)).unwrap();
        let cb = catalog_member("II2", Some(&b)).unwrap();
        if let Separation::Separated(_) = separating_invariant(&ca, &cb) {
            prop_assert!(a.is_zero());
            prop_assert!(!verify_witness(&Witness::new(h, ca, cb)).unwrap());
        }
        Ok(())
    }))
}

pub fn equality_is_an_equivalence(cases: u32) -> Result<(), String> {
    outcome(runner(cases).run(&(small_member(), small_member(), nonzero_rat()), |(a, b, s)| {
        prop_assert!(curves_equal(&a, &a));
        prop_assert_eq!(curves_equal(&a, &b), curves_equal(&b, &a));
        let mut rev = a.clone();
        rev.reverse();
        prop_assert!(curves_equal(&a, &rev));
        let scaled: Vec<Component> = a.iter().map(|c| Component::Implicit(c.form().scale(&s))).collect();
        prop_assert!(curves_equal(&a, &scaled));
        if curves_equal(&a, &b) {
            prop_assert!(curves_equal(&scaled, &b));
        }
        Ok(())
    }))
}

pub fn report_monotone(cases: u32) -> Result<(), String> {
    let ps = prop::collection::vec(nonzero_rat(), 1..4);
    outcome(runner(cases).run(&(ps, prop::collection::vec(any::<bool>(), 3)), |(params, keep)| {
        let mut instances = vec![catalog_member("II2", Some(&Rat::zero())).unwrap()];
        instances.extend(params.iter().map(|a| catalog_member("II2", Some(a)).unwrap()));
        let target = catalog_member("II2", Some(&Rat::one())).unwrap();
        instances.push(target.clone());
        let all: Vec<Witness> = params
            .iter()
            .map(|a| {
                let h = ProjMap::diagonal([a.pow(4), a.pow(3), Rat::one()]).unwrap();
                Witness::new(h, catalog_member("II2", Some(a)).unwrap(), target.clone())
            })
            .collect();
        let some: Vec<Witness> = all.iter().zip(keep.iter().cycle()).filter(|(_, k)| **k).map(|(w, _)| w.clone()).collect();
        let fewer = rigidity_report(&instances, &some);
        let more = rigidity_report(&instances, &all);
        prop_assert!(more.classes.len() <= fewer.classes.len());
        prop_assert!(more.undecided <= fewer.undecided);
        prop_assert_eq!(more.classes.len(), 2);
        prop_assert_eq!(more.undecided, 0);
        prop_assert_eq!(more.k_lower_bound, 2);
        Ok(())
    }))
}

pub fn curve_file_round_trip(cases: u32) -> Result<(), String> {
    outcome(runner(cases).run(&(small_member(), proj_map()), |(c, h)| {
        let hc: Vec<Component> = c.iter().map(|x| h.apply(x).unwrap()).collect();
        let file = CurveFile::new(hc, None, Provenance { family: "test".into(), params: Default::default() });
        let text = file.to_json();
        let back = CurveFile::from_json(&text).map_err(|e| TestCaseError::fail(e.to_string()))?;
        prop_assert_eq!(back.to_json(), text);
        prop_assert!(curves_equal(&back.curve(), &file.curve()));
        Ok(())
    }))
}

pub fn rigit_relation(ns: &[u64]) -> Result<(), String> {
    for &n in ns {
        let pairs = rigit_pairs(n);
        let eq = |p, q| rigit_equivalent(n, p, q).map_err(|e| e.to_string());
        for &p in &pairs {
            if !eq(p, p)? {
                return Err(format!("n = {n}: {p:?} is not related to itself"));
            }
            for &q in &pairs {
                if eq(p, q)? != eq(q, p)? {
                    return Err(format!("n = {n}: not symmetric at {p:?}, {q:?}"));
                }
                for &s in &pairs {
                    if eq(p, q)? && eq(q, s)? && !eq(p, s)? {
                        return Err(format!("n = {n}: not transitive at {p:?}, {q:?}, {s:?}"));
                    }
                }
            }
        }
    }
    Ok(())
}
