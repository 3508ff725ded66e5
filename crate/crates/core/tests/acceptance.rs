//! One line per acceptance criterion, written to stderr past the test harness capture.

mod common;

use std::io::Write;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use common::props;
use rigidcurve::curvelocal::{audit_components, Component, Decoration, ParamCurve, SingTypeTag};
use rigidcurve::exactalg::{Rat, UniPoly};
use rigidcurve::families::{
    add1_a_index, add1_perturbations, add2_intersection, add2_witness, add3_intersection, add3_witness, ak_poly,
    audit_add2, audit_add3, build_add1, build_add2, build_add3, catalog_member, catalog_small_degree,
    enumerate_rigid_candidates, fermat_dual_family, rigit_classes, solve_toe1, tricuspidal_quartic, vn_step,
    AkSequence, FamilyDescriptor, RigidityClass, CATALOG_IDS,
};
use rigidcurve::projgeom::{biduality_holds, class_of_curve, dual_curve, dual_param};
use rigidcurve::rigidity::{verify_witness, Witness};
use rigidcurve::Error;

type Check = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn e2s(e: Error) -> String {
    e.to_string()
}

fn q(n: i64) -> Rat {
    Rat::from_int(n)
}

fn toe1_sweep() -> Check {
    let s = solve_toe1(2).map_err(e2s)?;
    ensure(s.tau == Rat::new(-3, 4), || format!("tau = {}", s.tau))?;
    ensure(s.a == [Rat::new(9, 8), Rat::new(-27, 256)], || format!("a = {:?}", s.a))?;
    let mut seen = Vec::new();
    for n in 2..=6usize {
        let s = solve_toe1(n).map_err(e2s)?;
        ensure(!s.a[n - 1].is_zero(), || format!("n = {n}: a_n = 0"))?;
        let mut c = vec![Rat::one()];
        c.extend(s.a.iter().cloned());
        let p = UniPoly::new(c);
        let delta = &(&p * &p) - &UniPoly::from_ints(&[0, 4]);
        let root = (&s.tau * &s.tau).inv();
        ensure(delta.root_multiplicity(&root) == n + 1, || format!("n = {n}: multiplicity of 1 + t x"))?;
        let lin = UniPoly::new(vec![-root.clone(), Rat::one()]);
        let cof = delta.exact_div(&lin.pow(n as u32 + 1)).ok_or("division")?;
        ensure(cof.is_squarefree(), || format!("n = {n}: cofactor not square-free"))?;
        let (k, d) = (n as u32, &s.audit.descriptor);
        let shape = if n == 2 {
            d.count(SingTypeTag::a(2)) == 3
        } else {
            d.count(SingTypeTag::a(k)) == 1 && d.count(SingTypeTag::tmn(k, 2 * k - 1)) == 2
        };
        ensure(shape && d.total_points() == 3, || format!("n = {n}: audit {d}"))?;
        ensure(s.audit.genera == [(n / 2) as i64 - 1], || format!("n = {n}: genera {:?}", s.audit.genera))?;
        seen.push(format!("n={n}: {d}"));
    }
    Ok(format!("tau=-3/4 a1=9/8 a2=-27/256; {}", seen.join("; ")))
}

fn recurrence_suite() -> Check {
    ensure(AkSequence::new(50).verify(), || "A_k recurrence fails below 50".into())?;
    let mut drops = 0;
    for n in 2..=6usize {
        let c = build_add1(n).map_err(e2s)?;
        let k = n as u32;
        let d = &c.audit.descriptor;
        let want = [
            SingTypeTag::decorated(2 * k - 1, 2 * k, Decoration::UpperN),
            SingTypeTag::a(1),
            SingTypeTag::a(4 * k - 2),
        ];
        ensure(want.iter().all(|&t| d.count(t) == 1) && d.total_points() == 3, || format!("add1 n = {n}: {d}"))?;
        let base = add1_a_index(&ak_poly(2 * n - 3)).map_err(e2s)?;
        ensure(base == 4 * k - 2, || format!("n = {n}: unperturbed index {base}"))?;
        for ((i, s), idx) in add1_perturbations(n).map_err(e2s)? {
            ensure(idx < base, || format!("n = {n}: perturbing t^{i} by {s} keeps A_{idx}"))?;
            drops += 1;
        }
    }
    Ok(format!("A_k exact for k <= 50; add1 n = 2..6 audited; {drops} perturbations all drop the index"))
}

fn dichotomies() -> Check {
    let samples = [q(2), q(-1), Rat::new(1, 3)];
    for n in 2..=5usize {
        let k = n as u64;
        ensure(add2_intersection(n, &q(0)).map_err(e2s)? == 2 * k + 1, || format!("add2 n = {n}, a = 0"))?;
        audit_add2(n, &q(0)).map_err(e2s)?;
        let c1 = build_add2(n, &q(1)).map_err(e2s)?;
        for a in &samples {
            ensure(add2_intersection(n, a).map_err(e2s)? == 2 * k, || format!("add2 n = {n}, a = {a}"))?;
            audit_add2(n, a).map_err(e2s)?;
            let w = Witness::new(add2_witness(n, a).map_err(e2s)?, vec![Component::Param(build_add2(n, a).map_err(e2s)?)], vec![
                Component::Param(c1.clone()),
            ]);
            ensure(verify_witness(&w).map_err(e2s)?, || format!("add2 witness n = {n}, a = {a}"))?;
        }
    }
    for n in 3..=5usize {
        let k = n as u64;
        ensure(add3_intersection(n, &q(0)).map_err(e2s)? == 4 * k, || format!("add3 n = {n}, a = 0"))?;
        audit_add3(n, &q(0)).map_err(e2s)?;
        let c1 = build_add3(n, &q(1)).map_err(e2s)?;
        for a in &samples {
            ensure(add3_intersection(n, a).map_err(e2s)? == 4 * k - 2, || format!("add3 n = {n}, a = {a}"))?;
            audit_add3(n, a).map_err(e2s)?;
            let w = Witness::new(add3_witness(n, a).map_err(e2s)?, vec![Component::Param(build_add3(n, a).map_err(e2s)?)], vec![
                Component::Param(c1.clone()),
            ]);
            ensure(verify_witness(&w).map_err(e2s)?, || format!("add3 witness n = {n}, a = {a}"))?;
        }
    }
    Ok("add2 2n+1 vs 2n for n = 2..5, add3 4n vs 4n-2 for n = 3..5; 24 witnesses verified".into())
}

fn catalog() -> Check {
    let entries = catalog_small_degree().map_err(e2s)?;
    ensure(entries.len() == 26 && CATALOG_IDS.len() == 26, || format!("{} entries", entries.len()))?;
    let mut witnesses = 0;
    for e in &entries {
        e.certify().map_err(e2s)?;
        witnesses += e.witnesses.len();
        if ["I15", "I16", "I21", "II1", "II2"].contains(&e.id.as_str()) {
            ensure(!e.witnesses.is_empty(), || format!("{} has no witness", e.id))?;
        }
        let r = e.report();
        let want = match e.family.rigidity_class {
            RigidityClass::Rigid(k) => k as usize,
            c => return Err(format!("{} has class {c}", e.id)),
        };
        ensure(r.classes.len() == want && r.undecided == 0, || format!("{}: {} classes, {} undecided", e.id, r.classes.len(), r.undecided))?;
        if e.id.starts_with("II") {
            ensure(want == 2, || format!("{} is not 2-rigid", e.id))?;
        }
    }
    let mut labels: Vec<String> = enumerate_rigid_candidates().iter().map(|s| s.label()).collect();
    labels.sort();
    ensure(labels == ["3 A2", "A2 + A4", "A6", "T(3,4)"], || format!("quartic candidates {labels:?}"))?;
    Ok(format!("26 entries certified, {witnesses} witnesses verified, II1/II2 2 classes 0 undecided; candidates {}", labels.join(", ")))
}

fn duality() -> Check {
    let s = solve_toe1(2).map_err(e2s)?;
    let dual = dual_curve(&s.component()).map_err(e2s)?;
    ensure(dual.degree() == 3, || format!("dual of the n = 2 curve has degree {}", dual.degree()))?;
    let mut corpus: Vec<ParamCurve> = vec![tricuspidal_quartic()];
    for n in 2..=3 {
        corpus.push(build_add1(n).map_err(e2s)?.curve);
        corpus.push(build_add2(n, &q(0)).map_err(e2s)?);
        corpus.push(build_add2(n, &q(1)).map_err(e2s)?);
    }
    corpus.push(build_add3(3, &q(1)).map_err(e2s)?);
    for id in CATALOG_IDS {
        for c in catalog_member(id, None).map_err(e2s)? {
            if let Component::Param(p) = c {
                if !p.is_line() {
                    corpus.push(p);
                }
            }
        }
    }
    for c in &corpus {
        let class = class_of_curve(c).map_err(e2s)?;
        let d = dual_param(c).map_err(e2s)?.degree();
        ensure(class == d, || format!("{:?}: class {class}, dual degree {d}", c.label()))?;
        ensure(biduality_holds(&Component::Param(c.clone())).map_err(e2s)?, || format!("{:?}: biduality", c.label()))?;
    }
    let step = vn_step(&tricuspidal_quartic()).map_err(e2s)?;
    let nd = &step.next_audit.descriptor;
    ensure(step.next.degree() == 6 && nd.count(SingTypeTag::tmn(3, 4)) == 3, || format!("next member: degree {}, {nd}", step.next.degree()))?;
    Ok(format!("dual degree 3; class = dual degree and biduality on {} curves; vn step gives degree 6 with {nd}", corpus.len()))
}

fn fermat() -> Check {
    let f = fermat_dual_family(3, false).map_err(e2s)?;
    let d = &f.audit.descriptor;
    ensure(d.count(SingTypeTag::a(2)) == 9 && d.total_points() == 9 && f.s_f.is_empty(), || format!("n = 3: {d}"))?;
    let with = fermat_dual_family(3, true).map_err(e2s)?;
    let family = FamilyDescriptor::from_audit(&with.audit, RigidityClass::Rigid(1), |_| true).map_err(e2s)?;
    ensure(family.matches(&audit_components(&with.components).map_err(e2s)?), || "n = 3 with lines".into())?;
    let four = match fermat_dual_family(4, true) {
        Ok(f) => format!("n = 4 certified with S_F = {}", f.s_f),
        Err(Error::ResourceBudget(m)) => format!("n = 4 refused: {m}"),
        Err(e) => return Err(format!("n = 4: {e}")),
    };
    Ok(format!("n = 3: 9 A2, S_F empty; with lines {}; {four}", family.summary()))
}

fn rigit() -> Check {
    let mut counts = Vec::new();
    for n in [3u64, 5, 7, 9] {
        let c = rigit_classes(n).map_err(e2s)?.len();
        ensure(c as u64 == (n - 1) / 2, || format!("n = {n}: {c} orbits"))?;
        counts.push(format!("n={n}: {c}"));
    }
    props::rigit_relation(&[3, 5, 7, 9])?;
    Ok(format!("{}; reflexive, symmetric, transitive", counts.join(", ")))
}

fn properties() -> Check {
    props::algebra(64)?;
    props::genus_delta(16)?;
    props::equivariance(16)?;
    props::witness_separation(16)?;
    props::equality_is_an_equivalence(32)?;
    props::report_monotone(8)?;
    props::curve_file_round_trip(16)?;
    Ok("algebra, genus-delta, equivariance, witness/separation, equality, report, file round trip".into())
}

#[test]
fn acceptance() {
    let criteria: [(&str, Option<u64>, fn() -> Check); 8] = [
        ("toe1 sweep n = 2..6", Some(10), toe1_sweep),
        ("recurrence suite", Some(30), recurrence_suite),
        ("add2/add3 dichotomies", None, dichotomies),
        ("degree <= 4 catalog", None, catalog),
        ("duality", Some(60), duality),
        ("Fermat dual", None, fermat),
        ("rigit combinatorics", None, rigit),
        ("property suites", None, properties),
    ];
    let mut failed = Vec::new();
    for (i, (name, limit, f)) in criteria.into_iter().enumerate() {
        let t = Instant::now();
        let r = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| Err("panicked".into()));
        let dt = t.elapsed();
        let r = match (r, limit) {
            (Ok(_), Some(s)) if dt > Duration::from_secs(s) => Err(format!("took {dt:.2?}, limit {s} s")),
            (r, _) => r,
        };
        let budget = limit.map(|s| format!(" (limit {s} s)")).unwrap_or_default();
        let line = match &r {
            Ok(detail) => format!("criterion {} PASS {name} [{dt:.2?}{budget}]: {detail}", i + 1),
            Err(why) => {
                failed.push(i + 1);
                format!("criterion {} FAIL {name} [{dt:.2?}{budget}]: {why}", i + 1)
            }
        };
        let _ = writeln!(std::io::stderr(), "{line}");
    }
    assert!(failed.is_empty(), "failed criteria {failed:?}");
}
