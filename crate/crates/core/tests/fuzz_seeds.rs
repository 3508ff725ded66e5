use std::fs;
use std::path::PathBuf;

use rigidcurve::curvelocal::{ParamCurve, SingTypeTag};
use rigidcurve::exactalg::{parse_tern_json, Rat, UniPoly};
use rigidcurve::rigidity::verify_witness;
use rigidcurve::wire::{CurveFile, WitnessFile};

fn seeds(target: &str) -> Vec<String> {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fuzz/corpus").join(target);
    let mut out: Vec<String> = fs::read_dir(&dir)
        .unwrap_or_else(|e| panic!("{}: {e}", dir.display()))
        .map(|e| fs::read_to_string(e.unwrap().path()).unwrap())
        .collect();
    out.sort();
    assert!(!out.is_empty(), "no seeds for {target}");
    out
}

#[test]
fn curve_file_seeds_parse() {
    for s in seeds("curve_file") {
        let f = CurveFile::from_json(&s).unwrap();
        assert_eq!(CurveFile::from_json(&f.to_json()).unwrap(), f);
    }
}

#[test]
fn witness_seeds_parse_and_verify() {
    for s in seeds("witness_file") {
        for w in WitnessFile::from_json(&s).unwrap().witnesses {
            assert!(verify_witness(&w).unwrap());
        }
    }
}

#[test]
fn scalar_seeds_parse() {
    for s in seeds("sing_type_tag") {
        let t: SingTypeTag = s.parse().unwrap();
        assert_eq!(t.to_string(), s);
    }
    for s in seeds("rat") {
        s.parse::<Rat>().unwrap();
    }
    for s in seeds("tern_json") {
        parse_tern_json(&s).unwrap();
    }
    for s in seeds("param_json") {
        let ok = serde_json::from_str::<ParamCurve>(&s).is_ok() || serde_json::from_str::<UniPoly<Rat>>(&s).is_ok();
        assert!(ok, "{s}");
    }
}
