mod construct;
mod plot;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use rigidcurve::curvelocal::{audit_components, flex_parameters, AuditReport, Component, Descriptor, Flex, SingRecord};
use rigidcurve::exactalg::Rat;
use rigidcurve::families::{catalog_small_degree, describe, FamilyDescriptor, RigidityClass};
use rigidcurve::rigidity::{rigidity_report, PairStatus, RigidityReport, Witness};
use rigidcurve::wire::{canonical, CurveFile, WitnessFile};
use rigidcurve::Error;
use serde::Serialize;

use construct::{construct, parse_sweep, rigit, Params};

#[derive(Parser)]
#[command(name = "rigidcurve", version, about = "Construct and certify rigid plane curves")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Build a certified member of a family and write it as a curve file
    Construct {
        /// I1..I24, II1, II2, toe1, add1, add2, add3, vn, fermat-dual
        family: String,
        #[arg(long)]
        n: Option<u64>,
        /// Rational parameter, `p` or `p/q`
        #[arg(long, allow_hyphen_values = true)]
        a: Option<String>,
        /// Attach the extra lines (fermat-dual, vn)
        #[arg(long)]
        lines: bool,
        /// Output file, or output directory with --sweep
        #[arg(long)]
        out: Option<PathBuf>,
        /// Certify every n in a range such as `2..6`
        #[arg(long)]
        sweep: Option<String>,
    },
    /// Audit the singular points of a curve file
    Audit {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Partition curve files into projective orbits
    Report {
        #[arg(required = true)]
        files: Vec<PathBuf>,
        /// A witness file
        #[arg(long)]
        witnesses: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Sketch the real points of a curve file as SVG
    Plot {
        file: PathBuf,
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// List the degree <= 4 catalog
    Catalog {
        /// Audit every member and verify every witness
        #[arg(long)]
        certify: bool,
        #[arg(long)]
        json: bool,
    },
    /// Orbit classes of the line pairs attached to the Fermat dual
    Rigit {
        #[arg(long)]
        n: u64,
    },
}

enum Failure {
    Usage(String),
    Certification(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        match e {
            Error::Parse(_) | Error::UnknownFamily(_) | Error::BadParams(_) | Error::DescriptorMismatch(_) => Failure::Usage(e.to_string()),
            _ => Failure::Certification(e.to_string()),
        }
    }
}

type Outcome = Result<(), Failure>;

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn write_or_print(out: Option<&Path>, text: &str) -> Outcome {
    match out {
        Some(p) => fs::write(p, text).map_err(|e| Failure::Usage(format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn load(path: &Path) -> Result<CurveFile, Failure> {
    CurveFile::from_json(&read(path)?).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

#[derive(Serialize)]
struct SweepItem {
    n: u64,
    status: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    descriptor: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    error: Option<String>,
}

fn cmd_construct(family: &str, n: Option<u64>, a: Option<&str>, lines: bool, out: Option<&Path>, sweep: Option<&str>) -> Outcome {
    let a = a.map(|s| s.parse::<Rat>()).transpose()?;
    if family == "rigit" {
        // The lines z2 + e^m z3 live over a cyclotomic field, so the orbit data is reported instead of a curve file.
        let n = n.ok_or_else(|| Error::BadParams("rigit needs --n".into()))?;
        return write_or_print(out, &canonical(&rigit(n)?));
    }
    let Some(range) = sweep else {
        let file = construct(family, &Params { n, a, lines })?;
        return write_or_print(out, &file.to_json());
    };
    if n.is_some() {
        return Err(Failure::Usage("--n and --sweep exclude each other".into()));
    }
    let ns = parse_sweep(range)?;
    let results: Vec<_> = std::thread::scope(|s| {
        let handles: Vec<_> = ns
            .iter()
            .map(|&k| {
                let p = Params { n: Some(k), a: a.clone(), lines };
                s.spawn(move || construct(family, &p))
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("sweep task")).collect()
    });
    if let Some(dir) = out {
        fs::create_dir_all(dir).map_err(|e| Failure::Usage(format!("{}: {e}", dir.display())))?;
    }
    let mut items = Vec::new();
    let mut failed = false;
    for (k, r) in ns.iter().zip(results) {
        match r {
            Ok(f) => {
                if let Some(dir) = out {
                    write_or_print(Some(&dir.join(format!("{family}-n{k}.json"))), &f.to_json())?;
                }
                let d = f.metadata.descriptor.as_ref().map(|d| d.descriptor().to_string());
                items.push(SweepItem { n: *k, status: "certified", descriptor: d, error: None });
            }
            Err(Error::UnknownFamily(f)) => return Err(Error::UnknownFamily(f).into()),
            Err(e) => {
                failed = true;
                items.push(SweepItem { n: *k, status: "failed", descriptor: None, error: Some(e.to_string()) });
            }
        }
    }
    print!("{}", canonical(&items));
    if failed {
        return Err(Failure::Certification("some members of the sweep failed".into()));
    }
    Ok(())
}

#[derive(Serialize)]
struct FlexOut {
    component: usize,
    flexes: Vec<Flex>,
}

#[derive(Serialize)]
struct AuditOut<'a> {
    degrees: &'a [u32],
    genera: &'a [i64],
    descriptor: String,
    entries: &'a Descriptor,
    delta_total: u64,
    records: &'a [SingRecord],
    flexes: Vec<FlexOut>,
    #[serde(skip_serializing_if = "Option::is_none")]
    matches_file_descriptor: Option<bool>,
}

fn flexes(c: &[Component]) -> Vec<FlexOut> {
    c.iter()
        .enumerate()
        .filter_map(|(i, x)| x.as_param().map(|p| FlexOut { component: i, flexes: flex_parameters(p) }))
        .collect()
}

fn print_audit_text(a: &AuditReport, fl: &[FlexOut], matches: Option<bool>) {
    println!("degrees {:?}, genera {:?}", a.degrees, a.genera);
    println!("singularities: {}", describe(&a.descriptor));
    for r in &a.records {
        let k = if r.conjugates > 1 { format!(" ({} conjugate points)", r.conjugates) } else { String::new() };
        println!("  {} at {}, delta {}{k}", r.tag, r.center, r.delta);
    }
    for f in fl {
        let total: usize = f.flexes.iter().map(Flex::count).sum();
        println!("component {}: {total} flexes", f.component);
    }
    match matches {
        Some(true) => println!("matches the descriptor in the file"),
        Some(false) => println!("does NOT match the descriptor in the file"),
        None => {}
    }
}

fn cmd_audit(path: &Path, json: bool) -> Outcome {
    let file = load(path)?;
    let c = file.curve();
    let audit = audit_components(&c)?;
    let matches = file.metadata.descriptor.as_ref().map(|d| d.matches(&audit));
    let fl = flexes(&c);
    if json {
        let out = AuditOut {
            degrees: &audit.degrees,
            genera: &audit.genera,
            descriptor: audit.descriptor.to_string(),
            entries: &audit.descriptor,
            delta_total: audit.total_delta(),
            records: &audit.records,
            flexes: fl,
            matches_file_descriptor: matches,
        };
        print!("{}", canonical(&out));
    } else {
        print_audit_text(&audit, &fl, matches);
    }
    if matches == Some(false) {
        return Err(Failure::Certification("audit does not match the descriptor in the file".into()));
    }
    Ok(())
}

#[derive(Serialize)]
struct ReportOut<'a> {
    files: Vec<String>,
    family: &'a FamilyDescriptor,
    report: &'a RigidityReport,
}

fn cmd_report(paths: &[PathBuf], witnesses: Option<&Path>, json: bool) -> Outcome {
    let files = paths.iter().map(|p| load(p)).collect::<Result<Vec<_>, _>>()?;
    let instances: Vec<Vec<Component>> = files.iter().map(CurveFile::curve).collect();
    let audits = instances.iter().map(|c| audit_components(c)).collect::<Result<Vec<_>, _>>()?;
    let family = match &files[0].metadata.descriptor {
        Some(d) => d.clone(),
        None => FamilyDescriptor::from_audit(&audits[0], RigidityClass::Unknown, |_| true)?,
    };
    for (p, a) in paths.iter().zip(&audits) {
        if !family.matches(a) {
            return Err(Error::DescriptorMismatch(format!("{} is {}, not in {}", p.display(), describe(&a.descriptor), family.summary())).into());
        }
    }
    let ws: Vec<Witness> = match witnesses {
        Some(p) => WitnessFile::from_json(&read(p)?).map_err(|e| Failure::Usage(format!("{}: {e}", p.display())))?.witnesses,
        None => Vec::new(),
    };
    let report = rigidity_report(&instances, &ws);
    let names: Vec<String> = paths.iter().map(|p| p.display().to_string()).collect();
    if json {
        print!("{}", canonical(&ReportOut { files: names, family: &family, report: &report }));
        return Ok(());
    }
    println!("family {}", family.summary());
    for (k, class) in report.classes.iter().enumerate() {
        let members: Vec<&str> = class.iter().map(|&i| names[i].as_str()).collect();
        println!("class {k}: {}", members.join(", "));
    }
    for p in &report.pairs {
        let what = match (p.status, &p.certificate) {
            (PairStatus::CertifiedDistinct, Some(c)) => format!("distinct by {} ({} vs {})", c.invariant_name, c.value_source, c.value_target),
            (PairStatus::WitnessedEqual, _) => "same orbit".into(),
            _ => "undecided".into(),
        };
        println!("  {} / {}: {what}", names[p.i], names[p.j]);
    }
    println!("k >= {}, {} undecided pairs", report.k_lower_bound, report.undecided);
    Ok(())
}

fn cmd_catalog(certify: bool, json: bool) -> Outcome {
    let entries = catalog_small_degree()?;
    #[derive(Serialize)]
    struct Row<'a> {
        id: &'a str,
        family: &'a FamilyDescriptor,
        members: usize,
        witnesses: usize,
    }
    let mut rows = Vec::new();
    for e in &entries {
        if certify {
            e.certify()?;
        }
        rows.push(Row { id: &e.id, family: &e.family, members: e.representatives.len(), witnesses: e.witnesses.len() });
    }
    if json {
        print!("{}", canonical(&rows));
    } else {
        for r in &rows {
            println!("{:<4} {}  {}", r.id, r.family.summary(), r.family.rigidity_class);
        }
        if certify {
            println!("all {} entries certified", rows.len());
        }
    }
    Ok(())
}

fn run(cli: Cli) -> Outcome {
    match cli.cmd {
        Cmd::Construct { family, n, a, lines, out, sweep } => cmd_construct(&family, n, a.as_deref(), lines, out.as_deref(), sweep.as_deref()),
        Cmd::Audit { file, json } => cmd_audit(&file, json),
        Cmd::Report { files, witnesses, json } => cmd_report(&files, witnesses.as_deref(), json),
        Cmd::Plot { file, svg } => write_or_print(svg.as_deref(), &plot::svg(&load(&file)?.curve())),
        Cmd::Catalog { certify, json } => cmd_catalog(certify, json),
        Cmd::Rigit { n } => {
            print!("{}", canonical(&rigit(n)?));
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 3 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(3)
        }
        Err(Failure::Certification(m)) => {
            eprintln!("certification failed: {m}");
            ExitCode::from(2)
        }
    }
}
