use std::path::{Path, PathBuf};
use std::sync::Arc;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use entwine_core::emodcat::{check_entwined_module, std_module_ac, std_module_ca, unit_module};
use entwine_core::entwining::{check_datum, check_double_quantum_group, check_entwining, check_monoidal_datum};
use entwine_core::hopfcore::{check_hopf, dual_hopf};
use entwine_core::pivribbon::{find_pivotal, find_ribbon, verify_pivotal, verify_ribbon};
use entwine_core::smash::{smash_coproduct, smash_product, transport_copivot, transport_pivot};
use entwine_core::{
    corpus, AxiomReport, DoubleQuantumGroup, DualTwist, EntwiningMap, FinderResult, FinderStatus, HopfAlgebraData,
    Matrix,
};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::format::{self, matrix_json, vector_json, Metadata, Structure};

#[derive(Parser, Debug)]
#[command(name = "entwine", version, about = "Exact checks and constructions for Hopf algebras and entwining structures")]
pub struct Cli {
    /// Report format.
    #[arg(long, value_enum, default_value_t = OutputFormat::Text, global = true)]
    pub format: OutputFormat,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Run an axiom checker.
    #[command(subcommand)]
    Check(CheckCmd),
    /// Construct a derived structure and write it to a file.
    #[command(subcommand)]
    Build(BuildCmd),
    /// Search for pivotal or ribbon morphisms.
    #[command(subcommand)]
    Find(FindCmd),
    /// Export a built-in structure.
    Corpus {
        /// Name of the structure; omit with --list.
        name: Option<String>,
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// List the available names.
        #[arg(long)]
        list: bool,
    },
    /// Check every built-in structure.
    Report,
}

#[derive(Subcommand, Debug)]
pub enum CheckCmd {
    /// Hopf algebra axioms.
    Hopf { files: Vec<PathBuf> },
    /// E1–E4.
    Entwining { files: Vec<PathBuf> },
    /// E1–E6.
    Datum { files: Vec<PathBuf> },
    /// E7–E10b.
    Dqg { files: Vec<PathBuf> },
    /// Module, comodule and E0 axioms.
    Module { files: Vec<PathBuf> },
    /// P1–P5 for a morphism C -> A.
    Pivotal {
        #[arg(long)]
        datum: PathBuf,
        #[arg(long)]
        morphism: PathBuf,
    },
    /// R1–R5 for a morphism C -> A.
    Ribbon {
        #[arg(long)]
        dqg: PathBuf,
        #[arg(long)]
        morphism: PathBuf,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum TwistArg {
    Plain,
    Op,
    Cop,
}

#[derive(Subcommand, Debug)]
pub enum BuildCmd {
    /// Entwined smash product C*op ⊗ A.
    Smash {
        #[arg(long)]
        datum: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Entwined smash coproduct A*cop ⊗ C.
    Cosmash {
        #[arg(long)]
        datum: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Drinfeld double.
    Double {
        #[arg(long)]
        hopf: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Dual Hopf algebra.
    Dual {
        #[arg(long)]
        hopf: PathBuf,
        #[arg(long, value_enum, default_value_t = TwistArg::Plain)]
        twist: TwistArg,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Pivot element of the smash product from a pivotal morphism.
    Pivot {
        #[arg(long)]
        datum: PathBuf,
        #[arg(long)]
        morphism: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Copivot of the smash coproduct from a pivotal morphism.
    Copivot {
        #[arg(long)]
        datum: PathBuf,
        #[arg(long)]
        morphism: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
    },
}

#[derive(Subcommand, Debug)]
pub enum FindCmd {
    Pivotal {
        #[arg(long)]
        datum: PathBuf,
        #[arg(long, default_value_t = 4)]
        max_params: usize,
        /// Directory for one morphism file per solution.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    Ribbon {
        #[arg(long, alias = "datum")]
        dqg: PathBuf,
        #[arg(long, default_value_t = 4)]
        max_params: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

/// One check in a report, labelled by its source.
pub struct Labelled {
    pub source: String,
    pub check: String,
    pub report: AxiomReport,
}

fn load_kind(path: &Path) -> Result<Structure> {
    Ok(format::load(path)?.0)
}

fn load_hopf(path: &Path) -> Result<Arc<HopfAlgebraData>> {
    match load_kind(path)? {
        Structure::Hopf(h) => Ok(h),
        s => bail!("{}: expected a hopf file, found {}", path.display(), s.kind()),
    }
}

fn load_entwining(path: &Path) -> Result<Arc<EntwiningMap>> {
    match load_kind(path)? {
        Structure::Entwining(e) => Ok(e),
        Structure::Dqg(q) => Ok(q.datum().clone()),
        s => bail!("{}: expected an entwining file, found {}", path.display(), s.kind()),
    }
}

fn load_dqg(path: &Path) -> Result<DoubleQuantumGroup> {
    match load_kind(path)? {
        Structure::Dqg(q) => Ok(q),
        s => bail!("{}: expected a dqg file, found {}", path.display(), s.kind()),
    }
}

fn load_morphism(path: &Path) -> Result<Matrix> {
    match load_kind(path)? {
        Structure::Morphism(g) => Ok(g),
        s => bail!("{}: expected a morphism file, found {}", path.display(), s.kind()),
    }
}

fn check_shape(g: &Matrix, e: &EntwiningMap) -> Result<()> {
    if g.rows() != e.da() || g.cols() != e.dc() {
        bail!("morphism is {}x{}, the datum needs {}x{}", g.rows(), g.cols(), e.da(), e.dc());
    }
    Ok(())
}

pub fn witness_json(r: &AxiomReport) -> Value {
    let items: Vec<Value> = r
        .items
        .iter()
        .map(|i| {
            let mut o = json!({ "axiom_id": i.axiom_id, "passed": i.passed });
            if let Some(w) = &i.witness {
                o["witness"] = json!({
                    "tuple": w.tuple,
                    "lhs": vector_json(w.lhs.coords()),
                    "rhs": vector_json(w.rhs.coords()),
                });
            }
            if let Some(n) = &i.note {
                o["note"] = json!(n);
            }
            o
        })
        .collect();
    json!({ "overall": r.overall(), "items": items })
}

pub fn render_reports(checks: &[Labelled], fmt: OutputFormat) -> String {
    let overall = checks.iter().all(|c| c.report.overall());
    match fmt {
        OutputFormat::Json => {
            let list: Vec<Value> = checks
                .iter()
                .map(|c| {
                    let mut v = witness_json(&c.report);
                    v["source"] = json!(c.source);
                    v["check"] = json!(c.check);
                    v
                })
                .collect();
            format::render(&json!({ "format_version": format::FORMAT_VERSION, "overall": overall, "checks": list }))
        }
        OutputFormat::Text => {
            let mut s = String::new();
            for c in checks {
                s.push_str(&format!("{} [{}]\n{}", c.source, c.check, c.report));
            }
            s.push_str(if overall { "all checks passed\n" } else { "some checks failed\n" });
            s
        }
    }
}

fn check_files(kind: &str, files: &[PathBuf]) -> Result<Vec<Labelled>> {
    if files.is_empty() {
        bail!("no files given");
    }
    files
        .par_iter()
        .map(|f| {
            let report = match kind {
                "hopf" => check_hopf(&*load_hopf(f)?),
                "entwining" => check_entwining(&*load_entwining(f)?),
                "datum" => check_datum(&*load_entwining(f)?),
                "dqg" => {
                    let q = load_dqg(f)?;
                    AxiomReport::merge(vec![("", check_datum(q.datum())), ("", check_double_quantum_group(&q))])
                }
                "module" => match load_kind(f)? {
                    Structure::Module(m) => check_entwined_module(&m),
                    s => bail!("{}: expected a module file, found {}", f.display(), s.kind()),
                },
                _ => unreachable!("fixed check kinds"),
            };
            Ok(Labelled { source: f.display().to_string(), check: kind.into(), report })
        })
        .collect()
}

fn run_check(cmd: &CheckCmd) -> Result<Vec<Labelled>> {
    match cmd {
        CheckCmd::Hopf { files } => check_files("hopf", files),
        CheckCmd::Entwining { files } => check_files("entwining", files),
        CheckCmd::Datum { files } => check_files("datum", files),
        CheckCmd::Dqg { files } => check_files("dqg", files),
        CheckCmd::Module { files } => check_files("module", files),
        CheckCmd::Pivotal { datum, morphism } => {
            let d = load_entwining(datum)?;
            let g = load_morphism(morphism)?;
            check_shape(&g, &d)?;
            let source = format!("{} with {}", datum.display(), morphism.display());
            Ok(vec![Labelled { source, check: "pivotal".into(), report: verify_pivotal(&d, &g) }])
        }
        CheckCmd::Ribbon { dqg, morphism } => {
            let q = load_dqg(dqg)?;
            let g = load_morphism(morphism)?;
            check_shape(&g, q.datum())?;
            let source = format!("{} with {}", dqg.display(), morphism.display());
            Ok(vec![Labelled { source, check: "ribbon".into(), report: verify_ribbon(&q, &g) }])
        }
    }
}

fn source_digest(s: Structure) -> String {
    format::digest(&format::to_value(&s, &Metadata::default()))
}

fn write(s: &Structure, construction: &str, source: String, out: &Path) -> Result<()> {
    let meta = Metadata { construction: Some(construction.into()), source_sha256: Some(source) };
    format::save(s, &meta, out).with_context(|| format!("writing {}", out.display()))
}

fn run_build(cmd: &BuildCmd) -> Result<String> {
    match cmd {
        BuildCmd::Smash { datum, output } | BuildCmd::Cosmash { datum, output } => {
            let d = load_entwining(datum)?;
            let r = check_datum(&d);
            if !r.overall() {
                bail!("datum fails {}", r.failed_ids().join(", "));
            }
            let (name, h) = match cmd {
                BuildCmd::Smash { .. } => ("smash", smash_product(&d)?),
                _ => ("cosmash", smash_coproduct(&d)?),
            };
            write(&Structure::Hopf(Arc::new(h)), name, source_digest(Structure::Entwining(d)), output)?;
            Ok(format!("wrote {}\n", output.display()))
        }
        BuildCmd::Double { hopf, output } => {
            let h = load_hopf(hopf)?;
            let dd = corpus::drinfeld_double(h.clone());
            write(&Structure::Hopf(Arc::new(dd)), "double", source_digest(Structure::Hopf(h)), output)?;
            Ok(format!("wrote {}\n", output.display()))
        }
        BuildCmd::Dual { hopf, twist, output } => {
            let h = load_hopf(hopf)?;
            let t = match twist {
                TwistArg::Plain => DualTwist::Plain,
                TwistArg::Op => DualTwist::Op,
                TwistArg::Cop => DualTwist::Cop,
            };
            let d = dual_hopf(&h, t)?;
            let name = format!("dual_{}", format!("{twist:?}").to_lowercase());
            write(&Structure::Hopf(Arc::new(d)), &name, source_digest(Structure::Hopf(h)), output)?;
            Ok(format!("wrote {}\n", output.display()))
        }
        BuildCmd::Pivot { datum, morphism, output } => {
            let d = load_entwining(datum)?;
            let g = load_morphism(morphism)?;
            check_shape(&g, &d)?;
            let s = Arc::new(smash_product(&d)?);
            let t = transport_pivot(&d, &s, &g)?;
            write(&Structure::Element(t), "pivot", source_digest(Structure::Entwining(d)), output)?;
            Ok(format!("wrote {}\n", output.display()))
        }
        BuildCmd::Copivot { datum, morphism, output } => {
            let d = load_entwining(datum)?;
            let g = load_morphism(morphism)?;
            check_shape(&g, &d)?;
            let k = Arc::new(smash_coproduct(&d)?);
            let f = transport_copivot(&d, &k, &g)?;
            write(&Structure::Functional(f), "copivot", source_digest(Structure::Entwining(d)), output)?;
            Ok(format!("wrote {}\n", output.display()))
        }
    }
}

fn status_name(s: FinderStatus) -> &'static str {
    match s {
        FinderStatus::Complete => "complete",
        FinderStatus::Parametric => "parametric",
        FinderStatus::Undecided => "undecided",
    }
}

fn render_finder(r: &FinderResult, fmt: OutputFormat) -> String {
    let dim = r.family.as_ref().map(|f| f.dimension());
    match fmt {
        OutputFormat::Json => {
            let sols: Vec<Value> = r.solutions.iter().map(|s| matrix_json(s.map())).collect();
            format::render(&json!({
                "format_version": format::FORMAT_VERSION,
                "status": status_name(r.status),
                "family_dimension": dim,
                "solutions": sols,
                "notes": r.notes,
            }))
        }
        OutputFormat::Text => {
            let mut s = format!("status: {}\n", status_name(r.status));
            match dim {
                Some(d) => s.push_str(&format!("linear family dimension: {d}\n")),
                None => s.push_str("linear stage inconsistent\n"),
            }
            s.push_str(&format!("solutions: {}\n", r.solutions.len()));
            for (i, sol) in r.solutions.iter().enumerate() {
                let m = sol.map();
                s.push_str(&format!("solution {i}:\n"));
                for row in 0..m.rows() {
                    let cells: Vec<String> = (0..m.cols()).map(|c| m.get(row, c).to_string()).collect();
                    s.push_str(&format!("  [{}]\n", cells.join(", ")));
                }
            }
            if !r.notes.is_empty() {
                s.push_str(&format!("notes: {}\n", r.notes));
            }
            s
        }
    }
}

fn write_solutions(r: &FinderResult, dir: &Path) -> Result<()> {
    std::fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
    for (i, s) in r.solutions.iter().enumerate() {
        let p = dir.join(format!("solution_{i}.json"));
        format::save(&Structure::Morphism(s.map().clone()), &Metadata::default(), &p)
            .with_context(|| format!("writing {}", p.display()))?;
    }
    Ok(())
}

fn run_find(cmd: &FindCmd, fmt: OutputFormat) -> Result<String> {
    let (r, out) = match cmd {
        FindCmd::Pivotal { datum, max_params, output } => (find_pivotal(&load_entwining(datum)?, *max_params), output),
        FindCmd::Ribbon { dqg, max_params, output } => (find_ribbon(&load_dqg(dqg)?, *max_params), output),
    };
    if let Some(dir) = out {
        write_solutions(&r, dir)?;
    }
    Ok(render_finder(&r, fmt))
}

/// Every exportable built-in structure, by name.
pub fn corpus_entries() -> Vec<(String, Structure)> {
    let mut v: Vec<(String, Structure)> = Vec::new();
    for (n, h) in corpus::hopf_algebras() {
        v.push((n.into(), Structure::Hopf(Arc::new(h))));
    }
    let h4 = Arc::new(corpus::sweedler_h4());
    let z2 = Arc::new(corpus::cyclic_group_algebra(2));
    v.push(("double_h4".into(), Structure::Hopf(Arc::new(corpus::drinfeld_double(h4.clone())))));
    v.push(("double_kz2".into(), Structure::Hopf(Arc::new(corpus::drinfeld_double(z2)))));
    for (n, d) in corpus::datums() {
        let d = Arc::new(d);
        v.push((format!("{n}_unit_module"), Structure::Module(unit_module(&d))));
        v.push((format!("{n}_std_ca"), Structure::Module(std_module_ca(&d))));
        v.push((format!("{n}_std_ac"), Structure::Module(std_module_ac(&d))));
        v.push((n.into(), Structure::Entwining(d)));
    }
    for (n, q) in corpus::dqgs() {
        v.push((n.into(), Structure::Dqg(q)));
    }
    if let Ok(q) = corpus::yd_dqg_trivial_r(h4.clone()) {
        v.push(("yd_dqg_h4_trivial_r".into(), Structure::Dqg(q)));
    }
    let yd = corpus::yd_datum(h4.clone());
    v.push(("long_h4_pivotal".into(), Structure::Morphism(corpus::long_h4_pivotal())));
    v.push(("yd_h4_pivotal_1".into(), Structure::Morphism(corpus::yd_h4_pivotal_1())));
    v.push(("yd_h4_pivotal_2".into(), Structure::Morphism(corpus::yd_h4_pivotal_2())));
    v.push(("yd_h4_counit".into(), Structure::Morphism(yd.conv_unit())));
    v.push(("long_z2_ribbon".into(), Structure::Morphism(corpus::long_z2_ribbon())));
    v.push(("h4_pivot".into(), Structure::Element(corpus::h4_pivot(h4.clone()))));
    v.push(("h4_copivot".into(), Structure::Functional(corpus::h4_copivot(h4))));
    v.push(("dual_form_z2".into(), Structure::Form(corpus::dual_form_z2())));
    v.sort_by(|a, b| a.0.cmp(&b.0));
    v
}

fn run_corpus(name: Option<&str>, output: Option<&Path>, list: bool) -> Result<String> {
    let entries = corpus_entries();
    if list {
        return Ok(entries.iter().map(|(n, s)| format!("{n}\t{}\n", s.kind())).collect());
    }
    let name = name.ok_or_else(|| anyhow!("a corpus name or --list is required"))?;
    let (_, s) = entries
        .into_iter()
        .find(|(n, _)| n == name)
        .ok_or_else(|| anyhow!("unknown corpus name {name:?}; see `corpus --list`"))?;
    let meta = Metadata { construction: Some(format!("corpus:{name}")), source_sha256: None };
    match output {
        Some(p) => {
            format::save(&s, &meta, p).with_context(|| format!("writing {}", p.display()))?;
            Ok(format!("wrote {}\n", p.display()))
        }
        None => Ok(format::render(&format::to_value(&s, &meta))),
    }
}

/// The full corpus regression suite.
pub fn corpus_reports() -> Vec<Labelled> {
    let mut jobs: Vec<(String, String, Box<dyn Fn() -> AxiomReport + Send + Sync>)> = Vec::new();
    for (n, h) in corpus::hopf_algebras() {
        jobs.push((n.into(), "hopf".into(), Box::new(move || check_hopf(&h))));
    }
    for (n, d) in corpus::datums() {
        let d = Arc::new(d);
        let e = d.clone();
        jobs.push((n.into(), "entwining".into(), Box::new(move || check_entwining(&e))));
        if !n.starts_with("hopf_module") {
            jobs.push((n.into(), "monoidal".into(), Box::new(move || check_monoidal_datum(&d))));
        }
    }
    for (n, q) in corpus::dqgs() {
        jobs.push((n.into(), "dqg".into(), Box::new(move || check_double_quantum_group(&q))));
    }
    let h4 = Arc::new(corpus::sweedler_h4());
    let long = Arc::new(corpus::long_datum(h4.clone(), h4.clone()));
    let yd = Arc::new(corpus::yd_datum(h4));
    jobs.push(("long_h4_pivotal".into(), "pivotal".into(), Box::new(move || verify_pivotal(&long, &corpus::long_h4_pivotal()))));
    let yd2 = yd.clone();
    jobs.push(("yd_h4_pivotal_1".into(), "pivotal".into(), Box::new(move || verify_pivotal(&yd, &corpus::yd_h4_pivotal_1()))));
    jobs.push(("yd_h4_pivotal_2".into(), "pivotal".into(), Box::new(move || verify_pivotal(&yd2, &corpus::yd_h4_pivotal_2()))));
    jobs.push((
        "long_z2_ribbon".into(),
        "ribbon".into(),
        Box::new(|| verify_ribbon(&corpus::long_dqg_z2(), &corpus::long_z2_ribbon())),
    ));
    jobs.par_iter().map(|(s, c, f)| Labelled { source: s.clone(), check: c.clone(), report: f() }).collect()
}

/// Exit code and text to print. Usage and input errors are returned as `Err`.
pub fn execute(cli: &Cli) -> Result<(i32, String)> {
    let fmt = cli.format;
    let checked = |v: Vec<Labelled>| {
        let code = if v.iter().all(|c| c.report.overall()) { 0 } else { 1 };
        (code, render_reports(&v, fmt))
    };
    Ok(match &cli.command {
        Command::Check(c) => checked(run_check(c)?),
        Command::Report => checked(corpus_reports()),
        Command::Build(b) => (0, run_build(b)?),
        Command::Find(f) => (0, run_find(f, fmt)?),
        Command::Corpus { name, output, list } => (0, run_corpus(name.as_deref(), output.as_deref(), *list)?),
    })
}
