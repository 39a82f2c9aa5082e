//! Command line: file formats, commands, reporting and the seeded
//! random-poset search.

mod parse;

use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::classify::theorems::{verify_theorems, TheoremReport, Verdict};
use crate::classify::{classify, ClassificationVector};
use crate::config::Caps;
use crate::error::{Error, Result};
use crate::generate::random_corpus;
use crate::order::FinPoset;
use crate::powerspace::{self, PowerSpace};
use crate::reflect::{self, Reflected};
use crate::space::{self, Space};

pub use parse::{parse_space, read_space, to_space_file};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Human,
    /// One JSON object per line.
    Records,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PowerKind {
    Smyth,
    Hoare,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ReflectionKind {
    Sober,
    Wf,
}

#[derive(Debug, Parser)]
#[command(name = "soberbench", version, about = "Finite order-topology workbench")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    pub cap_carrier: Option<u64>,
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    pub cap_powerspace: Option<u64>,
    /// Comma-separated theorem ids, or `all`.
    #[arg(long, global = true, default_value = "all")]
    pub suite: String,
    #[arg(long, global = true, value_enum, default_value_t = Format::Human)]
    pub format: Format,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the classification vector.
    Classify { file: PathBuf },
    /// List the named families of closed and saturated sets.
    Families { file: PathBuf },
    /// Build the Smyth or Hoare power space.
    Powerspace {
        #[arg(value_enum)]
        kind: PowerKind,
        file: PathBuf,
    },
    /// Build the sobrification or the well-filtered reflection.
    Reflect {
        #[arg(value_enum)]
        kind: ReflectionKind,
        file: PathBuf,
    },
    /// Run theorem checks; positional ids override `--suite`.
    Verify { file: PathBuf, ids: Vec<String> },
    /// Run the suite on seeded random posets.
    Search {
        #[arg(long, default_value_t = 10)]
        count: usize,
        #[arg(long, default_value_t = 5)]
        max_n: usize,
    },
    /// List theorem ids and statements.
    Theorems,
}

/// Caps, seed, theorem selection and output mode.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunConfig {
    pub caps: Caps,
    pub seed: u64,
    /// Empty means every theorem.
    pub suite: Vec<String>,
    pub format: Format,
}

impl RunConfig {
    fn from_cli(cli: &Cli) -> Result<Self> {
        let mut caps = Caps::default();
        let to_usize = |v: u64| {
            usize::try_from(v).map_err(|_| Error::InvalidArgument(format!("cap {v} too large")))
        };
        if let Some(c) = cli.cap_carrier {
            caps.carrier = to_usize(c)?;
        }
        if let Some(c) = cli.cap_powerspace {
            caps.powerspace = to_usize(c)?;
        }
        Ok(RunConfig {
            caps,
            seed: cli.seed,
            suite: parse_suite(&cli.suite),
            format: cli.format,
        })
    }
}

pub fn parse_suite(s: &str) -> Vec<String> {
    if s.trim() == "all" {
        return Vec::new();
    }
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(String::from)
        .collect()
}

/// One result line.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Record {
    pub command: String,
    pub instance: String,
    pub key: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub value: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
}

struct Report<'a> {
    command: &'a str,
    instance: String,
    records: Vec<Record>,
    failures: usize,
}

impl<'a> Report<'a> {
    fn new(command: &'a str, instance: impl Into<String>) -> Self {
        Report {
            command,
            instance: instance.into(),
            records: Vec::new(),
            failures: 0,
        }
    }

    fn push(&mut self, key: impl Into<String>, value: Option<Value>, witness: Option<Value>) {
        self.records.push(Record {
            command: self.command.into(),
            instance: self.instance.clone(),
            key: key.into(),
            value,
            witness,
        });
    }

    fn value(&mut self, key: impl Into<String>, value: impl Serialize) {
        let v = serde_json::to_value(value).expect("serializable");
        self.push(key, Some(v), None);
    }

    fn theorem(&mut self, r: &TheoremReport) {
        if r.verdict == Verdict::Fail {
            self.failures += 1;
        }
        let value = json!({"verdict": r.verdict, "bounded": r.bounded, "detail": r.detail});
        self.push(r.theorem_id, Some(value), r.witness.clone());
    }
}

fn render(r: &Record, format: Format) -> String {
    match format {
        Format::Records => serde_json::to_string(r).expect("serializable"),
        Format::Human => {
            let show = |v: &Value| match v {
                Value::String(s) => s.clone(),
                v => v.to_string(),
            };
            let mut line = format!("{} {}", r.instance, r.key);
            if let Some(v) = &r.value {
                line += &format!(" = {}", show(v));
            }
            if let Some(w) = &r.witness {
                line += &format!("  witness: {}", show(w));
            }
            line
        }
    }
}

fn emit(out: &mut dyn Write, records: &[Record], format: Format) -> Result<()> {
    for r in records {
        writeln!(out, "{}", render(r, format))
            .map_err(|e| Error::InvalidArgument(format!("write failed: {e}")))?;
    }
    Ok(())
}

fn classify_records(rep: &mut Report, v: &ClassificationVector) {
    for (name, val) in v.flags() {
        let w = v.witnesses.get(name).cloned();
        rep.push(name, Some(json!(val)), w);
    }
    rep.value("bounded", v.bounded);
}

fn order_pairs(p: &FinPoset) -> Vec<[String; 2]> {
    p.covers()
        .into_iter()
        .map(|(a, b)| [p.label(a).to_string(), p.label(b).to_string()])
        .collect()
}

fn power_records(rep: &mut Report, ps: &PowerSpace) {
    let base = &ps.base;
    let shown: Vec<String> = ps.carrier.iter().map(|&a| base.show(a)).collect();
    rep.value("points", &shown);
    rep.value("order", order_pairs(&ps.labelled_space()));
    rep.value("order_matches", ps.order_matches);
}

fn finite(x: &Space, what: &str) -> Result<FinPoset> {
    match x {
        Space::Finite(p) => Ok(p.clone()),
        Space::Cofinite => Err(Error::Unsupported(format!("{what} of the cofinite space"))),
    }
}

fn instance_name(path: &std::path::Path) -> String {
    path.display().to_string()
}

/// Runs one command, writing its report to `out`. Returns the exit status:
/// 0 when no theorem check failed, 1 otherwise.
pub fn run_command(cmd: &Command, cfg: &RunConfig, out: &mut dyn Write) -> Result<i32> {
    let caps = &cfg.caps;
    let failures = match cmd {
        Command::Classify { file } => {
            let x = read_space(file)?;
            let mut rep = Report::new("classify", instance_name(file));
            classify_records(&mut rep, &classify(&x, caps)?);
            emit(out, &rep.records, cfg.format)?;
            0
        }
        Command::Families { file } => {
            let x = read_space(file)?;
            let mut rep = Report::new("families", instance_name(file));
            match space::enumerate_families(&x, caps)? {
                space::Families::Finite(f) => {
                    let p = finite(&x, "families")?;
                    let show = |v: &[crate::FinSubset]| -> Vec<String> {
                        v.iter().map(|&a| p.show(a)).collect()
                    };
                    rep.value("closed", show(&f.closed));
                    rep.value("open", show(&f.open));
                    rep.value("irreducible_closed", show(&f.irreducible_closed));
                    rep.value("directed_closures", show(&f.directed_closures));
                    rep.value("point_closures", show(&f.point_closures));
                    rep.value("rudin", show(&f.rudin));
                    rep.value("well_filtered_determined", show(&f.well_filtered_determined));
                    rep.value("compact_saturated", show(&f.compact_saturated));
                    rep.value("supercompact", show(&f.supercompact));
                }
                space::Families::Symbolic(f) => {
                    let v = serde_json::to_value(f).expect("serializable");
                    for (k, v) in v.as_object().expect("struct") {
                        rep.push(k.clone(), Some(v.clone()), None);
                    }
                }
            }
            emit(out, &rep.records, cfg.format)?;
            0
        }
        Command::Powerspace { kind, file } => {
            let p = finite(&read_space(file)?, "a power space")?;
            let mut rep = Report::new("powerspace", instance_name(file));
            match kind {
                PowerKind::Smyth => {
                    let ps = powerspace::smyth(&p, caps)?;
                    power_records(&mut rep, &ps);
                    rep.value("union_map", powerspace::union_map_check(&p, caps)?);
                    let of = powerspace::open_filters_and_phi(&p, caps)?;
                    rep.value("open_filters", of.filters.len());
                    rep.value("phi_order_iso", of.phi_order_iso);
                }
                PowerKind::Hoare => {
                    let ps = powerspace::hoare_all_closed(&p, caps)?;
                    power_records(&mut rep, &ps);
                    let ctx = crate::classify::ctx::FiniteCtx::new(ps.space.clone(), *caps);
                    rep.value("sober", ctx.sober()?.holds);
                }
            }
            emit(out, &rep.records, cfg.format)?;
            0
        }
        Command::Reflect { kind, file } => {
            let x = read_space(file)?;
            let mut rep = Report::new("reflect", instance_name(file));
            let refl = match (kind, &x) {
                (ReflectionKind::Wf, _) => reflect::wf_reflection(&x, caps)?,
                (ReflectionKind::Sober, Space::Finite(p)) => {
                    Reflected::Finite(reflect::sobrification(p, caps)?)
                }
                (ReflectionKind::Sober, Space::Cofinite) => {
                    Reflected::Cofinite(reflect::cofinite_reflection())
                }
            };
            match refl {
                Reflected::Finite(r) => {
                    let p = &r.original;
                    let shown: Vec<String> = r.carrier().iter().map(|&a| p.show(a)).collect();
                    rep.value("points", &shown);
                    rep.value("order", order_pairs(&r.reflected.labelled_space()));
                    rep.value("added_points", r.carrier().len() - p.len());
                    rep.value("eta", &r.eta);
                    rep.value("eta_embedding", r.eta_check.is_embedding());
                    rep.value("homeomorphism", reflect::homeomorphic(p, r.space()));
                }
                Reflected::Cofinite(c) => {
                    let v = serde_json::to_value(c).expect("serializable");
                    for (k, v) in v.as_object().expect("struct") {
                        rep.push(k.clone(), Some(v.clone()), None);
                    }
                }
            }
            emit(out, &rep.records, cfg.format)?;
            0
        }
        Command::Verify { file, ids } => {
            let x = read_space(file)?;
            let sel: Vec<&str> = if ids.is_empty() {
                cfg.suite.iter().map(String::as_str).collect()
            } else {
                ids.iter().map(String::as_str).collect()
            };
            let mut rep = Report::new("verify", instance_name(file));
            for r in verify_theorems(&x, &sel, caps)? {
                rep.theorem(&r);
            }
            let failures = rep.failures;
            rep.value("failures", failures);
            emit(out, &rep.records, cfg.format)?;
            failures
        }
        Command::Search { count, max_n } => search(*count, *max_n, cfg, out)?,
        Command::Theorems => {
            let mut rep = Report::new("theorems", "registry");
            for t in crate::classify::theorems::REGISTRY {
                rep.value(t.id, t.statement);
            }
            emit(out, &rep.records, cfg.format)?;
            0
        }
    };
    Ok(i32::from(failures > 0))
}

/// Search result for one instance.
struct Instance {
    name: String,
    poset: String,
    reports: Result<Vec<TheoremReport>>,
}

/// Checks the suite on `count` random posets with at most `max_n` points.
/// Instances run in parallel; records come out in instance order, followed
/// by the summary. Returns the number of failed checks.
pub fn search(count: usize, max_n: usize, cfg: &RunConfig, out: &mut dyn Write) -> Result<usize> {
    let sel: Vec<&str> = cfg.suite.iter().map(String::as_str).collect();
    for id in &sel {
        crate::classify::theorems::lookup(id)?;
    }
    let corpus = random_corpus(cfg.seed, count, max_n);
    let results: Vec<Instance> = corpus
        .par_iter()
        .enumerate()
        .map(|(i, p)| {
            let x = Space::Finite(p.clone());
            Instance {
                name: format!("random-{i}"),
                poset: to_space_file(&x),
                reports: verify_theorems(&x, &sel, &cfg.caps),
            }
        })
        .collect();
    let mut passes = 0;
    let mut failed = Vec::new();
    let mut errors = Vec::new();
    for inst in &results {
        let mut rep = Report::new("search", inst.name.clone());
        rep.value("poset", inst.poset.trim_end().replace('\n', "; "));
        match &inst.reports {
            Ok(reports) => {
                let count = |v: Verdict| reports.iter().filter(|r| r.verdict == v).count();
                rep.value(
                    "verdicts",
                    json!({
                        "pass": count(Verdict::Pass),
                        "fail": count(Verdict::Fail),
                        "not-applicable": count(Verdict::NotApplicable),
                    }),
                );
                for r in reports.iter().filter(|r| r.verdict == Verdict::Fail) {
                    rep.theorem(r);
                    failed.push(json!({
                        "instance": inst.name,
                        "theorem_id": r.theorem_id,
                        "poset": rep.records[0].value,
                        "witness": r.witness,
                    }));
                }
                if rep.failures == 0 {
                    passes += 1;
                }
            }
            Err(e) => {
                rep.push("error", Some(json!(e.to_string())), None);
                errors.push(json!({"instance": inst.name, "error": e.to_string()}));
            }
        }
        emit(out, &rep.records, cfg.format)?;
    }
    let mut rep = Report::new("search", "summary");
    rep.value(
        "summary",
        json!({
            "seed": cfg.seed,
            "instances": results.len(),
            "passes": passes,
            "failures": failed,
            "errors": errors,
        }),
    );
    emit(out, &rep.records, cfg.format)?;
    Ok(failed.len() + errors.len())
}

/// Entry point shared by the binary and the tests. Returns the exit status:
/// 0 on success, 1 if a theorem check failed, 2 on usage or input errors.
pub fn main_with_args<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = if e.use_stderr() {
                write!(err, "{e}")
            } else {
                write!(out, "{e}")
            };
            return code;
        }
    };
    let result = RunConfig::from_cli(&cli).and_then(|cfg| run_command(&cli.command, &cfg, out));
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}
