//! `strongreal` command line.
//!
//! Exit status: 0 success, 1 brute force disagrees with the classifier,
//! 2 usage or parse error, 3 resource limit.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};

use strongreal::classifier::{classify_str, item_text, NameError, Outcome, SimpleGroupName};
use strongreal::constructions::{BuildError, GroupSpec};
use strongreal::groups::{Group, DEFAULT_CAP};
use strongreal::paperchecks::{self, CheckError, CheckReport};
use strongreal::reality::group_strong_reality;
use strongreal::report::{Report, ReportBody, ReportConfig, SERIALIZATION};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INCONSISTENT: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;

/// Groups above this order are only built with `--extended`.
pub const DESK_ORDER_LIMIT: usize = 1_000_000;

const CAP_ENV: &str = "STRONGREAL_CAP";

#[derive(Debug, Parser)]
#[command(name = "strongreal", version, about = "Brute-force strong reality checks for finite groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, clap::Args)]
struct BuildArgs {
    /// Closure cap; overrides STRONGREAL_CAP.
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    cap: Option<u64>,
    /// Allow groups beyond desk scale (order above one million).
    #[arg(long)]
    extended: bool,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Look a simple group name up in the strongly real list.
    Classify { name: String },
    /// Enumerate a group, decide strong reality per class and emit a JSON report.
    Verify {
        spec: String,
        #[arg(long)]
        report: Option<PathBuf>,
        #[command(flatten)]
        build: BuildArgs,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        workers: Option<u64>,
        /// Simple group name to cross-check against, e.g. for `perm:` specs.
        #[arg(long)]
        name: Option<String>,
    },
    /// Re-run one of the explicit identity or lemma checks.
    CheckPaper {
        #[arg(long = "case", value_enum)]
        case: CheckCase,
        #[arg(long)]
        q: Option<u64>,
        #[arg(long)]
        group: Option<String>,
        #[command(flatten)]
        build: BuildArgs,
    },
    /// Print the order and conjugacy class table.
    Info {
        spec: String,
        #[command(flatten)]
        build: BuildArgs,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CheckCase {
    Sl3,
    Su3,
    Param,
    Lemma23,
    Klein4,
}

struct Failure {
    status: i32,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Failure {
        Failure { status: EXIT_USAGE, message: message.into() }
    }
}

impl From<BuildError> for Failure {
    fn from(e: BuildError) -> Failure {
        let status = if e.is_resource() { EXIT_RESOURCE } else { EXIT_USAGE };
        Failure { status, message: e.to_string() }
    }
}

impl From<NameError> for Failure {
    fn from(e: NameError) -> Failure {
        Failure::usage(e.to_string())
    }
}

impl From<CheckError> for Failure {
    fn from(e: CheckError) -> Failure {
        match e {
            CheckError::Build(b) => b.into(),
            other => Failure::usage(other.to_string()),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Failure {
        Failure::usage(e.to_string())
    }
}

impl BuildArgs {
    fn cap(&self) -> Result<usize, Failure> {
        let cap = match self.cap {
            Some(c) => c as usize,
            None => match std::env::var(CAP_ENV) {
                Ok(v) => match v.trim().parse::<usize>() {
                    Ok(c) if c >= 1 => c,
                    _ => return Err(Failure::usage(format!("{CAP_ENV} must be a positive integer, got {v:?}"))),
                },
                Err(_) => DEFAULT_CAP,
            },
        };
        Ok(if self.extended { cap } else { cap.min(DESK_ORDER_LIMIT) })
    }

    fn build(&self, spec: &str) -> Result<(GroupSpec, Group, usize), Failure> {
        let parsed = GroupSpec::parse(spec)?;
        let cap = self.cap()?;
        let group = parsed.build(cap).map_err(|e| {
            let mut f = Failure::from(e);
            if f.status == EXIT_RESOURCE && !self.extended && cap == DESK_ORDER_LIMIT {
                f.message.push_str(" (pass --extended for groups above desk scale)");
            }
            f
        })?;
        Ok((parsed, group, cap))
    }
}

/// Parses `args` (including the program name) and runs the subcommand.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let status = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { write!(err, "{text}") } else { write!(out, "{text}") };
            return status;
        }
    };
    match dispatch(cli.command, out) {
        Ok(status) => status,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.status
        }
    }
}

fn dispatch(command: Command, out: &mut dyn Write) -> Result<i32, Failure> {
    match command {
        Command::Classify { name } => classify_cmd(&name, out),
        Command::Verify { spec, report, build, workers, name } => {
            let workers = workers.map(|w| w as usize).unwrap_or_else(default_workers);
            verify_cmd(&spec, report, &build, workers, name.as_deref(), out)
        }
        Command::CheckPaper { case, q, group, build } => check_cmd(case, q, group.as_deref(), &build, out),
        Command::Info { spec, build } => info_cmd(&spec, &build, out),
    }
}

fn default_workers() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get())
}

fn classify_cmd(name: &str, out: &mut dyn Write) -> Result<i32, Failure> {
    let verdict = classify_str(name)?;
    if verdict.outcome == Outcome::UnknownName {
        return Err(Failure::usage(format!("unknown group name {name:?}")));
    }
    match verdict.outcome.item() {
        Some(item) => writeln!(out, "{}, item ({item})", verdict.outcome.label())?,
        None => writeln!(out, "{}", verdict.outcome.label())?,
    }
    if let Some(n) = verdict.normalized {
        writeln!(out, "normalized: {n}")?;
    }
    if let Some(item) = verdict.outcome.item() {
        writeln!(out, "list entry: {}", item_text(item))?;
    }
    writeln!(out, "{}", verdict.justification)?;
    Ok(EXIT_OK)
}

fn verify_cmd(
    spec: &str,
    report_path: Option<PathBuf>,
    build: &BuildArgs,
    workers: usize,
    name: Option<&str>,
    out: &mut dyn Write,
) -> Result<i32, Failure> {
    let start = Instant::now();
    let (parsed, group, cap) = build.build(spec)?;
    let simple: Option<SimpleGroupName> = match name {
        Some(n) => Some(SimpleGroupName::parse(n)?),
        None => parsed.simple_name(),
    };
    let label = name.map_or_else(|| parsed.to_string(), str::to_string);
    let reality = group_strong_reality(&group, &label, workers);
    let checks = vec![paperchecks::check_klein_four(&group)];
    let config = ReportConfig { cap, extended: build.extended, serialization: SERIALIZATION };
    let body = ReportBody::new(&group, &parsed.to_string(), &reality, simple, config, checks);
    let consistent = body.consistent;
    let report = Report::new(body, start.elapsed().as_millis() as u64, workers);
    match report_path {
        Some(path) => {
            std::fs::write(&path, report.to_json())
                .map_err(|e| Failure::usage(format!("cannot write {}: {e}", path.display())))?;
            let b = &report.body;
            writeln!(out, "group: {} (order {}, {} classes)", b.group.name, b.group.order, b.group.num_classes)?;
            writeln!(out, "strongly real: {}", b.strongly_real)?;
            for c in b.classes.iter().filter(|c| !c.strongly_real) {
                writeln!(out, "  failing class: order {}, size {}, real {}", c.rep_order, c.class_size, c.real)?;
            }
            match &b.classifier {
                Some(v) => writeln!(out, "classifier: {} (consistent: {})", v.verdict, b.consistent)?,
                None => writeln!(out, "classifier: not applicable")?,
            }
            writeln!(out, "report: {}", path.display())?;
        }
        None => write!(out, "{}", report.to_json())?,
    }
    Ok(if consistent { EXIT_OK } else { EXIT_INCONSISTENT })
}

fn check_cmd(
    case: CheckCase,
    q: Option<u64>,
    group: Option<&str>,
    build: &BuildArgs,
    out: &mut dyn Write,
) -> Result<i32, Failure> {
    let need_q = || q.ok_or_else(|| Failure::usage("--q is required for this case"));
    let report: CheckReport = match case {
        CheckCase::Sl3 => paperchecks::check_sl3_case(need_q()?)?,
        CheckCase::Su3 => paperchecks::check_su3_case(need_q()?)?,
        CheckCase::Param => paperchecks::check_unipotent_parametrization(need_q()?)?,
        CheckCase::Lemma23 => paperchecks::check_lemma2_3(need_q()?)?,
        CheckCase::Klein4 => {
            let spec = group.ok_or_else(|| Failure::usage("--group is required for klein4"))?;
            let (_, g, _) = build.build(spec)?;
            paperchecks::check_klein_four(&g)
        }
    };
    writeln!(out, "{}", serde_json::to_string_pretty(&report).expect("check report serializes"))?;
    Ok(EXIT_OK)
}

fn info_cmd(spec: &str, build: &BuildArgs, out: &mut dyn Write) -> Result<i32, Failure> {
    let (parsed, group, _) = build.build(spec)?;
    let classes = group.conjugacy_classes();
    writeln!(out, "{parsed}: order {}, {} classes", group.order(), classes.len())?;
    writeln!(out, "{:>5} {:>6} {:>10}  representative", "class", "order", "size")?;
    for (i, c) in classes.iter().enumerate() {
        let order = group.element_order(c.rep_index);
        writeln!(out, "{i:>5} {order:>6} {:>10}  {}", c.size, c.representative.to_text())?;
    }
    Ok(EXIT_OK)
}
