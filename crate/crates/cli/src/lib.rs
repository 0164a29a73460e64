//! Command-line front end: reads a polynomial system, runs detection or
//! ranking, and renders a deterministic report.

pub mod parse;
pub mod report;

use std::ffi::OsString;
use std::fs;
use std::io::Read as _;

use clap::{Parser, Subcommand, ValueEnum};
use sagbi_gb::groebner::{universal_gb_counterexample, weight_vectors_realizing_gb};
use sagbi_gb::polyring::homogenize_with_t;
use sagbi_gb::sagbi::{
    hilbert_bound_warning, rank_orders, sagbi_verdicts, RankCriterion, SagbiMethod,
    DEFAULT_HILBERT_BOUND,
};
use sagbi_gb::{extract_weight_vectors, Polynomial};

use crate::parse::parse_system;
use crate::report::{
    ClassEntry, ClassListReport, RankGroupEntry, RankReport, Report, UniversalReport,
};

#[derive(Debug, Parser)]
#[command(
    name = "sagbi-gb",
    version,
    about = "Groebner and SAGBI basis detection over term-order classes"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// System file to read, or '-' for standard input.
    #[arg(long, global = true, default_value = "-")]
    input: String,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// SAGBI criterion for detect-sagbi and universal-sagbi.
    #[arg(long, global = true, value_enum)]
    method: Option<Method>,
    /// Largest degree compared by the Hilbert criterion and the preferable ranking.
    #[arg(long, global = true)]
    hilbert_bound: Option<u32>,
    /// Multiply every input polynomial by a new variable t first.
    #[arg(long, global = true)]
    homogenize_t: bool,
    #[arg(long, global = true, value_enum)]
    criterion: Option<Criterion>,
    /// Worker threads (defaults to the number of cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Subcommand)]
enum Command {
    /// Classes in which the input is a Groebner basis of its ideal.
    DetectGb,
    /// Classes in which the input is a SAGBI basis of its algebra.
    DetectSagbi,
    /// All term-order classes with a certifying weight each.
    Classes,
    /// Whether the input is a Groebner basis for every term order.
    UniversalGb,
    /// Whether the input is a SAGBI basis for every term order.
    UniversalSagbi,
    /// Classes ranked by the preferable or nicer criterion.
    Rank,
}

impl Command {
    fn name(self) -> &'static str {
        match self {
            Command::DetectGb => "detect-gb",
            Command::DetectSagbi => "detect-sagbi",
            Command::Classes => "classes",
            Command::UniversalGb => "universal-gb",
            Command::UniversalSagbi => "universal-sagbi",
            Command::Rank => "rank",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Method {
    Subduction,
    Hilbert,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Criterion {
    Preferable,
    Nicer,
}

/// Everything a process would emit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Outcome {
    fn input_error(message: impl std::fmt::Display) -> Self {
        Self {
            stdout: String::new(),
            stderr: format!("error: {message}\n"),
            code: 2,
        }
    }
}

/// Options after merging file options with flags; flags win.
struct Settings {
    method: Method,
    hilbert_bound: u32,
    homogenize_t: bool,
    criterion: Criterion,
}

fn settings(
    cli: &Cli,
    options: &std::collections::BTreeMap<String, String>,
) -> Result<Settings, String> {
    let mut s = Settings {
        method: Method::Subduction,
        hilbert_bound: DEFAULT_HILBERT_BOUND,
        homogenize_t: false,
        criterion: Criterion::Nicer,
    };
    for (key, value) in options {
        let bad = || format!("invalid value '{value}' for option '{key}'");
        match key.as_str() {
            "method" => s.method = Method::from_str(value, true).map_err(|_| bad())?,
            "hilbert-bound" => s.hilbert_bound = value.parse().map_err(|_| bad())?,
            "homogenize-t" => s.homogenize_t = value.parse().map_err(|_| bad())?,
            "criterion" => s.criterion = Criterion::from_str(value, true).map_err(|_| bad())?,
            // descriptive keys are allowed and ignored
            "name" | "description" => {}
            _ => return Err(format!("unknown option '{key}'")),
        }
    }
    if let Some(m) = cli.method {
        s.method = m;
    }
    if let Some(b) = cli.hilbert_bound {
        s.hilbert_bound = b;
    }
    s.homogenize_t |= cli.homogenize_t;
    if let Some(c) = cli.criterion {
        s.criterion = c;
    }
    Ok(s)
}

fn read_input(path: &str) -> Result<String, String> {
    if path == "-" {
        let mut text = String::new();
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| format!("reading standard input: {e}"))?;
        Ok(text)
    } else {
        fs::read_to_string(path).map_err(|e| format!("{path}: {e}"))
    }
}

/// Runs the program on `args` (including the program name) and reads the
/// input from the file system or standard input.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    run_with_input(args, None)
}

/// Like [`run`], but takes the system text directly when `input` is given.
pub fn run_with_input<I, T>(args: I, input: Option<&str>) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    stdout: String::new(),
                    stderr: rendered,
                    code: 2,
                }
            } else {
                Outcome {
                    stdout: rendered,
                    stderr: String::new(),
                    code: 0,
                }
            };
        }
    };
    let text = match input {
        Some(t) => t.to_string(),
        None => match read_input(&cli.input) {
            Ok(t) => t,
            Err(e) => return Outcome::input_error(e),
        },
    };
    let (file, polys) = match parse_system(&text) {
        Ok(parsed) => parsed,
        Err(e) => {
            let source = if input.is_none() && cli.input != "-" {
                cli.input.as_str()
            } else {
                "<stdin>"
            };
            return Outcome::input_error(format!("{source}: {e}"));
        }
    };
    let settings = match settings(&cli, &file.options) {
        Ok(s) => s,
        Err(e) => return Outcome::input_error(e),
    };
    let polys = if settings.homogenize_t {
        match homogenize_with_t(&polys) {
            Ok(p) => p,
            Err(e) => return Outcome::input_error(e),
        }
    } else {
        polys
    };

    let work = || execute(cli.command, &polys, &settings);
    let result = match cli.jobs {
        Some(0) => return Outcome::input_error("--jobs must be at least 1"),
        Some(n) => match rayon::ThreadPoolBuilder::new().num_threads(n).build() {
            Ok(pool) => pool.install(work),
            Err(e) => return Outcome::input_error(e),
        },
        None => work(),
    };
    match result {
        Ok((report, code)) => Outcome {
            stdout: match cli.format {
                Format::Text => report.to_text(),
                Format::Json => report.to_json(),
            },
            stderr: String::new(),
            code,
        },
        Err(e) => Outcome::input_error(e),
    }
}

fn sagbi_method(settings: &Settings) -> (SagbiMethod, &'static str) {
    match settings.method {
        Method::Subduction => (SagbiMethod::Subduction, "subduction"),
        Method::Hilbert => (
            SagbiMethod::Hilbert {
                bound: settings.hilbert_bound,
            },
            "hilbert",
        ),
    }
}

fn execute(
    command: Command,
    polys: &[Polynomial],
    settings: &Settings,
) -> sagbi_gb::Result<(Report, i32)> {
    let names = polys[0].ring().names().to_vec();
    let entry = |c: &sagbi_gb::OrderClass, basis: Option<bool>| ClassEntry::new(c, &names, basis);
    let name = command.name().to_string();
    let hilbert_warning = |method: SagbiMethod| match method {
        SagbiMethod::Hilbert { bound } => hilbert_bound_warning(polys, bound),
        SagbiMethod::Subduction => Ok(None),
    };

    Ok(match command {
        Command::Classes => {
            let classes = extract_weight_vectors(polys)?;
            let report = ClassListReport {
                command: name,
                variables: names.clone(),
                classes: classes.iter().map(|c| entry(c, None)).collect(),
                method: None,
                bound_warning: None,
            };
            (Report::Classes(report), 0)
        }
        Command::DetectGb => {
            let classes = weight_vectors_realizing_gb(polys)?;
            let code = i32::from(classes.is_empty());
            let report = ClassListReport {
                command: name,
                variables: names.clone(),
                classes: classes.iter().map(|c| entry(c, Some(true))).collect(),
                method: Some("buchberger".into()),
                bound_warning: None,
            };
            (Report::Classes(report), code)
        }
        Command::DetectSagbi => {
            let (method, label) = sagbi_method(settings);
            let all = extract_weight_vectors(polys)?;
            let verdicts = sagbi_verdicts(polys, &all, method)?;
            let classes: Vec<ClassEntry> = all
                .iter()
                .zip(&verdicts)
                .filter(|(_, ok)| **ok)
                .map(|(c, _)| entry(c, Some(true)))
                .collect();
            let code = i32::from(classes.is_empty());
            let report = ClassListReport {
                command: name,
                variables: names.clone(),
                classes,
                method: Some(label.into()),
                bound_warning: hilbert_warning(method)?,
            };
            (Report::Classes(report), code)
        }
        Command::UniversalGb => {
            let checked = extract_weight_vectors(polys)?.len();
            let counterexample = universal_gb_counterexample(polys)?;
            let report = UniversalReport {
                command: name,
                variables: names.clone(),
                universal: counterexample.is_none(),
                classes_checked: checked,
                counterexample: counterexample.as_ref().map(|c| entry(c, Some(false))),
                method: Some("buchberger".into()),
                bound_warning: None,
            };
            (Report::Universal(report), 0)
        }
        Command::UniversalSagbi => {
            let (method, label) = sagbi_method(settings);
            let all = extract_weight_vectors(polys)?;
            let verdicts = sagbi_verdicts(polys, &all, method)?;
            let counterexample = all
                .iter()
                .zip(&verdicts)
                .find(|(_, ok)| !**ok)
                .map(|(c, _)| c);
            let report = UniversalReport {
                command: name,
                variables: names.clone(),
                universal: counterexample.is_none(),
                classes_checked: all.len(),
                counterexample: counterexample.map(|c| entry(c, Some(false))),
                method: Some(label.into()),
                bound_warning: hilbert_warning(method)?,
            };
            (Report::Universal(report), 0)
        }
        Command::Rank => {
            let (criterion, label) = match settings.criterion {
                Criterion::Nicer => (RankCriterion::Nicer, "nicer"),
                Criterion::Preferable => (RankCriterion::Preferable, "preferable"),
            };
            let groups = rank_orders(polys, criterion, settings.hilbert_bound)?;
            let preferable = criterion == RankCriterion::Preferable;
            let report = RankReport {
                command: name,
                variables: names.clone(),
                criterion: label.into(),
                hilbert_bound: preferable.then_some(settings.hilbert_bound),
                groups: groups
                    .iter()
                    .enumerate()
                    .map(|(i, g)| RankGroupEntry::new(i + 1, g, &names))
                    .collect(),
                bound_warning: if preferable {
                    hilbert_bound_warning(polys, settings.hilbert_bound)?
                } else {
                    None
                },
            };
            (Report::Rank(report), 0)
        }
    })
}
