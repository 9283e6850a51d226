//! Command-line front end for `clusterpos`: criteria, point tests, seed
//! mutation and the self-check suite. All file I/O lives here.

pub mod config;
pub mod report;

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use clusterpos::exactalg::{ExactMatrix, MultiPoly, Rational};
use clusterpos::flagpos::{full_flag_test, partial_flag_criterion, seed_test, CriterionReport, Verdict};
use clusterpos::repmat::{Group, GroupElement};
use clusterpos::rootsys::Family;
use clusterpos::seeds::{symbolic_seed, Coordinates, QuiverRule, Seed, SizeCap};
use clusterpos::selfcheck;
use serde::Serialize;

use config::{Format, Job, JobConfig, Mode};
use report::{verdict_name, PointInput, ProvenanceJson, ReportJson};

pub const EXIT_ACCEPTED: i32 = 0;
pub const EXIT_REJECTED: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_SINGULAR: i32 = 3;
pub const EXIT_DEFECT: i32 = 4;

#[derive(Debug)]
pub enum CliError {
    Input(String),
    Lib(clusterpos::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        use clusterpos::Error::*;
        match self {
            CliError::Input(_) => EXIT_INPUT,
            CliError::Lib(SingularEvaluation { .. }) => EXIT_SINGULAR,
            CliError::Lib(InexactDivision { .. } | DivisionByZeroPoly | TooLarge(_) | VariableSetMismatch) => EXIT_DEFECT,
            CliError::Lib(_) => EXIT_INPUT,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Input(s) => write!(f, "{s}"),
            CliError::Lib(e) => write!(f, "{e}"),
        }
    }
}

impl From<clusterpos::Error> for CliError {
    fn from(e: clusterpos::Error) -> Self {
        CliError::Lib(e)
    }
}

#[derive(Debug, Parser)]
#[command(name = "clusterpos", version, about = "Total positivity criteria for flag varieties of types A and D")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the criterion functions of a seed, one inequality per line.
    Criteria(JobArgs),
    /// Decide positivity of a point read from a JSON file.
    Test {
        #[command(flatten)]
        job: JobArgs,
        /// `{"matrix": [["1","1/2",...],...]}` or `{"params": ["1",...]}`.
        #[arg(long)]
        input: PathBuf,
    },
    /// Print the seed reached by a mutation sequence.
    Mutate(JobArgs),
    /// Run the acceptance suite.
    Selfcheck {
        /// Run only these checks.
        #[arg(long, value_delimiter = ',')]
        only: Vec<usize>,
        #[arg(long, default_value_t = selfcheck::Options::default().rng_seed)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Build seeds with the same-letter arrows dropped.
        #[arg(long, hide = true)]
        corrupt_quiver: bool,
    },
}

#[derive(Debug, Clone, Args)]
pub struct JobArgs {
    /// A, D or E.
    #[arg(long)]
    pub family: Option<String>,
    #[arg(long)]
    pub rank: Option<usize>,
    /// Parabolic subset, e.g. `1,3`.
    #[arg(long, value_delimiter = ',')]
    pub k: Option<Vec<usize>>,
    /// Reduced word for w0 adapted to K; derived when absent.
    #[arg(long, value_delimiter = ',')]
    pub word: Option<Vec<usize>>,
    #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
    pub mutations: Option<Vec<i32>>,
    /// Expand functions as polynomials.
    #[arg(long)]
    pub symbolic: bool,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    /// JSON file with job settings.
    #[arg(long)]
    pub config: Option<PathBuf>,
}

impl JobArgs {
    fn flags(&self) -> JobConfig {
        JobConfig {
            family: self.family.clone(),
            rank: self.rank,
            k: self.k.clone(),
            word: self.word.clone(),
            mutations: self.mutations.clone(),
            mode: self.symbolic.then_some(Mode::Symbolic),
            format: self.format,
        }
    }

    /// Config file, then inlined settings, then flags.
    fn job(&self, inline: JobConfig) -> Result<Job, CliError> {
        let base = match &self.config {
            Some(path) => parse_json::<JobConfig>(path)?,
            None => JobConfig::default(),
        };
        base.merge(inline).merge(self.flags()).resolve()
    }
}

fn parse_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

/// Rendered output plus exit status.
pub struct Output {
    pub text: String,
    pub code: i32,
}

pub fn run(cli: Cli) -> Result<Output, CliError> {
    match cli.command {
        Command::Criteria(args) => criteria(&args.job(JobConfig::default())?),
        Command::Test { job, input } => {
            let point: PointInput = parse_json(&input)?;
            let job = job.job(point.config.clone())?;
            test(&job, &point)
        }
        Command::Mutate(args) => mutate(&args.job(JobConfig::default())?),
        Command::Selfcheck {
            only,
            seed,
            format,
            corrupt_quiver,
        } => {
            let opts = selfcheck::Options {
                rule: if corrupt_quiver {
                    QuiverRule::DropSameLetterArrows
                } else {
                    QuiverRule::ExtendedWord
                },
                rng_seed: seed,
            };
            run_selfcheck(&only, &opts, format)
        }
    }
}

fn seed_for(job: &Job) -> Result<Seed, CliError> {
    Ok(partial_flag_criterion(&job.rs, &job.word, &job.k, &job.mutations)?)
}

/// Polynomials for every variable: matrix entries of `N_K` in type A,
/// factorization parameters otherwise.
fn polynomials(seed: &Seed) -> Result<Vec<(i32, MultiPoly)>, CliError> {
    let coords = if seed.root_system().family() == Family::A {
        Coordinates::MatrixNK
    } else {
        Coordinates::Params
    };
    Ok(symbolic_seed(seed, coords, SizeCap::default())?)
}

fn provenance_line(seed: &Seed) -> String {
    let list = |xs: Vec<String>| if xs.is_empty() { "-".to_string() } else { xs.join(",") };
    format!(
        "# {}  K = {{{}}}  word {}  mutations {}",
        seed.root_system().name(),
        seed.k().iter().map(ToString::to_string).collect::<Vec<_>>().join(","),
        list(seed.word().letters().iter().map(ToString::to_string).collect()),
        list(seed.history().iter().map(ToString::to_string).collect()),
    )
}

fn seed_provenance(seed: &Seed) -> ProvenanceJson {
    ProvenanceJson {
        root_system: seed.root_system().name(),
        word: seed.word().0.clone(),
        k: seed.k().to_vec(),
        mutations: seed.history().to_vec(),
    }
}

#[derive(Serialize)]
struct FunctionEntry {
    vertex: i32,
    frozen: bool,
    expression: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    polynomial: Option<String>,
}

#[derive(Serialize)]
struct CriteriaJson {
    functions: Vec<FunctionEntry>,
    provenance: ProvenanceJson,
}

#[derive(Serialize)]
struct SeedJson {
    vertices: Vec<FunctionEntry>,
    arrows: Vec<(i32, i32, u32)>,
    provenance: ProvenanceJson,
}

fn entries(seed: &Seed, symbolic: bool) -> Result<Vec<FunctionEntry>, CliError> {
    let polys = if symbolic { Some(polynomials(seed)?) } else { None };
    Ok(seed
        .variables()
        .into_iter()
        .map(|(v, var)| FunctionEntry {
            vertex: v,
            frozen: seed.quiver().frozen().contains(&v),
            expression: var.to_string(),
            polynomial: polys
                .as_ref()
                .and_then(|ps| ps.iter().find(|(w, _)| *w == v).map(|(_, p)| p.to_string())),
        })
        .collect())
}

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("report types serialize")
}

pub fn criteria(job: &Job) -> Result<Output, CliError> {
    let seed = seed_for(job)?;
    let functions = entries(&seed, job.mode == Mode::Symbolic)?;
    let text = match job.format {
        Format::Json => to_json(&CriteriaJson {
            functions,
            provenance: seed_provenance(&seed),
        }),
        Format::Text => {
            let mut out = provenance_line(&seed);
            for f in &functions {
                let lhs = f.polynomial.as_ref().unwrap_or(&f.expression);
                write!(out, "\n{lhs} > 0    [vertex {}", f.vertex).unwrap();
                if f.polynomial.is_some() {
                    write!(out, ": {}", f.expression).unwrap();
                }
                out.push(']');
            }
            out
        }
    };
    Ok(Output { text, code: 0 })
}

fn point_element(job: &Job, point: &PointInput) -> Result<GroupElement<Rational>, CliError> {
    let group = Group::new(job.rs.clone());
    match (&point.matrix, &point.params) {
        (Some(rows), None) => {
            let rows = rows
                .iter()
                .map(|r| r.iter().map(|x| x.value()).collect::<Result<Vec<_>, _>>())
                .collect::<Result<Vec<_>, _>>()?;
            Ok(GroupElement::from_matrix(&group, ExactMatrix::from_rows(&(), rows)?)?)
        }
        (None, Some(params)) => {
            let params = params.iter().map(|x| x.value()).collect::<Result<Vec<_>, _>>()?;
            Ok(GroupElement::from_params(&group, &(), &job.word, &params)?)
        }
        _ => Err(CliError::Input("input needs exactly one of \"matrix\" or \"params\"".into())),
    }
}

pub fn report_for(job: &Job, point: &PointInput) -> Result<CriterionReport, CliError> {
    let element = point_element(job, point)?;
    if job.k.is_empty() && job.mutations.is_empty() {
        Ok(full_flag_test(&Group::new(job.rs.clone()), &job.word, &element)?)
    } else {
        Ok(seed_test(&seed_for(job)?, &element)?)
    }
}

pub fn render_report(report: &CriterionReport, format: Format) -> String {
    match format {
        Format::Json => to_json(&ReportJson::from(report)),
        Format::Text => {
            let p = &report.provenance;
            let mut out = format!("verdict: {}", verdict_name(report.verdict));
            let show = |r: &clusterpos::flagpos::Record| {
                let v = r.value.as_ref().map_or("singular".to_string(), ToString::to_string);
                match r.vertex {
                    Some(x) => format!("vertex {x}  {} = {v}", r.label),
                    None => format!("{} = {v}", r.label),
                }
            };
            if let Some(w) = &report.witness {
                write!(out, "\nwitness: {}", show(w)).unwrap();
            }
            for r in &report.records {
                write!(out, "\n  {} {}", if r.positive() { "+" } else { "!" }, show(r)).unwrap();
            }
            write!(
                out,
                "\n# {}  K = {:?}  word {:?}  mutations {:?}",
                p.root_system, p.k, p.word.0, p.mutations
            )
            .unwrap();
            out
        }
    }
}

pub fn test(job: &Job, point: &PointInput) -> Result<Output, CliError> {
    let report = report_for(job, point)?;
    let code = match report.verdict {
        Verdict::Accepted => EXIT_ACCEPTED,
        Verdict::Rejected => EXIT_REJECTED,
        Verdict::Singular => EXIT_SINGULAR,
    };
    Ok(Output {
        text: render_report(&report, job.format),
        code,
    })
}

pub fn mutate(job: &Job) -> Result<Output, CliError> {
    let seed = seed_for(job)?;
    let vertices = entries(&seed, job.mode == Mode::Symbolic)?;
    let arrows = seed.quiver().arrows();
    let text = match job.format {
        Format::Json => to_json(&SeedJson {
            vertices,
            arrows,
            provenance: seed_provenance(&seed),
        }),
        Format::Text => {
            let mut out = provenance_line(&seed);
            for v in &vertices {
                let tag = if v.frozen { "frozen " } else { "mutable" };
                write!(out, "\n{tag} {:>4}  {}", v.vertex, v.expression).unwrap();
                if let Some(p) = &v.polynomial {
                    write!(out, "  =  {p}").unwrap();
                }
            }
            out.push_str("\narrows:");
            for (a, b, m) in &arrows {
                write!(out, "\n  {a} -> {b}").unwrap();
                if *m > 1 {
                    write!(out, " (x{m})").unwrap();
                }
            }
            out
        }
    };
    Ok(Output { text, code: 0 })
}

#[derive(Serialize)]
struct CheckJson {
    id: usize,
    title: &'static str,
    passed: bool,
    detail: String,
    seconds: f64,
    budget_seconds: u64,
}

pub fn run_selfcheck(only: &[usize], opts: &selfcheck::Options, format: Format) -> Result<Output, CliError> {
    let ids = if only.is_empty() { selfcheck::check_ids() } else { only.to_vec() };
    let mut results = Vec::new();
    for id in ids {
        results.push(selfcheck::run(id, opts).ok_or_else(|| CliError::Input(format!("no check numbered {id}")))?);
    }
    let passed = results.iter().all(|r| r.passed);
    let text = match format {
        Format::Json => to_json(
            &results
                .iter()
                .map(|r| CheckJson {
                    id: r.id,
                    title: r.title,
                    passed: r.passed,
                    detail: r.detail.clone(),
                    seconds: r.elapsed.as_secs_f64(),
                    budget_seconds: r.budget.as_secs(),
                })
                .collect::<Vec<_>>(),
        ),
        Format::Text => {
            let total: f64 = results.iter().map(|r| r.elapsed.as_secs_f64()).sum();
            let mut out: Vec<String> = results.iter().map(ToString::to_string).collect();
            out.push(format!(
                "{} of {} checks passed in {total:.3}s",
                results.iter().filter(|r| r.passed).count(),
                results.len()
            ));
            out.join("\n")
        }
    };
    Ok(Output {
        text,
        code: if passed { 0 } else { 1 },
    })
}
