//! The `gql` command-line front end.
//!
//! Output is JSON on standard output. Errors are JSON objects
//! `{"error": category, "code": code, "message": text}` on standard error, with
//! exit code 2 for parse and usage errors, 3 for failed domain preconditions
//! and 4 for internal invariant violations.
//!
//! Permutations compose right to left: `(p∘q)(i) = p(q(i))`.

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::census::{census, load_fixtures, BUNDLED_FIXTURES};
use crate::classify::{classify_quotient, sym_power_kind, zariski_obstruction, KodairaKind, QuotientReport, ZariskiVerdict};
use crate::cover::{genus_from_cover, ramification_degree, CoverData, CoverError};
use crate::perm::{max_point_mentioned, parse_generator_list, GroupSpec, PermError, PermGroup};
use crate::quartic::{
    flex_report, residual_eliminant, residual_report, FlexOptions, PlaneCurve, QuarticError,
};

/// Environment variable overriding the default seed.
pub const SEED_VAR: &str = "GQL_SEED";

/// Residual searches stop below this prime.
pub const RESIDUAL_PRIME_LIMIT: u64 = 1000;

#[derive(Parser, Debug)]
#[command(name = "gql", version, about = "Quotients of curve powers, covers and plane-quartic flexes")]
#[command(after_help = "Permutations compose right to left: (p*q)(i) = p(q(i)).")]
pub struct Cli {
    /// Pretty-print JSON output.
    #[arg(long, global = true)]
    pub pretty: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Decide whether C^n/G is of general type.
    Classify(ClassifyArgs),
    /// Check the transposition lemmas over a fixture list of transitive groups.
    Census(CensusArgs),
    /// Riemann-Hurwitz: ramification degree or genus of a cover.
    Rh(RhArgs),
    /// Flexes, residual points and the residual eliminant of a plane quartic.
    Quartic(QuarticArgs),
}

#[derive(Args, Debug)]
pub struct ClassifyArgs {
    /// Group as JSON {"degree": n, "generators": [...]} or comma-separated cycles "(1 2 3 4),(1 3)".
    #[arg(long)]
    pub group: String,
    /// Number of points; defaults to the largest point mentioned.
    #[arg(long)]
    pub degree: Option<usize>,
    #[arg(long)]
    pub genus: u64,
    /// Also report the Kodaira type of Sym^n C.
    #[arg(long)]
    pub sym_power: Option<u64>,
}

#[derive(Args, Debug)]
pub struct CensusArgs {
    /// Fixture file; the bundled transitive groups of degree <= 8 by default.
    #[arg(long)]
    pub fixtures: Option<PathBuf>,
}

#[derive(Args, Debug)]
#[command(group(clap::ArgGroup::new("known").required(true).args(["genus_source", "ramification"])))]
pub struct RhArgs {
    #[arg(long)]
    pub degree: u64,
    #[arg(long)]
    pub genus_base: u64,
    #[arg(long)]
    pub genus_source: Option<u64>,
    #[arg(long)]
    pub ramification: Option<u64>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum QuarticMode {
    Flexes,
    Residuals,
    Eliminant,
}

#[derive(Args, Debug)]
pub struct QuarticArgs {
    pub mode: QuarticMode,
    /// Curve JSON file, or one of the built-in names `fermat`, `klein`.
    #[arg(long)]
    pub curve: String,
    #[arg(long)]
    pub prime: Option<u64>,
    /// Extension degree k of F_{p^k}; by default the smallest holding every flex.
    #[arg(long)]
    pub ext: Option<usize>,
    /// Seed for coordinate changes and field choices; overrides GQL_SEED.
    #[arg(long)]
    pub seed: Option<u64>,
}

/// Exit status and captured output of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Category {
    Usage,
    Domain,
    Internal,
}

impl Category {
    pub fn exit_code(self) -> i32 {
        match self {
            Category::Usage => 2,
            Category::Domain => 3,
            Category::Internal => 4,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliError {
    pub category: Category,
    pub code: &'static str,
    pub message: String,
}

impl CliError {
    fn new(category: Category, code: &'static str, message: impl Into<String>) -> Self {
        CliError {
            category,
            code,
            message: message.into(),
        }
    }

    pub fn to_json(&self) -> String {
        json!({ "error": self.category, "code": self.code, "message": self.message }).to_string()
    }
}

impl From<PermError> for CliError {
    fn from(e: PermError) -> Self {
        use PermError::*;
        let (category, code) = match &e {
            Parse(_) => (Category::Usage, "parse"),
            RepeatedPoint(_) => (Category::Usage, "repeated_point"),
            PointOutOfRange { .. } => (Category::Usage, "point_out_of_range"),
            DegreeTooLarge(_) => (Category::Usage, "degree_too_large"),
            NotBijective => (Category::Usage, "not_bijective"),
            DegreeMismatch { .. } => (Category::Usage, "degree_mismatch"),
            NoGenerators => (Category::Usage, "no_generators"),
            NotTransitive => (Category::Domain, "not_transitive"),
            NotSubgroup => (Category::Domain, "not_subgroup"),
            InvalidPartition(_) => (Category::Domain, "invalid_partition"),
            PartitionNotInvariant { .. } => (Category::Domain, "partition_not_invariant"),
            InvariantViolation(_) => (Category::Internal, "invariant_violation"),
        };
        CliError::new(category, code, e.to_string())
    }
}

impl From<CoverError> for CliError {
    fn from(e: CoverError) -> Self {
        let code = match e {
            CoverError::ZeroDegree => "zero_degree",
            CoverError::NegativeRamification { .. } => "negative_ramification",
            CoverError::Parity(_) => "parity",
            CoverError::NegativeGenus(_) => "negative_genus",
        };
        CliError::new(Category::Domain, code, e.to_string())
    }
}

impl From<QuarticError> for CliError {
    fn from(e: QuarticError) -> Self {
        use QuarticError::*;
        let (category, code) = match &e {
            Parse(_) => (Category::Usage, "parse"),
            ZeroForm => (Category::Usage, "zero_form"),
            NotHomogeneous(_) => (Category::Usage, "not_homogeneous"),
            DegreeTooSmall(_) => (Category::Domain, "degree_too_small"),
            NotQuartic => (Category::Domain, "not_quartic"),
            Singular => (Category::Domain, "singular"),
            PrimeDividesContent(_) => (Category::Domain, "prime_divides_content"),
            NotOnCurve => (Category::Domain, "not_on_curve"),
            SingularPoint => (Category::Domain, "singular_point"),
            LineMissesPoint => (Category::Domain, "line_misses_point"),
            DegenerateLine => (Category::Domain, "degenerate_line"),
            LineInCurve => (Category::Domain, "line_in_curve"),
            NotAFlex => (Category::Domain, "not_a_flex"),
            BadPrime { .. } => (Category::Domain, "bad_prime"),
            FlexesNotRealized { .. } => (Category::Domain, "flexes_not_realized"),
            ChartSearchFailed { .. } => (Category::Domain, "chart_search_failed"),
            InvariantViolation(_) => (Category::Internal, "invariant_violation"),
            Algebra(a) => match a {
                crate::algebra::AlgebraError::NotPrime(_) | crate::algebra::AlgebraError::PrimeTooLarge(_) => {
                    (Category::Domain, "bad_prime")
                }
                _ => (Category::Internal, "algebra"),
            },
        };
        let message = match &e {
            ChartSearchFailed { attempts } => {
                let detail: Vec<String> = attempts.iter().map(|a| format!("{:?}: {}", a.matrix, a.reason)).collect();
                format!("{e}: {}", detail.join("; "))
            }
            _ => e.to_string(),
        };
        CliError::new(category, code, message)
    }
}

/// Parses a group argument: JSON, or cycle lists separated by commas.
pub fn parse_group(text: &str, degree: Option<usize>) -> Result<PermGroup, CliError> {
    let text = text.trim();
    if text.starts_with('{') {
        let spec: GroupSpec =
            serde_json::from_str(text).map_err(|e| CliError::new(Category::Usage, "parse", e.to_string()))?;
        return Ok(spec.build()?);
    }
    let degree = degree
        .or_else(|| max_point_mentioned(text))
        .ok_or_else(|| CliError::new(Category::Usage, "parse", "cannot infer the degree; pass --degree"))?;
    let gens = parse_generator_list(text, degree)?;
    if gens.is_empty() {
        return Ok(PermGroup::trivial(degree));
    }
    Ok(PermGroup::new(gens)?)
}

#[derive(Serialize)]
struct ClassifyOutput {
    #[serde(flatten)]
    report: QuotientReport,
    zariski: ZariskiVerdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    sym_power: Option<SymPower>,
}

#[derive(Serialize)]
struct SymPower {
    n: u64,
    kind: KodairaKind,
}

fn load_curve(arg: &str) -> Result<PlaneCurve, CliError> {
    let path = std::path::Path::new(arg);
    if !path.exists() {
        match arg {
            "fermat" => return Ok(PlaneCurve::fermat_quartic()),
            "klein" => return Ok(PlaneCurve::klein_quartic()),
            _ => {}
        }
    }
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::new(Category::Usage, "io", format!("cannot read {arg}: {e}")))?;
    Ok(PlaneCurve::from_json(&text)?)
}

/// `--seed`, then `GQL_SEED`, then 0.
pub fn resolve_seed(flag: Option<u64>, env: Option<&str>) -> Result<u64, CliError> {
    if let Some(s) = flag {
        return Ok(s);
    }
    match env {
        None => Ok(0),
        Some(v) => v
            .trim()
            .parse()
            .map_err(|_| CliError::new(Category::Usage, "parse", format!("{SEED_VAR}={v:?} is not an integer"))),
    }
}

fn to_json<T: Serialize>(value: &T, pretty: bool) -> String {
    if pretty {
        serde_json::to_string_pretty(value).expect("serializable")
    } else {
        serde_json::to_string(value).expect("serializable")
    }
}

/// A rendered result, plus whether it represents a failed check.
struct Success {
    json: String,
    failure: Option<CliError>,
}

fn execute(cli: &Cli, env_seed: Option<&str>) -> Result<Success, CliError> {
    let pretty = cli.pretty;
    let ok = |json: String| Success { json, failure: None };
    match &cli.command {
        Command::Classify(a) => {
            let g = parse_group(&a.group, a.degree)?;
            let report = classify_quotient(&g, a.genus)?;
            let out = ClassifyOutput {
                zariski: zariski_obstruction(&g, a.genus),
                sym_power: a.sym_power.map(|n| SymPower {
                    n,
                    kind: sym_power_kind(a.genus, n),
                }),
                report,
            };
            Ok(ok(to_json(&out, pretty)))
        }
        Command::Census(a) => {
            let text = match &a.fixtures {
                Some(p) => std::fs::read_to_string(p)
                    .map_err(|e| CliError::new(Category::Usage, "io", format!("cannot read {}: {e}", p.display())))?,
                None => BUNDLED_FIXTURES.to_string(),
            };
            let fixtures = load_fixtures(&text).map_err(|e| CliError::new(Category::Usage, "parse", e.to_string()))?;
            let records = census(&fixtures);
            let failed: Vec<&str> = records.iter().filter(|r| !r.passed).map(|r| r.label.as_str()).collect();
            let failure = (!failed.is_empty()).then(|| {
                CliError::new(
                    Category::Domain,
                    "census_failed",
                    format!("checks failed for {}", failed.join(", ")),
                )
            });
            Ok(Success {
                json: to_json(&records, pretty),
                failure,
            })
        }
        Command::Rh(a) => {
            let data = match (a.genus_source, a.ramification) {
                (Some(gs), None) => CoverData {
                    degree: a.degree,
                    genus_source: gs,
                    genus_base: a.genus_base,
                    ramification_degree: ramification_degree(a.degree, gs, a.genus_base)?,
                },
                (None, Some(r)) => CoverData {
                    degree: a.degree,
                    genus_source: genus_from_cover(a.degree, a.genus_base, r)?,
                    genus_base: a.genus_base,
                    ramification_degree: r,
                },
                _ => {
                    return Err(CliError::new(
                        Category::Usage,
                        "usage",
                        "pass exactly one of --genus-source and --ramification",
                    ))
                }
            };
            Ok(ok(to_json(&data, pretty)))
        }
        Command::Quartic(a) => {
            let curve = load_curve(&a.curve)?;
            let opts = FlexOptions {
                prime: a.prime,
                ext: a.ext,
                seed: resolve_seed(a.seed, env_seed)?,
            };
            match a.mode {
                QuarticMode::Flexes => Ok(ok(to_json(&flex_report(&curve, opts)?, pretty))),
                QuarticMode::Residuals => Ok(ok(to_json(&residual_report(&curve, opts, RESIDUAL_PRIME_LIMIT)?, pretty))),
                QuarticMode::Eliminant => {
                    let (_, report) = residual_eliminant(&curve, opts.seed)?;
                    let failure = (!report.consistent()).then(|| {
                        CliError::new(
                            Category::Internal,
                            "eliminant_mismatch",
                            "the eliminant disagrees with directly computed residuals",
                        )
                    });
                    Ok(Success {
                        json: to_json(&report, pretty),
                        failure,
                    })
                }
            }
        }
    }
}

/// Runs the CLI on `args` (including the program name) with the given value
/// of `GQL_SEED`.
pub fn run_with_env<I, T>(args: I, env_seed: Option<&str>) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            return Outcome {
                code: 0,
                stdout: e.to_string(),
                stderr: String::new(),
            }
        }
        Err(e) => {
            let err = CliError::new(Category::Usage, "usage", e.to_string().trim().to_string());
            return Outcome {
                code: 2,
                stdout: String::new(),
                stderr: err.to_json() + "\n",
            };
        }
    };
    match execute(&cli, env_seed) {
        Ok(Success { json, failure: None }) => Outcome {
            code: 0,
            stdout: json + "\n",
            stderr: String::new(),
        },
        Ok(Success {
            json,
            failure: Some(err),
        }) => Outcome {
            code: err.category.exit_code(),
            stdout: json + "\n",
            stderr: err.to_json() + "\n",
        },
        Err(err) => Outcome {
            code: err.category.exit_code(),
            stdout: String::new(),
            stderr: err.to_json() + "\n",
        },
    }
}

/// Runs the CLI, reading `GQL_SEED` from the environment.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let env = std::env::var(SEED_VAR).ok();
    run_with_env(args, env.as_deref())
}
