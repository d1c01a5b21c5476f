//! `gag`: inspect finite Γ-AG-groupoids from the command line.

mod commands;
mod input;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use gag_core::{AlgebraError, Filter, TheoremId};

pub const EXIT_OK: u8 = 0;
pub const EXIT_FAIL: u8 = 2;
pub const EXIT_GUARD: u8 = 3;
pub const EXIT_USAGE: u8 = 64;
pub const EXIT_DATA: u8 = 65;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Data(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("output: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Data(_) | CliError::Algebra(_) | CliError::Io(_) => EXIT_DATA,
        }
    }
}

#[derive(Parser, Debug)]
#[command(
    name = "gag",
    version,
    about = "Check, explore and enumerate finite Γ-AG-groupoids",
    after_help = "MODEL is `@paper-example`, a file path, `-` for stdin, or inline model text.\n\
                  The GAG_SWEEP_CAP environment variable overrides the subset-sweep cap (default 12).\n\n\
                  Example:\n  gag check @paper-example"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct ModelArgs {
    /// Model to read, e.g. `gag check @paper-example` or `gag check model.gag`.
    #[arg(value_name = "MODEL")]
    model: String,
    /// Structured JSON output, e.g. `gag check @paper-example --json`.
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decide the four laws and list left identities (exit 3 unless left invertive).
    #[command(after_help = "Example:\n  gag check @paper-example")]
    Check(ModelArgs),
    /// List the subsets of an ideal kind, or generated ideals.
    #[command(
        after_help = "Examples:\n  gag ideals @paper-example --kind two-sided\n  \
                            gag ideals @paper-example --kind all\n  \
                            gag ideals @paper-example --generated-from c\n  \
                            gag ideals @paper-example --kind left --dot"
    )]
    Ideals(IdealsArgs),
    /// Show the least intra-regularity witness of every element.
    #[command(after_help = "Example:\n  gag intra @paper-example")]
    Intra(ModelArgs),
    /// Run the theorem checks (exit 2 on a failure, 3 when every check is skipped).
    #[command(after_help = "Examples:\n  gag verify @paper-example\n  \
                            gag verify @paper-example --theorem KI --theorem IJ --json")]
    Verify(VerifyArgs),
    /// Enumerate models up to isomorphism, or hunt for a theorem counterexample.
    #[command(
        after_help = "Examples:\n  gag search --order 2 --gammas 1 --axiom ag\n  \
                            gag search --order 3 --gammas 1 --axiom agss --filter intra-regular --json\n  \
                            gag search --order 3 --gammas 1 --axiom agss --find-counterexample II"
    )]
    Search(SearchArgs),
    /// Print the canonical representative of a model's isomorphism class.
    #[command(after_help = "Example:\n  gag canon @paper-example")]
    Canon(ModelArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum KindArg {
    All,
    Subgroupoid,
    Left,
    Right,
    TwoSided,
    Bi,
    Gbi,
    Interior,
    Quasi,
    OneTwo,
}

#[derive(Args, Debug)]
struct IdealsArgs {
    #[command(flatten)]
    model: ModelArgs,
    /// Ideal kind to list, e.g. `gag ideals @paper-example --kind bi`.
    #[arg(long, value_enum, default_value = "all")]
    kind: KindArg,
    /// Elements to generate left, right and two-sided ideals from, without a
    /// subset sweep, e.g. `gag ideals @paper-example --generated-from a,c`.
    #[arg(long, value_name = "ELEMENTS", value_delimiter = ',', num_args = 1..)]
    generated_from: Option<Vec<String>>,
    /// Emit the containment diagram as Graphviz DOT, e.g. `gag ideals @paper-example --kind left --dot`.
    #[arg(long, conflicts_with = "generated_from")]
    dot: bool,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[command(flatten)]
    model: ModelArgs,
    /// Theorem to check (repeatable; all when omitted), e.g. `gag verify @paper-example --theorem KI`.
    #[arg(long = "theorem", value_name = "ID", value_parser = parse_theorem)]
    theorems: Vec<TheoremId>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum AxiomArg {
    /// Left invertive law only.
    Ag,
    /// Left invertive and AG** laws.
    Agss,
}

#[derive(Args, Debug)]
struct SearchArgs {
    /// Number of elements, e.g. `gag search --order 3 --gammas 1`.
    #[arg(long)]
    order: usize,
    /// Number of operators, e.g. `gag search --order 2 --gammas 2`.
    #[arg(long, default_value_t = 1)]
    gammas: usize,
    /// Required laws, e.g. `gag search --order 3 --axiom agss`.
    #[arg(long, value_enum, default_value = "ag")]
    axiom: AxiomArg,
    /// Keep only some models, e.g. `gag search --order 3 --axiom agss --filter intra-regular`.
    #[arg(long, default_value = "any", value_parser = parse_filter)]
    filter: Filter,
    /// Hunt for a model failing this theorem, e.g. `gag search --order 3 --axiom agss --find-counterexample II`.
    #[arg(long, value_name = "ID", value_parser = parse_theorem)]
    find_counterexample: Option<TheoremId>,
    /// Keep at most this many models, e.g. `gag search --order 3 --limit 5`.
    #[arg(long)]
    limit: Option<usize>,
    /// Stop after this many seconds, e.g. `gag search --order 5 --time-budget 10`.
    #[arg(long, value_name = "SECONDS")]
    time_budget: Option<f64>,
    /// Worker threads; output does not depend on it, e.g. `gag search --order 4 --workers 4`.
    #[arg(long, default_value_t = default_workers())]
    workers: usize,
    /// Structured JSON output, e.g. `gag search --order 2 --json`.
    #[arg(long)]
    json: bool,
}

fn default_workers() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get())
}

fn parse_theorem(s: &str) -> Result<TheoremId, String> {
    s.parse().map_err(|e: gag_core::theorems::UnknownTheorem| {
        let ids: Vec<_> = TheoremId::ALL.iter().map(|t| t.as_str()).collect();
        format!("{e}; expected one of {}", ids.join(", "))
    })
}

fn parse_filter(s: &str) -> Result<Filter, String> {
    s.parse()
}

fn run(cli: Cli) -> Result<u8, CliError> {
    let mut out = std::io::stdout().lock();
    match cli.command {
        Command::Check(a) => commands::check(&mut out, &a.model, a.json),
        Command::Ideals(a) => {
            let kind = match a.kind {
                KindArg::All => None,
                KindArg::Subgroupoid => Some(gag_core::IdealKind::Subgroupoid),
                KindArg::Left => Some(gag_core::IdealKind::Left),
                KindArg::Right => Some(gag_core::IdealKind::Right),
                KindArg::TwoSided => Some(gag_core::IdealKind::TwoSided),
                KindArg::Bi => Some(gag_core::IdealKind::Bi),
                KindArg::Gbi => Some(gag_core::IdealKind::GeneralizedBi),
                KindArg::Interior => Some(gag_core::IdealKind::Interior),
                KindArg::Quasi => Some(gag_core::IdealKind::Quasi),
                KindArg::OneTwo => Some(gag_core::IdealKind::OneTwo),
            };
            commands::ideals(
                &mut out,
                &a.model.model,
                kind,
                a.generated_from.as_deref(),
                a.dot,
                a.model.json,
            )
        }
        Command::Intra(a) => commands::intra(&mut out, &a.model, a.json),
        Command::Verify(a) => commands::verify(&mut out, &a.model.model, &a.theorems, a.model.json),
        Command::Search(a) => {
            if a.workers == 0 {
                return Err(CliError::Usage("--workers must be at least 1".into()));
            }
            let axioms = match a.axiom {
                AxiomArg::Ag => gag_core::Axioms::AG,
                AxiomArg::Agss => gag_core::Axioms::AG_STAR_STAR,
            };
            let mut spec = gag_core::SearchSpec::new(a.order, a.gammas, axioms)
                .filter(a.filter)
                .workers(a.workers);
            spec.limit = a.limit;
            spec.time_budget = match a.time_budget {
                Some(s) if !(s.is_finite() && s >= 0.0) => {
                    return Err(CliError::Usage(
                        "--time-budget must be a non-negative number".into(),
                    ))
                }
                Some(s) => Some(std::time::Duration::from_secs_f64(s)),
                None => None,
            };
            commands::search(&mut out, &spec, a.find_counterexample, a.json)
        }
        Command::Canon(a) => commands::canon(&mut out, &a.model, a.json),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
