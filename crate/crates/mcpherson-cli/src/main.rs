//! Batch front end: graph ingestion, family generation, analytics tables,
//! and greedy-versus-exact scans, with deterministic text or JSON output.

mod render;

use std::fmt;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use mcpherson::engine::{
    self, exact_upsilon_star_with_limit, exact_upsilon_with_limit, greedy_mcpherson,
    EngineError, TieBreakPolicy, DEFAULT_EXACT_LIMIT, DEFAULT_SEQUENCE_LIMIT,
};
use mcpherson::enumerate::{all_labeled_graphs, mask_of_graph};
use mcpherson::families::{self, jaco, FamilySpec, PlatonicSolid};
use mcpherson::graph::SimpleGraph;
use mcpherson::io::{parse_edge_list, write_edge_list};

const SOLVER_LIMIT_VAR: &str = "MCPHERSON_SOLVER_LIMIT";

#[derive(Parser)]
#[command(
    name = "mcpherson",
    version,
    about = "Vertex-explosion calculus on simple graphs",
    after_help = "Exit codes: 0 success, 2 invalid flags, 3 input parse error, 4 solver limit.\n\
                  The environment variable MCPHERSON_SOLVER_LIMIT caps the solvers' vertex counts."
)]
struct Cli {
    /// Report format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Compute explosion counts, witness, and traces for an edge-list file.
    Compute {
        /// Edge-list file: header `n m`, then `m` lines `u v`.
        file: PathBuf,
        /// Skip the exact solvers and report only the greedy run.
        #[arg(long)]
        greedy_only: bool,
    },
    /// Generate a family graph as a canonical edge list.
    Gen {
        #[command(subcommand)]
        family: FamilyCommand,
    },
    /// Emit analytics rows for the recursive arc construction, n = 3..=n_max.
    JacoTable { n_max: u32 },
    /// Scan the out-degree/upsilon uniqueness biconditional over 3..=n_max.
    Conjecture { n_max: u32 },
    /// Compare greedy runs against the exact minimum over many instances.
    Scan(ScanArgs),
}

#[derive(Args)]
struct GenOpts {
    /// Append the closed-form and exact counts as `#` comment lines.
    #[arg(long)]
    upsilon: bool,
    /// Write to this file instead of stdout.
    #[arg(long, short)]
    output: Option<PathBuf>,
}

#[derive(Subcommand)]
enum FamilyCommand {
    /// Path on n vertices.
    Path {
        n: u32,
        #[command(flatten)]
        opts: GenOpts,
    },
    /// Cycle on n >= 3 vertices.
    Cycle {
        n: u32,
        #[command(flatten)]
        opts: GenOpts,
    },
    /// Complete graph on n vertices.
    Complete {
        n: u32,
        #[command(flatten)]
        opts: GenOpts,
    },
    /// Edgeless graph on n vertices.
    Null {
        n: u32,
        #[command(flatten)]
        opts: GenOpts,
    },
    /// Complete graph on even n minus the matching (1,2) (3,4) ...
    CompleteMinusMatching {
        n: u32,
        #[command(flatten)]
        opts: GenOpts,
    },
    /// Complete multipartite graph; parts as comma-separated sizes, e.g. 2,3,4.
    Multipartite {
        parts: String,
        #[command(flatten)]
        opts: GenOpts,
    },
    /// Underlying graph of the recursive arc construction on n vertices.
    Jaco {
        n: u32,
        #[command(flatten)]
        opts: GenOpts,
    },
    /// Platonic skeleton: tetrahedron, octahedron, cube, icosahedron, dodecahedron.
    Platonic {
        name: String,
        #[command(flatten)]
        opts: GenOpts,
    },
}

#[derive(Args)]
struct ScanArgs {
    /// Scan every labeled graph on this many vertices (at most 7).
    #[arg(long, conflicts_with_all = ["random", "max_n"])]
    all_n: Option<u32>,
    /// Scan this many seeded random instances (requires --max-n).
    #[arg(long, requires = "max_n")]
    random: Option<usize>,
    /// Largest vertex count for random instances (at most 12).
    #[arg(long)]
    max_n: Option<u32>,
    /// Comma-separated tie-break policies to compare.
    #[arg(long, default_value = "lowest-index,highest-index,exhaustive-best")]
    policies: String,
    /// Seed for random instance generation.
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

enum CliError {
    Usage(String),
    Parse(String),
    SolverLimit(String),
    Io(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Io(_) => 1,
            CliError::Usage(_) => 2,
            CliError::Parse(_) => 3,
            CliError::SolverLimit(_) => 4,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m)
            | CliError::Parse(m)
            | CliError::SolverLimit(m)
            | CliError::Io(m) => f.write_str(m),
        }
    }
}

impl From<EngineError> for CliError {
    fn from(e: EngineError) -> Self {
        match e {
            EngineError::SolverLimitExceeded { .. } => CliError::SolverLimit(e.to_string()),
            EngineError::PolicyViolation { .. } => CliError::Usage(e.to_string()),
        }
    }
}

/// Solver caps for one invocation: the defaults, optionally lowered (or the
/// exact cap raised up to the bitset width) by MCPHERSON_SOLVER_LIMIT.
struct Limits {
    exact: u32,
    sequence: u32,
}

fn read_limits() -> Result<Limits, CliError> {
    match std::env::var(SOLVER_LIMIT_VAR) {
        Err(std::env::VarError::NotPresent) => Ok(Limits {
            exact: DEFAULT_EXACT_LIMIT,
            sequence: DEFAULT_SEQUENCE_LIMIT,
        }),
        Err(e) => Err(CliError::Usage(format!("{SOLVER_LIMIT_VAR}: {e}"))),
        Ok(raw) => {
            let cap: u32 = raw.parse().map_err(|_| {
                CliError::Usage(format!(
                    "{SOLVER_LIMIT_VAR} must be a vertex count, got `{raw}`"
                ))
            })?;
            Ok(Limits {
                exact: cap,
                sequence: cap.min(DEFAULT_SEQUENCE_LIMIT),
            })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    let limits = read_limits()?;
    match cli.command {
        Command::Compute { file, greedy_only } => cmd_compute(&file, greedy_only, cli.format, &limits),
        Command::Gen { family } => cmd_gen(family, &limits),
        Command::JacoTable { n_max } => cmd_jaco_table(n_max, cli.format),
        Command::Conjecture { n_max } => cmd_conjecture(n_max, cli.format),
        Command::Scan(args) => cmd_scan(args, cli.format),
    }
}

fn cmd_compute(
    file: &PathBuf,
    greedy_only: bool,
    format: Format,
    limits: &Limits,
) -> Result<(), CliError> {
    let text = std::fs::read_to_string(file)
        .map_err(|e| CliError::Io(format!("{}: {e}", file.display())))?;
    let input = file
        .file_name()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| file.display().to_string());
    let graph = parse_edge_list(&text).map_err(|e| CliError::Parse(format!("{input}: {e}")))?;

    let greedy = greedy_mcpherson(&graph, &TieBreakPolicy::LowestIndex)
        .expect("adaptive greedy cannot fail");

    let exact = if greedy_only {
        None
    } else {
        let certificate = exact_upsilon_with_limit(&graph, limits.exact)?;
        let (star, _) = exact_upsilon_star_with_limit(&graph, limits.sequence)?;
        Some((certificate, star))
    };

    print!(
        "{}",
        render::compute_report(&input, &graph, &greedy, exact.as_ref(), format)
    );
    Ok(())
}

fn cmd_gen(family: FamilyCommand, limits: &Limits) -> Result<(), CliError> {
    let (spec, opts) = family_spec(family)?;
    let graph = families::generate(&spec).map_err(|e| CliError::Usage(e.to_string()))?;

    let mut out = write_edge_list(&graph);
    if opts.upsilon {
        match families::closed_form_upsilon(&spec) {
            Some(value) => out.push_str(&format!("# upsilon formula: {value}\n")),
            None => out.push_str("# upsilon formula: none\n"),
        }
        match exact_upsilon_with_limit(&graph, limits.exact) {
            Ok(cert) => out.push_str(&format!("# upsilon exact: {}\n", cert.value())),
            Err(EngineError::SolverLimitExceeded { n, limit }) => out.push_str(&format!(
                "# upsilon exact: skipped ({n} vertices exceeds solver limit {limit})\n"
            )),
            Err(e) => return Err(e.into()),
        }
    }

    match opts.output {
        Some(path) => std::fs::write(&path, out)
            .map_err(|e| CliError::Io(format!("{}: {e}", path.display()))),
        None => {
            print!("{out}");
            Ok(())
        }
    }
}

fn family_spec(family: FamilyCommand) -> Result<(FamilySpec, GenOpts), CliError> {
    Ok(match family {
        FamilyCommand::Path { n, opts } => (FamilySpec::Path(n), opts),
        FamilyCommand::Cycle { n, opts } => (FamilySpec::Cycle(n), opts),
        FamilyCommand::Complete { n, opts } => (FamilySpec::Complete(n), opts),
        FamilyCommand::Null { n, opts } => (FamilySpec::Null(n), opts),
        FamilyCommand::CompleteMinusMatching { n, opts } => {
            (FamilySpec::CompleteMinusMatching(n), opts)
        }
        FamilyCommand::Multipartite { parts, opts } => {
            let sizes = parts
                .split(',')
                .map(|p| p.trim().parse::<u32>())
                .collect::<Result<Vec<_>, _>>()
                .map_err(|_| {
                    CliError::Usage(format!("invalid part list `{parts}`; expected e.g. 2,3,4"))
                })?;
            (FamilySpec::Multipartite(sizes), opts)
        }
        FamilyCommand::Jaco { n, opts } => (FamilySpec::Jaco(n), opts),
        FamilyCommand::Platonic { name, opts } => {
            let solid: PlatonicSolid = name.parse().map_err(CliError::Usage)?;
            (FamilySpec::Platonic(solid), opts)
        }
    })
}

fn cmd_jaco_table(n_max: u32, format: Format) -> Result<(), CliError> {
    let rows = jaco::jaco_table(n_max).map_err(|e| CliError::Usage(e.to_string()))?;
    print!("{}", render::jaco_table_report(n_max, &rows, format));
    Ok(())
}

fn cmd_conjecture(n_max: u32, format: Format) -> Result<(), CliError> {
    let report = jaco::conjecture_scan(n_max).map_err(|e| CliError::Usage(e.to_string()))?;
    print!("{}", render::conjecture_report(&report, format));
    Ok(())
}

fn cmd_scan(args: ScanArgs, format: Format) -> Result<(), CliError> {
    let policies = parse_policies(&args.policies)?;
    let (input, labels, instances) = scan_instances(&args)?;
    let report = engine::greedy_gap_scan(&instances, &policies);
    print!("{}", render::scan_report(&input, &labels, &report, format));
    Ok(())
}

fn parse_policies(raw: &str) -> Result<Vec<TieBreakPolicy>, CliError> {
    raw.split(',')
        .map(|name| match name.trim() {
            "lowest-index" => Ok(TieBreakPolicy::LowestIndex),
            "highest-index" => Ok(TieBreakPolicy::HighestIndex),
            "exhaustive-best" => Ok(TieBreakPolicy::ExhaustiveBest),
            other => Err(CliError::Usage(format!(
                "unknown policy `{other}`; expected lowest-index, highest-index, or exhaustive-best"
            ))),
        })
        .collect()
}

fn scan_instances(args: &ScanArgs) -> Result<(String, Vec<String>, Vec<SimpleGraph>), CliError> {
    match (args.all_n, args.random) {
        (Some(n), None) => {
            if !(1..=7).contains(&n) {
                return Err(CliError::Usage(
                    "--all-n supports 1 through 7 vertices".into(),
                ));
            }
            let instances: Vec<SimpleGraph> = all_labeled_graphs(n).collect();
            let labels = instances
                .iter()
                .map(|g| format!("g{}", mask_of_graph(g)))
                .collect();
            Ok((format!("all-n {n}"), labels, instances))
        }
        (None, Some(count)) => {
            let max_n = args.max_n.expect("clap enforces --max-n with --random");
            if !(2..=12).contains(&max_n) {
                return Err(CliError::Usage(
                    "--max-n supports 2 through 12 vertices".into(),
                ));
            }
            let mut rng = ChaCha8Rng::seed_from_u64(args.seed);
            let mut instances = Vec::with_capacity(count);
            let mut labels = Vec::with_capacity(count);
            for i in 0..count {
                let n = rng.gen_range(2..=max_n);
                let p: f64 = rng.gen();
                let edges: Vec<(u32, u32)> = (1..=n)
                    .flat_map(|u| (u + 1..=n).map(move |v| (u, v)))
                    .filter(|_| rng.gen_bool(p))
                    .collect();
                instances.push(SimpleGraph::build(n, edges).expect("valid random graph"));
                labels.push(format!("r{i}"));
            }
            Ok((
                format!("random {count} max-n {max_n} seed {}", args.seed),
                labels,
                instances,
            ))
        }
        _ => Err(CliError::Usage(
            "exactly one of --all-n or --random is required".into(),
        )),
    }
}
