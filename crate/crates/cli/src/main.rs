//! `forestprob`: tree-count distributions of the random-ordering forest
//! process, family classification and collision search.

mod commands;
mod source;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

const FAMILY_GRAMMAR: &str = "\
Family specs use the grammar name[:p1,p2,...]:
  star:n        K_{1,n}, n >= 1
  triangle      K_3
  gs:a,b,c      two stars glued along b >= 1 leaves, a and c private leaves
  gsplus:a,b,c  gs with the two centres joined (alias gs+; b = 0 allowed)
  paw:a         paw with a pendant leaves
  di:a          diamond with a pendant leaves
  k4:a          K_4 with a pendant leaves
  k:n           complete graph, n >= 2
  kst:s,t       complete bipartite graph, s, t >= 1

Exit codes: 0 success, 1 usage or parse error, 2 size guard exceeded,
3 verification failure.";

#[derive(Parser, Debug)]
#[command(name = "forestprob", version, about, after_help = FAMILY_GRAMMAR)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Exact (or simulated) distribution of the number of trees.
    Compute(ComputeArgs),
    /// Monte Carlo estimate with standard errors.
    Simulate(SimulateArgs),
    /// Name the family a graph belongs to.
    Classify(ClassifyArgs),
    /// Sweep a family for non-isomorphic members with equal profiles.
    Search(SearchArgs),
    /// Check the parametrized collisions and the listed glued-star pairs.
    VerifyKnown(VerifyArgs),
    /// Evaluate closed forms, or audit the complete bipartite formula.
    Formula(FormulaArgs),
}

#[derive(Args, Debug, Clone)]
#[group(required = true, multiple = false)]
pub struct SourceArgs {
    /// Graph file: edge list ("u v" per line) or graph6.
    #[arg(long)]
    pub file: Option<PathBuf>,
    /// Family spec such as gs:8,1,1 or paw:3.
    #[arg(long)]
    pub family: Option<String>,
}

#[derive(Args, Debug, Clone)]
pub struct InputArgs {
    #[command(flatten)]
    pub source: SourceArgs,
    /// File format; auto uses graph6 for .g6/.graph6 files.
    #[arg(long, value_enum, default_value_t = Format::Auto)]
    pub format: Format,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Auto,
    Edges,
    Graph6,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Engine {
    Auto,
    Brute,
    Dp,
    Mc,
    Formula,
}

#[derive(Args, Debug)]
pub struct ComputeArgs {
    #[command(flatten)]
    pub input: InputArgs,
    #[arg(long, value_enum, default_value_t = Engine::Auto)]
    pub engine: Engine,
    /// Threads for brute force and simulation.
    #[arg(long, default_value_t = 1)]
    pub workers: usize,
    /// Lift the brute-force and DP size guards.
    #[arg(long)]
    pub force: bool,
    /// Trials for --engine mc.
    #[arg(long, default_value_t = 100_000)]
    pub trials: u64,
    /// Seed for --engine mc.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Print one JSON document instead of text.
    #[arg(long)]
    pub json: bool,
}

#[derive(Args, Debug)]
pub struct SimulateArgs {
    #[command(flatten)]
    pub input: InputArgs,
    #[arg(long, default_value_t = 100_000)]
    pub trials: u64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 1)]
    pub workers: usize,
    #[arg(long)]
    pub json: bool,
}

#[derive(Args, Debug)]
pub struct ClassifyArgs {
    #[command(flatten)]
    pub input: InputArgs,
    #[arg(long)]
    pub json: bool,
}

#[derive(Args, Debug)]
pub struct SearchArgs {
    /// gs, gsplus, paw, di, k4 or all.
    #[arg(long)]
    pub family: String,
    #[arg(long, default_value_t = 500)]
    pub max_vertices: usize,
    /// formula or dp.
    #[arg(long, default_value = "formula")]
    pub engine: String,
    #[arg(long, default_value_t = 1)]
    pub workers: usize,
    /// Write the report here instead of stdout.
    #[arg(long)]
    pub output: Option<PathBuf>,
    #[arg(long)]
    pub json: bool,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(long, default_value_t = 10)]
    pub max_t: usize,
    /// Extra specs expected to share a profile, separated by '/', e.g.
    /// gsplus:17,3,9/gsplus:10,9,10. Repeatable.
    #[arg(long = "group")]
    pub groups: Vec<String>,
    #[arg(long)]
    pub output: Option<PathBuf>,
    #[arg(long)]
    pub json: bool,
}

#[derive(Args, Debug)]
pub struct FormulaArgs {
    /// Family spec to evaluate.
    #[arg(required_unless_present = "audit_kst")]
    pub spec: Option<String>,
    /// For kst:s,t, print the published formula's values even though they
    /// do not form a distribution.
    #[arg(long)]
    pub printed: bool,
    /// Compare the published K_{s,t} formula with the DP for all s + t up
    /// to this bound.
    #[arg(long, value_name = "MAX_TOTAL", conflicts_with = "spec")]
    pub audit_kst: Option<u64>,
    #[arg(long)]
    pub json: bool,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    let outcome = match cli.command {
        Command::Compute(a) => commands::compute(&a),
        Command::Simulate(a) => commands::simulate(&a),
        Command::Classify(a) => commands::classify(&a),
        Command::Search(a) => commands::search(&a),
        Command::VerifyKnown(a) => commands::verify_known(&a),
        Command::Formula(a) => commands::formula(&a),
    };
    match outcome {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
