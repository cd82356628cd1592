//! `rt-forge`: constructions, solvers and proof subroutines from the command line.

mod commands;
mod input;
mod output;

use std::path::PathBuf;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use output::Format;

#[derive(Parser, Debug)]
#[command(name = "rt-forge", version, about = "Ramsey-Turan workbench")]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Global {
    /// Seed for every randomised routine.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Search-node budget for exact solvers.
    #[arg(long, global = true)]
    pub budget: Option<u64>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Write the result here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    K3k3,
    K3k4,
    K3k5,
    K3k6,
    /// `(K3, K_{2s-1})` lower-bound graph.
    Odd,
    /// `(K3, K_{2s})` lower-bound graph.
    Even,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SolveModeArg {
    Exact,
    Bound,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum HostKind {
    Complete,
    Random,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ExtractMethod {
    MinDegree,
    K3k3,
}

/// Graph arguments take a file, `-`, a graph6 string, or a family such as
/// `c5:12`, `and:4:1`, `cycle:7`, `complete:5`, `turan:9:3`, `tfp:64`.
#[derive(Subcommand, Debug)]
pub enum Command {
    /// Assemble a construction and check its ledger, freeness and α.
    Construct(ConstructArgs),
    /// Check a colouring against a graph and a freeness spec.
    Verify {
        graph: String,
        #[arg(long)]
        coloring: String,
        #[arg(long)]
        spec: String,
        /// Also certify α.
        #[arg(long)]
        alpha: bool,
    },
    /// Independence number.
    Alpha {
        graph: String,
        #[arg(long, value_enum, default_value_t = SolveModeArg::Exact)]
        mode: SolveModeArg,
    },
    /// Clique number.
    Clique {
        graph: String,
        #[arg(long, value_enum, default_value_t = SolveModeArg::Exact)]
        mode: SolveModeArg,
    },
    /// Search for an edge colouring free of the given monochromatic cliques.
    Freeness {
        graph: String,
        #[arg(long)]
        spec: String,
        #[arg(long)]
        coloring_out: Option<PathBuf>,
    },
    /// Largest `N` with a vertex-and-edge colouring of `K_N` avoiding the spec.
    Rstar {
        #[arg(long)]
        spec: String,
    },
    /// Exact maximum edges of a colourable graph with bounded α.
    RtExact {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        spec: String,
        #[arg(long)]
        m: usize,
    },
    /// Dependent random choice on a tripartite host, one row per seed.
    Drc {
        #[arg(long, value_enum, default_value_t = HostKind::Random)]
        host: HostKind,
        /// Block size.
        #[arg(long)]
        m: usize,
        #[arg(long, default_value_t = 0.5)]
        gamma: f64,
        /// Cross-edge probability of a random host.
        #[arg(long, default_value_t = 0.9)]
        p: f64,
        #[arg(long, default_value_t = 1)]
        seeds: u64,
        /// Estimate expectations with this many replicas instead of sampling once.
        #[arg(long)]
        replicas: Option<usize>,
    },
    /// Triangle-free process, one row per seed.
    Tfp {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        seeds: u64,
        /// Include the graph6 encoding in each row.
        #[arg(long)]
        graph6: bool,
    },
    /// Min-degree extraction, or the two-colour triangle extractor.
    Extract {
        graph: String,
        #[arg(long, value_enum, default_value_t = ExtractMethod::MinDegree)]
        method: ExtractMethod,
        /// Degree ratio for min-degree extraction.
        #[arg(long, default_value_t = 0.25)]
        d: f64,
        /// Check the extraction guarantees at this ε.
        #[arg(long)]
        eps: Option<f64>,
        #[arg(long)]
        coloring: Option<String>,
    },
    /// Density-reduced colouring over a partition, with an optional
    /// generalised-clique query.
    Reduce {
        graph: String,
        #[arg(long)]
        coloring: String,
        /// `equal:<p>` or one label per vertex.
        #[arg(long)]
        parts: String,
        #[arg(long, default_value_t = 0.1)]
        gamma: f64,
        /// Colour tag per block (default all 0).
        #[arg(long)]
        tags: Option<String>,
        #[arg(long)]
        t: Option<usize>,
        #[arg(long, default_value_t = 0)]
        color: usize,
    },
    /// Move vertices with few neighbours in another block.
    Refine {
        graph: String,
        #[arg(long)]
        parts: String,
        #[arg(long, default_value_t = 0.1)]
        threshold: f64,
        #[arg(long)]
        cap: Option<usize>,
    },
    /// Evaluate closed forms (`k3k4:0.01`, `odd:3`, `rstar:5`, ...) or `g_s(n)`.
    Formulas {
        ids: Vec<String>,
        #[arg(long)]
        gs_n: Option<f64>,
        #[arg(long, default_value_t = 2)]
        s: usize,
        #[arg(long, default_value = "loglog")]
        omega: String,
    },
    /// Build the standard constructions and compare them with their formulas.
    Report {
        /// Run freeness and α checks (slower).
        #[arg(long)]
        verify: bool,
    },
}

#[derive(Args, Debug)]
pub struct ConstructArgs {
    #[arg(value_enum)]
    pub kind: Kind,
    /// Graph in each Turán part (k3k3, k3k5) or the full-size F graph.
    #[arg(long)]
    pub f1: Option<String>,
    /// Smaller F graph (k3k4, k3k6).
    #[arg(long)]
    pub f2: Option<String>,
    /// Independent set in f2 (B for k3k4, I for k3k6); default a maximum one.
    #[arg(long)]
    pub set: Option<String>,
    /// Size of the default independent set.
    #[arg(long)]
    pub set_size: Option<usize>,
    #[arg(long)]
    pub delta_n: Option<usize>,
    /// Order for odd/even.
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub s: Option<usize>,
    /// Part graph for odd/even (default: triangle-free process).
    #[arg(long)]
    pub h: Option<String>,
    #[arg(long)]
    pub no_verify: bool,
    /// Skip the α certificate.
    #[arg(long)]
    pub no_alpha: bool,
    #[arg(long)]
    pub graph_out: Option<PathBuf>,
    #[arg(long)]
    pub coloring_out: Option<PathBuf>,
}

fn init_threads() -> Result<()> {
    if let Ok(v) = std::env::var("RT_FORGE_THREADS") {
        let n: usize = v.trim().parse().context("RT_FORGE_THREADS must be a positive integer")?;
        rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build_global()?;
    }
    Ok(())
}

fn main() -> Result<()> {
    let cli = Cli::parse();
    init_threads()?;
    let records = commands::run(&cli.command, &cli.global)?;
    let text = records.render(cli.global.format)?;
    match &cli.global.out {
        Some(path) => std::fs::write(path, text).with_context(|| format!("writing {}", path.display()))?,
        None => print!("{text}"),
    }
    Ok(())
}
