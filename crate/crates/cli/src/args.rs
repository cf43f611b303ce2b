use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use effectors::Limits;

#[derive(Debug, Parser)]
#[command(name = "effectors", version, about = "Exact and Monte Carlo solvers for the effectors problem")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Seed for Monte Carlo sampling, simulation and random generation.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,

    /// Largest number of probabilistic arcs the exact engines accept.
    #[arg(long, global = true, default_value_t = Limits::DEFAULT_MAX_R)]
    pub max_r: usize,

    /// Exhaustive searches may examine at most 2^N candidate sets.
    #[arg(long, global = true, default_value_t = Limits::DEFAULT_MAX_BRUTEFORCE_NODES)]
    pub max_bruteforce_nodes: usize,

    /// Output format; `dot` applies to commands that emit an instance.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

impl Cli {
    pub fn limits(&self) -> Limits {
        Limits { max_r: self.max_r, max_bruteforce_nodes: self.max_bruteforce_nodes }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Dot,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check an instance and report its parameters and applicable algorithms.
    Validate {
        /// Instance file, or `-` for stdin.
        instance: PathBuf,
    },
    /// Compute the cost of an effector set.
    Cost {
        instance: PathBuf,
        /// Comma-separated effector labels.
        #[arg(long, default_value = "")]
        effectors: String,
        #[arg(long, value_enum, default_value_t = CostMethod::Exact)]
        method: CostMethod,
        /// Number of cascades for `--method montecarlo`.
        #[arg(long, default_value_t = 100_000)]
        samples: u64,
    },
    /// Solve an instance exactly.
    Solve {
        instance: PathBuf,
        /// auto, zero-cost, xp-b, xp-c, infinite-budget, influence-max or brute-force.
        #[arg(long, default_value = "auto")]
        algorithm: String,
    },
    /// Print sampled cascades with their probabilities.
    Simulate {
        instance: PathBuf,
        #[arg(long, default_value = "")]
        effectors: String,
        #[arg(long, default_value_t = 1)]
        runs: u64,
    },
    /// Write a generated instance.
    Generate(GenerateArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CostMethod {
    Exact,
    LiveEdge,
    Montecarlo,
}

#[derive(Debug, Args)]
pub struct GenerateArgs {
    #[command(subcommand)]
    pub family: Family,

    /// Output file; the instance goes to stdout when omitted.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct GraphArgs {
    /// Undirected edges, e.g. `a-b,b-c`.
    #[arg(long, default_value = "")]
    pub edges: String,
    /// Extra vertices, e.g. isolated ones: `d,e`.
    #[arg(long, default_value = "")]
    pub vertices: String,
}

#[derive(Debug, Subcommand)]
pub enum Family {
    /// From multicolored clique.
    Mcc {
        #[command(flatten)]
        graph: GraphArgs,
        /// Vertex colours, e.g. `a=1,b=2,c=3`.
        #[arg(long)]
        colors: String,
        #[arg(long)]
        k: usize,
    },
    /// From dominating set.
    Domset {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long)]
        k: usize,
    },
    /// From set cover.
    Setcover {
        /// Sets separated by `;`, elements by `,`, e.g. `u1,u2;u2,u3`.
        #[arg(long)]
        sets: String,
        /// Extra universe elements not in any set.
        #[arg(long, default_value = "")]
        universe: String,
        #[arg(long)]
        h: usize,
    },
    /// From independent set.
    Indepset {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long)]
        k: usize,
    },
    /// From s-t connectedness on a DAG.
    Stcon {
        /// Arcs, e.g. `s>a,a>t,s>t`.
        #[arg(long)]
        arcs: String,
        #[arg(long, default_value = "")]
        vertices: String,
        #[arg(long)]
        s: String,
        #[arg(long)]
        t: String,
        /// Threshold on the number of s-t connected subgraphs.
        #[arg(long)]
        z: String,
    },
    /// Seeded random instance.
    Random {
        #[arg(long, default_value_t = 8)]
        nodes: usize,
        #[arg(long, default_value_t = 0.25)]
        arc_density: f64,
        #[arg(long, default_value_t = 0.5)]
        prob_fraction: f64,
        #[arg(long, default_value_t = 0.5)]
        target_fraction: f64,
        /// Probabilistic weights are drawn from k/GRID, 0 < k < GRID.
        #[arg(long, default_value_t = 8)]
        weight_grid: u32,
        #[arg(long)]
        max_prob_arcs: Option<usize>,
        /// Non-negative integer or `infinite`.
        #[arg(long, default_value = "2")]
        budget: String,
        #[arg(long)]
        cost_bound: Option<String>,
    },
}
