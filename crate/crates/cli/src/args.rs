use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use critset::baselines::DEFAULT_SIZE_GUARD;
use critset::search::{DEFAULT_SUBSET_LIMIT, MAX_SHAPLEY_CONTRIBUTORS};

#[derive(Debug, Parser)]
#[command(name = "critset", version, about = "Rank the contributors whose loss uncovers the most items")]
pub struct Cli {
    /// Worker threads (results do not depend on this).
    #[arg(long, global = true)]
    pub threads: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Size and degree statistics of an edge list, as JSON.
    Stats(StatsArgs),
    /// Rank contributors with one method and write the ranking as CSV.
    Rank(RankArgs),
    /// Coverage curve and AUC of a ranking.
    Eval(EvalArgs),
    /// Generate synthetic instances.
    #[command(subcommand)]
    Synth(SynthCommand),
    /// Time MinCov and ShapleyCov on random graphs of growing size.
    Bench(BenchArgs),
    /// Exhaustive reference computations for small graphs.
    #[command(subcommand)]
    Oracle(OracleCommand),
}

#[derive(Debug, Args)]
pub struct StatsArgs {
    #[arg(long)]
    pub input: PathBuf,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Mincov,
    Shapley,
    Degree,
    Pagerank,
    Betweenness,
    Dspeel,
    Greedy,
    Shc,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::Mincov => "mincov",
            Method::Shapley => "shapley",
            Method::Degree => "degree",
            Method::Pagerank => "pagerank",
            Method::Betweenness => "betweenness",
            Method::Dspeel => "dspeel",
            Method::Greedy => "greedy",
            Method::Shc => "shc",
        }
    }
}

#[derive(Debug, Args)]
pub struct RankArgs {
    #[arg(long)]
    pub input: PathBuf,
    #[arg(long, value_enum)]
    pub method: Method,
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Manifest path; defaults to `<out>.manifest.json`.
    #[arg(long)]
    pub manifest: Option<PathBuf>,
    /// Required for shc.
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(long, default_value_t = 0.85)]
    pub damping: f64,
    #[arg(long, default_value_t = 1e-10)]
    pub tol: f64,
    #[arg(long, default_value_t = 200)]
    pub max_iters: usize,
    #[arg(long, default_value_t = 4)]
    pub restarts: usize,
    #[arg(long, default_value_t = 5_000)]
    pub patience: u64,
    #[arg(long, default_value_t = 20_000)]
    pub max_moves: u64,
    /// Largest node count betweenness will accept.
    #[arg(long, default_value_t = DEFAULT_SIZE_GUARD)]
    pub size_guard: usize,
}

#[derive(Debug, Args)]
pub struct EvalArgs {
    #[arg(long)]
    pub input: PathBuf,
    /// Ranking as written by `rank`, or one contributor label per line.
    #[arg(long)]
    pub ranking: PathBuf,
    /// Coverage curve CSV.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// AUC summary JSON; stdout when absent.
    #[arg(long)]
    pub summary: Option<PathBuf>,
    #[arg(long)]
    pub manifest: Option<PathBuf>,
    /// Name recorded in the summary; defaults to the ranking file stem.
    #[arg(long)]
    pub method: Option<String>,
}

#[derive(Debug, Subcommand)]
pub enum SynthCommand {
    /// Configuration model with truncated power-law degrees.
    Pl(PowerLawArgs),
    /// Bipartite Erdős–Rényi graph.
    Er(ErArgs),
    /// Densest-k-subgraph instance to a bipartite incidence graph.
    Reduce(ReduceArgs),
}

#[derive(Debug, Args)]
pub struct PowerLawArgs {
    /// `key = value` file; flags override its entries.
    #[arg(long)]
    pub config: Option<PathBuf>,
    #[arg(long)]
    pub nc: Option<usize>,
    #[arg(long)]
    pub ni: Option<usize>,
    #[arg(long)]
    pub alpha_c: Option<f64>,
    #[arg(long)]
    pub alpha_i: Option<f64>,
    #[arg(long)]
    pub dc: Option<u32>,
    #[arg(long)]
    pub di: Option<u32>,
    /// Smallest item degree drawn.
    #[arg(long)]
    pub min_di: Option<u32>,
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long)]
    pub manifest: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ErArgs {
    #[arg(long)]
    pub config: Option<PathBuf>,
    #[arg(long)]
    pub nc: Option<usize>,
    #[arg(long)]
    pub ni: Option<usize>,
    #[arg(long)]
    pub p: Option<f64>,
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long)]
    pub manifest: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ReduceArgs {
    /// Simple graph, one `u v` edge per line.
    #[arg(long)]
    pub input: PathBuf,
    #[arg(long)]
    pub k: usize,
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long)]
    pub manifest: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    /// Comma-separated expected edge counts.
    #[arg(long, value_delimiter = ',', required = true)]
    pub edges: Vec<u64>,
    #[arg(long)]
    pub seed: u64,
    #[arg(long, default_value_t = 3)]
    pub repeats: usize,
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long)]
    pub manifest: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum OracleCommand {
    /// Best set of k contributors by exhaustive search.
    BestK(BestKArgs),
    /// Shapley values by enumerating every arrival order.
    Shapley(ShapleyOracleArgs),
    /// Look for a chain on which coverage is not monotone supermodular.
    Supermodular(SupermodularArgs),
}

#[derive(Debug, Args)]
pub struct BestKArgs {
    #[arg(long)]
    pub input: PathBuf,
    #[arg(long)]
    pub k: usize,
    /// Most subsets to enumerate.
    #[arg(long, default_value_t = DEFAULT_SUBSET_LIMIT)]
    pub limit: u128,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ShapleyOracleArgs {
    #[arg(long)]
    pub input: PathBuf,
    #[arg(long, default_value_t = MAX_SHAPLEY_CONTRIBUTORS)]
    pub max_contributors: usize,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct SupermodularArgs {
    #[arg(long)]
    pub input: PathBuf,
    /// Check this many random chains instead of all of them.
    #[arg(long)]
    pub sampled: Option<usize>,
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(long)]
    pub out: Option<PathBuf>,
}
