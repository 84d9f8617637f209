use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Clone, Parser)]
#[command(name = "ordspace", version, about = "Finite ordinal spaces: construction, isomorphism, balls, embeddings, census")]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct Global {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    /// seed of the heuristic embedder, echoed in every report
    #[arg(long, default_value_t = 0, global = true)]
    pub seed: u64,
    /// worker threads for census and embedding loops (default: all cores)
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    /// largest space accepted by exhaustive searches
    #[arg(long, default_value_t = 8, global = true)]
    pub max_points: usize,
    /// largest Hasse diagram accepted by isomorphism search
    #[arg(long, default_value_t = 64, global = true)]
    pub max_vertices: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FilterArg {
    All,
    Injective,
}

/// Space inputs: `.csv` distance matrices, `.cmp` comparison lists, and
/// rank matrices for anything else.
#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// Ordinal type of a distance matrix (CSV), printed as a rank matrix
    Ordtype { input: PathBuf },
    /// Check a comparison list against the ordinal-space axioms
    Validate { input: PathBuf },
    /// Decide isomorphism of two spaces and compare their Hasse diagrams
    Iso { first: PathBuf, second: PathBuf },
    /// Ordinal distance: fewest disagreeing comparisons over all bijections
    Dord {
        first: PathBuf,
        second: PathBuf,
        /// also count disagreeing ordered quadruples and divide by eight
        #[arg(long)]
        oracle: bool,
    },
    /// All distinct balls of a space
    Balls { input: PathBuf },
    /// Covering diagram of the balls under inclusion
    Hasse {
        input: PathBuf,
        /// Graphviz output, same as --format dot
        #[arg(long)]
        dot: bool,
    },
    /// Exact decision of embeddability in the real line
    Embed1d { input: PathBuf },
    /// Four-point line classification with its case label
    #[command(name = "t10", visible_alias = "four-point")]
    FourPoint { input: PathBuf },
    /// Search for a Euclidean realization in a given dimension
    Embednd {
        input: PathBuf,
        #[arg(long, default_value_t = 2)]
        dim: usize,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Counting conditions every planar space satisfies
    CheckR2 { input: PathBuf },
    /// Enumerate all spaces of a size up to isomorphism and gather ball statistics
    Census {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = FilterArg::All)]
        filter: FilterArg,
        /// allow the five-point enumeration of all spaces (hours)
        #[arg(long)]
        huge: bool,
        /// write the report here (JSON when the name ends in .json)
        #[arg(long)]
        out: Option<PathBuf>,
        /// include wall-clock time in the report
        #[arg(long)]
        timing: bool,
    },
    /// Compare embeddability of the whole space with that of its small subsets
    MengerProbe {
        input: PathBuf,
        #[arg(long, default_value_t = 2)]
        dim: usize,
        #[command(flatten)]
        budget: BudgetArgs,
    },
}

#[derive(Debug, Clone, Copy, Args)]
pub struct BudgetArgs {
    #[arg(long, default_value_t = 32)]
    pub restarts: usize,
    #[arg(long, default_value_t = 3000)]
    pub iterations: usize,
}
