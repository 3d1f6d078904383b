use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use compact_span::ExtractionMode;

#[derive(Debug, Parser)]
#[command(name = "compact-span", version, about = "Most and least compact spanning trees via forest distances")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Extract an MCST or LCST from an edge-list file.
    Extract(ExtractArgs),
    /// Generate a graph in edge-list format.
    Gen(GenArgs),
    /// Compactness, diameter and degree statistics of a graph.
    Metrics(MetricsArgs),
    /// Exhaustive checks on a small graph: tree counts, exact optima, forest identities.
    Oracle(OracleArgs),
    /// One Wilson random spanning tree per root vertex.
    Baseline(BaselineArgs),
    /// Run an ER or BA comparison suite and write CSV and SVG files.
    Experiment(ExperimentArgs),
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Mcst,
    Lcst,
}

impl From<Mode> for ExtractionMode {
    fn from(m: Mode) -> Self {
        match m {
            Mode::Mcst => ExtractionMode::Mcst,
            Mode::Lcst => ExtractionMode::Lcst,
        }
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Switch {
    On,
    Off,
}

#[derive(Debug, Args)]
pub struct ExtractArgs {
    #[arg(long)]
    pub input: PathBuf,
    /// Tree output file; stdout when omitted.
    #[arg(short, long)]
    pub output: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "mcst")]
    pub mode: Mode,
    /// Per-iteration trace CSV.
    #[arg(long)]
    pub trace: Option<PathBuf>,
    /// Use rank-one downdates instead of refactoring every round.
    #[arg(long)]
    pub fast: bool,
    #[arg(long, value_enum, default_value = "on")]
    pub early_stop: Switch,
    /// Break forest-distance ties at random with this seed instead of
    /// taking the smallest edge.
    #[arg(long)]
    pub seed: Option<u64>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum GenFamily {
    Complete,
    Star,
    Path,
    Er,
    Ba,
}

#[derive(Debug, Args)]
pub struct GenArgs {
    #[arg(value_enum)]
    pub family: GenFamily,
    #[arg(long)]
    pub n: usize,
    /// Edge probability for `er`.
    #[arg(long, default_value_t = 0.5)]
    pub rho: f64,
    /// Edges added per new vertex for `ba`.
    #[arg(long, default_value_t = 2)]
    pub m_attach: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct MetricsArgs {
    #[arg(long)]
    pub input: PathBuf,
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct OracleArgs {
    #[arg(long)]
    pub input: PathBuf,
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct BaselineArgs {
    #[arg(long)]
    pub input: PathBuf,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Edge lists of all trees; stdout when omitted.
    #[arg(short, long)]
    pub output: Option<PathBuf>,
    /// Per-tree compactness and diameter CSV.
    #[arg(long)]
    pub stats: Option<PathBuf>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Er,
    Ba,
}

#[derive(Debug, Args)]
pub struct ExperimentArgs {
    #[arg(value_enum)]
    pub suite: Suite,
    /// Number of graphs; 50 for er and 36 for ba when omitted.
    #[arg(long)]
    pub count: Option<usize>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 10)]
    pub n_min: usize,
    #[arg(long, default_value_t = 99)]
    pub n_max: usize,
    /// Fixes the ER edge probability instead of sampling it.
    #[arg(long)]
    pub rho: Option<f64>,
    #[arg(long, default_value_t = 0.25)]
    pub rho_min: f64,
    #[arg(long, default_value_t = 0.5)]
    pub rho_max: f64,
    /// Fixes the BA attachment count instead of sampling it.
    #[arg(long)]
    pub m_attach: Option<usize>,
    #[arg(long, default_value_t = 1)]
    pub attach_min: usize,
    #[arg(long, default_value_t = 2)]
    pub attach_max: usize,
    #[arg(long)]
    pub fast: bool,
    /// Output directory.
    #[arg(short, long, default_value = ".")]
    pub output: PathBuf,
}
