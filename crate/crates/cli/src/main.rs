//! `hyperlap`: measure hypergraph overlap, generate synthetic
//! hypergraphs, fit level weights, and benchmark generation.
//!
//! Every command writes its outputs under `--out` and embeds the tool
//! version, the fully resolved configuration, and the seed in its JSON
//! report, so a report is enough to reproduce a run byte for byte.

mod common;
mod fit;
mod generate;
mod report;
mod stats;
mod tailfit;

use clap::{Args, Parser, Subcommand, ValueEnum};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "hyperlap", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Egonet, pair/triple degree, and homogeneity statistics.
    Stats(StatsArgs),
    /// Generate a synthetic hypergraph.
    #[command(subcommand)]
    Generate(GenerateCommand),
    /// Fit level weights to a target hypergraph.
    Fit(FitArgs),
    /// KS distances and significance scores between two hypergraphs.
    Compare(CompareArgs),
    /// Heavy-tail model fits for a chosen distribution.
    Tailfit(TailfitArgs),
    /// Scale a hypergraph up by an integer factor.
    Upscale(UpscaleArgs),
    /// Generation-time scaling benchmark over an upscale ladder.
    Bench(BenchArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    /// One hyperedge per line, whitespace- or comma-separated labels.
    Edgelist,
    /// Paired `-nverts`/`-simplices` files.
    Nverts,
}

/// Dataset location and preprocessing switches shared by all commands.
#[derive(Args, Debug)]
struct InputArgs {
    /// Input dataset path.
    #[arg(long)]
    input: PathBuf,
    #[arg(long, value_enum, default_value_t = Format::Edgelist)]
    format: Format,
    /// Deduplicate hyperedges (the default).
    #[arg(long, overrides_with = "keep_dupes")]
    dedupe: bool,
    /// Keep duplicate hyperedges.
    #[arg(long)]
    keep_dupes: bool,
    /// Drop single-node hyperedges (the default).
    #[arg(long, overrides_with = "keep_singletons")]
    drop_singletons: bool,
    /// Keep single-node hyperedges.
    #[arg(long)]
    keep_singletons: bool,
}

/// Output directory, seed, and thread count shared by all commands.
#[derive(Args, Debug)]
struct RunArgs {
    /// Directory for all emitted files (created if missing).
    #[arg(long)]
    out: PathBuf,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Worker threads; 0 means one per core. Any value produces
    /// identical generated hypergraphs and measures.
    #[arg(long, default_value_t = 0)]
    threads: usize,
}

/// Triple-degree computation mode.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TriplesMode {
    /// Exact when it fits the budget, sampled otherwise.
    Auto,
    /// Force full enumeration (fails over to sampling only when the
    /// budget is exceeded).
    Exact,
    /// Force uniform sampling over distinct triples.
    Sampled,
}

#[derive(Args, Debug)]
struct TriplesArgs {
    #[arg(long, value_enum, default_value_t = TriplesMode::Auto)]
    triples: TriplesMode,
    /// Triple enumeration budget (exact mode) or sampling attempts
    /// (sampled mode).
    #[arg(long)]
    budget: Option<u64>,
    /// Cap on total enumerated node pairs.
    #[arg(long)]
    pair_capacity: Option<u64>,
}

#[derive(Args, Debug)]
struct StatsArgs {
    #[command(flatten)]
    input: InputArgs,
    #[command(flatten)]
    run: RunArgs,
    #[command(flatten)]
    triples: TriplesArgs,
}

#[derive(Subcommand)]
enum GenerateCommand {
    /// Degree- and size-preserving generation without locality.
    Hypercl(GenerateArgs),
    /// Layered generation with explicit level weights.
    Hyperlap(GenerateArgs),
}

#[derive(Args, Debug)]
struct GenerateArgs {
    /// Exemplar hypergraph supplying size and degree sequences.
    #[arg(long, required_unless_present = "sizes_file", conflicts_with_all = ["sizes_file", "degrees_file"])]
    input: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Edgelist)]
    format: Format,
    #[arg(long, overrides_with = "keep_dupes")]
    dedupe: bool,
    #[arg(long)]
    keep_dupes: bool,
    #[arg(long, overrides_with = "keep_singletons")]
    drop_singletons: bool,
    #[arg(long)]
    keep_singletons: bool,
    /// Explicit hyperedge sizes, one integer per line.
    #[arg(long, requires = "degrees_file")]
    sizes_file: Option<PathBuf>,
    /// Explicit per-node degree weights, one number per line.
    #[arg(long, requires = "sizes_file")]
    degrees_file: Option<PathBuf>,
    /// Number of levels (uniform weights unless --weights is given).
    #[arg(long)]
    levels: Option<u32>,
    /// Comma-separated level weights w1,...,wL summing to 1.
    #[arg(long)]
    weights: Option<String>,
    /// Also write a `.levels` sidecar with each hyperedge's level.
    #[arg(long)]
    emit_levels: bool,
    #[command(flatten)]
    run: RunArgs,
}

#[derive(Args, Debug)]
struct FitArgs {
    #[command(flatten)]
    input: InputArgs,
    #[command(flatten)]
    run: RunArgs,
    /// Fraction scan resolution.
    #[arg(long, default_value_t = 0.05)]
    resolution: f64,
    /// Independent fits; the best final score wins.
    #[arg(long, default_value_t = 1)]
    repeats: usize,
    #[arg(long)]
    emit_levels: bool,
}

#[derive(Args, Debug)]
struct CompareArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Second hypergraph to compare against.
    #[arg(long)]
    against: PathBuf,
    /// Format of --against (defaults to --format).
    #[arg(long, value_enum)]
    against_format: Option<Format>,
    #[command(flatten)]
    run: RunArgs,
    #[command(flatten)]
    triples: TriplesArgs,
}

/// Which distribution of the dataset to tail-fit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TailTarget {
    PairDegrees,
    TripleDegrees,
    Degrees,
    Sizes,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum KindArg {
    Auto,
    Discrete,
    Continuous,
}

#[derive(Args, Debug)]
struct TailfitArgs {
    #[command(flatten)]
    input: InputArgs,
    #[command(flatten)]
    run: RunArgs,
    #[command(flatten)]
    triples: TriplesArgs,
    /// Distribution to fit.
    #[arg(long, value_enum)]
    what: TailTarget,
    #[arg(long, value_enum, default_value_t = KindArg::Auto)]
    kind: KindArg,
    /// Tail cutoff policy: `min`, `scan`, or a fixed number.
    #[arg(long, default_value = "min")]
    xmin: String,
    /// Minimum tail points required for a fit.
    #[arg(long, default_value_t = 10)]
    min_tail: usize,
}

#[derive(Args, Debug)]
struct UpscaleArgs {
    #[command(flatten)]
    input: InputArgs,
    #[command(flatten)]
    run: RunArgs,
    /// Integer scale factor for nodes and hyperedges.
    #[arg(long)]
    factor: usize,
    #[arg(long)]
    levels: Option<u32>,
    #[arg(long)]
    weights: Option<String>,
    #[arg(long)]
    emit_levels: bool,
}

#[derive(Args, Debug)]
struct BenchArgs {
    #[command(flatten)]
    input: InputArgs,
    #[command(flatten)]
    run: RunArgs,
    /// Comma-separated upscale factors.
    #[arg(long, default_value = "5,25,125,625")]
    factors: String,
    #[arg(long, default_value_t = 7)]
    levels: u32,
    #[arg(long)]
    weights: Option<String>,
    /// Timed runs per factor; the minimum is kept.
    #[arg(long, default_value_t = 3)]
    runs: usize,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Stats(args) => stats::run_stats(&args),
        Command::Generate(cmd) => generate::run_generate(&cmd),
        Command::Fit(args) => fit::run(&args),
        Command::Compare(args) => stats::run_compare(&args),
        Command::Tailfit(args) => tailfit::run(&args),
        Command::Upscale(args) => generate::run_upscale(&args),
        Command::Bench(args) => generate::run_bench(&args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::FAILURE
        }
    }
}
