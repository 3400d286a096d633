use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "superdiscord", version, about = "Super quantum discord bounds for two-qudit states")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Correlation report for one state.
    Report(ReportArgs),
    /// Bound table over the Werner family c_i = -c.
    Sweep(SweepArgs),
    /// Sign statistics of the difference D over the admissible region.
    Distribution(DistributionArgs),
    /// Bounds before and after the {|0>,|1>} bit-flip channel on A.
    Channel(ChannelArgs),
    /// Run the invariant suites and print the discrepancy ledger.
    Verify(VerifyArgs),
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Csv,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SamplerKind {
    Grid,
    Random,
}

#[derive(Args, Debug, Clone, Default)]
pub struct Common {
    /// TOML or JSON config file; explicit flags take precedence.
    #[arg(long)]
    pub config: Option<PathBuf>,
    /// Write output here instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    #[arg(long)]
    pub seed: Option<u64>,
    /// Local dimension d of each subsystem.
    #[arg(long)]
    pub d: Option<usize>,
}

#[derive(Args, Debug, Clone, Default)]
pub struct StateArgs {
    /// Coefficients c1,c2,c3 on σ_k ⊗ σ_k.
    #[arg(long, allow_hyphen_values = true)]
    pub c: Option<String>,
    /// File holding the 3×3 block T (whitespace/comma rows, or JSON).
    #[arg(long)]
    pub tmatrix: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct ReportArgs {
    #[command(flatten)]
    pub common: Common,
    #[command(flatten)]
    pub state: StateArgs,
    /// Measurement strength.
    #[arg(long, allow_negative_numbers = true)]
    pub x: Option<f64>,
    /// Also run the numerical search over measurement families.
    #[arg(long)]
    pub search: bool,
    #[arg(long)]
    pub restarts: Option<usize>,
}

#[derive(Args, Debug)]
pub struct SweepArgs {
    #[command(flatten)]
    pub common: Common,
    #[arg(long, default_value_t = 0.0)]
    pub c_min: f64,
    #[arg(long, default_value_t = 1.0)]
    pub c_max: f64,
    #[arg(long, default_value_t = 11)]
    pub c_steps: usize,
    #[arg(long, default_value_t = -5.0, allow_negative_numbers = true)]
    pub x_min: f64,
    #[arg(long, default_value_t = 5.0, allow_negative_numbers = true)]
    pub x_max: f64,
    #[arg(long, default_value_t = 21)]
    pub x_steps: usize,
}

#[derive(Args, Debug)]
pub struct DistributionArgs {
    #[command(flatten)]
    pub common: Common,
    #[arg(long, allow_negative_numbers = true)]
    pub x: Option<f64>,
    /// Grid step over [0, 1]^3.
    #[arg(long)]
    pub step: Option<f64>,
    #[arg(long, value_enum)]
    pub sampler: Option<SamplerKind>,
    /// Number of cube draws for the random sampler.
    #[arg(long)]
    pub samples: Option<usize>,
    /// Also write per-sample rows (c1,c2,c3,D) as CSV.
    #[arg(long)]
    pub samples_out: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct ChannelArgs {
    #[command(flatten)]
    pub common: Common,
    #[command(flatten)]
    pub state: StateArgs,
    #[arg(long, allow_negative_numbers = true)]
    pub x: Option<f64>,
    #[arg(long)]
    pub gamma: Option<f64>,
    /// Cross-check the gap with the numerical pipeline.
    #[arg(long)]
    pub oracle: bool,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// Override every suite tolerance.
    #[arg(long)]
    pub tol: Option<f64>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}
