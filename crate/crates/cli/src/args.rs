use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "liyorke",
    version,
    about = "Li-Yorke pairs and box-counting dimension on self-similar invariant sets"
)]
pub struct Cli {
    /// JSON object of flag values (keys are long flag names); flags given on
    /// the command line take precedence
    #[arg(long, global = true, value_name = "FILE")]
    pub config: Option<PathBuf>,

    /// Worker threads, 0 for one per core
    #[arg(long, global = true, default_value_t = 0)]
    pub threads: usize,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Similarity dimension, with an optional box-counting cross-check
    Dimension(DimensionArgs),
    /// Build the partner of a base sequence, or recover its filler
    Construct(ConstructArgs),
    /// Check the Li-Yorke proximity and separation bounds of a constructed pair
    Verify(VerifyArgs),
    /// Box-counting estimate for an attractor, restricted set or pair set
    Boxdim(BoxdimArgs),
    /// Write sampled points
    Sample(SampleArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SystemKind {
    Tent,
    Baker,
    Horseshoe,
    Solenoid,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Target {
    /// The attractor of the IFS (the contracting factor for built-in systems)
    Attractor,
    /// The attractor restricted to the partner set of a base sequence
    Restricted,
    /// Pairs (base, partner) in the product space
    Pairs,
    /// The full invariant set of a built-in system
    Invariant,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Control {
    None,
    /// Partner equal to the base
    Identical,
    /// Partner that follows the base after the third block
    EventuallyEqual,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SideArg {
    One,
    Two,
}

#[derive(Debug, Args)]
pub struct SystemArgs {
    /// Built-in system
    #[arg(long, value_enum, conflicts_with = "ifs")]
    pub system: Option<SystemKind>,

    /// IFS description in JSON
    #[arg(long, value_name = "FILE")]
    pub ifs: Option<PathBuf>,

    /// Tent height
    #[arg(long, default_value_t = 2.0)]
    pub a: f64,

    /// Left contraction of the baker map and solenoid
    #[arg(long, default_value_t = 1.0 / 3.0)]
    pub beta1: f64,

    /// Right contraction of the baker map and solenoid
    #[arg(long, default_value_t = 1.0 / 3.0)]
    pub beta2: f64,

    /// Horseshoe contraction
    #[arg(long, default_value_t = 1.0 / 3.0)]
    pub beta: f64,

    /// Horseshoe expansion
    #[arg(long, default_value_t = 3.0)]
    pub tau: f64,
}

#[derive(Debug, Args)]
pub struct LadderArgs {
    /// Largest grid size
    #[arg(long, default_value_t = 0.0625)]
    pub eps_max: f64,

    /// Smallest grid size
    #[arg(long, default_value_t = 6.103515625e-5)]
    pub eps_min: f64,

    /// Ratio between consecutive grid sizes
    #[arg(long, default_value_t = 2.0)]
    pub eps_base: f64,
}

#[derive(Debug, Args)]
pub struct DimensionArgs {
    #[command(flatten)]
    pub system: SystemArgs,

    /// Points for the box-counting cross-check, 0 to skip it
    #[arg(long, default_value_t = 0)]
    pub count: usize,

    /// Coding depth of sampled points
    #[arg(long, default_value_t = 40)]
    pub depth: usize,

    /// Random seed (required when sampling)
    #[arg(long)]
    pub seed: Option<u64>,

    #[command(flatten)]
    pub ladder: LadderArgs,

    /// Output file (stdout if omitted)
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ConstructArgs {
    /// Alphabet size
    #[arg(long, default_value_t = 2)]
    pub m: u32,

    #[arg(long, value_enum, default_value_t = SideArg::One)]
    pub side: SideArg,

    /// Base digits s_1 s_2 .., either packed ("1212") or comma separated
    #[arg(long)]
    pub base: Option<String>,

    /// Base past digits s_0 s_-1 .., nearest first
    #[arg(long)]
    pub base_past: Option<String>,

    /// Filler digits
    #[arg(long)]
    pub filler: Option<String>,

    /// Filler past digits, nearest first
    #[arg(long)]
    pub filler_past: Option<String>,

    /// Partner digits (with --extract)
    #[arg(long)]
    pub partner: Option<String>,

    /// Partner past digits (with --extract)
    #[arg(long)]
    pub partner_past: Option<String>,

    /// Number of partner digits to build
    #[arg(long, default_value_t = 32)]
    pub length: usize,

    /// Gap rule: zero, constant:c, linear, quadratic, affine:a,b, list:v1,v2,.. or list:FILE
    #[arg(long, default_value = "quadratic")]
    pub gaps: String,

    /// Seed for a random base or filler when they are not given
    #[arg(long)]
    pub seed: Option<u64>,

    /// Recover the filler of --partner instead of building a partner
    #[arg(long)]
    pub extract: bool,

    /// Output file (stdout if omitted)
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub system: SystemArgs,

    /// Gap rule
    #[arg(long, default_value = "quadratic")]
    pub gaps: String,

    /// Number of blocks checked
    #[arg(long, default_value_t = 12)]
    pub blocks: usize,

    /// Coding depth
    #[arg(long, default_value_t = 40)]
    pub depth: usize,

    /// Random seed for base and filler
    #[arg(long)]
    pub seed: Option<u64>,

    /// Replace the constructed partner with a negative control
    #[arg(long, value_enum, default_value_t = Control::None)]
    pub control: Control,

    /// Proximity decay per block (default derived from the system)
    #[arg(long)]
    pub decay: Option<f64>,

    /// Separation floor (default half the separation gap)
    #[arg(long)]
    pub floor: Option<f64>,

    /// Also iterate the map directly in floating point and report how far
    /// the naive orbit drifts from the coded one
    #[arg(long)]
    pub unsafe_iterate: bool,

    /// Output file (stdout if omitted)
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct BoxdimArgs {
    #[command(flatten)]
    pub system: SystemArgs,

    #[arg(long, value_enum, default_value_t = Target::Attractor)]
    pub target: Target,

    /// Gap rule for restricted and pair targets
    #[arg(long, default_value = "quadratic")]
    pub gaps: String,

    /// Base digits for the restricted target (random from the seed if omitted)
    #[arg(long)]
    pub base: Option<String>,

    /// Number of points
    #[arg(long, default_value_t = 100_000)]
    pub count: usize,

    /// Coding depth
    #[arg(long, default_value_t = 40)]
    pub depth: usize,

    /// Random seed
    #[arg(long)]
    pub seed: Option<u64>,

    #[command(flatten)]
    pub ladder: LadderArgs,

    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,

    /// Output file (stdout if omitted)
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct SampleArgs {
    #[command(flatten)]
    pub system: SystemArgs,

    #[arg(long, value_enum, default_value_t = Target::Attractor)]
    pub target: Target,

    /// Gap rule for restricted and pair targets
    #[arg(long, default_value = "quadratic")]
    pub gaps: String,

    /// Base digits for the restricted target (random from the seed if omitted)
    #[arg(long)]
    pub base: Option<String>,

    /// Number of points
    #[arg(long, default_value_t = 10_000)]
    pub count: usize,

    /// Coding depth
    #[arg(long, default_value_t = 40)]
    pub depth: usize,

    /// Random seed
    #[arg(long)]
    pub seed: Option<u64>,

    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,

    /// Output file (stdout if omitted)
    #[arg(long)]
    pub out: Option<PathBuf>,
}
