use clap::{Args, Parser, Subcommand, ValueEnum};

/// Default cap on visited prefixes for any exhaustive search.
pub const DEFAULT_BUDGET: u64 = 10_000_000;

#[derive(Debug, Parser)]
#[command(
    name = "delannoy",
    version,
    about = "Count, enumerate, map and verify Delannoy, North-East and k-Schröder lattice paths"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Text)]
    pub format: Format,

    /// Maximum number of prefixes any exhaustive search may visit.
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET)]
    pub budget: u64,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    /// Plain text; for `enum` one word per line.
    #[value(alias = "words")]
    Text,
    /// A single JSON record.
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Count a path family by DP, closed form, exhaustive search, or all three.
    Count(CountArgs),
    /// List the members of a path family in canonical order (E < N < D).
    Enum(EnumArgs),
    /// Apply one of the maps pi, delta, tau, tau-inv to a path word.
    Map(MapArgs),
    /// Print generating-function coefficients for k-Schröder paths.
    Series(SeriesArgs),
    /// Check bijectivity of the maps exhaustively over a range of endpoints.
    Verify(VerifyArgs),
    /// Compare path counts against the conjectured equinumerous families.
    Conjecture(ConjectureArgs),
    /// Emit a sequence in OEIS b-file format.
    Bfile(BfileArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Delannoy,
    H,
    B,
    A,
    Schroeder,
    SchroederRect,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, ValueEnum)]
pub enum Method {
    Dp,
    Closed,
    Bruteforce,
    All,
}

#[derive(Debug, Args)]
pub struct CountArgs {
    pub family: Family,
    /// `n m` for delannoy, h, b, a and schroeder-rect; `n` for schroeder.
    #[arg(allow_negative_numbers = true, num_args = 1..=2, required = true)]
    pub params: Vec<i64>,
    /// Region parameter for the Schröder families.
    #[arg(long, default_value_t = 1, allow_negative_numbers = true)]
    pub k: i64,
    #[arg(long, value_enum, default_value_t = Method::Dp)]
    pub method: Method,
    /// Adds one to the result of the given method (exercises the mismatch path).
    #[arg(long, value_enum, hide = true)]
    pub corrupt: Option<Method>,
}

#[derive(Debug, Args)]
pub struct EnumArgs {
    /// Endpoint `n m`.
    #[arg(long, num_args = 2, value_names = ["N", "M"], required = true, allow_negative_numbers = true)]
    pub target: Vec<i64>,
    /// Comma-separated factors the path must avoid, e.g. `NE,EN`.
    #[arg(long, default_value = "")]
    pub avoid: String,
    /// Comma-separated factors the augmented path must avoid.
    #[arg(long, default_value = "")]
    pub avoid_aug: String,
    /// Restrict vertices to `y >= k x`.
    #[arg(long)]
    pub region: Option<u32>,
    #[arg(long)]
    pub first: Option<String>,
    #[arg(long)]
    pub last: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MapKind {
    Pi,
    Delta,
    Tau,
    TauInv,
}

#[derive(Debug, Args)]
pub struct MapArgs {
    pub map: MapKind,
    /// Path word over N, E, D starting at the origin; may be empty.
    #[arg(default_value = "")]
    pub word: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Which {
    #[value(name = "F")]
    F,
    #[value(name = "FD")]
    Fd,
    #[value(name = "FE")]
    Fe,
    All,
}

#[derive(Debug, Args)]
pub struct SeriesArgs {
    #[arg(long)]
    pub k: u32,
    #[arg(long)]
    pub order: usize,
    #[arg(value_enum, default_value_t = Which::All)]
    pub which: Which,
    /// Cross-check against the closed-form coefficient sums (k = 1, 2).
    #[arg(long)]
    pub check_closed: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum VerifyTarget {
    Pi,
    Delta,
    Tau,
    All,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    pub target: VerifyTarget,
    #[arg(long)]
    pub max_n: u32,
    /// Defaults to `k * max-n` with `--k`, otherwise to `max-n`.
    #[arg(long)]
    pub max_m: Option<u32>,
    /// Restrict pi and delta to the region `y >= k x`.
    #[arg(long)]
    pub k: Option<u32>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ConjectureKind {
    #[value(name = "1")]
    One,
    #[value(name = "2")]
    Two,
}

#[derive(Debug, Args)]
pub struct ConjectureArgs {
    pub which: ConjectureKind,
    #[arg(long)]
    pub max_n: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Sequence {
    /// `h(n, n)`.
    #[value(name = "h-diag")]
    HDiag,
    #[value(name = "F1")]
    F1,
    #[value(name = "FD2")]
    Fd2,
    #[value(name = "FE1")]
    Fe1,
    #[value(name = "FD3")]
    Fd3,
}

#[derive(Debug, Args)]
pub struct BfileArgs {
    pub sequence: Sequence,
    #[arg(long)]
    pub order: usize,
}
