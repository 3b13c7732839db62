//! Command-line front end: `bound`, `mu`, `charcheck` and `nonreduced`.

mod commands;
mod render;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use milnor_core::localalg::DEFAULT_S_PAIR_BUDGET;
use milnor_core::Error;

pub use commands::{cmd_bound, cmd_charcheck, cmd_mu, cmd_nonreduced, Output};

#[derive(Parser, Debug)]
#[command(
    name = "milnor",
    version,
    about = "Milnor numbers and rank bounds for homogeneous polynomials"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Critical locus, generic Milnor numbers and every applicable rank bound.
    Bound(BoundArgs),
    /// Milnor number at the origin.
    Mu(MuArgs),
    /// Compare char(A) and char(A^(p^m)) modulo p.
    Charcheck(CharcheckArgs),
    /// Degree-zero analysis of a non-reduced polynomial.
    Nonreduced(NonreducedArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

impl Format {
    pub fn name(self) -> &'static str {
        match self {
            Format::Text => "text",
            Format::Json => "json",
        }
    }
}

#[derive(Args, Debug, Clone)]
pub struct PolyArgs {
    /// Polynomial, e.g. "z^2*y - x*y^2".
    #[arg(long)]
    pub poly: String,
    /// Comma-separated variable order; defaults to order of first appearance.
    #[arg(long, value_delimiter = ',')]
    pub vars: Option<Vec<String>>,
    /// S-pair budget for each basis computation.
    #[arg(long, env = "MILNOR_BUDGET", default_value_t = DEFAULT_S_PAIR_BUDGET)]
    pub budget: u64,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Args, Debug, Clone)]
pub struct BoundArgs {
    #[command(flatten)]
    pub poly: PolyArgs,
    /// Zero variables of a critical-locus component, e.g. `u,w,x`. Repeatable.
    #[arg(long = "component")]
    pub components: Vec<String>,
    /// Accept an enumerated component list that is not provably exhaustive.
    #[arg(long)]
    pub assume_complete: bool,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Prime power equal to the degree, written `P^M`.
    #[arg(long)]
    pub prime_power: Option<String>,
    /// Known divisor of the rank; enables the refined bound.
    #[arg(long)]
    pub multiple_of: Option<u64>,
}

#[derive(Args, Debug, Clone)]
pub struct MuArgs {
    #[command(flatten)]
    pub poly: PolyArgs,
    /// Cross-check against the truncated quotient dimension at this degree cap.
    #[arg(long)]
    pub oracle_cap: Option<u32>,
}

#[derive(Args, Debug, Clone)]
pub struct CharcheckArgs {
    /// Matrix file: the size on the first line, then one row per line.
    #[arg(long)]
    pub matrix: PathBuf,
    #[arg(long)]
    pub p: u64,
    #[arg(long, default_value_t = 1)]
    pub m: u32,
    /// Also test quasi-unipotence and invariance under inversion.
    #[arg(long)]
    pub full: bool,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Args, Debug, Clone)]
pub struct NonreducedArgs {
    /// Multiplicities of the irreducible factors.
    #[arg(long, value_delimiter = ',', required = true)]
    pub mults: Vec<u64>,
    #[arg(long)]
    pub degree: u64,
    /// Multiplicities known to be coprime to the degree.
    #[arg(long, value_delimiter = ',')]
    pub coprime_set: Option<Vec<u64>>,
    /// Degrees of the irreducible factors, in the order of `--mults`.
    #[arg(long, value_delimiter = ',')]
    pub factor_degrees: Option<Vec<u64>>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_DEGENERATE: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;

pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::Degenerate(_) => EXIT_DEGENERATE,
        Error::ResourceLimit(_) => EXIT_RESOURCE,
        _ => EXIT_USAGE,
    }
}

/// Runs one invocation, writing the report to `out` and diagnostics to `err`.
/// Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    let result = match &cli.command {
        Command::Bound(a) => cmd_bound(a),
        Command::Mu(a) => cmd_mu(a),
        Command::Charcheck(a) => cmd_charcheck(a),
        Command::Nonreduced(a) => cmd_nonreduced(a),
    };
    match result {
        Ok(output) => {
            let _ = out.write_all(output.text.as_bytes());
            output.code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}
