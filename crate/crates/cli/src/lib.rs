//! Command-line front end: `transform`, `bench`, `verify` and `diagram`.
//!
//! Exit codes: 0 ok, 1 usage or invalid input, 2 I/O failure, 3 count
//! verification failure. Diagnostics go to stderr; data goes to files or
//! stdout.

use std::ffi::OsString;
use std::path::PathBuf;

use circlefft::Algorithm;
use clap::{Args, Parser, Subcommand};
use thiserror::Error;

pub mod commands;
pub mod signal_io;

pub use signal_io::Format;

/// Environment variable holding the RNG seed for generated test signals.
pub const SEED_ENV: &str = "CIRCLEFFT_SEED";

#[derive(Debug, Parser)]
#[command(name = "circlefft", version, about = "Radix-2 FFT toolkit with cost accounting and unit-circle diagrams")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Transform a signal file (or invert a spectrum with --inverse).
    Transform(TransformArgs),
    /// Time transforms over a range of sizes and fit the cost models.
    Bench(BenchArgs),
    /// Check the operation-count recurrences at every power of two.
    Verify(VerifyArgs),
    /// Write an SVG of the unit-circle terms for bin k.
    Diagram(DiagramArgs),
}

#[derive(Debug, Args)]
pub struct TransformArgs {
    pub input: PathBuf,
    /// Treat the input as a spectrum and reconstruct the signal.
    #[arg(long)]
    pub inverse: bool,
    /// Use the direct O(N²) sum even for power-of-two sizes.
    #[arg(long)]
    pub naive: bool,
    /// Output file; stdout when omitted.
    #[arg(long, short)]
    pub output: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    #[arg(long, value_delimiter = ',', default_value = "256,512,1024,2048,4096,8192")]
    pub sizes: Vec<usize>,
    #[arg(long, value_delimiter = ',', default_value = "naive,fft_recursive,fft_iterative")]
    pub algorithms: Vec<Algorithm>,
    #[arg(long, default_value_t = 5)]
    pub repeats: usize,
    /// CSV output path; stdout when omitted.
    #[arg(long)]
    pub csv: Option<PathBuf>,
    /// Where to write the fitted cost constants as JSON.
    #[arg(long)]
    pub fit_json: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, default_value_t = 1024)]
    pub max_n: usize,
}

#[derive(Debug, Args)]
pub struct DiagramArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub k: usize,
    /// Draw the even/odd decomposition row instead of a single circle.
    #[arg(long)]
    pub decompose: bool,
    /// Comma-separated labels, one per sample index.
    #[arg(long, value_delimiter = ',')]
    pub labels: Option<Vec<String>>,
    #[arg(long, short)]
    pub output: Option<PathBuf>,
    #[arg(long, default_value_t = 100.0)]
    pub radius: f64,
    #[arg(long, default_value_t = 80.0)]
    pub gap: f64,
    #[arg(long, default_value_t = 16.0)]
    pub font_size: f64,
    #[arg(long, default_value_t = 3.0)]
    pub dot_radius: f64,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    Io(String),
    #[error("{0}")]
    Verification(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) | CliError::Input(_) => 1,
            CliError::Io(_) => 2,
            CliError::Verification(_) => 3,
        }
    }
}

impl From<circlefft::Error> for CliError {
    fn from(e: circlefft::Error) -> Self {
        CliError::Input(e.to_string())
    }
}

/// Parses `args` and runs the selected command, returning the exit code.
pub fn run<I, T>(args: I) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let result = match cli.command {
        Command::Transform(a) => commands::transform(&a),
        Command::Bench(a) => commands::bench(&a),
        Command::Verify(a) => commands::verify(&a),
        Command::Diagram(a) => commands::diagram(&a),
    };
    match result {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
