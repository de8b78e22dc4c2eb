//! `dmstrata` command-line front end: JSON documents in, JSON documents and
//! reports out. See [`run`] for the exit-code contract.

pub mod commands;
pub mod document;
pub mod error;
pub mod json;

use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

pub use document::{Kind, MatrixDocument};
pub use error::{exit, CliError};

pub const DEFAULT_TOL: f64 = 1e-9;

#[derive(Debug, Parser)]
#[command(name = "dmstrata", version, about = "Purification, rank strata and the qubit Bloch chart for density matrices")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct Io {
    /// Input document (default: stdin)
    #[arg(long = "in", value_name = "FILE")]
    pub input: Option<PathBuf>,
    /// Output file (default: stdout)
    #[arg(long, value_name = "FILE")]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, Args)]
pub struct Tol {
    #[arg(long, default_value_t = DEFAULT_TOL, value_parser = parse_tol)]
    pub tol: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SampleKind {
    Pure,
    Unitary,
    Density,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Density document -> canonical purification (pure_state document)
    Purify {
        #[command(flatten)]
        io: Io,
        #[command(flatten)]
        tol: Tol,
    },
    /// Pure_state document -> reduced density matrix of the first factor
    Trace {
        #[command(flatten)]
        io: Io,
        #[command(flatten)]
        tol: Tol,
    },
    /// Ancilla unitary taking one purification to another ("-" reads stdin)
    Connect {
        psi: PathBuf,
        phi: PathBuf,
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
        #[command(flatten)]
        tol: Tol,
    },
    /// Rank, stratum and stabilizer dimensions, purity and spectrum
    Classify {
        #[command(flatten)]
        io: Io,
        #[command(flatten)]
        tol: Tol,
    },
    /// Convex split into states of rank one lower
    Split {
        #[command(flatten)]
        io: Io,
        #[command(flatten)]
        tol: Tol,
    },
    /// Bloch vector of a qubit state, or the state at a given Bloch vector
    Bloch {
        #[command(flatten)]
        io: Io,
        #[command(flatten)]
        tol: Tol,
        #[arg(long, num_args = 3, value_names = ["X", "Y", "Z"], allow_negative_numbers = true)]
        from: Option<Vec<f64>>,
    },
    /// Compare numerical tangent ranks with the stratum dimension formula
    VerifyDimension {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        mu: usize,
        #[arg(long, default_value_t = 20)]
        samples: usize,
        #[arg(long, default_value = "0", value_parser = parse_seed)]
        seed: u64,
        /// Minimum spacing of the sampled nonzero eigenvalues
        #[arg(long, default_value_t = dmstrata::sampling::DEFAULT_GENERIC_GAP, value_parser = parse_tol)]
        gap: f64,
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
        #[command(flatten)]
        tol: Tol,
    },
    /// Seeded random pure state, unitary or density matrix
    Sample {
        #[arg(long, value_enum)]
        kind: SampleKind,
        #[arg(long)]
        n: usize,
        /// Rank of a sampled density matrix (default: n)
        #[arg(long)]
        mu: Option<usize>,
        #[arg(long, default_value = "0", value_parser = parse_seed)]
        seed: u64,
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
}

/// Decimal or `0x`-prefixed hexadecimal.
pub fn parse_seed(s: &str) -> Result<u64, String> {
    let parsed = match s.strip_prefix("0x").or_else(|| s.strip_prefix("0X")) {
        Some(hex) => u64::from_str_radix(hex, 16),
        None => s.parse(),
    };
    parsed.map_err(|e| format!("invalid seed {s:?}: {e}"))
}

fn parse_tol(s: &str) -> Result<f64, String> {
    match s.parse::<f64>() {
        Ok(t) if t.is_finite() && t > 0.0 => Ok(t),
        _ => Err(format!("expected a positive number, got {s:?}")),
    }
}

/// Runs one invocation and returns its exit code:
/// 0 ok, 2 parse, 3 validation, 4 precondition, 5 numerical failure.
///
/// Output is written only once the command has succeeded, except that a
/// failed numerical check still emits its report (with a non-"ok" status).
pub fn run<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                let _ = write!(stderr, "{e}");
                exit::PARSE
            } else {
                let _ = write!(stdout, "{e}");
                exit::OK
            };
            return code;
        }
    };
    let out_path = commands::out_path(&cli.command).cloned();
    let (body, code) = match commands::execute(&cli.command, stdin) {
        Ok(body) => (Some(body), exit::OK),
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            let code = e.exit_code();
            match e {
                CliError::Failed { report, .. } => (Some(report), code),
                _ => (None, code),
            }
        }
    };
    if let Some(body) = body {
        let written = match &out_path {
            Some(path) => std::fs::write(path, body.as_bytes()),
            None => stdout.write_all(body.as_bytes()).and_then(|_| stdout.flush()),
        };
        if let Err(e) = written {
            let _ = writeln!(stderr, "error: cannot write output: {e}");
            return exit::PARSE;
        }
    }
    code
}
