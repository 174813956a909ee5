//! `pmf`: perfect-matching forcing toolkit for generalized Petersen graphs
//! `P(n,2)`.
//!
//! Exit codes: 0 success, 1 usage or parse error, 2 verification failure,
//! 3 enumeration budget exhausted.

mod commands;
mod output;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};
use std::process::ExitCode;

#[derive(Debug, Parser)]
#[command(
    name = "pmf",
    about = "Forcing numbers, polynomials and spectra of perfect matchings of P(n,2)",
    version
)]
struct Cli {
    /// Worker threads for sweeps (defaults to all cores)
    #[arg(long, global = true, env = "PMF_JOBS")]
    jobs: Option<usize>,

    /// Output format
    #[arg(long, global = true, default_value = "text", value_parser = ["text", "json", "csv"])]
    format: String,

    /// Write output to this path instead of stdout (a directory for range
    /// sweeps, which then checkpoint per-n results and resume)
    #[arg(long, global = true)]
    out: Option<std::path::PathBuf>,

    /// Enumeration budget for polynomial sweeps
    #[arg(long, global = true, default_value_t = 200_000)]
    budget_matchings: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the edge list of P(n,k), one `u v` pair per line
    Gen {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 2)]
        k: usize,
    },
    /// Forcing polynomial of P(n,2), total and split by matching type
    Polynomial {
        #[arg(long, conflicts_with = "n_range")]
        n: Option<usize>,
        /// Inclusive range `A..B`
        #[arg(long, value_name = "A..B")]
        n_range: Option<String>,
        /// Restrict the reported split to one matching type
        #[arg(long = "type", default_value = "all", value_parser = ["1", "2", "all"])]
        type_filter: String,
    },
    /// Minimum forcing number and a witness set for one matching
    Forcing {
        #[arg(long)]
        n: usize,
        /// Chain expression (`B^9`, `CD^4C^2`, ...) or comma-separated edge ids
        #[arg(long)]
        matching: String,
    },
    /// Check catalog claims against solver ground truth and bundled data
    Verify {
        /// counts | table1 | extremal | dcform | spectrum | gaps | textual | all
        what: String,
        #[arg(long, conflicts_with_all = ["n", "n_range"])]
        max_n: Option<usize>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, value_name = "A..B")]
        n_range: Option<String>,
    },
}

/// A failure with a chosen process exit code.
pub(crate) struct Failure {
    pub code: u8,
    pub message: String,
}

impl Failure {
    pub fn usage(message: impl Into<String>) -> Failure {
        Failure {
            code: 1,
            message: message.into(),
        }
    }
}

impl From<pmf_core::Error> for Failure {
    fn from(e: pmf_core::Error) -> Failure {
        let code = match e {
            pmf_core::Error::BudgetExceeded { .. } => 3,
            _ => 1,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Failure {
        Failure {
            code: 1,
            message: e.to_string(),
        }
    }
}

fn parse_range(text: &str) -> Result<(usize, usize), Failure> {
    let (a, b) = text
        .split_once("..")
        .ok_or_else(|| Failure::usage(format!("bad range {text:?}; expected A..B")))?;
    let lo: usize = a
        .trim()
        .parse()
        .map_err(|_| Failure::usage(format!("bad range start {a:?}")))?;
    let hi: usize = b
        .trim()
        .trim_start_matches('=')
        .parse()
        .map_err(|_| Failure::usage(format!("bad range end {b:?}")))?;
    if lo > hi {
        return Err(Failure::usage(format!("empty range {text:?}")));
    }
    Ok((lo, hi))
}

fn run(cli: Cli) -> Result<ExitCode, Failure> {
    if let Some(jobs) = cli.jobs {
        if jobs == 0 {
            return Err(Failure::usage("--jobs must be at least 1"));
        }
        // Ignore failure: the global pool can only be set once.
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global();
    }
    let ctx = commands::Context {
        format: cli.format.clone(),
        out: cli.out.clone(),
        budget: pmf_core::SweepBudget {
            max_matchings: cli.budget_matchings,
        },
    };
    match cli.command {
        Command::Gen { n, k } => commands::gen(&ctx, n, k),
        Command::Polynomial {
            n,
            n_range,
            type_filter,
        } => {
            let range = match (n, n_range) {
                (Some(n), None) => (n, n),
                (None, Some(r)) => parse_range(&r)?,
                (None, None) => return Err(Failure::usage("need --n or --n-range")),
                (Some(_), Some(_)) => unreachable!("clap conflicts_with"),
            };
            commands::polynomial(&ctx, range, &type_filter)
        }
        Command::Forcing { n, matching } => commands::forcing(&ctx, n, &matching),
        Command::Verify {
            what,
            max_n,
            n,
            n_range,
        } => {
            // --n / --n-range pin both ends; --max-n keeps the family's
            // natural lower bound
            let range = if let Some(v) = n {
                (Some(v), Some(v))
            } else if let Some(r) = n_range {
                let (lo, hi) = parse_range(&r)?;
                (Some(lo), Some(hi))
            } else {
                (None, max_n)
            };
            commands::verify(&ctx, &what, range)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
