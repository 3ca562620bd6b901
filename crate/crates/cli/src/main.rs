//! `asm3`: exact tables, identity checks and concentration scans for refined
//! alternating sign matrix enumerations.

mod commands;
mod parse;
mod suites;

use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use asm3_core::Rational;
use suites::Suite;

/// Exit status for a failed verification.
const EXIT_FAILED: u8 = 1;
/// Exit status for invalid arguments.
const EXIT_USAGE: u8 = 2;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Parser, Debug)]
#[command(
    name = "asm3",
    version,
    about = "Exact refined enumerations of alternating sign matrices"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print A(n, r; x) for every r.
    Table {
        /// Sizes: `5`, `4,6,8` or the inclusive range `2..10`.
        #[arg(long, value_parser = parse::sizes)]
        n: parse::Sizes,
        /// Weight per −1 entry, as `p/q`, an integer or a decimal.
        #[arg(long, default_value = "1", value_parser = parse::rational, allow_hyphen_values = true)]
        x: Rational,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Run an identity suite, printing one PASS/FAIL line per check.
    Verify {
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
        /// Largest half-size index m.
        #[arg(long, default_value_t = 10)]
        max_m: u32,
        /// Largest matrix size n.
        #[arg(long, default_value_t = 8)]
        max_n: usize,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Exact central mass Σ_{|(r−1)/(n−1) − 1/2| < ε} A(n,r;x)/A(n;x).
    Scan {
        #[arg(long, value_parser = parse::sizes)]
        n: parse::Sizes,
        #[arg(long, value_parser = parse::rational)]
        epsilon: Rational,
        /// One of 1, 2, 3.
        #[arg(long, default_value_t = 3)]
        x: u32,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
}

fn thread_pool() -> Result<(), String> {
    let Ok(value) = std::env::var("ASM3_THREADS") else {
        return Ok(());
    };
    let threads: usize = value
        .trim()
        .parse()
        .ok()
        .filter(|&t| t > 0)
        .ok_or_else(|| format!("ASM3_THREADS must be a positive integer, got `{value}`"))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global()
        .map_err(|e| e.to_string())
}

fn run(cli: Cli) -> Result<commands::Outcome, String> {
    thread_pool()?;
    match cli.command {
        Command::Table { n, x, format } => commands::table(&n.0, &x, format),
        Command::Verify {
            suite,
            max_m,
            max_n,
            format,
        } => commands::verify(suite, max_m, max_n, format),
        Command::Scan {
            n,
            epsilon,
            x,
            format,
        } => commands::scan(&n.0, &epsilon, x, format),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(outcome) => {
            let mut stdout = std::io::stdout().lock();
            // A closed pipe is not worth reporting.
            let _ = stdout.write_all(outcome.text.as_bytes());
            if outcome.passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(EXIT_FAILED)
            }
        }
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}
