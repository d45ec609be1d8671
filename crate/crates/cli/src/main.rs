use std::io::Read;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use cathedral_cli::commands::{self, DotTarget};
use cathedral_cli::error::EXIT_VERIFY_FAILED;
use cathedral_cli::verify::{self, VerifyOptions};
use cathedral_cli::{CliError, Format};

/// Canonical matching structure of graphs: Gallai-Edmonds and
/// Dulmage-Mendelsohn decompositions, canonical partition, cathedral order and
/// odd-maximal barriers.
#[derive(Parser)]
#[command(name = "cathedral", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze a graph file ("-" reads stdin).
    Analyze {
        input: String,
        /// Print the JSON report instead of text.
        #[arg(long)]
        json: bool,
        /// Comma-separated vertex ids of a set X to test as a barrier.
        #[arg(long)]
        barrier: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Edgelist)]
        format: Format,
    },
    /// Check the algorithms against brute-force oracles.
    Verify {
        /// Exhaust all connected graphs up to this many vertices.
        #[arg(long, default_value_t = 8)]
        max_n: usize,
        /// Random graphs per corpus.
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Print a random graph with a perfect matching on n vertices and m edges.
    Random {
        n: usize,
        m: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Format::Edgelist)]
        format: Format,
    },
    /// Export Graphviz DOT.
    ExportDot {
        input: String,
        #[arg(long, value_enum)]
        target: DotTarget,
        /// Barrier X, required by the hx target.
        #[arg(long)]
        barrier: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Edgelist)]
        format: Format,
    },
}

fn read_input(path: &str) -> Result<String, CliError> {
    let mut text = String::new();
    let res = if path == "-" {
        std::io::stdin().read_to_string(&mut text).map(|_| ())
    } else {
        std::fs::read_to_string(path).map(|t| text = t)
    };
    res.map_err(|source| CliError::Io {
        path: path.to_string(),
        source,
    })?;
    Ok(text)
}

fn run(cli: Cli) -> Result<ExitCode, CliError> {
    let out = match cli.command {
        Command::Analyze {
            input,
            json,
            barrier,
            format,
        } => commands::analyze(&read_input(&input)?, format, json, barrier.as_deref())?,
        Command::Verify { max_n, samples, seed } => {
            let report = verify::run(VerifyOptions { max_n, samples, seed }, &cathedral::verify::production);
            print!("{}", verify::render(&report, 5));
            return Ok(if report.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(EXIT_VERIFY_FAILED)
            });
        }
        Command::Random { n, m, seed, format } => commands::random(n, m, seed, format)?,
        Command::ExportDot {
            input,
            target,
            barrier,
            format,
        } => commands::export_dot(&read_input(&input)?, format, target, barrier.as_deref())?,
    };
    print!("{out}");
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
