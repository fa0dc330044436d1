mod commands;
mod error;
mod output;
mod scenario;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use commands::{parse_alpha, parse_generator, AlphaChoice, BoundArgs};
use error::CliError;
use output::{emit, Format};
use scenario::Scenario;

#[derive(Debug, Parser)]
#[command(
    name = "bayes-bounds",
    version,
    about = "Bayes error, total variation and Chernoff-type bounds"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format (defaults to text, or csv for table1 and gap)
    #[arg(long, value_enum, global = true)]
    format: Option<Format>,

    /// Write the report to this file instead of stdout
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Upper bound on the probability of error from a skewed affinity
    Bound {
        scenario: PathBuf,
        /// A skew in [0, 1], `chernoff` or `bhattacharyya`
        #[arg(long, default_value = "bhattacharyya", value_parser = parse_alpha)]
        alpha: AlphaChoice,
        /// Integrate the mean numerically instead of using the closed form
        #[arg(long)]
        numeric: bool,
        /// Mean generator: arithmetic, geometric, harmonic or power:<p>
        #[arg(long, value_parser = parse_generator)]
        generator: Option<bayes_bounds::MeanGenerator>,
        /// Draws for the numeric path in more than two dimensions
        #[arg(long, default_value_t = 10_000)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Exact total variation, Bayes error and probability of error
    Exact { scenario: PathBuf },
    /// Monte Carlo estimates of total variation and probability of error
    Estimate {
        scenario: PathBuf,
        #[arg(long, default_value_t = 10_000)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Comma-separated increasing sample sizes; prints a CSV convergence table
        #[arg(long, value_delimiter = ',')]
        convergence: Option<Vec<usize>>,
    },
    /// Multivariate t experiment: ν = 6, Σ1 = I, Σ2 = (d+1) I
    Table1 {
        #[arg(long, default_value_t = 10_000)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Cauchy gap between the harmonic-mean bound and the exact error
    Gap {
        #[arg(long, default_value_t = 20.0)]
        lambda_max: f64,
        #[arg(long, default_value_t = 190)]
        steps: usize,
    },
}

fn run(cli: Cli) -> Result<(), CliError> {
    let text_or = |fallback| cli.format.unwrap_or(fallback);
    let report = match &cli.command {
        Command::Bound {
            scenario,
            alpha,
            numeric,
            generator,
            n,
            seed,
        } => {
            let s = Scenario::load(scenario)?;
            let args = BoundArgs {
                alpha: *alpha,
                numeric: *numeric,
                generator: *generator,
                n: *n,
                seed: *seed,
            };
            commands::bound(&s, &args)?.render(text_or(Format::Text))
        }
        Command::Exact { scenario } => {
            commands::exact(&Scenario::load(scenario)?)?.render(text_or(Format::Text))
        }
        Command::Estimate {
            scenario,
            n,
            seed,
            convergence,
        } => {
            let s = Scenario::load(scenario)?;
            match convergence {
                Some(list) => commands::convergence(&s, list, *seed)?.render(Format::Csv),
                None => commands::estimate(&s, *n, *seed)?.render(text_or(Format::Text)),
            }
        }
        Command::Table1 { n, seed } => commands::table1(*n, *seed)?.render(text_or(Format::Csv)),
        Command::Gap { lambda_max, steps } => {
            commands::gap(*lambda_max, *steps)?.render(text_or(Format::Csv))
        }
    };
    emit(&report, cli.out.as_deref())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
