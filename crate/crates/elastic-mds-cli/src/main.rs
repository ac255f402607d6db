//! `emds` — solve, inspect, and benchmark elastic MDS fits.

mod bench_cmd;
mod datasets_cmd;
mod solve_cmd;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};
use elastic_mds::MdsError;

#[derive(Parser)]
#[command(
    name = "emds",
    version,
    about = "Elastic multidimensional scaling: ratio and ordinal fits under the ratio-normalized stress"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Fit a configuration to dissimilarity data and write result files
    Solve(solve_cmd::SolveArgs),
    /// Time repeated full solves and print quantile statistics
    Bench(bench_cmd::BenchArgs),
    /// List builtin datasets or print one as CSV
    Datasets(datasets_cmd::DatasetsArgs),
}

/// Exit code policy: 0 success, 1 validation/usage errors, 2 non-finite
/// stress during a solve.
fn exit_code_for(err: &anyhow::Error) -> i32 {
    for cause in err.chain() {
        if let Some(MdsError::NonFiniteStress { .. }) = cause.downcast_ref::<MdsError>() {
            return 2;
        }
    }
    1
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            std::process::exit(code);
        }
    };
    let outcome = match cli.command {
        Command::Solve(args) => solve_cmd::run(&args),
        Command::Bench(args) => bench_cmd::run(&args),
        Command::Datasets(args) => datasets_cmd::run(&args),
    };
    if let Err(err) = outcome {
        eprintln!("error: {err:#}");
        std::process::exit(exit_code_for(&err));
    }
}
