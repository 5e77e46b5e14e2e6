//! `flagmod`: reproducible experiments on Weyl groups, Kazhdan–Lusztig
//! elements, the τ-reduction and permutation modules of `SL_n(F_q)`.

mod commands;
mod vector;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "flagmod", version, about = "Weyl groups, KL elements and flag modules in cross characteristic")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Clone, Args)]
pub struct Output {
    /// Report format.
    #[arg(long, alias = "report", value_enum, default_value = "text")]
    pub format: Format,
    /// Write the report here instead of standard output.
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Tabulate Kazhdan–Lusztig polynomials of a finite Weyl group.
    Kl(commands::KlArgs),
    /// Reduce a vector of the span of the `w·D_J` to a multiple of `D_J`.
    Reduce(commands::ReduceArgs),
    /// Permutation-module report for `SL_n(F_q)` over `GF(r)`.
    Permod(commands::PermodArgs),
    /// Order, involution count and parabolic partition of a Weyl group.
    Coxeter(commands::CoxeterArgs),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Kl(a) => commands::kl(&a),
        Command::Reduce(a) => commands::reduce(&a),
        Command::Permod(a) => commands::permod(&a),
        Command::Coxeter(a) => commands::coxeter(&a),
    };
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            let runtime = e.downcast_ref::<flagmod::Error>().is_some_and(|e| {
                matches!(
                    e,
                    flagmod::Error::Internal(_)
                        | flagmod::Error::BudgetExceeded { .. }
                        | flagmod::Error::StepBoundExceeded { .. }
                )
            });
            ExitCode::from(if runtime { 1 } else { 2 })
        }
    }
}
