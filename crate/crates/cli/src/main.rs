use std::process::ExitCode;

use clap::{Parser, Subcommand};
use skewbound_cli::report::{compute, ComputeOptions};
use skewbound_cli::{table, verify, CliError};

/// Lower bounds for totally skew embeddings from dual Stiefel-Whitney classes.
#[derive(Parser)]
#[command(name = "skewbound", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Bound report for a manifold such as `G(3,7)` or `RP(2)xRP(4)`.
    Compute {
        expr: String,
        #[arg(long)]
        json: bool,
        /// List every nonzero dual class in normal form.
        #[arg(long)]
        classes: bool,
        /// Also print Sq^1 and Sq^2 of each listed class.
        #[arg(long)]
        steenrod: bool,
    },
    /// Recompute every published bound and compare.
    PaperTable {
        #[arg(long)]
        json: bool,
    },
    /// Cross-check the ring computations against the linear-algebra oracle.
    Verify { expr: String },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Compute {
            expr,
            json,
            classes,
            steenrod,
        } => compute(
            &expr,
            ComputeOptions {
                json,
                classes,
                steenrod,
            },
        )
        .map(|text| (text, 0)),
        Command::PaperTable { json } => {
            table::paper_table(json).map(|c| (c.text.clone(), c.exit_code()))
        }
        Command::Verify { expr } => verify::verify(&expr).map(|c| (c.text.clone(), c.exit_code())),
    };
    match result {
        Ok((text, code)) => {
            print!("{text}");
            ExitCode::from(code as u8)
        }
        Err(e) => {
            eprintln!("skewbound: {e}");
            ExitCode::from(CliError::exit_code(&e) as u8)
        }
    }
}
