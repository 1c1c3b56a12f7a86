//! `bddk`: kernelize, solve and verify Bounded-Degree Vertex Deletion instances.
//!
//! Exit codes: 0 success, 1 verification failure, 2 refusal (size caps),
//! 3 parse or input error.

mod commands;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use bdd_core::format::Format;
use clap::{Args, Parser, Subcommand};

use crate::commands::CliError;

#[derive(Parser)]
#[command(
    name = "bddk",
    version,
    about = "Bounded-Degree Vertex Deletion kernelization"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct InstanceArgs {
    /// Instance file
    #[arg(long)]
    input: PathBuf,
    /// Degree bound d
    #[arg(long)]
    degree: usize,
    /// dimacs or plain; detected from the file when omitted
    #[arg(long)]
    format: Option<Format>,
}

#[derive(Subcommand)]
enum Command {
    /// Shrink an instance to a kernel plus a partial solution C.
    Kernelize {
        #[command(flatten)]
        instance: InstanceArgs,
        /// Write the kernel graph here (input format, original labels)
        #[arg(long)]
        kernel_out: Option<PathBuf>,
        /// Write the C and I sets here
        #[arg(long)]
        sets_out: Option<PathBuf>,
        /// Write key=value run statistics here instead of stdout
        #[arg(long)]
        stats_out: Option<PathBuf>,
        /// Also solve the kernel exactly and report the size-bound ratio
        #[arg(long)]
        exact: bool,
        /// Largest kernel the exact solver accepts
        #[arg(long, default_value_t = 24)]
        max_exact: usize,
    },
    /// Kernelize, solve the kernel exactly and lift the solution.
    Solve {
        #[command(flatten)]
        instance: InstanceArgs,
        /// Largest kernel the exact solver accepts
        #[arg(long, default_value_t = 24)]
        max_exact: usize,
    },
    /// Check that a C/I sets file induces a d-bounded decomposition.
    Verify {
        #[command(flatten)]
        instance: InstanceArgs,
        /// Sets file with `C:` and `I:` lines
        #[arg(long)]
        sets: PathBuf,
    },
    /// Generate a seeded random graph.
    Gen {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        seed: u64,
        /// Only gnm is supported
        #[arg(long, default_value = "gnm")]
        model: String,
        #[arg(long, default_value = "dimacs")]
        format: Format,
        /// Output file; stdout when omitted
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.exit_code() == 0 { 0 } else { 3 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let result = match cli.command {
        Command::Kernelize {
            instance,
            kernel_out,
            sets_out,
            stats_out,
            exact,
            max_exact,
        } => commands::kernelize(commands::KernelizeArgs {
            input: instance.input,
            degree: instance.degree,
            format: instance.format,
            kernel_out,
            sets_out,
            stats_out,
            exact: exact.then_some(max_exact),
        }),
        Command::Solve {
            instance,
            max_exact,
        } => commands::solve(&instance.input, instance.degree, instance.format, max_exact),
        Command::Verify { instance, sets } => {
            commands::verify(&instance.input, instance.degree, instance.format, &sets)
        }
        Command::Gen {
            n,
            m,
            seed,
            model,
            format,
            output,
        } => commands::generate(n, m, seed, &model, format, output.as_deref()),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("bddk: {e}");
            ExitCode::from(match e {
                CliError::VerificationFailed => 1,
                CliError::Refused(_) => 2,
                CliError::Input(_) => 3,
            })
        }
    }
}
