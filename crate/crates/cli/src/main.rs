use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use matroid_perspective::commands::{run, Command, DEFAULT_SEED};
use matroid_perspective::tutte::Method;

/// Trivariate Tutte polynomials of matroid perspectives.
#[derive(Parser)]
#[command(name = "mpersp", version)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print the trivariate Tutte polynomial.
    Tutte {
        /// activities, compatible or rank-gen
        #[arg(long, default_value = "activities")]
        method: Method,
        #[arg(long)]
        input: Option<PathBuf>,
    },
    /// Print the bijection between independent-spanning sets and D as TSV.
    Table {
        #[arg(long)]
        input: Option<PathBuf>,
    },
    /// Print the compatible family D, one set per line.
    Compatible {
        #[arg(long)]
        input: Option<PathBuf>,
    },
    /// Run the property checks and report each one.
    Check {
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long)]
        input: Option<PathBuf>,
    },
}

fn read_input(path: Option<&PathBuf>) -> io::Result<String> {
    match path {
        Some(p) => std::fs::read_to_string(p),
        None => {
            let mut text = String::new();
            io::stdin().read_to_string(&mut text)?;
            Ok(text)
        }
    }
}

fn main() -> ExitCode {
    // exit code 2 means an invalid perspective, so usage errors exit 1
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    let (command, input) = match cli.command {
        Cmd::Tutte { method, input } => (Command::Tutte(method), input),
        Cmd::Table { input } => (Command::Table, input),
        Cmd::Compatible { input } => (Command::Compatible, input),
        Cmd::Check { seed, input } => (Command::Check { seed }, input),
    };
    let text = match read_input(input.as_ref()) {
        Ok(text) => text,
        Err(e) => {
            eprintln!("error: cannot read input: {e}");
            return ExitCode::from(1);
        }
    };
    let out = run(command, &text);
    // a closed pipe on stdout is not worth reporting
    let _ = io::stdout().write_all(out.stdout.as_bytes());
    let _ = io::stderr().write_all(out.stderr.as_bytes());
    ExitCode::from(out.exit_code as u8)
}
