//! `hclif`: command-line front end for the exact constructions.
//!
//! Exit status is 0 on success, 1 for usage errors and 2 when a solver rejects
//! its input.

mod args;
mod commands;

use std::io::Write;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;

use args::{Cli, Command};
use commands::Failure;

fn run(cli: &Cli) -> Result<String, Failure> {
    match &cli.command {
        Command::Hermite(a) => commands::hermite(a),
        Command::Ck(a) => commands::ck(a),
        Command::Vekua(a) => commands::vekua(a),
        Command::Powers(a) => commands::powers(a),
        Command::Bessel(a) => commands::bessel(a),
        Command::Verify(a) => commands::verify(a),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(1),
            };
        }
    };
    match run(&cli) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(out.as_bytes()).and_then(|_| stdout.flush()).is_err() {
                return ExitCode::from(2);
            }
            ExitCode::SUCCESS
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
