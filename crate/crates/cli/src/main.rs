mod cli;
mod commands;
mod output;

use std::process::ExitCode;
use std::time::Instant;

use clap::error::ErrorKind;
use clap::Parser;

use cli::{Cli, Command, Format};
use output::{CliError, OutputRecord, Report, EXIT_OK, EXIT_USAGE};

fn run(cli: &Cli) -> Result<(&'static str, Report), CliError> {
    let budget = cli.budget;
    Ok(match &cli.command {
        Command::Count(a) => ("count", commands::count(a, budget)?),
        Command::Enum(a) => ("enum", commands::enumerate(a, budget)?),
        Command::Map(a) => ("map", commands::map(a)?),
        Command::Series(a) => ("series", commands::series(a)?),
        Command::Verify(a) => ("verify", commands::verify(a, budget)?),
        Command::Conjecture(a) => ("conjecture", commands::conjecture(a, budget)?),
        Command::Bfile(a) => ("bfile", commands::bfile(a)?),
    })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::from(EXIT_OK),
                _ => ExitCode::from(EXIT_USAGE),
            };
        }
    };

    let started = Instant::now();
    let (command, report) = match run(&cli) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(e.exit_code());
        }
    };
    let elapsed_us = u64::try_from(started.elapsed().as_micros()).unwrap_or(u64::MAX);

    match cli.format {
        Format::Text => {
            // words are newline-terminated, so an empty path prints as a blank line
            print!("{}", report.text);
            if !report.text.is_empty() && !report.text.ends_with('\n') {
                println!();
            }
        }
        Format::Json => {
            let record = OutputRecord {
                command: command.to_string(),
                params: report.params,
                result: report.result,
                elapsed_us,
            };
            println!("{}", record.to_json());
        }
    }

    match report.mismatch {
        Some(msg) => {
            let e = CliError::Mismatch(msg);
            eprintln!("mismatch: {e}");
            ExitCode::from(e.exit_code())
        }
        None => ExitCode::from(EXIT_OK),
    }
}
