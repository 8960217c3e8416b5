//! `freebound` command-line front-end.

mod args;
mod commands;
mod render;
mod report;

use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

use crate::args::Cli;

/// Process exit status for a library error.
fn exit_code(err: &freebound::Error) -> u8 {
    use freebound::Error::*;
    match err {
        SingularRhs { .. } => 4,
        OmegaNonPositive { .. } | SecantBreakdown { .. } | DomainExit { .. } => 2,
        DegenerateExponent(_) | NonPositiveTime(_) | InvalidParams(_) | DomainError { .. } | NotTabulated(_) => 3,
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(3) } else { ExitCode::SUCCESS };
        }
    };

    let outcome = match commands::run(&cli) {
        Ok(outcome) => outcome,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(exit_code(&e));
        }
    };

    let written = match &cli.out {
        Some(path) => std::fs::write(path, &outcome.text),
        None => std::io::stdout().lock().write_all(outcome.text.as_bytes()),
    };
    if let Err(e) = written {
        eprintln!("error: cannot write output: {e}");
        return ExitCode::from(1);
    }
    if let Some(msg) = &outcome.message {
        eprintln!("{msg}");
    }
    ExitCode::from(outcome.code)
}
