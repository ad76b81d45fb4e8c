use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use sagin_cli::args::Cli;
use sagin_cli::{run, CliError, Environment};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = run(&cli.command, &Environment::from_process()).and_then(|report| {
        for w in &report.warnings {
            eprintln!("warning: {w}");
        }
        let mut stdout = std::io::stdout().lock();
        stdout
            .write_all(report.stdout.as_bytes())
            .and_then(|_| stdout.flush())
            .map_err(|e| CliError::Output(format!("cannot write to standard output: {e}")))
    });
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
