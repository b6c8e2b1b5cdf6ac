use std::process::ExitCode;

use clap::Parser;
use orlicz_cli::commands::{run, Cli};
use orlicz_cli::CliError;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("orlicz: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

fn execute(cli: &Cli) -> Result<(), CliError> {
    let out = run(&cli.command)?;
    match &cli.out {
        Some(path) => std::fs::write(path, &out.text)?,
        None => print!("{}", out.text),
    }
    match out.failure {
        Some(msg) => Err(CliError::Failure(msg)),
        None => Ok(()),
    }
}
