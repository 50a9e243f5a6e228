use std::process::ExitCode;

use clap::Parser;
use mtp_cli::{error_envelope, exit_code, run, Cli};
use mtp_core::Error;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = run(&cli).and_then(|text| match &cli.out {
        Some(path) => std::fs::write(path, text).map_err(|e| Error::Parse(format!("{}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    });
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            print!("{}", error_envelope(&e));
            ExitCode::from(exit_code(&e) as u8)
        }
    }
}
