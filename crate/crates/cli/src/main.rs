use std::process::ExitCode;

use clap::error::ErrorKind;
use edim_cli::{parse_args, run, EXIT_ERROR};

fn main() -> ExitCode {
    let config = match parse_args(std::env::args_os()) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                // Status 2 is reserved for failed checks.
                _ => ExitCode::from(EXIT_ERROR as u8),
            };
        }
    };
    ExitCode::from(run(&config) as u8)
}
