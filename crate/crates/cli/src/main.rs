use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use kquiver_cli::{run, Cli, Status};

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok((out, status)) => {
            let _ = std::io::stdout().write_all(out.as_bytes());
            match status {
                Status::Ok => ExitCode::SUCCESS,
                Status::CheckFailed => ExitCode::from(1),
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
