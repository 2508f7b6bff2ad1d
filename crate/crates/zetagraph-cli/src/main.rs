use std::process::ExitCode;

use clap::Parser;
use zetagraph_cli::{exit, run, Cli, CliError};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match run(cli) {
        Ok(out) => {
            println!("{out}");
            exit::OK
        }
        Err(CliError::Mismatch(report)) => {
            println!("{report}");
            eprintln!("verification failed");
            exit::MISMATCH
        }
        Err(e) => {
            eprintln!("{e}");
            e.exit_code()
        }
    };
    ExitCode::from(code as u8)
}
