use std::process::ExitCode;

use clap::Parser;
use holotriple_cli::args::Cli;
use holotriple_cli::{run, Status};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let status = match run(&cli, &mut std::io::stdout().lock()) {
        Ok(s) => s,
        Err(f) => {
            eprintln!("error: {}", f.message());
            f.status()
        }
    };
    if status == Status::MathFailure {
        eprintln!("FAIL");
    }
    ExitCode::from(status as u8)
}
