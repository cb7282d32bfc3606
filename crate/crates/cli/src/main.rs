use clap::Parser;
use std::process::ExitCode;

fn main() -> ExitCode {
    let cli = kratzer_cli::args::Cli::parse();
    match kratzer_cli::run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("kratzer: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
