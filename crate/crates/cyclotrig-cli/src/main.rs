use std::process::ExitCode;

use clap::Parser;

fn main() -> ExitCode {
    let cli = cyclotrig_cli::Cli::parse();
    cyclotrig_cli::run(cli)
}
