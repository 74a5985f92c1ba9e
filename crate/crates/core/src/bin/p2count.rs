use std::io::Write;

use clap::Parser;
use p2count::cli::{execute, CliArgs, CliConfig, EXIT_INPUT};

fn main() {
    let config = match CliConfig::try_from(CliArgs::parse()) {
        Ok(c) => c,
        Err(msg) => {
            eprintln!("p2count: {msg}");
            std::process::exit(EXIT_INPUT);
        }
    };
    let outcome = execute(&config);
    let _ = std::io::stdout().write_all(outcome.stdout.as_bytes());
    let _ = std::io::stderr().write_all(outcome.stderr.as_bytes());
    std::process::exit(outcome.code);
}
