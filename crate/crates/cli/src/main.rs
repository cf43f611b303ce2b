//! `effectors`: validate, score, solve, simulate and generate instances of
//! the effectors problem under the Independent Cascade model.
//!
//! Every command prints one JSON document on stdout. Exit codes: 0 success
//! or "yes", 1 "no", 2 usage or input error, 3 resource limit.

mod args;
mod commands;

use std::process::ExitCode;

use clap::Parser;

use args::Cli;

/// A failed command, carrying its exit code.
#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl Failure {
    pub fn usage(message: impl Into<String>) -> Self {
        Failure { code: 2, message: message.into() }
    }
}

impl From<effectors::Error> for Failure {
    fn from(e: effectors::Error) -> Self {
        Failure { code: if e.is_resource_limit() { 3 } else { 2 }, message: e.to_string() }
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    match commands::run(&cli) {
        Ok(outcome) => {
            print!("{}", outcome.stdout);
            ExitCode::from(outcome.code)
        }
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}
