//! `zdg`: command-line access to the zero-divisor graph engines.
//!
//! Exit codes: 0 success or agreement, 1 usage error, 2 the engines
//! disagree, 3 the oracle cap was exceeded.

mod args;
mod commands;
mod render;

use std::io::Write;
use std::process;

use clap::error::ErrorKind;
use clap::Parser;

use args::Cli;
use commands::{resolve_oracle_cap, Context, ExitCode, ORACLE_CAP_ENV};

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::Success,
                _ => ExitCode::Usage,
            };
            process::exit(code as i32);
        }
    };

    let result = resolve_oracle_cap(cli.oracle_max_n, std::env::var(ORACLE_CAP_ENV).ok()).and_then(
        |oracle_cap| {
            let ctx = Context {
                method: cli.method,
                format: cli.format,
                oracle_cap,
            };
            commands::run(&ctx, cli.command)
        },
    );

    match result {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(out.stdout.as_bytes()).is_err() {
                process::exit(ExitCode::Usage as i32);
            }
            let _ = stdout.flush();
            process::exit(out.code as i32);
        }
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            process::exit(failure.code as i32);
        }
    }
}
