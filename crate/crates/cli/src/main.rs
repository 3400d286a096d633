// `!(a <= b)` rejects NaN along with out-of-range values.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

use std::process::ExitCode;

use clap::Parser;

mod args;
mod commands;
mod config;
mod error;
mod output;

use args::{Cli, Command};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Report(a) => commands::report::run(a),
        Command::Sweep(a) => commands::sweep::run(a),
        Command::Distribution(a) => commands::distribution::run(a),
        Command::Channel(a) => commands::channel::run(a),
        Command::Verify(a) => commands::verify::run(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("superdiscord: {e}");
            e.exit_code()
        }
    }
}
