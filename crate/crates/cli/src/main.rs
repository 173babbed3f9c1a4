// Copyright 2026 The lgkit Authors
// SPDX-License-Identifier: Apache-2.0

//! `lgkit`: tabulate LG modes, Wigner slices, marginals and transform
//! checks, and run the verification suites.
//!
//! Exit status: 0 success, 1 failed check, 2 invalid arguments, 3 I/O
//! failure, 4 Fock cutoff too small, 5 FrFT order too close to a multiple
//! of π.

mod args;
mod commands;
mod error;
mod grid;
mod output;

use std::process::ExitCode;

use clap::Parser;

use crate::args::Cli;
use crate::error::EXIT_INVALID;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_INVALID } else { 0 });
        }
    };
    match commands::run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("lgkit: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
