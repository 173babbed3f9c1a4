// Copyright 2026 The lgkit Authors
// SPDX-License-Identifier: Apache-2.0

mod frft;
mod gwt;
mod marginal;
mod mode;
pub mod verify;
mod wigner;

use std::path::PathBuf;

use lgkit::QuadratureSpec;

use crate::args::{Cli, Command, Format};
use crate::error::CliResult;

/// Settings shared by every subcommand.
#[derive(Debug, Clone)]
pub struct Globals {
    pub nmax: usize,
    pub out: Option<PathBuf>,
    pub format: Format,
    pub tol: Option<f64>,
}

impl Globals {
    /// `q` with the `--tol` self-check override applied.
    pub fn tune(&self, q: QuadratureSpec) -> QuadratureSpec {
        match self.tol {
            Some(t) => q.with_self_check_tol(t),
            None => q,
        }
    }
}

/// Runs one invocation and returns its exit status.
pub fn run(cli: Cli) -> CliResult<u8> {
    let g = Globals { nmax: cli.nmax, out: cli.out, format: cli.format, tol: cli.tol };
    match cli.command {
        Command::Mode(a) => mode::run(&g, &a).map(|_| 0),
        Command::Wigner(a) => wigner::run(&g, &a).map(|_| 0),
        Command::Marginal(a) => marginal::run(&g, &a).map(|_| 0),
        Command::Frft(a) => frft::run(&g, &a).map(|_| 0),
        Command::Gwt(a) => gwt::run(&g, &a).map(|_| 0),
        Command::Verify(a) => verify::run(&g, &a),
    }
}
