// Copyright 2026 The lgkit Authors
// SPDX-License-Identifier: Apache-2.0

use std::io;
use std::path::PathBuf;

use lgkit::LgError;

/// Exit status for a failed verification or numerical self check.
pub const EXIT_CHECK_FAILED: u8 = 1;
pub const EXIT_INVALID: u8 = 2;
pub const EXIT_IO: u8 = 3;
pub const EXIT_CUTOFF: u8 = 4;
pub const EXIT_SINGULAR_ORDER: u8 = 5;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Lg(#[from] LgError),
    #[error("{}: {source}", path.as_ref().map_or("<stdout>".into(), |p| p.display().to_string()))]
    Io { path: Option<PathBuf>, source: io::Error },
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Lg(e) => match e {
                LgError::InvalidModeIndex { .. } | LgError::InvalidArgument(_) | LgError::FieldNotDecaying { .. } => {
                    EXIT_INVALID
                }
                LgError::CutoffTooSmall { .. } => EXIT_CUTOFF,
                LgError::OrderNearSingular { .. } => EXIT_SINGULAR_ORDER,
                LgError::QuadratureUnderResolved { .. } | LgError::ConvergenceFailure { .. } => EXIT_CHECK_FAILED,
            },
            CliError::Io { .. } => EXIT_IO,
        }
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;
