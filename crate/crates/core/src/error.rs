// Copyright 2026 The lgkit Authors
// SPDX-License-Identifier: Apache-2.0

use thiserror::Error;

pub type Result<T> = std::result::Result<T, LgError>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum LgError {
    /// `|l| > n` or `n - |l|` odd.
    #[error("invalid mode index (n={n}, l={l}): need |l| <= n and n - |l| even")]
    InvalidModeIndex { n: u32, l: i32 },

    #[error("basis cutoff N_max={nmax} too small: {needed} excitations required")]
    CutoffTooSmall { needed: usize, nmax: usize },

    #[error("operator series did not converge within {terms} terms")]
    ConvergenceFailure { terms: usize },

    #[error("quadrature under-resolved: node doubling moved result by {change:e} (limit {limit:e})")]
    QuadratureUnderResolved { change: f64, limit: f64 },

    #[error("fractional order alpha={alpha} too close to a multiple of pi (|sin alpha| < {band})")]
    OrderNearSingular { alpha: f64, band: f64 },

    #[error("sampled field does not decay at the box edge (edge/max = {ratio:e})")]
    FieldNotDecaying { ratio: f64 },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}
