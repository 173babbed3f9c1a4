// Copyright 2026 The lgkit Authors
// SPDX-License-Identifier: Apache-2.0

//! Two-mode Wigner functions, the entangled `(σ, γ)` coordinates and the
//! `σ`-plane marginal distribution.

mod coords;
mod marginal;
mod wigner;

pub use coords::{from_sigma_gamma, to_sigma_gamma, PhasePoint4, SigmaGamma, Q_BOUND_TOL};
pub use marginal::{
    default_marginal_quadrature, marginal_sigma_analytic, marginal_sigma_from_overlap, marginal_sigma_quadrature,
    marginal_sigma_quadrature_with, GAMMA_MEASURE, MARGINAL_NODES,
};
pub use wigner::{
    normalization_half_width, wigner_bruteforce, wigner_lg, wigner_lg_total_mass, wigner_number_state, DisplacedParity,
    DISPLACEMENT_GUARD_PER_ALPHA, NORMALIZATION_NODES,
};
