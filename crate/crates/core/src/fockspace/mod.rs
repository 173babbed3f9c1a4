// Copyright 2026 The lgkit Authors
// SPDX-License-Identifier: Apache-2.0

//! Truncated two-mode Fock space.

mod basis;
pub mod checks;
mod operators;
mod state;

pub use basis::{BasisSpec, ModeIndex, TRUNCATION_GUARD};
pub use operators::{
    a_minus, a_plus, angular_momentum_operator, annihilation, beam_splitter, bilinear, creation, jx_operator,
    jx_rotation, jz_operator, momentum_quadrature, number_operator, position_quadrature, Mode, OperatorMatrix,
};
pub use state::{
    build_eta_state, build_tau_state, lg_state_beamsplitter, lg_state_ladder, TwoModeState, SERIES_TAIL_TOL,
    SERIES_TERM_CAP,
};
