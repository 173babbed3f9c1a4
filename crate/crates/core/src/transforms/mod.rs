// Copyright 2026 The lgkit Authors
// SPDX-License-Identifier: Apache-2.0

//! The complex fractional Fourier transform on the `τ` plane and the
//! generalized Wigner transform of Hermite-Gaussian modes.

mod frft;
mod gwt;

pub use frft::{
    default_frft_quadrature, eigen_sample_points, frft, frft_eigen_fit, frft_eigen_fit_on, frft_eigen_residual,
    frft_many, frft_quadrature_for, wrap_phase, EigenFit, FrftOrder, FrftPlan, SampledField, DEFAULT_HALF_WIDTH,
    DEFAULT_NODES, EDGE_DECAY_LIMIT, SINGULAR_BAND,
};
pub use gwt::{
    gwt, gwt_lg_identity_residual, gwt_sample_points, schmidt_overlap_check, GWT_CHECK_LIMIT, GWT_CHECK_NODES,
    GWT_NODES,
};
