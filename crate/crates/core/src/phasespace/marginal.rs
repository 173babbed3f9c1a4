// Copyright 2026 The lgkit Authors
// SPDX-License-Identifier: Apache-2.0

use std::f64::consts::PI;

use num_complex::Complex64;

use super::coords::{from_sigma_gamma, SigmaGamma};
use super::wigner::wigner_lg;
use crate::error::{LgError, Result};
use crate::fockspace::ModeIndex;
use crate::modes::{lg_marginal_closed_form, tau_overlap_lg, TauPoint};
use crate::par::{self, Execution};
use crate::quadrature::QuadratureSpec;

/// Jacobian of `d²γ = dRe(γ) dIm(γ)` in `∫ d²γ W(σ, γ)`.
///
/// `(α, β*) -> (σ, γ)` has complex determinant 2, so
/// `d²σ d²γ = 4 d²α d²β = dx1 dp1 dx2 dp2` and the factor is exactly 1.
/// `gamma_measure_calibration` in the tests pins it against the vacuum.
pub const GAMMA_MEASURE: f64 = 1.0;

/// Gauss-Legendre nodes per axis for the γ-plane integral.
pub const MARGINAL_NODES: usize = 96;

/// Closed-form `σ`-marginal of `|n,l⟩`:
/// `(e^{-|σ|²}/π) 2^{m_ρ-n_ρ} (m_ρ!/n_ρ!) |Σ_k Σ_j …|²`.
pub fn marginal_sigma_analytic(idx: ModeIndex, sigma: Complex64) -> f64 {
    lg_marginal_closed_form(idx, sigma)
}

/// `(1/π) |⟨τ = σ|n,l⟩|²`.
pub fn marginal_sigma_from_overlap(idx: ModeIndex, sigma: Complex64) -> f64 {
    tau_overlap_lg(idx, TauPoint::new(sigma)).norm_sqr() / PI
}

/// Default box for [`marginal_sigma_quadrature`]: half-width `6 + √n`,
/// [`MARGINAL_NODES`] Gauss-Legendre nodes per axis.
pub fn default_marginal_quadrature(idx: ModeIndex) -> QuadratureSpec {
    QuadratureSpec::gauss_legendre(6.0 + (idx.n() as f64).sqrt(), MARGINAL_NODES)
        .expect("static quadrature parameters are valid")
}

fn gamma_plane_sum(idx: ModeIndex, sigma: Complex64, q: &QuadratureSpec, exec: Execution) -> f64 {
    let rule = q.axis_rule();
    let k = rule.len();
    let rows = par::map_range(exec, k, |i| {
        let mut acc = 0.0;
        for j in 0..k {
            let gamma = Complex64::new(rule.nodes[i], rule.nodes[j]);
            let pt = from_sigma_gamma(SigmaGamma::new(sigma, gamma));
            acc += rule.weights[j] * wigner_lg(idx, pt);
        }
        rule.weights[i] * acc
    });
    GAMMA_MEASURE * rows.into_iter().sum::<f64>()
}

/// `∫ d²γ W_{|n,l⟩}(σ, γ)` by tensor quadrature over the γ box, with the
/// node-doubling self check.
pub fn marginal_sigma_quadrature(idx: ModeIndex, sigma: Complex64, q: &QuadratureSpec) -> Result<f64> {
    marginal_sigma_quadrature_with(idx, sigma, q, Execution::default())
}

pub fn marginal_sigma_quadrature_with(
    idx: ModeIndex,
    sigma: Complex64,
    q: &QuadratureSpec,
    exec: Execution,
) -> Result<f64> {
    q.validate()?;
    let need = 5.0 + (idx.n() as f64).sqrt();
    if q.half_width < need {
        return Err(LgError::InvalidArgument(format!(
            "γ-plane half-width {} below {need} for n={}",
            q.half_width,
            idx.n()
        )));
    }
    let coarse = gamma_plane_sum(idx, sigma, q, exec);
    let fine = gamma_plane_sum(idx, sigma, &q.doubled(), exec);
    q.check_doubling(coarse, fine)?;
    Ok(coarse)
}
