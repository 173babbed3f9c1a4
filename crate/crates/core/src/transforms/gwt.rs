// Copyright 2026 The lgkit Authors
// SPDX-License-Identifier: Apache-2.0

use std::f64::consts::{FRAC_1_SQRT_2, PI};

use num_complex::Complex64;

use crate::error::{LgError, Result};
use crate::modes::{tau_overlap_fock, TauPoint};
use crate::quadrature::gauss_hermite_cached;
use crate::specialfn::{hermite, laguerre, log_factorial, sqrt_factorial_ratio};

/// Gauss-Hermite nodes for the GWT integral.
pub const GWT_NODES: usize = 200;
/// Coarse rule for the GWT self check.
pub const GWT_CHECK_NODES: usize = 100;
/// Largest accepted change between the coarse and fine GWT rules.
pub const GWT_CHECK_LIMIT: f64 = 1e-9;

fn gwt_with_nodes(f: u32, v: u32, x: f64, p: f64, nodes: usize) -> Complex64 {
    let rule = gauss_hermite_cached(nodes);
    // ln of √(2^f f! √π) √(2^v v! √π)
    let log_norm = 0.5 * ((f + v) as f64 * 2f64.ln() + log_factorial(f) + log_factorial(v) + PI.ln());
    let pref = (-x * x - log_norm).exp() / PI;
    let sum: Complex64 = rule
        .nodes
        .iter()
        .zip(&rule.weights)
        .map(|(&s, &w)| Complex64::from_polar(w * hermite(f, x - s) * hermite(v, x + s), -2.0 * s * p))
        .sum();
    pref * sum
}

/// Generalized Wigner transform of two Hermite-Gaussian modes,
/// `W_g[h_f, h_v](x, p) = (1/2π) ∫ du e^{-iup} h_f(x - u/2) h_v(x + u/2)`.
///
/// With `u = 2s` the Gaussian factors combine into `e^{-x²} e^{-s²}`, and
/// the remaining `s` integral is done by Gauss-Hermite quadrature with
/// [`GWT_NODES`] nodes, checked against [`GWT_CHECK_NODES`].
pub fn gwt(f_mode: u32, v_mode: u32, x: f64, p: f64) -> Result<Complex64> {
    let fine = gwt_with_nodes(f_mode, v_mode, x, p, GWT_NODES);
    let coarse = gwt_with_nodes(f_mode, v_mode, x, p, GWT_CHECK_NODES);
    let change = (fine - coarse).norm();
    if change > GWT_CHECK_LIMIT || !change.is_finite() {
        return Err(LgError::QuadratureUnderResolved { change, limit: GWT_CHECK_LIMIT });
    }
    Ok(fine)
}

/// `|√(m!/n!) (τ*)^{n-m} L_m^{n-m}(|τ|²) e^{-|τ|²/2} - (-1)^m π W_g[h_m, h_n](τ1/√2, τ2/√2)|`.
pub fn gwt_lg_identity_residual(m: u32, n: u32, tau: Complex64) -> Result<f64> {
    if m > n {
        return Err(LgError::InvalidArgument(format!("need m <= n, got m={m}, n={n}")));
    }
    let r2 = tau.norm_sqr();
    let lhs = tau.conj().powu(n - m) * (sqrt_factorial_ratio(m, n) * laguerre(m, n - m, r2) * (-0.5 * r2).exp());
    let sign = if m.is_multiple_of(2) { 1.0 } else { -1.0 };
    let rhs = sign * PI * gwt(m, n, tau.re * FRAC_1_SQRT_2, tau.im * FRAC_1_SQRT_2)?;
    Ok((lhs - rhs).norm())
}

/// `|conj(⟨τ|m,n⟩) - π (-1)^n W_g[h_m, h_n](τ1/√2, τ2/√2)|`: the Fock
/// overlap `⟨m,n|τ⟩` against its phase-space form.
pub fn schmidt_overlap_check(m: u32, n: u32, tau: Complex64) -> Result<f64> {
    let sign = if n.is_multiple_of(2) { 1.0 } else { -1.0 };
    let rhs = sign * PI * gwt(m, n, tau.re * FRAC_1_SQRT_2, tau.im * FRAC_1_SQRT_2)?;
    Ok((tau_overlap_fock(m, n, TauPoint::new(tau)).conj() - rhs).norm())
}

/// The 5×5 grid of `τ` over `[-a, a]²` with `a = 1.5/√2`, so `|τ| <= 1.5`.
pub fn gwt_sample_points() -> Vec<Complex64> {
    let a = 1.5 * FRAC_1_SQRT_2;
    let axis: Vec<f64> = (0..5).map(|i| -a + 0.5 * a * i as f64).collect();
    axis.iter().flat_map(|&x| axis.iter().map(move |&y| Complex64::new(x, y))).collect()
}
