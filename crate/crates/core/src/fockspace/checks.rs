// Copyright 2026 The lgkit Authors
// SPDX-License-Identifier: Apache-2.0

//! Operator identities checked as matrix identities on a truncated basis.
//! Each check returns the largest deviation it found.

use std::f64::consts::{FRAC_1_SQRT_2, LN_2, SQRT_2};

use num_complex::Complex64;

use super::basis::{BasisSpec, TRUNCATION_GUARD};
use super::operators::{
    a_minus, a_plus, angular_momentum_operator, bilinear, jx_rotation, jz_operator, momentum_quadrature,
    number_operator, position_quadrature, Mode, OperatorMatrix,
};
use super::state::{build_eta_state, build_tau_state, TwoModeState};
use crate::error::Result;
use crate::par::Execution;

const I: Complex64 = Complex64::new(0.0, 1.0);

/// `N` and `L` on one basis, built once for repeated eigen checks.
#[derive(Debug, Clone)]
pub struct NumberAndAngularMomentum {
    pub number: OperatorMatrix,
    pub angular: OperatorMatrix,
}

impl NumberAndAngularMomentum {
    pub fn new(basis: BasisSpec) -> Self {
        NumberAndAngularMomentum { number: number_operator(basis), angular: angular_momentum_operator(basis) }
    }

    /// `(‖N ψ - n ψ‖, ‖L ψ - l ψ‖)` over the full basis.
    pub fn residuals(&self, state: &TwoModeState, n: f64, l: f64) -> (f64, f64) {
        let res = |op: &OperatorMatrix, ev: f64| (&op.apply(state) - &state.scale(ev)).norm();
        (res(&self.number, n), res(&self.angular, l))
    }
}

/// `[A+, A+†] = 1`, `[A-, A-†] = 1`, `[A+, A-†] = 0`, `[A-, A+†] = 0` on the
/// guarded sub-basis.
pub fn ladder_commutator_check(basis: BasisSpec) -> f64 {
    let ap = a_plus(basis);
    let am = a_minus(basis);
    let id = OperatorMatrix::identity(basis);
    let zero = OperatorMatrix::zeros(basis);
    [
        ap.commutator(&ap.dagger()).max_abs_diff_guarded(&id, TRUNCATION_GUARD),
        am.commutator(&am.dagger()).max_abs_diff_guarded(&id, TRUNCATION_GUARD),
        ap.commutator(&am.dagger()).max_abs_diff_guarded(&zero, TRUNCATION_GUARD),
        am.commutator(&ap.dagger()).max_abs_diff_guarded(&zero, TRUNCATION_GUARD),
    ]
    .into_iter()
    .fold(0.0, f64::max)
}

/// `A+†A+ + A-†A- = N` and `A+†A+ - A-†A- = L` on the guarded sub-basis.
pub fn recombination_check(basis: BasisSpec) -> f64 {
    let ap = a_plus(basis);
    let am = a_minus(basis);
    let np = &ap.dagger() * &ap;
    let nm = &am.dagger() * &am;
    let n = number_operator(basis);
    let l = angular_momentum_operator(basis);
    (&np + &nm).max_abs_diff_guarded(&n, TRUNCATION_GUARD).max((&np - &nm).max_abs_diff_guarded(&l, TRUNCATION_GUARD))
}

/// Deviation of `e^{i a1†a2} exp[(a1†a1 - a2†a2)(ln 2)/2] e^{i a2†a1}` from
/// `exp(i (π/2) J_x)`. All factors are block diagonal, so the whole basis is
/// compared.
pub fn jx_decomposition_check(basis: BasisSpec) -> f64 {
    let exec = Execution::default();
    let left = bilinear(Mode::One, Mode::Two, basis).scale(I).exp_blockwise(exec);
    let middle = jz_operator(basis).scale(LN_2).exp_blockwise(exec);
    let right = bilinear(Mode::Two, Mode::One, basis).scale(I).exp_blockwise(exec);
    let product = &(&left * &middle) * &right;
    product.max_abs_diff(&jx_rotation(basis))
}

/// The four conjugation identities
/// `U† X1 U = (X1 - P2)/√2`, `U† P1 U = (P1 + X2)/√2`,
/// `U† X2 U = (X2 - P1)/√2`, `U† P2 U = (P2 + X1)/√2` with
/// `U = exp(i (π/2) J_x)`, on the guarded sub-basis.
pub fn quadrature_covariance_check(basis: BasisSpec) -> f64 {
    let u = jx_rotation(basis);
    let ud = u.dagger();
    let x1 = position_quadrature(Mode::One, basis);
    let p1 = momentum_quadrature(Mode::One, basis);
    let x2 = position_quadrature(Mode::Two, basis);
    let p2 = momentum_quadrature(Mode::Two, basis);
    let conj = |op: &OperatorMatrix| &(&ud * op) * &u;
    let pairs = [
        (conj(&x1), (&x1 - &p2).scale(FRAC_1_SQRT_2)),
        (conj(&p1), (&p1 + &x2).scale(FRAC_1_SQRT_2)),
        (conj(&x2), (&x2 - &p1).scale(FRAC_1_SQRT_2)),
        (conj(&p2), (&p2 + &x1).scale(FRAC_1_SQRT_2)),
    ];
    pairs.iter().map(|(a, b)| a.max_abs_diff_guarded(b, TRUNCATION_GUARD)).fold(0.0, f64::max)
}

/// Guarded relative residuals of
/// `(X1 - X2 - P1 + P2)|η⟩ = 2η1|η⟩` and `(P1 + P2 - X1 - X2)|η⟩ = 2η2|η⟩`.
pub fn eta_eigen_residuals(eta: Complex64, basis: BasisSpec) -> Result<[f64; 2]> {
    let s = build_eta_state(eta, basis)?;
    let x1 = position_quadrature(Mode::One, basis);
    let p1 = momentum_quadrature(Mode::One, basis);
    let x2 = position_quadrature(Mode::Two, basis);
    let p2 = momentum_quadrature(Mode::Two, basis);
    let first = &(&(&x1 - &x2) - &p1) + &p2;
    let second = &(&(&p1 + &p2) - &x1) - &x2;
    Ok([
        s.eigen_residual_guarded(&first, (2.0 * eta.re).into(), TRUNCATION_GUARD),
        s.eigen_residual_guarded(&second, (2.0 * eta.im).into(), TRUNCATION_GUARD),
    ])
}

/// Guarded relative residuals of `(X1 - X2)|τ⟩ = √2 τ1|τ⟩` and
/// `(P1 + P2)|τ⟩ = √2 τ2|τ⟩`.
pub fn tau_eigen_residuals(tau: Complex64, basis: BasisSpec) -> Result<[f64; 2]> {
    let s = build_tau_state(tau, basis)?;
    let x1 = position_quadrature(Mode::One, basis);
    let p1 = momentum_quadrature(Mode::One, basis);
    let x2 = position_quadrature(Mode::Two, basis);
    let p2 = momentum_quadrature(Mode::Two, basis);
    Ok([
        s.eigen_residual_guarded(&(&x1 - &x2), (SQRT_2 * tau.re).into(), TRUNCATION_GUARD),
        s.eigen_residual_guarded(&(&p1 + &p2), (SQRT_2 * tau.im).into(), TRUNCATION_GUARD),
    ])
}
