// Copyright 2026 The lgkit Authors
// SPDX-License-Identifier: Apache-2.0

use ndarray::Array1;
use num_complex::Complex64;

use super::basis::{BasisSpec, ModeIndex};
use super::operators::{self, apply_raw, raise, raise_minus, raise_plus, Mode};
use crate::error::{LgError, Result};
use crate::specialfn::log_factorial;

/// Coefficient vector over a truncated two-mode basis.
#[derive(Debug, Clone, PartialEq)]
pub struct TwoModeState {
    basis: BasisSpec,
    coeffs: Array1<Complex64>,
}

impl TwoModeState {
    pub fn new(basis: BasisSpec, coeffs: Array1<Complex64>) -> Self {
        assert_eq!(coeffs.len(), basis.dim(), "coefficient length does not match basis");
        TwoModeState { basis, coeffs }
    }

    pub fn zeros(basis: BasisSpec) -> Self {
        Self::new(basis, Array1::zeros(basis.dim()))
    }

    pub fn vacuum(basis: BasisSpec) -> Self {
        let mut s = Self::zeros(basis);
        s.coeffs[0] = Complex64::new(1.0, 0.0);
        s
    }

    /// The number state `|k1, k2⟩`.
    pub fn fock(basis: BasisSpec, k1: usize, k2: usize) -> Result<Self> {
        basis.require(k1 + k2)?;
        let mut s = Self::zeros(basis);
        s.coeffs[basis.index(k1, k2).expect("checked above")] = Complex64::new(1.0, 0.0);
        Ok(s)
    }

    /// Superposition of listed kets; kets beyond the cutoff panic.
    pub fn from_kets(basis: BasisSpec, terms: &[((usize, usize), Complex64)]) -> Self {
        let mut s = Self::zeros(basis);
        for &((k1, k2), c) in terms {
            let i = basis.index(k1, k2).expect("ket beyond cutoff");
            s.coeffs[i] += c;
        }
        s
    }

    pub fn basis(&self) -> BasisSpec {
        self.basis
    }

    pub fn coeffs(&self) -> &Array1<Complex64> {
        &self.coeffs
    }

    /// `⟨k1, k2|ψ⟩`; zero beyond the cutoff.
    pub fn coeff(&self, k1: usize, k2: usize) -> Complex64 {
        self.basis.index(k1, k2).map_or(Complex64::new(0.0, 0.0), |i| self.coeffs[i])
    }

    pub fn norm(&self) -> f64 {
        self.coeffs.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn normalized(&self) -> Self {
        let n = self.norm();
        Self::new(self.basis, self.coeffs.mapv(|z| z / n))
    }

    pub fn scale(&self, c: impl Into<Complex64>) -> Self {
        let c = c.into();
        Self::new(self.basis, self.coeffs.mapv(|z| z * c))
    }

    /// `⟨self|other⟩`.
    pub fn inner(&self, other: &Self) -> Complex64 {
        assert_eq!(self.basis, other.basis, "basis mismatch");
        self.coeffs.iter().zip(other.coeffs.iter()).map(|(a, b)| a.conj() * b).sum()
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        assert_eq!(self.basis, other.basis, "basis mismatch");
        self.coeffs.iter().zip(other.coeffs.iter()).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max)
    }

    /// Number of coefficients with modulus above `tol`.
    pub fn support_count(&self, tol: f64) -> usize {
        self.coeffs.iter().filter(|z| z.norm() > tol).count()
    }

    /// Highest total excitation carrying a coefficient above `tol`.
    pub fn max_excitation(&self, tol: f64) -> Option<usize> {
        self.basis.kets().zip(self.coeffs.iter()).filter(|(_, z)| z.norm() > tol).map(|((k1, k2), _)| k1 + k2).max()
    }

    /// Coefficients on the kets of total excitation `t`, `k2` ascending.
    pub fn block(&self, t: usize) -> Array1<Complex64> {
        self.coeffs.slice(ndarray::s![self.basis.block(t)]).to_owned()
    }

    /// `‖(O - λ)ψ‖ / ‖ψ‖` restricted to the sub-basis with total excitation
    /// `<= N_max - guard`.
    pub fn eigen_residual_guarded(&self, op: &operators::OperatorMatrix, eigenvalue: Complex64, guard: usize) -> f64 {
        let k = self.basis.guarded_len(guard);
        let applied = apply_raw(op, &self.coeffs);
        let num: f64 = (0..k).map(|i| (applied[i] - eigenvalue * self.coeffs[i]).norm_sqr()).sum();
        let den: f64 = (0..k).map(|i| self.coeffs[i].norm_sqr()).sum();
        (num / den).sqrt()
    }
}

impl std::ops::Sub for &TwoModeState {
    type Output = TwoModeState;
    fn sub(self, rhs: &TwoModeState) -> TwoModeState {
        assert_eq!(self.basis, rhs.basis, "basis mismatch");
        TwoModeState::new(self.basis, &self.coeffs - &rhs.coeffs)
    }
}

/// `|n,l⟩ = (A+†)^{m_ρ} (A-†)^{n_ρ} |00⟩ / √(m_ρ! n_ρ!)`.
pub fn lg_state_ladder(idx: ModeIndex, basis: BasisSpec) -> Result<TwoModeState> {
    basis.require(idx.n() as usize)?;
    let mut v = TwoModeState::vacuum(basis).coeffs;
    for _ in 0..idx.n_rho() {
        v = raise_minus(basis, &v);
    }
    for _ in 0..idx.m_rho() {
        v = raise_plus(basis, &v);
    }
    let norm = (-0.5 * (log_factorial(idx.m_rho()) + log_factorial(idx.n_rho()))).exp();
    Ok(TwoModeState::new(basis, v.mapv(|z| z * norm)))
}

/// `|n,l⟩ = exp(i (π/2) J_x) |m_ρ, n_ρ⟩`: a 50:50 beam splitter with phase
/// difference π/2 acting on two Fock inputs.
///
/// Only the `n`-excitation block of the rotation is formed.
pub fn lg_state_beamsplitter(idx: ModeIndex, basis: BasisSpec) -> Result<TwoModeState> {
    let n = idx.n() as usize;
    basis.require(n)?;
    let u = operators::jx_rotation_block(n);
    // |m_ρ, n_ρ⟩ sits at position n_ρ inside the block
    let col = u.column(idx.n_rho() as usize);
    let mut s = TwoModeState::zeros(basis);
    let r = basis.block(n);
    s.coeffs.slice_mut(ndarray::s![r]).assign(&col);
    Ok(s)
}

/// Term cap for the entangled-state series.
pub const SERIES_TERM_CAP: usize = 500;
/// Relative tail tolerance for the entangled-state series.
pub const SERIES_TAIL_TOL: f64 = 1e-14;

/// Sums `exp(G)|00⟩` term by term for a generator `G` given as a closure.
fn exp_series_on_vacuum<G>(basis: BasisSpec, apply_gen: G) -> Result<Array1<Complex64>>
where
    G: Fn(&Array1<Complex64>) -> Array1<Complex64>,
{
    let mut sum = TwoModeState::vacuum(basis).coeffs;
    let mut term = sum.clone();
    for k in 1..=SERIES_TERM_CAP {
        term = apply_gen(&term).mapv(|z| z / k as f64);
        sum += &term;
        let t = term.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        let s = sum.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if t <= SERIES_TAIL_TOL * s {
            return Ok(sum);
        }
    }
    Err(LgError::ConvergenceFailure { terms: SERIES_TERM_CAP })
}

/// Truncated, unnormalized `|η⟩ = exp(-|η|²/2 + η A+† - η* A-† + A+†A-†)|00⟩`.
///
/// The generator only raises excitation, so every coefficient with total
/// excitation `<= N_max` is exact; the ket itself is not normalizable
/// (`A+†A-†` feeds every block with weight O(1)), so eigen-equations hold on
/// the guarded sub-basis only.
pub fn build_eta_state(eta: Complex64, basis: BasisSpec) -> Result<TwoModeState> {
    let v = exp_series_on_vacuum(basis, |x| {
        let am = raise_minus(basis, x);
        let pair = raise_plus(basis, &am);
        let ap = raise_plus(basis, x);
        &(&ap.mapv(|z| z * eta) - &am.mapv(|z| z * eta.conj())) + &pair
    })?;
    let pref = (-0.5 * eta.norm_sqr()).exp();
    Ok(TwoModeState::new(basis, v.mapv(|z| z * pref)))
}

/// Truncated, unnormalized `|τ⟩ = exp(-|τ|²/2 + τ a1† - τ* a2† + a1†a2†)|00⟩`.
pub fn build_tau_state(tau: Complex64, basis: BasisSpec) -> Result<TwoModeState> {
    let v = exp_series_on_vacuum(basis, |x| {
        let b = raise(Mode::Two, basis, x);
        let pair = raise(Mode::One, basis, &b);
        let a = raise(Mode::One, basis, x);
        &(&a.mapv(|z| z * tau) - &b.mapv(|z| z * tau.conj())) + &pair
    })?;
    let pref = (-0.5 * tau.norm_sqr()).exp();
    Ok(TwoModeState::new(basis, v.mapv(|z| z * pref)))
}
