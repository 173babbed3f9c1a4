// Copyright 2026 The lgkit Authors
// SPDX-License-Identifier: Apache-2.0

//! Closed-form wavefunctions: the LG mode `⟨η|n,l⟩`, the Hermite-Gaussian
//! modes `h_m(x)`, and the `|τ⟩`-representation overlaps `⟨τ|m,n⟩`,
//! `⟨τ|n,l⟩`.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::fockspace::ModeIndex;
use crate::quadrature::polar_disk;
use crate::specialfn::{factorial, hermite2v, laguerre, log_factorial, sqrt_factorial_ratio};

/// A point of the `η` plane, `η = r e^{iφ}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EtaPoint {
    pub eta: Complex64,
}

impl EtaPoint {
    pub fn new(eta: Complex64) -> Self {
        EtaPoint { eta }
    }

    pub fn from_polar(r: f64, phi: f64) -> Self {
        EtaPoint { eta: Complex64::from_polar(r, phi) }
    }

    pub fn r(&self) -> f64 {
        self.eta.norm()
    }

    /// `arg η` in `(-π, π]`.
    pub fn phi(&self) -> f64 {
        let a = self.eta.arg();
        if a == -PI {
            PI
        } else {
            a
        }
    }
}

impl From<Complex64> for EtaPoint {
    fn from(eta: Complex64) -> Self {
        EtaPoint { eta }
    }
}

/// A point of the `τ` plane, `τ = τ1 + iτ2`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TauPoint {
    pub tau: Complex64,
}

impl TauPoint {
    pub fn new(tau: Complex64) -> Self {
        TauPoint { tau }
    }

    pub fn tau1(&self) -> f64 {
        self.tau.re
    }

    pub fn tau2(&self) -> f64 {
        self.tau.im
    }
}

impl From<Complex64> for TauPoint {
    fn from(tau: Complex64) -> Self {
        TauPoint { tau }
    }
}

/// `⟨η|n,l⟩ = C1 e^{-ilφ} e^{-r²/2} r^{|l|} L_{n_ρ}^{|l|}(r²)`, with the
/// radial degree `d = (n - |l|)/2` and `C1 = √(d! / (d + |l|)!)`.
///
/// The phase uses the signed `l`. For `l < 0` this differs from the Fock
/// overlap of [`crate::fockspace::lg_state_beamsplitter`] by the constant
/// `(-1)^{|l|}`.
pub fn lg_wavefunction_eta(idx: ModeIndex, p: EtaPoint) -> Complex64 {
    let abs_l = idx.abs_l();
    let deg = idx.radial_degree();
    let r = p.r();
    let c1 = sqrt_factorial_ratio(deg, deg + abs_l);
    let radial = c1 * (-0.5 * r * r).exp() * r.powi(abs_l as i32) * laguerre(deg, abs_l, r * r);
    Complex64::from_polar(radial, -(idx.l() as f64) * p.phi())
}

/// Angle at which [`radial_equation_residual`] is evaluated.
pub const RESIDUAL_PHI: f64 = 0.37;

/// `|n ψ - [r²/2 - 1 - (ψ_rr + ψ_r/r + ψ_φφ/r²)/2]|` for `ψ = ⟨η|n,l⟩`,
/// with second-order central differences of step `h` at `φ = RESIDUAL_PHI`.
///
/// # Panics
/// Unless `r > 2h > 0`.
pub fn radial_equation_residual(idx: ModeIndex, r: f64, h: f64) -> f64 {
    assert!(h > 0.0 && r > 2.0 * h, "need r > 2h > 0, got r={r}, h={h}");
    let psi = |r: f64, phi: f64| lg_wavefunction_eta(idx, EtaPoint::from_polar(r, phi));
    let phi = RESIDUAL_PHI;
    let c = psi(r, phi);
    let rp = psi(r + h, phi);
    let rm = psi(r - h, phi);
    let pp = psi(r, phi + h);
    let pm = psi(r, phi - h);
    let d_rr = (rp - 2.0 * c + rm) / (h * h);
    let d_r = (rp - rm) / (2.0 * h);
    let d_pp = (pp - 2.0 * c + pm) / (h * h);
    let laplacian = d_rr + d_r / r + d_pp / (r * r);
    let rhs = (0.5 * r * r - 1.0) * c - 0.5 * laplacian;
    (idx.n() as f64 * c - rhs).norm()
}

/// Normalized Hermite-Gaussian mode `h_m(x) = e^{-x²/2} H_m(x) / √(2^m m! √π)`.
///
/// Evaluated by the three-term recurrence of the normalized functions, which
/// stays finite where `H_m(x)` alone would overflow.
pub fn hg_wavefunction(m: u32, x: f64) -> f64 {
    let mut prev = 0.0;
    let mut cur = PI.powf(-0.25) * (-0.5 * x * x).exp();
    for k in 0..m {
        let kf = k as f64;
        let next = (2.0 / (kf + 1.0)).sqrt() * x * cur - (kf / (kf + 1.0)).sqrt() * prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// `⟨τ|m,n⟩ = (-1)^n H_{m,n}(τ*, τ) e^{-|τ|²/2} / √(m! n!)`.
pub fn tau_overlap_fock(m: u32, n: u32, p: TauPoint) -> Complex64 {
    let tau = p.tau;
    let sign = if n.is_multiple_of(2) { 1.0 } else { -1.0 };
    let norm = (-0.5 * (log_factorial(m) + log_factorial(n))).exp();
    hermite2v(m, n, tau.conj(), tau) * (sign * norm * (-0.5 * tau.norm_sqr()).exp())
}

/// The double sum `Σ_k (n_ρ+k)!/(2^k k! (m_ρ-k)!) Σ_j (-i)^{k+j} H_{m_ρ-k+j, n_ρ+k-j}(τ*, τ) / (j! (n_ρ+k-j)!)`.
fn lg_tau_double_sum(idx: ModeIndex, tau: Complex64) -> Complex64 {
    let m = idx.m_rho();
    let nr = idx.n_rho();
    let minus_i_pow = |e: u32| match e % 4 {
        0 => Complex64::new(1.0, 0.0),
        1 => Complex64::new(0.0, -1.0),
        2 => Complex64::new(-1.0, 0.0),
        _ => Complex64::new(0.0, 1.0),
    };
    let mut outer = Complex64::new(0.0, 0.0);
    for k in 0..=m {
        let mut inner = Complex64::new(0.0, 0.0);
        for j in 0..=nr + k {
            let w = 1.0 / (factorial(j) * factorial(nr + k - j));
            inner += minus_i_pow(k + j) * w * hermite2v(m - k + j, nr + k - j, tau.conj(), tau);
        }
        let w = factorial(nr + k) / (2f64.powi(k as i32) * factorial(k) * factorial(m - k));
        outer += w * inner;
    }
    outer
}

/// `⟨τ|n,l⟩` as the double sum over two-variable Hermite polynomials:
/// `(-1)^{n_ρ} 2^{(m_ρ-n_ρ)/2} e^{-|τ|²/2} √(m_ρ!/n_ρ!) Σ_k … Σ_j …`.
///
/// Valid for either sign of `l`; it agrees with the Fock overlap against
/// [`crate::fockspace::lg_state_beamsplitter`] without any phase offset.
pub fn tau_overlap_lg(idx: ModeIndex, p: TauPoint) -> Complex64 {
    let tau = p.tau;
    let m = idx.m_rho();
    let nr = idx.n_rho();
    let sign = if nr.is_multiple_of(2) { 1.0 } else { -1.0 };
    let pref =
        sign * 2f64.powf(0.5 * (m as f64 - nr as f64)) * (-0.5 * tau.norm_sqr()).exp() * sqrt_factorial_ratio(m, nr);
    pref * lg_tau_double_sum(idx, tau)
}

/// `(e^{-|σ|²}/π) 2^{m_ρ-n_ρ} (m_ρ!/n_ρ!) |Σ_k … Σ_j …|²`, the same double
/// sum as [`tau_overlap_lg`] at `τ = σ`.
pub(crate) fn lg_marginal_closed_form(idx: ModeIndex, sigma: Complex64) -> f64 {
    let m = idx.m_rho() as f64;
    let nr = idx.n_rho() as f64;
    let pref = (-sigma.norm_sqr()).exp() / PI
        * 2f64.powf(m - nr)
        * (log_factorial(idx.m_rho()) - log_factorial(idx.n_rho())).exp();
    pref * lg_tau_double_sum(idx, sigma).norm_sqr()
}

/// Radial quadrature nodes for η/τ-plane integrals.
pub const PLANE_RADIAL_NODES: usize = 64;
/// Angular (trapezoid) nodes for η/τ-plane integrals.
pub const PLANE_ANGULAR_NODES: usize = 64;

/// `∫ d²η/π f(η)` over the disk of radius `6 + √n_max`.
pub fn eta_plane_integral<F>(n_max: u32, f: F) -> Complex64
where
    F: Fn(EtaPoint) -> Complex64,
{
    let r_max = 6.0 + (n_max as f64).sqrt();
    polar_disk(r_max, PLANE_RADIAL_NODES, PLANE_ANGULAR_NODES)
        .into_iter()
        .map(|(r, phi, w)| w * f(EtaPoint::from_polar(r, phi)))
        .sum::<Complex64>()
        / PI
}

/// `∫ d²η/π ⟨a|η⟩⟨η|b⟩`.
pub fn eta_overlap_integral(a: ModeIndex, b: ModeIndex) -> Complex64 {
    eta_plane_integral(a.n().max(b.n()), |p| lg_wavefunction_eta(a, p).conj() * lg_wavefunction_eta(b, p))
}
