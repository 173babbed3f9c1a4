// Copyright 2026 The lgkit Authors
// SPDX-License-Identifier: Apache-2.0

use std::collections::HashMap;
use std::f64::consts::PI;
use std::sync::{Arc, Mutex};

use ndarray::Array2;
use num_complex::Complex64;

use super::coords::PhasePoint4;
use crate::error::{LgError, Result};
use crate::fockspace::{ModeIndex, TwoModeState};
use crate::linalg::expm;
use crate::par::{self, Execution};
use crate::specialfn::laguerre;

/// `((-1)^m / π) e^{-(x²+p²)} L_m[2(x²+p²)]`.
pub fn wigner_number_state(m: u32, x: f64, p: f64) -> f64 {
    let r2 = x * x + p * p;
    let sign = if m.is_multiple_of(2) { 1.0 } else { -1.0 };
    sign / PI * (-r2).exp() * laguerre(m, 0, 2.0 * r2)
}

/// `((-1)^{m_ρ+n_ρ} / π²) e^{-Q0} L_{m_ρ}(Q0 + Q2) L_{n_ρ}(Q0 - Q2)`.
pub fn wigner_lg(idx: ModeIndex, pt: PhasePoint4) -> f64 {
    let q0 = pt.q0();
    let q2 = pt.q2();
    let sign = if idx.n().is_multiple_of(2) { 1.0 } else { -1.0 };
    sign / (PI * PI) * (-q0).exp() * laguerre(idx.m_rho(), 0, q0 + q2) * laguerre(idx.n_rho(), 0, q0 - q2)
}

/// Excitations reserved above a state's support per unit `|α|` of
/// displacement.
pub const DISPLACEMENT_GUARD_PER_ALPHA: f64 = 8.0;

/// Coefficients below this modulus do not count as support.
const SUPPORT_TOL: f64 = 1e-14;

type Kernel = Arc<Array2<Complex64>>;

/// Brute-force Wigner function
/// `⟨ψ| Δ1(α) Δ2(β) |ψ⟩` with `Δ(α) = D(α) (-1)^N D†(α) / π`, each `D(α)`
/// a dense matrix exponential on the single-mode space `0..=N_max`.
///
/// Single-mode `Δ` matrices are cached per `(x, p)` and shared across
/// threads.
#[derive(Debug)]
pub struct DisplacedParity {
    nmax: usize,
    cache: Mutex<HashMap<(u64, u64), Kernel>>,
}

impl DisplacedParity {
    pub fn new(nmax: usize) -> Self {
        DisplacedParity { nmax, cache: Mutex::new(HashMap::new()) }
    }

    pub fn nmax(&self) -> usize {
        self.nmax
    }

    /// Single-mode `Δ(α)` for `α = (x + ip)/√2`.
    pub fn delta(&self, x: f64, p: f64) -> Arc<Array2<Complex64>> {
        let key = (x.to_bits(), p.to_bits());
        if let Some(d) = self.cache.lock().expect("oracle cache poisoned").get(&key) {
            return Arc::clone(d);
        }
        let d = Arc::new(self.compute_delta(x, p));
        let mut cache = self.cache.lock().expect("oracle cache poisoned");
        Arc::clone(cache.entry(key).or_insert(d))
    }

    fn compute_delta(&self, x: f64, p: f64) -> Array2<Complex64> {
        let size = self.nmax + 1;
        let alpha = Complex64::new(x, p) * std::f64::consts::FRAC_1_SQRT_2;
        // generator α a† - α* a
        let mut g = Array2::<Complex64>::zeros((size, size));
        for k in 1..size {
            let s = (k as f64).sqrt();
            g[[k, k - 1]] = alpha * s;
            g[[k - 1, k]] = -alpha.conj() * s;
        }
        let d = expm(g.view());
        // D P D† / π with P = diag((-1)^k)
        let mut dp = d.clone();
        for k in (1..size).step_by(2) {
            dp.column_mut(k).mapv_inplace(|z| -z);
        }
        let dd = d.t().mapv(|z| z.conj());
        dp.dot(&dd).mapv(|z| z / PI)
    }

    /// Excitations the oracle needs for `state` at `pt`.
    pub fn required_cutoff(state: &TwoModeState, pt: PhasePoint4) -> usize {
        let support = state.max_excitation(SUPPORT_TOL).unwrap_or(0);
        let amax = pt.alpha().norm().max(pt.beta().norm());
        support + (DISPLACEMENT_GUARD_PER_ALPHA * amax).ceil() as usize
    }

    pub fn wigner(&self, state: &TwoModeState, pt: PhasePoint4) -> Result<f64> {
        let nmax = state.basis().max_total();
        if nmax != self.nmax {
            return Err(LgError::InvalidArgument(format!(
                "state cutoff {nmax} does not match oracle cutoff {}",
                self.nmax
            )));
        }
        let needed = Self::required_cutoff(state, pt);
        if needed > nmax {
            return Err(LgError::CutoffTooSmall { needed, nmax });
        }
        let size = nmax + 1;
        let mut c = Array2::<Complex64>::zeros((size, size));
        for ((k1, k2), z) in state.basis().kets().zip(state.coeffs().iter()) {
            c[[k1, k2]] = *z;
        }
        let d1 = self.delta(pt.x1, pt.p1);
        let d2 = self.delta(pt.x2, pt.p2);
        let m = d1.dot(&c).dot(&d2.t());
        Ok(c.iter().zip(m.iter()).map(|(a, b)| (a.conj() * b).re).sum())
    }

    /// [`Self::wigner`] over many points, in input order.
    pub fn wigner_many(&self, state: &TwoModeState, pts: &[PhasePoint4], exec: Execution) -> Result<Vec<f64>> {
        par::map_slice(exec, pts, |&pt| self.wigner(state, pt)).into_iter().collect()
    }
}

/// One-shot brute-force Wigner function; see [`DisplacedParity`].
pub fn wigner_bruteforce(state: &TwoModeState, pt: PhasePoint4) -> Result<f64> {
    DisplacedParity::new(state.basis().max_total()).wigner(state, pt)
}

/// Box half-width for Wigner normalization of total photon number `n`.
pub fn normalization_half_width(n: u32) -> f64 {
    6.0 + (n as f64).sqrt()
}

/// Midpoint nodes per axis for the 4-D normalization integral.
pub const NORMALIZATION_NODES: usize = 48;

/// `∫ W d⁴(x1, p1, x2, p2)` by a tensor midpoint rule on
/// `[-6-√n, 6+√n]⁴` with [`NORMALIZATION_NODES`] per axis.
pub fn wigner_lg_total_mass(idx: ModeIndex, exec: Execution) -> f64 {
    let half = normalization_half_width(idx.n());
    let rule = crate::quadrature::midpoint(NORMALIZATION_NODES).mapped(-half, half);
    let nodes = &rule.nodes;
    let w = &rule.weights;
    let k = nodes.len();
    // outer (x1, p1) pairs in parallel, inner sums sequential
    par::ordered_sum(exec, k * k, |ij| {
        let (i, j) = (ij / k, ij % k);
        let mut acc = 0.0;
        for a in 0..k {
            for b in 0..k {
                let pt = PhasePoint4 { x1: nodes[i], p1: nodes[j], x2: nodes[a], p2: nodes[b] };
                acc += w[a] * w[b] * wigner_lg(idx, pt);
            }
        }
        w[i] * w[j] * acc
    })
}
