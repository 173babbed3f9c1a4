// Copyright 2026 The lgkit Authors
// SPDX-License-Identifier: Apache-2.0

use std::f64::consts::FRAC_1_SQRT_2;

use num_complex::Complex64;

use crate::error::{LgError, Result};

/// Slack allowed in `|Q2| <= Q0` when validating a point.
pub const Q_BOUND_TOL: f64 = 1e-12;

/// A point `(x1, p1, x2, p2)` of two-mode phase space.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhasePoint4 {
    pub x1: f64,
    pub p1: f64,
    pub x2: f64,
    pub p2: f64,
}

impl PhasePoint4 {
    /// Rejects non-finite coordinates and points violating `|Q2| <= Q0`.
    pub fn new(x1: f64, p1: f64, x2: f64, p2: f64) -> Result<Self> {
        let pt = PhasePoint4 { x1, p1, x2, p2 };
        if ![x1, p1, x2, p2].iter().all(|v| v.is_finite()) {
            return Err(LgError::InvalidArgument(format!("non-finite phase-space point {pt:?}")));
        }
        let (q0, q2) = (pt.q0(), pt.q2());
        if q2.abs() > q0 + Q_BOUND_TOL * q0.max(1.0) {
            return Err(LgError::InvalidArgument(format!("|Q2| = {} exceeds Q0 = {q0}", q2.abs())));
        }
        Ok(pt)
    }

    pub fn origin() -> Self {
        PhasePoint4 { x1: 0.0, p1: 0.0, x2: 0.0, p2: 0.0 }
    }

    /// `Q0 = x1² + p1² + x2² + p2²`.
    pub fn q0(&self) -> f64 {
        self.x1 * self.x1 + self.p1 * self.p1 + self.x2 * self.x2 + self.p2 * self.p2
    }

    /// `Q2 = 2 p2 x1 - 2 p1 x2`.
    pub fn q2(&self) -> f64 {
        2.0 * self.p2 * self.x1 - 2.0 * self.p1 * self.x2
    }

    /// `α = (x1 + i p1)/√2`.
    pub fn alpha(&self) -> Complex64 {
        Complex64::new(self.x1, self.p1) * FRAC_1_SQRT_2
    }

    /// `β = (x2 + i p2)/√2`.
    pub fn beta(&self) -> Complex64 {
        Complex64::new(self.x2, self.p2) * FRAC_1_SQRT_2
    }

    /// `(x1, -p1, x2, -p2)`.
    pub fn reflect_momenta(&self) -> Self {
        PhasePoint4 { x1: self.x1, p1: -self.p1, x2: self.x2, p2: -self.p2 }
    }

    pub fn to_sigma_gamma(&self) -> SigmaGamma {
        to_sigma_gamma(*self)
    }
}

/// Entangled coordinates `σ = α - β*`, `γ = α + β*`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SigmaGamma {
    pub sigma: Complex64,
    pub gamma: Complex64,
}

impl SigmaGamma {
    pub fn new(sigma: Complex64, gamma: Complex64) -> Self {
        SigmaGamma { sigma, gamma }
    }

    pub fn to_phase_point(&self) -> PhasePoint4 {
        from_sigma_gamma(*self)
    }
}

pub fn to_sigma_gamma(pt: PhasePoint4) -> SigmaGamma {
    let a = pt.alpha();
    let bc = pt.beta().conj();
    SigmaGamma { sigma: a - bc, gamma: a + bc }
}

/// Inverse of [`to_sigma_gamma`]: `α = (σ + γ)/2`, `β = ((γ - σ)/2)*`.
pub fn from_sigma_gamma(sg: SigmaGamma) -> PhasePoint4 {
    let a = (sg.sigma + sg.gamma) * 0.5;
    let b = ((sg.gamma - sg.sigma) * 0.5).conj();
    let s = std::f64::consts::SQRT_2;
    PhasePoint4 { x1: s * a.re, p1: s * a.im, x2: s * b.re, p2: s * b.im }
}
