// Copyright 2026 The lgkit Authors
// SPDX-License-Identifier: Apache-2.0

use std::fmt;
use std::ops::Range;

use crate::error::{LgError, Result};

/// Rows within this many excitations of the cutoff are excluded when
/// asserting identities that involve non-number-conserving operators.
pub const TRUNCATION_GUARD: usize = 2;

/// Truncated two-mode Fock basis: every `|k1, k2⟩` with `k1 + k2 <= N_max`.
///
/// Kets are ordered by ascending total excitation, then ascending `k2`, so
/// each total-excitation block is a contiguous index range and every
/// "total <= T" sub-basis is a prefix.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BasisSpec {
    max_total: usize,
}

impl BasisSpec {
    pub fn new(max_total: usize) -> Self {
        BasisSpec { max_total }
    }

    pub fn max_total(&self) -> usize {
        self.max_total
    }

    /// `(N_max + 1)(N_max + 2) / 2`.
    pub fn dim(&self) -> usize {
        Self::prefix_len(self.max_total)
    }

    /// Number of kets with total excitation `<= total`.
    pub fn prefix_len(total: usize) -> usize {
        (total + 1) * (total + 2) / 2
    }

    /// Index of the first ket of block `total`.
    fn offset(total: usize) -> usize {
        total * (total + 1) / 2
    }

    pub fn index(&self, k1: usize, k2: usize) -> Option<usize> {
        let t = k1 + k2;
        (t <= self.max_total).then(|| Self::offset(t) + k2)
    }

    /// `(k1, k2)` of the ket at `index`.
    pub fn ket(&self, index: usize) -> (usize, usize) {
        assert!(index < self.dim(), "basis index {index} out of range");
        // largest t with t(t+1)/2 <= index
        let mut t = ((((8 * index + 1) as f64).sqrt() - 1.0) / 2.0) as usize;
        while Self::offset(t + 1) <= index {
            t += 1;
        }
        while Self::offset(t) > index {
            t -= 1;
        }
        let k2 = index - Self::offset(t);
        (t - k2, k2)
    }

    pub fn block(&self, total: usize) -> Range<usize> {
        assert!(total <= self.max_total, "block {total} beyond cutoff");
        Self::offset(total)..Self::offset(total + 1)
    }

    pub fn kets(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..=self.max_total).flat_map(|t| (0..=t).map(move |k2| (t - k2, k2)))
    }

    /// Length of the guarded prefix (total excitation `<= N_max - guard`).
    pub fn guarded_len(&self, guard: usize) -> usize {
        match self.max_total.checked_sub(guard) {
            Some(t) => Self::prefix_len(t),
            None => 0,
        }
    }

    pub fn require(&self, needed: usize) -> Result<()> {
        if needed > self.max_total {
            return Err(LgError::CutoffTooSmall { needed, nmax: self.max_total });
        }
        Ok(())
    }
}

/// Quantum numbers `(n, l)` of a common eigenstate of `N` and `L`, with the
/// circular-mode occupations `m_ρ = (n + l)/2`, `n_ρ = (n - l)/2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ModeIndex {
    n: u32,
    l: i32,
}

impl ModeIndex {
    pub fn new(n: u32, l: i32) -> Result<Self> {
        let abs_l = l.unsigned_abs();
        if abs_l > n || !(n - abs_l).is_multiple_of(2) {
            return Err(LgError::InvalidModeIndex { n, l });
        }
        Ok(ModeIndex { n, l })
    }

    /// Every valid index with total photon number `<= n_max`, ordered by
    /// `n` then `l`.
    pub fn all_up_to(n_max: u32) -> Vec<ModeIndex> {
        (0..=n_max).flat_map(|n| (-(n as i32)..=n as i32).step_by(2).map(move |l| ModeIndex { n, l })).collect()
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn l(&self) -> i32 {
        self.l
    }

    pub fn abs_l(&self) -> u32 {
        self.l.unsigned_abs()
    }

    pub fn m_rho(&self) -> u32 {
        ((self.n as i64 + self.l as i64) / 2) as u32
    }

    pub fn n_rho(&self) -> u32 {
        ((self.n as i64 - self.l as i64) / 2) as u32
    }

    /// Degree of the radial Laguerre polynomial, `(n - |l|)/2`.
    pub fn radial_degree(&self) -> u32 {
        (self.n - self.abs_l()) / 2
    }
}

impl fmt::Display for ModeIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(n={}, l={})", self.n, self.l)
    }
}
