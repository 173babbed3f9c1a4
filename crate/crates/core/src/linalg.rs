// Copyright 2026 The lgkit Authors
// SPDX-License-Identifier: Apache-2.0

//! Dense complex matrix helpers and the matrix exponential.

use ndarray::{Array2, ArrayView2};
use num_complex::Complex64;

/// Accuracy promised by [`expm`] for anti-Hermitian generators, entrywise.
pub const EXPM_TOL: f64 = 1e-13;

const EXPM_MAX_TERMS: usize = 60;

/// Max-column-sum (1-)norm.
pub fn norm_1(a: ArrayView2<Complex64>) -> f64 {
    a.columns().into_iter().map(|c| c.iter().map(|z| z.norm()).sum::<f64>()).fold(0.0, f64::max)
}

/// Largest entrywise modulus.
pub fn max_abs(a: ArrayView2<Complex64>) -> f64 {
    a.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

/// Conjugate transpose.
pub fn dagger(a: ArrayView2<Complex64>) -> Array2<Complex64> {
    a.t().mapv(|z| z.conj())
}

/// `exp(a)` by scaling and squaring around a Taylor core.
///
/// The matrix is scaled by `2^-s` until its 1-norm is at most 1/2, the
/// series is summed until the next term drops below machine epsilon relative
/// to the partial sum (1-norm), and the result is squared `s` times.
///
/// # Panics
/// If `a` is not square.
pub fn expm(a: ArrayView2<Complex64>) -> Array2<Complex64> {
    let n = a.nrows();
    assert_eq!(n, a.ncols(), "expm needs a square matrix");
    if n == 0 {
        return Array2::zeros((0, 0));
    }
    if n == 1 {
        return Array2::from_elem((1, 1), a[[0, 0]].exp());
    }

    let norm = norm_1(a);
    let mut squarings = 0u32;
    if norm > 0.5 {
        squarings = (norm / 0.5).log2().ceil() as u32;
    }
    let scale = 0.5f64.powi(squarings as i32);
    let scaled = a.mapv(|z| z * scale);

    let mut result = Array2::<Complex64>::eye(n);
    let mut term = Array2::<Complex64>::eye(n);
    for k in 1..=EXPM_MAX_TERMS {
        term = term.dot(&scaled).mapv(|z| z / k as f64);
        result += &term;
        if norm_1(term.view()) <= f64::EPSILON * norm_1(result.view()) {
            break;
        }
    }
    for _ in 0..squarings {
        result = result.dot(&result);
    }
    result
}
