// Copyright 2026 The lgkit Authors
// SPDX-License-Identifier: Apache-2.0

//! Polynomial families: associated Laguerre `L_n^k`, physicists' Hermite
//! `H_m`, and the two-variable Hermite polynomial `H_{m,n}(x, y)`.
//!
//! `H_{m,n}` is generated by `exp(-t t' + t x + t' y)`; on the conjugate
//! diagonal it reduces to a Laguerre polynomial,
//! `H_{m,n}(η, η*) = m! (-1)^m (η*)^{n-m} L_m^{n-m}(|η|²)` for `m <= n`.

use std::sync::OnceLock;

use num_complex::Complex64;

/// Relative tolerance for polynomial identities at the index ranges used here.
pub const POLY_REL_TOL: f64 = 1e-10;

/// Degree and (Laguerre) order of a polynomial.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PolyIndex {
    pub degree: u32,
    pub order: u32,
}

impl PolyIndex {
    pub fn new(degree: u32, order: u32) -> Self {
        PolyIndex { degree, order }
    }

    pub fn laguerre(self, x: f64) -> f64 {
        laguerre(self.degree, self.order, x)
    }
}

const LOG_FACT_TABLE: usize = 512;

fn log_fact_table() -> &'static [f64] {
    static TABLE: OnceLock<Vec<f64>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let mut t = Vec::with_capacity(LOG_FACT_TABLE);
        let mut acc = 0.0f64;
        t.push(0.0);
        for j in 1..LOG_FACT_TABLE {
            acc += (j as f64).ln();
            t.push(acc);
        }
        t
    })
}

/// `ln(k!)`.
pub fn log_factorial(k: u32) -> f64 {
    let k = k as usize;
    if k < LOG_FACT_TABLE {
        return log_fact_table()[k];
    }
    // Stirling series; the first omitted term is below 1e-16 for k >= 512.
    let x = k as f64 + 1.0;
    let inv = 1.0 / x;
    let inv2 = inv * inv;
    (x - 0.5) * x.ln() - x
        + 0.5 * (2.0 * std::f64::consts::PI).ln()
        + inv * (1.0 / 12.0 - inv2 * (1.0 / 360.0 - inv2 / 1260.0))
}

/// `k!` as a float, via the log table.
pub fn factorial(k: u32) -> f64 {
    log_factorial(k).exp()
}

/// `sqrt(a! / b!)`.
pub fn sqrt_factorial_ratio(a: u32, b: u32) -> f64 {
    (0.5 * (log_factorial(a) - log_factorial(b))).exp()
}

/// Associated Laguerre polynomial `L_n^k(x)` by forward recurrence in `n`.
pub fn laguerre(n: u32, k: u32, x: f64) -> f64 {
    let k = k as f64;
    let mut prev = 1.0;
    if n == 0 {
        return prev;
    }
    let mut cur = 1.0 + k - x;
    for j in 1..n {
        let jf = j as f64;
        let next = ((2.0 * jf + 1.0 + k - x) * cur - (jf + k) * prev) / (jf + 1.0);
        prev = cur;
        cur = next;
    }
    cur
}

/// Physicists' Hermite polynomial `H_m(x)`.
pub fn hermite(m: u32, x: f64) -> f64 {
    let mut prev = 1.0;
    if m == 0 {
        return prev;
    }
    let mut cur = 2.0 * x;
    for j in 1..m {
        let next = 2.0 * x * cur - 2.0 * j as f64 * prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// Two-variable Hermite polynomial
/// `H_{m,n}(x,y) = Σ_k (-1)^k m! n! x^{m-k} y^{n-k} / (k! (m-k)! (n-k)!)`.
///
/// Evaluated by `H_{i+1,j} = x H_{i,j} - j H_{i,j-1}` from `H_{0,j} = y^j`,
/// stepping in the smaller index; the explicit sum cancels badly on the
/// conjugate diagonal.
pub fn hermite2v(m: u32, n: u32, x: Complex64, y: Complex64) -> Complex64 {
    if m > n {
        return hermite2v(n, m, y, x);
    }
    let n = n as usize;
    let mut row: Vec<Complex64> = Vec::with_capacity(n + 1);
    let mut p = Complex64::new(1.0, 0.0);
    for _ in 0..=n {
        row.push(p);
        p *= y;
    }
    for _ in 0..m {
        for j in (0..=n).rev() {
            let lower = if j > 0 { j as f64 * row[j - 1] } else { Complex64::new(0.0, 0.0) };
            row[j] = x * row[j] - lower;
        }
    }
    row[n]
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    use num::{BigInt, BigRational, One, ToPrimitive, Zero};

    // Independent oracles: explicit finite series in exact rational
    // arithmetic (every f64 is a dyadic rational), rounded once at the end.

    fn binom(n: u64, k: u64) -> f64 {
        (0..k).fold(1.0, |acc, j| acc * (n - j) as f64 / (j + 1) as f64)
    }

    fn big_fact(k: u64) -> BigInt {
        (1..=k).fold(BigInt::one(), |acc, j| acc * BigInt::from(j))
    }

    fn big_binom(n: u64, k: u64) -> BigInt {
        big_fact(n) / (big_fact(k) * big_fact(n - k))
    }

    fn exact(x: f64) -> BigRational {
        BigRational::from_float(x).expect("finite")
    }

    fn laguerre_series(n: u32, k: u32, x: f64) -> f64 {
        let xr = exact(x);
        let mut acc = BigRational::zero();
        let mut xp = BigRational::one();
        for j in 0..=n as u64 {
            let term = BigRational::from_integer(big_binom(n as u64 + k as u64, n as u64 - j)) * &xp
                / BigRational::from_integer(big_fact(j));
            if j % 2 == 0 {
                acc += term;
            } else {
                acc -= term;
            }
            xp *= &xr;
        }
        acc.to_f64().unwrap()
    }

    fn hermite_series(m: u32, x: f64) -> f64 {
        let m = m as u64;
        let two_x = exact(2.0 * x);
        let mut acc = BigRational::zero();
        for j in 0..=m / 2 {
            let mut p = BigRational::one();
            for _ in 0..(m - 2 * j) {
                p *= &two_x;
            }
            let term = BigRational::from_integer(big_fact(m))
                / BigRational::from_integer(big_fact(j) * big_fact(m - 2 * j))
                * p;
            if j % 2 == 0 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        acc.to_f64().unwrap()
    }

    fn rel_err(a: f64, b: f64) -> f64 {
        (a - b).abs() / b.abs().max(1.0)
    }

    #[test]
    fn log_factorial_values() {
        assert_eq!(log_factorial(0), 0.0);
        assert_eq!(log_factorial(1), 0.0);
        let direct: f64 = (2..=5).map(|j| (j as f64).ln()).sum();
        assert!((log_factorial(5) - direct).abs() < 1e-15);
        assert!((log_factorial(5) - 4.787491742782046).abs() < 1e-12);
        // 12 significant digits up to 200
        let direct200: f64 = (2..=200).map(|j| (j as f64).ln()).sum();
        assert!(((log_factorial(200) - direct200) / direct200).abs() < 1e-12);
        // continuity across the table/Stirling boundary
        let a = log_factorial(511) + (512f64).ln();
        assert!(((log_factorial(512) - a) / a).abs() < 1e-14);
    }

    #[test]
    fn laguerre_examples() {
        assert_eq!(laguerre(0, 3, 3.7), 1.0);
        assert_eq!(laguerre(0, 0, -2.0), 1.0);
        assert!((laguerre(1, 0, 2.0) - laguerre_series(1, 0, 2.0)).abs() < 1e-15);
        assert!((laguerre(1, 0, 2.0) + 1.0).abs() < 1e-15);
        assert!((laguerre(1, 1, 0.5) - 1.5).abs() < 1e-15);
    }

    #[test]
    fn hermite_examples() {
        assert_eq!(hermite(0, 1.234), 1.0);
        assert!((hermite(1, 0.3) - 0.6).abs() < 1e-15);
        assert!((hermite(2, 1.0) - 2.0).abs() < 1e-15);
        for m in (1..15).step_by(2) {
            assert_eq!(hermite(m, 0.0), 0.0);
        }
    }

    #[test]
    fn hermite2v_examples() {
        let c = |re| Complex64::new(re, 0.0);
        assert_eq!(hermite2v(0, 0, c(7.0), Complex64::new(0.3, -2.0)), c(1.0));
        assert!((hermite2v(1, 1, c(2.0), c(3.0)) - c(5.0)).norm() < 1e-14);
        assert!((hermite2v(1, 2, c(1.0), c(1.0)) - c(-1.0)).norm() < 1e-14);
        // same value via the Laguerre reduction: 1!·(-1)·y·L_1^1(xy)
        let via_laguerre = -laguerre(1, 1, 1.0);
        assert!((via_laguerre + 1.0).abs() < 1e-15);
    }

    #[test]
    fn laguerre_special_value_at_zero() {
        for n in 0..15u32 {
            for k in 0..10u32 {
                let expect = binom((n + k) as u64, n as u64);
                assert!(rel_err(laguerre(n, k, 0.0), expect) < 1e-13);
            }
        }
    }

    #[test]
    fn recurrences_match_series_grid() {
        for n in 0..=15u32 {
            for k in [0u32, 1, 2, 5, 9] {
                for i in 0..=40 {
                    let x = -10.0 + 0.5 * i as f64;
                    let a = laguerre(n, k, x);
                    let b = laguerre_series(n, k, x);
                    assert!((a - b).abs() <= 1e-11 * b.abs().max(1.0), "L_{n}^{k}({x}): {a} vs {b}");
                }
            }
            for i in 0..=40 {
                let x = -10.0 + 0.5 * i as f64;
                let a = hermite(n, x);
                let b = hermite_series(n, x);
                assert!((a - b).abs() <= 1e-11 * b.abs().max(1.0), "H_{n}({x})");
            }
        }
    }

    fn complex_in_disk(radius: f64) -> impl Strategy<Value = Complex64> {
        (0.0..radius, -std::f64::consts::PI..std::f64::consts::PI).prop_map(|(r, t)| Complex64::from_polar(r, t))
    }

    proptest! {
        #[test]
        fn laguerre_hermite_link(eta in complex_in_disk(3.0), m in 0u32..10, d in 1u32..=10) {
            let n = (m + d).min(10);
            prop_assume!(m < n);
            let lhs = hermite2v(m, n, eta, eta.conj());
            let sign = if m % 2 == 0 { 1.0 } else { -1.0 };
            let rhs = sign * factorial(m) * eta.conj().powu(n - m)
                * laguerre(m, n - m, eta.norm_sqr());
            let scale = rhs.norm().max(1.0);
            prop_assert!((lhs - rhs).norm() / scale < POLY_REL_TOL, "{lhs} vs {rhs}");
        }

        #[test]
        fn hermite2v_exchange_symmetry(x in complex_in_disk(3.0), y in complex_in_disk(3.0),
                                        m in 0u32..=10, n in 0u32..=10) {
            let a = hermite2v(m, n, x, y);
            let b = hermite2v(n, m, y, x);
            prop_assert!((a - b).norm() <= 1e-12 * a.norm().max(1.0));
        }

        #[test]
        fn laguerre_recurrence_vs_series(n in 0u32..=15, k in 0u32..10, x in -10.0f64..10.0) {
            let a = laguerre(n, k, x);
            let b = laguerre_series(n, k, x);
            prop_assert!((a - b).abs() <= 1e-11 * b.abs().max(1.0));
        }

        #[test]
        fn hermite_recurrence_vs_series(m in 0u32..=15, x in -10.0f64..10.0) {
            let a = hermite(m, x);
            let b = hermite_series(m, x);
            prop_assert!((a - b).abs() <= 1e-11 * b.abs().max(1.0));
        }
    }
}
