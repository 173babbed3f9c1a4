// Copyright 2026 The lgkit Authors
// SPDX-License-Identifier: Apache-2.0

//! One-dimensional quadrature rules and the box-quadrature descriptor shared
//! by every numerical integral in the crate.

use std::f64::consts::PI;
use std::sync::{Arc, Mutex, OnceLock};

use crate::error::{LgError, Result};

/// Nodes and weights of a one-dimensional rule.
#[derive(Debug, Clone, PartialEq)]
pub struct Rule {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
}

impl Rule {
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Affine map of a rule on `[-1, 1]` onto `[a, b]`.
    pub fn mapped(&self, a: f64, b: f64) -> Rule {
        let half = 0.5 * (b - a);
        let mid = 0.5 * (b + a);
        Rule {
            nodes: self.nodes.iter().map(|x| mid + half * x).collect(),
            weights: self.weights.iter().map(|w| half * w).collect(),
        }
    }

    pub fn integrate<F: Fn(f64) -> f64>(&self, f: F) -> f64 {
        self.nodes.iter().zip(&self.weights).map(|(&x, &w)| w * f(x)).sum()
    }
}

/// Gauss-Legendre rule on `[-1, 1]`, by Newton iteration on the Legendre
/// three-term recurrence.
pub fn gauss_legendre(n: usize) -> Rule {
    assert!(n > 0, "gauss_legendre needs at least one node");
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    let m = n.div_ceil(2);
    for i in 0..m {
        let mut z = (PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (p, d) = legendre_with_derivative(n, z);
            dp = d;
            let dz = p / d;
            z -= dz;
            if dz.abs() < 1e-16 {
                break;
            }
        }
        let (_, d) = legendre_with_derivative(n, z);
        if d != 0.0 {
            dp = d;
        }
        let w = 2.0 / ((1.0 - z * z) * dp * dp);
        nodes[i] = -z;
        nodes[n - 1 - i] = z;
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    Rule { nodes, weights }
}

fn legendre_with_derivative(n: usize, z: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = z;
    if n == 0 {
        return (1.0, 0.0);
    }
    for j in 2..=n {
        let jf = j as f64;
        let p2 = ((2.0 * jf - 1.0) * z * p1 - (jf - 1.0) * p0) / jf;
        p0 = p1;
        p1 = p2;
    }
    let nf = n as f64;
    (p1, nf * (z * p1 - p0) / (z * z - 1.0))
}

/// Gauss-Hermite rule for the weight `e^{-x²}` on the real line.
///
/// Works in the orthonormal Hermite recurrence, which stays in range for a
/// few hundred nodes.
pub fn gauss_hermite(n: usize) -> Rule {
    assert!(n > 0, "gauss_hermite needs at least one node");
    let pim4 = PI.powf(-0.25);
    // Golub-Welsch: nodes are the eigenvalues of the Jacobi matrix with
    // off-diagonal sqrt(j/2). Each is then polished by Newton on the
    // orthonormal recurrence, which also yields the weight.
    let jacobi =
        nalgebra::DMatrix::<f64>::from_fn(
            n,
            n,
            |i, j| {
                if i.abs_diff(j) == 1 {
                    (i.max(j) as f64 / 2.0).sqrt()
                } else {
                    0.0
                }
            },
        );
    let mut guesses: Vec<f64> = jacobi.symmetric_eigenvalues().iter().copied().collect();
    guesses.sort_by(f64::total_cmp);
    let m = n.div_ceil(2);
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    for i in 0..m {
        // largest roots first, mirrored below
        let mut z = guesses[n - 1 - i];
        if n % 2 == 1 && i == m - 1 {
            z = 0.0;
        }
        for _ in 0..3 {
            let (p, d) = hermite_orthonormal(n, z, pim4);
            z -= p / d;
        }
        let (_, d) = hermite_orthonormal(n, z, pim4);
        let w = 2.0 / (d * d);
        nodes[n - 1 - i] = z;
        nodes[i] = -z;
        weights[n - 1 - i] = w;
        weights[i] = w;
    }
    Rule { nodes, weights }
}

fn hermite_orthonormal(n: usize, z: f64, pim4: f64) -> (f64, f64) {
    let mut p1 = pim4;
    let mut p2 = 0.0;
    for j in 1..=n {
        let jf = j as f64;
        let p3 = p2;
        p2 = p1;
        p1 = z * (2.0 / jf).sqrt() * p2 - ((jf - 1.0) / jf).sqrt() * p3;
    }
    (p1, (2.0 * n as f64).sqrt() * p2)
}

/// Composite midpoint rule with `n` cells on `[-1, 1]`.
pub fn midpoint(n: usize) -> Rule {
    assert!(n > 0, "midpoint needs at least one cell");
    let h = 2.0 / n as f64;
    Rule { nodes: (0..n).map(|i| -1.0 + h * (i as f64 + 0.5)).collect(), weights: vec![h; n] }
}

type RuleCache = Mutex<Vec<(usize, Arc<Rule>)>>;

static GH_CACHE: OnceLock<RuleCache> = OnceLock::new();

/// Memoized [`gauss_hermite`]; the rule is shared read-only across threads.
pub fn gauss_hermite_cached(n: usize) -> Arc<Rule> {
    let cache = GH_CACHE.get_or_init(|| Mutex::new(Vec::new()));
    let mut guard = cache.lock().expect("quadrature cache poisoned");
    if let Some((_, r)) = guard.iter().find(|(k, _)| *k == n) {
        return Arc::clone(r);
    }
    let rule = Arc::new(gauss_hermite(n));
    guard.push((n, Arc::clone(&rule)));
    rule
}

/// Polar product rule on the disk `r <= r_max`: Gauss-Legendre in `r`,
/// trapezoid in `φ`. Returns `(r, φ, w)` with the area element `r` folded
/// into `w`.
pub fn polar_disk(r_max: f64, n_radial: usize, n_angular: usize) -> Vec<(f64, f64, f64)> {
    let radial = gauss_legendre(n_radial).mapped(0.0, r_max);
    let dphi = 2.0 * PI / n_angular as f64;
    let mut out = Vec::with_capacity(n_radial * n_angular);
    for (&r, &wr) in radial.nodes.iter().zip(&radial.weights) {
        for j in 0..n_angular {
            out.push((r, -PI + dphi * j as f64, wr * r * dphi));
        }
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QuadratureRule {
    GaussLegendre,
    Midpoint,
}

/// Tensor-product quadrature on the box `[-half_width, half_width]^d`.
///
/// `self_check_tol` drives the node-doubling self check: a result is
/// rejected when doubling `nodes_per_axis` moves it by more than ten times
/// this tolerance.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureSpec {
    pub half_width: f64,
    pub nodes_per_axis: usize,
    pub rule: QuadratureRule,
    pub self_check_tol: f64,
}

impl QuadratureSpec {
    pub const MIN_NODES: usize = 8;

    pub fn new(half_width: f64, nodes_per_axis: usize, rule: QuadratureRule) -> Result<Self> {
        let q = QuadratureSpec { half_width, nodes_per_axis, rule, self_check_tol: 1e-6 };
        q.validate()?;
        Ok(q)
    }

    pub fn gauss_legendre(half_width: f64, nodes_per_axis: usize) -> Result<Self> {
        Self::new(half_width, nodes_per_axis, QuadratureRule::GaussLegendre)
    }

    pub fn midpoint(half_width: f64, nodes_per_axis: usize) -> Result<Self> {
        Self::new(half_width, nodes_per_axis, QuadratureRule::Midpoint)
    }

    pub fn with_self_check_tol(mut self, tol: f64) -> Self {
        self.self_check_tol = tol;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.half_width > 0.0 && self.half_width.is_finite()) {
            return Err(LgError::InvalidArgument(format!(
                "quadrature half_width must be positive, got {}",
                self.half_width
            )));
        }
        if self.nodes_per_axis < Self::MIN_NODES {
            return Err(LgError::InvalidArgument(format!(
                "quadrature needs at least {} nodes per axis, got {}",
                Self::MIN_NODES,
                self.nodes_per_axis
            )));
        }
        Ok(())
    }

    /// Same box with twice the nodes.
    pub fn doubled(&self) -> Self {
        QuadratureSpec { nodes_per_axis: 2 * self.nodes_per_axis, ..*self }
    }

    /// The per-axis rule on `[-half_width, half_width]`.
    pub fn axis_rule(&self) -> Rule {
        let base = match self.rule {
            QuadratureRule::GaussLegendre => gauss_legendre(self.nodes_per_axis),
            QuadratureRule::Midpoint => midpoint(self.nodes_per_axis),
        };
        base.mapped(-self.half_width, self.half_width)
    }

    /// Checks a fine/coarse pair from the node-doubling self check.
    pub fn check_doubling(&self, coarse: f64, fine: f64) -> Result<()> {
        self.check_change((fine - coarse).abs())
    }

    /// Checks the size of a coarse-to-fine change directly.
    pub fn check_change(&self, change: f64) -> Result<()> {
        let limit = 10.0 * self.self_check_tol;
        if change > limit || !change.is_finite() {
            return Err(LgError::QuadratureUnderResolved { change, limit });
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn legendre_integrates_polynomials_exactly() {
        let r = gauss_legendre(10);
        // degree 19 is the exactness limit for 10 nodes
        let exact = |k: i32| if k % 2 == 1 { 0.0 } else { 2.0 / (k as f64 + 1.0) };
        for k in 0..20 {
            let got = r.integrate(|x| x.powi(k));
            assert!((got - exact(k)).abs() < 1e-14, "k={k} got={got}");
        }
        let w: f64 = gauss_legendre(128).weights.iter().sum();
        assert!((w - 2.0).abs() < 1e-13);
    }

    #[test]
    fn hermite_moments() {
        // ∫ x^{2k} e^{-x²} dx = Γ(k + 1/2)
        for n in [5usize, 40, 100, 200] {
            let r = gauss_hermite(n);
            let mut gamma = PI.sqrt();
            // exact through degree 2n - 1
            for k in 0..6.min(n as i32) {
                let got = r.integrate(|x| x.powi(2 * k));
                assert!((got - gamma).abs() < 1e-12 * gamma, "n={n} k={k}");
                gamma *= k as f64 + 0.5;
            }
            assert!(r.nodes.windows(2).all(|w| w[0] < w[1]), "n={n} nodes unsorted");
        }
    }

    #[test]
    fn hermite_gaussian_fourier() {
        // ∫ e^{-x²} cos(2px) dx = √π e^{-p²}
        let r = gauss_hermite_cached(200);
        for p in [0.0, 0.5, 1.5, 3.0] {
            let got = r.integrate(|x| (2.0 * p * x).cos());
            let want = PI.sqrt() * (-p * p).exp();
            assert!((got - want).abs() < 1e-13, "p={p}: {got} vs {want}");
        }
    }

    #[test]
    fn polar_disk_area_and_moment() {
        let pts = polar_disk(2.0, 32, 64);
        let area: f64 = pts.iter().map(|p| p.2).sum();
        assert!((area - 4.0 * PI).abs() < 1e-12);
        // ∫ r² cos²φ dA = π r⁴ / 4
        let m: f64 = pts.iter().map(|&(r, f, w)| w * (r * f.cos()).powi(2)).sum();
        assert!((m - 4.0 * PI).abs() < 1e-12);
    }

    #[test]
    fn midpoint_weights_sum() {
        let r = midpoint(48).mapped(-3.0, 3.0);
        let w: f64 = r.weights.iter().sum();
        assert!((w - 6.0).abs() < 1e-13);
    }

    #[test]
    fn spec_validation() {
        assert!(QuadratureSpec::gauss_legendre(0.0, 32).is_err());
        assert!(QuadratureSpec::gauss_legendre(5.0, 7).is_err());
        let q = QuadratureSpec::gauss_legendre(5.0, 8).unwrap();
        assert_eq!(q.doubled().nodes_per_axis, 16);
        assert!(q.check_doubling(1.0, 1.0 + 5e-6).is_ok());
        assert!(matches!(q.check_doubling(1.0, 1.1), Err(LgError::QuadratureUnderResolved { .. })));
    }
}
