// Copyright 2026 The lgkit Authors
// SPDX-License-Identifier: Apache-2.0

use std::f64::consts::{FRAC_PI_2, PI, TAU};

use ndarray::Array2;
use num_complex::Complex64;

use crate::error::{LgError, Result};
use crate::fockspace::ModeIndex;
use crate::modes::{tau_overlap_lg, TauPoint};
use crate::par::{self, Execution};
use crate::quadrature::QuadratureSpec;

/// Orders with `|sin α|` below this are rejected.
pub const SINGULAR_BAND: f64 = 0.05;

/// Edge-to-peak ratio above which a sampled field counts as not decaying.
pub const EDGE_DECAY_LIMIT: f64 = 1e-6;

/// Default FrFT box: half-width 6, 128 Gauss-Legendre nodes per axis.
pub const DEFAULT_HALF_WIDTH: f64 = 6.0;
pub const DEFAULT_NODES: usize = 128;

/// Fractional order `α`, reduced to `[0, 2π)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FrftOrder {
    alpha: f64,
}

impl FrftOrder {
    pub fn new(alpha: f64) -> Result<Self> {
        if !alpha.is_finite() || alpha.sin().abs() < SINGULAR_BAND {
            return Err(LgError::OrderNearSingular { alpha, band: SINGULAR_BAND });
        }
        Ok(FrftOrder { alpha: alpha.rem_euclid(TAU) })
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }
}

/// Values of `f` on one tensor grid.
#[derive(Debug, Clone)]
struct FieldGrid {
    nodes: Vec<f64>,
    weights: Vec<f64>,
    /// `values[[i, j]] = f(nodes[i] + i nodes[j])`
    values: Array2<Complex64>,
}

impl FieldGrid {
    fn tabulate<F>(q: &QuadratureSpec, f: &F, exec: Execution) -> Self
    where
        F: Fn(Complex64) -> Complex64 + Sync,
    {
        let rule = q.axis_rule();
        let k = rule.len();
        let rows = par::map_range(exec, k, |i| {
            (0..k).map(|j| f(Complex64::new(rule.nodes[i], rule.nodes[j]))).collect::<Vec<_>>()
        });
        let values = Array2::from_shape_vec((k, k), rows.into_iter().flatten().collect()).expect("k rows of k values");
        FieldGrid { nodes: rule.nodes, weights: rule.weights, values }
    }

    /// Largest modulus on the outermost ring of nodes over the largest
    /// modulus anywhere.
    fn edge_ratio(&self) -> f64 {
        let k = self.nodes.len();
        let mut peak = 0.0f64;
        let mut edge = 0.0f64;
        for ((i, j), z) in self.values.indexed_iter() {
            let a = z.norm();
            peak = peak.max(a);
            if i == 0 || j == 0 || i == k - 1 || j == k - 1 {
                edge = edge.max(a);
            }
        }
        if peak == 0.0 {
            0.0
        } else {
            edge / peak
        }
    }

    /// `w_i w_j f_ij e^{i|τ'_ij|² cot α / 2}`.
    fn chirped(&self, cot: f64) -> Array2<Complex64> {
        let k = self.nodes.len();
        let half: Vec<Complex64> =
            self.nodes.iter().zip(&self.weights).map(|(&x, &w)| Complex64::from_polar(w, 0.5 * cot * x * x)).collect();
        Array2::from_shape_fn((k, k), |(i, j)| half[i] * half[j] * self.values[[i, j]])
    }
}

/// Samples of `f(τ')` over a quadrature box, tabulated on the nodes of the
/// box rule and of its node-doubled refinement.
#[derive(Debug, Clone)]
pub struct SampledField {
    quadrature: QuadratureSpec,
    primary: FieldGrid,
    doubled: FieldGrid,
}

impl SampledField {
    /// Tabulates `f`. Fails with [`LgError::FieldNotDecaying`] when the
    /// field on the box edge exceeds [`EDGE_DECAY_LIMIT`] of its peak.
    pub fn new<F>(f: F, quadrature: QuadratureSpec) -> Result<Self>
    where
        F: Fn(Complex64) -> Complex64 + Sync,
    {
        Self::new_with(f, quadrature, Execution::default())
    }

    pub fn new_with<F>(f: F, quadrature: QuadratureSpec, exec: Execution) -> Result<Self>
    where
        F: Fn(Complex64) -> Complex64 + Sync,
    {
        quadrature.validate()?;
        let primary = FieldGrid::tabulate(&quadrature, &f, exec);
        let ratio = primary.edge_ratio();
        if ratio > EDGE_DECAY_LIMIT {
            return Err(LgError::FieldNotDecaying { ratio });
        }
        let doubled = FieldGrid::tabulate(&quadrature.doubled(), &f, exec);
        Ok(SampledField { quadrature, primary, doubled })
    }

    /// [`SampledField::new`] on the default box.
    pub fn with_default_box<F>(f: F) -> Result<Self>
    where
        F: Fn(Complex64) -> Complex64 + Sync,
    {
        Self::new(f, default_frft_quadrature())
    }

    /// `⟨τ'|n,l⟩` on [`frft_quadrature_for`] its photon number.
    pub fn lg_mode(idx: ModeIndex) -> Result<Self> {
        Self::new(move |t| tau_overlap_lg(idx, TauPoint::new(t)), frft_quadrature_for(idx.n()))
    }

    pub fn quadrature(&self) -> &QuadratureSpec {
        &self.quadrature
    }
}

pub fn default_frft_quadrature() -> QuadratureSpec {
    QuadratureSpec::gauss_legendre(DEFAULT_HALF_WIDTH, DEFAULT_NODES).expect("static quadrature parameters are valid")
}

/// Box for a field in the `n`-photon sector: half-width `6 + √n`.
pub fn frft_quadrature_for(n_total: u32) -> QuadratureSpec {
    QuadratureSpec::gauss_legendre(DEFAULT_HALF_WIDTH + (n_total as f64).sqrt(), DEFAULT_NODES)
        .expect("static quadrature parameters are valid")
}

/// `Σ_ij g_ij e^{-i(τ1 x_i + τ2 x_j)/sin α}` for a chirped grid `g`.
fn plane_sum(grid: &FieldGrid, chirped: &Array2<Complex64>, tau: Complex64, sin: f64) -> Complex64 {
    let e1: Vec<Complex64> = grid.nodes.iter().map(|&x| Complex64::from_polar(1.0, -tau.re * x / sin)).collect();
    let e2: Vec<Complex64> = grid.nodes.iter().map(|&x| Complex64::from_polar(1.0, -tau.im * x / sin)).collect();
    chirped
        .rows()
        .into_iter()
        .zip(&e1)
        .map(|(row, a)| a * row.iter().zip(&e2).map(|(g, b)| g * b).sum::<Complex64>())
        .sum()
}

/// `F_α[f]` for one field and one order, ready to evaluate at any `τ`:
///
/// `F_α[f](τ) = (e^{i(α-π/2)} / (2 sin α)) ∫ (d²τ'/π)
///   exp[i(|τ'|² + |τ|²)/(2 tan α) - i(τ*τ' + τ'*τ)/(2 sin α)] f(τ')`.
///
/// The kernel factors into per-axis phases, so the `τ'`-dependent chirp is
/// folded into the tabulated grids once and each evaluation is a single
/// pass over them. Every value is checked against the doubled grid.
#[derive(Debug, Clone)]
pub struct FrftPlan<'a> {
    field: &'a SampledField,
    sin: f64,
    cot: f64,
    scale: Complex64,
    chirp_primary: Array2<Complex64>,
    chirp_doubled: Array2<Complex64>,
}

impl<'a> FrftPlan<'a> {
    pub fn new(field: &'a SampledField, order: FrftOrder) -> Self {
        let a = order.alpha();
        let (sin, cos) = a.sin_cos();
        let cot = cos / sin;
        FrftPlan {
            field,
            sin,
            cot,
            scale: Complex64::from_polar(1.0, a - FRAC_PI_2) / (2.0 * sin * PI),
            chirp_primary: field.primary.chirped(cot),
            chirp_doubled: field.doubled.chirped(cot),
        }
    }

    pub fn eval(&self, tau: Complex64) -> Result<Complex64> {
        let outer = self.scale * Complex64::from_polar(1.0, 0.5 * self.cot * tau.norm_sqr());
        let coarse = outer * plane_sum(&self.field.primary, &self.chirp_primary, tau, self.sin);
        let fine = outer * plane_sum(&self.field.doubled, &self.chirp_doubled, tau, self.sin);
        self.field.quadrature.check_change((fine - coarse).norm())?;
        Ok(coarse)
    }
}

/// `F_α[f](τ)` at many points, in input order; see [`FrftPlan`].
pub fn frft_many(
    field: &SampledField,
    order: FrftOrder,
    taus: &[Complex64],
    exec: Execution,
) -> Result<Vec<Complex64>> {
    let plan = FrftPlan::new(field, order);
    par::map_slice(exec, taus, |&tau| plan.eval(tau)).into_iter().collect()
}

pub fn frft(field: &SampledField, order: FrftOrder, tau: Complex64) -> Result<Complex64> {
    Ok(frft_many(field, order, &[tau], Execution::Sequential)?[0])
}

/// The 5×5 grid of `τ` over `[-1, 1]²` used by the eigen checks.
pub fn eigen_sample_points() -> Vec<Complex64> {
    let axis = [-1.0, -0.5, 0.0, 0.5, 1.0];
    axis.iter().flat_map(|&a| axis.iter().map(move |&b| Complex64::new(a, b))).collect()
}

/// Per-point comparison of `F_α[f]` with `λ f` for a claimed eigenvalue.
#[derive(Debug, Clone)]
pub struct EigenFit {
    pub points: Vec<Complex64>,
    /// `F_α[f](τ)` per point.
    pub transformed: Vec<Complex64>,
    /// `|F_α[f](τ) - λ f(τ)|` per point.
    pub residuals: Vec<f64>,
    /// `arg Σ f* F_α[f]`, in `(-π, π]`.
    pub fitted_phase: f64,
    pub expected_phase: f64,
}

impl EigenFit {
    pub fn max_residual(&self) -> f64 {
        self.residuals.iter().copied().fold(0.0, f64::max)
    }
}

/// Tests `F_α[f] = e^{-iα n_total} f` at `points`.
pub fn frft_eigen_fit<F>(
    f: F,
    n_total: u32,
    order: FrftOrder,
    points: &[Complex64],
    exec: Execution,
) -> Result<EigenFit>
where
    F: Fn(Complex64) -> Complex64 + Sync,
{
    frft_eigen_fit_on(f, n_total, order, points, frft_quadrature_for(n_total), exec)
}

/// [`frft_eigen_fit`] with the field sampled on `quadrature`.
pub fn frft_eigen_fit_on<F>(
    f: F,
    n_total: u32,
    order: FrftOrder,
    points: &[Complex64],
    quadrature: QuadratureSpec,
    exec: Execution,
) -> Result<EigenFit>
where
    F: Fn(Complex64) -> Complex64 + Sync,
{
    let field = SampledField::new_with(&f, quadrature, exec)?;
    let transformed = frft_many(&field, order, points, exec)?;
    let expected_phase = wrap_phase(-order.alpha() * n_total as f64);
    let lambda = Complex64::from_polar(1.0, expected_phase);
    let mut overlap = Complex64::new(0.0, 0.0);
    let residuals = points
        .iter()
        .zip(&transformed)
        .map(|(&t, &ft)| {
            let v = f(t);
            overlap += v.conj() * ft;
            (ft - lambda * v).norm()
        })
        .collect();
    Ok(EigenFit { points: points.to_vec(), transformed, residuals, fitted_phase: overlap.arg(), expected_phase })
}

/// `max_τ |F_α[⟨·|n,l⟩](τ) - e^{-iα(m_ρ+n_ρ)} ⟨τ|n,l⟩|` over
/// [`eigen_sample_points`].
pub fn frft_eigen_residual(idx: ModeIndex, order: FrftOrder) -> Result<f64> {
    let fit = frft_eigen_fit(
        |t| tau_overlap_lg(idx, TauPoint::new(t)),
        idx.n(),
        order,
        &eigen_sample_points(),
        Execution::default(),
    )?;
    Ok(fit.max_residual())
}

/// Maps an angle into `(-π, π]`.
pub fn wrap_phase(x: f64) -> f64 {
    let r = (x + PI).rem_euclid(TAU) - PI;
    if r == -PI {
        PI
    } else {
        r
    }
}
