// Copyright 2026 The lgkit Authors
// SPDX-License-Identifier: Apache-2.0

//! The verification suites behind `lgkit verify`.
//!
//! Each check returns its worst residual; a check passes when the residual
//! is finite and at most its tolerance.

use std::f64::consts::{FRAC_1_SQRT_2, FRAC_PI_2, FRAC_PI_3, FRAC_PI_4, PI};
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use lgkit::fockspace::checks::{
    eta_eigen_residuals, jx_decomposition_check, ladder_commutator_check, quadrature_covariance_check,
    recombination_check, tau_eigen_residuals, NumberAndAngularMomentum,
};
use lgkit::fockspace::{
    angular_momentum_operator, beam_splitter, build_eta_state, build_tau_state, jx_operator, jz_operator,
    lg_state_beamsplitter, lg_state_ladder, number_operator,
};
use lgkit::modes::{eta_overlap_integral, lg_wavefunction_eta, radial_equation_residual, tau_overlap_lg};
use lgkit::par::Execution;
use lgkit::phasespace::{
    default_marginal_quadrature, marginal_sigma_analytic, marginal_sigma_from_overlap, marginal_sigma_quadrature_with,
    wigner_lg, wigner_lg_total_mass, DisplacedParity,
};
use lgkit::specialfn::{factorial, hermite2v, laguerre};
use lgkit::transforms::{
    eigen_sample_points, frft_eigen_fit_on, frft_quadrature_for, gwt, gwt_lg_identity_residual, gwt_sample_points,
    schmidt_overlap_check, wrap_phase,
};
use lgkit::{BasisSpec, Complex64, EtaPoint, FrftOrder, ModeIndex, PhasePoint4, QuadratureSpec, TauPoint};

use super::Globals;
use crate::args::{Suite, VerifyArgs};
use crate::error::{CliResult, EXIT_CHECK_FAILED};
use crate::output::{emit, fmt_num, write_json, Num};

/// Cutoff for the entangled-state checks.
pub const ENTANGLED_NMAX: usize = 40;
/// Cutoff for the operator-identity checks.
pub const IDENTITY_NMAX: usize = 8;
/// Largest total photon number in the `|n,l⟩` eigen checks.
pub const EIGEN_MAX_N: u32 = 6;
/// Seed of the sample points for the polynomial identity.
pub const POLY_SEED: u64 = 2026;

#[derive(Debug, Clone, Serialize)]
pub struct CheckRecord {
    pub id: &'static str,
    pub anchor: &'static str,
    pub residual: Num,
    pub tol: Num,
    pub pass: bool,
    pub ms: Num,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerifyReport {
    pub suite: &'static str,
    pub checks: Vec<CheckRecord>,
    pub pass: bool,
}

struct Ctx {
    nmax: usize,
    tol: Option<f64>,
}

impl Ctx {
    fn tune(&self, q: QuadratureSpec) -> QuadratureSpec {
        match self.tol {
            Some(t) => q.with_self_check_tol(t),
            None => q,
        }
    }
}

type CheckFn = fn(&Ctx) -> lgkit::Result<f64>;

struct Check {
    id: &'static str,
    anchor: &'static str,
    tol: f64,
    run: CheckFn,
}

const fn check(id: &'static str, anchor: &'static str, tol: f64, run: CheckFn) -> Check {
    Check { id, anchor, tol, run }
}

fn mi(n: u32, l: i32) -> ModeIndex {
    ModeIndex::new(n, l).expect("static mode index")
}

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn max_of(it: impl IntoIterator<Item = f64>) -> f64 {
    // NaN-propagating, so a broken evaluation cannot pass
    it.into_iter().fold(0.0, |a, b| if a.is_nan() || b.is_nan() { f64::NAN } else { a.max(b) })
}

/// Entangled-state sample points with modulus at most 1.
const UNIT_DISK_SAMPLES: [(f64, f64); 5] = [(0.0, 0.0), (0.5, 0.3), (-0.7, 0.7), (1.0, 0.0), (-0.4, -0.9)];

fn unit_disk() -> impl Iterator<Item = Complex64> {
    UNIT_DISK_SAMPLES.iter().map(|&(a, b)| c(a, b))
}

// fock

fn number_eigen(cx: &Ctx) -> lgkit::Result<f64> {
    eigen_pair(cx).map(|(n, _)| n)
}

fn angular_eigen(cx: &Ctx) -> lgkit::Result<f64> {
    eigen_pair(cx).map(|(_, l)| l)
}

fn eigen_pair(cx: &Ctx) -> lgkit::Result<(f64, f64)> {
    let basis = BasisSpec::new(cx.nmax);
    let ops = NumberAndAngularMomentum::new(basis);
    let (mut wn, mut wl) = (0.0f64, 0.0f64);
    for idx in ModeIndex::all_up_to(EIGEN_MAX_N) {
        let s = lg_state_ladder(idx, basis)?;
        let (rn, rl) = ops.residuals(&s, idx.n() as f64, idx.l() as f64);
        wn = max_of([wn, rn]);
        wl = max_of([wl, rl]);
    }
    Ok((wn, wl))
}

fn construction_equivalence(cx: &Ctx) -> lgkit::Result<f64> {
    let basis = BasisSpec::new(cx.nmax);
    let mut worst = 0.0;
    for idx in ModeIndex::all_up_to(EIGEN_MAX_N) {
        let a = lg_state_ladder(idx, basis)?;
        let b = lg_state_beamsplitter(idx, basis)?;
        worst = max_of([worst, a.max_abs_diff(&b)]);
    }
    Ok(worst)
}

fn state_normalization(cx: &Ctx) -> lgkit::Result<f64> {
    let basis = BasisSpec::new(cx.nmax);
    let mut worst = 0.0;
    for idx in ModeIndex::all_up_to(EIGEN_MAX_N) {
        worst = max_of([worst, (lg_state_ladder(idx, basis)?.norm() - 1.0).abs()]);
    }
    Ok(worst)
}

fn ladder_commutators(_: &Ctx) -> lgkit::Result<f64> {
    Ok(ladder_commutator_check(BasisSpec::new(IDENTITY_NMAX)))
}

fn recombination(_: &Ctx) -> lgkit::Result<f64> {
    Ok(recombination_check(BasisSpec::new(IDENTITY_NMAX)))
}

fn jx_decomposition(_: &Ctx) -> lgkit::Result<f64> {
    Ok(jx_decomposition_check(BasisSpec::new(IDENTITY_NMAX)))
}

fn quadrature_covariance(_: &Ctx) -> lgkit::Result<f64> {
    Ok(quadrature_covariance_check(BasisSpec::new(IDENTITY_NMAX)))
}

fn eta_eigen(_: &Ctx) -> lgkit::Result<f64> {
    let basis = BasisSpec::new(ENTANGLED_NMAX);
    let mut worst = 0.0;
    for eta in unit_disk() {
        worst = max_of([worst].into_iter().chain(eta_eigen_residuals(eta, basis)?));
    }
    Ok(worst)
}

fn tau_eigen(_: &Ctx) -> lgkit::Result<f64> {
    let basis = BasisSpec::new(ENTANGLED_NMAX);
    let mut worst = 0.0;
    for tau in unit_disk() {
        worst = max_of([worst].into_iter().chain(tau_eigen_residuals(tau, basis)?));
    }
    Ok(worst)
}

fn hermitian_generators(cx: &Ctx) -> lgkit::Result<f64> {
    let basis = BasisSpec::new(cx.nmax);
    Ok(max_of([
        number_operator(basis).hermiticity_defect(),
        angular_momentum_operator(basis).hermiticity_defect(),
        jx_operator(basis).hermiticity_defect(),
        jz_operator(basis).hermiticity_defect(),
    ]))
}

fn beam_splitter_unitarity(_: &Ctx) -> lgkit::Result<f64> {
    let bs = beam_splitter(FRAC_PI_3, PI / 5.0, BasisSpec::new(IDENTITY_NMAX));
    Ok(bs.unitarity_defect(0))
}

// modes

fn polynomial_identity(_: &Ctx) -> lgkit::Result<f64> {
    let mut rng = ChaCha8Rng::seed_from_u64(POLY_SEED);
    let mut worst = 0.0;
    for _ in 0..20 {
        let eta = Complex64::from_polar(3.0 * rng.random::<f64>().sqrt(), rng.random_range(-PI..PI));
        for n in 1..=10u32 {
            for m in 0..n {
                let lhs = hermite2v(m, n, eta, eta.conj());
                let sign = if m % 2 == 0 { 1.0 } else { -1.0 };
                let rhs = eta.conj().powu(n - m) * (sign * factorial(m) * laguerre(m, n - m, eta.norm_sqr()));
                worst = max_of([worst, (lhs - rhs).norm() / rhs.norm().max(1.0)]);
            }
        }
    }
    Ok(worst)
}

/// `(n, l, r)` where the radial-equation convergence order is measured.
const RADIAL_SAMPLES: [(u32, i32, f64); 6] =
    [(0, 0, 1.0), (1, 1, 0.9), (2, 0, 1.5), (2, -2, 1.2), (3, 1, 0.8), (4, 2, 1.1)];

fn radial_order(_: &Ctx) -> lgkit::Result<f64> {
    Ok(max_of(RADIAL_SAMPLES.iter().map(|&(n, l, r)| {
        let ratio = radial_equation_residual(mi(n, l), r, 1e-2) / radial_equation_residual(mi(n, l), r, 5e-3);
        (ratio - 4.0).abs()
    })))
}

fn eta_overlap_oracle(_: &Ctx) -> lgkit::Result<f64> {
    let basis = BasisSpec::new(ENTANGLED_NMAX);
    let states = unit_disk().map(|e| build_eta_state(e, basis).map(|s| (e, s))).collect::<lgkit::Result<Vec<_>>>()?;
    let mut worst = 0.0;
    for idx in ModeIndex::all_up_to(3).into_iter().filter(|i| i.l() >= 0) {
        let lg = lg_state_beamsplitter(idx, basis)?;
        for (eta, s) in &states {
            let v = lg_wavefunction_eta(idx, EtaPoint::new(*eta));
            worst = max_of([worst, (s.inner(&lg) - v).norm() / v.norm().max(1e-3)]);
        }
    }
    Ok(worst)
}

fn tau_overlap_oracle(_: &Ctx) -> lgkit::Result<f64> {
    let basis = BasisSpec::new(ENTANGLED_NMAX);
    let states = unit_disk().map(|t| build_tau_state(t, basis).map(|s| (t, s))).collect::<lgkit::Result<Vec<_>>>()?;
    let mut worst = 0.0;
    for idx in ModeIndex::all_up_to(3) {
        let lg = lg_state_beamsplitter(idx, basis)?;
        for (tau, s) in &states {
            worst = max_of([worst, (s.inner(&lg) - tau_overlap_lg(idx, TauPoint::new(*tau))).norm()]);
        }
    }
    Ok(worst)
}

fn orthonormality(_: &Ctx) -> lgkit::Result<f64> {
    let modes = ModeIndex::all_up_to(3);
    let mut worst = 0.0;
    for &a in &modes {
        for &b in &modes {
            let want = if a == b { 1.0 } else { 0.0 };
            worst = max_of([worst, (eta_overlap_integral(a, b) - want).norm()]);
        }
    }
    Ok(worst)
}

// wigner

fn wigner_oracle(cx: &Ctx) -> lgkit::Result<f64> {
    let basis = BasisSpec::new(cx.nmax);
    let oracle = DisplacedParity::new(cx.nmax);
    let axis: Vec<f64> = (0..5).map(|i| -1.2 + 0.6 * i as f64).collect();
    let mut pts = Vec::with_capacity(625);
    for &x1 in &axis {
        for &p1 in &axis {
            for &x2 in &axis {
                for &p2 in &axis {
                    pts.push(PhasePoint4::new(x1, p1, x2, p2)?);
                }
            }
        }
    }
    let mut worst = 0.0;
    for idx in ModeIndex::all_up_to(4) {
        let s = lg_state_ladder(idx, basis)?;
        let brute = oracle.wigner_many(&s, &pts, Execution::default())?;
        worst = max_of([worst].into_iter().chain(pts.iter().zip(brute).map(|(p, b)| (wigner_lg(idx, *p) - b).abs())));
    }
    Ok(worst)
}

fn wigner_normalization(_: &Ctx) -> lgkit::Result<f64> {
    Ok(max_of(
        ModeIndex::all_up_to(3).into_iter().map(|idx| (wigner_lg_total_mass(idx, Execution::default()) - 1.0).abs()),
    ))
}

fn sigma_samples() -> Vec<Complex64> {
    let ax = [-0.8, 0.1, 0.9];
    ax.iter().flat_map(|&a| ax.iter().map(move |&b| c(a, b))).collect()
}

fn marginal_overlap(_: &Ctx) -> lgkit::Result<f64> {
    let mut worst = 0.0;
    for idx in ModeIndex::all_up_to(3).into_iter().filter(|i| i.l() >= 0) {
        for s in sigma_samples() {
            worst = max_of([worst, (marginal_sigma_analytic(idx, s) - marginal_sigma_from_overlap(idx, s)).abs()]);
        }
    }
    Ok(worst)
}

fn marginal_quadrature(cx: &Ctx) -> lgkit::Result<f64> {
    let mut worst = 0.0;
    for idx in ModeIndex::all_up_to(3).into_iter().filter(|i| i.l() >= 0) {
        let q = cx.tune(default_marginal_quadrature(idx));
        for s in sigma_samples() {
            let quad = marginal_sigma_quadrature_with(idx, s, &q, Execution::default())?;
            worst = max_of([worst, (marginal_sigma_analytic(idx, s) - quad).abs()]);
        }
    }
    Ok(worst)
}

fn gamma_measure(cx: &Ctx) -> lgkit::Result<f64> {
    let idx = mi(0, 0);
    let q = cx.tune(default_marginal_quadrature(idx));
    let mut worst = 0.0;
    for s in [c(0.0, 0.0), c(0.5, 0.2)] {
        let got = marginal_sigma_quadrature_with(idx, s, &q, Execution::default())?;
        worst = max_of([worst, (got / ((-s.norm_sqr()).exp() / PI) - 1.0).abs()]);
    }
    Ok(worst)
}

fn wigner_bound(_: &Ctx) -> lgkit::Result<f64> {
    let axis: Vec<f64> = (0..7).map(|i| -1.5 + 0.5 * i as f64).collect();
    let mut excess = 0.0;
    for idx in ModeIndex::all_up_to(4) {
        for &x1 in &axis {
            for &p1 in &axis {
                for &x2 in &axis {
                    for &p2 in &axis {
                        let w = wigner_lg(idx, PhasePoint4::new(x1, p1, x2, p2)?);
                        excess = max_of([excess, PI * PI * w.abs() - 1.0]);
                    }
                }
            }
        }
    }
    Ok(excess)
}

// transforms

const FRFT_MODES: [(u32, i32); 4] = [(0, 0), (1, 1), (2, 0), (2, 2)];
const FRFT_ORDERS: [f64; 3] = [0.7, FRAC_PI_4, FRAC_PI_2];

fn frft_fits(cx: &Ctx) -> lgkit::Result<Vec<lgkit::transforms::EigenFit>> {
    let mut fits = Vec::new();
    for (n, l) in FRFT_MODES {
        let idx = mi(n, l);
        for a in FRFT_ORDERS {
            fits.push(frft_eigen_fit_on(
                |t| tau_overlap_lg(idx, TauPoint::new(t)),
                n,
                FrftOrder::new(a)?,
                &eigen_sample_points(),
                cx.tune(frft_quadrature_for(n)),
                Execution::default(),
            )?);
        }
    }
    Ok(fits)
}

fn frft_eigen(cx: &Ctx) -> lgkit::Result<f64> {
    Ok(max_of(frft_fits(cx)?.iter().map(|f| f.max_residual())))
}

fn frft_phase(cx: &Ctx) -> lgkit::Result<f64> {
    Ok(max_of(frft_fits(cx)?.iter().map(|f| wrap_phase(f.fitted_phase - f.expected_phase).abs())))
}

fn gwt_identity(_: &Ctx) -> lgkit::Result<f64> {
    let mut worst = 0.0;
    for (m, n) in [(0, 0), (0, 2), (1, 1), (1, 3)] {
        for t in gwt_sample_points() {
            worst = max_of([worst, gwt_lg_identity_residual(m, n, t)?]);
        }
    }
    Ok(worst)
}

fn schmidt_overlap(_: &Ctx) -> lgkit::Result<f64> {
    let mut worst = 0.0;
    for m in 0..4 {
        for n in 0..4 {
            for t in gwt_sample_points() {
                worst = max_of([worst, schmidt_overlap_check(m, n, t)?]);
            }
        }
    }
    Ok(worst)
}

fn gwt_conjugate_symmetry(_: &Ctx) -> lgkit::Result<f64> {
    let mut worst = 0.0;
    for t in gwt_sample_points() {
        let (x, p) = (t.re * FRAC_1_SQRT_2, t.im * FRAC_1_SQRT_2);
        for m in 0..5 {
            for n in m + 1..5 {
                worst = max_of([worst, (gwt(m, n, x, p)? - gwt(n, m, x, p)?.conj()).norm()]);
            }
        }
    }
    Ok(worst)
}

const FOCK: &[Check] = &[
    check("fock.number_eigen", "N|n,l> = n|n,l>, n <= 6", 1e-10, number_eigen),
    check("fock.angular_eigen", "L|n,l> = l|n,l>, n <= 6", 1e-10, angular_eigen),
    check(
        "fock.construction_equivalence",
        "|n,l> by circular ladders equals 50:50 beam splitter on |m_rho, n_rho>",
        1e-10,
        construction_equivalence,
    ),
    check("fock.state_normalization", "<n,l|n,l> = 1", 1e-12, state_normalization),
    check("fock.ladder_commutators", "[A_i, A_j^dag] = delta_ij for circular ladders", 1e-9, ladder_commutators),
    check("fock.recombination", "A+^dag A+ +/- A-^dag A- = N, L", 1e-9, recombination),
    check("fock.jx_decomposition", "exp(i pi/2 Jx) as a disentangled product", 1e-9, jx_decomposition),
    check("fock.quadrature_covariance", "U^dag (X, P) U rotation under exp(i pi/2 Jx)", 1e-9, quadrature_covariance),
    check("fock.eta_eigen", "|eta> eigen-equations, |eta| <= 1", 1e-6, eta_eigen),
    check("fock.tau_eigen", "|tau> eigen-equations, |tau| <= 1", 1e-6, tau_eigen),
    check("fock.hermitian_generators", "N, L, Jx, Jz hermitian", 1e-12, hermitian_generators),
    check("fock.beam_splitter_unitarity", "B(theta, phi) unitary", 1e-10, beam_splitter_unitarity),
];

const MODES: &[Check] = &[
    check(
        "modes.polynomial_identity",
        "H_mn(eta, eta*) = m! (-1)^m eta*^(n-m) L_m^(n-m)(|eta|^2)",
        1e-10,
        polynomial_identity,
    ),
    check("modes.radial_order", "LG radial equation, O(h^2) ratio within 4 +/- 0.5", 0.5, radial_order),
    check("modes.eta_overlap_oracle", "<eta|n,l> closed form vs Fock-space oracle, l >= 0", 1e-5, eta_overlap_oracle),
    check("modes.tau_overlap_oracle", "<tau|n,l> closed form vs Fock-space oracle", 1e-6, tau_overlap_oracle),
    check("modes.orthonormality", "LG orthonormality on the eta plane", 1e-6, orthonormality),
];

const WIGNER: &[Check] = &[
    check("wigner.oracle_equivalence", "LG Wigner closed form vs displaced parity", 1e-8, wigner_oracle),
    check("wigner.normalization", "integral of W over phase space = 1, n <= 3", 1e-5, wigner_normalization),
    check("wigner.marginal_overlap", "sigma marginal = |<tau=sigma|n,l>|^2 / pi", 1e-10, marginal_overlap),
    check("wigner.marginal_quadrature", "sigma marginal vs gamma-plane quadrature of W", 1e-5, marginal_quadrature),
    check("wigner.gamma_measure", "gamma-plane measure calibrated on the vacuum", 1e-10, gamma_measure),
    check("wigner.bound", "|W| <= 1/pi^2", 1e-12, wigner_bound),
];

const TRANSFORMS: &[Check] = &[
    check("transforms.frft_eigen", "FrFT eigenrelation F_alpha <tau|n,l> = e^(-i alpha n) <tau|n,l>", 1e-5, frft_eigen),
    check("transforms.frft_phase", "FrFT fitted eigenvalue phase = -alpha n", 1e-6, frft_phase),
    check("transforms.gwt_identity", "GWT of HG modes vs Laguerre form of <tau|n,l>", 1e-6, gwt_identity),
    check("transforms.schmidt_overlap", "<m,n|tau> vs pi (-1)^n GWT[h_m, h_n]", 1e-6, schmidt_overlap),
    check("transforms.gwt_conjugate_symmetry", "GWT[h_m, h_n] = conj GWT[h_n, h_m]", 1e-10, gwt_conjugate_symmetry),
];

fn suite_checks(suite: Suite) -> Vec<&'static Check> {
    match suite {
        Suite::Fock => FOCK.iter().collect(),
        Suite::Modes => MODES.iter().collect(),
        Suite::Wigner => WIGNER.iter().collect(),
        Suite::Transforms => TRANSFORMS.iter().collect(),
        Suite::All => FOCK.iter().chain(MODES).chain(WIGNER).chain(TRANSFORMS).collect(),
    }
}

/// Runs `suite` and reports each check on stderr as it finishes.
pub fn run_suite(suite: Suite, nmax: usize, tol: Option<f64>) -> VerifyReport {
    let cx = Ctx { nmax, tol };
    let mut checks = Vec::new();
    for ch in suite_checks(suite) {
        let start = Instant::now();
        let outcome = (ch.run)(&cx);
        let ms = start.elapsed().as_secs_f64() * 1e3;
        let residual = match &outcome {
            Ok(r) => *r,
            Err(e) => {
                eprintln!("{}: {e}", ch.id);
                f64::NAN
            }
        };
        let pass = residual.is_finite() && residual <= ch.tol;
        eprintln!(
            "{} {:<36} residual {} tol {}",
            if pass { "PASS" } else { "FAIL" },
            ch.id,
            fmt_num(residual),
            fmt_num(ch.tol)
        );
        checks.push(CheckRecord {
            id: ch.id,
            anchor: ch.anchor,
            residual: Num(residual),
            tol: Num(ch.tol),
            pass,
            ms: Num(ms),
        });
    }
    let pass = checks.iter().all(|c| c.pass);
    VerifyReport { suite: suite.name(), checks, pass }
}

pub fn run(g: &Globals, a: &VerifyArgs) -> CliResult<u8> {
    let report = run_suite(a.suite, g.nmax, g.tol);
    let dest = a.json_out.as_deref().or(g.out.as_deref());
    emit(dest, |w| write_json(&report, w))?;
    Ok(if report.pass { 0 } else { EXIT_CHECK_FAILED })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_are_unique_and_namespaced() {
        let all = suite_checks(Suite::All);
        let mut ids: Vec<_> = all.iter().map(|c| c.id).collect();
        ids.sort();
        ids.dedup();
        assert_eq!(ids.len(), all.len());
        for (suite, prefix) in [
            (Suite::Fock, "fock."),
            (Suite::Modes, "modes."),
            (Suite::Wigner, "wigner."),
            (Suite::Transforms, "transforms."),
        ] {
            assert!(suite_checks(suite).iter().all(|c| c.id.starts_with(prefix)));
        }
        assert!(suite_checks(Suite::Fock).len() >= 10);
    }

    #[test]
    fn nan_fails_the_fold() {
        assert!(max_of([0.1, f64::NAN, 0.2]).is_nan());
        assert_eq!(max_of([0.1, 0.3, 0.2]), 0.3);
    }
}
