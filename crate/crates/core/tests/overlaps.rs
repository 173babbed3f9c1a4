// Copyright 2026 The lgkit Authors
// SPDX-License-Identifier: Apache-2.0

use lgkit::fockspace::{build_eta_state, build_tau_state, lg_state_beamsplitter, lg_state_ladder};
use lgkit::modes::{lg_wavefunction_eta, tau_overlap_lg};
use lgkit::{BasisSpec, Complex64, EtaPoint, ModeIndex, TauPoint};

const POINTS: [(f64, f64); 5] = [(0.0, 0.0), (0.4, -0.3), (-0.9, 0.2), (0.1, 1.1), (-0.6, -0.7)];

#[test]
fn eta_overlap_matches_wavefunction() {
    let basis = BasisSpec::new(40);
    for (re, im) in POINTS {
        let eta = Complex64::new(re, im);
        let bra = build_eta_state(eta, basis).unwrap();
        for idx in ModeIndex::all_up_to(5).into_iter().filter(|i| i.l() >= 0) {
            let ket = lg_state_beamsplitter(idx, basis).unwrap();
            let want = lg_wavefunction_eta(idx, EtaPoint::new(eta));
            let got = bra.inner(&ket);
            assert!((got - want).norm() < 1e-10, "{idx:?} at {eta}: {got} vs {want}");
        }
    }
}

#[test]
fn negative_l_differs_by_sign_only() {
    let basis = BasisSpec::new(40);
    for (re, im) in POINTS {
        let eta = Complex64::new(re, im);
        let bra = build_eta_state(eta, basis).unwrap();
        for idx in ModeIndex::all_up_to(5).into_iter().filter(|i| i.l() < 0) {
            let sign = if idx.abs_l() % 2 == 0 { 1.0 } else { -1.0 };
            let got = bra.inner(&lg_state_ladder(idx, basis).unwrap());
            let want = sign * lg_wavefunction_eta(idx, EtaPoint::new(eta));
            assert!((got - want).norm() < 1e-10, "{idx:?} at {eta}");
        }
    }
}

#[test]
fn tau_overlap_matches_fock_inner_product() {
    let basis = BasisSpec::new(40);
    for (re, im) in POINTS {
        let tau = Complex64::new(re, im);
        let bra = build_tau_state(tau, basis).unwrap();
        for idx in ModeIndex::all_up_to(5) {
            let got = bra.inner(&lg_state_ladder(idx, basis).unwrap());
            let want = tau_overlap_lg(idx, TauPoint::new(tau));
            assert!((got - want).norm() < 1e-10, "{idx:?} at {tau}: {got} vs {want}");
        }
    }
}

#[test]
fn overlaps_are_orthonormal_over_the_plane() {
    use lgkit::modes::eta_overlap_integral;
    let modes = ModeIndex::all_up_to(3);
    for a in &modes {
        for b in &modes {
            let want = if a == b { 1.0 } else { 0.0 };
            let got = eta_overlap_integral(*a, *b);
            assert!((got - want).norm() < 1e-8, "{a:?} {b:?}: {got}");
        }
    }
}
