// Copyright 2026 The lgkit Authors
// SPDX-License-Identifier: Apache-2.0

use std::f64::consts::PI;

use lgkit::fockspace::lg_state_ladder;
use lgkit::phasespace::{
    from_sigma_gamma, marginal_sigma_analytic, marginal_sigma_from_overlap, to_sigma_gamma, wigner_bruteforce,
    wigner_lg,
};
use lgkit::{BasisSpec, Complex64, ModeIndex, PhasePoint4};
use proptest::prelude::*;

fn mode() -> impl Strategy<Value = ModeIndex> {
    (0u32..=4)
        .prop_flat_map(|n| (Just(n), 0..=n))
        .prop_map(|(n, k)| ModeIndex::new(n, n as i32 - 2 * k as i32).unwrap())
}

fn point() -> impl Strategy<Value = PhasePoint4> {
    [-2.5f64..2.5, -2.5f64..2.5, -2.5f64..2.5, -2.5f64..2.5]
        .prop_map(|[a, b, c, d]| PhasePoint4::new(a, b, c, d).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn wigner_is_bounded(idx in mode(), pt in point()) {
        prop_assert!(wigner_lg(idx, pt).abs() <= 1.0 / (PI * PI) + 1e-14);
    }

    #[test]
    fn momentum_reflection_flips_l(idx in mode(), pt in point()) {
        let flipped = ModeIndex::new(idx.n(), -idx.l()).unwrap();
        let a = wigner_lg(idx, pt.reflect_momenta());
        let b = wigner_lg(flipped, pt);
        prop_assert!((a - b).abs() < 1e-12, "{a} vs {b}");
    }

    #[test]
    fn closed_form_matches_displaced_parity(idx in mode(), pt in point()) {
        let state = lg_state_ladder(idx, BasisSpec::new(48)).unwrap();
        let want = wigner_bruteforce(&state, pt).unwrap();
        prop_assert!((wigner_lg(idx, pt) - want).abs() < 1e-9);
    }

    #[test]
    fn sigma_gamma_round_trip(pt in point()) {
        let back = from_sigma_gamma(to_sigma_gamma(pt));
        prop_assert!((back.x1 - pt.x1).abs() < 1e-12 && (back.p1 - pt.p1).abs() < 1e-12);
        prop_assert!((back.x2 - pt.x2).abs() < 1e-12 && (back.p2 - pt.p2).abs() < 1e-12);
    }

    #[test]
    fn marginal_closed_form_matches_overlap(idx in mode(), re in -2.0f64..2.0, im in -2.0f64..2.0) {
        let s = Complex64::new(re, im);
        let a = marginal_sigma_analytic(idx, s);
        prop_assert!(a >= 0.0);
        prop_assert!((a - marginal_sigma_from_overlap(idx, s)).abs() < 1e-12);
    }
}
