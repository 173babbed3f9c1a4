// Copyright 2026 The lgkit Authors
// SPDX-License-Identifier: Apache-2.0

use lgkit::modes::tau_overlap_lg;
use lgkit::transforms::{frft, frft_quadrature_for, gwt, FrftOrder, SampledField};
use lgkit::{Complex64, LgError, ModeIndex, TauPoint};

// A superposition of different photon numbers is not an eigenfunction, but
// each component picks up its own phase.
#[test]
fn frft_acts_per_component() {
    let a = ModeIndex::new(0, 0).unwrap();
    let b = ModeIndex::new(3, 1).unwrap();
    let f = move |t: Complex64| {
        let p = TauPoint::new(t);
        tau_overlap_lg(a, p) + Complex64::new(0.0, 0.5) * tau_overlap_lg(b, p)
    };
    let field = SampledField::new(f, frft_quadrature_for(3)).unwrap();
    for alpha in [0.5, 1.2, -2.0] {
        let order = FrftOrder::new(alpha).unwrap();
        for tau in [Complex64::new(0.2, -0.5), Complex64::new(-1.1, 0.4)] {
            let p = TauPoint::new(tau);
            let want = tau_overlap_lg(a, p)
                + Complex64::new(0.0, 0.5) * Complex64::from_polar(1.0, -3.0 * alpha) * tau_overlap_lg(b, p);
            let got = frft(&field, order, tau).unwrap();
            assert!((got - want).norm() < 1e-8, "alpha {alpha} tau {tau}: {got} vs {want}");
        }
    }
}

#[test]
fn wide_fields_are_rejected() {
    let wide = |t: Complex64| (-0.01 * t.norm_sqr()).exp().into();
    match SampledField::new(wide, frft_quadrature_for(0)) {
        Err(LgError::FieldNotDecaying { ratio }) => assert!(ratio > 0.1),
        other => panic!("expected FieldNotDecaying, got {other:?}"),
    }
}

#[test]
fn gwt_vacuum_is_gaussian() {
    use std::f64::consts::PI;
    for (x, p) in [(0.0, 0.0), (0.7, -0.2), (-1.0, 1.3)] {
        let w = gwt(0, 0, x, p).unwrap();
        let want = (-(x * x) - p * p).exp() / PI;
        assert!((w.re - want).abs() < 1e-13 && w.im.abs() < 1e-13, "{w} vs {want}");
    }
}
