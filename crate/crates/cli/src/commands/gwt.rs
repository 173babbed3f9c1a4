// Copyright 2026 The lgkit Authors
// SPDX-License-Identifier: Apache-2.0

use std::f64::consts::FRAC_1_SQRT_2;

use lgkit::transforms::{gwt, gwt_lg_identity_residual, gwt_sample_points};

use super::Globals;
use crate::args::GwtArgs;
use crate::error::CliResult;
use crate::output::{fmt_num, Table};

pub fn run(g: &Globals, a: &GwtArgs) -> CliResult<()> {
    let mut t = Table::new(&["tau1", "tau2", "re", "im", "residual"]);
    let mut worst = 0.0f64;
    for tau in gwt_sample_points() {
        let r = gwt_lg_identity_residual(a.m, a.n, tau)?;
        let w = gwt(a.m, a.n, tau.re * FRAC_1_SQRT_2, tau.im * FRAC_1_SQRT_2)?;
        worst = worst.max(r);
        t.push(vec![tau.re, tau.im, w.re, w.im, r]);
    }
    eprintln!("gwt ({}, {}): max residual {}", a.m, a.n, fmt_num(worst));
    t.write(g.format, g.out.as_deref())
}
