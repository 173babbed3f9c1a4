// Copyright 2026 The lgkit Authors
// SPDX-License-Identifier: Apache-2.0

use lgkit::modes::tau_overlap_lg;
use lgkit::par::Execution;
use lgkit::transforms::{eigen_sample_points, frft_eigen_fit_on, frft_quadrature_for};
use lgkit::{FrftOrder, ModeIndex, TauPoint};

use super::Globals;
use crate::args::FrftArgs;
use crate::error::CliResult;
use crate::output::{fmt_num, Table};

pub fn run(g: &Globals, a: &FrftArgs) -> CliResult<()> {
    let idx = ModeIndex::new(a.mode.n, a.mode.l)?;
    let order = FrftOrder::new(a.alpha)?;
    let fit = frft_eigen_fit_on(
        |t| tau_overlap_lg(idx, TauPoint::new(t)),
        idx.n(),
        order,
        &eigen_sample_points(),
        g.tune(frft_quadrature_for(idx.n())),
        Execution::default(),
    )?;
    let mut t = Table::new(&["tau1", "tau2", "re", "im", "residual", "fitted_phase", "expected_phase"]);
    for ((p, v), r) in fit.points.iter().zip(&fit.transformed).zip(&fit.residuals) {
        t.push(vec![p.re, p.im, v.re, v.im, *r, fit.fitted_phase, fit.expected_phase]);
    }
    eprintln!(
        "frft {idx} alpha={}: max residual {}, fitted phase {}, expected {}",
        fmt_num(order.alpha()),
        fmt_num(fit.max_residual()),
        fmt_num(fit.fitted_phase),
        fmt_num(fit.expected_phase)
    );
    t.write(g.format, g.out.as_deref())
}
