// Copyright 2026 The lgkit Authors
// SPDX-License-Identifier: Apache-2.0

use lgkit::par::{self, Execution};
use lgkit::phasespace::{
    default_marginal_quadrature, marginal_sigma_analytic, marginal_sigma_from_overlap, marginal_sigma_quadrature_with,
};
use lgkit::ModeIndex;

use super::Globals;
use crate::args::MarginalArgs;
use crate::error::CliResult;
use crate::grid;
use crate::output::Table;

pub fn run(g: &Globals, a: &MarginalArgs) -> CliResult<()> {
    let idx = ModeIndex::new(a.mode.n, a.mode.l)?;
    let pts = grid::plane(a.grid);
    let m: Vec<f64> = pts.iter().map(|&s| marginal_sigma_analytic(idx, s)).collect();
    let t = if a.oracle {
        let q = g.tune(default_marginal_quadrature(idx));
        // grid points in parallel, each γ-plane sum sequential
        let quad = par::map_slice(Execution::default(), &pts, |&s| {
            marginal_sigma_quadrature_with(idx, s, &q, Execution::Sequential)
        })
        .into_iter()
        .collect::<lgkit::Result<Vec<_>>>()?;
        let mut t = Table::new(&["x", "y", "marginal", "overlap", "quadrature", "delta"]);
        for ((s, &m), q) in pts.iter().zip(&m).zip(quad) {
            let o = marginal_sigma_from_overlap(idx, *s);
            t.push(vec![s.re, s.im, m, o, q, (m - o).abs().max((m - q).abs())]);
        }
        t
    } else {
        let mut t = Table::new(&["x", "y", "marginal"]);
        for (s, &m) in pts.iter().zip(&m) {
            t.push(vec![s.re, s.im, m]);
        }
        t
    };
    t.write(g.format, g.out.as_deref())
}
