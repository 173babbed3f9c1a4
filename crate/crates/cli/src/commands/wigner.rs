// Copyright 2026 The lgkit Authors
// SPDX-License-Identifier: Apache-2.0

use lgkit::fockspace::lg_state_ladder;
use lgkit::par::{self, Execution};
use lgkit::phasespace::{wigner_lg, DisplacedParity};
use lgkit::{BasisSpec, ModeIndex, PhasePoint4};

use super::Globals;
use crate::args::{Axes, WignerArgs};
use crate::error::CliResult;
use crate::grid;
use crate::output::Table;

fn point(a: &WignerArgs, u: f64, v: f64) -> lgkit::Result<PhasePoint4> {
    let (mut x1, mut p1, mut x2, mut p2) = (a.x1, a.p1, a.x2, a.p2);
    match a.axes {
        Axes::X1p1 => (x1, p1) = (u, v),
        Axes::X2p2 => (x2, p2) = (u, v),
        Axes::X1x2 => (x1, x2) = (u, v),
        Axes::P1p2 => (p1, p2) = (u, v),
        Axes::X1p2 => (x1, p2) = (u, v),
        Axes::P1x2 => (p1, x2) = (u, v),
    }
    PhasePoint4::new(x1, p1, x2, p2)
}

pub fn run(g: &Globals, a: &WignerArgs) -> CliResult<()> {
    let idx = ModeIndex::new(a.mode.n, a.mode.l)?;
    let ab = grid::plane(a.grid);
    let pts = ab.iter().map(|z| point(a, z.re, z.im)).collect::<lgkit::Result<Vec<_>>>()?;
    let exec = Execution::default();
    let w = par::map_slice(exec, &pts, |&p| wigner_lg(idx, p));
    let t = if a.oracle {
        let state = lg_state_ladder(idx, BasisSpec::new(g.nmax))?;
        let brute = DisplacedParity::new(g.nmax).wigner_many(&state, &pts, exec)?;
        let mut t = Table::new(&["a", "b", "w", "w_bruteforce", "delta"]);
        for ((z, &w), b) in ab.iter().zip(&w).zip(brute) {
            t.push(vec![z.re, z.im, w, b, w - b]);
        }
        t
    } else {
        let mut t = Table::new(&["a", "b", "w"]);
        for (z, &w) in ab.iter().zip(&w) {
            t.push(vec![z.re, z.im, w]);
        }
        t
    };
    t.write(g.format, g.out.as_deref())
}
