// Copyright 2026 The lgkit Authors
// SPDX-License-Identifier: Apache-2.0

use lgkit::modes::{lg_wavefunction_eta, tau_overlap_lg};
use lgkit::par::{self, Execution};
use lgkit::{EtaPoint, ModeIndex, TauPoint};

use super::Globals;
use crate::args::{ModeArgs, Plane};
use crate::error::CliResult;
use crate::grid;
use crate::output::Table;

pub fn run(g: &Globals, a: &ModeArgs) -> CliResult<()> {
    let idx = ModeIndex::new(a.mode.n, a.mode.l)?;
    let pts = grid::plane(a.grid);
    let vals = par::map_slice(Execution::default(), &pts, |&z| match a.plane {
        Plane::Eta => lg_wavefunction_eta(idx, EtaPoint::new(z)),
        Plane::Tau => tau_overlap_lg(idx, TauPoint::new(z)),
    });
    let mut t = Table::new(&["x", "y", "re", "im", "abs2"]);
    for (z, v) in pts.iter().zip(vals) {
        t.push(vec![z.re, z.im, v.re, v.im, v.norm_sqr()]);
    }
    t.write(g.format, g.out.as_deref())
}
